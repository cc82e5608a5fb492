"""JSON readers and writers for quivers, charges, paths and braid words."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .braid import BraidWord
from .cone import CentralCharge
from .errors import InputError
from .exact import Gauss, fmt_rational, parse_rational
from .gcm import GCM, Quiver, gcm_from_quiver
from .navigate import ChargePath


def read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from exc


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{what} must be an integer, got {x!r}")
    return x


def gcm_from_json(obj: Any) -> GCM:
    if not isinstance(obj, dict):
        raise InputError("quiver file must hold a JSON object")
    has_arrows, has_gcm = "arrows" in obj, "gcm" in obj
    if has_arrows == has_gcm:
        raise InputError('exactly one of "arrows" and "gcm" must be present')
    if has_gcm:
        rows = obj["gcm"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise InputError('"gcm" must be a list of rows')
        return GCM(tuple(tuple(_int(x, "matrix entry") for x in r) for r in rows))
    if "vertices" not in obj:
        raise InputError('"vertices" is required with "arrows"')
    n = _int(obj["vertices"], "vertices")
    arrows = []
    for arr in obj["arrows"]:
        if not isinstance(arr, list) or len(arr) != 2:
            raise InputError(f"arrow {arr!r} is not a pair")
        arrows.append((_int(arr[0], "arrow end"), _int(arr[1], "arrow end")))
    return gcm_from_quiver(Quiver(n, tuple(arrows)))


def quiver_to_json(q: Quiver) -> dict:
    return {"vertices": q.n, "arrows": [[s, t] for s, t in q.arrows]}


def _gauss(entry) -> Gauss:
    if isinstance(entry, list):
        if len(entry) != 2:
            raise InputError(f"charge entry {entry!r} is not [real, imaginary]")
        return Gauss(parse_rational(entry[0]), parse_rational(entry[1]))
    return Gauss(parse_rational(entry))


def charge_from_json(obj: Any) -> CentralCharge:
    if isinstance(obj, dict):
        if "z" not in obj:
            raise InputError('charge object needs a "z" field')
        obj = obj["z"]
    if not isinstance(obj, list) or not obj:
        raise InputError("charge must be a nonempty list of [real, imaginary] pairs")
    return CentralCharge(_gauss(e) for e in obj)


def charge_to_json(Z: CentralCharge) -> dict:
    return {"z": [gauss_to_json(z) for z in Z.z]}


def gauss_to_json(z: Gauss) -> list:
    return [fmt_rational(z.re), fmt_rational(z.im)]


def path_from_json(obj: Any) -> ChargePath:
    if not isinstance(obj, dict) or "waypoints" not in obj:
        raise InputError('path file needs a "waypoints" list')
    return ChargePath(tuple(charge_from_json(c) for c in obj["waypoints"]))


def path_to_json(p: ChargePath) -> dict:
    return {"waypoints": [charge_to_json(Z) for Z in p.waypoints]}


def braid_from_json(obj: Any) -> BraidWord:
    if not isinstance(obj, dict) or "letters" not in obj:
        raise InputError('braid word needs a "letters" list')
    letters = []
    for item in obj["letters"]:
        if not isinstance(item, list) or len(item) != 2:
            raise InputError(f"braid letter {item!r} is not [i, e]")
        letters.append((_int(item[0], "generator"), _int(item[1], "exponent")))
    return BraidWord(tuple(letters), _int(obj.get("shift", 0), "shift"))


def margin_to_json(m) -> str:
    return "inf" if m == float("inf") else fmt_rational(m)


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, so output is byte-stable."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "))
