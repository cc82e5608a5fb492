"""Command-line front end.

Exit codes: 0 success, 1 certified exclusion or failed verification,
2 bad input, 3 exhausted budget or cap. Errors print one JSON object on
stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import braid, cone, formats, gcm, navigate, roots
from .errors import InputError, KMError, PrecisionExhausted
from .exact import fmt_rational
from .formats import dumps, gauss_to_json, margin_to_json


def _load_gcm(args) -> gcm.GCM:
    return formats.gcm_from_json(formats.read_json(args.quiver))


def _load_charge(args) -> cone.CentralCharge:
    return formats.charge_from_json(formats.read_json(args.charge))


def _phase(x: Optional[float]) -> Optional[float]:
    return None if x is None else round(x, 12)


def cmd_classify(args):
    A = _load_gcm(args)
    ct = gcm.classify(A)
    out = {"tag": ct.tag.value, "witness": list(ct.witness), "Au": list(ct.au), "matrix": [list(r) for r in A.a]}
    text = f"{ct.tag.value}, witness {list(ct.witness)} (Au = {list(ct.au)})"
    return out, text, 0


def cmd_roots(args):
    A = _load_gcm(args)
    rows = roots.enumerate_roots(A, args.height)
    if args.real:
        rows = [r for r in rows if r[1].tag.is_real]
    elif args.imaginary:
        rows = [r for r in rows if r[1].tag.is_imaginary]
    out = {
        "height": args.height,
        "roots": [
            {"root": list(v), "height": sum(v), "norm": roots.pair(A, v, v), **rc.to_json()}
            for v, rc in rows
        ],
    }
    lines = [f"{'root':<24} {'ht':>3} {'(a,a)':>6}  class"]
    for v, rc in rows:
        lines.append(f"{str(list(v)):<24} {sum(v):>3} {roots.pair(A, v, v):>6}  {rc.tag.value} {list(rc.witness)}")
    lines.append(f"{len(rows)} roots of height <= {args.height}")
    return out, "\n".join(lines), 0


def cmd_cone(args):
    A = _load_gcm(args)
    C = cone.imaginary_generators(A, args.height)
    out = {"height": args.height, "generators": [list(g) for g in C.generators]}
    text = "\n".join(str(list(g)) for g in C.generators) or "(no imaginary roots)"
    return out, text + f"\n{len(C.generators)} rays at height <= {args.height}", 0


def _verdict_json(v: cone.Verdict) -> dict:
    d = {"status": v.status.value, "height": v.height, "margin2": margin_to_json(v.margin2)}
    if v.witness is not None:
        d["witness"] = list(v.witness)
    return d


def cmd_check(args):
    A = _load_gcm(args)
    Z = _load_charge(args)
    C = cone.imaginary_generators(A, args.height)
    vx = cone.membership_X(A, Z, args.height)
    vreg = cone.membership_Xreg(A, Z, args.height)
    rep = cone.sector(Z, C)
    sec = {"status": rep.status.value}
    if rep.status is cone.SectorStatus.SECTOR:
        pc = cone._center(rep)
        sec.update(
            d_min=gauss_to_json(rep.d_min),
            d_max=gauss_to_json(rep.d_max),
            phi1=_phase(rep.phi1),
            phi2=_phase(rep.phi2),
            phi_I=_phase(pc.phi),
            phi_I_is_half=pc.is_half,
        )
        try:
            rot, Zn = cone.normalize(Z, C, args.precision)
            sec["normalized"] = {"rotation": gauss_to_json(rot), "charge": formats.charge_to_json(Zn)}
        except PrecisionExhausted as exc:
            sec["normalized"] = {"error": str(exc)}
    out = {"X": _verdict_json(vx), "X_reg": _verdict_json(vreg), "sector": sec}
    lines = [
        f"X:     {vx.status.value}" + (f" witness {list(vx.witness)}" if vx.witness else ""),
        f"X_reg: {vreg.status.value}" + (f" witness {list(vreg.witness)}" if vreg.witness else ""),
        f"sector: {rep.status.value}",
    ]
    if "phi_I" in sec:
        lines.append(f"phi1 ~ {sec['phi1']:.6f}, phi2 ~ {sec['phi2']:.6f}, phi^I ~ {sec['phi_I']:.6f}")
    lines.append(f"margin^2 = {margin_to_json(vreg.margin2)}")
    code = 0 if vx.inside and vreg.inside else 1
    return out, "\n".join(lines), code


def cmd_margin(args):
    A = _load_gcm(args)
    Z = _load_charge(args)
    m = cone.support_margin(A, Z, args.height)
    return {"height": args.height, "margin2": margin_to_json(m)}, f"margin^2 = {margin_to_json(m)}", 0


def cmd_locate(args):
    A = _load_gcm(args)
    Z = _load_charge(args)
    word, landed = navigate.locate(A, Z, args.height, args.cap)
    out = {"word": list(word), "charge": formats.charge_to_json(landed)}
    text = f"word {list(word)}\nlanded at " + ", ".join(str(z) for z in landed.z)
    return out, text, 0


def cmd_cross(args):
    A = _load_gcm(args)
    p = formats.path_from_json(formats.read_json(args.path))
    word, report = navigate.cross_path(A, p, args.height, cap=args.cap)
    out = report.to_json()
    lines = [f"braid word: {word}", "K-matrix:"]
    lines += ["  " + " ".join(f"{x:>4}" for x in row) for row in report.kmatrix]
    for c in report.crossings:
        lines.append(f"  segment {c.segment} t={fmt_rational(c.t)} wall W_{c.i},{c.side}")
    lines.append(f"verified: {report.verified}")
    return out, "\n".join(lines), 0 if report.verified else 1


def cmd_loop(args):
    A = _load_gcm(args)
    p = formats.path_from_json(formats.read_json(args.path))
    s = navigate.loop_shift(A, p, cone.imaginary_generators(A, args.height))
    return {"shift": s}, f"shift [{s}]", 0


def _parse_word(text: str) -> braid.BraidWord:
    if text.endswith(".json") or os.path.isfile(text):
        return formats.braid_from_json(formats.read_json(text))
    return braid.BraidWord.parse(text)


def cmd_twist(args):
    A = _load_gcm(args)
    b = _parse_word(args.word)
    m, shift = braid.braid_to_kmatrix(A, b)
    out = {"kmatrix": [list(r) for r in m], "shift": shift, "word": b.to_json()}
    text = f"{b}\n" + "\n".join(" ".join(f"{x:>4}" for x in row) for row in m) + f"\nshift {shift}"
    return out, text, 0


def cmd_simplify(args):
    A = _load_gcm(args)
    b = _parse_word(args.word)
    s = braid.simplify(A, b)
    return s.to_json(), str(s), 0


def cmd_relations(args):
    A = _load_gcm(args)
    checks = braid.check_braid_relations(A)
    table = braid.relation_table(checks)
    text = "\n".join(
        f"({c.i},{c.j}) a_ij={c.a_ij:>3} {c.kind:<8} {'ok' if c.holds else 'FAIL'}" for c in checks
    ) or "(rank 1: no pairs)"
    return {"relations": table}, text, 0 if all(c.holds for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kmchamber", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-q", "--quiver", required=True, help="quiver or GCM JSON file")
    common.add_argument("--height", type=int, default=12)
    common.add_argument("--cap", type=int, default=navigate.DEFAULT_CAP)
    common.add_argument("--precision", type=int, default=10**12)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common]).set_defaults(func=cmd_classify)
    r = sub.add_parser("roots", parents=[common])
    g = r.add_mutually_exclusive_group()
    g.add_argument("--real", action="store_true")
    g.add_argument("--imaginary", action="store_true")
    r.set_defaults(func=cmd_roots)
    sub.add_parser("cone", parents=[common]).set_defaults(func=cmd_cone)
    for name, func in (("check", cmd_check), ("locate", cmd_locate), ("margin", cmd_margin)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("-z", "--charge", required=True)
        s.set_defaults(func=func)
    for name, func in (("cross", cmd_cross), ("loop", cmd_loop)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("-p", "--path", required=True)
        s.set_defaults(func=func)
    for name, func in (("twist", cmd_twist), ("simplify", cmd_simplify)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("--word", required=True, help='shorthand "1,-2,3" or a BraidWord JSON file')
        s.set_defaults(func=func)
    sub.add_parser("relations", parents=[common]).set_defaults(func=cmd_relations)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, text, code = args.func(args)
    except KMError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return exc.exit_code
    except (ValueError, TypeError) as exc:
        err = InputError(str(exc))
        print(json.dumps({"error": "InputError", "message": str(err)}), file=sys.stderr)
        return err.exit_code
    print(dumps(out) if args.json else text)
    return code


if __name__ == "__main__":
    sys.exit(main())
