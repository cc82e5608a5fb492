"""Weyl-group navigation of central charges and wall crossing along paths.

The Weyl group acts on charges contragrediently:
``(r_i Z)(alpha_j) = Z(alpha_j) - a_ij Z(alpha_i)``. The base chamber is
the set of charges whose simple values all lie in
``H = {Im z > 0} u R_{<0}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import List, Optional, Sequence, Tuple

from .braid import BraidWord, braid_to_kmatrix
from .cone import (
    CentralCharge,
    ConeApprox,
    SectorStatus,
    Status,
    Verdict,
    imaginary_generators,
    membership_Xreg,
    real_eval,
    sector,
)
from .errors import (
    CapExceeded,
    IndexOutOfRange,
    InputError,
    InvariantViolation,
    MultipleWalls,
    NotASector,
    NotClosed,
    NotFiniteType,
    NotRegular,
    PathTooDegenerate,
    PreconditionFailed,
)
from .exact import Gauss, IntMatrix, cross, dot, in_closed_upper
from .gcm import GCM, Tag, classify, decompose, inertia
from .roots import DEFAULT_MAX_CANDIDATES, WeylWord, is_positive, reflect, simple_root

DEFAULT_CAP = 10_000


def _check_letters(A: GCM, w: Sequence[int]) -> None:
    for i in w:
        if not 1 <= i <= A.n:
            raise IndexOutOfRange(f"generator {i} outside 1..{A.n}")


def _coact_values(A: GCM, w: Sequence[int], values: Sequence) -> list:
    vals = list(values)
    for i in reversed(w):
        row = A.a[i - 1]
        zi = vals[i - 1]
        vals = [v - row[j] * zi for j, v in enumerate(vals)]
    return vals


def coaction(A: GCM, w: Sequence[int], Z: CentralCharge) -> CentralCharge:
    _check_letters(A, w)
    if Z.n != A.n:
        raise InputError(f"charge of rank {Z.n} for matrix of rank {A.n}")
    return CentralCharge(_coact_values(A, w, Z.z))


def real_coaction(A: GCM, w: Sequence[int], zr: Sequence) -> Tuple[Q, ...]:
    _check_letters(A, w)
    return tuple(_coact_values(A, w, [Q(x) for x in zr]))


# --- real functionals -----------------------------------------------------------

def in_tits_cone(
    A: GCM, zr: Sequence, H: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> Verdict:
    if classify(A).tag is Tag.FINITE:
        return Verdict(Status.IN, H)
    if all(Q(x) == 0 for x in zr):
        return Verdict(Status.IN, H)
    C = imaginary_generators(A, H, max_candidates)
    for g in C.generators:
        if real_eval(zr, g) <= 0:
            return Verdict(Status.OUT_CERTIFIED, H, witness=g)
    return Verdict(Status.IN_AT_HEIGHT, H)


def _dominant(A: GCM, zr: Sequence, cap: int) -> Tuple[WeylWord, list]:
    vals = list(zr)
    applied: List[int] = []
    while True:
        i = next((k for k, x in enumerate(vals) if x < 0), None)
        if i is None:
            return tuple(reversed(applied)), vals
        if len(applied) >= cap:
            raise CapExceeded(f"no dominant chamber within {cap} reflections")
        vals = _coact_values(A, (i + 1,), vals)
        applied.append(i + 1)


def dominant_word(A: GCM, zr: Sequence, cap: int = DEFAULT_CAP) -> WeylWord:
    """Word ``w`` with ``(w zr)(alpha_i) >= 0`` for all i, by greedy descent."""
    if all(Q(x) == 0 for x in zr):
        raise InputError("dominant_word needs a nonzero functional")
    return _dominant(A, [Q(x) for x in zr], cap)[0]


def finite_positive_roots(A: GCM) -> List[Tuple[int, ...]]:
    """All positive roots of a finite-type matrix (blocks allowed), by orbit closure."""
    if inertia(A.a)[0] != A.n:
        raise NotFiniteType("matrix is not positive definite")
    found = {simple_root(A.n, i) for i in range(1, A.n + 1)}
    todo = list(found)
    while todo:
        v = todo.pop()
        for i in range(1, A.n + 1):
            u = reflect(A, i, v)
            if is_positive(u) and u not in found:
                found.add(u)
                todo.append(u)
    return sorted(found, key=lambda v: (sum(v), tuple(-x for x in v)))


def negative_chamber_word_finite(A: GCM, zr: Sequence) -> WeylWord:
    zr = [Q(x) for x in zr]
    roots = finite_positive_roots(A)
    for v in roots:
        if real_eval(zr, v) == 0:
            raise NotRegular(f"functional vanishes on the root {v}")
    vals = zr
    applied: List[int] = []
    # each step crosses one wall; a finite Weyl group bounds the walk by |roots|
    while True:
        i = next((k for k, x in enumerate(vals) if x > 0), None)
        if i is None:
            return tuple(reversed(applied))
        if len(applied) > len(roots):
            raise InvariantViolation("ascent did not terminate within the number of roots")
        vals = _coact_values(A, (i + 1,), vals)
        applied.append(i + 1)


# --- complex charges ----------------------------------------------------------------

def in_base_chamber(Z: CentralCharge) -> bool:
    return all(in_closed_upper(z) for z in Z.z)


def in_open_chamber(Z: CentralCharge) -> bool:
    return all(z.im > 0 for z in Z.z)


def _check_cone_positive(Z: CentralCharge, C: ConeApprox) -> None:
    for g in C.generators:
        if Z(g).im <= 0:
            raise PreconditionFailed(f"Im Z is not positive on the imaginary root {g}")


def locate(
    A: GCM,
    Z: CentralCharge,
    H: int = 12,
    cap: int = DEFAULT_CAP,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> Tuple[WeylWord, CentralCharge]:
    """Weyl word moving ``Z`` into the base chamber, and the landed charge."""
    if classify(A).tag is Tag.FINITE:
        raise PreconditionFailed("locate needs affine or indefinite type")
    verdict = membership_Xreg(A, Z, H, max_candidates)
    if not verdict.inside:
        raise PreconditionFailed(f"charge is not in X_reg (witness {verdict.witness})")
    _check_cone_positive(Z, imaginary_generators(A, H, max_candidates))

    w_im, _ = _dominant(A, list(Z.imag), cap)
    Zp = coaction(A, w_im, Z)
    J = [j + 1 for j, z in enumerate(Zp.z) if z.im == 0]
    word: Tuple[int, ...] = ()
    if J:
        AJ = A.sub(J)
        for block in decompose(AJ):
            idx = [J[k - 1] for k in block]
            sub = A.sub(idx)
            if inertia(sub.a)[0] != sub.n:
                raise InvariantViolation(f"real block {idx} is not of finite type")
            local = negative_chamber_word_finite(sub, [Zp.z[i - 1].re for i in idx])
            word += tuple(idx[k - 1] for k in local)
    word += w_im
    landed = coaction(A, word, Z)
    if not in_base_chamber(landed):
        raise InvariantViolation(f"landed charge {landed} is not in the base chamber")
    return word, landed


def wall_of(A: GCM, Z: CentralCharge) -> Optional[Tuple[int, str]]:
    if Z.n != A.n:
        raise InputError(f"charge of rank {Z.n} for matrix of rank {A.n}")
    real = [i for i, z in enumerate(Z.z) if z.im == 0]
    if len(real) >= 2:
        raise MultipleWalls(f"simple values {[i + 1 for i in real]} are all real")
    if not real:
        return None
    (i,) = real
    if any(z.im <= 0 for k, z in enumerate(Z.z) if k != i):
        return None
    re = Z.z[i].re
    if re == 0:
        raise PreconditionFailed(f"Z vanishes on the simple root {i + 1}")
    return i + 1, "+" if re > 0 else "-"


# --- paths ------------------------------------------------------------------------

@dataclass(frozen=True)
class ChargePath:
    waypoints: Tuple[CentralCharge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "waypoints", tuple(self.waypoints))
        if len(self.waypoints) < 2:
            raise InputError("a path needs at least two waypoints")
        if len({Z.n for Z in self.waypoints}) != 1:
            raise InputError("waypoints have different ranks")

    @property
    def closed(self) -> bool:
        return self.waypoints[0].z == self.waypoints[-1].z

    def reversed(self) -> "ChargePath":
        return ChargePath(tuple(reversed(self.waypoints)))


@dataclass(frozen=True)
class Crossing:
    segment: int
    t: Q
    i: int
    side: str

    def to_json(self) -> dict:
        return {"segment": self.segment, "t": str(self.t), "i": self.i, "side": self.side}


@dataclass(frozen=True)
class CrossReport:
    word: BraidWord
    kmatrix: IntMatrix
    transform: WeylWord  # w with w * (final waypoint) in the base chamber
    landed: CentralCharge
    verified: bool
    crossings: Tuple[Crossing, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "word": [[i, e] for i, e in self.word.letters],
            "kmatrix": [list(r) for r in self.kmatrix],
            "verified": self.verified,
            "crossings": [c.to_json() for c in self.crossings],
        }


def _next_crossing(a: Sequence[Gauss], b: Sequence[Gauss], t_cur: Q):
    """Earliest parameter after ``t_cur`` where a simple value leaves the upper half plane."""
    hits = []
    for i, (za, zb) in enumerate(zip(a, b)):
        slope = zb.im - za.im
        if slope == 0:
            if za.im == 0:
                raise PathTooDegenerate(f"segment runs along the wall of simple root {i + 1}")
            continue
        if slope > 0:
            continue
        t = za.im / (za.im - zb.im)
        if t < t_cur:
            raise InvariantViolation("transformed path was already outside the base chamber")
        if t <= 1:
            hits.append((t, i))
    if not hits:
        return None
    t_min = min(t for t, _ in hits)
    idx = [i for t, i in hits if t == t_min]
    if t_min == t_cur or t_min == 1:
        raise PathTooDegenerate(f"wall crossing at a waypoint (t={t_min})")
    if len(idx) > 1:
        raise PathTooDegenerate(f"simultaneous crossings of walls {[i + 1 for i in idx]}")
    return t_min, idx[0]


def cross_path(
    A: GCM,
    p: ChargePath,
    H: int = 12,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    cap: int = DEFAULT_CAP,
) -> Tuple[BraidWord, CrossReport]:
    """Braid word recording the walls crossed by a piecewise-linear path.

    Each crossing of ``W_{i,+}`` appends ``s_i`` and each crossing of
    ``W_{i,-}`` appends ``s_i^-1``; the running transform then reflects the
    path back into the base chamber.
    """
    if not in_open_chamber(p.waypoints[0]):
        raise PreconditionFailed("first waypoint is not in the open base chamber")
    C = imaginary_generators(A, H, max_candidates)
    for k, Z in enumerate(p.waypoints):
        if Z.n != A.n:
            raise InputError(f"waypoint {k} has rank {Z.n}, matrix has rank {A.n}")
        v = membership_Xreg(A, Z, H, max_candidates)
        if not v.inside:
            raise PreconditionFailed(f"waypoint {k} is not in X_reg (witness {v.witness})")
        _check_cone_positive(Z, C)

    g: Tuple[int, ...] = ()
    letters = []
    crossings = []
    for seg, (P, R) in enumerate(zip(p.waypoints, p.waypoints[1:])):
        t_cur = Q(0)
        while True:
            a = _coact_values(A, g, P.z)
            b = _coact_values(A, g, R.z)
            hit = _next_crossing(a, b, t_cur)
            if hit is None:
                break
            if len(letters) >= cap:
                raise CapExceeded(f"more than {cap} wall crossings")
            t, i = hit
            value = a[i] + (b[i] - a[i]) * t
            if value.re == 0:
                raise PreconditionFailed(f"path meets Z(alpha) = 0 on segment {seg} at t={t}")
            side = "+" if value.re > 0 else "-"
            letters.append((i + 1, 1 if side == "+" else -1))
            crossings.append(Crossing(seg, t, i + 1, side))
            g = (i + 1,) + g
            t_cur = t
    word = BraidWord(tuple(letters))
    kmatrix, _ = braid_to_kmatrix(A, word)
    landed = coaction(A, g, p.waypoints[-1])
    report = CrossReport(word, kmatrix, g, landed, in_base_chamber(landed), tuple(crossings))
    return word, report


def _winding(points: Sequence[Gauss]) -> Optional[int]:
    """Winding number of a closed polygon around 0; ``None`` if it passes through 0."""
    w = 0
    for a, b in zip(points, points[1:]):
        c = cross(a, b)
        if a.is_zero() or (c == 0 and dot(a, b) <= 0):
            return None
        if a.im <= 0 < b.im and c > 0:
            w += 1
        elif b.im <= 0 < a.im and c < 0:
            w -= 1
    return w


def loop_shift(A: GCM, p: ChargePath, C: ConeApprox) -> int:
    """Shift degree (twice the winding of the cone phase) of a closed path."""
    if not p.closed:
        raise NotClosed("first and last waypoints differ")
    for k, Z in enumerate(p.waypoints):
        rep = sector(Z, C)
        if rep.status is not SectorStatus.SECTOR:
            raise NotASector(f"waypoint {k}: sector status {rep.status.value}")
    # every generator image stays inside the sector, so each winds like the bisector
    windings = set()
    for g in C.generators:
        w = _winding([Z(g) for Z in p.waypoints])
        if w is None:
            raise NotASector(f"Z(t) vanishes on {g} along the path")
        windings.add(w)
    if len(windings) != 1:
        raise NotASector("generator images wind differently; the path leaves X")
    return 2 * windings.pop()
