"""Central charges against the imaginary cone.

The imaginary cone is approximated from inside by the rays of indivisible
positive imaginary roots up to a height bound. Exclusion verdicts are
therefore unconditional, while inclusion verdicts hold "at height H" only.
Every branch is decided by exact sign tests; floats appear only in the
phase values reported for humans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction as Q
from math import isqrt
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import DimensionMismatch, NotASector, PrecisionExhausted
from .exact import Gauss, cross, dot
from .gcm import GCM, Tag, classify
from .roots import (
    DEFAULT_MAX_CANDIDATES,
    RootTag,
    RootVector,
    enumerate_roots,
    is_indivisible,
)

INF = math.inf
Margin = Union[Q, float]


@dataclass(frozen=True)
class CentralCharge:
    """``z[i]`` is the value on the i-th simple root; extended linearly."""

    z: Tuple[Gauss, ...]

    def __init__(self, z: Iterable) -> None:
        object.__setattr__(self, "z", tuple(Gauss.coerce(x) for x in z))

    @property
    def n(self) -> int:
        return len(self.z)

    def __call__(self, v: Sequence[int]) -> Gauss:
        if len(v) != len(self.z):
            raise DimensionMismatch(f"vector of length {len(v)} for charge of rank {len(self.z)}")
        re = sum((c * x.re for c, x in zip(v, self.z) if c), Q(0))
        im = sum((c * x.im for c, x in zip(v, self.z) if c), Q(0))
        return Gauss(re, im)

    @property
    def real(self) -> Tuple[Q, ...]:
        return tuple(x.re for x in self.z)

    @property
    def imag(self) -> Tuple[Q, ...]:
        return tuple(x.im for x in self.z)

    def scaled(self, u) -> "CentralCharge":
        u = Gauss.coerce(u)
        return CentralCharge(u * x for x in self.z)

    def __repr__(self) -> str:
        return "CentralCharge(" + ", ".join(str(x) for x in self.z) + ")"


def real_eval(zr: Sequence, v: Sequence[int]) -> Q:
    return sum((Q(c) * x for c, x in zip(v, zr) if c), Q(0))


@dataclass(frozen=True)
class ConeApprox:
    gcm: GCM
    height: int
    generators: Tuple[RootVector, ...]


class SectorStatus(str, Enum):
    EMPTY_CONE = "EmptyCone"
    HITS_ZERO = "HitsZero"
    CONTAINS_ZERO = "ContainsZero"
    SECTOR = "Sector"


@dataclass(frozen=True)
class SectorReport:
    status: SectorStatus
    d_min: Optional[Gauss] = None
    d_max: Optional[Gauss] = None
    phi1: Optional[float] = None
    phi2: Optional[float] = None
    # root (HitsZero) or primitive cone vector (ContainsZero) killed by Z
    witness: Optional[RootVector] = None

    def width_below_pi(self) -> bool:
        """Exact check that the arc from ``d_min`` ccw to ``d_max`` is narrower than pi."""
        return _ccw_or_same(self.d_min, self.d_max)


@dataclass(frozen=True)
class PhaseCenter:
    square: Gauss  # positive multiple of the squared bisector, d_min * d_max
    re_sign: int  # exact signs of the bisector's components
    im_sign: int
    phi: float  # float approximation of the phase, in units of pi
    is_half: bool  # exact test for phase 1/2


class Status(str, Enum):
    IN = "In"
    IN_AT_HEIGHT = "InAtHeight"
    OUT_CERTIFIED = "OutCertified"


@dataclass(frozen=True)
class Verdict:
    status: Status
    height: int
    margin2: Margin = INF
    witness: Optional[RootVector] = None

    @property
    def inside(self) -> bool:
        return self.status is not Status.OUT_CERTIFIED


# --- generators ---------------------------------------------------------------

def imaginary_generators(
    A: GCM, H: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> ConeApprox:
    if classify(A).tag is Tag.FINITE:
        return ConeApprox(A, H, ())
    gens = tuple(
        v
        for v, rc in enumerate_roots(A, H, max_candidates)
        if rc.tag is RootTag.IMAGINARY_POSITIVE and is_indivisible(v)
    )
    return ConeApprox(A, H, gens)


# --- exact planar predicates -----------------------------------------------------

def _ccw_or_same(a: Gauss, b: Gauss) -> bool:
    """Angle from ``a`` counterclockwise to ``b`` lies in [0, pi)."""
    c = cross(a, b)
    return c > 0 or (c == 0 and dot(a, b) > 0)


def _arg(z: Gauss, around_positive: bool) -> float:
    t = math.atan2(float(z.im), float(z.re)) / math.pi
    if not around_positive and t <= 0:
        t += 2
    return t


def sector(Z: CentralCharge, C: ConeApprox) -> SectorReport:
    if not C.generators:
        return SectorReport(SectorStatus.EMPTY_CONE)
    images = []
    for g in C.generators:
        w = Z(g)
        if w.is_zero():
            return SectorReport(SectorStatus.HITS_ZERO, witness=g)
        images.append((g, w))
    lo = hi = images[0]
    for item in images[1:]:
        q = item[1]
        if _ccw_or_same(lo[1], q) and _ccw_or_same(q, hi[1]):
            continue
        if _ccw_or_same(q, hi[1]):
            lo = item
        elif _ccw_or_same(lo[1], q):
            hi = item
        else:
            return SectorReport(SectorStatus.CONTAINS_ZERO, witness=_hull_witness(Z, lo, hi, item))
    d_min, d_max = lo[1], hi[1]
    one = Gauss(1)
    around_positive = _ccw_or_same(d_min, one) and _ccw_or_same(one, d_max)
    phi1 = _arg(d_min, around_positive)
    width = math.atan2(float(cross(d_min, d_max)), float(dot(d_min, d_max))) / math.pi
    return SectorReport(SectorStatus.SECTOR, d_min, d_max, phi1, phi1 + width)


def _hull_witness(Z, lo, hi, q) -> RootVector:
    """Nonnegative combination of three generators whose image is exactly zero."""
    (g1, a), (g2, b), (g3, c) = lo, hi, q
    coeffs = [cross(b, c), cross(c, a), cross(a, b)]
    if all(x == 0 for x in coeffs):
        # a and b share a direction and c points the opposite way
        coeffs = [-dot(a, c) / a.abs2(), Q(0), Q(1)]
    vec = [sum(k * g[i] for k, g in zip(coeffs, (g1, g2, g3))) for i in range(len(g1))]
    den = 1
    for x in vec:
        den = math.lcm(den, Q(x).denominator)
    ints = [int(Q(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    w = tuple(x // g for x in ints)
    assert Z(w).is_zero() and all(x >= 0 for x in w)
    return w


def _sign_of_sum(x: Q, a: Q, y: Q, b: Q) -> int:
    """Sign of ``x / sqrt(a) + y / sqrt(b)`` for positive ``a``, ``b``."""
    sx = (x > 0) - (x < 0)
    sy = (y > 0) - (y < 0)
    if sx == 0 or sy == 0 or sx == sy:
        return sx or sy
    lhs, rhs = x * x * b, y * y * a
    if lhs == rhs:
        return 0
    return sx if lhs > rhs else sy


def phase_center(Z: CentralCharge, C: ConeApprox) -> PhaseCenter:
    rep = sector(Z, C)
    if rep.status is not SectorStatus.SECTOR:
        raise NotASector(f"sector status is {rep.status.value}")
    return _center(rep)


def _center(rep: SectorReport) -> PhaseCenter:
    lo, hi = rep.d_min, rep.d_max
    a, b = lo.abs2(), hi.abs2()
    re_sign = _sign_of_sum(lo.re, a, hi.re, b)
    im_sign = _sign_of_sum(lo.im, a, hi.im, b)
    return PhaseCenter(
        square=lo * hi,
        re_sign=re_sign,
        im_sign=im_sign,
        phi=(rep.phi1 + rep.phi2) / 2,
        is_half=(re_sign == 0 and im_sign > 0),
    )


def unit_point(angle: float, prec: int) -> Gauss:
    """Rational point on the unit circle near ``exp(i*angle)``, denominator <= ``prec``.

    Quarter turns are exact; the remaining angle in [-pi/4, pi/4] goes through
    the parametrisation ``t -> ((1 - t^2) + 2t i) / (1 + t^2)`` with ``t``
    a best rational approximation of ``tan(angle / 2)``.
    """
    k = round(angle / (math.pi / 2))
    rest = angle - k * math.pi / 2
    quarter = (Gauss(1), Gauss(0, 1), Gauss(-1), Gauss(0, -1))[k % 4]
    bound = max(1, isqrt(max(prec, 1) // 2))
    t = Q(math.tan(rest / 2)).limit_denominator(bound)
    while t.numerator ** 2 + t.denominator ** 2 > prec and bound > 1:
        bound //= 2
        t = Q(math.tan(rest / 2)).limit_denominator(bound)
    d = 1 + t * t
    u = Gauss((1 - t * t) / d, 2 * t / d)
    return quarter * u


def normalize(
    Z: CentralCharge, C: ConeApprox, prec: int = 10**12, tol: float = 1e-9
) -> Tuple[Gauss, CentralCharge]:
    """Rotate ``Z`` by an exact unit Gaussian rational so that its cone phase is 1/2."""
    pc = phase_center(Z, C)
    if pc.is_half:
        return Gauss(1), Z
    rot = unit_point(math.pi * (0.5 - pc.phi), prec)
    assert rot.abs2() == 1
    Zn = Z.scaled(rot)
    rep = sector(Zn, C)
    if rep.status is not SectorStatus.SECTOR:
        raise PrecisionExhausted("rotated charge left the sector regime")
    new = _center(rep)
    if not new.is_half and abs(new.phi - 0.5) > tol:
        raise PrecisionExhausted(
            f"phase {new.phi} misses 1/2 by more than {tol} at denominator bound {prec}"
        )
    return rot, Zn


# --- membership --------------------------------------------------------------

def _ratio(Z: CentralCharge, v: RootVector) -> Q:
    return Z(v).abs2() / Q(sum(abs(x) for x in v)) ** 2


def membership_X(
    A: GCM, Z: CentralCharge, H: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> Verdict:
    C = imaginary_generators(A, H, max_candidates)
    return _membership_X(Z, C)


def _membership_X(Z: CentralCharge, C: ConeApprox) -> Verdict:
    if Z.n != C.gcm.n:
        raise DimensionMismatch(f"charge of rank {Z.n} for matrix of rank {C.gcm.n}")
    rep = sector(Z, C)
    if rep.status in (SectorStatus.HITS_ZERO, SectorStatus.CONTAINS_ZERO):
        return Verdict(Status.OUT_CERTIFIED, C.height, Q(0), rep.witness)
    margin: Margin = min((_ratio(Z, g) for g in C.generators), default=INF)
    return Verdict(Status.IN_AT_HEIGHT, C.height, margin)


def membership_Xreg(
    A: GCM, Z: CentralCharge, H: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> Verdict:
    verdict = membership_X(A, Z, H, max_candidates)
    if not verdict.inside:
        return verdict
    margin = verdict.margin2
    for v, rc in enumerate_roots(A, H, max_candidates):
        if rc.tag is not RootTag.REAL_POSITIVE:
            continue
        r = _ratio(Z, v)
        if r == 0:
            return Verdict(Status.OUT_CERTIFIED, H, Q(0), v)
        margin = min(margin, r)
    return Verdict(Status.IN_AT_HEIGHT, H, margin)


def support_margin(
    A: GCM, Z: CentralCharge, H: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> Margin:
    """Minimum of ``|Z(a)|^2 / |a|_1^2`` over indivisible roots of height <= H."""
    if Z.n != A.n:
        raise DimensionMismatch(f"charge of rank {Z.n} for matrix of rank {A.n}")
    return min(
        (_ratio(Z, v) for v, _ in enumerate_roots(A, H, max_candidates) if is_indivisible(v)),
        default=INF,
    )
