"""Exact scalar and matrix helpers: Gaussian rationals and integer matrices."""

from __future__ import annotations

from fractions import Fraction as Q
from typing import Iterable, Sequence, Tuple, Union

from .errors import InputError

Rational = Union[int, Q]
IntMatrix = Tuple[Tuple[int, ...], ...]


class Gauss:
    """A Gaussian rational ``re + i*im`` with :class:`Fraction` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0) -> None:
        self.re = Q(re)
        self.im = Q(im)

    @classmethod
    def coerce(cls, x) -> "Gauss":
        if isinstance(x, Gauss):
            return x
        if isinstance(x, complex):
            return cls(Q(x.real), Q(x.imag))
        return cls(Q(x))

    def __add__(self, other) -> "Gauss":
        o = Gauss.coerce(other)
        return Gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "Gauss":
        o = Gauss.coerce(other)
        return Gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "Gauss":
        return Gauss.coerce(other) - self

    def __neg__(self) -> "Gauss":
        return Gauss(-self.re, -self.im)

    def __mul__(self, other) -> "Gauss":
        o = Gauss.coerce(other)
        return Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Gauss":
        o = Gauss.coerce(other)
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        num = self * o.conj()
        return Gauss(num.re / d, num.im / d)

    def conj(self) -> "Gauss":
        return Gauss(self.re, -self.im)

    def abs2(self) -> Q:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other) -> bool:
        try:
            o = Gauss.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"Gauss({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def cross(a: Gauss, b: Gauss) -> Q:
    """z-component of ``a x b``; positive when ``b`` is counterclockwise of ``a``."""
    return a.re * b.im - a.im * b.re


def dot(a: Gauss, b: Gauss) -> Q:
    return a.re * b.re + a.im * b.im


def in_closed_upper(z: Gauss) -> bool:
    """Membership in ``H = {Im z > 0} u R_{<0}``."""
    return z.im > 0 or (z.im == 0 and z.re < 0)


# --- rational text format -------------------------------------------------

def parse_rational(x) -> Q:
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Q(x)
    if isinstance(x, str):
        try:
            return Q(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    raise InputError(f"not a rational: {x!r}")


def fmt_rational(x: Rational) -> str:
    # Fraction normalises to lowest terms with positive denominator.
    return str(Q(x))


# --- integer matrices ------------------------------------------------------

def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(col) for col in zip(*a))


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)
