"""Root lattice arithmetic, Weyl words and root classification by descent.

Vectors are integer tuples in the simple-root basis. Generator indices are
1-based. A Weyl word ``(i1, ..., ik)`` stands for ``r_i1 * ... * r_ik`` and
so acts on a vector by applying ``r_ik`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb, gcd
from typing import List, Sequence, Tuple

from . import kernels
from .errors import BudgetExceeded, DimensionMismatch, IndexOutOfRange
from .exact import IntMatrix, transpose
from .gcm import GCM, _connected, require_indecomposable

RootVector = Tuple[int, ...]
WeylWord = Tuple[int, ...]

DEFAULT_MAX_CANDIDATES = 2_000_000


class RootTag(str, Enum):
    REAL_POSITIVE = "RealPositive"
    REAL_NEGATIVE = "RealNegative"
    IMAGINARY_POSITIVE = "ImaginaryPositive"
    IMAGINARY_NEGATIVE = "ImaginaryNegative"
    NOT_A_ROOT = "NotARoot"

    @property
    def is_real(self) -> bool:
        return self in (RootTag.REAL_POSITIVE, RootTag.REAL_NEGATIVE)

    @property
    def is_imaginary(self) -> bool:
        return self in (RootTag.IMAGINARY_POSITIVE, RootTag.IMAGINARY_NEGATIVE)


_CODE_TO_TAG = {
    kernels.NOT_A_ROOT: RootTag.NOT_A_ROOT,
    kernels.REAL_POS: RootTag.REAL_POSITIVE,
    kernels.REAL_NEG: RootTag.REAL_NEGATIVE,
    kernels.IMAG_POS: RootTag.IMAGINARY_POSITIVE,
    kernels.IMAG_NEG: RootTag.IMAGINARY_NEGATIVE,
}


@dataclass(frozen=True)
class RootClass:
    """Tag plus a word ``d`` with ``apply_word(A, d, v)`` simple (real) or in K (imaginary)."""

    tag: RootTag
    witness: WeylWord = ()

    def to_json(self) -> dict:
        return {"tag": self.tag.value, "witness": list(self.witness)}


def height(v: Sequence[int]) -> int:
    return sum(v)


def is_positive(v: Sequence[int]) -> bool:
    return all(x >= 0 for x in v) and any(x > 0 for x in v)


def simple_root(n: int, i: int) -> RootVector:
    return tuple(int(k == i - 1) for k in range(n))


def is_indivisible(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def _check_len(A: GCM, *vs: Sequence[int]) -> None:
    for v in vs:
        if len(v) != A.n:
            raise DimensionMismatch(f"vector of length {len(v)} for rank {A.n}")


def _check_index(A: GCM, i: int) -> None:
    if not 1 <= i <= A.n:
        raise IndexOutOfRange(f"generator {i} outside 1..{A.n}")


def pair(A: GCM, v: Sequence[int], w: Sequence[int]) -> int:
    _check_len(A, v, w)
    return sum(v[i] * sum(a * y for a, y in zip(A.a[i], w)) for i in range(A.n) if v[i])


def reflect(A: GCM, i: int, v: Sequence[int]) -> RootVector:
    _check_index(A, i)
    _check_len(A, v)
    p = sum(a * x for a, x in zip(A.a[i - 1], v))
    out = list(v)
    out[i - 1] -= p
    return tuple(out)


def apply_word(A: GCM, w: Sequence[int], v: Sequence[int]) -> RootVector:
    for i in w:
        _check_index(A, i)
    out = tuple(v)
    for i in reversed(w):
        out = reflect(A, i, out)
    return out


def weyl_matrix(A: GCM, w: Sequence[int]) -> IntMatrix:
    """Matrix of ``w`` on L; column ``j`` is the image of the j-th simple root."""
    cols = [apply_word(A, w, simple_root(A.n, j + 1)) for j in range(A.n)]
    return transpose(cols)


def in_fundamental_set(A: GCM, v: Sequence[int]) -> bool:
    _check_len(A, v)
    if not is_positive(v):
        return False
    if any(sum(a * x for a, x in zip(row, v)) > 0 for row in A.a):
        return False
    return _connected(A, [i + 1 for i, x in enumerate(v) if x])


def classify_root(A: GCM, v: Sequence[int]) -> RootClass:
    _check_len(A, v)
    code, letters = kernels.descend(A.a, tuple(v))
    tag = _CODE_TO_TAG[code]
    if tag is RootTag.NOT_A_ROOT:
        return RootClass(tag)
    return RootClass(tag, tuple(reversed(letters)))


def candidate_count(n: int, H: int) -> int:
    """Number of positive lattice vectors of height at most H."""
    return comb(H + n, n) - 1


def _order_key(v: RootVector):
    return (sum(v), tuple(-x for x in v))


@lru_cache(maxsize=64)
def _root_table(A: GCM, H: int) -> Tuple[Tuple[RootVector, RootClass], ...]:
    rows = []
    for vec, code, letters in kernels.scan_box(A.a, H):
        rows.append((vec, RootClass(_CODE_TO_TAG[code], tuple(reversed(letters)))))
    rows.sort(key=lambda r: _order_key(r[0]))
    return tuple(rows)


def enumerate_roots(
    A: GCM, H: int, max_candidates: int = DEFAULT_MAX_CANDIDATES
) -> List[Tuple[RootVector, RootClass]]:
    """All positive roots of height <= H, by height then descending coordinates.

    Every lattice point of the height-graded box is classified by descent,
    so the cost is the box size ``C(H + n, n) - 1``; larger boxes raise
    :class:`BudgetExceeded`.
    """
    if H < 1:
        raise ValueError("height bound must be >= 1")
    require_indecomposable(A)
    size = candidate_count(A.n, H)
    if size > max_candidates:
        raise BudgetExceeded(f"{size} candidates at height {H} exceed cap {max_candidates}")
    return list(_root_table(A, H))


def word_inverse(w: Sequence[int]) -> WeylWord:
    return tuple(reversed(w))
