"""Generalized Cartan matrices built from loop-free quivers.

Classification is decided by the exact inertia of the (symmetric) matrix;
the finite/affine/indefinite inequality certificates are then produced and
checked before anything is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction as Q
from math import gcd
from typing import List, Sequence, Tuple

from .errors import (
    DecomposableError,
    DimensionMismatch,
    DisconnectedError,
    IndexOutOfRange,
    InputError,
    InvariantViolation,
    LoopError,
    ZeroVectorError,
)
from .exact import IntMatrix, as_matrix


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in self.arrows))


@dataclass(frozen=True)
class GCM:
    """Symmetric generalized Cartan matrix; hashable so root tables can be cached."""

    a: IntMatrix

    def __post_init__(self) -> None:
        a = as_matrix(self.a)
        object.__setattr__(self, "a", a)
        n = len(a)
        if n == 0:
            raise InputError("empty matrix")
        for i, row in enumerate(a):
            if len(row) != n:
                raise InputError("matrix is not square")
            if row[i] != 2:
                raise InputError(f"diagonal entry a[{i + 1}][{i + 1}] = {row[i]} != 2")
            for j, x in enumerate(row):
                if i != j and (x > 0 or x != a[j][i]):
                    raise InputError(f"entry ({i + 1},{j + 1}) violates symmetry/sign constraints")

    @property
    def n(self) -> int:
        return len(self.a)

    def sub(self, idx: Sequence[int]) -> "GCM":
        """Principal submatrix on 1-based indices ``idx``."""
        return GCM(tuple(tuple(self.a[i - 1][j - 1] for j in idx) for i in idx))


class Tag(str, Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class CartanType:
    tag: Tag
    witness: Tuple[int, ...]
    au: Tuple[int, ...] = field(default=())


def gcm_from_quiver(q: Quiver) -> GCM:
    n = q.n
    if n < 1:
        raise InputError("quiver needs at least one vertex")
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]
    for s, t in q.arrows:
        if not (1 <= s <= n and 1 <= t <= n):
            raise IndexOutOfRange(f"arrow ({s},{t}) outside vertices 1..{n}")
        if s == t:
            raise LoopError(f"loop at vertex {s}")
        a[s - 1][t - 1] -= 1
        a[t - 1][s - 1] -= 1
    g = GCM(as_matrix(a))
    if len(decompose(g)) > 1:
        raise DisconnectedError("quiver is not connected")
    return g


def decompose(A: GCM) -> List[Tuple[int, ...]]:
    """Connected components of the Dynkin diagram, 1-based, ordered by least element."""
    n = A.n
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        todo = deque([start])
        while todo:
            i = todo.popleft()
            for j in range(n):
                if not seen[j] and A.a[i][j] != 0:
                    seen[j] = True
                    comp.append(j)
                    todo.append(j)
        blocks.append(tuple(sorted(k + 1 for k in comp)))
    return blocks


def _connected(A: GCM, idx: Sequence[int]) -> bool:
    idx = list(idx)
    if not idx:
        return False
    members = set(idx)
    seen = {idx[0]}
    todo = [idx[0]]
    while todo:
        i = todo.pop()
        for j in members - seen:
            if A.a[i - 1][j - 1] != 0:
                seen.add(j)
                todo.append(j)
    return len(seen) == len(members)


def support(A: GCM, v: Sequence[int]) -> Tuple[Tuple[int, ...], bool]:
    if len(v) != A.n:
        raise DimensionMismatch(f"vector of length {len(v)} for rank {A.n}")
    idx = tuple(i + 1 for i, x in enumerate(v) if x != 0)
    if not idx:
        raise ZeroVectorError("support of the zero vector")
    return idx, _connected(A, idx)


# --- exact linear algebra ----------------------------------------------------

def inertia(a: Sequence[Sequence[int]]) -> Tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts by symmetric LDL^T.

    Pivots on a nonzero diagonal entry when one exists, otherwise on a 2x2
    block [[0, b], [b, 0]] which contributes one positive and one negative
    eigenvalue. Sylvester's law makes the counts exact.
    """
    m = [[Q(x) for x in row] for row in a]
    pos = neg = 0
    while m:
        k = len(m)
        p = next((i for i in range(k) if m[i][i] != 0), None)
        if p is not None:
            d = m[p][p]
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in range(k) if i != p]
            m = [[m[i][j] - m[i][p] * m[p][j] / d for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(k) for j in range(i + 1, k) if m[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        b = m[i0][j0]
        pos += 1
        neg += 1
        rest = [i for i in range(k) if i not in pair]
        # Schur complement of the block [[0, b], [b, 0]] (inverse [[0, 1/b], [1/b, 0]]).
        m = [
            [m[i][j] - (m[i][i0] * m[j0][j] + m[i][j0] * m[i0][j]) / b for j in rest]
            for i in rest
        ]
    n = len(a)
    return pos, neg, n - pos - neg


def solve(a: Sequence[Sequence[int]], b: Sequence[Q]) -> List[Q]:
    """Solve a nonsingular system exactly by Gauss-Jordan elimination."""
    n = len(a)
    m = [[Q(x) for x in row] + [Q(b[i])] for i, row in enumerate(a)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


def nullspace(a: Sequence[Sequence[int]]) -> List[List[Q]]:
    """Basis of the right kernel via reduced row echelon form."""
    n = len(a[0])
    m = [[Q(x) for x in row] for row in a]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [Q(0)] * n
        v[f] = Q(1)
        for row, c in zip(m, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


def feasible_point(a: Sequence[Sequence[Q]], b: Sequence[Q]):
    """A point of ``{x >= 0 : a x <= b}`` by phase-I simplex with Bland's rule.

    Returns ``None`` when the polyhedron is empty.
    """
    m, n = len(a), len(a[0])
    # columns: x (n), slack (m), artificial (m), rhs
    width = n + 2 * m
    rows = []
    for i in range(m):
        sgn = -1 if b[i] < 0 else 1
        row = [sgn * Q(x) for x in a[i]]
        row += [Q(sgn) if k == i else Q(0) for k in range(m)]
        row += [Q(1) if k == i else Q(0) for k in range(m)]
        row.append(sgn * Q(b[i]))
        rows.append(row)
    basis = [n + m + i for i in range(m)]
    # reduced costs of the phase-I objective: sum of artificials
    cost = [Q(0)] * (width + 1)
    for k in range(n + m, n + 2 * m):
        cost[k] = Q(1)
    for i in range(m):
        cost = [c - x for c, x in zip(cost, rows[i])]
    while True:
        enter = next((k for k in range(width) if cost[k] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # unbounded phase-I direction cannot occur; guard anyway
            return None
        r = best[1]
        piv = rows[r][enter]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        f = cost[enter]
        cost = [c - f * y for c, y in zip(cost, rows[r])]
        basis[r] = enter
    if -cost[-1] != 0:
        return None
    x = [Q(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = rows[i][-1]
    return x


def _primitive(v: Sequence[Q]) -> Tuple[int, ...]:
    den = 1
    for x in v:
        den = den * Q(x).denominator // gcd(den, Q(x).denominator)
    ints = [int(Q(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def classify(A: GCM) -> CartanType:
    if len(decompose(A)) > 1:
        raise DecomposableError("classify needs an indecomposable matrix; use decompose()")
    n = A.n
    pos, neg, zero = inertia(A.a)
    if pos == n:
        tag = Tag.FINITE
        u = _primitive(solve(A.a, [Q(1)] * n))
    elif neg == 0 and zero == 1:
        tag = Tag.AFFINE
        (k,) = nullspace(A.a)
        u = _primitive(k)
        if u[0] < 0:
            u = tuple(-x for x in u)
    else:
        tag = Tag.INDEFINITE
        # u = 1 + x with x >= 0 and A(1 + x) <= -1
        ones = [sum(row) for row in A.a]
        x = feasible_point(A.a, [-1 - s for s in ones])
        if x is None:
            raise InvariantViolation("no certificate u > 0 with Au < 0 found")
        u = _primitive([1 + xi for xi in x])
    au = tuple(sum(x * y for x, y in zip(row, u)) for row in A.a)
    _verify_witness(tag, u, au)
    return CartanType(tag, u, au)


def _verify_witness(tag: Tag, u: Sequence[int], au: Sequence[int]) -> None:
    ok = all(x > 0 for x in u)
    if tag is Tag.FINITE:
        ok = ok and all(x > 0 for x in au)
    elif tag is Tag.AFFINE:
        ok = ok and all(x == 0 for x in au)
    else:
        ok = ok and all(x < 0 for x in au)
    if not ok:
        raise InvariantViolation(f"witness {tuple(u)} does not certify {tag.value}")


def require_indecomposable(A: GCM) -> None:
    if len(decompose(A)) > 1:
        raise DecomposableError("operation needs an indecomposable matrix")
