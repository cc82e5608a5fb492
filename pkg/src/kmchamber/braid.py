"""Braid words and their action on the Grothendieck group.

A spherical twist acts on K-theory as the reflection in the class of its
object, so a braid word is read here as a triple (letters, matrix, shift).
The triangulated category itself is never built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import IndexOutOfRange, InputError, InvariantViolation
from .exact import IntMatrix, identity, matmul
from .gcm import GCM
from .roots import RootVector, pair, weyl_matrix

Letter = Tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    letters: Tuple[Letter, ...] = ()
    shift: int = 0

    def __post_init__(self) -> None:
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if e not in (1, -1):
                raise InputError(f"exponent {e} is not +1 or -1")
            if i < 1:
                raise IndexOutOfRange(f"generator {i} < 1")
        if self.shift % 2:
            raise InputError(f"shift {self.shift} is odd")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.letters + other.letters, self.shift + other.shift)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple((i, -e) for i, e in reversed(self.letters)), -self.shift)

    @classmethod
    def parse(cls, text: str, shift: int = 0) -> "BraidWord":
        """Parse the shorthand ``"1,-2,3"`` for s1 s2^-1 s3."""
        letters = []
        for tok in text.replace(" ", "").split(","):
            if not tok:
                continue
            try:
                k = int(tok)
            except ValueError as exc:
                raise InputError(f"bad braid letter {tok!r}") from exc
            if k == 0:
                raise InputError("braid letter 0 is not a generator")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(tuple(letters), shift)

    def to_json(self) -> dict:
        return {"letters": [[i, e] for i, e in self.letters], "shift": self.shift}

    def __str__(self) -> str:
        body = " ".join(f"s{i}" if e == 1 else f"s{i}^-1" for i, e in self.letters) or "e"
        return body if not self.shift else f"[{self.shift}] {body}"


def euler_form(A: GCM, v: Sequence[int], w: Sequence[int]) -> int:
    """Euler pairing on K-theory, identified with the root-lattice form."""
    return pair(A, v, w)


def twist_matrix(A: GCM, i: int) -> IntMatrix:
    if not 1 <= i <= A.n:
        raise IndexOutOfRange(f"generator {i} outside 1..{A.n}")
    n = A.n
    # column j: e_j - chi(e_i, e_j) e_i
    return tuple(
        tuple((int(r == j) - (A.a[i - 1][j] if r == i - 1 else 0)) for j in range(n))
        for r in range(n)
    )


def braid_to_kmatrix(A: GCM, b: BraidWord) -> Tuple[IntMatrix, int]:
    m = identity(A.n)
    for i, _ in b.letters:
        m = matmul(m, twist_matrix(A, i))
    return m, b.shift


def preserves_form(A: GCM, m: IntMatrix) -> bool:
    mt = tuple(zip(*m))
    return matmul(matmul(mt, A.a), m) == A.a


@dataclass(frozen=True)
class RelationCheck:
    i: int
    j: int
    a_ij: int
    kind: str  # "commute", "braid" or "free"
    holds: bool


def check_braid_relations(A: GCM, order_bound: int = 20) -> List[RelationCheck]:
    """Matrix-level check of the Artin relations for every pair of generators.

    For ``a_ij <= -2`` no relation is expected, so "holds" means that
    ``(r_i r_j)^k`` differs from the identity for every ``k <= order_bound``.
    """
    out = []
    eye = identity(A.n)
    for i in range(1, A.n + 1):
        for j in range(i + 1, A.n + 1):
            a = A.a[i - 1][j - 1]
            if a == 0:
                ok = weyl_matrix(A, (i, j)) == weyl_matrix(A, (j, i))
                kind = "commute"
            elif a == -1:
                ok = weyl_matrix(A, (i, j, i)) == weyl_matrix(A, (j, i, j))
                kind = "braid"
            else:
                step = weyl_matrix(A, (i, j))
                power = step
                ok = True
                for _ in range(order_bound):
                    if power == eye:
                        ok = False
                        break
                    power = matmul(power, step)
                kind = "free"
            out.append(RelationCheck(i, j, a, kind, ok))
    return out


# --- best-effort simplification ---------------------------------------------

def _free_reduce(letters: List[Letter]) -> List[Letter]:
    out: List[Letter] = []
    for x in letters:
        if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
            out.pop()
        else:
            out.append(x)
    return out


def _cancel_through_commuting(A: GCM, letters: List[Letter]) -> Tuple[List[Letter], bool]:
    """Cancel x ... x^-1 when every letter in between commutes with x."""
    n = len(letters)
    for p in range(n):
        i, e = letters[p]
        for q in range(p + 1, n):
            j, f = letters[q]
            if j == i and f == -e:
                return letters[:p] + letters[p + 1:q] + letters[q + 1:], True
            if j == i or A.a[i - 1][j - 1] != 0:
                break
    return letters, False


def _braid_moves(A: GCM, letters: List[Letter]):
    """Words one relation away: aba <-> bab (uniform sign) and ab <-> ba."""
    n = len(letters)
    for p in range(n - 1):
        (i, e), (j, f) = letters[p], letters[p + 1]
        if i != j and A.a[i - 1][j - 1] == 0:
            yield letters[:p] + [(j, f), (i, e)] + letters[p + 2:]
    for p in range(n - 2):
        (i, e), (j, f), (k, g) = letters[p:p + 3]
        if i == k and i != j and e == f == g and A.a[i - 1][j - 1] == -1:
            yield letters[:p] + [(j, e), (i, e), (j, e)] + letters[p + 3:]


def _reduce(A: GCM, letters: List[Letter]) -> List[Letter]:
    letters = _free_reduce(letters)
    changed = True
    while changed:
        letters, changed = _cancel_through_commuting(A, letters)
        letters = _free_reduce(letters)
    return letters


def simplify(A: GCM, b: BraidWord) -> BraidWord:
    """Shorten ``b`` by free reduction plus length-reducing relation moves.

    Not a normal form: two outputs that differ may still be equal braids.
    """
    for i, _ in b.letters:
        if i > A.n:
            raise IndexOutOfRange(f"generator {i} outside 1..{A.n}")
    letters = _reduce(A, list(b.letters))
    improved = True
    while improved:
        improved = False
        for cand in _braid_moves(A, letters):
            red = _reduce(A, cand)
            if len(red) < len(letters):
                letters = red
                improved = True
                break
    out = BraidWord(tuple(letters), b.shift)
    if braid_to_kmatrix(A, out) != braid_to_kmatrix(A, b):
        raise InvariantViolation("simplification changed the K-theory action")
    return out


def twist_action(A: GCM, i: int, v: Sequence[int]) -> RootVector:
    """``[E] - chi(S_i, E) [S_i]`` on a class given in the simple basis."""
    c = sum(A.a[i - 1][j] * x for j, x in enumerate(v))
    out = list(v)
    out[i - 1] -= c
    return tuple(out)


def relation_table(checks: Sequence[RelationCheck]) -> List[Dict]:
    return [
        {"pair": [c.i, c.j], "a_ij": c.a_ij, "kind": c.kind, "holds": c.holds} for c in checks
    ]
