"""Pure-Python reflection-descent kernels (fallback for ``_kernels``).

Result codes: 0 not a root, 1 real positive, 2 real negative,
3 imaginary positive, 4 imaginary negative. Letters are 1-based generator
indices in the order the reflections were applied.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

NOT_A_ROOT, REAL_POS, REAL_NEG, IMAG_POS, IMAG_NEG = range(5)


def _support_connected(a: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    idx = [i for i, x in enumerate(v) if x]
    seen = {idx[0]}
    stack = [idx[0]]
    while stack:
        i = stack.pop()
        row = a[i]
        for j in idx:
            if j not in seen and row[j]:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(idx)


def _descend_positive(a, v: List[int]) -> Tuple[int, List[int]]:
    n = len(v)
    letters: List[int] = []
    while True:
        if sum(v) == 1:
            return REAL_POS, letters
        for i in range(n):
            row = a[i]
            p = 0
            for j in range(n):
                p += row[j] * v[j]
            if p > 0:
                v[i] -= p
                letters.append(i + 1)
                if v[i] < 0:
                    return NOT_A_ROOT, letters
                break
        else:
            if _support_connected(a, v):
                return IMAG_POS, letters
            return NOT_A_ROOT, letters


def descend(a: Sequence[Sequence[int]], v: Sequence[int]) -> Tuple[int, List[int]]:
    v = [int(x) for x in v]
    has_pos = any(x > 0 for x in v)
    has_neg = any(x < 0 for x in v)
    if has_pos == has_neg:  # zero or mixed signs
        return NOT_A_ROOT, []
    if has_neg:
        code, letters = _descend_positive(a, [-x for x in v])
        return {REAL_POS: REAL_NEG, IMAG_POS: IMAG_NEG}.get(code, code), letters
    return _descend_positive(a, v)


def compositions(n: int, h: int):
    """Nonnegative integer vectors of length ``n`` and sum ``h``, lexicographically."""
    if n == 1:
        yield (h,)
        return
    for first in range(h + 1):
        for rest in compositions(n - 1, h - first):
            yield (first,) + rest


def scan_box(a: Sequence[Sequence[int]], height: int):
    """Classify every positive lattice vector of height 1..height; keep the roots."""
    n = len(a)
    out = []
    for h in range(1, height + 1):
        for vec in compositions(n, h):
            code, letters = _descend_positive(a, list(vec))
            if code != NOT_A_ROOT:
                out.append((vec, code, letters))
    return out
