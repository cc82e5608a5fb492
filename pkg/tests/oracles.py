"""Independent reference computations used to cross-check the library.

Nothing here imports the code under test except plain data types; every
oracle reaches its answer by a different route than the library does.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from fractions import Fraction as Q


def form(a, v, w):
    return sum(v[i] * a[i][j] * w[j] for i in range(len(v)) for j in range(len(w)))


def _refl(a, i, v):
    c = sum(a[i][j] * v[j] for j in range(len(v)))
    out = list(v)
    out[i] -= c
    return tuple(out)


def _connected_support(a, v):
    idx = [i for i, x in enumerate(v) if x]
    if not idx:
        return False
    seen, todo = {idx[0]}, [idx[0]]
    while todo:
        i = todo.pop()
        for j in idx:
            if j not in seen and a[i][j]:
                seen.add(j)
                todo.append(j)
    return len(seen) == len(idx)


def _ascend(a, seeds, H):
    """Close ``seeds`` under height-increasing simple reflections, height <= H."""
    n = len(a)
    seen = set(seeds)
    todo = deque(seeds)
    while todo:
        v = todo.popleft()
        for i in range(n):
            w = _refl(a, i, v)
            if sum(w) > sum(v) and sum(w) <= H and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def positive_roots_by_ascent(a, H):
    """(real, imaginary) positive roots of height <= H.

    Real roots: ascent from simple roots. Imaginary roots: ascent from the
    fundamental set, found by brute force over the lattice box. Every
    positive root descends by strictly decreasing steps, so ascent restricted
    to height <= H reaches all of them.
    """
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    real = _ascend(a, simple, H)
    fund = []
    for v in itertools.product(range(H + 1), repeat=n):
        if 0 < sum(v) <= H and _connected_support(a, v):
            if all(sum(a[i][j] * v[j] for j in range(n)) <= 0 for i in range(n)):
                fund.append(v)
    imag = _ascend(a, fund, H)
    return real, imag


def affine_a1_roots(H):
    """Closed form for A1^(1): real a_i + k delta, imaginary k delta."""
    real = set()
    imag = set()
    for k in range(H + 1):
        for base in ((1, 0), (0, 1)):
            v = (base[0] + k, base[1] + k)
            if sum(v) <= H:
                real.add(v)
        if 0 < 2 * k <= H:
            imag.add((k, k))
    return real, imag


def weyl_group(a, limit=100_000):
    """All Weyl matrices (as tuples of columns) of a finite-type matrix by BFS."""
    n = len(a)
    eye = tuple(tuple(int(i == j) for i in range(n)) for j in range(n))
    gens = []
    for i in range(n):
        gens.append(tuple(_refl(a, i, col) for col in eye))
    seen = {eye}
    todo = deque([eye])
    while todo:
        g = todo.popleft()
        for s in range(n):
            h = tuple(_refl(a, s, col) for col in g)
            if h not in seen:
                seen.add(h)
                todo.append(h)
                if len(seen) > limit:
                    raise RuntimeError("group too large")
    return seen


def sector_width_below_pi(points):
    """Float oracle: True iff all points are nonzero and fit in an open half plane.

    O(m^2): some point must be the clockwise end of the hull, with every
    other point within angle < pi counterclockwise of it.
    """
    if any(p == 0 for p in points):
        return False
    angs = [math.atan2(p.imag, p.real) for p in points]
    for a0 in angs:
        span = max((b - a0) % (2 * math.pi) for b in angs)
        if span < math.pi - 1e-12:
            return True
    return False


# --- Dynkin diagrams -------------------------------------------------------

def path(n):
    return [(i, i + 1) for i in range(1, n)]


def type_d(n):
    return path(n - 1) + [(n - 2, n)]


def type_e(n):
    return path(n - 1) + [(3, n)]


def ade_diagrams(max_vertices=8):
    out = {}
    for n in range(1, max_vertices + 1):
        out[f"A{n}"] = (n, path(n))
    for n in range(4, max_vertices + 1):
        out[f"D{n}"] = (n, type_d(n))
    for n in (6, 7, 8):
        if n <= max_vertices:
            out[f"E{n}"] = (n, type_e(n))
    return out


def affine_ade_diagrams():
    out = {"A1~": (2, [(1, 2), (1, 2)])}
    for n in range(2, 8):
        out[f"A{n}~"] = (n + 1, path(n + 1) + [(n + 1, 1)])
    for n in range(4, 8):
        # D_n~: path 1..n-1 with extra leaves at both ends
        out[f"D{n}~"] = (n + 1, [(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)] + [(n - 1, n), (n - 1, n + 1)])
    out["E6~"] = (7, path(5) + [(3, 6), (6, 7)])
    out["E7~"] = (8, path(7) + [(4, 8)])
    out["E8~"] = (9, path(8) + [(3, 9)])
    return out


def is_ade_graph(n, edges):
    """Recognize simple ADE graphs: tree, no multi-edges, at most one branch
    vertex of degree 3 whose arm lengths p, q, r satisfy 1/p + 1/q + 1/r > 1."""
    und = [tuple(sorted(e)) for e in edges]
    if len(set(und)) != len(und) or any(s == t for s, t in und):
        return False
    if len(und) != n - 1:
        return False
    adj = {v: set() for v in range(1, n + 1)}
    for s, t in und:
        adj[s].add(t)
        adj[t].add(s)
    seen, todo = {1}, [1]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    if len(seen) != n:
        return False
    branch = [v for v in adj if len(adj[v]) >= 3]
    if not branch:
        return True
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        return False
    b = branch[0]
    arms = []
    for start in adj[b]:
        length, prev, cur = 1, b, start
        while len(adj[cur]) == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length + 1)  # count the branch vertex in each arm
    return sum(Q(1, p) for p in arms) > 1
