# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reflection-descent kernels; same contract as ``_kernels_py``.

Arithmetic is on 64-bit integers. Callers must route inputs whose pairing
magnitudes could exceed that range to the pure-Python kernels; ``fits``
performs the check.
"""

from libc.stdlib cimport malloc, free

DEF NOT_A_ROOT = 0
DEF REAL_POS = 1
DEF REAL_NEG = 2
DEF IMAG_POS = 3
DEF IMAG_NEG = 4

cdef long long LIMIT = 1LL << 60


def fits(a, long long mass):
    """True when descent from a vector of l1-norm ``mass`` stays in int64."""
    cdef long long amax = 0
    cdef Py_ssize_t n = len(a)
    for row in a:
        for x in row:
            if abs(x) > amax:
                amax = abs(x)
    if amax == 0 or mass == 0:
        return True
    return mass < LIMIT // (amax * n + 1)


cdef bint _connected(long long* a, long long* v, int n, int* stack, char* seen):
    cdef int i, j, top = 0, first = -1, count = 0, reached = 1
    for i in range(n):
        seen[i] = 0
        if v[i] != 0:
            count += 1
            if first < 0:
                first = i
    seen[first] = 1
    stack[top] = first
    top += 1
    while top > 0:
        top -= 1
        i = stack[top]
        for j in range(n):
            if v[j] != 0 and not seen[j] and a[i * n + j] != 0:
                seen[j] = 1
                reached += 1
                stack[top] = j
                top += 1
    return reached == count


cdef int _descend_positive(long long* a, long long* v, int n, int* letters,
                           int* nletters, int* stack, char* seen):
    cdef int i, j
    cdef long long p, h
    nletters[0] = 0
    while True:
        h = 0
        for i in range(n):
            h += v[i]
        if h == 1:
            return REAL_POS
        for i in range(n):
            p = 0
            for j in range(n):
                p += a[i * n + j] * v[j]
            if p > 0:
                v[i] -= p
                letters[nletters[0]] = i + 1
                nletters[0] += 1
                if v[i] < 0:
                    return NOT_A_ROOT
                break
        else:
            if _connected(a, v, n, stack, seen):
                return IMAG_POS
            return NOT_A_ROOT


cdef long long* _flat(a, int n) except NULL:
    cdef long long* buf = <long long*> malloc(n * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef int i, j
    for i in range(n):
        for j in range(n):
            buf[i * n + j] = a[i][j]
    return buf


def descend(a, v):
    cdef int n = len(v)
    cdef int i, code, nl = 0
    cdef long long mass = 0
    cdef bint has_pos = False, has_neg = False
    for x in v:
        if x > 0:
            has_pos = True
        elif x < 0:
            has_neg = True
        mass += abs(x)
    if has_pos == has_neg:
        return NOT_A_ROOT, []
    cdef long long* am = _flat(a, n)
    cdef long long* vv = <long long*> malloc(n * sizeof(long long))
    cdef int* letters = <int*> malloc((mass + 1) * sizeof(int))
    cdef int* stack = <int*> malloc(n * sizeof(int))
    cdef char* seen = <char*> malloc(n * sizeof(char))
    try:
        for i in range(n):
            vv[i] = -v[i] if has_neg else v[i]
        code = _descend_positive(am, vv, n, letters, &nl, stack, seen)
        if has_neg:
            if code == REAL_POS:
                code = REAL_NEG
            elif code == IMAG_POS:
                code = IMAG_NEG
        return code, [letters[i] for i in range(nl)]
    finally:
        free(am)
        free(vv)
        free(letters)
        free(stack)
        free(seen)


def scan_box(a, int height):
    cdef int n = len(a)
    cdef int i, k, code, nl = 0, h
    cdef long long* am = _flat(a, n)
    cdef long long* comp = <long long*> malloc(n * sizeof(long long))
    cdef long long* vv = <long long*> malloc(n * sizeof(long long))
    cdef int* letters = <int*> malloc((height + 1) * sizeof(int))
    cdef int* stack = <int*> malloc(n * sizeof(int))
    cdef char* seen = <char*> malloc(n * sizeof(char))
    out = []
    try:
        for h in range(1, height + 1):
            # lexicographically first composition of h: (0, ..., 0, h)
            for i in range(n - 1):
                comp[i] = 0
            comp[n - 1] = h
            while True:
                for i in range(n):
                    vv[i] = comp[i]
                code = _descend_positive(am, vv, n, letters, &nl, stack, seen)
                if code != NOT_A_ROOT:
                    out.append((tuple([comp[i] for i in range(n)]), code,
                                [letters[i] for i in range(nl)]))
                # lex successor: rightmost nonzero k >= 1 moves one unit left,
                # the remainder of its mass goes to the last slot
                k = n - 1
                while k > 0 and comp[k] == 0:
                    k -= 1
                if k == 0:
                    break
                comp[k - 1] += 1
                comp[n - 1] = comp[k] - 1
                if k != n - 1:
                    comp[k] = 0
        return out
    finally:
        free(am)
        free(comp)
        free(vv)
        free(letters)
        free(stack)
        free(seen)
