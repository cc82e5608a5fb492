"""Backend selection for the descent kernels.

The compiled extension is used when it imported and the input is small
enough for 64-bit arithmetic; otherwise the pure-Python twin runs. Setting
``KMCHAMBER_PURE=1`` forces the pure-Python path for the whole process.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("KMCHAMBER_PURE"):
        raise ImportError("pure backend requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

NOT_A_ROOT = _kernels_py.NOT_A_ROOT
REAL_POS = _kernels_py.REAL_POS
REAL_NEG = _kernels_py.REAL_NEG
IMAG_POS = _kernels_py.IMAG_POS
IMAG_NEG = _kernels_py.IMAG_NEG

_MAX_COMPILED_MASS = 1 << 20


def available_backends():
    return ("python", "cython") if _compiled is not None else ("python",)


def _module(backend, a, mass):
    if backend == "python":
        return _kernels_py
    if backend == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return _compiled
    if _compiled is not None and mass <= _MAX_COMPILED_MASS and _compiled.fits(a, mass):
        return _compiled
    return _kernels_py


def descend(a, v, backend=None):
    return _module(backend, a, sum(abs(x) for x in v)).descend(a, v)


def scan_box(a, height, backend=None):
    return _module(backend, a, height).scan_box(a, height)
