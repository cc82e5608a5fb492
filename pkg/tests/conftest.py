from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from kmchamber.gcm import GCM, Tag, classify  # noqa: E402

A2 = GCM(((2, -1), (-1, 2)))
AFF_A1 = GCM(((2, -2), (-2, 2)))
KRON3 = GCM(((2, -3), (-3, 2)))

# indecomposable matrices of rank <= 4 used by the corpus-wide checks
CORPUS = {
    "A2": A2,
    "A3": GCM(((2, -1, 0), (-1, 2, -1), (0, -1, 2))),
    "D4": GCM(((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2))),
    "A1~": AFF_A1,
    "A2~": GCM(((2, -1, -1), (-1, 2, -1), (-1, -1, 2))),
    "A3~": GCM(((2, -1, 0, -1), (-1, 2, -1, 0), (0, -1, 2, -1), (-1, 0, -1, 2))),
    "K3": KRON3,
    "K4": GCM(((2, -4), (-4, 2))),
    "markov": GCM(((2, -2, -2), (-2, 2, -2), (-2, -2, 2))),
    "A1~+leaf": GCM(((2, -2, 0), (-2, 2, -1), (0, -1, 2))),
    "triangle21": GCM(((2, -2, -1), (-2, 2, -1), (-1, -1, 2))),
    "star4": GCM(((2, -1, -1, -1), (-1, 2, 0, 0), (-1, 0, 2, 0), (-1, 0, 0, 2))),
    "cycle4x": GCM(((2, -2, 0, -1), (-2, 2, -1, 0), (0, -1, 2, -1), (-1, 0, -1, 2))),
}

INFINITE = {k: v for k, v in CORPUS.items() if classify(v).tag is not Tag.FINITE}


@pytest.fixture(params=sorted(CORPUS))
def corpus_gcm(request):
    return CORPUS[request.param]
