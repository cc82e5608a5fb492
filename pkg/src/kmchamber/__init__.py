"""Exact root systems, Weyl chambers and braid words for quivers without loops.

From a quiver the package builds the symmetric generalized Cartan matrix,
classifies it, enumerates real and imaginary roots, tests central charges
against the imaginary cone, moves charges into the base chamber with Weyl
words, and turns wall-crossing paths into braid words acting on K-theory.
All decisions use exact integer and rational arithmetic.
"""

from .braid import (
    BraidWord,
    braid_to_kmatrix,
    check_braid_relations,
    euler_form,
    simplify,
    twist_matrix,
)
from .cone import (
    CentralCharge,
    ConeApprox,
    SectorReport,
    SectorStatus,
    Status,
    Verdict,
    imaginary_generators,
    membership_X,
    membership_Xreg,
    normalize,
    phase_center,
    sector,
    support_margin,
)
from .exact import Gauss
from .gcm import GCM, CartanType, Quiver, Tag, classify, decompose, gcm_from_quiver, support
from .kernels import BACKEND
from .navigate import (
    ChargePath,
    coaction,
    cross_path,
    dominant_word,
    in_tits_cone,
    locate,
    loop_shift,
    negative_chamber_word_finite,
    wall_of,
)
from .roots import (
    RootClass,
    RootTag,
    apply_word,
    classify_root,
    enumerate_roots,
    in_fundamental_set,
    pair,
    reflect,
    weyl_matrix,
)

__version__ = "0.1.0"
