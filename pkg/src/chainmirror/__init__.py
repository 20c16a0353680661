"""Exact-arithmetic mirror symmetry engine for the chain singularity
x^p + x*y^q: FJRW quantum ring on the A side, Milnor ring of the
transpose dual x^p*y + y^q on the B side, and a machine-checked ring
isomorphism between them.
"""

from .singularity import ChainSingularity, TwoVarPoly, make_chain, make_dual
from .amodel import FrobeniusAlgebra, StateSpace, build_state_space
from .bmodel import MilnorRing
from .mirror import (
    compare_pairings,
    find_generators,
    verification_suite,
    verify_isomorphism,
)

__all__ = [
    "ChainSingularity",
    "TwoVarPoly",
    "make_chain",
    "make_dual",
    "FrobeniusAlgebra",
    "StateSpace",
    "build_state_space",
    "MilnorRing",
    "find_generators",
    "verify_isomorphism",
    "compare_pairings",
    "verification_suite",
]
