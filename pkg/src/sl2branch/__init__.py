"""Branching rules for irreducible representations of SL2 over a p-adic
field of odd residue characteristic, restricted to SL2(R), with a
finite-group oracle for brute-force verification."""

from .arith import (
    FieldParams, ExtReal, KElem, SquareClass, ExponentMatrix,
    SQ_ONE, SQ_EPS, SQ_PI, SQ_EPS_PI, K_ONE, K_EPS, K_PI, K_ZERO,
    ceil_index, hilbert_sgn, filtration_exponents, FACET,
)
from .tori import TorusDesc, classify_torus, torus_filtration, standard_tori
from .grep import (
    CharKx, CharT, FiniteCuspidal, PrincipalSeries, ReduciblePSConstituent,
    DepthZeroSC, PositiveSC, make_principal_series, make_positive_sc,
    make_depth_zero_sc, central_character, l_packet, sign_character,
    special_cuspidal,
)
from .ktype import XParam, PhiLabel, Shalika, make_shalika, degree, same_class
from .engine import (
    BranchingSeries, TailDescriptor, branch, leading_term, tail_end,
    tails_match, k_intertwines, classify_from_profile, dimension_identity,
    packet_profile,
)

__version__ = "0.1.0"
