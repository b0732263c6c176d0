"""Milnor numbers of bottom tangles and clover links, SL-moves, and the lattices H(2k+2, j)."""

from .classify import Verdict, classify_4clover, compare_4clover, fingerprint
from .hset import AffineLattice, hset_generators, hset_intersects, hset_member, lattice_from_mu, lattices_equal
from .magnus import MagnusSeries, commutator_series, expand, inverse, mul, substitute
from .milnor import (
    SeriesPresentation,
    TanglePresentation,
    check_vanishing,
    delta_k,
    delta_link,
    milnor_number,
    mu_bar,
    mu_table,
    seq_basis,
)
from .realize import realize
from .slmove import LinkingMatrix, SLMoveInput, linking_of, prop_delta_formula, sl_move, transform, verify_congruence
from .word import GroupWord, Letter, commutator, conjugate, exponent_sum, invert, reduce
from .zlattice import IntMatrix, affine_intersects, hnf, member

__version__ = "0.1.0"
