"""Necklaces whose Burrows-Wheeler transform has no two equal adjacent letters."""

from .permutation import Permutation
from .words import (
    Necklace,
    bwt,
    canonical,
    format_word,
    inverse_bwt,
    inverse_standard_permutation,
    is_alphabet_permutation_power,
    is_bwt_image_aperiodic,
    is_completely_unclustered,
    parse_word,
    rle,
    run_count,
    shift,
    standard_permutation,
)
from .graph import CyclePath, EdgeRef, GdbGraph, export_dot, generate_gdbw, is_gdbw
from .untie import find_ties, make_unclustered_gdbw, reroute, untie_leftmost, untie_rightmost
from .extend import (
    LastBlockVariant,
    construct_unclustered,
    construct_unclustered_ternary,
    delete_two,
    extend_alphabet,
    insert_two,
)
from .numtheory import artin_lhs, artin_rhs, count_gdbw_ternary, lower_bound_unclustered, phi_generalized

__version__ = "0.1.0"
