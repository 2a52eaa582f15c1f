"""Integral Burau representation of braid groups and its level-2/level-4 congruence subgroups."""

from .braid import (BraidWord, artin_generator, brunnian_sample, delete_strand, interval_twist,
                    is_pure, is_trivial, linking_numbers, parse_braid, push_generator, round_twist)
from .burau import burau_unreduced, integral_burau, integral_burau_mod, rho_symplectic, symplectize
from .finite import ModMatrix, closure
from .oracles import in_level, in_pb_squared, membership_report

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "ModMatrix",
    "artin_generator",
    "brunnian_sample",
    "burau_unreduced",
    "closure",
    "delete_strand",
    "in_level",
    "in_pb_squared",
    "integral_burau",
    "integral_burau_mod",
    "interval_twist",
    "is_pure",
    "is_trivial",
    "linking_numbers",
    "membership_report",
    "parse_braid",
    "push_generator",
    "rho_symplectic",
    "round_twist",
    "symplectize",
]
