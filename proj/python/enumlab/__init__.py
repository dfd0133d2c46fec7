"""Finite enumeration lab.

Exact desk-scale constructions: subset ranking by the combinatorial number
system, power-set tables, diagonal covers, relative cardinality of counting
formulas, reductio proof-chain auditing, and the unit-interval rational
expansion experiments. All arithmetic is exact; rationals cross the boundary
as fractions.Fraction.
"""

from ._enumlab import (
    antidiag_rationals,
    antidiagonal,
    affine_exponential,
    build_class,
    chain_audit,
    chain_classify,
    chain_render,
    class_size,
    custom_formula,
    dc_as_rho,
    dc_sequence,
    diagonal_cover_finite,
    enumerate_subsets,
    enumeration_index,
    equicardinal,
    eventually_periodic,
    exponential,
    floor_linear,
    full_array,
    Formula,
    hamming_census,
    ident_shift,
    locate,
    nested_intervals,
    pair_index,
    parse_formula,
    poly,
    powers_of_two,
    proof2_build,
    proof3_extend,
    proof3_table,
    q01_list,
    rank,
    reorder_demo,
    rho_finite,
    rho_limit,
    s2_array,
    sample_ratio,
    to_binary,
    unrank,
)

__all__ = [name for name in dir() if not name.startswith("_")]
