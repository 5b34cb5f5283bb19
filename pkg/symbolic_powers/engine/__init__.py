"""
Symbolic Powers - Algebra Engine
"""

from .errors import (
    SymbolicError, AmbientMismatchError, CapExceededError, ParseError,
    ExcludedParameterError, ChainBrokenError, SplitConstructionError,
    ConventionMismatchError, ProjectiveDimensionError, FieldDiscrepancyError
)
from .limits import Limits, LimitsFactory
from .logger import ComputationLogger
from .linalg import FieldSpec, rank
from .monomial import (
    Monomial, MonomialIdeal, divides, lcm, minimize, intersect, scale, product, power,
    membership, graded_dimension, parse_monomial, parse_ideal, compositions, prime_ideal,
    principal, quotient_by_variable, degree_histogram
)
from .graph import (
    SimpleGraph, ParallelizationSpec, complete_graph, path_graph, cycle_graph, edge_ideal,
    minimal_vertex_covers, brute_force_vertex_covers, is_vertex_cover, parallelize,
    lifted_minimal_covers, complete_multipartite, parse_graph, read_edge_list
)
from .symbolic import (
    SymbolicPowerRequest, RestrictedIdealSpec, symbolic_power, membership_symbolic,
    complete_symbolic_gens, restricted_ideal, parallel_symbolic_gens,
    ordinary_power_contained, compute_symbolic
)
from .splitting import SplitCertificate, EKVerdict, theorem_split, verify_ek, split_chain
from .table import BettiTable
from .oracle import betti_oracle
from .betti import (
    ek_combine, recursive_betti_complete, closed_form_K2, closed_form_K3, closed_form_K4,
    closed_form_complete, min_socle_degree, socle_degrees, hilbert_series_check,
    field_stability, parallel_bound_report, ParallelBoundReport, shift_degree,
    betti_table_from_generators
)

__all__ = [
    'SymbolicError', 'AmbientMismatchError', 'CapExceededError', 'ParseError',
    'ExcludedParameterError', 'ChainBrokenError', 'SplitConstructionError',
    'ConventionMismatchError', 'ProjectiveDimensionError', 'FieldDiscrepancyError',
    'Limits', 'LimitsFactory', 'ComputationLogger', 'FieldSpec', 'rank',
    'Monomial', 'MonomialIdeal', 'divides', 'lcm', 'minimize', 'intersect', 'scale',
    'product', 'power', 'membership', 'graded_dimension', 'parse_monomial', 'parse_ideal',
    'compositions', 'prime_ideal', 'principal', 'quotient_by_variable', 'degree_histogram',
    'SimpleGraph', 'ParallelizationSpec', 'complete_graph', 'path_graph', 'cycle_graph',
    'edge_ideal', 'minimal_vertex_covers', 'brute_force_vertex_covers', 'is_vertex_cover',
    'parallelize', 'lifted_minimal_covers', 'complete_multipartite', 'parse_graph',
    'read_edge_list',
    'SymbolicPowerRequest', 'RestrictedIdealSpec', 'symbolic_power', 'membership_symbolic',
    'complete_symbolic_gens', 'restricted_ideal', 'parallel_symbolic_gens',
    'ordinary_power_contained', 'compute_symbolic',
    'SplitCertificate', 'EKVerdict', 'theorem_split', 'verify_ek', 'split_chain',
    'BettiTable', 'betti_oracle',
    'ek_combine', 'recursive_betti_complete', 'closed_form_K2', 'closed_form_K3',
    'closed_form_K4', 'closed_form_complete', 'min_socle_degree', 'socle_degrees',
    'hilbert_series_check', 'field_stability', 'parallel_bound_report',
    'ParallelBoundReport', 'shift_degree', 'betti_table_from_generators'
]
