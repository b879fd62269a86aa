"""Cyclic codes from the Fibonacci recurrence over prime fields."""
from .code_builder import (
    CodeAnalysis,
    GeneratorMatrix,
    Verdict,
    WeightDistribution,
    analyze_code,
    build_generator_matrix,
    closed_form_weights,
    dual_distance,
    enumerate_weights,
    is_mds,
    verify_cyclic,
)
from .coset_graph import SRGCertificate, build_syndrome_graph, eigenvalues_from_weights, verify_srg
from .errors import InvalidInputError, InvariantViolation, PisanoError
from .fib_arith import Case, PisanoProfile, fib_pair_mod, generalized_period, order, pisano_period, pisano_profile, rank
from .finite_field import ExtFieldElement, FieldElement, RootPair, binet, golden_roots, legendre, mult_order, sqrt_mod
from .sw_classifier import CounterexampleVerdict, compute_u, counterexample_verdict, is_semiprimitive, is_subfield_code

__version__ = "0.1.0"
