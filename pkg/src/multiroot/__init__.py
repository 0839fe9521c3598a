"""Counting monic polynomials over prime fields by root multiplicities."""

from .counting import (
    brute_histogram,
    count_maxmult,
    interpolate_in_q,
    theorem_partition,
    w_count_brute,
    w_count_dp,
    wbar,
    wbar_theorem1,
)
from .fields import FqPoly, PrimeField, enumerate_irreducibles, irreducible_count, mult_partition
from .motivic import SymPoly, SymSeries, kbar_base, kbar_closed, kbar_recursion, specialize, zeta_series
from .partitions import (
    ONE,
    GPartition,
    VarBasis,
    elementary_merges,
    is_refinement_leq,
    mod_reduce,
    mult_seq,
    parse_partition,
    specialize_phi,
    up_set,
)
from .proofs import check_bijection, product_rule_check
from .report import BudgetExceeded, CountReport, HypothesisViolation, ProofStepFailure, condition_holds

__version__ = "0.1.0"
