"""Direct computational checks of the steps behind the power-of-q identity.

``check_bijection`` enumerates both difference sets of up-sets and tests that
specialization (A -> 1, B_i -> b_i) is a multiplicity-preserving bijection
between them, together with the residue bookkeeping that underlies it.
``product_rule_check`` compares both sides of the formal product rule.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .counting import w_count_dp, wbar
from .fields import _check_q
from .partitions import ONE, GPartition, formal_basis, mod_reduce, mult_seq, specialize_phi, up_set
from .report import CountReport, ProofStepFailure, require_condition, validate_be


def formal_partition(a_count: int, a_block: int | None, b0_count: int, e_rest: Sequence[int]) -> GPartition:
    """``A^a_count (a_block A) B0^b0_count B1^e1 ... Bm^em`` over the basis A, B0..Bm."""
    m = len(e_rest)
    basis = formal_basis(m)
    counts: Counter = Counter()
    if a_count:
        counts[basis.unit("A")] += a_count
    if a_block:
        counts[basis.unit("A", a_block)] += 1
    if b0_count:
        counts[basis.unit("B0")] += b0_count
    for i, ei in enumerate(e_rest, start=1):
        counts[basis.unit(f"B{i}")] += ei
    return GPartition.from_counts(counts, basis)


def integer_family(ones: int, b: Sequence[int], e: Sequence[int]) -> GPartition:
    counts: Counter = Counter()
    if ones:
        counts[(1,)] += ones
    for bi, ei in zip(b, e):
        if ei:
            counts[(bi,)] += ei
    return GPartition.from_counts(counts, ONE)


def _residue_trace(mu: GPartition, b: Sequence[int]) -> list[int]:
    """Total reductions when reducing successively modulo b_m, ..., b_0."""
    totals = []
    cur = mu
    for bi in reversed(b):
        cur, red = mod_reduce(cur, bi)
        totals.append(red)
    return totals[::-1]


def check_bijection(
    k: int, b: Sequence[int], e: Sequence[int], strict: bool = True, force: bool = False
) -> CountReport:
    """Verify that specialization maps ``R_formal \\ R_formal_excl`` bijectively onto ``R_int \\ R_int_excl``.

    Also checks that the image keeps each multiplicity sequence and that the
    successive reductions modulo ``b_m, ..., b_0`` remove exactly
    ``e_m b_m, ..., e_1 b_1, (e_0 - 1) b_0`` from every image.  With
    ``strict`` a failure raises :class:`ProofStepFailure`; ``force`` skips
    the hypothesis check so its failure modes can be observed.
    """
    validate_be(b, e)
    if not b:
        raise ValueError("need m >= 0 (at least one b_i)")
    if k < 0:
        raise ValueError("k must be >= 0")
    if not force:
        require_condition(b, e)
    b0, e0 = b[0], e[0]
    rest = list(e[1:])

    src_lo = formal_partition(k + b0, None, e0 - 1, rest)
    src_hi = formal_partition(k, b0, e0 - 1, rest)
    dst_lo = integer_family(k + b0, b, [e0 - 1] + rest)
    dst_hi = integer_family(k, b, e)

    src = up_set(src_lo) - up_set(src_hi)
    dst = up_set(dst_lo) - up_set(dst_hi)
    assignment = {"A": 1, **{f"B{i}": bi for i, bi in enumerate(b)}}

    diagnostics = []
    image: dict[GPartition, GPartition] = {}
    for lam in sorted(src, key=str):
        mu = specialize_phi(lam, assignment)
        if mu not in dst:
            diagnostics.append(f"image of {lam} is {mu}, outside the target difference set")
        if mu in image:
            diagnostics.append(f"{image[mu]} and {lam} both map to {mu}")
        image[mu] = lam
        if mult_seq(mu) != mult_seq(lam):
            diagnostics.append(f"multiplicity sequence changed: {lam} -> {mu}")
        expected = [ei * bi for bi, ei in zip(b, e)]
        expected[0] -= b0
        trace = _residue_trace(mu, b)
        if trace != expected:
            diagnostics.append(f"residue reductions of {mu} are {trace}, expected {expected}")
    missed = dst - set(image)
    for mu in sorted(missed, key=str):
        diagnostics.append(f"{mu} is not hit")

    src_census = Counter(mult_seq(x) for x in src)
    dst_census = Counter(mult_seq(x) for x in dst)
    report = CountReport(
        inputs={"k": k, "b": list(b), "e": list(e)},
        method="bijection",
        value=len(src),
        comparisons={
            "source_size": len(src),
            "target_size": len(dst),
            "census_match": src_census == dst_census,
        },
        passed=not diagnostics and src_census == dst_census,
        diagnostics=diagnostics,
    )
    if strict and not report.passed:
        raise ProofStepFailure(f"bijection check failed for k={k}, b={b}, e={e}: {diagnostics[:3]}")
    return report


def product_rule_check(k: int, b0: int, e: Sequence[int], q: int, strict: bool = True) -> CountReport:
    """Compare both sides of the formal product rule at a prime ``q``.

    Left side: ``wbar(A^k (b0 A) B0^(e0-1) B1^e1 ... Bm^em)`` via merge closure
    and the DP count.  Right side: the product of the separate ``wbar``
    factors, with ``wbar(A^k (b0 A))`` also compared against ``q^(k+1)``.
    """
    _check_q(q)
    if k < 0 or b0 < 1 or not e or any(x < 1 for x in e):
        raise ValueError("need k >= 0, b0 >= 1 and a nonempty e with entries >= 1")
    rest = list(e[1:])
    lhs_part = formal_partition(k, b0, e[0] - 1, rest)
    lhs = wbar(lhs_part, q, "dp")

    a_part = formal_partition(k, b0, 0, [])
    a_factor = wbar(a_part, q, "dp")
    b_factors = [_wbar_single_var(x, q) for x in [e[0] - 1] + rest]
    rhs = a_factor
    for f in b_factors:
        rhs *= f

    diagnostics = []
    if lhs != rhs:
        diagnostics.append(f"product rule: {lhs} != {rhs}")
    if a_factor != q ** (k + 1):
        diagnostics.append(f"wbar(A^k (b0 A)) = {a_factor} != q^(k+1) = {q ** (k + 1)}")
    report = CountReport(
        inputs={"k": k, "b0": b0, "e": list(e), "q": q, "lambda": str(lhs_part)},
        method="product_rule",
        value=lhs,
        comparisons={"rhs": rhs, "a_factor": a_factor, "b_factors": b_factors},
        passed=not diagnostics,
        diagnostics=diagnostics,
    )
    if strict and not report.passed:
        raise ProofStepFailure(f"product rule failed for k={k}, b0={b0}, e={e}, q={q}: {diagnostics}")
    return report


def _wbar_single_var(count: int, q: int) -> int:
    """``wbar(B^count)`` by DP over all partitions of ``count``."""
    if count == 0:
        return 1
    lam = GPartition.from_parts([1] * count, ONE)
    return sum(w_count_dp(mult_seq(mu), q) for mu in up_set(lam))
