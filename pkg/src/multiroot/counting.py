"""Exact counts of monic polynomials over F_q by root-multiplicity partition."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .fields import _check_q, check_budget, first_primes, irreducible_count
from .kernels import brute_histogram_array, default_backend, partition_table
from .partitions import ONE, GPartition, mult_seq, up_set
from .report import require_condition

METHODS = ("brute", "dp")


@lru_cache(maxsize=64)
def _histogram(q: int, n: int, backend: str) -> dict[GPartition, int]:
    counts = brute_histogram_array(q, n, backend=backend)
    _, parts = partition_table(n)
    return {p: int(c) for p, c in zip(parts, counts) if c}


def brute_histogram(q: int, n: int, budget: int | None = None, backend: str | None = None) -> dict[GPartition, int]:
    """``{partition: count}`` over all ``q**n`` monic polynomials of degree ``n``."""
    _check_q(q)
    check_budget(q, n, budget)
    return _histogram(q, n, backend or default_backend())


def _require_integer_partition(lam: GPartition) -> int:
    if len(lam.basis) != 1:
        raise ValueError("brute-force counting needs an integer (1-variable) partition")
    return lam.weight[0]


def w_count_brute(lam: GPartition, q: int, budget: int | None = None, backend: str | None = None) -> int:
    n = _require_integer_partition(lam)
    return brute_histogram(q, n, budget, backend).get(lam, 0)


def _multinomial(total: int, picks: Sequence[int]) -> int:
    # total! / (prod picks! * (total - sum picks)!), with total possibly huge
    s = sum(picks)
    if s > total:
        return 0
    num = 1
    for i in range(s):
        num *= total - i
    den = 1
    for c in picks:
        den *= factorial(c)
    return num // den


def _allocations(remaining: tuple[int, ...], d: int, slots: int):
    """Per-label counts of degree-``d`` irreducibles: ``c_i * d <= remaining_i``, ``sum c_i <= slots``."""

    def rec(i: int, left: int):
        if i == len(remaining):
            yield ()
            return
        for c in range(min(remaining[i] // d, left) + 1):
            for tail in rec(i + 1, left - c):
                yield (c,) + tail

    return rec(0, slots)


@lru_cache(maxsize=None)
def w_count_dp(e: tuple[int, ...], q: int) -> int:
    """Number of ways to pick pairwise disjoint sets of monic irreducibles, set i of total degree ``e[i]``.

    Equals ``w_lambda`` for any partition whose multiplicity sequence is ``e``.
    Dynamic program over irreducible degree classes ``d = 1 .. max(e)``; the
    state is the tuple of degrees still to fill per label.
    """
    _check_q(q)
    e = tuple(sorted(e))
    if any(x < 1 for x in e):
        raise ValueError("multiplicities must be positive")
    if not e:
        return 1
    states = {e: 1}
    for d in range(1, max(e) + 1):
        n_d = irreducible_count(q, d)
        nxt: dict[tuple[int, ...], int] = {}
        for rem, ways in states.items():
            for alloc in _allocations(rem, d, n_d):
                new = tuple(r - c * d for r, c in zip(rem, alloc))
                nxt[new] = nxt.get(new, 0) + ways * _multinomial(n_d, alloc)
        states = nxt
    return states.get(tuple(0 for _ in e), 0)


def w_count(lam: GPartition, q: int, method: str = "dp", budget: int | None = None) -> int:
    if method == "brute":
        return w_count_brute(lam, q, budget)
    if method == "dp":
        return w_count_dp(mult_seq(lam), q)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=4096)
def _up_set_cached(lam: GPartition) -> frozenset[GPartition]:
    return frozenset(up_set(lam))


def wbar(lam: GPartition, q: int, method: str = "dp", budget: int | None = None) -> int:
    """Sum of ``w`` over every partition at least as coarse as ``lam``."""
    if method == "brute":
        n = _require_integer_partition(lam)
        hist = brute_histogram(q, n, budget)
        return sum(hist.get(mu, 0) for mu in _up_set_cached(lam))
    if method == "dp":
        _check_q(q)
        return sum(w_count_dp(mult_seq(mu), q) for mu in _up_set_cached(lam))
    raise ValueError(f"unknown method {method!r}")


def theorem_partition(k: int, b: Sequence[int], e: Sequence[int]) -> GPartition:
    """The integer partition ``1^k b_0^{e_0} ... b_m^{e_m}``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    parts = [1] * k
    for bi, ei in zip(b, e):
        parts += [bi] * ei
    return GPartition.from_parts(parts, ONE)


def wbar_theorem1(k: int, b: Sequence[int], e: Sequence[int], q: int) -> int:
    """Closed form ``q^(k + sum e_i)``; raises :class:`HypothesisViolation` outside its range."""
    _check_q(q)
    if k < 0:
        raise ValueError("k must be >= 0")
    require_condition(b, e)
    return q ** (k + sum(e))


def count_maxmult(n: int, b: int, q: int) -> int:
    """Monic polynomials of degree ``n`` whose roots all have multiplicity ``<= b - 1``."""
    _check_q(q)
    if n < 0 or b < 1:
        raise ValueError("need n >= 0 and b >= 1")
    if n < b:
        return q**n
    return q**n - q ** (n - b + 1)


def _lagrange(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    coeffs = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # multiply basis polynomial by (x - xj)
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
            denom *= xi - xj
        for t, c in enumerate(basis):
            coeffs[t] += yi * c / denom
    return coeffs


def interpolate_in_q(lam: GPartition, statistic: str = "w", method: str = "dp", budget: int | None = None) -> list[int]:
    """Integer coefficients (constant term first) of the polynomial in q giving the statistic.

    Uses the first ``weight + 1`` primes; the count has degree at most ``weight`` in q.
    """
    n = _require_integer_partition(lam)
    if statistic not in ("w", "wbar"):
        raise ValueError(f"unknown statistic {statistic!r}")
    fn = w_count if statistic == "w" else wbar
    xs = first_primes(n + 1)
    ys = [fn(lam, q, method, budget) for q in xs]
    coeffs = _lagrange(xs, ys)
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError(f"non-integral interpolation for {lam}: {coeffs}")
    out = [int(c) for c in coeffs]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def format_q_poly(coeffs: Sequence[int], var: str = "q") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


__all__ = [
    "METHODS",
    "brute_histogram",
    "count_maxmult",
    "format_q_poly",
    "interpolate_in_q",
    "theorem_partition",
    "w_count",
    "w_count_brute",
    "w_count_dp",
    "wbar",
    "wbar_theorem1",
]
