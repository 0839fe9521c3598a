"""Prime fields, dense monic polynomials over them, and monic irreducibles."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .partitions import ONE, GPartition
from .report import BudgetExceeded

DEFAULT_BUDGET = 10**7


def enumeration_budget(budget: int | None = None) -> int:
    """Explicit argument, else ``MULTIROOT_BUDGET``, else 10**7."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("MULTIROOT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def check_budget(q: int, n: int, budget: int | None = None) -> None:
    cap = enumeration_budget(budget)
    if q**n > cap:
        raise BudgetExceeded(f"{q}^{n} = {q**n} polynomials exceeds enumeration budget {cap}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def first_primes(count: int) -> list[int]:
    out = []
    n = 2
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 1
    return out


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")


def _check_q(q: int) -> None:
    PrimeField(q)


@dataclass(frozen=True)
class FqPoly:
    """Polynomial over F_q; ``coeffs`` run from the constant term upward."""

    q: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [x % self.q for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monic_from_index(cls, q: int, n: int, index: int) -> "FqPoly":
        """The ``index``-th monic polynomial of degree ``n`` (base-q digits are the low coefficients)."""
        c = []
        for _ in range(n):
            index, r = divmod(index, q)
            c.append(r)
        return cls(q, tuple(c) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def index(self) -> int:
        """Inverse of :meth:`monic_from_index` for monic polynomials."""
        return sum(c * self.q**i for i, c in enumerate(self.coeffs[:-1]))

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        if self.is_zero() or other.is_zero():
            return FqPoly(self.q, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FqPoly(self.q, tuple(out))

    def __pow__(self, e: int) -> "FqPoly":
        out = FqPoly(self.q, (1,))
        for _ in range(e):
            out = out * self
        return out

    def divmod_monic(self, g: "FqPoly") -> tuple["FqPoly", "FqPoly"]:
        if not g.is_monic():
            raise ValueError("divisor must be monic")
        q = self.q
        r = list(self.coeffs)
        dg = g.degree
        if len(r) - 1 < dg:
            return FqPoly(q, ()), self
        quot = [0] * (len(r) - dg)
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i] % q
            if c:
                quot[i - dg] = c
                for j, gj in enumerate(g.coeffs):
                    r[i - dg + j] = (r[i - dg + j] - c * gj) % q
        return FqPoly(q, tuple(quot)), FqPoly(q, tuple(r[:dg]))

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) or "0"


def mobius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def irreducible_count(q: int, d: int) -> int:
    """Number of monic irreducibles of degree ``d`` over F_q (necklace formula)."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    total = sum(mobius(d // s) * q**s for s in range(1, d + 1) if d % s == 0)
    return total // d


@lru_cache(maxsize=None)
def _irreducibles(q: int, max_deg: int) -> tuple[FqPoly, ...]:
    found: list[FqPoly] = []
    for d in range(1, max_deg + 1):
        divisors = [g for g in found if 2 * g.degree <= d]
        for idx in range(q**d):
            f = FqPoly.monic_from_index(q, d, idx)
            if not any(f.divmod_monic(g)[1].is_zero() for g in divisors):
                found.append(f)
    return tuple(found)


def enumerate_irreducibles(q: int, max_deg: int, budget: int | None = None) -> list[FqPoly]:
    """All monic irreducibles of degree ``<= max_deg``, ordered by degree then index.

    A monic polynomial of degree ``d`` is kept when no irreducible of degree at
    most ``d/2`` divides it.
    """
    _check_q(q)
    if max_deg < 1:
        return []
    check_budget(q, max_deg, budget)
    return list(_irreducibles(q, max_deg))


def irreducible_table(q: int, max_deg: int) -> tuple[np.ndarray, np.ndarray]:
    """Irreducibles as a padded ``(count, max_deg + 1)`` int64 coefficient array plus degrees."""
    irr = enumerate_irreducibles(q, max_deg) if max_deg >= 1 else []
    table = np.zeros((len(irr), max(max_deg, 0) + 1), dtype=np.int64)
    degs = np.zeros(len(irr), dtype=np.int64)
    for row, g in enumerate(irr):
        table[row, : len(g.coeffs)] = g.coeffs
        degs[row] = g.degree
    return table, degs


def factor_monic(f: FqPoly) -> list[tuple[FqPoly, int]]:
    """Trial-division factorization of a monic polynomial into (irreducible, exponent)."""
    if not f.is_monic():
        raise ValueError("polynomial must be monic")
    out = []
    cur = f
    for g in _irreducibles(f.q, f.degree // 2) if f.degree >= 2 else ():
        if 2 * g.degree > cur.degree:
            break
        a = 0
        while True:
            quot, rem = cur.divmod_monic(g)
            if not rem.is_zero():
                break
            cur = quot
            a += 1
        if a:
            out.append((g, a))
    if cur.degree > 0:
        out.append((cur, 1))
    return out


def mult_partition(f: FqPoly) -> GPartition:
    """Root-multiplicity partition: a degree-d factor with exponent a gives d parts equal to a."""
    counts: Counter = Counter()
    for g, a in factor_monic(f):
        counts[(a,)] += g.degree
    return GPartition._from_counter(counts, ONE)
