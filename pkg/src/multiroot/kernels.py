"""Brute-force histogram of root-multiplicity partitions over all monic polynomials.

Monic polynomials of degree ``n`` are indexed by ``0 <= i < q**n``; the base-q
digits of ``i`` are the coefficients below the leading 1.  Each polynomial is
factored by trial division against the irreducibles of degree ``<= n // 2``;
once the remaining cofactor has degree less than twice the next divisor's
degree it is either 1 or irreducible (and then occurs to the first power).

A partition of ``n`` is packed into an int64 code: parts in descending order,
each part ``a`` appended as ``code = (code << a) | 1``.  With ``n`` fixed the
code is unique.  Histograms are dense arrays aligned with the sorted code
table from :func:`partition_table`.

Two interchangeable backends exist: a numba-compiled loop and a vectorized
numpy path.  ``MULTIROOT_DISABLE_NUMBA=1`` (or a missing numba) selects numpy.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._jit import HAVE_NUMBA, njit
from .fields import irreducible_table
from .partitions import ONE, GPartition

MAX_CODE_DEGREE = 62
NUMPY_CHUNK = 1 << 15


def default_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def encode_parts(parts_desc) -> int:
    code = 0
    for a in parts_desc:
        code = (code << a) | 1
    return code


def _integer_partitions(n: int, max_part: int | None = None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield []
        return
    for a in range(min(n, max_part), 0, -1):
        for rest in _integer_partitions(n - a, a):
            yield [a] + rest


@lru_cache(maxsize=None)
def partition_table(n: int) -> tuple[np.ndarray, tuple[GPartition, ...]]:
    """Sorted codes of all partitions of ``n`` and the matching partitions."""
    if n > MAX_CODE_DEGREE:
        raise ValueError(f"degree {n} too large for int64 partition codes")
    pairs = sorted((encode_parts(p), p) for p in _integer_partitions(n))
    codes = np.array([c for c, _ in pairs], dtype=np.int64)
    parts = tuple(GPartition.from_parts(p, ONE) for _, p in pairs)
    return codes, parts


@njit(cache=True)
def _histogram_numba(q, n, irr, irr_deg, codes, start, stop):  # pragma: no cover - compiled
    counts = np.zeros(codes.shape[0], np.int64)
    f = np.empty(n + 1, np.int64)
    r = np.empty(n + 1, np.int64)
    quot = np.empty(n + 1, np.int64)
    mult = np.empty(n + 1, np.int64)
    n_irr = irr.shape[0]
    for idx in range(start, stop):
        x = idx
        for j in range(n):
            f[j] = x % q
            x //= q
        f[n] = 1
        deg = n
        for j in range(n + 1):
            mult[j] = 0
        for gi in range(n_irr):
            dg = irr_deg[gi]
            if 2 * dg > deg:
                break
            a = 0
            while deg >= dg:
                for j in range(deg + 1):
                    r[j] = f[j]
                for i in range(deg, dg - 1, -1):
                    c = r[i]
                    quot[i - dg] = c
                    if c != 0:
                        for j in range(dg + 1):
                            r[i - dg + j] = (r[i - dg + j] - c * irr[gi, j]) % q
                divisible = True
                for j in range(dg):
                    if r[j] != 0:
                        divisible = False
                        break
                if not divisible:
                    break
                deg -= dg
                for j in range(deg + 1):
                    f[j] = quot[j]
                a += 1
            if a > 0:
                mult[a] += dg
        if deg > 0:
            mult[1] += deg
        code = 0
        for a in range(n, 0, -1):
            for _ in range(mult[a]):
                code = (code << a) | 1
        counts[np.searchsorted(codes, code)] += 1
    return counts


def _histogram_numpy(q, n, irr, irr_deg, codes, start, stop):
    counts = np.zeros(codes.shape[0], np.int64)
    for lo in range(start, stop, NUMPY_CHUNK):
        hi = min(stop, lo + NUMPY_CHUNK)
        idx = np.arange(lo, hi, dtype=np.int64)
        size = idx.shape[0]
        f = np.zeros((size, n + 1), dtype=np.int64)
        x = idx.copy()
        for j in range(n):
            f[:, j] = x % q
            x //= q
        f[:, n] = 1
        deg = np.full(size, n, dtype=np.int64)
        mult = np.zeros((size, n + 1), dtype=np.int64)
        for gi in range(irr.shape[0]):
            dg = int(irr_deg[gi])
            g = irr[gi, : dg + 1]
            exps = np.zeros(size, dtype=np.int64)
            # rows whose cofactor could still contain g squared-or-more / g with a partner
            live = np.nonzero(2 * dg <= deg)[0]
            while live.size:
                r = f[live].copy()
                quot = np.zeros_like(r)
                for i in range(n, dg - 1, -1):
                    c = r[:, i]
                    quot[:, i - dg] = c
                    r[:, i - dg : i + 1] = (r[:, i - dg : i + 1] - c[:, None] * g) % q
                hit = ~r[:, :dg].any(axis=1)
                live = live[hit]
                f[live] = quot[hit]
                deg[live] -= dg
                exps[live] += 1
            has = np.nonzero(exps)[0]
            np.add.at(mult, (has, exps[has]), dg)
        rest = deg > 0
        mult[rest, 1] += deg[rest]
        code = np.zeros(size, dtype=np.int64)
        for a in range(n, 0, -1):
            reps = mult[:, a]
            for c in range(1, n // a + 1):
                sel = reps >= c
                code[sel] = (code[sel] << a) | 1
        counts += np.bincount(np.searchsorted(codes, code), minlength=codes.shape[0])
    return counts


def brute_histogram_array(q: int, n: int, backend: str | None = None, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Counts per partition of ``n`` (aligned with ``partition_table(n)``) over indices ``[start, stop)``."""
    backend = backend or default_backend()
    codes, _ = partition_table(n)
    if stop is None:
        stop = q**n
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if n == 0:
        # only the constant polynomial 1, with the empty partition
        return np.array([stop - start], dtype=np.int64)
    irr, irr_deg = irreducible_table(q, n // 2)
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable or disabled")
        return _histogram_numba(q, n, irr, irr_deg, codes, start, stop)
    return _histogram_numpy(q, n, irr, irr_deg, codes, start, stop)
