"""Truncated power series in t over the free polynomial ring on S_1, S_2, ...

``S_n`` stands for the class of the n-th symmetric power of a variety X
(``S_0 = 1``).  No relations among the ``S_n`` are imposed, so any identity
that holds here holds for every X.  The generating series of "lambda or
worse" classes over added free points is computed two ways: by the peeling
recursion and by the closed formula, starting from the motivic zeta function
``Z(t) = sum S_n t^n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .report import require_condition, validate_be

# Sparse monomial: sorted tuple of (symbol index n >= 1, exponent >= 1).
Monomial = tuple[tuple[int, int], ...]

DEFAULT_TRUNCATION = 10


class DivisibilityError(ArithmeticError):
    """A series expected to be divisible by a power of t is not."""


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for n, k in b:
        d[n] = d.get(n, 0) + k
    return tuple(sorted(d.items()))


class SymPoly:
    """Integer polynomial in the symbols ``S_n``; immutable, canonical term dict."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> "SymPoly":
        return cls({(): c})

    @classmethod
    def sym(cls, n: int, power: int = 1) -> "SymPoly":
        """``S_n ** power``; ``S_0`` is 1."""
        if n < 0:
            raise ValueError("symbol index must be >= 0")
        if n == 0 or power == 0:
            return cls.const(1)
        return cls({((n, power),): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SymPoly.const(other)
        return isinstance(other, SymPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "SymPoly":
        if isinstance(other, int):
            other = SymPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SymPoly(out)

    def __neg__(self) -> "SymPoly":
        return SymPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "SymPoly":
        return self + (-other)

    __radd__ = __add__

    def __rsub__(self, other) -> "SymPoly":
        return -self + other

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, int):
            return SymPoly({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                out[m] = out.get(m, 0) + ca * cb
        return SymPoly(out)

    __rmul__ = __mul__

    def evaluate(self, rule: Callable[[int], int]) -> int:
        total = 0
        for mono, c in self.terms.items():
            v = c
            for n, k in mono:
                v *= rule(n) ** k
            total += v
        return total

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self.sorted_terms():
            body = "*".join(f"S{n}" if k == 1 else f"S{n}^{k}" for n, k in mono)
            mag = abs(c)
            if not body:
                text = str(mag)
            else:
                text = body if mag == 1 else f"{mag}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        sign, text = pieces[0]
        out = ("-" if sign == "-" else "") + text
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"SymPoly({self})"


ZERO = SymPoly()
ONE_POLY = SymPoly.const(1)


@dataclass(frozen=True)
class SymSeries:
    """``c_0 + c_1 t + ... + c_T t^T + O(t^(T+1))``."""

    coeffs: tuple[SymPoly, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the t^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_list(cls, coeffs: Sequence, order: int) -> "SymSeries":
        c = [x if isinstance(x, SymPoly) else SymPoly.const(int(x)) for x in coeffs[: order + 1]]
        c += [ZERO] * (order + 1 - len(c))
        return cls(tuple(c))

    @classmethod
    def monomial(cls, coeff: SymPoly, power: int, order: int) -> "SymSeries":
        c = [ZERO] * (order + 1)
        if power <= order:
            c[power] = coeff
        return cls(tuple(c))

    def truncate(self, order: int) -> "SymSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to O(t^{self.order + 1})")
        return SymSeries(self.coeffs[: order + 1])

    def __add__(self, other: "SymSeries") -> "SymSeries":
        n = min(self.order, other.order)
        return SymSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __neg__(self) -> "SymSeries":
        return SymSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        return self + (-other)

    def __mul__(self, other) -> "SymSeries":
        if isinstance(other, (SymPoly, int)):
            return SymSeries(tuple(c * other for c in self.coeffs))
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __str__(self) -> str:
        return format_series(self)


def series_mul(f: SymSeries, g: SymSeries) -> SymSeries:
    n = min(f.order, g.order)
    out = [ZERO] * (n + 1)
    for i in range(n + 1):
        fi = f.coeffs[i]
        if fi.is_zero():
            continue
        for j in range(n + 1 - i):
            gj = g.coeffs[j]
            if not gj.is_zero():
                out[i + j] = out[i + j] + fi * gj
    return SymSeries(tuple(out))


def series_inverse(f: SymSeries) -> SymSeries:
    """Multiplicative inverse; the constant term must be exactly 1."""
    if f.coeffs[0] != ONE_POLY:
        raise ArithmeticError(f"constant term {f.coeffs[0]} is not 1")
    n = f.order
    inv = [ONE_POLY] + [ZERO] * n
    for i in range(1, n + 1):
        acc = ZERO
        for j in range(1, i + 1):
            if not f.coeffs[j].is_zero():
                acc = acc + f.coeffs[j] * inv[i - j]
        inv[i] = -acc
    return SymSeries(tuple(inv))


def series_substitute_ta(f: SymSeries, a: int) -> SymSeries:
    """``f(t^a)`` at the same truncation order."""
    if a < 1:
        raise ValueError("a must be >= 1")
    n = f.order
    out = [ZERO] * (n + 1)
    for i, c in enumerate(f.coeffs):
        if i * a > n:
            break
        out[i * a] = c
    return SymSeries(tuple(out))


def series_shift_down(f: SymSeries, a: int) -> SymSeries:
    """Divide by ``t^a``; the result is known to order ``f.order - a``."""
    if a < 0:
        raise ValueError("shift must be >= 0")
    if a > f.order:
        raise ValueError(f"shift {a} exceeds truncation order {f.order}")
    bad = [i for i in range(a) if not f.coeffs[i].is_zero()]
    if bad:
        raise DivisibilityError(f"series not divisible by t^{a}: coefficient of t^{bad[0]} is {f.coeffs[bad[0]]}")
    return SymSeries(f.coeffs[a:])


def zeta_series(order: int) -> SymSeries:
    """Motivic zeta function ``1 + S_1 t + ... + S_T t^T``."""
    if order < 0:
        raise ValueError("truncation must be >= 0")
    return SymSeries(tuple(SymPoly.sym(n) for n in range(order + 1)))


def kbar_base(a: int, order: int = DEFAULT_TRUNCATION) -> SymSeries:
    """``t^-a Z(t) (1 - 1/Z(t^a))``, the series for a single part ``a >= 2``."""
    if a < 2:
        raise ValueError("a must be >= 2")
    work = order + a
    z = zeta_series(work)
    numer = z - z * series_inverse(series_substitute_ta(z, a))
    return series_shift_down(numer, a)


def _bracket(e: Sequence[int]) -> SymPoly:
    """``S_{e_0 - 1} * S_{e_1} * ... * S_{e_m}``."""
    out = SymPoly.sym(e[0] - 1)
    for x in e[1:]:
        out = out * SymPoly.sym(x)
    return out


def _check_inputs(b: Sequence[int], e: Sequence[int], order: int, force: bool) -> None:
    validate_be(b, e)
    if order < 0:
        raise ValueError("truncation must be >= 0")
    if not force:
        require_condition(b, e)


def kbar_recursion(b: Sequence[int], e: Sequence[int], order: int = DEFAULT_TRUNCATION, force: bool = False) -> SymSeries:
    """Series for ``1^* b_0^{e_0} ... b_m^{e_m}`` by peeling one copy of ``b_0`` per step.

    Each step is ``K_prev t^-b0 - Z(t) t^-b0 / Z(t^b0) * S_{e0-1} prod S_{e_i}``;
    once ``e_0`` reaches zero the instance continues with ``(b_1.., e_1..)``.
    The base case (no parts) is ``Z(t)``.
    """
    b, e = list(b), list(e)
    _check_inputs(b, e, order, force)
    return _recurse(b, e, order)


def _recurse(b: list[int], e: list[int], order: int) -> SymSeries:
    if not b:
        return zeta_series(order)
    if e[0] == 0:
        return _recurse(b[1:], e[1:], order)
    b0 = b[0]
    work = order + b0
    prev = _recurse(b, [e[0] - 1] + e[1:], work)
    z = zeta_series(work)
    ratio = z * series_inverse(series_substitute_ta(z, b0))
    numer = prev - ratio * _bracket(e)
    return series_shift_down(numer, b0)


def kbar_closed(b: Sequence[int], e: Sequence[int], order: int = DEFAULT_TRUNCATION, force: bool = False) -> SymSeries:
    """Closed form of the same series.

    ``t^-W (Z(t) - sum_i Z(t)/Z(t^b_i) * prod_{l>i} S_{e_l} t^{e_l b_l} * sum_{j<e_i} S_j t^{j b_i})``
    with ``W = sum e_i b_i``.
    """
    b, e = list(b), list(e)
    _check_inputs(b, e, order, force)
    shift = sum(x * y for x, y in zip(b, e))
    work = order + shift
    z = zeta_series(work)
    total = z
    for i, (bi, ei) in enumerate(zip(b, e)):
        ratio = z * series_inverse(series_substitute_ta(z, bi))
        head_power = 0
        head = ONE_POLY
        for bl, el in zip(b[i + 1 :], e[i + 1 :]):
            head = head * SymPoly.sym(el)
            head_power += el * bl
        inner = [ZERO] * (work + 1)
        for j in range(ei):
            p = j * bi + head_power
            if p <= work:
                inner[p] = inner[p] + SymPoly.sym(j) * head
        total = total - ratio * SymSeries(tuple(inner))
    return series_shift_down(total, shift)


def specialize(s: SymSeries, rule: Mapping[int, int] | Callable[[int], int]) -> list[int]:
    """Evaluate each coefficient with ``S_n -> rule(n)``."""
    if callable(rule):
        fn = rule
    else:

        def fn(n: int) -> int:
            if n not in rule:
                raise KeyError(f"specialization rule has no value for S{n}")
            return rule[n]

    return [c.evaluate(fn) for c in s.coeffs]


def affine_rule(q: int, d: int = 1) -> Callable[[int], int]:
    """Point counts of ``Sym^n`` of affine d-space over F_q: ``S_n -> q^(n d)``."""
    return lambda n: q ** (n * d)


def format_series(s: SymSeries) -> str:
    pieces = []
    for i, c in enumerate(s.coeffs):
        if c.is_zero():
            continue
        tpow = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        body = str(c)
        if not tpow:
            pieces.append(body)
            continue
        if len(c.terms) == 1:
            (mono, coef), = c.terms.items()
            if not mono and abs(coef) == 1:
                pieces.append(("-" if coef < 0 else "") + tpow)
            else:
                pieces.append(f"{body}*{tpow}")
        else:
            pieces.append(f"({body})*{tpow}")
    text = " + ".join(pieces) if pieces else "0"
    return text.replace("+ -", "- ")


def series_to_json(s: SymSeries) -> dict:
    return {
        "order": s.order,
        "terms": [
            {
                "power": i,
                "monomials": [
                    {"coeff": coef, "exponents": {f"S{n}": k for n, k in mono}} for mono, coef in c.sorted_terms()
                ],
            }
            for i, c in enumerate(s.coeffs)
            if not c.is_zero()
        ],
    }
