"""Generalized partitions with vector-valued parts and the refinement order.

A partition is a multiset of nonzero vectors of nonnegative integers indexed
by a :class:`VarBasis`.  Ordinary integer partitions use the one-variable
basis ``ONE``.  Multiplicative text notation is supported, e.g.
``"1^3 2^2 5"`` or ``"A^2 (3A) B0"``.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

Vector = tuple[int, ...]


class ParseError(ValueError):
    """Malformed partition text; ``pos`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True)
class VarBasis:
    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("basis must have at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in basis {self.names}")

    @classmethod
    def of(cls, *names: str) -> "VarBasis":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def unit(self, name: str, scale: int = 1) -> Vector:
        v = [0] * len(self.names)
        v[self.index(name)] = scale
        return tuple(v)


ONE = VarBasis(("1",))


def formal_basis(m: int) -> VarBasis:
    """Basis ``A, B0, ..., Bm`` used by the formal-variable arguments."""
    return VarBasis(("A",) + tuple(f"B{i}" for i in range(m + 1)))


@dataclass(frozen=True)
class GPartition:
    """Canonical multiset of vector parts.

    ``parts`` holds ``(vector, multiplicity)`` pairs sorted descending
    lexicographically by vector, one entry per distinct vector.
    """

    basis: VarBasis
    parts: tuple[tuple[Vector, int], ...]

    @classmethod
    def from_parts(cls, parts: Iterable, basis: VarBasis = ONE) -> "GPartition":
        """Build from an iterable of parts; ints are accepted on 1-variable bases."""
        counts: Counter = Counter()
        for p in parts:
            counts[_as_vector(p, basis)] += 1
        return cls._from_counter(counts, basis)

    @classmethod
    def from_counts(cls, counts: Mapping, basis: VarBasis = ONE) -> "GPartition":
        c: Counter = Counter()
        for p, mult in counts.items():
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult}")
            if mult:
                c[_as_vector(p, basis)] += mult
        return cls._from_counter(c, basis)

    @classmethod
    def _from_counter(cls, counts: Counter, basis: VarBasis) -> "GPartition":
        items = tuple(sorted(((v, m) for v, m in counts.items() if m > 0), reverse=True))
        return cls(basis, items)

    @classmethod
    def empty(cls, basis: VarBasis = ONE) -> "GPartition":
        return cls(basis, ())

    @property
    def size(self) -> int:
        return sum(m for _, m in self.parts)

    @property
    def weight(self) -> Vector:
        w = [0] * len(self.basis)
        for v, m in self.parts:
            for i, x in enumerate(v):
                w[i] += m * x
        return tuple(w)

    def counter(self) -> Counter:
        return Counter(dict(self.parts))

    def expanded(self) -> list[Vector]:
        """Parts repeated by multiplicity, in canonical (descending) order."""
        return [v for v, m in self.parts for _ in range(m)]

    def integer_parts(self) -> list[int]:
        if len(self.basis) != 1:
            raise ValueError("integer_parts needs a 1-variable basis")
        return [v[0] for v in self.expanded()]

    def mult_seq(self) -> tuple[int, ...]:
        return mult_seq(self)

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"GPartition({format_partition(self)!r})"


def _as_vector(p, basis: VarBasis) -> Vector:
    if isinstance(p, int):
        if len(basis) != 1:
            raise ValueError("integer parts need a 1-variable basis")
        v: Vector = (p,)
    else:
        v = tuple(int(x) for x in p)
        if len(v) != len(basis):
            raise ValueError(f"part {p} does not match basis of size {len(basis)}")
    if any(x < 0 for x in v):
        raise ValueError(f"negative coordinate in part {v}")
    if not any(v):
        raise ValueError("zero part")
    return v


def _check_same_basis(a: GPartition, b: GPartition) -> None:
    if a.basis != b.basis:
        raise ValueError(f"basis mismatch: {a.basis.names} vs {b.basis.names}")


# ---------------------------------------------------------------- text format

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text_len = len(text)
    while pos < text_len:
        if text[pos].isspace() or text[pos] == ",":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "()^+":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_partition(text: str, basis: VarBasis = ONE) -> GPartition:
    """Parse multiplicative partition notation.

    Grammar (whitespace or commas separate terms)::

        expr := term*
        term := atom ("^" INT)?
        atom := INT | VAR | "(" lin ")"
        lin  := INT? VAR ("+" INT? VAR)*

    A bare ``INT`` is only meaningful on a 1-variable basis, where it denotes
    that multiple of the single variable.

    >>> str(parse_partition("1^3 2^2 5"))
    '5 2^2 1^3'
    """
    tokens = _tokenize(text)
    i = 0
    counts: Counter = Counter()

    def expect_int(tok) -> int:
        kind, val, pos = tok
        if kind != "int":
            raise ParseError("expected integer", text, pos)
        return int(val)

    def var_unit(name: str, scale: int, pos: int) -> Vector:
        if name not in basis.names:
            raise ParseError(f"unknown variable {name!r}", text, pos)
        return basis.unit(name, scale)

    while tokens[i][0] != "end":
        kind, val, pos = tokens[i]
        if kind == "int":
            if len(basis) != 1:
                raise ParseError("bare integer part needs a 1-variable basis", text, pos)
            n = int(val)
            if n == 0:
                raise ParseError("zero part", text, pos)
            part: Vector = (n,)
            i += 1
        elif kind == "name":
            part = var_unit(val, 1, pos)
            i += 1
        elif kind == "(":
            i += 1
            acc = [0] * len(basis)
            while True:
                k2, v2, p2 = tokens[i]
                scale = 1
                if k2 == "int":
                    scale = int(v2)
                    i += 1
                    k2, v2, p2 = tokens[i]
                if k2 != "name":
                    raise ParseError("expected variable name", text, p2)
                unit = var_unit(v2, scale, p2)
                acc = [a + u for a, u in zip(acc, unit)]
                i += 1
                if tokens[i][0] == "+":
                    i += 1
                    continue
                if tokens[i][0] != ")":
                    raise ParseError("expected ')'", text, tokens[i][2])
                i += 1
                break
            if not any(acc):
                raise ParseError("zero part", text, pos)
            part = tuple(acc)
        else:
            raise ParseError(f"unexpected {val!r}", text, pos)

        mult = 1
        if tokens[i][0] == "^":
            mult = expect_int(tokens[i + 1])
            if mult == 0:
                raise ParseError("zero multiplicity", text, tokens[i + 1][2])
            i += 2
        counts[part] += mult

    return GPartition._from_counter(counts, basis)


def format_part(v: Vector, basis: VarBasis) -> str:
    if len(basis) == 1:
        return str(v[0])
    terms = [(x, name) for x, name in zip(v, basis.names) if x]
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return "(" + "+".join(name if x == 1 else f"{x}{name}" for x, name in terms) + ")"


def format_partition(lam: GPartition) -> str:
    """Canonical text form; ``parse_partition`` inverts it on the same basis."""
    out = []
    for v, m in lam.parts:
        s = format_part(v, lam.basis)
        out.append(s if m == 1 else f"{s}^{m}")
    return " ".join(out)


# ------------------------------------------------------------ order structure

def _vadd(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def elementary_merges(lam: GPartition) -> set[GPartition]:
    """All partitions obtained by replacing two parts ``x, y`` with ``x + y``."""
    out = set()
    parts = lam.parts
    for i, (x, mx) in enumerate(parts):
        for j in range(i, len(parts)):
            y, my = parts[j]
            if i == j and mx < 2:
                continue
            c = lam.counter()
            c[x] -= 1
            c[y] -= 1
            c[_vadd(x, y)] += 1
            out.add(GPartition._from_counter(c, lam.basis))
    return out


def is_refinement_leq(lam: GPartition, mu: GPartition) -> bool:
    """True iff the parts of ``lam`` can be grouped into blocks summing to the parts of ``mu``."""
    _check_same_basis(lam, mu)
    if lam.weight != mu.weight or lam.size < mu.size:
        return False
    if lam == mu:
        return True
    items = lam.expanded()  # descending, so large parts are placed first
    bins = [list(v) for v in mu.expanded()]
    return _assign(items, 0, bins)


def _assign(items: list[Vector], pos: int, bins: list[list[int]]) -> bool:
    if pos == len(items):
        return all(not any(b) for b in bins)
    # every bin still open must be reachable by some remaining item
    if len(items) - pos < sum(1 for b in bins if any(b)):
        return False
    x = items[pos]
    tried = set()
    for bi, cap in enumerate(bins):
        key = tuple(cap)
        if key in tried:
            continue
        tried.add(key)
        if all(c >= xi for c, xi in zip(cap, x)):
            for d, xi in enumerate(x):
                cap[d] -= xi
            ok = _assign(items, pos + 1, bins)
            for d, xi in enumerate(x):
                cap[d] += xi
            if ok:
                return True
    return False


def up_set(lam: GPartition) -> set[GPartition]:
    """``{mu : lam <= mu}`` as the closure of ``lam`` under elementary merges."""
    seen = {lam}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        for nxt in elementary_merges(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def mult_seq(lam: GPartition) -> tuple[int, ...]:
    return tuple(sorted(m for _, m in lam.parts))


def vector_partitions(weight: Vector, basis: VarBasis | None = None) -> Iterator[GPartition]:
    """Every partition of the weight vector, generated directly (not via merges)."""
    basis = basis or (ONE if len(weight) == 1 else VarBasis(tuple(f"x{i}" for i in range(len(weight)))))
    weight = tuple(weight)

    # candidate parts: all nonzero vectors <= weight, descending
    def boxes(w: Vector) -> list[Vector]:
        out: list[Vector] = [()]
        for bound in w:
            out = [v + (x,) for v in out for x in range(bound + 1)]
        return sorted((v for v in out if any(v)), reverse=True)

    def rec(rem: Vector, max_part: Vector | None) -> Iterator[list[Vector]]:
        if not any(rem):
            yield []
            return
        for p in boxes(rem):
            if max_part is not None and p > max_part:
                continue
            rest = tuple(r - x for r, x in zip(rem, p))
            for tail in rec(rest, p):
                yield [p] + tail

    for parts in rec(weight, None):
        yield GPartition.from_parts(parts, basis)


# ---------------------------------------------------------- proof machinery

def specialize_phi(lam: GPartition, assignment: Mapping[str, int]) -> GPartition:
    """Send each variable to a positive integer; colliding images add multiplicities."""
    missing = [n for n in lam.basis.names if n not in assignment]
    if missing:
        raise ValueError(f"assignment missing variables {missing}")
    weights = [int(assignment[n]) for n in lam.basis.names]
    if any(w < 1 for w in weights):
        raise ValueError("assignment values must be positive")
    counts: Counter = Counter()
    for v, m in lam.parts:
        counts[(sum(x * w for x, w in zip(v, weights)),)] += m
    return GPartition._from_counter(counts, ONE)


def mod_reduce(lam: GPartition, b: int) -> tuple[GPartition, int]:
    """Reduce every part modulo ``b``; returns ``(reduced, total_reduction)``.

    Parts that reduce to zero are dropped.
    """
    if len(lam.basis) != 1:
        raise ValueError("mod_reduce needs a 1-variable partition")
    if b < 1:
        raise ValueError("modulus must be positive")
    counts: Counter = Counter()
    total = 0
    for (x,), m in lam.parts:
        r = x % b
        total += (x - r) * m
        if r:
            counts[(r,)] += m
    return GPartition._from_counter(counts, ONE), total


def integer_partition(parts: Iterable[int]) -> GPartition:
    return GPartition.from_parts(list(parts), ONE)
