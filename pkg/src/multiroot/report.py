"""Result records, error types and the shared hypothesis check."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Sequence


class HypothesisViolation(ValueError):
    """The ``b_i >= sum_{j<i} e_j b_j`` condition fails for the given (b, e)."""


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed the configured cap."""


class ProofStepFailure(AssertionError):
    """A step of the power-of-q argument was falsified by direct computation.

    Never expected on inputs satisfying the hypothesis.
    """


@dataclass
class CountReport:
    inputs: dict[str, Any]
    method: str
    value: int | None = None
    comparisons: dict[str, Any] = field(default_factory=dict)
    passed: bool = True
    diagnostics: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def validate_be(b: Sequence[int], e: Sequence[int]) -> None:
    if len(b) != len(e):
        raise ValueError(f"b and e must have equal length, got {len(b)} and {len(e)}")
    if any(x < 1 for x in b) or any(x < 1 for x in e):
        raise ValueError("all b_i and e_i must be >= 1")


def condition_holds(b: Sequence[int], e: Sequence[int]) -> bool:
    """``b_i >= sum_{j<i} e_j b_j`` for every ``1 <= i <= m`` (vacuous at i = 0)."""
    validate_be(b, e)
    acc = 0
    for i, (bi, ei) in enumerate(zip(b, e)):
        if i >= 1 and bi < acc:
            return False
        acc += ei * bi
    return True


def require_condition(b: Sequence[int], e: Sequence[int]) -> None:
    if not condition_holds(b, e):
        raise HypothesisViolation(f"b={list(b)}, e={list(e)} violates b_i >= sum_{{j<i}} e_j b_j")


def theorem_instances(max_weight: int, min_parts: int = 0):
    """Yield every ``(k, b, e)`` satisfying the condition with ``k + sum(e_i b_i) <= max_weight``.

    ``min_parts`` bounds ``m + 1`` from below (use 1 to skip the empty-lambda case).
    """

    def chains(budget: int, acc: int):
        # b_next >= acc (when the chain is nonempty), e_next >= 1
        yield (), ()
        lo = max(1, acc) if acc else 1
        for bi in range(lo, budget + 1):
            for ei in range(1, budget // bi + 1):
                for bs, es in chains(budget - bi * ei, acc + bi * ei):
                    yield (bi,) + bs, (ei,) + es

    for bs, es in chains(max_weight, 0):
        if len(bs) < min_parts:
            continue
        used = sum(x * y for x, y in zip(bs, es))
        for k in range(0, max_weight - used + 1):
            yield k, list(bs), list(es)
