import itertools

import pytest

from multiroot.counting import wbar
from multiroot.partitions import mult_seq, parse_partition, specialize_phi, up_set
from multiroot.proofs import check_bijection, formal_partition, integer_family, product_rule_check
from multiroot.report import HypothesisViolation, condition_holds, theorem_instances


def brute_difference_sizes(k, b, e):
    """Sizes of both difference sets, by filtering (no specialization involved)."""
    b0, e0, rest = b[0], e[0], list(e[1:])
    src = up_set(formal_partition(k + b0, None, e0 - 1, rest)) - up_set(formal_partition(k, b0, e0 - 1, rest))
    dst = up_set(integer_family(k + b0, b, [e0 - 1] + rest)) - up_set(integer_family(k, b, e))
    return len(src), len(dst)


class TestBijection:
    @pytest.mark.parametrize("k, b, e", [(0, [2], [1]), (1, [2], [2]), (0, [2, 5], [2, 1]), (1, [1], [3]), (2, [3], [1])])
    def test_examples_pass(self, k, b, e):
        rep = check_bijection(k, b, e)
        assert rep.passed
        assert rep.comparisons["source_size"] == rep.comparisons["target_size"]
        assert rep.comparisons["census_match"]

    def test_sizes_from_independent_enumeration(self):
        src, dst = brute_difference_sizes(0, [2, 5], [2, 1])
        assert src == dst == check_bijection(0, [2, 5], [2, 1]).value

    def test_hypothesis_required(self):
        with pytest.raises(HypothesisViolation):
            check_bijection(0, [2, 3], [2, 1])

    def test_all_small_instances(self):
        count = 0
        for k, b, e in theorem_instances(7, min_parts=1):
            assert check_bijection(k, b, e).passed
            count += 1
        assert count > 50

    def test_violation_breaks_bijection(self):
        # 3 < 2*2: the specialization is no longer a bijection
        rep = check_bijection(0, [2, 3], [2, 1], strict=False, force=True)
        assert not rep.passed
        assert (rep.comparisons["source_size"], rep.comparisons["target_size"]) == (6, 5)
        assert any("outside the target" in d for d in rep.diagnostics)

    def test_difference_set_shape(self):
        # members of the formal difference set have every A-coefficient below b0
        k, b, e = 1, [3], [2]
        src = up_set(formal_partition(k + 3, None, 1, [])) - up_set(formal_partition(k, 3, 1, []))
        assert src
        for lam in src:
            assert all(v[0] < 3 for v, _ in lam.parts)
            assert mult_seq(specialize_phi(lam, {"A": 1, "B0": 3})) == mult_seq(lam)


class TestProductRule:
    def test_examples(self):
        assert product_rule_check(0, 2, [1], 2).value == 2
        rep = product_rule_check(1, 2, [2], 3)
        assert rep.value == rep.comparisons["rhs"] == 27
        assert rep.comparisons["b_factors"] == [3]
        assert product_rule_check(0, 1, [1, 1], 2).passed

    def test_sweep(self):
        for k, b, e in theorem_instances(7, min_parts=1):
            for q in (2, 3):
                assert product_rule_check(k, b[0], e, q).passed

    def test_lhs_by_direct_sum(self):
        lam = parse_partition("A (2A) B0", formal_partition(1, 2, 1, []).basis)
        assert lam == formal_partition(1, 2, 1, [])
        assert product_rule_check(1, 2, [2], 5).value == wbar(lam, 5, "dp")


def test_condition():
    assert condition_holds([2, 5, 9], [2, 1, 1])
    assert not condition_holds([2, 3], [2, 1])
    assert condition_holds([], [])
    assert condition_holds([7], [3])
    with pytest.raises(ValueError):
        condition_holds([1], [])


def test_instance_enumeration_is_exhaustive():
    got = {(k, tuple(b), tuple(e)) for k, b, e in theorem_instances(6)}
    brute = set()

    for m1 in range(0, 4):
        for bs in itertools.product(range(1, 7), repeat=m1):
            for es in itertools.product(range(1, 7), repeat=m1):
                used = sum(x * y for x, y in zip(bs, es))
                if used > 6 or not condition_holds(list(bs), list(es)):
                    continue
                for k in range(0, 7 - used):
                    brute.add((k, bs, es))
    assert got == brute
