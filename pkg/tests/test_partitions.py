import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiroot.partitions import (
    ONE,
    GPartition,
    ParseError,
    VarBasis,
    elementary_merges,
    format_partition,
    is_refinement_leq,
    mod_reduce,
    mult_seq,
    parse_partition,
    specialize_phi,
    up_set,
    vector_partitions,
)

AB = VarBasis.of("A", "B0")


def P(text, basis=ONE):
    return parse_partition(text, basis)


def all_partitions(n):
    return list(vector_partitions((n,)))


class TestParse:
    def test_multiplicative(self):
        lam = P("1^3 2^2 5")
        assert dict(lam.parts) == {(1,): 3, (2,): 2, (5,): 1}

    def test_concatenated_digit_notation(self):
        assert P("1 2 2 5 9").integer_parts() == [9, 5, 2, 2, 1]

    def test_formal_variables(self):
        lam = P("A^2 (3A) B0", AB)
        assert dict(lam.parts) == {(1, 0): 2, (3, 0): 1, (0, 1): 1}

    def test_commas_and_sums(self):
        assert P("1,1, 2") == P("1^2 2")
        assert P("(A+2B0) A", AB).parts == (((1, 2), 1), ((1, 0), 1))

    def test_empty(self):
        lam = P("")
        assert lam.size == 0 and lam.weight == (0,)

    @pytest.mark.parametrize(
        "text, basis, pos",
        [
            ("1 0 2", ONE, 2),
            ("1 x", ONE, 2),
            ("A C", AB, 2),
            ("3", AB, 0),
            ("1 ^", ONE, 3),
            ("(2A", AB, 3),
            ("1 # 2", ONE, 2),
            ("2^0", ONE, 2),
        ],
    )
    def test_errors_report_position(self, text, basis, pos):
        with pytest.raises(ParseError) as info:
            parse_partition(text, basis)
        assert info.value.pos == pos

    def test_round_trip_exhaustive(self):
        for n in range(9):
            for lam in all_partitions(n):
                assert parse_partition(format_partition(lam)) == lam

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(any), max_size=6))
    def test_round_trip_vector(self, parts):
        lam = GPartition.from_parts(parts, AB)
        assert parse_partition(format_partition(lam), AB) == lam


class TestMerges:
    def test_three_parts(self):
        assert elementary_merges(P("1 2 3")) == {P("3 3"), P("1 5"), P("2 4")}

    def test_small(self):
        assert elementary_merges(P("1^2")) == {P("2")}
        assert elementary_merges(P("6")) == set()

    def test_size_and_weight(self):
        for lam in all_partitions(7):
            for mu in elementary_merges(lam):
                assert mu.size == lam.size - 1 and mu.weight == lam.weight


class TestOrder:
    def test_examples(self):
        assert is_refinement_leq(P("1 1 2 4 7"), P("3 5 7"))
        assert is_refinement_leq(P("1 2 3"), P("3 3"))
        assert is_refinement_leq(P("3 3"), P("6"))
        assert not is_refinement_leq(P("2 2"), P("1 3"))

    def test_empty_is_only_below_itself(self):
        e = GPartition.empty()
        assert is_refinement_leq(e, e)
        assert not is_refinement_leq(e, P("1"))
        assert not is_refinement_leq(P("1"), e)

    def test_basis_mismatch(self):
        with pytest.raises(ValueError):
            is_refinement_leq(P("1"), P("A", AB))

    def test_partial_order_axioms(self):
        for n in range(9):
            parts = all_partitions(n)
            leq = {(a, b): is_refinement_leq(a, b) for a in parts for b in parts}
            for a in parts:
                assert leq[a, a]
            for a, b in itertools.product(parts, repeat=2):
                if a != b:
                    assert not (leq[a, b] and leq[b, a])
            for a, b, c in itertools.product(parts, repeat=3):
                if leq[a, b] and leq[b, c]:
                    assert leq[a, c]

    def test_order_matches_merge_reachability(self):
        for n in range(8):
            for lam in all_partitions(n):
                ups = up_set(lam)
                for mu in all_partitions(n):
                    assert (mu in ups) == is_refinement_leq(lam, mu)


class TestUpSet:
    def test_examples(self):
        assert up_set(P("1^3")) == {P("1 1 1"), P("1 2"), P("3")}
        assert up_set(P("6")) == {P("6")}
        assert up_set(P("1 2")) == {P("1 2"), P("3")}

    def test_filter_equivalence(self):
        for n in range(9):
            everything = all_partitions(n)
            for lam in everything:
                expected = {mu for mu in everything if is_refinement_leq(lam, mu)}
                assert up_set(lam) == expected

    def test_filter_equivalence_two_variables(self):
        for w in [(2, 1), (2, 2), (3, 1), (1, 3)]:
            everything = list(vector_partitions(w, AB))
            for lam in everything:
                expected = {mu for mu in everything if is_refinement_leq(lam, mu)}
                assert up_set(lam) == expected

    def test_partition_counts(self):
        # p(n) for n = 0..8
        assert [len(all_partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


class TestMultSeq:
    def test_examples(self):
        assert mult_seq(P("1^3 2^2 5")) == (1, 2, 3)
        assert mult_seq(P("A^2 (3A) B0", AB)) == (1, 1, 2)
        assert mult_seq(GPartition.empty()) == ()


class TestSpecialize:
    def test_examples(self):
        assert specialize_phi(P("A^2 (3A)", AB), {"A": 1, "B0": 5}) == P("1^2 3")
        assert specialize_phi(P("A B0", AB), {"A": 1, "B0": 2}) == P("1 2")
        assert specialize_phi(P("A B0", AB), {"A": 1, "B0": 1}) == P("1^2")

    def test_missing_variable(self):
        with pytest.raises(ValueError):
            specialize_phi(P("A B0", AB), {"A": 1})

    @settings(max_examples=60)
    @given(
        st.lists(st.tuples(st.integers(0, 3), st.integers(0, 2)).filter(any), min_size=1, max_size=5),
        st.integers(1, 4),
    )
    def test_commutes_with_merges(self, parts, b0):
        lam = GPartition.from_parts(parts, AB)
        phi = {"A": 1, "B0": b0}
        image_merges = elementary_merges(specialize_phi(lam, phi))
        for mu in elementary_merges(lam):
            assert specialize_phi(mu, phi) in image_merges

    def test_monotone(self):
        for lam in vector_partitions((2, 2), AB):
            for mu in up_set(lam):
                assert is_refinement_leq(specialize_phi(lam, {"A": 1, "B0": 3}), specialize_phi(mu, {"A": 1, "B0": 3}))


class TestModReduce:
    def test_examples(self):
        # 5 -> 0 (dropped) and 9 -> 4 each remove 5
        assert mod_reduce(P("1 2 2 5 9"), 5) == (P("1 2 2 4"), 10)
        lam = P("1 2 2 5 9")
        assert mod_reduce(lam, 1) == (GPartition.empty(), 19)
        assert mod_reduce(P("1^3"), 2) == (P("1^3"), 0)

    def test_rejects_multivariable(self):
        with pytest.raises(ValueError):
            mod_reduce(P("A", AB), 2)
