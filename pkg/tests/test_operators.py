from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as oc
from gossez.operators import (
    CubicGraphPoint,
    centered_gossez,
    complete_cubic_point,
    exact_determinant,
    gossez,
    monotone_gap,
    solve_centered_gossez,
    truncation_matrix,
)
from gossez.seqspace import ALL_ONES, EvConstSeq, FinSeq, pair_l1_c

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
finseqs = st.dictionaries(st.integers(1, 15), rationals, max_size=6).map(FinSeq)

common = settings(max_examples=80, deadline=None)


class TestGossez:
    def test_frozen_examples(self):
        # Expected heads/tails computed entrywise with the partial-sum oracle.
        assert gossez(FinSeq.delta(1)) == EvConstSeq([0], -1)
        assert gossez(FinSeq()).is_zero()
        assert gossez(FinSeq.delta(1, Fraction(1, 2))) == EvConstSeq([0], Fraction(-1, 2))

    @given(x=finseqs)
    @common
    def test_entries_match_bruteforce(self, x):
        image = gossez(x)
        for n in range(1, x.max_support() + 3):
            assert image[n] == oc.gossez_entry(x, n)

    @given(x=finseqs)
    @common
    def test_tail_is_minus_total(self, x):
        assert gossez(x).tail == -pair_l1_c(x, ALL_ONES)
        assert len(gossez(x).head) <= x.max_support()

    @given(x=finseqs, y=finseqs)
    @common
    def test_anti_symmetry(self, x, y):
        assert pair_l1_c(y, gossez(x)) == -pair_l1_c(x, gossez(y))


class TestCentered:
    def test_frozen_examples(self):
        assert centered_gossez(FinSeq.delta(1)) == FinSeq.delta(1)
        assert centered_gossez(FinSeq.delta(1, Fraction(1, 2))) == FinSeq.delta(1, Fraction(1, 2))
        assert centered_gossez(FinSeq({1: -2, 2: 1})) == FinSeq.delta(2)

    @given(x=finseqs)
    @common
    def test_entries_match_bruteforce(self, x):
        image = centered_gossez(x)
        for n in range(1, x.max_support() + 3):
            assert image[n] == oc.centered_entry(x, n)
        assert image.max_support() <= x.max_support()

    @given(x=finseqs)
    @common
    def test_recentered_image_vanishes_at_infinity(self, x):
        shifted = gossez(x) + pair_l1_c(x, ALL_ONES) * ALL_ONES
        assert shifted.tail == 0

    @given(x=finseqs)
    @common
    def test_square_identity(self, x):
        assert pair_l1_c(x, centered_gossez(x).as_evconst()) == pair_l1_c(x, ALL_ONES) ** 2


class TestSolve:
    def test_frozen_examples(self):
        assert solve_centered_gossez(FinSeq.delta(1)) == FinSeq.delta(1)
        assert solve_centered_gossez(FinSeq.delta(2)) == FinSeq({1: -2, 2: 1})
        assert solve_centered_gossez(FinSeq()).is_zero()

    @given(x=finseqs)
    @common
    def test_round_trips(self, x):
        assert solve_centered_gossez(centered_gossez(x)) == x
        assert centered_gossez(solve_centered_gossez(x)) == x


class TestTruncMatrix:
    def test_frozen_pattern(self):
        assert [[int(v) for v in row] for row in truncation_matrix(3).entries] == [
            [1, 2, 2],
            [0, 1, 2],
            [0, 0, 1],
        ]
        assert [[int(v) for v in row] for row in truncation_matrix(1).entries] == [[1]]

    def test_bad_dimension(self):
        with pytest.raises(ValueError):
            truncation_matrix(0)
        with pytest.raises(ValueError):
            truncation_matrix(-3)

    def test_determinants_match_laplace_oracle(self):
        for n in range(1, 7):
            assert truncation_matrix(n).determinant() == oc.laplace_det(oc.trunc_entries(n)) == 1

    def test_columns_are_centered_coordinate_images(self):
        n = 6
        matrix = truncation_matrix(n)
        for j in range(1, n + 1):
            column = [matrix.entries[i][j - 1] for i in range(n)]
            assert column == oc.dense(centered_gossez(FinSeq.delta(j)), n)

    @given(x=finseqs)
    @common
    def test_matvec_and_back_substitution_agree_with_operator(self, x):
        n = max(x.max_support(), 1)
        matrix = truncation_matrix(n)
        dense = [x[i] for i in range(1, n + 1)]
        image = centered_gossez(x)
        assert matrix.matvec(dense) == [image[i] for i in range(1, n + 1)]
        assert FinSeq(enumerate(matrix.back_substitute(dense), start=1)) == solve_centered_gossez(x)


class TestExactDeterminant:
    @given(
        rows=st.integers(1, 4).flatmap(
            lambda n: st.lists(
                st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n
            )
        )
    )
    @common
    def test_matches_laplace_expansion(self, rows):
        frac_rows = [[Fraction(v) for v in row] for row in rows]
        assert exact_determinant(rows) == oc.laplace_det(frac_rows)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            exact_determinant([[1, 2]])
        with pytest.raises(ValueError):
            exact_determinant([])


class TestMonotoneGap:
    def test_frozen_examples(self):
        assert monotone_gap(FinSeq.delta(1), FinSeq()) == 1
        assert monotone_gap(FinSeq({1: -2, 2: 1}), FinSeq({1: -2, 2: 1})) == 0
        # Nontrivial pair with zero gap: the difference sums to zero.
        assert monotone_gap(FinSeq.delta(1), FinSeq.delta(2)) == 0

    @given(x=finseqs, y=finseqs)
    @common
    def test_nonnegative_and_square(self, x, y):
        gap = monotone_gap(x, y)
        assert gap == pair_l1_c(x - y, ALL_ONES) ** 2
        assert gap >= 0


class TestCubicChannel:
    def test_frozen_examples(self):
        point = complete_cubic_point(FinSeq.delta(1), 2)
        assert point.dual_seq == FinSeq.delta(1) and point.dual_scalar == 8
        zero = complete_cubic_point(FinSeq(), 0)
        assert zero.dual_seq.is_zero() and zero.dual_scalar == 0
        neg = complete_cubic_point(FinSeq.delta(2), -1)
        assert neg.dual_seq == FinSeq({1: -2, 2: 1}) and neg.dual_scalar == -1

    @given(y=finseqs, t=rationals)
    @common
    def test_completion_lies_on_graph(self, y, t):
        assert complete_cubic_point(y, t).on_graph()

    def test_off_graph_points_detected(self):
        point = CubicGraphPoint(FinSeq.delta(1), Fraction(2), FinSeq.delta(1), Fraction(7))
        assert not point.on_graph()

    @given(y1=finseqs, t1=rationals, y2=finseqs, t2=rationals)
    @common
    def test_graph_monotonicity(self, y1, t1, y2, t2):
        p = complete_cubic_point(y1, t1)
        q = complete_cubic_point(y2, t2)
        d_dual = p.dual_seq - q.dual_seq
        product = pair_l1_c(d_dual, (p.primal_seq - q.primal_seq).as_evconst()) + (
            p.primal_scalar - q.primal_scalar
        ) * (p.dual_scalar - q.dual_scalar)
        assert product >= 0
