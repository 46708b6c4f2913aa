from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gossez.seqspace import (
    ALL_ONES,
    EvConstSeq,
    FinSeq,
    LimFunctional,
    combine,
    decompose,
    l1_norm,
    pair_c_functional,
    pair_l1_c,
    sup_norm,
)

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
finseqs = st.dictionaries(st.integers(1, 15), rationals, max_size=6).map(FinSeq)
evconsts = st.builds(
    lambda head, tail: EvConstSeq(head, tail), st.lists(rationals, max_size=5), rationals
)
limfuncs = st.builds(LimFunctional, finseqs, rationals)

common = settings(max_examples=80, deadline=None)


class TestFinSeq:
    def test_canonical_sparsity(self):
        x = FinSeq({1: 0, 2: Fraction(1, 2), 5: 0})
        assert x.support() == (2,)
        assert x[1] == 0 and x[2] == Fraction(1, 2)
        assert x.max_support() == 2
        assert FinSeq().is_zero() and FinSeq().max_support() == 0

    def test_bad_entries_rejected(self):
        with pytest.raises(ValueError):
            FinSeq({0: 1})
        with pytest.raises(ValueError):
            FinSeq([(1, 1), (1, 2)])
        with pytest.raises(TypeError):
            FinSeq({1: 0.5})
        with pytest.raises(ValueError):
            FinSeq({True: 1})

    def test_arithmetic(self):
        x = 2 * FinSeq.delta(1) + 3 * FinSeq.delta(2)
        assert x == FinSeq({1: 2, 2: 3})
        assert (x - x).is_zero()
        assert (-x)[1] == -2
        assert l1_norm(FinSeq({1: -2, 2: 1})) == 3
        assert l1_norm(FinSeq.delta(1, Fraction(1, 2))) == Fraction(1, 2)

    def test_embedding(self):
        emb = FinSeq({2: 5}).as_evconst()
        assert emb == EvConstSeq([0, 5], 0)
        assert emb.tail == 0

    @given(x=finseqs, y=finseqs)
    @common
    def test_addition_matches_pointwise(self, x, y):
        z = x + y
        top = max(x.max_support(), y.max_support(), 1)
        assert all(z[i] == x[i] + y[i] for i in range(1, top + 2))


class TestEvConstSeq:
    def test_canonical_head_trimming(self):
        assert EvConstSeq([1, 1, 1], 1) == ALL_ONES
        assert EvConstSeq([1, 2, 5, 5], 5).head == (1, 2)
        assert EvConstSeq.zero().is_zero()

    def test_indexing_and_limit(self):
        y = EvConstSeq([7, -1], Fraction(1, 3))
        assert (y[1], y[2], y[3], y[100]) == (7, -1, Fraction(1, 3), Fraction(1, 3))
        assert y.limit() == y.tail == Fraction(1, 3)

    def test_sup_norm_sees_head_and_tail(self):
        assert sup_norm(ALL_ONES) == 1
        assert sup_norm(EvConstSeq([-9], 2)) == 9
        assert sup_norm(EvConstSeq([1], -4)) == 4

    @given(y=evconsts, z=evconsts)
    @common
    def test_arithmetic_pointwise(self, y, z):
        s = y - z
        top = max(len(y.head), len(z.head), 1)
        assert all(s[i] == y[i] - z[i] for i in range(1, top + 2))
        assert s.tail == y.tail - z.tail


class TestPairings:
    def test_frozen_examples(self):
        assert pair_l1_c(FinSeq.delta(1), ALL_ONES) == 1
        assert pair_l1_c(FinSeq(), ALL_ONES) == 0
        assert pair_l1_c(FinSeq.delta(1, Fraction(1, 2)), ALL_ONES) == Fraction(1, 2)

    def test_functional_examples(self):
        lim = LimFunctional(None, 1)
        assert pair_c_functional(ALL_ONES, lim) == 1
        assert pair_c_functional(EvConstSeq([3, -2, 7], 0), lim) == 0
        assert pair_c_functional(ALL_ONES, LimFunctional(FinSeq.delta(1), 1)) == 2

    @given(a=rationals, b=rationals, x=finseqs, xp=finseqs, y=evconsts)
    @common
    def test_bilinearity_left(self, a, b, x, xp, y):
        assert pair_l1_c(a * x + b * xp, y) == a * pair_l1_c(x, y) + b * pair_l1_c(xp, y)

    @given(a=rationals, b=rationals, x=finseqs, y=evconsts, yp=evconsts)
    @common
    def test_bilinearity_right(self, a, b, x, y, yp):
        assert pair_l1_c(x, a * y + b * yp) == a * pair_l1_c(x, y) + b * pair_l1_c(x, yp)

    @given(x=finseqs, y=evconsts)
    @common
    def test_holder_bound(self, x, y):
        assert abs(pair_l1_c(x, y)) <= l1_norm(x) * sup_norm(y)

    @given(phi=limfuncs, a=rationals, b=rationals, y=evconsts, yp=evconsts)
    @common
    def test_functional_linearity(self, phi, a, b, y, yp):
        assert phi(a * y + b * yp) == a * phi(y) + b * phi(yp)

    @given(lam=rationals, x=finseqs)
    @common
    def test_pure_limit_annihilates_null_sequences(self, lam, x):
        assert LimFunctional(None, lam)(x.as_evconst()) == 0


class TestDecompose:
    def test_frozen_examples(self):
        assert decompose(ALL_ONES) == (1, FinSeq())
        assert decompose(EvConstSeq([0], -1)) == (-1, FinSeq.delta(1))
        assert decompose(EvConstSeq([1], 2)) == (2, FinSeq.delta(1, -1))

    @given(y=evconsts)
    @common
    def test_round_trip(self, y):
        mu, w = decompose(y)
        assert combine([(mu, ALL_ONES), (1, w.as_evconst())]) == y


class TestCombine:
    def test_homogeneous_combinations(self):
        assert combine([(1, ALL_ONES), (-1, ALL_ONES)]) == EvConstSeq.zero()
        assert combine([(2, FinSeq.delta(1)), (3, FinSeq.delta(2))]) == FinSeq({1: 2, 2: 3})

    def test_mixed_types_rejected(self):
        with pytest.raises(TypeError):
            combine([(1, FinSeq.delta(1)), (1, ALL_ONES)])
        with pytest.raises(ValueError):
            combine([])
