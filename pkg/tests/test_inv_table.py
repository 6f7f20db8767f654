"""Inversion tables, their characterization and table duality."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmc import (
    GenInvTable,
    InvalidTable,
    NeutralPair,
    charges,
    classical_params,
    dual_table,
    gen_table,
    neutralize,
    pair_from_table,
    perm_from_table,
    perm_matrix,
    perm_table,
    reflect,
    swap_charges,
    table_from_json,
    table_from_text,
    table_params,
    table_valid,
)
from conftest import TABLE12, one_minus


class TestPermTables:
    def test_identity_has_zero_table(self):
        assert perm_table(perm_matrix((1, 2, 3, 4))) == (0, 0, 0, 0)

    def test_anti_identity_has_staircase_table(self):
        assert perm_table(perm_matrix((4, 3, 2, 1))) == (0, 1, 2, 3)

    def test_roundtrip_all_order_4(self):
        for word in itertools.permutations(range(1, 5)):
            p = perm_matrix(word)
            assert perm_from_table(perm_table(p)) == p

    def test_statistics_and_complement(self):
        for word in itertools.permutations(range(1, 5)):
            p = perm_matrix(word)
            t = perm_table(p)
            stats = classical_params(p)
            assert stats.r == t[-1]
            assert stats.i == sum(t)
            assert perm_table(reflect(p)) == tuple(
                i - 1 - v for i, v in enumerate(t, start=1)
            )

    def test_invalid_table_rejected(self):
        with pytest.raises(InvalidTable):
            perm_from_table((0, 2, 0))


class TestGenTable:
    def test_worked_example(self, pair12):
        assert gen_table(pair12) == TABLE12
        assert TABLE12.to_text() == "10; 0 0 2 2 0 0 1 5 0 3 6 6; 4 5"

    def test_diamond(self, diamond):
        assert gen_table(NeutralPair(diamond, 0)) == GenInvTable(
            k=3, a=(0, 0, 1), b=0, beta=0
        )

    def test_halves_are_non_negative(self):
        for m in one_minus(5):
            t = gen_table(neutralize(m))
            assert t.b >= 0 and t.beta >= 0
            assert all(v >= 0 for v in t.a)


class TestTableValidity:
    def test_worked_example_is_valid(self):
        assert table_valid(TABLE12)

    def test_order_two_table_impossible(self):
        check = table_valid(GenInvTable(k=2, a=(0, 1), b=0, beta=0))
        assert not check and check.condition == 1

    def test_equal_middle_entries_fail_condition_three(self):
        check = table_valid(GenInvTable(k=3, a=(0, 1, 1), b=0, beta=0))
        assert not check and check.condition == 3

    def test_condition_four_both_clauses(self):
        too_large = table_valid(GenInvTable(k=3, a=(0, 0, 1), b=1, beta=0))
        assert not too_large and too_large.condition == 4  # a_k + b > k-2
        no_gap = table_valid(GenInvTable(k=4, a=(0, 0, 0, 1), b=1, beta=2))
        assert not no_gap and no_gap.condition == 4  # a_{k-1}+beta >= a_k+b

    def test_negative_entries_fail_structurally(self):
        check = table_valid(GenInvTable(k=3, a=(0, 0, 1), b=0, beta=-1))
        assert not check and check.condition == 0

    def test_oversized_entry_fails_condition_two(self):
        check = table_valid(GenInvTable(k=3, a=(1, 0, 1), b=0, beta=0))
        assert not check and check.condition == 2


class TestPairFromTable:
    def test_worked_example_rebuilds_with_known_statistics(self):
        pair = pair_from_table(TABLE12)
        assert pair.charge == 3
        p = classical_params(pair.matrix)
        ch = charges(pair.matrix)
        assert (p.r, p.i, ch.b, ch.j) == (6, 30, 2, 7)

    def test_diamond_table(self, diamond):
        pair = pair_from_table(GenInvTable(k=3, a=(0, 0, 1), b=0, beta=0))
        assert pair == NeutralPair(diamond, 0)

    def test_roundtrip_exhaustive(self):
        for n in (3, 4, 5):
            for m in one_minus(n):
                pair = neutralize(m)
                assert pair_from_table(gen_table(pair)) == pair

    def test_invalid_table_rejected(self):
        with pytest.raises(InvalidTable) as info:
            pair_from_table(GenInvTable(k=2, a=(0, 1), b=0, beta=0))
        assert info.value.condition == 1

    @given(st.data())
    def test_roundtrip_on_generated_tables(self, data):
        n = data.draw(st.integers(3, 9))
        k = data.draw(st.integers(3, n))
        a = [data.draw(st.integers(0, i - 1)) for i in range(1, n + 1)]
        # force the characterization conditions around position k
        ak = data.draw(st.integers(1, k - 2))
        ak1 = data.draw(st.integers(0, ak - 1))
        b = data.draw(st.integers(0, k - 2 - ak))
        beta = data.draw(st.integers(0, ak + b - ak1 - 1))
        a[k - 1], a[k - 2] = ak, ak1
        t = GenInvTable(k=k, a=tuple(a), b=b, beta=beta)
        assert table_valid(t)
        assert gen_table(pair_from_table(t)) == t


class TestTableParams:
    def test_worked_example(self):
        assert tuple(table_params(TABLE12)) == (6, 30, 3, -1, 7)

    def test_diamond(self):
        assert tuple(table_params(GenInvTable(k=3, a=(0, 0, 1), b=0, beta=0))) == (
            1,
            2,
            0,
            0,
            1,
        )

    def test_agreement_with_matrix_statistics(self):
        for m in one_minus(5):
            pair = neutralize(m)
            vec = table_params(gen_table(pair))
            p, ch = classical_params(m), charges(m)
            assert tuple(vec) == (p.r, p.i, ch.e, ch.b, ch.j)

    def test_leading_sum_identity(self):
        for m in one_minus(5):
            pair = neutralize(m)
            t = gen_table(pair)
            assert pair.sums.ell == t.a[t.k - 1] - 1 - t.a[t.k - 2]


def dual_by_formulas(t: GenInvTable) -> GenInvTable:
    """Independent oracle: apply the four duality formulas directly."""
    abar = list(i - 1 - v for i, v in enumerate(t.a, start=1))
    abar[t.k - 2] = t.k - 2 - t.a[t.k - 1] - t.b
    return GenInvTable(
        k=t.k,
        a=tuple(abar),
        b=t.a[t.k - 1] - 1 - t.a[t.k - 2],
        beta=t.a[t.k - 1] + t.b - t.a[t.k - 2] - t.beta - 1,
    )


class TestDualTable:
    def test_worked_example_against_formula_oracle(self):
        d = dual_table(TABLE12)
        assert d == dual_by_formulas(TABLE12)
        assert d.to_text() == "10; 0 1 0 1 4 5 5 2 1 6 4 5; 2 1"

    def test_involution(self):
        for m in one_minus(5):
            t = gen_table(neutralize(m))
            assert dual_table(dual_table(t)) == t

    def test_matches_matrix_reflection(self):
        for m in one_minus(5):
            t = gen_table(neutralize(m))
            assert dual_table(t) == gen_table(neutralize(reflect(m)))

    def test_dual_beta_is_charge_swap_beta(self):
        # the dual's beta equals b - beta + a_k - a_{k-1} - 1, which is the
        # beta of the charge-swapped matrix's table
        d = dual_table(TABLE12)
        assert d.beta == TABLE12.b - TABLE12.beta + TABLE12.a[9] - TABLE12.a[8] - 1 == 1
        for m in one_minus(4):
            t = gen_table(neutralize(m))
            beta_prime = t.b - t.beta + t.a[t.k - 1] - t.a[t.k - 2] - 1
            swapped = GenInvTable(k=t.k, a=t.a, b=t.b, beta=beta_prime)
            assert swapped == gen_table(neutralize(swap_charges(m)))
            assert dual_table(t).beta == beta_prime

    def test_closing_complement_identity(self):
        for m in one_minus(5):
            t = gen_table(neutralize(m))
            d = dual_table(t)
            assert t.a[t.k - 1] + t.b + d.a[t.k - 2] == t.k - 2


class TestTableFormats:
    def test_text_roundtrip(self):
        assert table_from_text(TABLE12.to_text()) == TABLE12
        assert table_from_text("3; 0 0 1; 0 0") == GenInvTable(3, (0, 0, 1), 0, 0)

    def test_json_roundtrip(self):
        assert table_from_json(TABLE12.to_json()) == TABLE12

    def test_malformed_text_rejected(self):
        from asmc import ParseError

        with pytest.raises(ParseError):
            table_from_text("3; 0 0 1")
        with pytest.raises(ParseError):
            table_from_text("x; 0 0 1; 0 0")
