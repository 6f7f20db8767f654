"""Validation, reflection and the classical statistics."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from asmc import (
    AlternationViolation,
    BadEntry,
    NotSquare,
    ParseError,
    SumViolation,
    classical_params,
    matrix_from_json,
    matrix_from_text,
    matrix_to_json,
    matrix_to_text,
    perm_matrix,
    perm_one_line,
    reflect,
    validate_asm,
)
from conftest import DIAMOND_ROWS, all_asm, one_minus


def line_alternates(values):
    """Independent alternation oracle: nonzeros must read +1, -1, ..., +1."""
    nonzero = [v for v in values if v]
    if not nonzero:
        return False
    return all(v == (1 if idx % 2 == 0 else -1) for idx, v in enumerate(nonzero)) and (
        len(nonzero) % 2 == 1
    )


def grid_is_asm(grid):
    n = len(grid)
    if any(len(row) != n for row in grid):
        return False
    if any(v not in (-1, 0, 1) for row in grid for v in row):
        return False
    cols = [[grid[i][j] for i in range(n)] for j in range(n)]
    return all(line_alternates(line) for line in list(grid) + cols)


class TestValidate:
    def test_identity_is_valid_with_no_minus(self):
        m = validate_asm([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert classical_params(m).s == 0

    def test_diamond_is_valid_with_one_minus(self, diamond):
        assert classical_params(diamond).s == 1

    def test_leading_minus_in_column_is_rejected(self):
        with pytest.raises(AlternationViolation) as info:
            validate_asm([[0, -1, 1], [1, 0, 0], [0, 1, 0]])
        assert info.value.axis == "column"
        assert info.value.index == 2

    def test_zero_row_reports_sum_violation(self):
        # columns are all fine here, so the zero row itself gets reported
        with pytest.raises(SumViolation) as info:
            validate_asm([[0, 0, 0], [1, 0, 1], [0, 1, 0]])
        assert (info.value.axis, info.value.index) == ("row", 1)

    def test_non_square_rejected(self):
        with pytest.raises(NotSquare):
            validate_asm([[1, 0], [0, 1], [0, 0]])

    def test_bad_entry_rejected_with_position(self):
        with pytest.raises(BadEntry) as info:
            validate_asm([[1, 0], [0, 2]])
        assert (info.value.row, info.value.col) == (2, 2)

    def test_agrees_with_independent_oracle_exhaustively(self):
        n = 3
        for cells in itertools.product((-1, 0, 1), repeat=n * n):
            grid = [list(cells[i * n : (i + 1) * n]) for i in range(n)]
            try:
                validate_asm(grid)
                accepted = True
            except Exception:
                accepted = False
            assert accepted == grid_is_asm(grid), grid


class TestReflect:
    def test_diamond_is_symmetric(self, diamond):
        assert reflect(diamond) == diamond

    def test_identity_reflects_to_anti_identity(self):
        m = validate_asm([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert reflect(m).rows == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_involution_over_order_4(self):
        for m in one_minus(4):
            assert reflect(reflect(m)) == m

    @pytest.mark.parametrize("n", [3, 4])
    def test_classical_reflection_identities(self, n):
        from math import comb

        for m in all_asm(n):
            p, rp = classical_params(m), classical_params(reflect(m))
            assert p.r + rp.r == n - 1
            assert p.i + rp.i == comb(n, 2) + p.s
            assert rp.s == p.s


class TestClassicalParams:
    def test_diamond_values(self, diamond):
        p = classical_params(diamond)
        assert (p.r, p.s, p.i) == (1, 1, 2)

    def test_worked_example_values(self, neutral12):
        p = classical_params(neutral12)
        assert (p.r, p.i) == (6, 30)

    def test_inversions_match_double_sum_oracle(self):
        def double_sum(m):
            n = m.n
            return sum(
                m.rows[i][j] * m.rows[k][l]
                for i in range(n)
                for j in range(n)
                for k in range(i + 1, n)
                for l in range(j)
            )

        for m in one_minus(4) + all_asm(3):
            assert classical_params(m).i == double_sum(m)

    def test_permutation_inversions_match_pairwise_count(self):
        for word in itertools.permutations(range(1, 5)):
            m = perm_matrix(word)
            pairwise = sum(
                1
                for a in range(4)
                for b in range(a + 1, 4)
                if word[a] > word[b]
            )
            assert classical_params(m).i == pairwise

    @given(st.permutations(list(range(1, 8))))
    def test_permutation_inversions_property(self, word):
        m = perm_matrix(word)
        assert perm_one_line(m) == tuple(word)
        pairwise = sum(
            1 for a in range(7) for b in range(a + 1, 7) if word[a] > word[b]
        )
        assert classical_params(m).i == pairwise


class TestFormats:
    def test_text_roundtrip_with_comments(self, diamond):
        text = "# a comment\n0 1 0\n\n1 -1 1  # inline\n0 1 0\n"
        assert matrix_from_text(text) == diamond
        assert matrix_from_text(matrix_to_text(diamond)) == diamond

    def test_text_is_canonical(self, diamond):
        assert matrix_to_text(diamond) == "0 1 0\n1 -1 1\n0 1 0\n"

    def test_json_roundtrip(self, charged12):
        obj = matrix_to_json(charged12)
        assert obj["n"] == 12
        assert matrix_from_json(obj) == charged12

    def test_json_declared_order_must_match(self):
        with pytest.raises(ParseError):
            matrix_from_json({"n": 4, "rows": list(map(list, DIAMOND_ROWS))})

    def test_unparseable_text_rejected(self):
        with pytest.raises(ParseError):
            matrix_from_text("0 x 0\n")
        with pytest.raises(ParseError):
            matrix_from_text("# only comments\n")
