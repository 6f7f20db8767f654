"""Alternating sign matrices: representation, validation and the classical
parameters.

An order ``n`` alternating sign matrix (ASM) is a square matrix over
``{-1, 0, 1}`` in which the nonzero entries of every row and every column
alternate in sign, beginning and ending with ``1``.  Equivalently, every
row/column prefix sum lies in ``{0, 1}`` and every row and column sums
to ``1``.

All matrices are immutable (tuples of tuples) and therefore hashable,
which the exhaustive bijection checks rely on.  Public coordinates are
1-based throughout: row 1 is the top row, column 1 the leftmost column.

>>> a = validate_asm([[0, 1, 0], [1, -1, 1], [0, 1, 0]])
>>> classical_params(a)
ClassicalParams(r=1, s=1, i=2)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    AlternationViolation,
    BadEntry,
    NotSquare,
    ParseError,
    SumViolation,
)

Grid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AsmMatrix:
    """A validated alternating sign matrix.

    The constructor does *not* re-check the alternating law; use
    :func:`validate_asm` to build one from untrusted data.
    """

    rows: Grid

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry at row ``i``, column ``j`` (both 1-based)."""
        return self.rows[i - 1][j - 1]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.rows)

    def __str__(self) -> str:
        return matrix_to_text(self).rstrip("\n")


@dataclass(frozen=True)
class ClassicalParams:
    """The classical statistics of an ASM.

    ``r`` counts the entries to the left of the first row's 1, ``s`` the
    entries equal to -1, and ``i`` the inversions (sum over entry pairs
    in strict south-west position of the product of the two entries).
    """

    r: int
    s: int
    i: int


def _check_line(values: Sequence[int], axis: str, index: int) -> None:
    """Enforce the alternating law on one row or column."""
    prefix = 0
    seen_nonzero = False
    for v in values:
        if v:
            seen_nonzero = True
        prefix += v
        if prefix < 0:
            raise AlternationViolation(axis, index, "begins with -1 or has unmatched -1")
        if prefix > 1:
            raise AlternationViolation(axis, index, "two 1s with no -1 between them")
    if prefix != 1:
        if seen_nonzero:
            raise AlternationViolation(axis, index, "ends with -1")
        raise SumViolation(axis, index, prefix)


def validate_asm(grid: Iterable[Sequence[int]]) -> AsmMatrix:
    """Validate an integer grid and wrap it as an :class:`AsmMatrix`.

    Raises :class:`NotSquare`, :class:`BadEntry`,
    :class:`AlternationViolation` or :class:`SumViolation` on the first
    law the grid breaks (columns are checked before rows).
    """
    rows = tuple(tuple(int(v) for v in row) for row in grid)
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise NotSquare(f"expected a square matrix, got row lengths {[len(r) for r in rows]}")
    for i, row in enumerate(rows, start=1):
        for j, v in enumerate(row, start=1):
            if v not in (-1, 0, 1):
                raise BadEntry(i, j, v)
    for j in range(n):
        _check_line([rows[i][j] for i in range(n)], "column", j + 1)
    for i, row in enumerate(rows, start=1):
        _check_line(row, "row", i)
    return AsmMatrix(rows)


def reflect(a: AsmMatrix) -> AsmMatrix:
    """Vertical reflection: entry (i, j) of the result is entry (i, n+1-j)."""
    return AsmMatrix(tuple(tuple(reversed(row)) for row in a.rows))


def minus_count(a: AsmMatrix) -> int:
    """Number of entries equal to -1 (the statistic ``s``)."""
    return sum(row.count(-1) for row in a.rows)


def inversions(a: AsmMatrix) -> int:
    """Inversion number of an ASM.

    For each nonzero entry, sum the entries strictly below and strictly to
    its left, and accumulate the product.  On permutation matrices this is
    the usual inversion count of the one-line word.
    """
    n = a.n
    total = 0
    below = [0] * n  # column sums over the rows already visited (from the bottom)
    for i in range(n - 1, -1, -1):
        row = a.rows[i]
        prefix = 0  # sum of below[l] for l < current column
        for j in range(n):
            if row[j]:
                total += row[j] * prefix
            prefix += below[j]
        for j in range(n):
            if row[j]:
                below[j] += row[j]
    return total


def classical_params(a: AsmMatrix) -> ClassicalParams:
    """Compute the classical triple (r, s, i)."""
    first_one = a.rows[0].index(1)  # entries left of the first row's 1
    return ClassicalParams(r=first_one, s=minus_count(a), i=inversions(a))


def is_permutation_matrix(a: AsmMatrix) -> bool:
    return minus_count(a) == 0


def perm_one_line(a: AsmMatrix) -> tuple[int, ...]:
    """One-line word of a permutation matrix: 1-based column of each row's 1."""
    return tuple(row.index(1) + 1 for row in a.rows)


def perm_matrix(word: Sequence[int]) -> AsmMatrix:
    """Permutation matrix from a 1-based one-line word."""
    n = len(word)
    rows = tuple(tuple(1 if j == c - 1 else 0 for j in range(n)) for c in word)
    return validate_asm(rows)


# ---------------------------------------------------------------------------
# text / JSON formats


def matrix_to_text(a: AsmMatrix) -> str:
    """Canonical text form: one line per row, entries space-separated."""
    return "\n".join(" ".join(str(v) for v in row) for row in a.rows) + "\n"


def matrix_from_text(text: str) -> AsmMatrix:
    """Parse the text form; blank lines and ``#`` comments are ignored."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise ParseError(f"cannot parse matrix line {line!r}") from exc
    if not rows:
        raise ParseError("no matrix rows found in input")
    return validate_asm(rows)


def matrix_to_json(a: AsmMatrix) -> dict:
    return {"n": a.n, "rows": [list(row) for row in a.rows]}


def matrix_from_json(obj: dict | str) -> AsmMatrix:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ParseError("matrix JSON must be an object with a 'rows' field")
    a = validate_asm(obj["rows"])
    if "n" in obj and obj["n"] != a.n:
        raise ParseError(f"declared n={obj['n']} does not match {a.n} rows")
    return a
