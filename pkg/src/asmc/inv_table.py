"""Inversion tables: plain ones for permutation matrices and generalized
ones for (neutral matrix, charge) pairs.

For a permutation matrix, entry ``a_i`` of the inversion table is the
number of 1s below row ``n+1-i`` and left of that row's 1, so that
``0 <= a_i <= i-1``, ``r = a_n`` and ``i = a_1 + ... + a_n``.

A pair (N, E) with opening row ``n+1-k`` is encoded as
``(k; a_1..a_n; b, beta)`` where each ``a_i`` is the signed entry sum
below row ``n+1-i`` and left of the row's unique 1 (the *leftmost* 1 for
the closing row, i = k-1), ``b = c(N)`` and ``beta = E + ell(N)``.  A
sequence of non-negative integers arises this way exactly when

1. ``3 <= k <= n``;
2. ``0 <= a_i <= i-1`` for all i;
3. ``a_{k-1} < a_k``;
4. ``a_{k-1} + beta < a_k + b <= k-2``;

and the pair is then unique.  Complementing both halves of the encoding
(table duality) corresponds to vertical reflection of the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .cells import geometry
from .errors import InternalInvariantViolation, InvalidTable, ParseError
from .matrix import AsmMatrix, perm_one_line, validate_asm
from .neutral import NeutralPair


class ParamVector(NamedTuple):
    """The five statistics (r, i, E, B, J) read off an encoding."""

    r: int
    i: int
    e: int
    b: int
    j: int


# ---------------------------------------------------------------------------
# plain inversion tables for permutation matrices


def perm_table(p: AsmMatrix) -> tuple[int, ...]:
    """Inversion table of a permutation matrix.

    >>> from asmc.matrix import perm_matrix
    >>> perm_table(perm_matrix([3, 2, 1]))
    (0, 1, 2)
    """
    word = perm_one_line(p)
    n = p.n
    return tuple(
        sum(1 for q in range(n + 1 - i, n) if word[q] < word[n - i])
        for i in range(1, n + 1)
    )


def _place_one(colsum: Sequence[int], target: int) -> int:
    """Column (1-based) for a new 1 so that the signed sum of the columns
    left of it, over the rows still to come, equals ``target``.

    Columns with a pending 1 (running sum 1) are not available; the
    running sums make ``(col - 1) - sum(colsum[:col-1])`` strictly
    increasing over available columns, so the choice is unique.
    """
    prefix = 0
    for col in range(1, len(colsum) + 1):
        if colsum[col - 1] == 0 and (col - 1) - prefix == target:
            return col
        prefix += colsum[col - 1]
    raise InternalInvariantViolation(f"no admissible column for target {target}")


def perm_from_table(a: Sequence[int]) -> AsmMatrix:
    """Permutation matrix with inversion table ``a``; inverse of
    :func:`perm_table`."""
    a = tuple(int(v) for v in a)
    n = len(a)
    for i, v in enumerate(a, start=1):
        if not 0 <= v <= i - 1:
            raise InvalidTable(2, f"a_{i}={v} outside [0, {i - 1}]")
    colsum = [0] * n
    grid = [[0] * n for _ in range(n)]
    for q in range(1, n + 1):
        col = _place_one(colsum, a[n - q])
        grid[q - 1][col - 1] = 1
        colsum[col - 1] = 1
    return AsmMatrix(tuple(tuple(row) for row in grid))


# ---------------------------------------------------------------------------
# generalized inversion tables


@dataclass(frozen=True)
class GenInvTable:
    """The encoding ``(k; a_1..a_n; b, beta)`` of a neutral pair.

    Instances are plain records; use :func:`table_valid` to test the
    characterization.
    """

    k: int
    a: tuple[int, ...]
    b: int
    beta: int

    @property
    def n(self) -> int:
        return len(self.a)

    def to_text(self) -> str:
        return f"{self.k}; {' '.join(str(v) for v in self.a)}; {self.b} {self.beta}"

    def to_json(self) -> dict:
        return {"k": self.k, "a": list(self.a), "b": self.b, "beta": self.beta}


def table_from_text(text: str) -> GenInvTable:
    """Parse ``"k; a1 a2 ... an; b beta"``."""
    parts = [p.strip() for p in text.strip().split(";")]
    if len(parts) != 3:
        raise ParseError("table text must have three ';'-separated fields")
    try:
        k = int(parts[0])
        a = tuple(int(v) for v in parts[1].split())
        b, beta = (int(v) for v in parts[2].split())
    except ValueError as exc:
        raise ParseError(f"cannot parse table {text!r}") from exc
    return GenInvTable(k=k, a=a, b=b, beta=beta)


def table_from_json(obj: dict) -> GenInvTable:
    try:
        return GenInvTable(
            k=int(obj["k"]),
            a=tuple(int(v) for v in obj["a"]),
            b=int(obj["b"]),
            beta=int(obj["beta"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"table JSON needs k, a, b, beta: {exc}") from exc


@dataclass(frozen=True)
class TableCheck:
    """Diagnostic result of :func:`table_valid`; condition 0 flags
    structural problems (negative entries)."""

    ok: bool
    condition: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def table_valid(t: GenInvTable) -> TableCheck:
    """Test the four characterization conditions, reporting the first
    failure."""
    n = t.n
    if t.b < 0 or t.beta < 0 or any(v < 0 for v in t.a):
        return TableCheck(False, 0, "entries must be non-negative")
    if not 3 <= t.k <= n:
        return TableCheck(False, 1, f"k={t.k} outside [3, {n}]")
    for i, v in enumerate(t.a, start=1):
        if v > i - 1:
            return TableCheck(False, 2, f"a_{i}={v} exceeds {i - 1}")
    ak1, ak = t.a[t.k - 2], t.a[t.k - 1]
    if not ak1 < ak:
        return TableCheck(False, 3, f"a_{t.k - 1}={ak1} not < a_{t.k}={ak}")
    if not ak1 + t.beta < ak + t.b:
        return TableCheck(False, 4, f"a_{t.k - 1}+beta={ak1 + t.beta} not < a_{t.k}+b={ak + t.b}")
    if not ak + t.b <= t.k - 2:
        return TableCheck(False, 4, f"a_{t.k}+b={ak + t.b} exceeds k-2={t.k - 2}")
    return TableCheck(True)


def gen_table(pair: NeutralPair) -> GenInvTable:
    """Generalized inversion table of a neutral pair."""
    m = pair.matrix
    n = m.n
    g = geometry(m)
    k = n + 1 - g.opening_row
    a = []
    for i in range(1, n + 1):
        q = n + 1 - i
        row = m.rows[q - 1]
        ref = g.left_one_col if q == g.closing_row else row.index(1) + 1
        a.append(
            sum(m.rows[qq][c] for qq in range(q, n) for c in range(ref - 1))
        )
    sums = pair.sums
    table = GenInvTable(k=k, a=tuple(a), b=sums.c, beta=pair.charge + sums.ell)
    check = table_valid(table)
    if not check:
        raise InternalInvariantViolation(f"encoded table is invalid: {check.message}")
    return table


def pair_from_table(t: GenInvTable) -> NeutralPair:
    """Rebuild the unique neutral pair with table ``t``.

    The matrix is constructed row by row from the top: each table entry
    pins the column of the row's (leftmost) 1 through the running column
    sums, the -1 goes under the opening 1, and the closing 1 is placed so
    the closing cell sums to ``b``.
    """
    check = table_valid(t)
    if not check:
        raise InvalidTable(check.condition, check.message)
    n = t.n
    opening_row = n + 1 - t.k
    closing_row = opening_row + 1
    colsum = [0] * n
    grid = [[0] * n for _ in range(n)]
    opening_col = None
    for q in range(1, n + 1):
        if q == closing_row:
            left_col = _place_one(colsum, t.a[t.k - 2])
            if left_col >= opening_col:
                raise InternalInvariantViolation("left 1 not in the left side")
            grid[q - 1][left_col - 1] = 1
            colsum[left_col - 1] += 1
            grid[q - 1][opening_col - 1] = -1
            colsum[opening_col - 1] -= 1
            total = 0
            closing_col = None
            for col in range(opening_col + 1, n + 1):
                if total == t.b and colsum[col - 1] == 0:
                    closing_col = col
                    break
                total += 1 - colsum[col - 1]
            if closing_col is None:
                raise InternalInvariantViolation("no admissible closing column")
            grid[q - 1][closing_col - 1] = 1
            colsum[closing_col - 1] += 1
        else:
            col = _place_one(colsum, t.a[n - q])
            grid[q - 1][col - 1] = 1
            colsum[col - 1] += 1
            if q == opening_row:
                opening_col = col
    matrix = validate_asm(grid)
    charge = t.a[t.k - 2] + 1 - t.a[t.k - 1] + t.beta
    return NeutralPair(matrix, charge)


def table_params(t: GenInvTable) -> ParamVector:
    """Read the five statistics straight off a table."""
    check = table_valid(t)
    if not check:
        raise InvalidTable(check.condition, check.message)
    ak1, ak = t.a[t.k - 2], t.a[t.k - 1]
    return ParamVector(
        r=t.a[-1],
        i=sum(t.a) + t.b + 1,
        e=ak1 + t.beta + 1 - ak,
        b=t.b - t.beta,
        j=ak - ak1 + t.b,
    )


def dual_table(t: GenInvTable) -> GenInvTable:
    """Table-level duality, matching vertical reflection of the matrix.

    Complements every ``a_i`` except at position k-1, which pairs with
    the closing data instead; an involution on valid tables.
    """
    check = table_valid(t)
    if not check:
        raise InvalidTable(check.condition, check.message)
    ak1, ak = t.a[t.k - 2], t.a[t.k - 1]
    abar = [i - 1 - v for i, v in enumerate(t.a, start=1)]
    abar[t.k - 2] = t.k - 2 - ak - t.b
    out = GenInvTable(
        k=t.k,
        a=tuple(abar),
        b=ak - 1 - ak1,
        beta=ak + t.b - ak1 - t.beta - 1,
    )
    back = table_valid(out)
    if not back:
        raise InternalInvariantViolation(f"dual table is invalid: {back.message}")
    return out
