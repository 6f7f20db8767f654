"""Exhaustive generation of alternating sign matrices for small orders.

Matrices are grown row by row.  The running column sums of a partial ASM
always lie in {0, 1}, and a row may place a 1 only on a column with
running sum 0 and a -1 only on a column with running sum 1, its own
nonzero entries alternating +1, -1, ..., +1.  This prunes the search to
exactly the valid matrices and yields them in row-lexicographic order
(entries compared as integers, so -1 < 0 < 1).

The stream is deterministic; totals can be cross-checked against the
closed product formula prod_{k<n} (3k+1)!/(n+k)!.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .cells import SignClass, charges, sign_class
from .errors import CapExceeded
from .matrix import AsmMatrix, classical_params

DEFAULT_CAP = 7

DISTRIBUTION_KEYS = ("r", "s", "i", "E", "B", "J")


def formula_count(n: int) -> int:
    """Closed-form number of order-n alternating sign matrices."""
    num = den = 1
    for k in range(n):
        num *= factorial(3 * k + 1)
        den *= factorial(n + k)
    if num % den:
        raise ArithmeticError("product formula did not divide evenly")
    return num // den


@lru_cache(maxsize=None)
def _row_moves(n: int, state: int) -> tuple[tuple[tuple[int, ...], int, int], ...]:
    """All admissible next rows for a column-sum bitmask, in lexicographic
    order, as (row, new_state, minus_count) triples."""
    out = []
    row = [0] * n

    def rec(col: int, parity: int, flip: int, minuses: int) -> None:
        if col == n:
            if parity == 1:  # nonzeros alternate +1,-1,...,+1
                out.append((tuple(row), state ^ flip, minuses))
            return
        bit = (state >> col) & 1
        if parity == 1 and bit:
            row[col] = -1
            rec(col + 1, 0, flip | (1 << col), minuses + 1)
            row[col] = 0
        rec(col + 1, parity, flip, minuses)
        if parity == 0 and not bit:
            row[col] = 1
            rec(col + 1, 1, flip | (1 << col), minuses)
            row[col] = 0

    rec(0, 0, 0, 0)
    return tuple(out)


def enumerate_asm(
    n: int,
    s: int | None = None,
    sign: SignClass | None = None,
    cap: int | None = DEFAULT_CAP,
) -> Iterator[AsmMatrix]:
    """Yield every order-n ASM exactly once, in row-lexicographic order.

    ``s`` restricts to matrices with that many -1 entries; ``sign``
    (which requires ``s=1``) restricts to one sign class.  Orders above
    ``cap`` raise :class:`CapExceeded`, eagerly.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if cap is not None and n > cap:
        raise CapExceeded(n, cap)
    if sign is not None and s != 1:
        raise ValueError("a sign-class filter requires s=1")
    return _generate(n, s, sign)


def _generate(n: int, s: int | None, sign: SignClass | None) -> Iterator[AsmMatrix]:
    def walk(state: int, depth: int, rows: list, minuses: int) -> Iterator[AsmMatrix]:
        if depth == n:
            if s is None or minuses == s:
                m = AsmMatrix(tuple(rows))
                if sign is None or sign_class(m) is sign:
                    yield m
            return
        for row, new_state, mm in _row_moves(n, state):
            if s is not None and minuses + mm > s:
                continue
            rows.append(row)
            yield from walk(new_state, depth + 1, rows, minuses + mm)
            rows.pop()

    return walk(0, 0, [], 0)


def distribution(
    n: int,
    keys: Sequence[str],
    cap: int | None = DEFAULT_CAP,
) -> Counter:
    """Count matrices per tuple of statistic values.

    ``keys`` is a subset of r, s, i, E, B, J (in the order the result
    tuples use them).  Requesting any of E/B/J restricts the count to
    matrices with exactly one -1, where those statistics live.
    """
    keys = tuple(keys)
    for key in keys:
        if key not in DISTRIBUTION_KEYS:
            raise ValueError(f"unknown statistic {key!r}; pick from {DISTRIBUTION_KEYS}")
    if not keys:
        raise ValueError("at least one statistic is required")
    needs_charges = any(k in ("E", "B", "J") for k in keys)
    counts: Counter = Counter()
    for m in enumerate_asm(n, s=1 if needs_charges else None, cap=cap):
        cp = classical_params(m)
        ch = charges(m) if needs_charges else None
        values = {"r": cp.r, "s": cp.s, "i": cp.i}
        if ch is not None:
            values.update({"E": ch.e, "B": ch.b, "J": ch.j})
        counts[tuple(values[k] for k in keys)] += 1
    return counts
