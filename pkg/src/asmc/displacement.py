"""Horizontal and vertical displacement of (0,1)-matrices.

``h_shift`` moves the content of each nonzero column one "slot" to the
right: with nonzero columns at positions j_1 < ... < j_k (where j_1 = 1
and j_k < n), column j_i's content moves to column j_{i+1}, the last
nonzero column's content moves to column n, and column 1 becomes empty.
``v_shift`` is the row analogue with rows ordered bottom to top (the
bottom row plays the role of column 1).

Both primitives are injective and preserve the multiset of line
contents.  ``apply_in_region`` lets them act on a rectangular window of
a larger integer matrix, leaving the rest untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import PreconditionFailed

IntGrid = tuple[tuple[int, ...], ...]


def _as_grid(grid: Sequence[Sequence[int]]) -> IntGrid:
    rows = tuple(tuple(int(v) for v in row) for row in grid)
    if not rows or not rows[0]:
        raise PreconditionFailed("matrix must be non-empty")
    if any(len(row) != len(rows[0]) for row in rows):
        raise PreconditionFailed("matrix must be rectangular")
    return rows


def _check_zero_one(rows: IntGrid) -> None:
    for row in rows:
        for v in row:
            if v not in (0, 1):
                raise PreconditionFailed(f"entry {v!r} is not 0 or 1")


def _displace(slots: list[tuple[int, ...]], empty: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Shared displacement core on an ordered list of line contents.

    Slot 1 must be nonzero and the last slot zero; the content of each
    nonzero slot moves to the next nonzero slot's position (the last one
    to the final slot) and slot 1 is emptied.
    """
    m = len(slots)
    nonzero = [i for i, s in enumerate(slots) if any(s)]
    if not nonzero:
        raise PreconditionFailed("no nonzero column")
    if nonzero[0] != 0:
        raise PreconditionFailed("column 1 empty")
    if nonzero[-1] == m - 1:
        raise PreconditionFailed("last column nonzero")
    out = [empty] * m
    targets = nonzero[1:] + [m - 1]
    for src, dst in zip(nonzero, targets):
        out[dst] = slots[src]
    return out


def _displace_inverse(slots: list[tuple[int, ...]], empty: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Inverse of :func:`_displace`: last slot nonzero, slot 1 empty."""
    m = len(slots)
    nonzero = [i for i, s in enumerate(slots) if any(s)]
    if not nonzero:
        raise PreconditionFailed("no nonzero column")
    if nonzero[-1] != m - 1:
        raise PreconditionFailed("last column empty")
    if nonzero[0] == 0:
        raise PreconditionFailed("column 1 nonzero")
    out = [empty] * m
    targets = [0] + nonzero[:-1]
    for src, dst in zip(nonzero, targets):
        out[dst] = slots[src]
    return out


def h_shift(grid: Sequence[Sequence[int]]) -> IntGrid:
    """Displace columns left to right.

    Requires column 1 nonzero and the last column zero; raises
    :class:`PreconditionFailed` otherwise.
    """
    rows = _as_grid(grid)
    _check_zero_one(rows)
    m, n = len(rows), len(rows[0])
    cols = [tuple(rows[i][j] for i in range(m)) for j in range(n)]
    new_cols = _displace(cols, (0,) * m)
    return tuple(tuple(new_cols[j][i] for j in range(n)) for i in range(m))


def h_unshift(grid: Sequence[Sequence[int]]) -> IntGrid:
    """Inverse of :func:`h_shift` (last column nonzero, column 1 zero)."""
    rows = _as_grid(grid)
    _check_zero_one(rows)
    m, n = len(rows), len(rows[0])
    cols = [tuple(rows[i][j] for i in range(m)) for j in range(n)]
    new_cols = _displace_inverse(cols, (0,) * m)
    return tuple(tuple(new_cols[j][i] for j in range(n)) for i in range(m))


def v_shift(grid: Sequence[Sequence[int]]) -> IntGrid:
    """Displace rows bottom to top.

    Requires the last row nonzero and the first row zero.
    """
    rows = _as_grid(grid)
    _check_zero_one(rows)
    n = len(rows[0])
    slots = list(reversed(rows))  # bottom row first
    new_slots = _displace(slots, (0,) * n)
    return tuple(reversed(new_slots))


def v_unshift(grid: Sequence[Sequence[int]]) -> IntGrid:
    """Inverse of :func:`v_shift` (first row nonzero, last row zero)."""
    rows = _as_grid(grid)
    _check_zero_one(rows)
    n = len(rows[0])
    slots = list(reversed(rows))
    new_slots = _displace_inverse(slots, (0,) * n)
    return tuple(reversed(new_slots))


@dataclass(frozen=True)
class Region:
    """A non-empty rectangular window of a host matrix.

    Bounds are 1-based and inclusive.
    """

    top: int
    bottom: int
    left: int
    right: int

    def __post_init__(self):
        if self.top < 1 or self.left < 1 or self.top > self.bottom or self.left > self.right:
            raise PreconditionFailed(f"empty or negative region {self}")

    def check_within(self, m: int, n: int) -> None:
        if self.bottom > m or self.right > n:
            raise PreconditionFailed(f"region {self} exceeds {m}x{n} host")


_PRIMITIVES: dict[str, Callable[[Sequence[Sequence[int]]], IntGrid]] = {
    "h": h_shift,
    "v": v_shift,
}


def apply_in_region(
    host: Sequence[Sequence[int]],
    region: Region,
    f: str | Callable[[Sequence[Sequence[int]]], IntGrid],
) -> IntGrid:
    """Apply ``h_shift`` or ``v_shift`` to a window of ``host``.

    ``f`` is one of the two displacement primitives (the function itself
    or the key ``"h"`` / ``"v"``); no other function is accepted.  The
    window content must satisfy the primitive's precondition; failures
    are re-raised with the region attached.
    """
    func = _PRIMITIVES.get(f) if isinstance(f, str) else f if f in (h_shift, v_shift) else None
    if func is None:
        raise PreconditionFailed("only h_shift and v_shift may be applied in a region")
    return _apply_any(host, region, func)


def _apply_any(
    host: Sequence[Sequence[int]],
    region: Region,
    func: Callable[[Sequence[Sequence[int]]], IntGrid],
) -> IntGrid:
    """Region application without the public primitive restriction
    (the discharge inverse needs ``h_unshift``/``v_unshift``)."""
    rows = tuple(tuple(int(v) for v in row) for row in host)
    region.check_within(len(rows), len(rows[0]) if rows else 0)
    r0, r1, c0, c1 = region.top - 1, region.bottom, region.left - 1, region.right
    window = tuple(row[c0:c1] for row in rows[r0:r1])
    try:
        shifted = func(window)
    except PreconditionFailed as exc:
        raise PreconditionFailed(f"{exc} (in region {region})") from exc
    out = [list(row) for row in rows]
    for i, row in enumerate(shifted):
        out[r0 + i][c0:c1] = row
    return tuple(tuple(row) for row in out)
