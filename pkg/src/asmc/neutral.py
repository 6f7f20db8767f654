"""Neutralizing: one-minus ASMs as (neutral matrix, charge) pairs.

Discharging a positive matrix and recharging with the whole charge moved
into the closing sum yields a *neutral* matrix; remembering the charge
gives a reversible pair.  Negative matrices go through vertical
reflection.  The pair (N, E) always satisfies ``-ell(N) <= E <= c(N)``.

On pairs, replacing the charge E by ``c(N) - ell(N) - E`` is an
involution; conjugated back to matrices it swaps the electric and the
magnetic charge while fixing everything else (r, i, J and the rows down
to the opening row).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import CellSums, SignClass, cell_sums, sign_class
from .discharge import DischargeTuple, discharge, recharge
from .errors import InvalidPair, NotOneMinus
from .matrix import AsmMatrix, matrix_from_json, matrix_to_json, reflect


@dataclass(frozen=True)
class NeutralPair:
    """A neutral one-minus ASM with an integer charge in
    ``[-ell(N), c(N)]``.  Invariants are checked eagerly; downstream code
    may assume them."""

    matrix: AsmMatrix
    charge: int

    def __post_init__(self):
        try:
            cls = sign_class(self.matrix)
        except NotOneMinus as exc:
            raise InvalidPair(f"pair matrix must have exactly one -1: {exc}") from exc
        if cls is not SignClass.NEUTRAL:
            raise InvalidPair(f"pair matrix must be neutral, got {cls.value}")
        sums = self.sums
        if not -sums.ell <= self.charge <= sums.c:
            raise InvalidPair(
                f"charge {self.charge} outside [{-sums.ell}, {sums.c}]"
            )

    @property
    def sums(self) -> CellSums:
        return cell_sums(self.matrix)

    def to_json(self) -> dict:
        return {"N": matrix_to_json(self.matrix), "E": self.charge}


def pair_from_json(obj: dict) -> NeutralPair:
    from .errors import ParseError

    try:
        return NeutralPair(matrix=matrix_from_json(obj["N"]), charge=int(obj["E"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"pair JSON needs a matrix N and an integer E: {exc}") from exc


def neutralize(a: AsmMatrix) -> NeutralPair:
    """Encode a one-minus ASM as a (neutral matrix, charge) pair."""
    cls = sign_class(a)  # raises NotOneMinus
    if cls is SignClass.NEUTRAL:
        return NeutralPair(a, 0)
    if cls is SignClass.NEGATIVE:
        mirrored = neutralize(reflect(a))
        return NeutralPair(reflect(mirrored.matrix), -mirrored.charge)
    t = discharge(a)
    neutral = recharge(
        DischargeTuple(t.opening_row, t.perm, t.closing_sum + t.charge, 0)
    )
    return NeutralPair(neutral, t.charge)


def restore(pair: NeutralPair) -> AsmMatrix:
    """Inverse of :func:`neutralize`."""
    if pair.charge == 0:
        return pair.matrix
    if pair.charge < 0:
        return reflect(restore(NeutralPair(reflect(pair.matrix), -pair.charge)))
    t = discharge(pair.matrix)
    return recharge(
        DischargeTuple(t.opening_row, t.perm, t.closing_sum - pair.charge, pair.charge)
    )


def flip_charge(pair: NeutralPair) -> NeutralPair:
    """Reflect the charge within its admissible interval:
    ``E -> c(N) - ell(N) - E``.  An involution."""
    sums = pair.sums
    return NeutralPair(pair.matrix, sums.c - sums.ell - pair.charge)


def swap_charges(a: AsmMatrix) -> AsmMatrix:
    """The matrix-level involution exchanging electric and magnetic
    charges; preserves r, i, J and commutes with reflection."""
    return restore(flip_charge(neutralize(a)))
