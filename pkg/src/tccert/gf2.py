"""Incremental row echelon form over GF(2) with int bitsets."""

from __future__ import annotations


def lowest_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


class EchelonBasis:
    """Span of inserted vectors; pivot of a row is its lowest set bit.

    Reduction against the pivots gives the unique representative of a coset
    that vanishes on every pivot column, so residues are canonical for a
    fixed column order.
    """

    def __init__(self) -> None:
        self.pivots: dict[int, int] = {}
        self._order: list[int] | None = None

    def __len__(self) -> int:
        return len(self.pivots)

    def insert(self, v: int) -> bool:
        """Add ``v`` to the span; returns True if the rank grew."""
        while v:
            low = lowest_bit(v)
            row = self.pivots.get(low)
            if row is None:
                self.pivots[low] = v
                self._order = None
                return True
            v ^= row
        return False

    def reduce(self, v: int) -> int:
        if self._order is None:
            self._order = sorted(self.pivots)
        for low in self._order:
            if low >= v.bit_length():
                break
            if (v >> low) & 1:
                v ^= self.pivots[low]
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0
