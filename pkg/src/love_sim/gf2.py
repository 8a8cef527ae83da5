"""Small GF(2) linear algebra helpers on int bit masks and 0/1 matrices."""

from __future__ import annotations

import numpy as np


def rank(rows: list[int]) -> int:
    """Rank of a list of bit-mask row vectors."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return len(basis)


class Span:
    """Incremental span membership test over GF(2) bit masks."""

    def __init__(self, rows: list[int] | None = None):
        self._basis: list[int] = []
        for row in rows or []:
            self.add(row)

    def add(self, row: int) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        for b in self._basis:
            row = min(row, row ^ b)
        if row:
            self._basis.append(row)
            self._basis.sort(reverse=True)
            return True
        return False

    def contains(self, row: int) -> bool:
        for b in self._basis:
            row = min(row, row ^ b)
        return row == 0

    @property
    def dim(self) -> int:
        return len(self._basis)


def invert(matrix: np.ndarray) -> np.ndarray:
    """Inverse of a square 0/1 matrix over GF(2); raises on singular input."""
    m = np.array(matrix, dtype=np.uint8) % 2
    size = m.shape[0]
    if m.shape != (size, size):
        raise ValueError("matrix must be square")
    aug = np.concatenate([m, np.eye(size, dtype=np.uint8)], axis=1)
    row = 0
    for col in range(size):
        pivots = np.nonzero(aug[row:, col])[0]
        if pivots.size == 0:
            raise ValueError("matrix is singular over GF(2)")
        pivot = row + int(pivots[0])
        if pivot != row:
            aug[[row, pivot]] = aug[[pivot, row]]
        for other in range(size):
            if other != row and aug[other, col]:
                aug[other] ^= aug[row]
        row += 1
    return aug[:, size:].copy()
