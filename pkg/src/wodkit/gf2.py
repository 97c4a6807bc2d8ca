"""Linear systems over GF(2) with rows stored as int bitsets."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Gf2System:
    """Constraints ``popcount(row & x) % 2 == rhs`` over the variables in ``variables``.

    Bit ``j`` of a row is the coefficient of variable ``j``; variable indices
    are the vertex indices of the graph the system came from.
    """

    variables: int
    rows: list[int] = field(default_factory=list)
    rhs: list[int] = field(default_factory=list)

    def add(self, row: int, bit: int) -> None:
        self.rows.append(row & self.variables)
        self.rhs.append(bit & 1)

    def _reduce(self) -> tuple[list[tuple[int, int, int]], bool]:
        # Gauss-Jordan elimination; pivots are taken on the lowest available column.
        pivots: list[tuple[int, int, int]] = []  # (column, row, rhs)
        consistent = True
        for row, bit in zip(self.rows, self.rhs):
            for col, prow, pbit in pivots:
                if row >> col & 1:
                    row ^= prow
                    bit ^= pbit
            if row == 0:
                if bit:
                    consistent = False
                continue
            col = (row & -row).bit_length() - 1
            for i, (c2, r2, b2) in enumerate(pivots):
                if r2 >> col & 1:
                    pivots[i] = (c2, r2 ^ row, b2 ^ bit)
            pivots.append((col, row, bit))
        pivots.sort()
        return pivots, consistent

    def solve(self) -> int | None:
        """Canonical solution (free variables zero) as a bitmask, or None."""
        pivots, ok = self._reduce()
        if not ok:
            return None
        x = 0
        for col, _row, bit in pivots:
            if bit:
                x |= 1 << col
        return x

    def kernel_basis(self) -> list[int]:
        """Basis of the homogeneous solution space, one vector per free variable."""
        pivots, _ = self._reduce()
        pivot_cols = 0
        for col, _row, _bit in pivots:
            pivot_cols |= 1 << col
        free = self.variables & ~pivot_cols
        basis = []
        while free:
            low = free & -free
            f = low.bit_length() - 1
            vec = low
            for col, row, _bit in pivots:
                if row >> f & 1:
                    vec |= 1 << col
            basis.append(vec)
            free ^= low
        return basis

    def rank(self) -> int:
        return len(self._reduce()[0])
