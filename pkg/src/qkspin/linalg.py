"""Exact Gaussian elimination over a field.

Works for any element type supporting +, -, *, /, bool() and equality,
in particular `fractions.Fraction` and `qkspin.scalar.Scalar`.  Rows are
sparse dicts {column: value}; zero entries are never stored.  Pivot order
is fixed by (row order, smallest column), so every result is deterministic.
"""

from __future__ import annotations


def row_sub(row: dict, factor, other: dict) -> dict:
    """row - factor * other, sparsely."""
    out = dict(row)
    for col, val in other.items():
        new = out.get(col, 0) - factor * val
        if new:
            out[col] = new
        else:
            out.pop(col, None)
    return out


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self):
        self.rows = []     # reduced rows, each with leading coefficient 1
        self.pivots = []   # pivot column of each row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        """Return row reduced against the current echelon (not inserted)."""
        for piv, r in zip(self.pivots, self.rows):
            val = row.get(piv)
            if val:
                row = row_sub(row, val, r)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it increased the rank."""
        row = self.reduce(dict(row))
        if not row:
            return False
        piv = min(row)
        inv_val = row[piv]
        row = {c: v / inv_val for c, v in row.items()}
        # back-substitute into existing rows to keep the form reduced
        for k, r in enumerate(self.rows):
            val = r.get(piv)
            if val:
                self.rows[k] = row_sub(r, val, row)
        self.rows.append(row)
        self.pivots.append(piv)
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(dict(row))


def rank(rows) -> int:
    ech = Echelon()
    for row in rows:
        ech.add(row)
    return ech.rank


def kernel_basis(rows, ncols: int) -> list[dict]:
    """Basis of {x : A x = 0} for A given by sparse rows over columns 0..ncols-1.

    Each basis vector carries value 1 on its own free column and 0 on all
    other free columns, so coordinates with respect to this basis can be
    read off directly.
    """
    return kernel_basis_with_free(rows, ncols)[1]


def kernel_basis_with_free(rows, ncols: int) -> tuple[list[int], list[dict]]:
    """kernel_basis plus the free column owned by each basis vector."""
    ech = Echelon()
    for row in rows:
        ech.add(row)
    pivot_set = set(ech.pivots)
    free_cols = []
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: _one_like(ech)}
        for piv, r in zip(ech.pivots, ech.rows):
            val = r.get(free)
            if val:
                vec[piv] = -val
        free_cols.append(free)
        basis.append(vec)
    return free_cols, basis


def _one_like(ech: Echelon):
    # Kernel vectors need a multiplicative unit of the right type; rows are
    # normalised so any pivot value is 1 in the working field.
    for r in ech.rows:
        for v in r.values():
            return v / v
    from fractions import Fraction
    return Fraction(1)


def invert(matrix: list[list]) -> list[list]:
    """Exact inverse of a square dense matrix (list of rows)."""
    n = len(matrix)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_val = aug[col][col]
        aug[col] = [v / inv_val for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
