"""Dense exact matrices over the rationals.

Rank and nullspace run fraction-free: rows are cleared to integers, a Bareiss
elimination (exact divisions only, no gcd churn) brings the matrix to echelon
form, and kernel vectors are back-substituted over `Fraction`.  The kernel
basis is then canonicalized to reduced echelon form with unit pivots, so the
result is unique for a given subspace — independent of pivot choices,
platform, and evaluation order.

Pivot selection inside Bareiss favours the entry of largest bit length, which
controls intermediate swell on the large interpolation systems this module
feeds (final entries stay near the Hadamard bound instead of far above it).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import NonSquareError, SingularMatrixError
from .scalars import as_fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ExactMatrix:
    """Immutable dense matrix with `Fraction` entries, row-major storage."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(as_fraction(x) for x in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # --- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("need at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, [_ONE if i == j else _ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, [_ZERO] * (rows * cols))

    @classmethod
    def diagonal(cls, values) -> "ExactMatrix":
        values = [as_fraction(v) for v in values]
        n = len(values)
        return cls(n, n, [values[i] if i == j else _ZERO for i in range(n) for j in range(n)])

    @classmethod
    def column_vector(cls, values) -> "ExactMatrix":
        values = list(values)
        return cls(len(values), 1, values)

    @classmethod
    def from_upper_triangle(cls, n: int, upper) -> "ExactMatrix":
        """Symmetric matrix from its upper-triangle entries, row-major (i <= j)."""
        upper = [as_fraction(x) for x in upper]
        if len(upper) != n * (n + 1) // 2:
            raise ValueError("wrong number of upper-triangle entries")
        grid = [[_ZERO] * n for _ in range(n)]
        k = 0
        for i in range(n):
            for j in range(i, n):
                grid[i][j] = upper[k]
                grid[j][i] = upper[k]
                k += 1
        return cls.from_rows(grid)

    # --- access -------------------------------------------------------

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def upper_triangle(self) -> tuple:
        if self.rows != self.cols:
            raise NonSquareError("upper triangle of a non-square matrix")
        return tuple(self[i, j] for i in range(self.rows) for j in range(i, self.cols))

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExactMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix({self.rows}x{self.cols}: {body})"

    # --- arithmetic ---------------------------------------------------

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols,
                           [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "ExactMatrix":
        c = as_fraction(c)
        return ExactMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                s = _ZERO
                for t in range(k):
                    s += arow[t] * b[t * m + j]
                out.append(s)
        return ExactMatrix(n, m, out)

    def matpow(self, e: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise NonSquareError("power of a non-square matrix")
        out = ExactMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                out = out.matmul(base)
            base = base.matmul(base)
            e >>= 1
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows,
                           [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise NonSquareError("trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), _ZERO)

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_skew(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == -self[j, i] for i in range(self.rows) for j in range(i, self.cols))

    def _same_shape(self, other: "ExactMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    # --- exact linear algebra -----------------------------------------

    def _integer_rows(self) -> list[list[int]]:
        """Rows scaled to coprime integers; preserves row space and kernel."""
        out = []
        for i in range(self.rows):
            row = self.row(i)
            denom = 1
            for x in row:
                denom = lcm(denom, x.denominator)
            ints = [int(x * denom) for x in row]
            content = 0
            for v in ints:
                content = gcd(content, v)
            if content > 1:
                ints = [v // content for v in ints]
            out.append(ints)
        return out

    def rank(self) -> int:
        _, pivots, _ = _bareiss_echelon(self._integer_rows(), self.cols)
        return len(pivots)

    def nullspace(self) -> list["ExactMatrix"]:
        """Canonical exact kernel basis, as column vectors.

        The basis rows form the reduced echelon form (unit pivots) of the
        kernel, so the output is unique for the subspace.
        """
        vectors = kernel_basis(self)
        return [ExactMatrix.column_vector(v) for v in vectors]

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise NonSquareError("determinant of a non-square matrix")
        n = self.rows
        scale = _ONE
        int_rows = []
        for i in range(n):
            row = self.row(i)
            denom = 1
            for x in row:
                denom = lcm(denom, x.denominator)
            int_rows.append([int(x * denom) for x in row])
            scale /= denom
        echelon, pivots, sign = _bareiss_echelon(int_rows, n)
        if len(pivots) < n:
            return _ZERO
        return scale * sign * echelon[n - 1][pivots[n - 1]]

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise NonSquareError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [_ONE if i == j else _ZERO for j in range(n)]
               for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            if piv != col:
                aug[col], aug[piv] = aug[piv], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return ExactMatrix.from_rows([row[n:] for row in aug])

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form over Fraction (for small matrices)."""
        rows = [list(self.row(i)) for i in range(self.rows)]
        return _fraction_rref(rows, self.cols)


def _bareiss_echelon(rows: list[list[int]], ncols: int):
    """Fraction-free row echelon form of integer rows.

    Returns (echelon rows, pivot column list, sign of the row permutation).
    Entries stay exact minors of the input, so no rational arithmetic and no
    gcd reductions happen in the elimination loop.
    """
    m = len(rows)
    pivots: list[int] = []
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        best_bits = -1
        best_row = -1
        for i in range(r, m):
            v = rows[i][c]
            if v:
                bits = v.bit_length()
                if bits > best_bits:
                    best_bits = bits
                    best_row = i
        if best_row < 0:
            continue
        if best_row != r:
            rows[r], rows[best_row] = rows[best_row], rows[r]
            sign = -sign
        pv = rows[r][c]
        for i in range(r + 1, m):
            vi = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            # Rows with a zero leading entry must still be scaled by pv/prev,
            # or the exact-division invariant of later steps breaks.
            if vi:
                for j in range(c, ncols):
                    row_i[j] = (pv * row_i[j] - vi * row_r[j]) // prev
            else:
                for j in range(c, ncols):
                    row_i[j] = (pv * row_i[j]) // prev
        prev = pv
        pivots.append(c)
        r += 1
    return rows, pivots, sign


def kernel_basis(matrix: ExactMatrix) -> list[tuple]:
    """Canonical kernel basis as tuples of Fractions (reduced echelon rows)."""
    ncols = matrix.cols
    echelon, pivots, _ = _bareiss_echelon(matrix._integer_rows(), ncols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    if not free_cols:
        return []
    raw = []
    for f in free_cols:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            row = echelon[i]
            s = row[f] * v[f] if f > c else _ZERO
            for c2 in pivots[i + 1:]:
                if row[c2] and v[c2]:
                    s += row[c2] * v[c2]
            if s:
                v[c] = -Fraction(s, row[c])
        raw.append(v)
    reduced, _ = _fraction_rref(raw, ncols)
    return [tuple(r) for r in reduced]


def _fraction_rref(rows: list[list[Fraction]], ncols: int):
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    kept = [rows[i] for i in range(len(pivots))]
    return kept, pivots
