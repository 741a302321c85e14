"""Exact determinants and ranks for integer and cyclotomic matrices.

Matrices hold either arbitrary-precision integers or ExactScalar entries.
Determinants use fraction-free elimination (Bareiss) in the integer case and
ordinary Gaussian elimination over the scalar field otherwise, pivoting on
the first nonzero entry of each column.  Ranks use the matching echelon
procedure on rectangular shapes.
"""

from __future__ import annotations

from .errors import IndexOutOfRange, ShapeError, SideLimitExceeded
from .exact_arith import CycInt, ExactScalar, root_power

__all__ = ["ExactMatrix", "det_exact", "rank_exact", "dft_submatrix"]

DEFAULT_SIDE_LIMIT = 64

_INT = "int"
_SCALAR = "scalar"


class ExactMatrix:
    """Row-major matrix of integers or of ExactScalar entries.

    ``order`` is the common cyclotomic order of the entries; integer
    matrices carry order 1.
    """

    __slots__ = ("rows", "cols", "order", "entries", "kind")

    def __init__(self, rows: int, cols: int, entries, order: int = 1):
        if rows < 0 or cols < 0:
            raise ShapeError("negative dimensions")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ShapeError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        if entries and all(isinstance(e, (int, bool)) for e in entries):
            kind = _INT
            if order != 1:
                raise ValueError("integer matrices carry order 1")
        elif entries:
            if not all(isinstance(e, ExactScalar) for e in entries):
                raise TypeError("entries must be all int or all ExactScalar")
            orders = {e.order for e in entries}
            if len(orders) != 1:
                raise ValueError(f"mixed cyclotomic orders {sorted(orders)}")
            order = orders.pop()
            kind = _SCALAR
        else:
            kind = _INT if order == 1 else _SCALAR
        self.rows = rows
        self.cols = cols
        self.order = order
        self.entries = entries
        self.kind = kind

    @classmethod
    def from_rows(cls, rows_of_entries) -> "ExactMatrix":
        rows_of_entries = [list(r) for r in rows_of_entries]
        nrows = len(rows_of_entries)
        ncols = len(rows_of_entries[0]) if nrows else 0
        if any(len(r) != ncols for r in rows_of_entries):
            raise ShapeError("ragged rows")
        flat = []
        for r in rows_of_entries:
            for e in r:
                flat.append(ExactScalar(e) if isinstance(e, CycInt) else e)
        return cls(nrows, ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def is_integer(self) -> bool:
        return self.kind == _INT

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row_list(self, i: int) -> list:
        base = i * self.cols
        return list(self.entries[base : base + self.cols])

    def to_rows(self) -> list[list]:
        return [self.row_list(i) for i in range(self.rows)]

    def column_submatrix(self, cols) -> "ExactMatrix":
        cols = list(cols)
        ncols = self.cols
        if any(c < 0 or c >= ncols for c in cols):
            raise ShapeError("column index out of range")
        ents = []
        for i in range(self.rows):
            base = i * ncols
            for c in cols:
                ents.append(self.entries[base + c])
        return ExactMatrix(self.rows, len(cols), ents, self.order)

    def submatrix(self, rows, cols) -> "ExactMatrix":
        rows = list(rows)
        cols = list(cols)
        ents = [self.entries[i * self.cols + j] for i in rows for j in cols]
        return ExactMatrix(len(rows), len(cols), ents, self.order)

    def transpose(self) -> "ExactMatrix":
        ents = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return ExactMatrix(self.cols, self.rows, ents, self.order)

    def is_zero(self) -> bool:
        if self.kind == _INT:
            return not any(self.entries)
        return all(e.is_zero() for e in self.entries)

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        if self.kind != other.kind or self.order != other.order:
            raise TypeError("matmul requires matching entry kinds and orders")
        a, b = self.to_rows(), other.to_rows()
        n, m, p = self.rows, self.cols, other.cols
        if self.kind == _INT:
            zero = 0
        else:
            zero = ExactScalar.zero(self.order)
        out = []
        for i in range(n):
            ai = a[i]
            for j in range(p):
                acc = zero
                for k in range(m):
                    acc = acc + ai[k] * b[k][j]
                out.append(acc)
        return ExactMatrix(n, p, out, self.order)

    def to_complex_rows(self) -> list[list[complex]]:
        if self.kind == _INT:
            return [[complex(e) for e in self.row_list(i)] for i in range(self.rows)]
        return [[e.to_complex() for e in self.row_list(i)] for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and other.rows == self.rows
            and other.cols == self.cols
            and other.order == self.order
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.order, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, order={self.order}, kind={self.kind})"


def _det_int(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    m = [r[:] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        pk = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def _det_scalar(rows: list[list[ExactScalar]], order: int) -> ExactScalar:
    n = len(rows)
    if n == 0:
        return ExactScalar.one(order)
    m = [r[:] for r in rows]
    det = ExactScalar.one(order)
    negate = False
    for k in range(n):
        pivot = next((i for i in range(k, n) if not m[i][k].is_zero()), None)
        if pivot is None:
            return ExactScalar.zero(order)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            negate = not negate
        pk = m[k][k]
        det = det * pk
        if k == n - 1:
            break
        inv_p = pk.inverse()
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            aik = row_i[k]
            if aik.is_zero():
                continue
            f = aik * inv_p
            for j in range(k + 1, n):
                akj = row_k[j]
                if not akj.is_zero():
                    row_i[j] = row_i[j] - f * akj
    return -det if negate else det


def det_exact(a: ExactMatrix, side_limit: int = DEFAULT_SIDE_LIMIT) -> ExactScalar:
    """Exact determinant; 0x0 matrices have determinant one."""
    if a.rows != a.cols:
        raise ShapeError(f"determinant of a {a.rows}x{a.cols} matrix")
    if a.rows > side_limit:
        raise SideLimitExceeded(f"side {a.rows} exceeds limit {side_limit}")
    if a.kind == _INT:
        return ExactScalar.from_int(1, _det_int(a.to_rows()))
    return _det_scalar(a.to_rows(), a.order)


def _rank_int(rows: list[list[int]], nrows: int, ncols: int) -> int:
    m = [r[:] for r in rows]
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][c]), None)
        if pivot is None:
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        row_r = m[rank]
        for i in range(rank + 1, nrows):
            row_i = m[i]
            aic = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (p * row_i[j] - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def _rank_scalar(rows: list[list[ExactScalar]], nrows: int, ncols: int) -> int:
    m = [r[:] for r in rows]
    rank = 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, nrows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
        inv_p = m[rank][c].inverse()
        row_r = m[rank]
        for i in range(rank + 1, nrows):
            row_i = m[i]
            aic = row_i[c]
            if aic.is_zero():
                continue
            f = aic * inv_p
            for j in range(c + 1, ncols):
                arj = row_r[j]
                if not arj.is_zero():
                    row_i[j] = row_i[j] - f * arj
            row_i[c] = ExactScalar.zero(row_i[c].order)
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_exact(a: ExactMatrix) -> int:
    """Exact rank over the entry field."""
    if a.rows == 0 or a.cols == 0:
        return 0
    if a.kind == _INT:
        return _rank_int(a.to_rows(), a.rows, a.cols)
    return _rank_scalar(a.to_rows(), a.rows, a.cols)


def dft_submatrix(order: int, rows, cols=None) -> ExactMatrix:
    """Rows of the order-th DFT matrix as an exact cyclotomic matrix.

    Entry (i, j) is w^(rows[i] * cols[j]) with w a primitive order-th root
    of unity; cols defaults to the whole residue range.
    """
    rows = list(rows)
    cols = list(range(order)) if cols is None else list(cols)
    if any(r < 0 or r >= order for r in rows):
        raise IndexOutOfRange("row index out of residue range")
    if any(c < 0 or c >= order for c in cols):
        raise IndexOutOfRange("column index out of residue range")
    ents = [ExactScalar(root_power(order, m * n)) for m in rows for n in cols]
    return ExactMatrix(len(rows), len(cols), ents, order)
