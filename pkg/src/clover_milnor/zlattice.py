"""Exact integer lattices: column Hermite normal form, membership and affine intersection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be >= 0")
        ent = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(ent) != self.rows or any(len(r) != self.cols for r in ent):
            raise ValueError(f"entries do not form a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        for c in columns:
            if len(c) != rows:
                raise ValueError("column length does not match row count")
        return cls(rows, len(columns), tuple(tuple(c[i] for c in columns) for i in range(rows)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls(size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        return IntMatrix(self.rows, self.cols + other.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.entries))

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("inner dimensions differ")
            ocols = other.columns()
            return IntMatrix(self.rows, other.cols,
                             tuple(tuple(_dot(r, c) for c in ocols) for r in self.entries))
        vec = list(other)
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != {self.cols} columns")
        return [_dot(r, vec) for r in self.entries]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def as_matrix(A) -> IntMatrix:
    if isinstance(A, IntMatrix):
        return A
    return IntMatrix.from_rows([[int(x) for x in r] for r in A])


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        qt, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - qt * x1
        y0, y1 = y1, y0 - qt * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def determinant(A: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    m = [list(r) for r in A.entries]
    size = A.rows
    sign, prev = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1] if size else 1


@dataclass(frozen=True)
class HNFResult:
    H: IntMatrix
    U: IntMatrix
    pivots: tuple[tuple[int, int], ...]  # (row, column) of each pivot

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis(self) -> IntMatrix:
        """The nonzero columns of H, a canonical basis of the column lattice."""
        return IntMatrix.from_columns(self.H.columns()[: self.rank], self.H.rows)


def hnf_full(A) -> HNFResult:
    """Column Hermite normal form H = A U with U unimodular.

    H is lower echelon: pivot (r_c, c) for c < rank with r_0 < r_1 < ...,
    positive pivots, entries left of a pivot reduced into [0, pivot), and
    zero columns from ``rank`` on.  This form is unique for the lattice.
    """
    A = as_matrix(A)
    rows, cols = A.rows, A.cols
    # work column-wise: each column is a list holding the H part then the U part
    hc = [list(A.column(j)) for j in range(cols)]
    uc = [[int(i == j) for i in range(cols)] for j in range(cols)]

    def combine(c1: int, c2: int, a: int, b: int, c: int, d: int) -> None:
        # (col c1, col c2) <- (a*c1 + b*c2, c*c1 + d*c2)
        for vecs in (hc, uc):
            v1, v2 = vecs[c1], vecs[c2]
            vecs[c1] = [a * x + b * y for x, y in zip(v1, v2)]
            vecs[c2] = [c * x + d * y for x, y in zip(v1, v2)]

    pivots = []
    pc = 0
    for r in range(rows):
        if pc == cols:
            break
        for c in range(pc + 1, cols):
            b = hc[c][r]
            if b == 0:
                continue
            a = hc[pc][r]
            g, x, y = xgcd(a, b)
            combine(pc, c, x, y, -b // g, a // g)
        p = hc[pc][r]
        if p == 0:
            continue
        if p < 0:
            hc[pc] = [-x for x in hc[pc]]
            uc[pc] = [-x for x in uc[pc]]
            p = -p
        for c in range(pc):
            f = hc[c][r] // p
            if f:
                hc[c] = [x - f * y for x, y in zip(hc[c], hc[pc])]
                uc[c] = [x - f * y for x, y in zip(uc[c], uc[pc])]
        pivots.append((r, pc))
        pc += 1
    H = IntMatrix.from_columns(hc, rows)
    U = IntMatrix.from_columns(uc, cols)
    return HNFResult(H, U, tuple(pivots))


def hnf(A) -> tuple[IntMatrix, IntMatrix]:
    res = hnf_full(A)
    return res.H, res.U


@dataclass(frozen=True)
class Solution:
    x: tuple[int, ...] | None
    residual: tuple[int, ...]  # b minus the part reached by back-substitution on H
    blocking_row: int | None   # first row where the system became unsolvable

    @property
    def solvable(self) -> bool:
        return self.x is not None


def solve(A, b: Sequence[int]) -> Solution:
    """Integer solution of A x = b via the column HNF, with a residual certificate on failure."""
    A = as_matrix(A)
    b = [int(v) for v in b]
    if len(b) != A.rows:
        raise ValueError(f"right-hand side has length {len(b)}, matrix has {A.rows} rows")
    res = hnf_full(A)
    H = res.H
    resid = list(b)
    y = [0] * A.cols
    pivot_rows = {r: c for r, c in res.pivots}
    for r in range(A.rows):
        if r not in pivot_rows:
            if resid[r]:
                return Solution(None, tuple(resid), r)
            continue
        c = pivot_rows[r]
        p = H.entries[r][c]
        qt, rem = divmod(resid[r], p)
        if rem:
            return Solution(None, tuple(resid), r)
        y[c] = qt
        col = H.column(c)
        resid = [v - qt * h for v, h in zip(resid, col)]
    x = res.U @ y
    return Solution(tuple(x), tuple(resid), None)


def member(A, b: Sequence[int]) -> list[int] | None:
    """Some integer x with A x = b, or None when b is outside the column lattice."""
    sol = solve(A, b)
    return list(sol.x) if sol.x is not None else None


def _affine_system(b1, G1, b2, G2) -> tuple[IntMatrix, list[int]]:
    G1, G2 = as_matrix(G1), as_matrix(G2)
    b1, b2 = [int(v) for v in b1], [int(v) for v in b2]
    if len(b1) != len(b2):
        raise ValueError("base vectors have different lengths")
    if G1.rows != len(b1) or G2.rows != len(b2):
        raise ValueError("generator row count must equal the base length")
    return G1.hstack(-G2), [y - x for x, y in zip(b1, b2)]


def affine_intersection(b1, G1, b2, G2) -> Solution:
    """Solve b1 + G1 m = b2 + G2 m'; a solution x is (m, m') concatenated."""
    M, rhs = _affine_system(b1, G1, b2, G2)
    return solve(M, rhs)


def affine_intersects(b1, G1, b2, G2) -> bool:
    return affine_intersection(b1, G1, b2, G2).solvable


def same_span(A, B) -> bool:
    """Whether two integer matrices with equal row count generate the same column lattice."""
    A, B = as_matrix(A), as_matrix(B)
    if A.rows != B.rows:
        raise ValueError("row counts differ")
    return hnf_full(A).basis() == hnf_full(B).basis()

