"""Exact integer matrices, Smith normal form and column Hermite form.

All entries are Python ints, so nothing overflows.  Matrices may have zero
rows or zero columns; a ``g x 0`` matrix is the zero map ``Z^0 -> Z^g``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("entry count does not match rows x cols")

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: Optional[int] = None) -> "IntMatrix":
        columns = [tuple(int(x) for x in c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        if any(len(c) != rows for c in columns):
            raise ValueError("columns of unequal length")
        data = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(rows, len(columns), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int], rows: Optional[int] = None,
                 cols: Optional[int] = None) -> "IntMatrix":
        k = len(entries)
        rows = k if rows is None else rows
        cols = k if cols is None else cols
        return cls(rows, cols, tuple(
            tuple(int(entries[i]) if i == j and i < k else 0 for j in range(cols))
            for i in range(rows)))

    # -- access ---------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.data[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    # -- arithmetic -----------------------------------------------------
    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.data))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.data)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.data))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.data, other.data)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(k * x for x in r) for r in self.data))

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        out = self
        for o in others:
            if o.rows != out.rows:
                raise ValueError("hstack needs equal row counts")
            out = IntMatrix(out.rows, out.cols + o.cols,
                            tuple(a + b for a, b in zip(out.data, o.data)))
        return out

    def vstack(self, *others: "IntMatrix") -> "IntMatrix":
        out = self
        for o in others:
            if o.cols != out.cols:
                raise ValueError("vstack needs equal column counts")
            out = IntMatrix(out.rows + o.rows, out.cols, out.data + o.data)
        return out

    def select_rows(self, idx: Iterable[int]) -> "IntMatrix":
        idx = list(idx)
        return IntMatrix(len(idx), self.cols, tuple(self.data[i] for i in idx))

    def select_columns(self, idx: Iterable[int]) -> "IntMatrix":
        idx = list(idx)
        return IntMatrix(self.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.data))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"[{self.rows}x{self.cols} empty]"
        return "\n".join("[" + " ".join(f"{x:>4}" for x in r) + "]" for r in self.data)


def determinant(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [list(r) for r in m.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def content(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(x // g for x in v)


# ---------------------------------------------------------------------------
# Smith normal form

@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form.

    ``U_inv`` is carried along because the cokernel needs it to lift
    canonical coordinates back to presentation generators.
    """
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    invariant_factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def snf(M: IntMatrix) -> SmithForm:
    """Smith normal form with unimodular transforms.

    Pivot rule: the nonzero entry of least absolute value in the active
    submatrix, ties broken by lowest (row, col).  The output is therefore a
    deterministic function of ``M``.
    """
    m, n = M.rows, M.cols
    A = [list(r) for r in M.data]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    # Row op "row_i += q * row_j" acts on U the same way; U_inv gets the
    # inverse column op "col_j -= q * col_i".
    def row_add(i, j, q):
        if q == 0:
            return
        Ai, Aj = A[i], A[j]
        for c in range(n):
            Ai[c] += q * Aj[c]
        Ui_, Uj = U[i], U[j]
        for c in range(m):
            Ui_[c] += q * Uj[c]
        for r in range(m):
            Ui[r][j] -= q * Ui[r][i]

    def row_swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in range(m):
            Ui[r][i], Ui[r][j] = Ui[r][j], Ui[r][i]

    def row_neg(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for r in range(m):
            Ui[r][i] = -Ui[r][i]

    def col_add(i, j, q):
        # col_i += q * col_j
        if q == 0:
            return
        for r in range(m):
            A[r][i] += q * A[r][j]
        for r in range(n):
            V[r][i] += q * V[r][j]

    def col_swap(i, j):
        if i == j:
            return
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    factors = []
    t = 0
    while t < min(m, n):
        piv = find_pivot(t)
        if piv is None:
            break
        while True:
            _, i, j = piv
            row_swap(t, i)
            col_swap(t, j)
            p = A[t][t]
            dirty = False
            for r in range(t + 1, m):
                if A[r][t]:
                    row_add(r, t, -(A[r][t] // p))
                    dirty = dirty or A[r][t] != 0
            for c in range(t + 1, n):
                if A[t][c]:
                    col_add(c, t, -(A[t][c] // p))
                    dirty = dirty or A[t][c] != 0
            if dirty:
                piv = find_pivot(t)
                continue
            # row and column clear; enforce divisibility on the rest
            bad = None
            for r in range(t + 1, m):
                for c in range(t + 1, n):
                    if A[r][c] % p:
                        bad = r
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
            piv = find_pivot(t)
        if A[t][t] < 0:
            row_neg(t)
        factors.append(A[t][t])
        t += 1

    D = IntMatrix.from_rows(A, n)
    return SmithForm(IntMatrix.from_rows(U, m), D, IntMatrix.from_rows(V, n),
                     IntMatrix.from_rows(Ui, m), tuple(factors))


def rank(M: IntMatrix) -> int:
    return snf(M).rank


# ---------------------------------------------------------------------------
# Column Hermite form, lattice membership, integer solving

@dataclass(frozen=True)
class HermiteForm:
    """``M @ W == [H | 0]``: ``H`` is column echelon with ``len(pivots)`` columns.

    ``pivots[k]`` is the row of the leading (positive) entry of column ``k``;
    entries of ``H`` above a pivot are zero and entries to the left of a
    pivot in its row are reduced into ``[0, pivot)``.
    """
    H: IntMatrix
    W: IntMatrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def kernel_basis(self) -> IntMatrix:
        r = self.rank
        return self.W.select_columns(range(r, self.W.cols))

    def solve(self, v: Sequence[int]) -> Optional[tuple[int, ...]]:
        """Coefficients ``z`` with ``H @ z == v``, or None if ``v`` is not in the lattice."""
        v = list(v)
        H = self.H
        if len(v) != H.rows:
            raise ValueError("vector length does not match lattice ambient rank")
        z = [0] * self.rank
        k = 0
        for i in range(H.rows):
            if k < self.rank and self.pivots[k] == i:
                p = H[i, k]
                if v[i] % p:
                    return None
                q = v[i] // p
                z[k] = q
                if q:
                    for r in range(i, H.rows):
                        v[r] -= q * H[r, k]
                k += 1
            elif v[i] != 0:
                return None
        return tuple(z)

    def contains(self, v: Sequence[int]) -> bool:
        return self.solve(v) is not None


def column_hnf(M: IntMatrix) -> HermiteForm:
    m, n = M.rows, M.cols
    A = [list(r) for r in M.data]
    W = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_combine(i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j), ad - bc = +-1
        for r in range(m):
            x, y = A[r][i], A[r][j]
            A[r][i], A[r][j] = a * x + b * y, c * x + d * y
        for r in range(n):
            x, y = W[r][i], W[r][j]
            W[r][i], W[r][j] = a * x + b * y, c * x + d * y

    pivots = []
    k = 0
    for i in range(m):
        if k >= n:
            break
        for j in range(k + 1, n):
            if A[i][j] == 0:
                continue
            x, y = A[i][k], A[i][j]
            g, s, t = _xgcd(x, y)
            col_combine(k, j, s, t, -y // g, x // g)
        if A[i][k] == 0:
            continue
        if A[i][k] < 0:
            _neg_col(A, W, k, m, n)
        p = A[i][k]
        for j in range(k):
            q = A[i][j] // p
            if q:
                for r in range(m):
                    A[r][j] -= q * A[r][k]
                for r in range(n):
                    W[r][j] -= q * W[r][k]
        pivots.append(i)
        k += 1
    H = IntMatrix.from_rows([row[:k] for row in A], k)
    return HermiteForm(H, IntMatrix.from_rows(W, n), tuple(pivots))


def _neg_col(A, W, k, m, n):
    for r in range(m):
        A[r][k] = -A[r][k]
    for r in range(n):
        W[r][k] = -W[r][k]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) > 0`` (for not both zero)."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    x, y = a, b
    while y:
        q = x // y
        x, y = y, x - q * y
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    return _xgcd(a, b)


def kernel(M: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the integer kernel ``{x : M x = 0}``; saturated by construction."""
    return column_hnf(M).kernel_basis()


def solve_integer(M: IntMatrix, v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Some integer ``x`` with ``M x = v`` (Hermite back-substitution), or None."""
    hf = column_hnf(M)
    z = hf.solve(v)
    if z is None:
        return None
    return hf.W.select_columns(range(hf.rank)).apply(z) if hf.rank else (0,) * M.cols


def lattice_contains(M: IntMatrix, v: Sequence[int]) -> bool:
    """Is ``v`` in the Z-span of the columns of ``M``?"""
    return column_hnf(M).contains(v)
