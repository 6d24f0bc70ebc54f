"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples of Python ints (arbitrary precision).
Rational vectors are tuples of :class:`fractions.Fraction`.  Nothing in
here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

IntMatrix = tuple[tuple[int, ...], ...]
RationalVector = tuple[Fraction, ...]


class SmithDecomposition(NamedTuple):
    """``U @ A @ V == S`` with U, V unimodular and S in Smith normal form."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """The nonzero diagonal entries d_1 | d_2 | ... of S."""
        k = min(len(self.S), len(self.S[0]) if self.S else 0)
        return tuple(self.S[i][i] for i in range(k) if self.S[i][i] != 0)


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> IntMatrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(A: Sequence[Sequence]) -> tuple:
    return tuple(zip(*A))


def from_columns(columns: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
    """Matrix whose columns are the given vectors (``nrows`` fixes the shape
    when there are no columns)."""
    if not columns:
        return tuple(() for _ in range(nrows))
    return as_matrix(transpose(columns))


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    Bt = tuple(zip(*B))
    if not Bt:
        return tuple(() for _ in A)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def _shape(A: Sequence[Sequence]) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with transformation matrices.

    Repeated gcd elimination: move the smallest nonzero entry of the
    trailing block to the pivot, clear its row and column by integer
    division, and fold in a row whenever the pivot does not divide the rest
    of the block.  Adequate for the small matrices fans produce.
    """
    m, n = _shape(A)
    if m == 0 or n == 0:
        raise ValueError("smith_normal_form needs a nonempty matrix")
    S = [list(r) for r in as_matrix(A)]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row[dst] += q * row[src]
        for M in (S, U):
            M[dst] = [a + q * b for a, b in zip(M[dst], M[src])]

    def add_col(src, dst, q):  # col[dst] += q * col[src]
        for M in (S, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return _finish(S, U, V)
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(t, i, -(S[i][t] // p))
                    clean = clean and S[i][t] == 0
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(t, j, -(S[t][j] // p))
                    clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return _finish(S, U, V)


def _finish(S, U, V) -> SmithDecomposition:
    for i in range(min(len(S), len(S[0]))):
        if S[i][i] < 0:
            S[i] = [-a for a in S[i]]
            U[i] = [-a for a in U[i]]
    return SmithDecomposition(as_matrix(U), as_matrix(S), as_matrix(V))


def _primitive_sign(v: Sequence[int]) -> tuple[int, ...]:
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def integer_kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> list[tuple[int, ...]]:
    """Lattice basis of ``{x in Z^cols : A x = 0}``.

    Each basis vector is sign-normalised so its first nonzero entry is
    positive.  ``ncols`` is needed only when A has no rows.
    """
    m, n = _shape(A)
    if m == 0:
        n = ncols or 0
        return [tuple(r) for r in identity(n)]
    if n == 0:
        return []
    U, S, V = smith_normal_form(A)
    r = sum(1 for i in range(min(m, n)) if S[i][i])
    return [_primitive_sign([V[i][j] for i in range(n)]) for j in range(r, n)]


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    ncols = len(rows[0]) if rows else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / Fraction(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(A: Sequence[Sequence]) -> int:
    if not A or not A[0]:
        return 0
    return len(_echelon([[Fraction(x) for x in row] for row in A])[1])


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction free)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_solve(A: Sequence[Sequence[int]], b: Sequence[int]) -> RationalVector | None:
    """Unique rational solution of ``A x = b``, or None if b is outside the
    column span.  Raises ValueError if the columns of A are dependent."""
    m, n = _shape(A)
    if n == 0:
        return () if all(x == 0 for x in b) else None
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    rows, pivots = _echelon(aug)
    if n in pivots:
        return None
    if len(pivots) < n:
        raise ValueError("columns are linearly dependent")
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = rows[r][n]
    return tuple(x)


def finite_index_span(vectors: Sequence[Sequence[int]], rank_: int) -> bool:
    """True iff the vectors span a full-rank (finite index) subgroup of Z^rank."""
    if rank_ == 0:
        return True
    if not vectors:
        return False
    return rank(from_columns(vectors, rank_)) == rank_


def unimodular_inverse(U: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    n = len(U)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(U)]
    rows, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv = [row[n:] for row in rows]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return as_matrix([[int(x) for x in row] for row in inv])


def express_in_span(basis: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> RationalVector | None:
    """Coefficients c with ``sum c_k basis[k] == target``, or None.

    The basis vectors must be linearly independent.
    """
    if not basis:
        return () if all(x == 0 for x in target) else None
    return rational_solve(transpose(basis), target)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g else tuple(v)
