"""Exact linear algebra over the rationals and over the two-element field.

Everything in this module is exact.  Matrices hold ``fractions.Fraction``
entries, which Python keeps in lowest terms with a positive denominator,
and every elimination runs fraction-free on denominator-cleared integer
rows (Bareiss pivoting), so no intermediate value is ever rounded.  No
floating point appears anywhere in the package.

Conventions:

* vectors are coordinate columns and matrices act on the left, so a
  symmetric bilinear form with Gram matrix Q evaluates as
  b(x, y) = x^T Q y;
* ``congruent_diagonalize`` returns a change of basis P with P^T Q P
  diagonal; the diagonal is *not* normalized to +-1 (that would need
  square roots), positive entries are listed first, and the columns of
  P are scaled to primitive integer vectors whose first nonzero entry
  is positive, which makes the output deterministic;
* the determinant of a 0 x 0 matrix is 1 (empty product).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DegeneracyError, DimensionError, ValidationError


def as_fraction(value) -> Fraction:
    """Coerce an exact scalar to Fraction; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"exact scalar required, got {value!r}")
    try:
        return Fraction(value)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"not a rational scalar: {value!r}") from exc


@dataclass(frozen=True)
class RatMatrix:
    """Immutable rational matrix, row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(data: Sequence[Sequence]) -> "RatMatrix":
        rows = [tuple(as_fraction(x) for x in row) for row in data]
        ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValidationError("ragged matrix data")
        return RatMatrix(len(rows), ncols, tuple(rows))

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        one, zero = Fraction(1), Fraction(0)
        return RatMatrix(n, n, tuple(
            tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.entries else ())

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "RatMatrix":
        sub = tuple(row[c0:c1] for row in self.entries[r0:r1])
        return RatMatrix(r1 - r0, c1 - c0, sub)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.rows) for j in range(i))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def to_int_rows(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_integral():
            raise ValidationError("matrix is not integral")
        return tuple(tuple(int(x) for x in row) for row in self.entries)

    def scaled_int_rows(self) -> tuple[list[list[int]], int]:
        """Return (N, D) with self == N / D, D > 0, N integral."""
        dens = {x.denominator for row in self.entries for x in row}
        d = lcm(*dens) if dens else 1
        scaled = [[x.numerator * (d // x.denominator) for x in row] for row in self.entries]
        return scaled, d

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        na, da = self.scaled_int_rows()
        nb, db = other.scaled_int_rows()
        prod = _int_matmul(na, nb)
        d = da * db
        return RatMatrix(self.rows, other.cols, tuple(
            tuple(Fraction(x, d) for x in row) for row in prod))


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Integer matrix product; inner loop skips zero multipliers."""
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    ncols = len(b[0])
    out = []
    for arow in a:
        acc = [0] * ncols
        for k, aval in enumerate(arow):
            if aval:
                brow = b[k]
                for j in range(ncols):
                    if brow[j]:
                        acc[j] += aval * brow[j]
        out.append(acc)
    return out


def _row_reduced_ints(m: RatMatrix) -> list[list[int]]:
    """Clear denominators row by row and divide out row gcds.

    Each row is scaled by a positive rational, which changes neither the
    rank nor the sign of the determinant.
    """
    out = []
    for row in m.entries:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        ints = [x.numerator * (scale // x.denominator) for x in row]
        g = gcd(*ints) if ints else 0
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _bareiss_eliminate(m: list[list[int]]) -> tuple[int, int, int]:
    """Fraction-free elimination in place.

    Returns (rank, swap_sign, last_pivot) where last_pivot is the final
    Bareiss pivot (the determinant of the largest leading nonsingular
    minor after column selection).  Divisions are exact by the Bareiss
    identity; row swaps flip swap_sign.
    """
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    sign = 1
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][col]), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        pivot = m[rank][col]
        for i in range(rank + 1, nrows):
            head = m[i][col]
            row_i, row_r = m[i], m[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (pivot * row_i[j] - head * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank, sign, prev


def _int_rank(rows: list[list[int]]) -> int:
    rank, _, _ = _bareiss_eliminate(rows)
    return rank


def _int_det(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    rank, sign, last = _bareiss_eliminate(rows)
    if rank < n:
        return 0
    return sign * last


def rat_rank(m: RatMatrix) -> int:
    """Rank over the rationals."""
    return _int_rank(_row_reduced_ints(m))


def rat_kernel_dim(m: RatMatrix) -> int:
    """Dimension of the rational kernel {x : m x = 0}."""
    return m.cols - rat_rank(m)


def det_fraction(m: RatMatrix) -> Fraction:
    """Exact determinant of a square rational matrix."""
    if not m.is_square():
        raise DimensionError("determinant of a non-square matrix")
    if m.rows == 0:
        return Fraction(1)
    scale = Fraction(1)
    ints = []
    for row in m.entries:
        den = lcm(*(x.denominator for x in row))
        ints.append([x.numerator * (den // x.denominator) for x in row])
        scale *= den
    return Fraction(_int_det(ints), 1) / scale


def det_sign(m: RatMatrix) -> int:
    """Sign of the determinant: -1, 0 or +1."""
    if not m.is_square():
        raise DimensionError("determinant of a non-square matrix")
    if m.rows == 0:
        return 1
    d = _int_det(_row_reduced_ints(m))
    return (d > 0) - (d < 0)


def mat_inverse(m: RatMatrix) -> RatMatrix:
    """Exact inverse via Gauss-Jordan elimination on Fractions."""
    if not m.is_square():
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m.entries)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise DegeneracyError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return RatMatrix(n, n, tuple(tuple(row[n:]) for row in aug))


def _canonical_column(col: list[Fraction]) -> tuple[tuple[Fraction, ...], Fraction]:
    """Scale a column to a primitive integer vector, first nonzero > 0.

    Returns (new_column, s) where new_column = s * col; the congruent
    diagonal entry picks up a factor of s**2.
    """
    den = lcm(*(x.denominator for x in col))
    ints = [x.numerator * (den // x.denominator) for x in col]
    g = gcd(*ints)
    if g == 0:
        raise DegeneracyError("zero column in a change of basis")
    lead = next(v for v in ints if v)
    s = Fraction(den, g) if lead > 0 else Fraction(-den, g)
    return tuple(x * s for x in col), s


def congruent_diagonalize(
    q: RatMatrix, order: Sequence[int] | None = None
) -> tuple[RatMatrix, tuple[Fraction, ...]]:
    """Diagonalize a symmetric nondegenerate form by a congruence.

    Returns (p, d) with p invertible and p^T q p = diag(d) exactly; the
    entries of d are nonzero and all positive ones come first.  The
    symmetric Lagrange reduction clears one basis vector at a time; when
    the current diagonal entry is zero, a basis vector carrying a
    nonzero off-diagonal pairing is added to (or, if that cancels,
    subtracted from) the pivot vector first.  ``order`` optionally fixes
    the order in which basis vectors are visited as pivot candidates,
    which exercises genuinely different reductions; the inertia counts
    never depend on it.

    >>> h = RatMatrix.from_rows([[0, 1], [1, 0]])
    >>> p, d = congruent_diagonalize(h)
    >>> p.to_int_rows(), d
    (((1, 1), (1, -1)), (Fraction(2, 1), Fraction(-2, 1)))
    """
    if not q.is_square():
        raise DimensionError("congruent diagonalization needs a square matrix")
    if not q.is_symmetric():
        raise ValidationError("congruent diagonalization needs a symmetric matrix")
    n = q.rows
    if order is not None:
        if sorted(order) != list(range(n)):
            raise ValidationError("pivot order must be a permutation of the indices")
        perm = list(order)
        base = [[q.entries[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    else:
        perm = list(range(n))
        base = [list(row) for row in q.entries]

    a = base
    # columns of p, kept as row-indexed lists of column vectors
    pcols = [[Fraction(int(i == k)) for i in range(n)] for k in range(n)]

    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[k][j]), None)
            if j is None:
                raise DegeneracyError("form is degenerate")
            # adding e_j makes the diagonal 2*a[k][j] + a[j][j]; if that
            # cancels, subtracting works because a[k][j] != 0
            t = 1 if 2 * a[k][j] + a[j][j] != 0 else -1
            for i in range(n):
                pcols[k][i] += t * pcols[j][i]
            for m_ in range(n):
                a[k][m_] += t * a[j][m_]
            for m_ in range(n):
                a[m_][k] += t * a[m_][j]
        pivot = a[k][k]
        for j in range(k + 1, n):
            if a[k][j]:
                f = a[k][j] / pivot
                for i in range(n):
                    pcols[j][i] -= f * pcols[k][i]
                for m_ in range(n):
                    a[j][m_] -= f * a[k][m_]
                for m_ in range(n):
                    a[m_][j] -= f * a[m_][k]

    diag = [a[k][k] for k in range(n)]
    if any(x == 0 for x in diag):
        raise DegeneracyError("form is degenerate")

    # undo the visiting permutation: the reduction ran on base = S^T q S
    # with S the permutation matrix sending slot a to coordinate perm[a],
    # so scattering rows turns each column of p' into a column of S p'
    if order is not None:
        scattered = []
        for col in pcols:
            out = [Fraction(0)] * n
            for a in range(n):
                out[perm[a]] = col[a]
            scattered.append(out)
        pcols = scattered

    keyed = sorted(range(n), key=lambda k: 0 if diag[k] > 0 else 1)
    cols_sorted = [pcols[k] for k in keyed]
    diag_sorted = [diag[k] for k in keyed]

    final_cols = []
    final_diag = []
    for col, dval in zip(cols_sorted, diag_sorted):
        newcol, s = _canonical_column(col)
        final_cols.append(newcol)
        final_diag.append(dval * s * s)

    p = RatMatrix(n, n, tuple(tuple(final_cols[k][i] for k in range(n)) for i in range(n)))
    d = tuple(final_diag)
    _assert_congruence(q, p, d)
    return p, d


def _assert_congruence(q: RatMatrix, p: RatMatrix, d: tuple[Fraction, ...]) -> None:
    """Entrywise check that p^T q p = diag(d); failures are bugs."""
    prod = p.transpose() @ q @ p
    n = q.rows
    for i in range(n):
        for j in range(n):
            want = d[i] if i == j else Fraction(0)
            if prod.entries[i][j] != want:
                raise AssertionError("congruence check failed; this is a bug")


@dataclass(frozen=True)
class Mod2Matrix:
    """Matrix over the field with two elements; rows packed as bitmasks."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    @staticmethod
    def from_rows(data: Sequence[Sequence[int]]) -> "Mod2Matrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(row) != ncols for row in data):
            raise ValidationError("ragged matrix data")
        packed = []
        for row in data:
            word = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValidationError("mod-2 entries must be bits")
                word |= v << j
            packed.append(word)
        return Mod2Matrix(nrows, ncols, tuple(packed))

    @staticmethod
    def from_int_rows(data: Sequence[Sequence[int]]) -> "Mod2Matrix":
        return Mod2Matrix.from_rows([[v & 1 for v in row] for row in data])


def mod2_rank(m: Mod2Matrix) -> int:
    rows = list(m.bits)
    rank = 0
    for col in range(m.cols):
        mask = 1 << col
        piv = next((i for i in range(rank, len(rows)) if rows[i] & mask), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


def mod2_kernel_dim(m: Mod2Matrix) -> int:
    """Dimension of the kernel over the two-element field."""
    return m.cols - mod2_rank(m)
