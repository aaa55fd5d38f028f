"""Isometries of symmetric forms and their component invariants.

An isometry of a form with Gram matrix Q is a matrix A with
A^T Q A = Q (columns convention: A acts on coordinate columns from the
left).  Such a matrix automatically has determinant +-1.  Integral
isometries model the action of a diffeomorphism on second cohomology;
rational ones arise as reflections and are accepted everywhere except
in mod-2 computations.

The group of isometries of an indefinite nondegenerate real form has
four connected components, separated by the determinant together with
the signs delta_plus/delta_minus of the corner blocks in any basis that
splits the form into a positive and a negative part (a *Sylvester
frame*).  Concretely, if P^T Q P = diag(d) with the positive entries of
d listed first, and B = P^-1 A P, then delta_plus(A) is the sign of the
determinant of the top-left (positive) corner block of B, and
delta_minus the sign of the bottom-right block.  An empty corner block
has determinant +1.  These signs do not depend on the chosen frame and
are multiplicative; for definite forms one block is everything and the
other empty, so only two sign patterns occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .errors import (
    DimensionError,
    IsotropicVectorError,
    NotAnIsometryError,
    ValidationError,
)
from .exact_linalg import (
    Mod2Matrix,
    RatMatrix,
    _int_det,
    _int_matmul,
    _int_rank,
    as_fraction,
    congruent_diagonalize,
    mat_inverse,
    mod2_kernel_dim,
)
from .quad_forms import INDEFINITE, SymForm, definiteness

Entries = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class FormIsometry:
    """A matrix known to satisfy A^T Q A = Q for ``form``.

    Build instances through :func:`validate_isometry` (or through
    :func:`reflection` / :func:`compose`, which are isometries by
    construction).
    """

    form: SymForm
    matrix: Entries
    integral: bool

    @property
    def rank(self) -> int:
        return self.form.rank

    def as_rat_matrix(self) -> RatMatrix:
        return RatMatrix(self.rank, self.rank, self.matrix)


def _scaled_int(entries: Entries) -> tuple[list[list[int]], int]:
    dens = {x.denominator for row in entries for x in row}
    d = lcm(*dens) if dens else 1
    return [[x.numerator * (d // x.denominator) for x in row] for row in entries], d


def _trusted(form: SymForm, entries: Entries) -> FormIsometry:
    integral = all(x.denominator == 1 for row in entries for x in row)
    return FormIsometry(form=form, matrix=entries, integral=integral)


def validate_isometry(form: SymForm, matrix) -> FormIsometry:
    """Check A^T Q A = Q exactly and wrap the matrix.

    Accepts integer, string and Fraction entries; floats are refused.
    The determinant is forced to +-1 by the isometry equation and is
    asserted as a sanity check.
    """
    rows = tuple(tuple(as_fraction(x) for x in row) for row in matrix)
    n = form.rank
    if len(rows) != n or any(len(row) != n for row in rows):
        raise DimensionError(
            f"isometry must be {n}x{n} to match the form")
    na, da = _scaled_int(rows)
    q = [list(r) for r in form.matrix]
    # A^T Q A = Q  <=>  N^T Q N = D^2 Q with A = N / D
    lhs = _int_matmul(_int_matmul([list(col) for col in zip(*na)], q), na)
    dd = da * da
    for i in range(n):
        for j in range(n):
            if lhs[i][j] != dd * form.matrix[i][j]:
                raise NotAnIsometryError("matrix does not preserve the form")
    det_n = _int_det([row[:] for row in na])
    if abs(det_n) != da ** n:
        raise ValidationError("isometry determinant must be +1 or -1")
    return _trusted(form, rows)


def compose(a: FormIsometry, b: FormIsometry) -> FormIsometry:
    """Product a.b; isometries of a fixed form are closed under this."""
    if a.form != b.form:
        raise ValidationError("can only compose isometries of the same form")
    na, da = _scaled_int(a.matrix)
    nb, db = _scaled_int(b.matrix)
    prod = _int_matmul(na, nb)
    d = da * db
    entries = tuple(tuple(Fraction(x, d) for x in row) for row in prod)
    return _trusted(a.form, entries)


@lru_cache(maxsize=None)
def iso_det(iso: FormIsometry) -> int:
    """Determinant of the isometry: always +1 or -1."""
    na, _ = _scaled_int(iso.matrix)
    d = _int_det(na)
    return 1 if d > 0 else -1


@lru_cache(maxsize=None)
def eig1_dim_rational(iso: FormIsometry) -> int:
    """Dimension over Q of the fixed space ker(A - I)."""
    na, da = _scaled_int(iso.matrix)
    n = iso.rank
    m = [row[:] for row in na]
    for i in range(n):
        m[i][i] -= da
    return n - _int_rank(m)


@lru_cache(maxsize=None)
def eig1_dim_mod2(iso: FormIsometry) -> int:
    """Dimension over F_2 of ker(A - I); needs an integral isometry."""
    if not iso.integral:
        raise ValidationError("mod-2 eigenspace needs an integral isometry")
    n = iso.rank
    rows = [[(int(iso.matrix[i][j]) - (i == j)) & 1 for j in range(n)]
            for i in range(n)]
    return mod2_kernel_dim(Mod2Matrix.from_rows(rows))


@dataclass(frozen=True)
class SylvesterFrame:
    """A diagonalizing basis with the positive part listed first."""

    p_matrix: RatMatrix
    pos_count: int
    neg_count: int
    diag: tuple[Fraction, ...]


def _build_frame(form: SymForm, order: Sequence[int] | None) -> SylvesterFrame:
    p, d = congruent_diagonalize(form.as_rat_matrix(), order=order)
    pos = sum(1 for x in d if x > 0)
    return SylvesterFrame(p_matrix=p, pos_count=pos, neg_count=len(d) - pos, diag=d)


@lru_cache(maxsize=None)
def _cached_frame(form: SymForm) -> SylvesterFrame:
    return _build_frame(form, None)


def sylvester_frame(form: SymForm, order: Sequence[int] | None = None) -> SylvesterFrame:
    """Diagonalizing frame for the form; cached for the default order.

    Passing ``order`` (a permutation of the basis indices) forces the
    congruent diagonalization to visit pivots in that order, producing a
    genuinely different frame.  All frames yield the same component
    invariants; only the default frame is cached.
    """
    if order is None:
        return _cached_frame(form)
    return _build_frame(form, tuple(order))


@lru_cache(maxsize=None)
def _frame_fast_data(frame: SylvesterFrame):
    """Integer data for conjugating into the frame: P, P^-1 as N/D."""
    p_rows = frame.p_matrix.to_int_rows()
    pinv = mat_inverse(frame.p_matrix)
    pinv_n, pinv_d = pinv.scaled_int_rows()
    return p_rows, tuple(tuple(r) for r in pinv_n), pinv_d


def _corner_det_sign(b: list[list[int]], lo: int, hi: int) -> int:
    if hi == lo:
        return 1
    block = [row[lo:hi] for row in b[lo:hi]]
    d = _int_det(block)
    return (d > 0) - (d < 0)


@lru_cache(maxsize=None)
def delta_pm(iso: FormIsometry, frame: SylvesterFrame | None = None) -> tuple[int, int]:
    """Corner-block determinant signs (delta_plus, delta_minus).

    Conjugates the isometry into a Sylvester frame of its form and takes
    the determinant signs of the positive-positive and negative-negative
    corner blocks.  Both blocks of an isometry are automatically
    invertible, so a zero sign can only come from a bug and raises.
    An empty block contributes +1.
    """
    fr = frame if frame is not None else sylvester_frame(iso.form)
    p_rows, pinv_n, pinv_d = _frame_fast_data(fr)
    na, _ = _scaled_int(iso.matrix)
    b = _int_matmul(_int_matmul([list(r) for r in pinv_n], na), [list(r) for r in p_rows])
    n = iso.rank
    dplus = _corner_det_sign(b, 0, fr.pos_count)
    dminus = _corner_det_sign(b, fr.pos_count, n)
    if dplus == 0 or dminus == 0:
        raise RuntimeError("singular corner block for an isometry; this is a bug")
    return dplus, dminus


@dataclass(frozen=True)
class Pi0Class:
    """Connected-component data of an isometry: two bits and a flag.

    ``det_bit`` and ``delta_plus_bit`` use the convention +1 -> 0,
    -1 -> 1.  For an indefinite form the pair ranges over all four
    values; for a definite form delta_plus is forced by the determinant,
    so at most two values occur (``definite`` records which regime the
    form is in).
    """

    det_bit: int
    delta_plus_bit: int
    definite: bool


def _sign_bit(s: int) -> int:
    return 0 if s > 0 else 1


def pi0_class(iso: FormIsometry) -> Pi0Class:
    """Component invariant (det, delta_plus) of the isometry."""
    dplus, _ = delta_pm(iso)
    return Pi0Class(
        det_bit=_sign_bit(iso_det(iso)),
        delta_plus_bit=_sign_bit(dplus),
        definite=definiteness(iso.form) != INDEFINITE,
    )


def is_unit_component(iso: FormIsometry) -> bool:
    """True when the isometry lies in the identity component.

    Membership is det = +1 together with delta_plus = +1 (and then
    delta_minus = +1 follows from multiplicativity of the three signs).
    """
    if iso_det(iso) != 1:
        return False
    dplus, _ = delta_pm(iso)
    return dplus == 1


def reflection(form: SymForm, v: Sequence) -> FormIsometry:
    """Reflection x -> x - 2 b(x, v) / b(v, v) * v in a non-isotropic v.

    Always an isometry of determinant -1; rational in general, integral
    exactly when 2 b(x, v) / b(v, v) is integral on the lattice.
    """
    vec = [as_fraction(x) for x in v]
    n = form.rank
    if len(vec) != n:
        raise DimensionError("reflection vector length must match the rank")
    qv = [sum(Fraction(form.matrix[i][j]) * vec[j] for j in range(n)) for i in range(n)]
    bvv = sum(vec[i] * qv[i] for i in range(n))
    if bvv == 0:
        raise IsotropicVectorError("cannot reflect in an isotropic vector")
    two_over = Fraction(2) / bvv
    entries = tuple(
        tuple((Fraction(int(i == j)) - two_over * vec[i] * qv[j]) for j in range(n))
        for i in range(n)
    )
    return _trusted(form, entries)
