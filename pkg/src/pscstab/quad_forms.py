"""Symmetric integral bilinear forms and their classical invariants.

A ``SymForm`` models the intersection form of a closed oriented simply
connected 4-manifold on second cohomology: a symmetric integral matrix
with nonzero determinant.  Unimodularity (determinant +-1) holds for
closed manifolds by Poincare duality and is recorded as a flag rather
than enforced, so the linear algebra stays usable on lattices that are
merely nondegenerate.

Parity is the spin dictionary: the form is *even* when every diagonal
entry is even, which for simply connected 4-manifolds happens exactly
when the manifold is spin.  Signature counts come from an exact
congruent diagonalization, never from floating-point eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegeneracyError, ValidationError
from .exact_linalg import RatMatrix, congruent_diagonalize, det_fraction

POSITIVE_DEFINITE = "positive-definite"
NEGATIVE_DEFINITE = "negative-definite"
INDEFINITE = "indefinite"


@dataclass(frozen=True)
class SymForm:
    """Validated symmetric nondegenerate integral form.

    Build instances through :func:`validate_form`, which performs the
    symmetry and nondegeneracy checks and computes the unimodularity
    flag once.
    """

    matrix: tuple[tuple[int, ...], ...]
    label: str | None
    unimodular: bool

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def as_rat_matrix(self) -> RatMatrix:
        return RatMatrix.from_rows(self.matrix)


@dataclass(frozen=True)
class FormSignature:
    """Inertia data (p, q) of a nondegenerate form; sigma = p - q."""

    p: int
    q: int
    sigma: int
    rank: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValidationError("inertia counts cannot be negative")
        if self.sigma != self.p - self.q or self.rank != self.p + self.q:
            raise ValidationError("inconsistent signature data")


def validate_form(matrix, label: str | None = None) -> SymForm:
    """Check and wrap an integral symmetric nondegenerate matrix.

    Rejects empty, ragged, non-integral, asymmetric and singular input.
    """
    rows = []
    for row in matrix:
        checked = []
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"form entries must be integers, got {x!r}")
            checked.append(x)
        rows.append(tuple(checked))
    if not rows:
        raise ValidationError("a form needs rank at least 1")
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValidationError("form matrix must be square")
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise ValidationError("form matrix must be symmetric")
    det = det_fraction(RatMatrix.from_rows(rows))
    if det == 0:
        raise DegeneracyError("form matrix is singular")
    return SymForm(matrix=tuple(rows), label=label, unimodular=abs(det) == 1)


@lru_cache(maxsize=None)
def _inertia_counts(form: SymForm) -> tuple[int, int]:
    _, diag = congruent_diagonalize(form.as_rat_matrix())
    pos = sum(1 for x in diag if x > 0)
    return pos, len(diag) - pos


def signature_of(form: SymForm) -> FormSignature:
    """Exact inertia of the form, computed once per form and cached."""
    p, q = _inertia_counts(form)
    return FormSignature(p=p, q=q, sigma=p - q, rank=p + q)


def is_even(form: SymForm) -> bool:
    """True when every diagonal entry is even (the spin condition)."""
    return all(form.matrix[i][i] % 2 == 0 for i in range(form.rank))


def definiteness(form: SymForm) -> str:
    sig = signature_of(form)
    if sig.q == 0:
        return POSITIVE_DEFINITE
    if sig.p == 0:
        return NEGATIVE_DEFINITE
    return INDEFINITE


def direct_sum(a: SymForm, b: SymForm) -> SymForm:
    """Orthogonal direct sum; models connected sum of manifolds."""
    n, m = a.rank, b.rank
    top = [row + (0,) * m for row in a.matrix]
    bottom = [(0,) * n + row for row in b.matrix]
    label = f"{a.label}+{b.label}" if a.label and b.label else None
    return validate_form([list(r) for r in top + bottom], label=label)
