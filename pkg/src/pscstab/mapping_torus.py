"""Invariants of the mapping torus of a 4-manifold diffeomorphism.

Let M be a closed oriented simply connected 4-manifold and f an
orientation-preserving diffeomorphism acting on H^2(M) by the isometry
A.  The mapping torus T(f) is the closed 5-manifold fibering over the
circle with fiber M and monodromy f, and its cohomology sits in the
Wang exact sequence, which gives (coefficients in a field F)

    b_0 = 1,   b_1 = 1,   b_2 = dim_F ker(A - I),

since H^1(M) = H^3(M) = 0 and f fixes H^0.  The Kervaire
semicharacteristic kappa_F = (b_0 + b_1 + b_2) mod 2 therefore reduces
to the dimension of the 1-eigenspace of A over F, and by the theorem of
Lusztig, Milnor and Peterson the Stiefel-Whitney number w_2 w_3 of the
5-manifold T(f) equals the difference of the semicharacteristics over
the rationals and over the field with two elements:

    w_2 w_3 [T(f)] = kappa_Q - kappa_F2
                   = (dim_Q Eig_1(A) + dim_F2 Eig_1(A)) mod 2.

The triple phi = (w_2 w_3 [T(f)], det A, delta_plus(A)), with signs
written as bits via +1 -> 0 and -1 -> 1, is a complete invariant of the
bordism class of the pair (M, f) in the sense used by the stabilization
checks; it vanishes on the identity, which normalizes the bordism
bookkeeping so no separate base-point subtraction is needed.

``wang_betti_oracle`` recomputes the Betti numbers by a deliberately
naive route (textbook row reduction on dense lists, kernels *and*
cokernels of every differential) so that the optimized eigenspace code
has an independent cross-check.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, NonUnimodularFormWarning, ValidationError
from .isometries import (
    FormIsometry,
    delta_pm,
    eig1_dim_mod2,
    eig1_dim_rational,
    iso_det,
)


@dataclass(frozen=True)
class TorusBetti:
    """Betti numbers of T(f) in degrees 0..2 over a fixed field."""

    field_char: int
    b0: int
    b1: int
    b2: int


@dataclass(frozen=True)
class PhiValue:
    """Bordism invariant triple with entries in {0, 1}."""

    phi1: int
    phi2: int
    phi3: int

    def bits(self) -> tuple[int, int, int]:
        return (self.phi1, self.phi2, self.phi3)

    def __add__(self, other: "PhiValue") -> "PhiValue":
        return PhiValue(
            (self.phi1 + other.phi1) % 2,
            (self.phi2 + other.phi2) % 2,
            (self.phi3 + other.phi3) % 2,
        )


def _check_field_char(field_char: int) -> None:
    if field_char not in (0, 2):
        raise InputError("field characteristic must be 0 or 2")


def kervaire_semichar(iso: FormIsometry, field_char: int) -> int:
    """Kervaire semicharacteristic of T(f) over Q (0) or F_2 (2).

    Equals dim Eig_1(A) mod 2 because b_0 + b_1 contributes 1 + 1.
    """
    _check_field_char(field_char)
    if field_char == 0:
        return eig1_dim_rational(iso) % 2
    return eig1_dim_mod2(iso) % 2


def _naive_rank_rational(rows: list[list[Fraction]]) -> int:
    """Textbook Gaussian elimination; intentionally unoptimized."""
    if not rows:
        return 0
    m = [row[:] for row in rows]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _naive_rank_mod2(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    m = [[v % 2 for v in row] for row in rows]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def wang_betti_oracle(iso: FormIsometry, field_char: int) -> TorusBetti:
    """Betti numbers of T(f) from the Wang sequence, the slow way.

    The sequence splits into short exact pieces

        0 -> coker(f* - 1 on H^{k-1}M) -> H^k T(f) -> ker(f* - 1 on H^k M) -> 0,

    so b_k = dim coker(f* - 1 on H^{k-1}) + dim ker(f* - 1 on H^k), with
    H^0 M = F (f* the identity), H^1 M = 0 and H^2 M carrying A.  Every
    kernel and cokernel below is computed by naive row reduction.
    """
    _check_field_char(field_char)
    n = iso.rank
    if field_char == 0:
        a_minus_1 = [
            [iso.matrix[i][j] - (1 if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        rank2 = _naive_rank_rational(a_minus_1)
        rank0 = _naive_rank_rational([[Fraction(1) - 1]])
    else:
        if not iso.integral:
            raise ValidationError("mod-2 Betti numbers need an integral isometry")
        a_minus_1 = [
            [int(iso.matrix[i][j]) - (1 if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        rank2 = _naive_rank_mod2(a_minus_1)
        rank0 = _naive_rank_mod2([[0]])
    dim_h0, dim_h1, dim_h2 = 1, 0, n
    ker0 = dim_h0 - rank0
    coker0 = dim_h0 - rank0
    ker1 = dim_h1
    coker1 = dim_h1
    ker2 = dim_h2 - rank2
    b0 = ker0
    b1 = coker0 + ker1
    b2 = coker1 + ker2
    return TorusBetti(field_char=field_char, b0=b0, b1=b1, b2=b2)


def w2w3_mapping_torus(iso: FormIsometry) -> int:
    """Stiefel-Whitney number w_2 w_3 of T(f), as a bit.

    Sum of the 1-eigenspace dimensions over Q and over F_2, mod 2.
    Needs an integral isometry for the mod-2 half.
    """
    return (eig1_dim_rational(iso) + eig1_dim_mod2(iso)) % 2


def phi_invariant(iso: FormIsometry) -> PhiValue:
    """Bordism invariant (w_2 w_3 [T(f)], det A, delta_plus(A)).

    Signs become bits by +1 -> 0, -1 -> 1.  The bordism interpretation
    assumes the form is unimodular; other nondegenerate forms get the
    same linear algebra plus a NonUnimodularFormWarning.
    """
    if not iso.form.unimodular:
        warnings.warn(
            "phi computed for a non-unimodular form; the bordism "
            "interpretation does not apply",
            NonUnimodularFormWarning,
            stacklevel=2,
        )
    dplus, _ = delta_pm(iso)
    return PhiValue(
        phi1=w2w3_mapping_torus(iso),
        phi2=0 if iso_det(iso) == 1 else 1,
        phi3=0 if dplus == 1 else 1,
    )


def in_spin_image(phi: PhiValue) -> bool:
    """Whether a phi value can come from a spin diffeomorphism pair.

    The classes realized by spin pairs are exactly those with vanishing
    first coordinate (the w_2 w_3 bit).
    """
    return phi.phi1 == 0
