"""Reference forms, named diffeomorphism actions, and hypersurfaces.

The catalog ships the intersection forms that the test-suite and CLI
lean on, together with the isometries induced by well-known
diffeomorphisms:

* ``S2xS2``: the hyperbolic form H; the factor-swapping diffeomorphism
  induces the flip isometry, and the product of the two antipodal-degree
  sphere maps induces minus the identity;
* ``CP2`` and ``CP2bar``: rank-1 forms (1) and (-1); complex conjugation
  on CP2 induces (-1);
* ``E8``: the even positive-definite rank-8 form given by the E8 Cartan
  matrix (as a lattice; no smooth closed simply connected 4-manifold
  realizes it, which is fine for the linear algebra done here);
* ``K3``: E8(-1) + E8(-1) + 3 H, rank 22, signature (3, 19);
* ``Ruberman``: the connected sum of 4 copies of CP2 and 21 of CP2bar,
  the classical home of isotopy-versus-diffeomorphism phenomena, with
  form diag(1^4, -1^21);
* ``nCP2_mCP2bar(n,m)``: the parameterized diagonal family diag(1^n,
  -1^m).

Degree-d hypersurfaces in CP^3 provide a graded family of simply
connected complex surfaces whose invariants follow from the standard
Chern class computation:

    euler = d^3 - 4 d^2 + 6 d,   signature = d (4 - d^2) / 3,
    spin <=> d even,             b2 = euler - 2,
    b2_plus = (b2 + signature) / 2.

Degree 1 gives CP2 and degree 4 the K3 surface, which anchor the
formulas against the catalog forms.  Odd degrees from 5 up give Kahler
surfaces with b2_plus >= 2; such a surface admits no positive scalar
curvature metric at all, yet it is nonspin, so the stabilized existence
check still answers yes - the standard example separating the
unstabilized and stabilized questions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError, UnknownEntryError
from .isometries import FormIsometry, validate_isometry
from .quad_forms import SymForm, direct_sum, is_even, validate_form
from .stabilization import PscVerdict, stable_psc_exists

# E8 Dynkin diagram: a chain of seven nodes with the eighth attached to
# the fifth, so the branch node has arms of lengths 4, 2 and 1.
_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))


def _e8_cartan(sign: int) -> list[list[int]]:
    m = [[0] * 8 for _ in range(8)]
    for i in range(8):
        m[i][i] = 2 * sign
    for i, j in _E8_EDGES:
        m[i][j] = m[j][i] = -sign
    return m


def _hyperbolic() -> list[list[int]]:
    return [[0, 1], [1, 0]]


def _diag(values: list[int]) -> list[list[int]]:
    n = len(values)
    return [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class CatalogEntry:
    """A named form with its spin flag and named isometries."""

    name: str
    form: SymForm
    spin: bool
    description: str
    known_isometries: tuple[tuple[str, FormIsometry], ...]

    def isometry(self, name: str) -> FormIsometry:
        for key, iso in self.known_isometries:
            if key == name:
                return iso
        raise UnknownEntryError(
            f"{self.name} has no isometry named {name!r}; "
            f"known: {', '.join(k for k, _ in self.known_isometries)}")


def _entry(name, matrix, description, isometries=()) -> CatalogEntry:
    form = validate_form(matrix, label=name)
    named = tuple(
        (iso_name, validate_isometry(form, iso_matrix))
        for iso_name, iso_matrix in isometries
    )
    return CatalogEntry(
        name=name,
        form=form,
        spin=is_even(form),
        description=description,
        known_isometries=named,
    )


@lru_cache(maxsize=None)
def _fixed_entries() -> dict[str, CatalogEntry]:
    n2 = [[1, 0], [0, 1]]
    entries = [
        _entry(
            "S2xS2", _hyperbolic(),
            "product of two 2-spheres; hyperbolic intersection form",
            isometries=(
                ("identity", n2),
                ("flip", [[0, 1], [1, 0]]),
                ("neg_neg", [[-1, 0], [0, -1]]),
            )),
        _entry(
            "CP2", [[1]],
            "complex projective plane; unit rank-1 form",
            isometries=(
                ("identity", [[1]]),
                ("conjugation", [[-1]]),
            )),
        _entry(
            "CP2bar", [[-1]],
            "complex projective plane with reversed orientation",
            isometries=(("identity", [[1]]),)),
        _entry(
            "E8", _e8_cartan(+1),
            "even positive-definite rank-8 lattice (Cartan matrix); "
            "no smooth closed simply connected 4-manifold carries it",
            isometries=(("identity", _diag([1] * 8)),)),
        _entry(
            "K3", _k3_matrix(),
            "K3 surface; even form E8(-1) + E8(-1) + 3 H of signature (3, 19)",
            isometries=(("identity", _diag([1] * 22)),)),
        _entry(
            "Ruberman", _diag([1] * 4 + [-1] * 21),
            "connected sum of 4 CP2 and 21 CP2bar; diag(1^4, -1^21)",
            isometries=(("identity", _diag([1] * 25)),)),
    ]
    return {entry.name: entry for entry in entries}


def _k3_matrix() -> list[list[int]]:
    blocks = [_e8_cartan(-1), _e8_cartan(-1)] + [_hyperbolic()] * 3
    n = sum(len(b) for b in blocks)
    m = [[0] * n for _ in range(n)]
    at = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                m[at + i][at + j] = b[i][j]
        at += k
    return m


_PARAM_RE = re.compile(r"^nCP2_mCP2bar\((\d+),\s*(\d+)\)$")


def list_entries() -> tuple[str, ...]:
    """Fixed catalog names; the diagonal family is parameterized."""
    return tuple(_fixed_entries()) + ("nCP2_mCP2bar(n,m)",)


def get_entry(name: str) -> CatalogEntry:
    """Look up a catalog entry by name.

    Accepts the fixed names and the parameterized family, e.g.
    ``nCP2_mCP2bar(4,21)``; n + m must be at least 1.
    """
    fixed = _fixed_entries()
    if name in fixed:
        return fixed[name]
    match = _PARAM_RE.match(name)
    if match:
        n, m = int(match.group(1)), int(match.group(2))
        if n + m < 1:
            raise InputError("nCP2_mCP2bar needs n + m >= 1")
        return _entry(
            f"nCP2_mCP2bar({n},{m})",
            _diag([1] * n + [-1] * m),
            f"connected sum of {n} CP2 and {m} CP2bar; diag(1^{n}, -1^{m})",
            isometries=(("identity", _diag([1] * (n + m))),))
    raise UnknownEntryError(
        f"unknown catalog entry {name!r}; known: "
        f"{', '.join(list_entries())}")


@dataclass(frozen=True)
class HypersurfaceInvariants:
    """Classical invariants of a smooth degree-d surface in CP^3."""

    degree: int
    euler: int
    signature: int
    b2: int
    b2_plus: int
    spin: bool


def hypersurface(d: int) -> HypersurfaceInvariants:
    """Invariants of the degree-d hypersurface, all exact.

    >>> hypersurface(1).euler, hypersurface(1).signature
    (3, 1)
    >>> hypersurface(4).euler, hypersurface(4).signature
    (24, -16)
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise InputError("the degree must be a positive integer")
    euler = d ** 3 - 4 * d ** 2 + 6 * d
    num = d * (4 - d * d)
    assert num % 3 == 0, "d(4 - d^2) is always divisible by 3"
    signature = num // 3
    b2 = euler - 2
    assert (b2 + signature) % 2 == 0
    return HypersurfaceInvariants(
        degree=d,
        euler=euler,
        signature=signature,
        b2=b2,
        b2_plus=(b2 + signature) // 2,
        spin=d % 2 == 0,
    )


def standard_form_for(b2_plus: int, b2_minus: int, even: bool) -> SymForm:
    """Unimodular form with the given inertia and parity.

    Odd forms are diagonal; even forms are assembled from E8 blocks of
    the appropriate sign plus hyperbolic planes, which requires the
    signature to be divisible by 8 (true for every even unimodular
    form).
    """
    if b2_plus < 0 or b2_minus < 0 or b2_plus + b2_minus < 1:
        raise InputError("inertia counts must be nonnegative with rank >= 1")
    if not even:
        return validate_form(_diag([1] * b2_plus + [-1] * b2_minus))
    sigma = b2_plus - b2_minus
    if sigma % 8 != 0:
        raise InputError("an even unimodular form has signature divisible by 8")
    copies = abs(sigma) // 8
    hyperbolics = min(b2_plus, b2_minus)
    if 8 * copies + 2 * hyperbolics != b2_plus + b2_minus:
        raise InputError("no even unimodular form has this inertia")
    blocks = [_e8_cartan(1 if sigma > 0 else -1)] * copies + [_hyperbolic()] * hyperbolics
    n = sum(len(b) for b in blocks)
    m = [[0] * n for _ in range(n)]
    at = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                m[at + i][at + j] = b[i][j]
        at += k
    return validate_form(m)


def hypersurface_form(d: int) -> SymForm:
    """Standard unimodular form with the hypersurface's invariants."""
    inv = hypersurface(d)
    return standard_form_for(inv.b2_plus, inv.b2 - inv.b2_plus, even=inv.spin)


@dataclass(frozen=True)
class KahlerPscReport:
    """Unstabilized obstruction next to the stabilized verdict.

    For odd d >= 5 the degree-d surface is Kahler with b2_plus >= 2, so
    it carries no positive-scalar-curvature metric at all; being
    nonspin, the stabilized existence check still answers yes.
    """

    invariants: HypersurfaceInvariants
    nonspin: bool
    b2_plus_at_least_2: bool
    unstable_psc_excluded: bool
    stable_psc: PscVerdict


def psc_obstructed_kahler_example(d: int) -> KahlerPscReport:
    """Report for the degree-d Kahler example; needs odd d >= 5."""
    if isinstance(d, bool) or not isinstance(d, int) or d < 5 or d % 2 == 0:
        raise InputError("the Kahler examples need an odd degree d >= 5")
    inv = hypersurface(d)
    form = standard_form_for(inv.b2_plus, inv.b2 - inv.b2_plus, even=False)
    verdict = stable_psc_exists(form, spin=False)
    nonspin = not inv.spin
    big_plus = inv.b2_plus >= 2
    return KahlerPscReport(
        invariants=inv,
        nonspin=nonspin,
        b2_plus_at_least_2=big_plus,
        unstable_psc_excluded=nonspin and big_plus,
        stable_psc=verdict,
    )
