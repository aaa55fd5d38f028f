"""Decision procedures for stabilized metric existence questions.

``check_product_stabilization`` decides when a diffeomorphism f of a
closed simply connected 4-manifold M is guaranteed to act trivially (up
to pseudoisotopy-style equivalence relevant for metrics of positive
scalar curvature) after crossing with n stabilizing factors.  The
sufficient conditions split into four regimes, combining three
ingredients: the spin dictionary (spin <=> even intersection form), the
vanishing of the Stiefel-Whitney number w_2 w_3 of the mapping torus,
and membership of the induced isometry in the identity component of the
isometry group of the form.

    case 1: n >= 2 and M spin
    case 2: n >= 2, M nonspin and w_2 w_3 [T(f)] = 0
    case 3: n = 1, M spin and A in the identity component
    case 4: n = 1, M nonspin, w_2 w_3 [T(f)] = 0 and A in the identity
            component

When no case applies the answer is *inconclusive*: the conditions are
sufficient, never proved necessary, so "disproved" is never returned.

``stable_psc_exists`` answers the stabilized existence question for
positive scalar curvature on M itself: a nonspin M always stabilizes to
a psc metric, while a spin M does exactly when its signature vanishes
(the spin branch leans on the standard index-theoretic obstruction, a
step beyond the cobordism bookkeeping done elsewhere in this package).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InputError, SpinMismatchError
from .isometries import FormIsometry, is_unit_component
from .mapping_torus import w2w3_mapping_torus
from .quad_forms import SymForm, is_even, signature_of

GUARANTEED = "guaranteed"
INCONCLUSIVE = "inconclusive"


class ConditionCheck(NamedTuple):
    name: str
    holds: bool
    explanation: str


@dataclass(frozen=True)
class StabVerdict:
    """Outcome of the product-stabilization check.

    ``matched_case`` names which of the four sufficient regimes fired
    (None when the verdict is inconclusive); ``checks`` always lists the
    four individual hypotheses with their truth values.
    """

    verdict: str
    matched_case: int | None
    checks: tuple[ConditionCheck, ...]


def _require_consistent_spin(form: SymForm, spin: bool, override_spin: bool) -> None:
    even = is_even(form)
    if spin == even or override_spin:
        return
    if spin:
        raise SpinMismatchError(
            "spin flag set but the intersection form is odd; a simply "
            "connected closed 4-manifold with an odd form is never spin "
            "(pass override_spin to proceed anyway)")
    raise SpinMismatchError(
        "spin flag cleared but the intersection form is even; a simply "
        "connected closed 4-manifold with an even form is always spin "
        "(pass override_spin to proceed anyway)")


def check_product_stabilization(
    iso: FormIsometry, spin: bool, n: int, *, override_spin: bool = False
) -> StabVerdict:
    """Decide whether n-fold stabilization is guaranteed to work.

    ``n`` counts the stabilizing factors and must be a positive integer;
    asking about zero stabilizations is a different (unstabilized)
    question this procedure does not answer.  ``spin`` must match the
    parity of the form unless ``override_spin`` is set.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError("the stabilization count n must be an integer")
    if n < 1:
        raise InputError("the stabilization count n must be at least 1")
    _require_consistent_spin(iso.form, spin, override_spin)

    w2w3 = w2w3_mapping_torus(iso)
    unit = is_unit_component(iso)
    checks = (
        ConditionCheck(
            "spin", spin,
            "the manifold is spin (even intersection form)" if spin
            else "the manifold is not spin (odd intersection form)"),
        ConditionCheck(
            "n >= 2", n >= 2,
            f"stabilizing with n = {n} factor{'s' if n != 1 else ''}"),
        ConditionCheck(
            "w2w3 vanishes", w2w3 == 0,
            f"the mapping torus has w2w3 = {w2w3}"),
        ConditionCheck(
            "unit component", unit,
            "the induced isometry lies in the identity component" if unit
            else "the induced isometry lies outside the identity component"),
    )

    if n >= 2 and spin:
        case = 1
    elif n >= 2 and not spin and w2w3 == 0:
        case = 2
    elif n == 1 and spin and unit:
        case = 3
    elif n == 1 and not spin and w2w3 == 0 and unit:
        case = 4
    else:
        case = None
    verdict = GUARANTEED if case is not None else INCONCLUSIVE
    return StabVerdict(verdict=verdict, matched_case=case, checks=checks)


@dataclass(frozen=True)
class PscVerdict:
    """Answer to the stabilized psc existence question, with a reason."""

    stably_exists: bool
    reason: str


_INDEX_NOTE = ("the spin branch uses the standard index-theoretic "
               "criterion, a step beyond the cobordism bookkeeping here")


def stable_psc_from_signature(sigma: int, spin: bool) -> PscVerdict:
    """Stabilized psc existence from the signature alone.

    The verdict depends only on (spin, sigma), so callers that know the
    signature (hypersurface formulas, say) need not build the form.
    """
    if not spin:
        return PscVerdict(
            stably_exists=True,
            reason="nonspin: every oriented cobordism class of 4-manifolds "
                   "contains a representative with positive scalar curvature, "
                   "so stabilized existence holds")
    if sigma == 0:
        return PscVerdict(
            stably_exists=True,
            reason=f"spin with signature 0: the obstruction vanishes "
                   f"({_INDEX_NOTE})")
    return PscVerdict(
        stably_exists=False,
        reason=f"spin with signature {sigma}: a nonzero signature obstructs "
               f"stabilized positive scalar curvature ({_INDEX_NOTE})")


def stable_psc_exists(form: SymForm, spin: bool) -> PscVerdict:
    """Stabilized positive-scalar-curvature existence for the manifold.

    Nonspin manifolds always stabilize to psc; spin manifolds do exactly
    when the signature vanishes.  Consistency of ``spin`` with the form
    parity is the caller's responsibility (the CLI enforces it when
    parsing input).
    """
    sigma = signature_of(form).sigma if spin else 0
    return stable_psc_from_signature(sigma, spin)
