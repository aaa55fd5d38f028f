"""Built-in verification: reference vectors and cross-module properties.

``run_basic`` checks the bundled reference diffeomorphisms against their
known invariant triples:

* the factor flip on S2xS2 has phi = (0, 1, 0);
* the product of antipodal-degree maps on S2xS2 (minus the identity on
  cohomology) has phi = (0, 0, 1);
* complex conjugation on CP2 has phi = (1, 1, 1);
* identities have phi = (0, 0, 0) on every catalog form, which pins the
  normalization of the bordism bookkeeping.

``run_extended`` re-runs the cross-module identities (Gantmacher parity,
multiplicativity of det and the corner signs, the semicharacteristic
relation, the Wang-sequence oracle, component image sizes, frame
independence, additivity on catalog products) over deterministic random
samples in six signature classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import get_entry
from .generators import (
    CATALOG_PRODUCTS,
    DEFAULT_SEED,
    REFLECTIONS,
    SIGNED_PERMUTATIONS,
    IsometryGenerator,
    generate,
)
from .isometries import (
    FormIsometry,
    compose,
    delta_pm,
    eig1_dim_mod2,
    eig1_dim_rational,
    iso_det,
    pi0_class,
    sylvester_frame,
)
from .mapping_torus import (
    kervaire_semichar,
    phi_invariant,
    wang_betti_oracle,
    w2w3_mapping_torus,
)
from .quad_forms import SymForm


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def reference_cases() -> list[tuple[str, FormIsometry, tuple[int, int, int]]]:
    s2xs2 = get_entry("S2xS2")
    cp2 = get_entry("CP2")
    return [
        ("flip on S2xS2", s2xs2.isometry("flip"), (0, 1, 0)),
        ("neg_neg on S2xS2", s2xs2.isometry("neg_neg"), (0, 0, 1)),
        ("conjugation on CP2", cp2.isometry("conjugation"), (1, 1, 1)),
    ]


def run_basic() -> list[CheckResult]:
    results = []
    for name, iso, expected in reference_cases():
        got = phi_invariant(iso).bits()
        results.append(CheckResult(
            name=f"phi of {name}",
            passed=got == expected,
            detail=f"phi = {got}, expected {expected}",
        ))
    identity_ok = []
    for entry_name in ("S2xS2", "CP2", "CP2bar", "K3", "Ruberman"):
        entry = get_entry(entry_name)
        bits = phi_invariant(entry.isometry("identity")).bits()
        identity_ok.append(bits == (0, 0, 0))
    results.append(CheckResult(
        name="phi of identities vanishes",
        passed=all(identity_ok),
        detail="phi(identity) = (0, 0, 0) on S2xS2, CP2, CP2bar, K3, Ruberman",
    ))
    return results


def signature_class_forms() -> list[tuple[tuple[int, int], SymForm]]:
    """The six signature classes the property suites sweep."""
    return [
        ((1, 1), get_entry("S2xS2").form),
        ((2, 1), get_entry("nCP2_mCP2bar(2,1)").form),
        ((2, 2), get_entry("nCP2_mCP2bar(2,2)").form),
        ((3, 0), get_entry("nCP2_mCP2bar(3,0)").form),
        ((3, 19), get_entry("K3").form),
        ((4, 21), get_entry("Ruberman").form),
    ]


def integral_mode_for(form: SymForm) -> str:
    """Sampling mode that yields integral isometries of this form."""
    if form.rank == 2 and form.matrix == ((0, 1), (1, 0)):
        return CATALOG_PRODUCTS
    return SIGNED_PERMUTATIONS


def _check_gantmacher(samples: list[FormIsometry]) -> bool:
    for iso in samples:
        parity = (eig1_dim_rational(iso) + iso.rank) % 2
        if (-1) ** parity != iso_det(iso):
            return False
    return True


def _check_sign_laws(samples: list[FormIsometry]) -> bool:
    for iso in samples:
        dp, dm = delta_pm(iso)
        if dp * dm != iso_det(iso):
            return False
    for a, b in zip(samples[0::2], samples[1::2]):
        ab = compose(a, b)
        if iso_det(ab) != iso_det(a) * iso_det(b):
            return False
        dpa, dma = delta_pm(a)
        dpb, dmb = delta_pm(b)
        dpab, dmab = delta_pm(ab)
        if dpab != dpa * dpb or dmab != dma * dmb:
            return False
    return True


def _check_torus_relations(samples: list[FormIsometry]) -> bool:
    for iso in samples:
        k0 = kervaire_semichar(iso, 0)
        k2 = kervaire_semichar(iso, 2)
        if w2w3_mapping_torus(iso) != (k0 + k2) % 2:
            return False
        for char, kappa, eig in ((0, k0, eig1_dim_rational), (2, k2, eig1_dim_mod2)):
            betti = wang_betti_oracle(iso, char)
            if betti.b0 != 1 or betti.b1 != 1 or betti.b2 != eig(iso):
                return False
            if (betti.b0 + betti.b1 + betti.b2) % 2 != kappa:
                return False
    return True


def _check_pi0_images(seed: int, count: int) -> tuple[bool, str]:
    indefinite = get_entry("nCP2_mCP2bar(2,2)").form
    definite = get_entry("nCP2_mCP2bar(3,0)").form
    seen_indef = {
        (c.det_bit, c.delta_plus_bit)
        for c in map(pi0_class, generate(
            IsometryGenerator(indefinite, seed=seed, mode=REFLECTIONS), count))
    }
    seen_def = {
        (c.det_bit, c.delta_plus_bit)
        for c in map(pi0_class, generate(
            IsometryGenerator(definite, seed=seed, mode=REFLECTIONS), count))
    }
    ok = len(seen_indef) == 4 and len(seen_def) <= 2
    return ok, (f"signature (2,2) hits {len(seen_indef)} component classes, "
                f"(3,0) hits {len(seen_def)}")


def _check_frame_independence(seed: int) -> bool:
    cases = [
        ("S2xS2", (1, 0)),
        ("nCP2_mCP2bar(2,2)", (3, 1, 0, 2)),
        ("nCP2_mCP2bar(2,2)", (1, 3, 2, 0)),
    ]
    for entry_name, order in cases:
        form = get_entry(entry_name).form
        frame = sylvester_frame(form, order=order)
        for iso in generate(IsometryGenerator(form, seed=seed, mode=REFLECTIONS), 25):
            if delta_pm(iso) != delta_pm(iso, frame):
                return False
    return True


def _check_phi_additivity() -> bool:
    for entry_name in ("S2xS2", "CP2"):
        entry = get_entry(entry_name)
        base = [iso for _, iso in entry.known_isometries]
        group = list(base)
        for a in base:
            for b in base:
                group.append(compose(a, b))
        for a in group:
            for b in group:
                lhs = phi_invariant(compose(a, b))
                rhs = phi_invariant(a) + phi_invariant(b)
                if lhs != rhs:
                    return False
    return True


def run_extended(seed: int = DEFAULT_SEED, per_class: int = 120) -> list[CheckResult]:
    results = []
    gant_ok, laws_ok, torus_ok = True, True, True
    for (p, q), form in signature_class_forms():
        rational = generate(
            IsometryGenerator(form, seed=seed, mode=REFLECTIONS), per_class)
        gant_ok = gant_ok and _check_gantmacher(rational)
        laws_ok = laws_ok and _check_sign_laws(rational)
        integral = generate(
            IsometryGenerator(form, seed=seed, mode=integral_mode_for(form)),
            per_class)
        torus_ok = torus_ok and _check_torus_relations(integral)
    results.append(CheckResult(
        "Gantmacher parity", gant_ok,
        f"(-1)^(dim Eig_1 + rank) = det over {per_class} samples per class"))
    results.append(CheckResult(
        "sign multiplicativity", laws_ok,
        "delta_plus * delta_minus = det and all three signs are "
        "multiplicative on sampled pairs"))
    results.append(CheckResult(
        "mapping torus relations", torus_ok,
        "w2w3 = kappa_0 - kappa_2 and the Wang oracle agrees over both fields"))
    pi0_ok, pi0_detail = _check_pi0_images(seed, max(per_class, 400))
    results.append(CheckResult("component image sizes", pi0_ok, pi0_detail))
    results.append(CheckResult(
        "frame independence", _check_frame_independence(seed),
        "delta signs agree across diagonalizing frames from other pivot orders"))
    results.append(CheckResult(
        "phi additivity on catalog products", _check_phi_additivity(),
        "phi(ab) = phi(a) + phi(b) for realized isometries of S2xS2 and CP2"))
    return results
