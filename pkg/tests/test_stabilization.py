import pytest

from pscstab.catalog import get_entry
from pscstab.errors import InputError, SpinMismatchError
from pscstab.isometries import compose, is_unit_component
from pscstab.mapping_torus import w2w3_mapping_torus
from pscstab.quad_forms import is_even
from pscstab.stabilization import (
    GUARANTEED,
    INCONCLUSIVE,
    check_product_stabilization,
    stable_psc_exists,
    stable_psc_from_signature,
)

S2XS2 = get_entry("S2xS2")
FLIP = S2XS2.isometry("flip")
NEG = S2XS2.isometry("neg_neg")
IDENT = S2XS2.isometry("identity")
CONJ = get_entry("CP2").isometry("conjugation")


def test_routing_flip_spin_n2_is_case_1():
    verdict = check_product_stabilization(FLIP, True, 2)
    assert verdict.verdict == GUARANTEED
    assert verdict.matched_case == 1


def test_routing_conjugation_nonspin_n2_is_inconclusive():
    verdict = check_product_stabilization(CONJ, False, 2)
    assert verdict.verdict == INCONCLUSIVE
    assert verdict.matched_case is None
    blocked = {c.name: c.holds for c in verdict.checks}
    assert blocked["w2w3 vanishes"] is False


def test_routing_flip_spin_n1_is_inconclusive():
    verdict = check_product_stabilization(FLIP, True, 1)
    assert verdict.verdict == INCONCLUSIVE
    held = {c.name: c.holds for c in verdict.checks}
    assert held["unit component"] is False


def test_routing_identity_spin_n1_is_case_3():
    verdict = check_product_stabilization(IDENT, True, 1)
    assert verdict.verdict == GUARANTEED
    assert verdict.matched_case == 3


def test_case_4_nonspin_unit_component():
    ruberman = get_entry("Ruberman")
    verdict = check_product_stabilization(ruberman.isometry("identity"), False, 1)
    assert verdict.matched_case == 4


def test_case_2_nonspin_vanishing_w2w3():
    cp2_id = get_entry("CP2").isometry("identity")
    verdict = check_product_stabilization(cp2_id, False, 2)
    assert verdict.matched_case == 2


def test_checks_always_enumerate_the_four_conditions():
    for verdict in (
        check_product_stabilization(FLIP, True, 2),
        check_product_stabilization(CONJ, False, 1),
    ):
        assert [c.name for c in verdict.checks] == [
            "spin", "n >= 2", "w2w3 vanishes", "unit component"]
        assert all(isinstance(c.explanation, str) and c.explanation
                   for c in verdict.checks)


def test_identity_guaranteed_for_every_n_and_parity():
    odd_id = get_entry("nCP2_mCP2bar(2,1)").isometry("identity")
    for n in (1, 2, 3):
        assert check_product_stabilization(IDENT, True, n).verdict == GUARANTEED
        assert check_product_stabilization(odd_id, False, n).verdict == GUARANTEED


def test_monotonicity_in_n_over_catalog_isometries():
    # guaranteed at n = 1 must stay guaranteed for larger n
    for entry_name in ("S2xS2", "CP2", "CP2bar", "E8", "K3", "Ruberman"):
        entry = get_entry(entry_name)
        spin = is_even(entry.form)
        for _, iso in entry.known_isometries:
            verdicts = [
                check_product_stabilization(iso, spin, n).verdict
                for n in (1, 2, 3)
            ]
            if verdicts[0] == GUARANTEED:
                assert verdicts[1] == GUARANTEED and verdicts[2] == GUARANTEED


def test_verdict_depends_only_on_w2w3_and_component():
    # distinct matrices, same (w2w3, unit) pair, same verdicts
    pairs = [(FLIP, NEG), (IDENT, compose(FLIP, FLIP))]
    for a, b in pairs:
        key_a = (w2w3_mapping_torus(a), is_unit_component(a))
        key_b = (w2w3_mapping_torus(b), is_unit_component(b))
        assert key_a == key_b
        for n in (1, 2):
            va = check_product_stabilization(a, True, n)
            vb = check_product_stabilization(b, True, n)
            assert (va.verdict, va.matched_case) == (vb.verdict, vb.matched_case)


def test_n_validation():
    with pytest.raises(InputError):
        check_product_stabilization(FLIP, True, 0)
    with pytest.raises(InputError):
        check_product_stabilization(FLIP, True, -2)
    with pytest.raises(InputError):
        check_product_stabilization(FLIP, True, True)
    with pytest.raises(InputError):
        check_product_stabilization(FLIP, True, "2")


def test_spin_flag_must_match_parity_unless_overridden():
    with pytest.raises(SpinMismatchError):
        check_product_stabilization(FLIP, False, 2)
    with pytest.raises(SpinMismatchError):
        check_product_stabilization(CONJ, True, 2)
    forced = check_product_stabilization(FLIP, False, 2, override_spin=True)
    assert forced.matched_case == 2  # nonspin route, w2w3 = 0


def test_stable_psc_verdicts():
    assert stable_psc_exists(get_entry("Ruberman").form, spin=False).stably_exists
    k3 = stable_psc_exists(get_entry("K3").form, spin=True)
    assert not k3.stably_exists
    assert "-16" in k3.reason
    assert stable_psc_exists(S2XS2.form, spin=True).stably_exists


def test_stable_psc_reasons_name_their_branch():
    assert "nonspin" in stable_psc_exists(get_entry("CP2").form, False).reason
    assert "index" in stable_psc_exists(get_entry("K3").form, True).reason


def test_signature_level_verdict_agrees_with_form_level():
    cases = [("Ruberman", False), ("K3", True), ("S2xS2", True), ("CP2", False)]
    from pscstab.quad_forms import signature_of

    for name, spin in cases:
        form = get_entry(name).form
        by_form = stable_psc_exists(form, spin)
        by_sigma = stable_psc_from_signature(signature_of(form).sigma, spin)
        assert by_form == by_sigma
