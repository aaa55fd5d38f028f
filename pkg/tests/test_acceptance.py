"""Acceptance gate: one test per criterion, run in order.

Each test prints a single "criterion N ... PASS/FAIL" line (visible
with -s, or in the failure report) and asserts it.  Randomized criteria
use the fixed default seed, so reruns are bit-for-bit repeatable.
"""

import json
import os
import subprocess
import sys
import time
from pathlib import Path

from pscstab.catalog import get_entry, hypersurface
from pscstab.generators import (
    DEFAULT_SEED,
    REFLECTIONS,
    IsometryGenerator,
    generate,
)
from pscstab.isometries import (
    compose,
    delta_pm,
    eig1_dim_mod2,
    eig1_dim_rational,
    iso_det,
    pi0_class,
)
from pscstab.mapping_torus import kervaire_semichar, wang_betti_oracle, w2w3_mapping_torus
from pscstab.quad_forms import is_even, signature_of
from pscstab.selftest import integral_mode_for, run_basic, signature_class_forms
from pscstab.stabilization import GUARANTEED, check_product_stabilization

SRC = Path(__file__).resolve().parent.parent / "src"
RATIONAL_COUNT = 500
INTEGRAL_COUNT = 200
_pools: dict = {}


def _rational_pool():
    if "rational" not in _pools:
        _pools["rational"] = [
            (form, generate(
                IsometryGenerator(form, seed=DEFAULT_SEED, mode=REFLECTIONS),
                RATIONAL_COUNT))
            for _, form in signature_class_forms()
        ]
    return _pools["rational"]


def _integral_pool():
    if "integral" not in _pools:
        _pools["integral"] = [
            (form, generate(
                IsometryGenerator(form, seed=DEFAULT_SEED,
                                  mode=integral_mode_for(form)),
                INTEGRAL_COUNT))
            for _, form in signature_class_forms()
        ]
    return _pools["integral"]


def _verdict(num, label, ok, detail):
    line = f"criterion {num} ({label}): {'PASS' if ok else 'FAIL'} [{detail}]"
    print(line, flush=True)
    assert ok, line


def _run_cli(args, stdin=""):
    env = dict(os.environ)
    env["PYTHONPATH"] = str(SRC) + os.pathsep + env.get("PYTHONPATH", "")
    env.setdefault("PSC_STAB_COLOR", "never")
    return subprocess.run(
        [sys.executable, "-m", "pscstab", *args],
        input=stdin, capture_output=True, text=True, env=env)


def test_criterion_1_reference_generator_table():
    start = time.monotonic()
    results = run_basic()
    elapsed = time.monotonic() - start
    ok = all(r.passed for r in results) and elapsed < 1.0
    _verdict(1, "reference phi triples via selftest", ok,
             f"{len(results)} checks in {elapsed:.3f}s")


def test_criterion_2_gantmacher_identity():
    start = time.monotonic()
    failures = 0
    total = 0
    for form, samples in _rational_pool():
        for iso in samples:
            total += 1
            parity = (eig1_dim_rational(iso) + iso.rank) % 2
            if (-1) ** parity != iso_det(iso):
                failures += 1
    elapsed = time.monotonic() - start
    ok = failures == 0 and elapsed < 30.0
    _verdict(2, "determinant parity identity", ok,
             f"{total} samples, {failures} failures, {elapsed:.2f}s")


def test_criterion_3_sign_homomorphism_laws():
    import random

    start = time.monotonic()
    failures = 0
    pairs_checked = 0
    rng = random.Random(DEFAULT_SEED)
    for form, samples in _rational_pool():
        for iso in samples:
            dp, dm = delta_pm(iso)
            if dp * dm != iso_det(iso):
                failures += 1
        for _ in range(RATIONAL_COUNT):
            a, b = rng.choice(samples), rng.choice(samples)
            ab = compose(a, b)
            pairs_checked += 1
            if iso_det(ab) != iso_det(a) * iso_det(b):
                failures += 1
                continue
            dpa, dma = delta_pm(a)
            dpb, dmb = delta_pm(b)
            if delta_pm(ab) != (dpa * dpb, dma * dmb):
                failures += 1
    elapsed = time.monotonic() - start
    ok = failures == 0 and elapsed < 60.0
    _verdict(3, "sign laws on elements and pairs", ok,
             f"{pairs_checked} pairs, {failures} failures, {elapsed:.2f}s")


def test_criterion_4_wang_oracle_agreement():
    failures = 0
    total = 0
    for form, samples in _integral_pool():
        for iso in samples:
            for char in (0, 2):
                total += 1
                betti = wang_betti_oracle(iso, char)
                semi = (betti.b0 + betti.b1 + betti.b2) % 2
                if semi != kervaire_semichar(iso, char):
                    failures += 1
    _verdict(4, "Wang oracle semicharacteristics", failures == 0,
             f"{total} oracle comparisons, {failures} failures")


def test_criterion_5_semicharacteristic_difference():
    failures = 0
    total = 0
    for form, samples in _integral_pool():
        for iso in samples:
            total += 1
            lhs = w2w3_mapping_torus(iso)
            rhs = (kervaire_semichar(iso, 0) - kervaire_semichar(iso, 2)) % 2
            if lhs != rhs:
                failures += 1
    _verdict(5, "w2w3 equals semicharacteristic difference", failures == 0,
             f"{total} samples, {failures} failures")


def test_criterion_6_component_image_sizes():
    count = 2000
    indefinite = get_entry("nCP2_mCP2bar(2,2)").form
    definite = get_entry("nCP2_mCP2bar(3,0)").form
    seen_indef = {
        (c.det_bit, c.delta_plus_bit)
        for c in map(pi0_class, generate(
            IsometryGenerator(indefinite, seed=DEFAULT_SEED, mode=REFLECTIONS),
            count))
    }
    seen_def = {
        (c.det_bit, c.delta_plus_bit)
        for c in map(pi0_class, generate(
            IsometryGenerator(definite, seed=DEFAULT_SEED, mode=REFLECTIONS),
            count))
    }
    ok = len(seen_indef) == 4 and len(seen_def) <= 2
    _verdict(6, "component class image sizes", ok,
             f"(2,2) hits {len(seen_indef)}, (3,0) hits {len(seen_def)} "
             f"over {count} samples each")


def test_criterion_7_stabilization_routing():
    s2 = get_entry("S2xS2")
    cp2 = get_entry("CP2")
    cases = [
        (s2.isometry("flip"), True, 2, GUARANTEED, 1, 0),
        (cp2.isometry("conjugation"), False, 2, "inconclusive", None, 3),
        (s2.isometry("flip"), True, 1, "inconclusive", None, 3),
        (s2.isometry("identity"), True, 1, GUARANTEED, 3, 0),
    ]
    ok = True
    for iso, spin, n, want_verdict, want_case, want_exit in cases:
        verdict = check_product_stabilization(iso, spin, n)
        if verdict.verdict != want_verdict or verdict.matched_case != want_case:
            ok = False
        problem = {
            "form": {"matrix": [list(r) for r in iso.form.matrix]},
            "isometry": [[int(x) for x in row] for row in iso.matrix],
            "n": n,
        }
        res = _run_cli(["check-stab"], stdin=json.dumps(problem))
        if res.returncode != want_exit:
            ok = False
    monotone = True
    checked = 0
    for name in ("S2xS2", "CP2", "CP2bar", "E8", "K3", "Ruberman"):
        entry = get_entry(name)
        spin = is_even(entry.form)
        for _, iso in entry.known_isometries:
            flags = [
                check_product_stabilization(iso, spin, n).verdict == GUARANTEED
                for n in (1, 2, 3)
            ]
            checked += 1
            if (flags[0] and not flags[1]) or (flags[1] and not flags[2]):
                monotone = False
    ok = ok and monotone
    _verdict(7, "stabilization routing and monotonicity", ok,
             f"4 routed examples, {checked} isometries swept over n in 1..3")


def test_criterion_8_hypersurface_anchors():
    d1 = hypersurface(1)
    d4 = hypersurface(4)
    d5 = hypersurface(5)
    k3_sig = signature_of(get_entry("K3").form)
    ok = (
        (d1.euler, d1.signature) == (3, 1)
        and (d4.euler, d4.signature, d4.spin) == (24, -16, True)
        and (k3_sig.p, k3_sig.q) == (3, 19)
        and (d4.b2_plus, d4.b2 - d4.b2_plus) == (k3_sig.p, k3_sig.q)
        and not d5.spin and d5.b2_plus >= 2
    )
    _verdict(8, "hypersurface anchors", ok,
             f"d=1 euler {d1.euler}, d=4 sigma {d4.signature}, "
             f"d=5 b2+ {d5.b2_plus}")


def test_criterion_9_cli_determinism():
    flip = {"form": {"label": "H", "matrix": [[0, 1], [1, 0]]},
            "isometry": [[0, 1], [1, 0]]}
    conj = {"form": {"matrix": [[1]]}, "isometry": [[-1]]}
    ident = {"form": {"matrix": [[1]]}, "isometry": [[1]]}
    big = {"form": {"matrix": [[str(2 ** 60 + 1)]]}, "isometry": [[1]]}
    runs = [
        (["invariants"], json.dumps(flip)),
        (["invariants"], json.dumps(conj)),
        (["invariants"], json.dumps(ident)),
        (["invariants"], json.dumps(big)),
        (["invariants", "--format", "text"], json.dumps(flip)),
        (["check-stab"], json.dumps({**flip, "n": 2})),
        (["check-stab"], json.dumps({**flip, "n": 1})),
        (["check-stab"], json.dumps({**conj, "n": 3})),
        (["check-stab", "--batch"],
         json.dumps([{**flip, "n": 2}, {**ident, "n": 1}])),
        (["catalog", "list"], ""),
        (["catalog", "show", "K3"], ""),
        (["catalog", "show", "nCP2_mCP2bar(4,21)"], ""),
        (["hypersurface", "1"], ""),
        (["hypersurface", "4"], ""),
        (["hypersurface", "5"], ""),
        (["selftest"], ""),
        (["selftest", "--extended", "--per-class", "5"], ""),
    ]
    mismatches = 0
    for args, stdin in runs:
        first = _run_cli(args, stdin=stdin)
        second = _run_cli(args, stdin=stdin)
        if first.stdout != second.stdout or first.returncode != second.returncode:
            mismatches += 1
    _verdict(9, "byte-identical CLI output", mismatches == 0,
             f"{len(runs)} invocations run twice, {mismatches} mismatches")
