"""Command line interface.

Subcommands:

* ``invariants``: full invariant report for a (form, isometry) problem;
* ``check-stab``: the product-stabilization decision for a problem that
  also carries the stabilization count ``n``;
* ``catalog``: ``list`` the bundled reference forms or ``show`` one;
* ``hypersurface``: invariants of the degree-d hypersurface in CP^3
  together with its stabilized psc verdict;
* ``selftest``: the bundled reference vectors, plus the extended
  property suites with ``--extended``.

Problems are JSON objects (see the README for the schema) read from
``--in FILE`` or stdin.  Output is canonical JSON by default: fixed key
order, two-space indent, integers above 53 bits as decimal strings,
signs as "+1" / "-1", no timestamps, so identical inputs produce
byte-identical output.  ``--format text`` renders the same data for
humans; the PSC_STAB_COLOR environment variable (auto / always / never)
controls ANSI color in text mode.

Exit codes: 0 for success or a guaranteed/true verdict, 2 for invalid
input (with a machine-readable error object), 3 for an inconclusive or
false verdict (including selftest failures).
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings

from .catalog import get_entry, hypersurface, list_entries
from .errors import InputError, NonUnimodularFormWarning
from .generators import DEFAULT_SEED
from .isometries import (
    delta_pm,
    eig1_dim_mod2,
    eig1_dim_rational,
    is_unit_component,
    iso_det,
    pi0_class,
)
from .jsonio import (
    ProblemInput,
    canonical_dumps,
    encode_sign,
    form_to_json,
    loads_strict,
    matrix_to_json,
    parse_problem,
)
from .mapping_torus import (
    in_spin_image,
    kervaire_semichar,
    phi_invariant,
    w2w3_mapping_torus,
)
from .quad_forms import definiteness, is_even, signature_of
from .selftest import run_basic, run_extended
from .stabilization import GUARANTEED, check_product_stabilization, stable_psc_from_signature

_GREEN, _RED, _YELLOW, _RESET = "\x1b[32m", "\x1b[31m", "\x1b[33m", "\x1b[0m"


def _use_color() -> bool:
    mode = os.environ.get("PSC_STAB_COLOR", "auto")
    if mode == "always":
        return True
    if mode == "never":
        return False
    return sys.stdout.isatty()


def _paint(text: str, color: str, on: bool) -> str:
    return f"{color}{text}{_RESET}" if on else text


def _invariants_block(problem: ProblemInput) -> tuple[dict, list[str]]:
    form, iso = problem.form, problem.iso
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        phi = phi_invariant(iso)
    notes = sorted({
        str(w.message) for w in caught
        if isinstance(w.message, NonUnimodularFormWarning)
    })
    sig = signature_of(form)
    dplus, dminus = delta_pm(iso)
    cls = pi0_class(iso)
    block = {
        "rank": form.rank,
        "signature": {"p": sig.p, "q": sig.q, "sigma": sig.sigma},
        "even": is_even(form),
        "unimodular": form.unimodular,
        "definiteness": definiteness(form),
        "spin": problem.spin,
        "det": encode_sign(iso_det(iso)),
        "delta_plus": encode_sign(dplus),
        "delta_minus": encode_sign(dminus),
        "eig1_dim_rational": eig1_dim_rational(iso),
        "eig1_dim_mod2": eig1_dim_mod2(iso),
        "kervaire_char0": kervaire_semichar(iso, 0),
        "kervaire_char2": kervaire_semichar(iso, 2),
        "w2w3_mapping_torus": w2w3_mapping_torus(iso),
        "phi": list(phi.bits()),
        "pi0_class": {
            "det_bit": cls.det_bit,
            "delta_plus_bit": cls.delta_plus_bit,
            "definite": cls.definite,
        },
        "unit_component": is_unit_component(iso),
        "in_spin_image": in_spin_image(phi),
    }
    return block, notes


def _invariants_report(problem: ProblemInput) -> tuple[dict, int]:
    block, notes = _invariants_block(problem)
    report: dict = {"input": problem.echo(), "invariants": block}
    if notes:
        report["warnings"] = notes
    return report, 0


def _stab_report(problem: ProblemInput) -> tuple[dict, int]:
    if problem.n is None:
        raise InputError('check-stab needs an "n" field (stabilization count)')
    verdict = check_product_stabilization(
        problem.iso, problem.spin, problem.n, override_spin=problem.override_spin)
    block, notes = _invariants_block(problem)
    report: dict = {
        "input": problem.echo(),
        "invariants": block,
        "verdict": {
            "verdict": verdict.verdict,
            "matched_case": verdict.matched_case,
            "checks": [
                {"condition": c.name, "holds": c.holds, "explanation": c.explanation}
                for c in verdict.checks
            ],
        },
    }
    if notes:
        report["warnings"] = notes
    return report, 0 if verdict.verdict == GUARANTEED else 3


def _read_input(args) -> str:
    if args.infile == "-":
        return sys.stdin.read()
    try:
        with open(args.infile, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read input file: {exc}") from exc


def _run_problems(args, build) -> tuple[object, int]:
    data = loads_strict(_read_input(args))
    if getattr(args, "batch", False):
        if not isinstance(data, list):
            raise InputError("--batch expects a JSON array of problems")
        reports = []
        code = 0
        for item in data:
            report, item_code = build(parse_problem(item))
            reports.append(report)
            code = max(code, item_code)
        return reports, code
    return build(parse_problem(data))


def _catalog_payload(args) -> tuple[dict, int]:
    if args.action == "list":
        return {"entries": list(list_entries())}, 0
    entry = get_entry(args.name)
    sig = signature_of(entry.form)
    return {
        "name": entry.name,
        "description": entry.description,
        "form": form_to_json(entry.form),
        "signature": {"p": sig.p, "q": sig.q, "sigma": sig.sigma},
        "even": is_even(entry.form),
        "unimodular": entry.form.unimodular,
        "spin": entry.spin,
        "known_isometries": [
            {"name": name, "matrix": matrix_to_json(iso.matrix)}
            for name, iso in entry.known_isometries
        ],
    }, 0


def _hypersurface_payload(args) -> tuple[dict, int]:
    inv = hypersurface(args.degree)
    verdict = stable_psc_from_signature(inv.signature, inv.spin)
    return {
        "input": {"degree": inv.degree},
        "hypersurface": {
            "degree": inv.degree,
            "euler": inv.euler,
            "signature": inv.signature,
            "b2": inv.b2,
            "b2_plus": inv.b2_plus,
            "spin": inv.spin,
        },
        "stable_psc": {
            "stably_exists": verdict.stably_exists,
            "reason": verdict.reason,
        },
    }, 0 if verdict.stably_exists else 3


def _selftest_payload(args) -> tuple[dict, int]:
    results = run_basic()
    if args.extended:
        results += run_extended(seed=args.seed, per_class=args.per_class)
    payload = {
        "results": [
            {"name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "passed": all(r.passed for r in results),
    }
    return payload, 0 if payload["passed"] else 3


def _render_signs_line(block: dict) -> str:
    return (f"det: {block['det']}   delta_plus: {block['delta_plus']}   "
            f"delta_minus: {block['delta_minus']}")


def _render_invariants(block: dict, lines: list[str]) -> None:
    sig = block["signature"]
    lines.append(f"rank: {block['rank']}")
    lines.append(f"signature: p={sig['p']} q={sig['q']} sigma={sig['sigma']}")
    lines.append(f"even: {block['even']}   unimodular: {block['unimodular']}   "
                 f"definiteness: {block['definiteness']}   spin: {block['spin']}")
    lines.append(_render_signs_line(block))
    lines.append(f"eig1 dim: rational={block['eig1_dim_rational']} "
                 f"mod2={block['eig1_dim_mod2']}")
    lines.append(f"kervaire: char0={block['kervaire_char0']} "
                 f"char2={block['kervaire_char2']}")
    lines.append(f"w2w3 of mapping torus: {block['w2w3_mapping_torus']}")
    lines.append(f"phi: {tuple(block['phi'])}")
    cls = block["pi0_class"]
    lines.append(f"pi0 class: det_bit={cls['det_bit']} "
                 f"delta_plus_bit={cls['delta_plus_bit']} definite={cls['definite']}")
    lines.append(f"unit component: {block['unit_component']}")
    lines.append(f"in spin image: {block['in_spin_image']}")


def _render_report_text(report: dict, color: bool) -> str:
    lines: list[str] = []
    label = report.get("input", {}).get("form", {}).get("label")
    if label:
        lines.append(f"form: {label}")
    if "invariants" in report:
        _render_invariants(report["invariants"], lines)
    if "verdict" in report:
        v = report["verdict"]
        word = v["verdict"]
        painted = _paint(word, _GREEN if word == GUARANTEED else _YELLOW, color)
        case = f" (case {v['matched_case']})" if v["matched_case"] else ""
        lines.append(f"verdict: {painted}{case}")
        for check in v["checks"]:
            mark = "x" if check["holds"] else " "
            lines.append(f"  [{mark}] {check['condition']}: {check['explanation']}")
    if "hypersurface" in report:
        h = report["hypersurface"]
        lines.append(f"degree: {h['degree']}")
        lines.append(f"euler: {h['euler']}   signature: {h['signature']}")
        lines.append(f"b2: {h['b2']}   b2_plus: {h['b2_plus']}   spin: {h['spin']}")
    if "stable_psc" in report:
        s = report["stable_psc"]
        word = "yes" if s["stably_exists"] else "no"
        painted = _paint(word, _GREEN if s["stably_exists"] else _RED, color)
        lines.append(f"stable psc: {painted}")
        lines.append(f"reason: {s['reason']}")
    if "results" in report:
        for r in report["results"]:
            word = "PASS" if r["passed"] else "FAIL"
            painted = _paint(word, _GREEN if r["passed"] else _RED, color)
            lines.append(f"{painted} {r['name']}: {r['detail']}")
        overall = "PASS" if report["passed"] else "FAIL"
        painted = _paint(overall, _GREEN if report["passed"] else _RED, color)
        lines.append(f"overall: {painted}")
    if "entries" in report:
        lines.extend(report["entries"])
    if "name" in report and "description" in report:
        lines.append(f"name: {report['name']}")
        lines.append(f"description: {report['description']}")
        sig = report["signature"]
        lines.append(f"signature: p={sig['p']} q={sig['q']} sigma={sig['sigma']}")
        lines.append(f"even: {report['even']}   unimodular: {report['unimodular']}   "
                     f"spin: {report['spin']}")
        lines.append("matrix:")
        for row in report["form"]["matrix"]:
            lines.append("  " + " ".join(str(x) for x in row))
        names = ", ".join(i["name"] for i in report["known_isometries"])
        lines.append(f"known isometries: {names}")
    if "warnings" in report:
        for note in report["warnings"]:
            lines.append(_paint(f"warning: {note}", _YELLOW, color))
    return "\n".join(lines) + "\n"


def _emit(args, payload) -> None:
    if args.quiet:
        return
    if args.format == "json":
        sys.stdout.write(canonical_dumps(payload))
        return
    color = _use_color()
    if isinstance(payload, list):
        parts = []
        for idx, report in enumerate(payload):
            parts.append(f"# problem {idx}\n" + _render_report_text(report, color))
        sys.stdout.write("\n".join(parts))
        return
    sys.stdout.write(_render_report_text(payload, color))


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "text"), default="json",
                        help="output format (default: json)")
    parser.add_argument("--quiet", action="store_true",
                        help="print nothing; only set the exit code")


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="infile", default="-", metavar="FILE",
                        help="input file, or - for stdin (default)")
    parser.add_argument("--batch", action="store_true",
                        help="treat the input as a JSON array of problems")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psc-stab",
        description="Exact invariants of intersection-form isometries and "
                    "stabilized positive-scalar-curvature checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariant report for a problem")
    _add_input_flags(p_inv)
    _add_output_flags(p_inv)

    p_stab = sub.add_parser("check-stab", help="product-stabilization check")
    _add_input_flags(p_stab)
    _add_output_flags(p_stab)

    p_cat = sub.add_parser("catalog", help="bundled reference forms")
    cat_sub = p_cat.add_subparsers(dest="action", required=True)
    p_list = cat_sub.add_parser("list", help="list entry names")
    _add_output_flags(p_list)
    p_show = cat_sub.add_parser("show", help="show one entry")
    p_show.add_argument("name")
    _add_output_flags(p_show)

    p_hyp = sub.add_parser("hypersurface",
                           help="invariants of a degree-d hypersurface in CP^3")
    p_hyp.add_argument("degree", type=int)
    _add_output_flags(p_hyp)

    p_self = sub.add_parser("selftest", help="run the bundled checks")
    p_self.add_argument("--extended", action="store_true",
                        help="also run the randomized property suites")
    p_self.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for the extended suites")
    p_self.add_argument("--per-class", dest="per_class", type=int, default=120,
                        help="samples per signature class in the extended suites")
    _add_output_flags(p_self)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "invariants":
            payload, code = _run_problems(args, _invariants_report)
        elif args.command == "check-stab":
            payload, code = _run_problems(args, _stab_report)
        elif args.command == "catalog":
            payload, code = _catalog_payload(args)
        elif args.command == "hypersurface":
            payload, code = _hypersurface_payload(args)
        else:
            payload, code = _selftest_payload(args)
    except InputError as exc:
        if not args.quiet:
            error_obj = {"error": exc.code, "detail": str(exc)}
            if args.format == "json":
                sys.stdout.write(canonical_dumps(error_obj))
            else:
                sys.stdout.write(f"error ({exc.code}): {exc}\n")
        return 2
    _emit(args, payload)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
