"""Canonical JSON encoding and problem-input parsing for the CLI.

Canonical output rules: keys appear in fixed insertion order, output is
indented two spaces with ASCII escapes and ends in a newline, integers
whose magnitude exceeds 53 bits are rendered as decimal strings so that
JavaScript-side consumers never silently round them, and sign values
are the strings "+1" / "-1".  Parsing accepts integers both as JSON
numbers and as decimal strings; floats are rejected everywhere because
the whole package is exact.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import InputError, SpinMismatchError, ValidationError
from .isometries import FormIsometry, validate_isometry
from .quad_forms import SymForm, is_even, validate_form

MAX_SAFE_INT = 2 ** 53 - 1
_INT_RE = re.compile(r"^-?\d+$")


def _encode(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) <= MAX_SAFE_INT else str(obj)
    if isinstance(obj, float):
        raise AssertionError("floats must never reach the JSON encoder")
    if isinstance(obj, (list, tuple)):
        return [_encode(x) for x in obj]
    if isinstance(obj, dict):
        return {key: _encode(value) for key, value in obj.items()}
    raise AssertionError(f"unexpected object in JSON encoder: {obj!r}")


def canonical_dumps(obj) -> str:
    """Serialize with the canonical conventions; ends with a newline."""
    return json.dumps(_encode(obj), indent=2, ensure_ascii=True) + "\n"


def encode_sign(sign: int) -> str:
    if sign not in (1, -1):
        raise AssertionError(f"sign fields must be +-1, got {sign!r}")
    return "+1" if sign == 1 else "-1"


def parse_exact_int(value, what: str = "integer") -> int:
    if isinstance(value, bool):
        raise ValidationError(f"{what} must be an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INT_RE.match(value):
        return int(value)
    raise ValidationError(
        f"{what} must be an integer (large values as decimal strings), "
        f"got {value!r}")


def parse_int_matrix(value, what: str) -> list[list[int]]:
    if not isinstance(value, list) or not value or not all(
            isinstance(row, list) for row in value):
        raise ValidationError(f"{what} must be a non-empty array of arrays")
    return [[parse_exact_int(x, f"{what} entry") for x in row] for row in value]


def matrix_to_json(matrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in matrix]


def form_to_json(form: SymForm) -> dict:
    out: dict = {}
    if form.label is not None:
        out["label"] = form.label
    out["matrix"] = matrix_to_json(form.matrix)
    return out


def parse_form(value) -> SymForm:
    if not isinstance(value, dict):
        raise ValidationError('"form" must be an object with a "matrix" field')
    unknown = set(value) - {"label", "matrix"}
    if unknown:
        raise ValidationError(f"unknown form fields: {sorted(unknown)}")
    label = value.get("label")
    if label is not None and not isinstance(label, str):
        raise ValidationError('"label" must be a string')
    if "matrix" not in value:
        raise ValidationError('"form" needs a "matrix" field')
    return validate_form(parse_int_matrix(value["matrix"], "form matrix"), label=label)


@dataclass(frozen=True)
class ProblemInput:
    """One parsed problem: a form, an isometry and the hypotheses."""

    form: SymForm
    iso: FormIsometry
    spin: bool
    override_spin: bool
    n: int | None

    def echo(self) -> dict:
        out: dict = {"form": form_to_json(self.form)}
        out["isometry"] = matrix_to_json(self.iso.matrix)
        out["spin"] = self.spin
        if self.override_spin:
            out["override_spin"] = True
        if self.n is not None:
            out["n"] = self.n
        return out


def parse_problem(value) -> ProblemInput:
    """Parse and validate one problem object.

    The isometry must be integral here: rational isometries only arise
    inside the test generators, never as CLI input.  A spin flag that
    contradicts the parity of the form is rejected unless
    ``override_spin`` is set, because for simply connected closed
    4-manifolds parity determines spin.
    """
    if not isinstance(value, dict):
        raise ValidationError("a problem must be a JSON object")
    unknown = set(value) - {"form", "isometry", "spin", "override_spin", "n"}
    if unknown:
        raise ValidationError(f"unknown problem fields: {sorted(unknown)}")
    if "form" not in value or "isometry" not in value:
        raise ValidationError('a problem needs "form" and "isometry" fields')
    form = parse_form(value["form"])
    iso = validate_isometry(form, parse_int_matrix(value["isometry"], "isometry"))
    even = is_even(form)
    override = value.get("override_spin", False)
    if not isinstance(override, bool):
        raise ValidationError('"override_spin" must be a boolean')
    spin = value.get("spin", even)
    if not isinstance(spin, bool):
        raise ValidationError('"spin" must be a boolean')
    if spin != even and not override:
        raise SpinMismatchError(
            f'the spin flag {spin} contradicts the form parity '
            f'(even = {even}); set "override_spin": true to force it')
    n = value.get("n")
    if n is not None:
        n = parse_exact_int(n, '"n"')
    return ProblemInput(form=form, iso=iso, spin=spin, override_spin=bool(override), n=n)


def loads_strict(text: str):
    """json.loads wrapped so syntax errors become InputErrors."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}") from exc
