import json

import pytest

from pscstab.errors import InputError, SpinMismatchError, ValidationError
from pscstab.jsonio import (
    canonical_dumps,
    encode_sign,
    form_to_json,
    loads_strict,
    matrix_to_json,
    parse_exact_int,
    parse_form,
    parse_int_matrix,
    parse_problem,
)


def test_canonical_dumps_is_stable_and_newline_terminated():
    text = canonical_dumps({"b": 1, "a": [2, 3]})
    assert text.endswith("\n")
    assert text == canonical_dumps({"b": 1, "a": [2, 3]})
    # insertion order is preserved, not sorted
    assert text.index('"b"') < text.index('"a"')


def test_large_integers_become_decimal_strings():
    big = 2 ** 53
    data = json.loads(canonical_dumps({"big": big, "edge": big - 1, "neg": -big}))
    assert data["big"] == str(big)
    assert data["edge"] == big - 1
    assert data["neg"] == str(-big)


def test_floats_never_serialize():
    with pytest.raises(AssertionError):
        canonical_dumps({"x": 1.5})


def test_encode_sign():
    assert encode_sign(1) == "+1"
    assert encode_sign(-1) == "-1"
    with pytest.raises(AssertionError):
        encode_sign(0)


def test_parse_exact_int_accepts_numbers_and_decimal_strings():
    assert parse_exact_int(7) == 7
    assert parse_exact_int("-12") == -12
    assert parse_exact_int(str(2 ** 60)) == 2 ** 60
    for bad in (True, 1.0, "1.5", "0x1f", None):
        with pytest.raises(ValidationError):
            parse_exact_int(bad)


def test_parse_int_matrix_shape_errors():
    with pytest.raises(ValidationError):
        parse_int_matrix([], "m")
    with pytest.raises(ValidationError):
        parse_int_matrix([1, 2], "m")
    assert parse_int_matrix([[1, "2"]], "m") == [[1, 2]]


def test_parse_form_strictness():
    form = parse_form({"label": "H", "matrix": [[0, 1], [1, 0]]})
    assert form.label == "H"
    with pytest.raises(ValidationError):
        parse_form({"matrix": [[1]], "extra": 1})
    with pytest.raises(ValidationError):
        parse_form({"label": 3, "matrix": [[1]]})
    with pytest.raises(ValidationError):
        parse_form({"label": "x"})
    with pytest.raises(ValidationError):
        parse_form([[1]])


def test_form_json_roundtrip():
    form = parse_form({"label": "H", "matrix": [[0, 1], [1, 0]]})
    again = parse_form(form_to_json(form))
    assert again == form
    unlabeled = parse_form({"matrix": [[1]]})
    assert "label" not in form_to_json(unlabeled)


def test_parse_problem_defaults_spin_from_parity():
    even = parse_problem({"form": {"matrix": [[0, 1], [1, 0]]},
                          "isometry": [[1, 0], [0, 1]]})
    assert even.spin is True
    odd = parse_problem({"form": {"matrix": [[1]]}, "isometry": [[1]]})
    assert odd.spin is False
    assert odd.n is None


def test_parse_problem_spin_contradiction():
    bad = {"form": {"matrix": [[1]]}, "isometry": [[1]], "spin": True}
    with pytest.raises(SpinMismatchError):
        parse_problem(bad)
    forced = parse_problem({**bad, "override_spin": True})
    assert forced.spin is True
    assert forced.override_spin


def test_parse_problem_strict_keys_and_required_fields():
    with pytest.raises(ValidationError):
        parse_problem({"form": {"matrix": [[1]]}})
    with pytest.raises(ValidationError):
        parse_problem({"form": {"matrix": [[1]]}, "isometry": [[1]],
                       "verbose": True})
    with pytest.raises(ValidationError):
        parse_problem({"form": {"matrix": [[1]]}, "isometry": [[1]],
                       "spin": "yes"})


def test_parse_problem_accepts_n_as_string():
    prob = parse_problem({"form": {"matrix": [[1]]}, "isometry": [[-1]],
                          "n": "3"})
    assert prob.n == 3


def test_echo_carries_resolved_hypotheses():
    prob = parse_problem({"form": {"matrix": [[1]]}, "isometry": [[-1]], "n": 2})
    echo = prob.echo()
    assert echo["spin"] is False
    assert echo["n"] == 2
    assert "override_spin" not in echo
    # echo re-parses to the same problem
    assert parse_problem(echo) == prob


def test_loads_strict_wraps_syntax_errors():
    with pytest.raises(InputError):
        loads_strict("{nope")
    assert loads_strict('{"a": 1}') == {"a": 1}


def test_matrix_to_json_plain_ints():
    out = matrix_to_json(((1, 0), (0, 1)))
    assert out == [[1, 0], [0, 1]]
    assert all(isinstance(x, int) for row in out for x in row)
