"""Tests for the table, JSON and CSV renderings."""

import json
from fractions import Fraction

import pytest

from instcone import output
from instcone.knot import validate
from instcone.surgery import INDETERMINATE, invariant_report, surgery_sweep
from instcone.verify import CheckResult, PASS, SKIP


@pytest.mark.parametrize(
    ("value", "text"),
    (
        (None, ""),
        (False, "false"),
        (0, "0"),
        (Fraction(6, -4), "-3/2"),
        (INDETERMINATE, "indeterminate"),
        (("b -> a", "c"), "b -> a;c"),
        ({"reason": "tau = 0"}, '{"reason": "tau = 0"}'),
        ("pass", "pass"),
    ),
)
def test_render_value(value, text):
    """Test the rendering of single cells."""
    assert output.render_value(value) == text


def test_json_safe():
    """Test conversion of rationals, markers and keys."""
    assert output.json_safe(
        {Fraction(-1, 2): INDETERMINATE, 3: (Fraction(5, 1), Fraction(1, 3))},
    ) == {"-1/2": "indeterminate", "3": [5, "1/3"]}


def test_invariants_table(trefoil_neg_data):
    """Test the aligned table rendering."""
    document = output.invariants_document(invariant_report(trefoil_neg_data))
    assert document.render() == (
        "invariant  value\n"
        "tau        -1\n"
        "nu         0\n"
        "nu_sharp   -1\n"
        "r0         1\n"
    )


def test_undefined_invariants_are_left_out(box_data):
    """Test that nu sharp and r0 disappear when tau is zero."""
    document = output.invariants_document(invariant_report(box_data))
    assert json.loads(document.render("json")) == {"tau": 0, "nu": 1}
    assert [row[0] for row in document.rows] == ["tau", "nu"]


def test_surgery_csv(trefoil_neg_data):
    """Test that slope 0 expands to one row per grading."""
    document = output.surgery_document(surgery_sweep(trefoil_neg_data, (1, 0, -1)))
    assert document.render("csv") == (
        "slope,grading,dim\n"
        "-1,,1\n"
        "0,0,2\n"
        "1,,3\n"
    )


def test_surgery_json(trefoil_neg_data):
    """Test the JSON document with windows and probes."""
    document = output.surgery_document(surgery_sweep(trefoil_neg_data, (-1, 0, 1)))
    payload = json.loads(document.render("json"))
    assert payload["knot"] == "trefoil-neg"
    assert payload["rows"] == [
        {"slope": -1, "dim": 1},
        {"slope": 0, "dims": {"0": 2}},
        {"slope": 1, "dim": 3},
    ]
    assert set(payload["windows"]) == {"-1", "1"}
    assert payload["stability_probes"] == [3]
    assert payload["stable"] is True


def test_zero_document_marks_indeterminate(box_data):
    """Test that unknown dimensions render as ``indeterminate``."""
    document = output.zero_document(box_data.name, {0: INDETERMINATE}, INDETERMINATE)
    assert document.render("csv") == "grading,dim\n0,indeterminate\n"
    assert json.loads(document.render("json"))["total"] == "indeterminate"


def test_dual_document_halves():
    """Test half-integer gradings in the dual table."""
    table = {Fraction(-1, 2): 1, Fraction(1, 2): 2}
    document = output.dual_document("k", 4, table)
    assert document.render("csv") == "m,grading,dim\n4,-1/2,1\n4,1/2,2\n"
    assert json.loads(document.render("json"))["dims"] == {"-1/2": 1, "1/2": 2}


def test_validation_document(trefoil_neg_data):
    """Test the validation rows and the report document."""
    document = output.validation_document(validate(trefoil_neg_data))
    assert document.columns == ("check", "passed", "offenders")
    assert all(row[1] is True for row in document.rows)
    assert json.loads(document.render("json"))["ok"] is True


def test_check_document():
    """Test that an empty detail renders as an empty cell."""
    results = [
        CheckResult("cone-les", "unknot seed=0", PASS),
        CheckResult("affine-law", "unknot seed=0", SKIP, {"reason": "tau = 0"}),
    ]
    document = output.check_document("unknot", 0, results)
    lines = document.render("csv").splitlines()
    assert lines[0] == "check,instance,status,detail"
    assert lines[1] == "cone-les,unknot seed=0,pass,"
    assert lines[2] == 'affine-law,unknot seed=0,skip,"{""reason"": ""tau = 0""}"'
    payload = json.loads(document.render("json"))
    assert payload["seed"] == 0
    assert payload["results"][1]["detail"] == {"reason": "tau = 0"}


def test_unknown_format():
    """Test that only the supported formats render."""
    document = output.table_document("unknot", {0: 1})
    assert document.render("table") == "s  dim\n0  1\n"
    with pytest.raises(ValueError, match="xml"):
        document.render("xml")
