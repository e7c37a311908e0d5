"""Test suite for ``instcone.errors``."""

import pytest

from instcone import errors
from instcone.knot import ValidationReport, Check


@pytest.mark.parametrize(
    ("exc", "code"),
    (
        (errors.ParseError("not json"), errors.EXIT_IO_ERROR),
        (errors.SchemaError("/genus", "expected an integer"), errors.EXIT_IO_ERROR),
        (FileNotFoundError("missing.json"), errors.EXIT_IO_ERROR),
        (errors.TauZero("tau = 0"), errors.EXIT_FAILURE),
        (errors.PreconditionFailed("q = 2"), errors.EXIT_FAILURE),
        (errors.WindowUnstable("moved"), errors.EXIT_FAILURE),
        (RuntimeError("unexpected"), errors.EXIT_FAILURE),
    ),
)
def test_exit_code_for(exc, code):
    """Test that exceptions map onto the documented exit codes."""
    assert errors.exit_code_for(exc) == code


def test_schema_error_pointer():
    """Test that a schema error keeps the JSON pointer apart."""
    exc = errors.SchemaError("/generators/2/alex2", "expected an integer")
    assert exc.pointer == "/generators/2/alex2"
    assert exc.message == "expected an integer"
    assert str(exc) == "/generators/2/alex2: expected an integer"


def test_schema_error_root_pointer():
    """Test that an empty pointer is rendered as the document root."""
    assert str(errors.SchemaError("", "expected an object")) == "/: expected an object"


def test_validation_error_lists_failures():
    """Test that a validation error names every failed check."""
    report = ValidationReport(
        "bad",
        [
            Check("d_plus squares to zero", True),
            Check("d_plus raises alex2", False, ("b -> a",)),
            Check("alex2 lattice", False, ("c",)),
        ],
    )
    exc = errors.ValidationError(report)
    assert exc.report is report
    assert str(exc) == (
        "knot data 'bad' failed validation: d_plus raises alex2, alex2 lattice"
    )
