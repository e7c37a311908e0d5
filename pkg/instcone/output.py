"""Rendering of command results as aligned tables, JSON or CSV.

Every command builds one :py:class:`OutputDocument`. Its rows feed the
table and CSV renderings under a fixed header; its payload is the JSON
document. Rationals are written as ``"p/q"`` and unknown values as
``indeterminate``.

.. spelling::

   csv
   json
"""

import csv
import io
import json
from fractions import Fraction

from . import linalg
from .surgery import is_indeterminate


FORMATS = ("table", "json", "csv")

COLUMNS = {
    "validate": ("check", "passed", "offenders"),
    "invariants": ("invariant", "value"),
    "surgery": ("slope", "grading", "dim"),
    "zero": ("grading", "dim"),
    "dual": ("m", "grading", "dim"),
    "table": ("s", "dim"),
    "check": ("check", "instance", "status", "detail"),
}


def render_value(value):
    """Render one table or CSV cell.

    >>> [render_value(v) for v in (Fraction(-3, 2), 4, None, True, ('a', 'b'))]
    ['-3/2', '4', '', 'true', 'a;b']
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return linalg.format_rational(value)
    if isinstance(value, (list, tuple)):
        return ";".join(map(render_value, value))
    if isinstance(value, dict):
        return json.dumps(json_safe(value), sort_keys=True)
    return str(value)


def json_safe(obj):
    """Convert rationals, markers and containers into plain JSON types.

    Integral rationals become ints, other rationals ``"p/q"`` strings.
    Mapping keys are always rendered as strings.

    >>> json_safe({Fraction(1, 2): [Fraction(4, 2)]})
    {'1/2': [2]}
    """
    if isinstance(obj, dict):
        return {
            render_value(key) if not isinstance(key, str) else key: json_safe(item)
            for key, item in obj.items()
        }
    if isinstance(obj, (list, tuple)):
        return [json_safe(item) for item in obj]
    if is_indeterminate(obj):
        return str(obj)
    if isinstance(obj, Fraction):
        if obj.denominator == 1:
            return obj.numerator
        return linalg.format_rational(obj)
    return obj


class OutputDocument:
    """Result of one command, renderable in every supported format."""

    def __init__(self, command, rows, payload):
        """Initialize.

        Args:
            command (str): subcommand name, selecting the CSV header
            rows (list): tuples matching :py:data:`COLUMNS` of ``command``
            payload (dict): the JSON document

        """
        self.command = command
        self.columns = COLUMNS[command]
        self.rows = [tuple(row) for row in rows]
        self.payload = payload

    def render(self, fmt="table"):
        """Return the document as text in format ``fmt``."""
        try:
            renderer = getattr(self, "_render_{fmt}".format(fmt=fmt))
        except AttributeError:
            raise ValueError(
                "unknown output format {fmt!r}".format(fmt=fmt),
            ) from None
        return renderer()

    def _cells(self):
        return [[render_value(value) for value in row] for row in self.rows]

    def _render_table(self):
        cells = [list(self.columns)] + self._cells()
        widths = [max(map(len, column)) for column in zip(*cells)]
        lines = [
            "  ".join(
                cell.ljust(width) for cell, width in zip(row, widths)
            ).rstrip()
            for row in cells
        ]
        return "\n".join(lines) + "\n"

    def _render_json(self):
        return json.dumps(json_safe(self.payload), indent=2) + "\n"

    def _render_csv(self):
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self._cells())
        return buffer.getvalue()


def validation_document(report):
    """Build the ``validate`` document from a validation report."""
    rows = [
        (check.name, check.passed, check.offenders) for check in report
    ]
    return OutputDocument("validate", rows, report.as_dict())


def invariants_document(report):
    """Build the ``invariants`` document from an invariant report.

    Invariants that are not defined for the knot are left out.
    """
    payload = {
        name: value for name, value in report.as_dict().items()
        if value is not None
    }
    rows = list(payload.items())
    return OutputDocument("invariants", rows, payload)


def surgery_document(report):
    """Build the ``surgery`` document from a surgery report.

    Slope 0 gives one row per grading; other slopes leave the grading
    column empty.
    """
    rows = []
    entries = []
    for row in report:
        if isinstance(row.dim, dict):
            rows.extend((0, s, dim) for s, dim in row.dim.items())
            entries.append({"slope": 0, "dims": row.dim})
        else:
            rows.append((row.slope, None, row.dim))
            entries.append({"slope": row.slope, "dim": row.dim})
    payload = {"knot": report.name, "rows": entries}
    payload.update(report.metadata())
    return OutputDocument("surgery", rows, payload)


def zero_document(name, dims, total):
    """Build the ``zero`` document from per grading dimensions."""
    return OutputDocument(
        "zero",
        list(dims.items()),
        {"knot": name, "dims": dims, "total": total},
    )


def dual_document(name, m, table):
    """Build the ``dual`` document from a dual knot table."""
    return OutputDocument(
        "dual",
        [(m, j, dim) for j, dim in table.items()],
        {"knot": name, "m": m, "dims": table},
    )


def table_document(name, table):
    """Build the ``table`` document of ``dim H(A(s))`` values."""
    return OutputDocument(
        "table",
        list(table.items()),
        {"knot": name, "dims": table},
    )


def check_document(name, seed, results):
    """Build the ``check`` document from property suite results."""
    entries = [result.as_dict() for result in results]
    rows = [
        (entry["check"], entry["instance"], entry["status"], entry["detail"] or None)
        for entry in entries
    ]
    return OutputDocument(
        "check",
        rows,
        {"knot": name, "seed": seed, "results": entries},
    )
