"""Knot complex data: schema, validation, serialization and involutions.

A knot is described by its instanton knot homology as a graded space
together with two differentials: ``d_plus`` raises the Alexander grading
and ``d_minus`` lowers it. The JSON form looks like this:

.. code-block:: json

    {"name": "trefoil-neg", "genus": 1, "q": 1, "q0": 0,
     "generators": [{"id": "x1", "alex2": 2, "z2": 0}],
     "d_plus": [{"from": "x2", "to": "x1", "coeff": "1"}],
     "d_minus": []}
"""

import json
import logging
from typing import NamedTuple

from . import linalg
from .complexes import Complex, GradedMap, GradedSpace, homology_dims
from .errors import InvalidComplex, ParseError, SchemaError, ValidationError


logger = logging.getLogger(__name__)


class KnotComplexData:
    """Graded knot homology with the differentials ``d_plus`` and ``d_minus``."""

    def __init__(self, name, genus, space, d_plus, d_minus, q=1, q0=0):
        """Initialize.

        Args:
            name (str): display name
            genus (int): genus of the knot, nonnegative
            space (GradedSpace): the knot homology
            d_plus (GradedMap): differential raising the Alexander grading
            d_minus (GradedMap): differential lowering the Alexander grading
            q (int): meridional multiplicity of the framing basis
            q0 (int): meridional part of the longitude

        Raises:
            ValueError: on wrongly typed parameters or foreign maps

        """
        if genus < 0:
            raise ValueError("genus must be nonnegative")
        if q < 1:
            raise ValueError("q must be positive")
        for graded_map in (d_plus, d_minus):
            if graded_map.source != space or graded_map.target != space:
                raise ValueError("differentials must be endomorphisms of space")
        self.name = name
        self.genus = genus
        self.q = q
        self.q0 = q0
        self.space = space
        self.d_plus = d_plus
        self.d_minus = d_minus

    @classmethod
    def from_generators(
        cls,
        name,
        genus,
        generators,
        d_plus=(),
        d_minus=(),
        q=1,
        q0=0,
    ):
        """Build from ``(id, alex2, z2)`` triples and entry triplets."""
        space = GradedSpace(
            (label, (alex2, z2)) for label, alex2, z2 in generators
        )
        return cls(
            name,
            genus,
            space,
            GradedMap(space, space, d_plus),
            GradedMap(space, space, d_minus),
            q=q,
            q0=q0,
        )

    def _key(self):
        return self.genus, self.q, self.q0, self.space, self.d_plus, self.d_minus

    def same_data(self, other):
        """Compare everything except the name."""
        return self._key() == other._key()

    def __eq__(self, other):
        """Compare names and data."""
        if not isinstance(other, KnotComplexData):
            return NotImplemented
        return self.name == other.name and self.same_data(other)

    def __hash__(self):
        """Hash names and data."""
        return hash((self.name,) + self._key())

    def __repr__(self):
        """Render the name and size."""
        return "<KnotComplexData {name!r}: genus {genus}, {n} generators>".format(
            name=self.name,
            genus=self.genus,
            n=len(self.space),
        )

    def renamed(self, name):
        """Return a copy carrying another name."""
        return KnotComplexData(
            name,
            self.genus,
            self.space,
            self.d_plus,
            self.d_minus,
            q=self.q,
            q0=self.q0,
        )

    def plus_complex(self):
        """Return ``(space, d_plus)`` as a complex."""
        return Complex(self.space, self.d_plus)

    def minus_complex(self):
        """Return ``(space, d_minus)`` as a complex."""
        return Complex(self.space, self.d_minus)

    def mu_bounds2(self):
        """Return doubled ``(max, min)`` Alexander gradings allowed by the genus."""
        top = self.q - 1 + 2 * self.genus
        return top, -top


class Check(NamedTuple):
    """Outcome of one validation rule."""

    name: str
    passed: bool
    offenders: tuple = ()


class ValidationReport:
    """Every validation rule applied to one knot, failed or not."""

    def __init__(self, name, checks, class_gradings=None):
        """Initialize."""
        self.name = name
        self.checks = tuple(checks)
        self.class_gradings = dict(class_gradings or {})

    def __iter__(self):
        """Iterate over :py:class:`Check` results."""
        return iter(self.checks)

    def __getitem__(self, check_name):
        """Look a check up by name."""
        for check in self.checks:
            if check.name == check_name:
                return check
        raise KeyError(check_name)

    @property
    def ok(self):
        """Whether every check passed."""
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        """Checks that did not pass."""
        return [check for check in self.checks if not check.passed]

    def as_dict(self):
        """Return a JSON-ready summary."""
        return {
            "name": self.name,
            "ok": self.ok,
            "checks": [
                {
                    "check": check.name,
                    "passed": check.passed,
                    "offenders": list(check.offenders),
                }
                for check in self.checks
            ],
        }


def _entry_names(entries):
    return tuple("{src} -> {tgt}".format(src=src, tgt=tgt) for src, tgt, _ in entries)


def _shift_offenders(knot, graded_map, sign):
    step = 2 * knot.q
    offenders = []
    for src, tgt, coeff in graded_map.entries:
        shift = sign * (
            knot.space.grading(tgt).alex2 - knot.space.grading(src).alex2
        )
        if shift <= 0 or shift % step:
            offenders.append((src, tgt, coeff))
    return _entry_names(offenders)


def _unit_homology(knot, kind, complex_factory, square_ok):
    name = "unit {kind}-homology".format(kind=kind)
    if not square_ok:
        return Check(name, False, ("not a complex",)), None
    try:
        dims = homology_dims(complex_factory())
    except InvalidComplex as exc:
        return Check(name, False, (str(exc),)), None
    if dims.total != 1:
        return Check(name, False, ("dimension {total}".format(total=dims.total),)), None
    return Check(name, True), next(iter(dims))


def validate(knot):
    """Check every invariant of ``knot`` and report all violations.

    >>> from instcone.catalog import trefoil_neg
    >>> validate(trefoil_neg()).ok
    True
    """
    space = knot.space
    checks = []
    square_ok = {}
    for kind, graded_map in (("d_plus", knot.d_plus), ("d_minus", knot.d_minus)):
        square = graded_map @ graded_map
        square_ok[kind] = not square
        checks.append(
            Check(
                "{kind} squares to zero".format(kind=kind),
                not square,
                _entry_names(square.entries),
            ),
        )

    raising = _shift_offenders(knot, knot.d_plus, 1)
    checks.append(Check("d_plus raises alex2", not raising, raising))
    lowering = _shift_offenders(knot, knot.d_minus, -1)
    checks.append(Check("d_minus lowers alex2", not lowering, lowering))

    same_parity = _entry_names(
        entry
        for graded_map in (knot.d_plus, knot.d_minus)
        for entry in graded_map.entries
        if space.grading(entry[0]).h == space.grading(entry[1]).h
    )
    checks.append(Check("differentials flip z2", not same_parity, same_parity))
    for kind in ("d_plus", "d_minus"):
        square_ok[kind] = square_ok[kind] and not same_parity

    top, bottom = knot.mu_bounds2()
    outside = tuple(
        label for label, grading in space if not bottom <= grading.alex2 <= top
    )
    checks.append(Check("alex2 within genus bounds", not outside, outside))
    off_lattice = tuple(
        label for label, grading in space if (grading.alex2 - top) % 2
    )
    checks.append(Check("alex2 lattice", not off_lattice, off_lattice))

    class_gradings = {}
    for kind, factory in (
        ("d_plus", knot.plus_complex),
        ("d_minus", knot.minus_complex),
    ):
        check, grading = _unit_homology(knot, kind, factory, square_ok[kind])
        checks.append(check)
        if grading is not None:
            class_gradings[kind] = grading

    report = ValidationReport(knot.name, checks, class_gradings)
    if not report.ok:
        logger.debug(
            "knot %r fails: %s",
            knot.name,
            ", ".join(check.name for check in report.failures),
        )
    return report


def ensure_valid(knot):
    """Return ``knot`` unchanged, or raise if it fails validation.

    Raises:
        ValidationError: bundling the full report

    """
    report = validate(knot)
    if not report.ok:
        raise ValidationError(report)
    return knot


def _rebuilt(space, graded_map, transpose=False):
    entries = graded_map.entries
    if transpose:
        entries = ((tgt, src, coeff) for src, tgt, coeff in entries)
    return GradedMap(space, space, entries)


def reverse(knot, name=None):
    """Negate the Alexander grading and swap ``d_plus`` with ``d_minus``."""
    space = GradedSpace(
        (label, (-grading.alex2, grading.h)) for label, grading in knot.space
    )
    return KnotComplexData(
        name or "{name}-reverse".format(name=knot.name),
        knot.genus,
        space,
        _rebuilt(space, knot.d_minus),
        _rebuilt(space, knot.d_plus),
        q=knot.q,
        q0=knot.q0,
    )


def dual(knot, name=None):
    """Transpose both differentials, swapping their roles.

    Gradings are kept: the transpose of ``d_minus`` raises them.
    """
    return KnotComplexData(
        name or "{name}-dual".format(name=knot.name),
        knot.genus,
        knot.space,
        _rebuilt(knot.space, knot.d_minus, transpose=True),
        _rebuilt(knot.space, knot.d_plus, transpose=True),
        q=knot.q,
        q0=knot.q0,
    )


def mirror(knot, name=None):
    """Return the dual complex with negated gradings.

    Net effect: every Alexander grading is negated and each differential
    is replaced by its own transpose.
    """
    return reverse(
        dual(knot),
        name=name or "{name}-mirror".format(name=knot.name),
    )


_TOP_LEVEL_KEYS = ("name", "genus", "q", "q0", "generators", "d_plus", "d_minus")


def _require(condition, pointer, message):
    if not condition:
        raise SchemaError(pointer, message)


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _read_generators(document):
    generators = document.get("generators")
    _require(isinstance(generators, list), "/generators", "expected a list")
    seen = set()
    parsed = []
    for pos, item in enumerate(generators):
        pointer = "/generators/{pos}".format(pos=pos)
        _require(isinstance(item, dict), pointer, "expected an object")
        label = item.get("id")
        _require(isinstance(label, str), pointer + "/id", "expected a string")
        _require(label not in seen, pointer + "/id", "duplicate id")
        seen.add(label)
        alex2 = item.get("alex2")
        _require(_is_int(alex2), pointer + "/alex2", "expected an integer")
        z2 = item.get("z2")
        _require(z2 in (0, 1) and _is_int(z2), pointer + "/z2", "expected 0 or 1")
        parsed.append((label, alex2, z2))
    return parsed, seen


def _read_entries(document, key, known):
    entries = document.get(key, [])
    _require(isinstance(entries, list), "/" + key, "expected a list")
    parsed = []
    for pos, item in enumerate(entries):
        pointer = "/{key}/{pos}".format(key=key, pos=pos)
        _require(isinstance(item, dict), pointer, "expected an object")
        ends = []
        for end in ("from", "to"):
            label = item.get(end)
            _require(isinstance(label, str), pointer + "/" + end, "expected a string")
            _require(
                label in known,
                pointer + "/" + end,
                "unknown generator {label!r}".format(label=label),
            )
            ends.append(label)
        coeff = item.get("coeff")
        _require(isinstance(coeff, str), pointer + "/coeff", "expected a 'p/q' string")
        try:
            value = linalg.parse_rational(coeff)
        except ValueError as exc:
            raise SchemaError(pointer + "/coeff", str(exc)) from None
        parsed.append((ends[0], ends[1], value))
    return parsed


def from_document(document):
    """Build knot data from a decoded JSON document.

    Raises:
        SchemaError: pointing at the first value that breaks the schema

    """
    _require(isinstance(document, dict), "", "expected an object")
    for key in document:
        _require(key in _TOP_LEVEL_KEYS, "/" + key, "unknown key")
    name = document.get("name")
    _require(isinstance(name, str), "/name", "expected a string")
    genus = document.get("genus")
    _require(_is_int(genus) and genus >= 0, "/genus", "expected an integer >= 0")
    q = document.get("q", 1)
    _require(_is_int(q) and q >= 1, "/q", "expected an integer >= 1")
    q0 = document.get("q0", 0)
    _require(_is_int(q0), "/q0", "expected an integer")
    generators, known = _read_generators(document)
    return KnotComplexData.from_generators(
        name,
        genus,
        generators,
        d_plus=_read_entries(document, "d_plus", known),
        d_minus=_read_entries(document, "d_minus", known),
        q=q,
        q0=q0,
    )


def to_document(knot):
    """Return the JSON-ready document of ``knot``."""

    def entries(graded_map):
        return [
            {"from": src, "to": tgt, "coeff": linalg.format_rational(coeff)}
            for src, tgt, coeff in graded_map.entries
        ]

    return {
        "name": knot.name,
        "genus": knot.genus,
        "q": knot.q,
        "q0": knot.q0,
        "generators": [
            {"id": label, "alex2": grading.alex2, "z2": grading.h}
            for label, grading in knot.space
        ],
        "d_plus": entries(knot.d_plus),
        "d_minus": entries(knot.d_minus),
    }


def loads(text, validate_data=True):
    """Parse knot data from JSON text.

    Raises:
        ParseError: if ``text`` is not JSON
        SchemaError: if the document breaks the schema
        ValidationError: if ``validate_data`` and an invariant fails

    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            "invalid JSON at line {line}, column {col}: {msg}".format(
                line=exc.lineno,
                col=exc.colno,
                msg=exc.msg,
            ),
        ) from None
    except RecursionError:
        raise ParseError("JSON nested too deeply") from None
    knot = from_document(document)
    return ensure_valid(knot) if validate_data else knot


def dumps(knot):
    """Serialize ``knot`` to JSON text ending in a newline."""
    return json.dumps(to_document(knot), indent=2) + "\n"


def load(path, validate_data=True):
    """Read knot data from the UTF-8 JSON file at ``path``.

    Raises:
        ParseError: if the file is not UTF-8 or not JSON

    """
    with open(path, encoding="utf-8") as stream:
        try:
            text = stream.read()
        except UnicodeDecodeError as exc:
            raise ParseError(
                "{path} is not UTF-8 text: {reason}".format(
                    path=path,
                    reason=exc.reason,
                ),
            ) from None
    return loads(text, validate_data=validate_data)


def save(knot, path):
    """Write ``knot`` as UTF-8 JSON to ``path``."""
    with open(path, "w", encoding="utf-8") as stream:
        stream.write(dumps(knot))
