"""Tests for the surgery cones and dimension formulas."""

from fractions import Fraction

import pytest

from instcone import catalog, surgery
from instcone.bent import grading_bounds
from instcone.errors import PreconditionFailed, TauZero, WindowUnstable
from instcone.knot import KnotComplexData, mirror


NONZERO_SLOPES = [n for n in surgery.SLOPE_SWEEP if n]


@pytest.mark.parametrize("name", ("unknot", "box"))
@pytest.mark.parametrize("n", NONZERO_SLOPES)
def test_unknot_like_surgeries(name, n):
    """Test that surgeries on unknotted data have dimension ``|n|``."""
    assert surgery.integer_surgery_dim(catalog.get(name), n) == abs(n)


@pytest.mark.parametrize(
    ("n", "dim"),
    (
        (-1, 1),
        (-2, 2),
        (1, 3),
        (2, 4),
        (-8, 8),
        (8, 10),
    ),
)
def test_negative_trefoil_surgeries(n, dim):
    """Test dimensions ``1 + |n + 1|`` for the left-handed trefoil."""
    assert surgery.integer_surgery_dim(catalog.trefoil_neg(), n) == dim


@pytest.mark.parametrize("n", NONZERO_SLOPES)
def test_positive_trefoil_surgeries(n):
    """Test dimensions ``1 + |n - 1|`` for the right-handed trefoil."""
    assert surgery.integer_surgery_dim(catalog.trefoil_pos(), n) == 1 + abs(n - 1)


@pytest.mark.parametrize("n", (-3, -1, 2, 5))
def test_mirror_flips_slopes(catalog_knot, n):
    """Test ``dim(K, n) == dim(mirror(K), -n)``."""
    assert surgery.integer_surgery_dim(catalog_knot, n) == (
        surgery.integer_surgery_dim(mirror(catalog_knot), -n)
    )


@pytest.mark.parametrize("n", (-2, 1, 3))
def test_mirror_flips_slopes_on_random_knots(random_knot_data, n):
    """Test ``dim(K, n) == dim(mirror(K), -n)`` on generated data."""
    assert surgery.integer_surgery_dim(random_knot_data, n) == (
        surgery.integer_surgery_dim(mirror(random_knot_data), -n)
    )


def test_slope_zero_is_refused():
    """Test that slope 0 goes through the zero surgery helpers."""
    with pytest.raises(PreconditionFailed, match="zero surgery"):
        surgery.integer_surgery_dim(catalog.unknot(), 0)


def test_integer_surgery_needs_q1():
    """Test the framing precondition of the cone."""
    knot = KnotComplexData.from_generators("q2", 0, [("u", 1, 0)], q=2)
    with pytest.raises(PreconditionFailed, match="q = 1"):
        surgery.integer_surgery_dim(knot, 3)


def test_cone_assembly_shape():
    """Test the window and block layout of the cone for the unknot."""
    assembly = surgery.ConeAssembly(catalog.unknot(), m=-2, halfwidth=4)
    assert assembly.offset == -2
    assert list(assembly.sources) == list(range(-4, 5))
    assert list(assembly.targets) == list(range(-6, 5))
    assert assembly.source_dim == 9
    assert assembly.target_dim == 11
    assert assembly.rank == 9
    assert assembly.dim == 2
    assert assembly.blocks(0) == {0: [1], -2: [1]}
    assert assembly.blocks(1) == {1: [1]}


def test_window_halfwidth():
    """Test the default window size ``g + |m q - q0| + 2``."""
    assert surgery.window_halfwidth(catalog.trefoil_neg(), -3) == 6
    assert surgery.window_halfwidth(catalog.unknot(), 5) == 7


def test_unstable_window_is_reported(mocker):
    """Test that a result moving with the window raises."""
    dims = iter((5, 6))
    mocker.patch.object(
        surgery.ConeAssembly,
        "dim",
        new_callable=mocker.PropertyMock,
        side_effect=lambda: next(dims),
    )
    with pytest.raises(WindowUnstable, match="gives 5"):
        surgery.integer_surgery_dim(catalog.unknot(), 2)


def test_rescaled_blocks_keep_dimensions():
    """Test that other identifications between the targets agree."""
    knot = catalog.trefoil_neg()
    scalars = {("xi", s): Fraction(-7, 3) for s in range(-8, 9)}
    scalars.update({("pi-", 0): 5, ("pi+", -1): Fraction(1, 2)})
    for n in (-3, -1, 2):
        assert surgery.integer_surgery_dim(knot, n, scalars=scalars) == (
            surgery.integer_surgery_dim(knot, n)
        )


def test_zero_scalar_is_refused():
    """Test that block scalars must be nonzero."""
    with pytest.raises(ValueError, match="zero"):
        surgery.integer_surgery_dim(
            catalog.trefoil_neg(),
            2,
            scalars={("xi", 0): 0},
        )


@pytest.mark.parametrize(
    ("name", "dims"),
    (
        ("trefoil-neg", {0: 2}),
        ("trefoil-pos", {0: 2}),
        ("unknot", {0: surgery.INDETERMINATE}),
        ("box", {0: surgery.INDETERMINATE}),
    ),
)
def test_zero_surgery_dims(name, dims):
    """Test per grading zero surgery dimensions and the guard at 0."""
    assert surgery.zero_surgery_dims(catalog.get(name)) == dims


def test_zero_surgery_total():
    """Test the total zero surgery dimension."""
    assert surgery.zero_surgery_total(catalog.trefoil_neg()) == 2
    assert surgery.is_indeterminate(surgery.zero_surgery_total(catalog.box()))


def test_zero_surgery_total_reuses_dims(mocker):
    """Test that given dimensions are summed without recomputing them."""
    knot = catalog.trefoil_pos()
    dims = surgery.zero_surgery_dims(knot)
    spy = mocker.spy(surgery, "zero_surgery_dims")
    assert surgery.zero_surgery_total(knot, dims) == 2
    assert surgery.zero_surgery_total(knot, {0: 1, 1: 4}) == 5
    assert spy.call_count == 0


def test_indeterminate_is_logged(caplog):
    """Test that an indeterminate grading leaves a warning."""
    surgery.zero_surgery_dims(catalog.unknot())
    assert "indeterminate" in caplog.text


def test_indeterminate_marker():
    """Test the rendering of the marker."""
    assert str(surgery.INDETERMINATE) == "indeterminate"
    assert repr(surgery.INDETERMINATE) == "INDETERMINATE"
    assert surgery.is_indeterminate(surgery.INDETERMINATE)
    assert not surgery.is_indeterminate(0)


@pytest.mark.parametrize(
    ("name", "sharp", "r0"),
    (
        ("trefoil-neg", -1, 1),
        ("trefoil-pos", 1, 1),
    ),
)
def test_nu_sharp_and_r0(name, sharp, r0):
    """Test the invariants behind the affine law."""
    knot = catalog.get(name)
    assert surgery.nu_sharp(knot) == sharp
    assert surgery.r0(knot) == r0


@pytest.mark.parametrize("func", (surgery.nu_sharp, surgery.r0))
def test_tau_zero(func):
    """Test that nu sharp and r0 need a nonzero tau."""
    with pytest.raises(TauZero, match="tau = 0"):
        func(catalog.unknot())


@pytest.mark.parametrize("n", NONZERO_SLOPES)
def test_rational_formula_matches_integers(n):
    """Test the rational formula at integer slopes."""
    for knot in (catalog.trefoil_neg(), catalog.trefoil_pos()):
        assert surgery.rational_surgery_dim(knot, n, 1) == (
            surgery.integer_surgery_dim(knot, n)
        )


@pytest.mark.parametrize(
    ("p", "q", "dim"),
    (
        (1, 2, 5),
        (-1, 2, 3),
        (3, 4, 11),
        (-5, 3, 5),
    ),
)
def test_rational_surgeries(p, q, dim):
    """Test ``q r0 + |p - q nu_sharp|`` on the left-handed trefoil."""
    assert surgery.rational_surgery_dim(catalog.trefoil_neg(), p, q) == dim


@pytest.mark.parametrize(("p", "q"), ((2, 4), (1, 0), (1, -2)))
def test_rational_slope_checks(p, q):
    """Test that slopes must be in lowest terms with positive denominator."""
    with pytest.raises(PreconditionFailed):
        surgery.rational_surgery_dim(catalog.trefoil_neg(), p, q)


@pytest.mark.parametrize("m", NONZERO_SLOPES)
def test_closed_form_matches_cone(m):
    """Test the closed case formulas against the cone."""
    for knot in (catalog.trefoil_neg(), catalog.trefoil_pos()):
        assert surgery.closed_form_case_dims(knot, m) == (
            surgery.integer_surgery_dim(knot, -m)
        )


def test_closed_form_preconditions():
    """Test the closed form refusals."""
    with pytest.raises(TauZero):
        surgery.closed_form_case_dims(catalog.unknot(), 1)
    with pytest.raises(PreconditionFailed):
        surgery.closed_form_case_dims(catalog.trefoil_neg(), 0)


@pytest.mark.parametrize(
    ("m", "table"),
    (
        (5, {-2: 1, -1: 1, 0: 1, 1: 1, 2: 1}),
        (1, {0: 1}),
        (-3, {-1: 1, 0: 1, 1: 1}),
    ),
)
def test_dual_knot_table_of_unknot(m, table):
    """Test the dual knot of unknot surgeries."""
    assert surgery.dual_knot_table(catalog.unknot(), m) == table


def test_dual_knot_outside_band():
    """Test that gradings beyond the extremes carry nothing."""
    knot = catalog.unknot()
    assert surgery.dual_knot_dim(knot, 5, -3) == 0
    assert surgery.dual_knot_dim(knot, 5, 3) == 0
    assert surgery.dual_knot_dim(knot, 5, 0, xi=Fraction(-2, 5)) == 1


def test_dual_knot_lattice():
    """Test that gradings off the dual lattice are refused."""
    with pytest.raises(PreconditionFailed, match="lattice"):
        surgery.dual_knot_dim(catalog.unknot(), 4, 0)
    assert list(surgery.dual_knot_gradings(catalog.unknot(), 4)) == [-3, -1, 1, 3]


@pytest.mark.parametrize("name", ("unknot", "trefoil-neg"))
def test_dual_knot_needs_nonzero_offset(name):
    """Test that ``m = 0`` is refused for meridional data."""
    knot = catalog.get(name)
    with pytest.raises(PreconditionFailed, match="m q - q0 nonzero"):
        surgery.dual_knot_table(knot, 0)
    with pytest.raises(PreconditionFailed, match="m q - q0 nonzero"):
        surgery.dual_knot_dim(knot, 0, 0)


@pytest.mark.parametrize("name", ("unknot", "trefoil-neg", "trefoil-pos", "box"))
def test_dual_knot_middle_band(name):
    """Test that the middle gradings carry one dimension for large ``m``."""
    knot = catalog.get(name)
    m = 2 * knot.genus + 3
    top, _bottom = grading_bounds(knot, m)
    band = m - 1 - 2 * knot.genus
    table = surgery.dual_knot_table(knot, m)
    for j, dim in table.items():
        if abs(2 * j) <= band:
            assert dim == 1, j
    assert max(table) == Fraction(top, 2)


@pytest.mark.parametrize(
    ("name", "table"),
    (
        ("trefoil-neg", {-1: 1, 0: 1, 1: 1}),
        ("trefoil-pos", {-1: 1, 0: 3, 1: 1}),
        ("unknot", {0: 1}),
        ("box", {-1: 1, 0: 1, 1: 1}),
    ),
)
def test_large_surgery_table(name, table):
    """Test ``dim H(A(s))`` for ``|s| <= g``."""
    assert surgery.large_surgery_table(catalog.get(name)) == table


@pytest.mark.parametrize("big", (3, 4, 7))
def test_large_surgery_matches_cone(catalog_knot, big):
    """Test the large surgery count against the cone."""
    assert surgery.large_surgery_dim(catalog_knot, big) == (
        surgery.integer_surgery_dim(catalog_knot, -big)
    )


def test_large_surgery_bound():
    """Test that ``N`` has to reach ``2g + 1``."""
    with pytest.raises(PreconditionFailed, match="2g"):
        surgery.large_surgery_dim(catalog.trefoil_neg(), 2)


def test_surgery_sweep():
    """Test a sweep across slope 0."""
    report = surgery.surgery_sweep(catalog.trefoil_neg(), range(-2, 3))
    assert [(row.slope, row.dim) for row in report] == [
        (-2, 2),
        (-1, 1),
        (0, {0: 2}),
        (1, 3),
        (2, 4),
    ]
    assert not report.indeterminate
    assert report.metadata() == {
        "windows": {-2: 5, -1: 4, 1: 4, 2: 5},
        "stability_probes": [3],
        "stable": True,
    }


def test_sweep_with_indeterminate_row():
    """Test that an indeterminate zero surgery marks the report."""
    report = surgery.surgery_sweep(catalog.box(), (1, 0, -1))
    assert [row.slope for row in report] == [-1, 0, 1]
    assert report.indeterminate
    assert report.rows[1].indeterminate
    assert not report.rows[0].indeterminate


@pytest.mark.parametrize(
    ("name", "expected"),
    (
        ("trefoil-neg", {"tau": -1, "nu": 0, "nu_sharp": -1, "r0": 1}),
        ("trefoil-pos", {"tau": 1, "nu": 1, "nu_sharp": 1, "r0": 1}),
        ("unknot", {"tau": 0, "nu": 1, "nu_sharp": None, "r0": None}),
    ),
)
def test_invariant_report(name, expected):
    """Test the collected invariants."""
    assert surgery.invariant_report(catalog.get(name)).as_dict() == expected


def test_invariant_report_halves():
    """Test that odd doubled values print as halves."""
    report = surgery.InvariantReport(tau2=-3)
    assert report.tau == Fraction(-3, 2)
    assert report.nu is None
    assert report.as_dict()["tau"] == "-3/2"
