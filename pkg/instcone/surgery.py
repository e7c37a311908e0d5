"""Surgery mapping cones and the dimension formulas built on them.

Slopes are the usual surgery slopes ``n`` on the three-sphere. The cone
is assembled for ``m = -n``; reversing orientation leaves dimensions
alone. Each homology group ``H(B-(t))`` is one dimensional and the
identification between them is the scalar one in the chosen bases.

.. spelling::

   indeterminate
   subcomplex
"""

import logging
import math
from fractions import Fraction
from typing import NamedTuple

from more_itertools import always_iterable

from . import linalg
from .bent import family, grading_bounds, nu2, require_q1, tau2
from .errors import ConventionMismatch, PreconditionFailed, TauZero, WindowUnstable
from .knot import mirror


logger = logging.getLogger(__name__)

WINDOW_MARGIN = 2
"""Extra gradings kept on each side of the truncated cone."""

STABILITY_PROBES = (3,)
"""Window enlargements every integer surgery result is rechecked with."""

SLOPE_SWEEP = range(-8, 9)
"""Slopes covered by default sweeps and property checks."""


class _Indeterminate:
    """Marker for results that the scalar ambiguity leaves undetermined."""

    _instance = None

    def __new__(cls):
        """Return the single instance."""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        """Render as ``INDETERMINATE``."""
        return "INDETERMINATE"

    def __str__(self):
        """Render as ``indeterminate``."""
        return "indeterminate"


INDETERMINATE = _Indeterminate()


def is_indeterminate(value):
    """Tell whether ``value`` is the :py:data:`INDETERMINATE` marker."""
    return value is INDETERMINATE


def _scalar(scalars, kind, s):
    if not scalars:
        return Fraction(1)
    value = Fraction(scalars.get((kind, s), 1))
    if not value:
        raise ValueError(
            "scalar {kind} at {s} is zero".format(kind=kind, s=s),
        )
    return value


def _row(homology_map, scale):
    """Return the single row of a map into a one dimensional space."""
    rows, _cols = homology_map.shape
    if rows != 1:
        raise ConventionMismatch(
            "expected a one dimensional target, got dimension {rows}".format(
                rows=rows,
            ),
        )
    return [scale * value for value in homology_map.matrix[0]]


def shift(knot, m):
    """Return the grading offset ``m q - q0`` between the two cone blocks."""
    return m * knot.q - knot.q0


def window_halfwidth(knot, m):
    """Return the default halfwidth of the truncated cone for ``m``."""
    return knot.genus + abs(shift(knot, m)) + WINDOW_MARGIN


class ConeAssembly:
    """The truncated mapping cone of ``pi- + Xi o pi+`` for one slope.

    Sources are ``H(A(s))`` for ``|s| <= halfwidth``. Targets are
    ``H(B-(t))`` for the ``t`` not cancelled against a source outside the
    window. ``A(s)`` maps to ``B-(s)`` by ``pi-(s)`` and to ``B-(s + m q -
    q0)`` through ``pi+(s)``.
    """

    def __init__(self, knot, m, halfwidth, scalars=None):
        """Initialize.

        Args:
            knot (KnotComplexData): knot data with ``q = 1``
            m (int): the negated surgery slope
            halfwidth (int): how many gradings to keep on each side
            scalars (Mapping): optional nonzero factors keyed by
                ``("xi" | "pi-" | "pi+", s)``; missing keys mean 1

        Raises:
            PreconditionFailed: for ``q != 1`` or a vanishing offset

        """
        require_q1(knot, "integer surgery")
        offset = shift(knot, m)
        if not offset:
            raise PreconditionFailed("the block offset m q - q0 must be nonzero")
        self.knot = knot
        self.m = m
        self.offset = offset
        self.halfwidth = halfwidth
        self.scalars = scalars
        self.sources = range(-halfwidth, halfwidth + 1)
        self.targets = range(offset - halfwidth, halfwidth + 1)
        self._matrix = None

    def blocks(self, s):
        """Return ``{t: row}`` for the nonzero blocks leaving ``H(A(s))``."""
        fam = family(self.knot)
        found = {}
        for t, kind, sign in (
            (s, "pi-", -1),
            (s + self.offset, "pi+", 1),
        ):
            if t not in self.targets:
                continue
            scale = _scalar(self.scalars, kind, s)
            if sign > 0:
                scale *= _scalar(self.scalars, "xi", s)
            row = _row(fam.pi(sign, 2 * s), scale)
            if any(row):
                previous = found.get(t)
                found[t] = (
                    row
                    if previous is None
                    else [a + b for a, b in zip(previous, row)]
                )
        return found

    def matrix(self):
        """Return the dense matrix of the assembled map, one row per target."""
        if self._matrix is None:
            fam = family(self.knot)
            rows = {t: [] for t in self.targets}
            for s in self.sources:
                width = fam.A(2 * s).homology().dim
                blocks = self.blocks(s)
                for t, row in rows.items():
                    row.extend(blocks.get(t, [Fraction(0)] * width))
            self._matrix = [rows[t] for t in self.targets]
        return self._matrix

    @property
    def source_dim(self):
        """Total dimension of the sources."""
        fam = family(self.knot)
        return sum(fam.A(2 * s).homology().dim for s in self.sources)

    @property
    def target_dim(self):
        """Total dimension of the targets."""
        return len(self.targets)

    @property
    def rank(self):
        """Rank of the assembled map."""
        return linalg.rank(self.matrix())

    @property
    def dim(self):
        """Dimension of the homology of the cone."""
        return self.source_dim + self.target_dim - 2 * self.rank


def integer_surgery_dim(knot, n, probes=STABILITY_PROBES, scalars=None):
    """Return the dimension for the integer surgery slope ``n``.

    Args:
        knot (KnotComplexData): valid knot data with ``q = 1``
        n (int): nonzero surgery slope
        probes (iterable): window enlargements to recheck the result with
        scalars (Mapping): block factors, see :py:class:`ConeAssembly`

    Raises:
        PreconditionFailed: for ``n = 0`` or ``q != 1``
        WindowUnstable: when a larger window changes the result

    >>> from instcone.catalog import trefoil_neg
    >>> integer_surgery_dim(trefoil_neg(), 1)
    3
    """
    if n == 0:
        raise PreconditionFailed("slope 0 is handled by zero surgery")
    m = -n
    halfwidth = window_halfwidth(knot, m)
    dim = ConeAssembly(knot, m, halfwidth, scalars).dim
    for extra in always_iterable(probes):
        probe = ConeAssembly(knot, m, halfwidth + extra, scalars).dim
        if probe != dim:
            raise WindowUnstable(
                "slope {n} on {name!r}: window {small} gives {dim}, window "
                "{large} gives {probe}".format(
                    n=n,
                    name=knot.name,
                    small=halfwidth,
                    dim=dim,
                    large=halfwidth + extra,
                    probe=probe,
                ),
            )
    logger.debug(
        "slope %d on %r: window %d, dimension %d",
        n,
        knot.name,
        halfwidth,
        dim,
    )
    return dim


def _zero_grading_dim(knot, s, scalars):
    fam = family(knot)
    size = fam.A(2 * s).homology().dim
    minus = _row(fam.pi(-1, 2 * s), _scalar(scalars, "pi-", s))
    plus = _row(
        fam.pi(1, 2 * s),
        _scalar(scalars, "pi+", s) * _scalar(scalars, "xi", s),
    )
    combined = [a + b for a, b in zip(minus, plus)]
    return size + 1 - 2 * linalg.rank([combined])


def _zero_at_zero(knot, scalars):
    tau_2 = tau2(knot)
    if tau_2 > 0:
        return _zero_at_zero(mirror(knot), scalars)
    fam = family(knot)
    if tau_2 < 0:
        return _zero_grading_dim(knot, 0, scalars)
    if nu2(knot) == 0:
        if fam.pi(-1, 0):
            raise ConventionMismatch(
                "{name!r} has tau = nu = 0 but a nonzero pi-(0)".format(
                    name=knot.name,
                ),
            )
        return _zero_grading_dim(knot, 0, scalars)
    logger.warning(
        "zero surgery on %r at grading 0 is indeterminate (tau = 0, nu = 1)",
        knot.name,
    )
    return INDETERMINATE


def zero_surgery_dims(knot, scalars=None):
    """Return the zero surgery dimensions per grading.

    Gradings ``s`` with ``0 < |s| < g`` are always computed. Grading 0 is
    computed when tau is nonzero, or when tau and nu both vanish, and is
    :py:data:`INDETERMINATE` otherwise.

    Raises:
        PreconditionFailed: for ``q != 1``

    >>> from instcone.catalog import trefoil_neg
    >>> zero_surgery_dims(trefoil_neg())
    {0: 2}
    """
    require_q1(knot, "zero surgery")
    dims = {}
    for s in range(1 - knot.genus, knot.genus):
        if s:
            dims[s] = _zero_grading_dim(knot, s, scalars)
    dims[0] = _zero_at_zero(knot, scalars)
    return dict(sorted(dims.items()))


def zero_surgery_total(knot, dims=None):
    """Return the total zero surgery dimension, or :py:data:`INDETERMINATE`.

    ``dims`` are the per grading dimensions when already computed.
    """
    if dims is None:
        dims = zero_surgery_dims(knot)
    if any(map(is_indeterminate, dims.values())):
        return INDETERMINATE
    return sum(dims.values())


def _require_tau(knot, what):
    tau_2 = tau2(knot)
    if not tau_2:
        raise TauZero(
            "{what} is undefined for {name!r}: tau = 0".format(
                what=what,
                name=knot.name,
            ),
        )
    return tau_2


def nu_sharp(knot):
    """Return ``2 nu - 1``.

    Raises:
        TauZero: when tau vanishes

    """
    require_q1(knot, "nu sharp")
    _require_tau(knot, "nu sharp")
    return nu2(knot) - 1


def r0(knot):
    """Return the dimension at the slope ``2 nu - 1``.

    Raises:
        TauZero: when tau vanishes

    """
    return integer_surgery_dim(knot, nu_sharp(knot))


def rational_surgery_dim(knot, p, q_slope):
    """Return ``q r0 + |p - q nu_sharp|`` for the slope ``p/q``.

    >>> from instcone.catalog import trefoil_neg
    >>> rational_surgery_dim(trefoil_neg(), 1, 2)
    5

    Raises:
        PreconditionFailed: for ``q < 1`` or ``gcd(p, q) != 1``
        TauZero: when tau vanishes

    """
    if q_slope < 1 or math.gcd(p, q_slope) != 1:
        raise PreconditionFailed(
            "slope {p}/{q} is not in lowest terms with q >= 1".format(
                p=p,
                q=q_slope,
            ),
        )
    sharp = nu_sharp(knot)
    return q_slope * r0(knot) + abs(p - q_slope * sharp)


def _require_offset(knot, m):
    if not shift(knot, m):
        raise PreconditionFailed(
            "the dual knot needs m q - q0 nonzero, got m = {m}".format(m=m),
        )


def dual_knot_gradings(knot, m):
    """Return the doubled gradings of the dual knot at ``m``, ascending."""
    _require_offset(knot, m)
    top, bottom = grading_bounds(knot, m)
    return range(bottom, top + 1, 2)


def dual_knot_dim(knot, m, j, xi=1):
    """Return the dimension of the dual knot homology at grading ``j``.

    The map ``H(B-(<=j-)) + H(B+(>=j+)) -> H(B-(j-))`` is assembled from
    the inclusions, with ``j+`` and ``j-`` shifted so that the extreme
    gradings of both sides line up.

    Args:
        knot (KnotComplexData): valid knot data, any ``q``
        m (int): the surgery parameter
        j (int or Fraction or str): Alexander grading of the dual knot
        xi (Fraction): nonzero scalar identifying ``H(B+)`` with ``H(B-)``

    Raises:
        PreconditionFailed: if ``m q - q0`` vanishes or ``j`` is off the
            grading lattice
        ConventionMismatch: if ``H(B+(j+))`` and ``H(B-(j-))`` differ in size

    >>> from instcone.catalog import unknot
    >>> [dual_knot_dim(unknot(), 5, j) for j in (-3, 0, 2, 3)]
    [0, 1, 1, 0]
    """
    _require_offset(knot, m)
    j2 = linalg.double(j)
    top_m, bottom_m = grading_bounds(knot, m)
    if (j2 - top_m) % 2:
        raise PreconditionFailed(
            "grading {j} is off the dual knot lattice".format(
                j=linalg.format_half(j2),
            ),
        )
    top, bottom = knot.mu_bounds2()
    plus2 = j2 - top_m + top
    minus2 = j2 - bottom_m + bottom
    fam = family(knot)
    lower = fam.inclusion(-1, minus2)
    upper = fam.inclusion(1, plus2)
    size = lower.shape[0]
    if upper.shape[0] != size:
        raise ConventionMismatch(
            "H(B+) at {plus} and H(B-) at {minus} differ in size".format(
                plus=linalg.format_half(plus2),
                minus=linalg.format_half(minus2),
            ),
        )
    xi = Fraction(xi)
    identified = linalg.matmul(
        [[xi if row == col else 0 for col in range(size)] for row in range(size)],
        upper.matrix,
    )
    combined = [
        list(left) + list(right) for left, right in zip(lower.matrix, identified)
    ]
    source = lower.shape[1] + upper.shape[1]
    rank = linalg.rank(combined)
    return (source - rank) + (size - rank)


def dual_knot_table(knot, m):
    """Return ``{j: dimension}`` over every grading of the dual knot."""
    return {
        linalg.halve(j2): dual_knot_dim(knot, m, linalg.halve(j2))
        for j2 in dual_knot_gradings(knot, m)
    }


def _sum_middle(knot):
    fam = family(knot)
    return sum(
        fam.A(2 * s).homology().dim
        for s in range(1 - knot.genus, knot.genus)
    )


def closed_form_case_dims(knot, m):
    """Return the dimension for ``m = -n`` from the closed case formulas.

    With tau negative, ``S`` the sum of ``dim H(A(i))`` over ``|i| < g``
    and ``g`` the genus, the dimension is ``S - 2g - 4 tau - 1 - m`` or
    ``S - 2g - 4 tau + 3 - m`` (for nu equal to tau plus one, or to tau)
    when ``m`` is negative or at most the breakpoint ``-2 tau - 1`` (resp.
    ``-2 tau + 1``), and ``S - 2g + 1 + m`` beyond it. Positive tau is
    handled through the mirror.

    Raises:
        PreconditionFailed: for ``m = 0`` or ``q != 1``
        TauZero: when tau vanishes

    >>> from instcone.catalog import trefoil_neg
    >>> closed_form_case_dims(trefoil_neg(), 3)
    3
    """
    require_q1(knot, "closed form dimensions")
    if m == 0:
        raise PreconditionFailed("m must be nonzero")
    tau_2 = _require_tau(knot, "the closed form")
    if tau_2 > 0:
        return closed_form_case_dims(mirror(knot), -m)
    tau_ = tau_2 // 2
    genus = knot.genus
    base = _sum_middle(knot) - 2 * genus
    if nu2(knot) == tau_2 + 2:
        low, breakpoint_ = base - 4 * tau_ - 1 - m, -2 * tau_ - 1
    else:
        low, breakpoint_ = base - 4 * tau_ + 3 - m, -2 * tau_ + 1
    if m <= breakpoint_:
        return low
    return base + 1 + m


def large_surgery_table(knot):
    """Return ``{s: dim H(A(s))}`` for ``|s| <= g``.

    Every grading outside that range contributes one.

    >>> from instcone.catalog import trefoil_pos
    >>> large_surgery_table(trefoil_pos())
    {-1: 1, 0: 3, 1: 1}
    """
    fam = family(knot)
    return {
        s: fam.A(2 * s).homology().dim
        for s in range(-knot.genus, knot.genus + 1)
    }


def large_surgery_dim(knot, large_n):
    """Return the dimension at the slope ``-N`` for ``N >= 2g + 1``.

    Raises:
        PreconditionFailed: for smaller ``N`` or ``q != 1``

    """
    require_q1(knot, "large surgery")
    if large_n < 2 * knot.genus + 1:
        raise PreconditionFailed(
            "large surgery needs N >= 2g + 1 = {bound}, got {n}".format(
                bound=2 * knot.genus + 1,
                n=large_n,
            ),
        )
    return sum(large_surgery_table(knot).values()) + large_n - 2 * knot.genus - 1


class SurgeryRow(NamedTuple):
    """One slope of a :py:class:`SurgeryReport`.

    ``dim`` is an integer for nonzero slopes and the per grading mapping
    of :py:func:`zero_surgery_dims` for slope 0.
    """

    slope: int
    dim: object

    @property
    def indeterminate(self):
        """Whether any entry of the row is indeterminate."""
        if isinstance(self.dim, dict):
            return any(map(is_indeterminate, self.dim.values()))
        return is_indeterminate(self.dim)


class SurgeryReport:
    """Dimensions over a set of slopes, with the windows used."""

    def __init__(self, knot, rows, probes=STABILITY_PROBES):
        """Initialize."""
        self.name = knot.name
        self.rows = tuple(rows)
        self.windows = {
            row.slope: window_halfwidth(knot, -row.slope)
            for row in self.rows
            if row.slope
        }
        self.probes = tuple(probes)

    def __iter__(self):
        """Iterate over rows in slope order."""
        return iter(self.rows)

    @property
    def indeterminate(self):
        """Whether some entry is indeterminate."""
        return any(row.indeterminate for row in self.rows)

    def metadata(self):
        """Return the windows and stability probes used."""
        return {
            "windows": dict(self.windows),
            "stability_probes": list(self.probes),
            "stable": True,
        }


def surgery_sweep(knot, slopes=SLOPE_SWEEP, probes=STABILITY_PROBES):
    """Return a :py:class:`SurgeryReport` for ``slopes``, sorted.

    Slope 0 gets the per grading zero surgery dimensions.
    """
    rows = []
    for slope in sorted(set(slopes)):
        if slope:
            rows.append(
                SurgeryRow(slope, integer_surgery_dim(knot, slope, probes)),
            )
        else:
            rows.append(SurgeryRow(0, zero_surgery_dims(knot)))
    return SurgeryReport(knot, rows, probes)


class InvariantReport(NamedTuple):
    """Tau and nu (doubled), plus nu sharp and r0 when tau is nonzero."""

    tau2: int
    nu2: object = None
    nu_sharp: object = None
    r0: object = None

    @property
    def tau(self):
        """Tau as an exact rational."""
        return linalg.halve(self.tau2)

    @property
    def nu(self):
        """Nu as an exact rational, when known."""
        return None if self.nu2 is None else linalg.halve(self.nu2)

    def as_dict(self):
        """Return a JSON-ready mapping; halves are rendered as ``"p/q"``."""

        def render(doubled):
            if doubled is None:
                return None
            if doubled % 2:
                return linalg.format_half(doubled)
            return doubled // 2

        return {
            "tau": render(self.tau2),
            "nu": render(self.nu2),
            "nu_sharp": self.nu_sharp,
            "r0": self.r0,
        }


def invariant_report(knot):
    """Collect every invariant defined for ``knot``.

    Nu needs ``q = 1``; nu sharp and r0 also need a nonzero tau.

    >>> from instcone.catalog import trefoil_neg
    >>> invariant_report(trefoil_neg()).as_dict()
    {'tau': -1, 'nu': 0, 'nu_sharp': -1, 'r0': 1}
    """
    tau_2 = tau2(knot)
    if knot.q != 1:
        return InvariantReport(tau_2)
    nu_2 = nu2(knot)
    if not tau_2:
        return InvariantReport(tau_2, nu_2)
    return InvariantReport(tau_2, nu_2, nu_sharp(knot), r0(knot))
