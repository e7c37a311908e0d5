"""Bent complexes, half complexes and the threshold invariants.

For a grading ``s`` the bent complex ``A(s)`` lives on the generators of
the knot homology whose Alexander grading is congruent to ``s`` modulo
``q``. Its differential acts by ``d_plus`` on generators above ``s``, by
``d_minus`` below, and by their sum at ``s`` itself. The half complexes
keep only one of the two differentials, possibly cut off at ``s``.

Gradings are passed doubled (``s2``) inside this module's classes; the
module level helpers take Alexander gradings as integers, fractions or
``"p/q"`` strings.

.. spelling::

   projections
"""

import enum
import functools
import logging

from jaraco.functools import method_cache

from . import linalg
from .complexes import ChainMap, Complex, GradedMap
from .errors import ConventionMismatch, PreconditionFailed


logger = logging.getLogger(__name__)


class Half(enum.Enum):
    """Kinds of half complexes."""

    PLUS = "Bplus"
    MINUS = "Bminus"
    PLUS_GEQ = "BplusGeq"
    MINUS_LEQ = "BminusLeq"

    @property
    def sign(self):
        """``+1`` for the ``d_plus`` kinds, ``-1`` for the ``d_minus`` ones."""
        return 1 if self in (Half.PLUS, Half.PLUS_GEQ) else -1


def _residue_space(knot, s2):
    step = 2 * knot.q
    return knot.space.restricted(
        lambda _label, grading: (grading.alex2 - s2) % step == 0,
    )


class BentComplex(Complex):
    """The bent complex ``A(s)`` of a knot at the doubled grading ``s2``."""

    def __init__(self, knot, s2):
        """Initialize from the knot's differentials.

        Raises:
            InvalidComplex: if the bent differential fails to square to zero

        """
        space = _residue_space(knot, s2)
        entries = [
            entry
            for entry in knot.d_plus.entries
            if entry[0] in space
            if space.grading(entry[0]).alex2 >= s2
        ]
        entries.extend(
            entry
            for entry in knot.d_minus.entries
            if entry[0] in space
            if space.grading(entry[0]).alex2 <= s2
        )
        super().__init__(space, GradedMap(space, space, entries))
        self.knot = knot
        self.s2 = s2


class HalfComplex(Complex):
    """One of ``B+(s)``, ``B-(s)``, ``B+(>=s)`` or ``B-(<=s)``."""

    def __init__(self, knot, kind, s2):
        """Initialize.

        Args:
            knot (KnotComplexData): the knot data
            kind (Half): which half complex to build
            s2 (int): doubled grading ``s``

        """
        kind = Half(kind)
        space = _residue_space(knot, s2)
        if kind is Half.PLUS_GEQ:
            space = space.restricted(lambda _label, grading: grading.alex2 >= s2)
        elif kind is Half.MINUS_LEQ:
            space = space.restricted(lambda _label, grading: grading.alex2 <= s2)
        differential = knot.d_plus if kind.sign > 0 else knot.d_minus
        super().__init__(space, differential.restricted(space, space))
        self.knot = knot
        self.kind = kind
        self.s2 = s2


class BentFamily:
    """Every bent and half complex of one knot, built on demand and cached."""

    def __init__(self, knot):
        """Initialize."""
        self.knot = knot

    @method_cache
    def A(self, s2):  # noqa: N802
        """Return the bent complex ``A(s)``."""
        return BentComplex(self.knot, s2)

    @method_cache
    def B(self, kind, s2):  # noqa: N802
        """Return the half complex of the given kind."""
        return HalfComplex(self.knot, kind, s2)

    def full(self, sign, s2):
        """Return ``B+(s)`` or ``B-(s)``."""
        return self.B(Half.PLUS if sign > 0 else Half.MINUS, s2)

    def truncated(self, sign, s2):
        """Return ``B+(>=s)`` or ``B-(<=s)``."""
        return self.B(Half.PLUS_GEQ if sign > 0 else Half.MINUS_LEQ, s2)

    @method_cache
    def pi(self, sign, s2):
        """Return ``pi+(s)`` or ``pi-(s)`` on homology.

        ``pi+`` keeps the generators at gradings ``>= s`` and ``pi-``
        the ones at gradings ``<= s``; the rest are sent to zero.
        """
        return self.projection(sign, s2).induced()

    @method_cache
    def pi_restricted(self, sign, s2):
        """Return ``pi(s)`` corestricted to ``B+(>=s)`` or ``B-(<=s)``."""
        return self._projection(self.truncated(sign, s2), sign, s2).induced()

    @method_cache
    def projection(self, sign, s2):
        """Return the chain map underlying ``pi+(s)`` or ``pi-(s)``."""
        return self._projection(self.full(sign, s2), sign, s2)

    def _projection(self, target, sign, s2):
        source = self.A(s2)
        kept = [
            (label, label, 1)
            for label, grading in source.space
            if sign * (grading.alex2 - s2) >= 0
        ]
        return ChainMap(source, target, GradedMap(source.space, target.space, kept))

    @method_cache
    def inclusion(self, sign, s2):
        """Return ``I+(s)`` or ``I-(s)`` on homology."""
        source = self.truncated(sign, s2)
        target = self.full(sign, s2)
        return ChainMap(
            source,
            target,
            GradedMap.by_label(source.space, target.space),
        ).induced()


@functools.lru_cache(maxsize=128)
def family(knot):
    """Return the shared :py:class:`BentFamily` of ``knot``."""
    return BentFamily(knot)


def _sign(sign):
    if sign in ("+", 1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError("sign must be '+' or '-', got {sign!r}".format(sign=sign))


def build_A(knot, s):  # noqa: N802
    """Return the bent complex ``A(s)``.

    >>> from instcone.catalog import trefoil_neg
    >>> from instcone.complexes import homology_dims
    >>> homology_dims(build_A(trefoil_neg(), 0)).total
    1
    """
    return family(knot).A(linalg.double(s))


def build_B(knot, kind, s):  # noqa: N802
    """Return the half complex of kind ``kind`` (a :py:class:`Half` or its value)."""
    return family(knot).B(Half(kind), linalg.double(s))


def pi_map(knot, sign, s):
    """Return the homology map ``pi+(s)`` (``sign='+'``) or ``pi-(s)``."""
    return family(knot).pi(_sign(sign), linalg.double(s))


def inclusion_map(knot, sign, s):
    """Return the homology map ``I+(s)`` (``sign='+'``) or ``I-(s)``."""
    return family(knot).inclusion(_sign(sign), linalg.double(s))


def grading_bounds(knot, n):
    """Return the doubled extreme gradings of the dual knot at slope ``n``.

    >>> from instcone.catalog import unknot
    >>> grading_bounds(unknot(), 5)
    (4, -4)
    """
    top = abs(knot.q0 - n * knot.q) - 1 + 2 * knot.genus
    return top, -top


def grading_bounds_mu(knot):
    """Return the doubled extreme gradings allowed for the knot homology."""
    return knot.mu_bounds2()


def lattice(knot, pad=0):
    """Return the doubled gradings of the knot's lattice, ascending.

    Args:
        knot (KnotComplexData): the knot data
        pad (int): extra lattice points added beyond each end

    """
    top, bottom = knot.mu_bounds2()
    return range(bottom - 2 * pad, top + 2 * pad + 1, 2)


def stable_grading(knot, sign, s2):
    """Move ``s2`` by whole periods past the end of the lattice.

    Below the lowest grading ``B+(>=t)`` holds all of ``B+(t)``, and above
    the highest ``B-(<=t)`` holds all of ``B-(t)``; ``t`` keeps the residue
    of ``s2`` modulo ``q``.

    >>> from instcone.catalog import trefoil_neg
    >>> knot = trefoil_neg()
    >>> stable_grading(knot, '+', 0), stable_grading(knot, '-', 0)
    (-4, 4)
    """
    top, bottom = knot.mu_bounds2()
    step = 2 * knot.q
    if _sign(sign) > 0:
        return s2 - max((s2 - bottom) // step + 1, 0) * step
    return s2 + max((top - s2) // step + 1, 0) * step


def _threshold(knot, sign):
    fam = family(knot)
    grades = lattice(knot)
    if sign > 0:
        grades = reversed(grades)
    for s2 in grades:
        if fam.inclusion(sign, s2):
            return s2
    raise ConventionMismatch(
        "no grading of {name!r} carries a nonzero inclusion into "
        "{kind}".format(name=knot.name, kind="B+" if sign > 0 else "B-"),
    )


def tau2(knot):
    """Return twice the tau invariant.

    The tau invariant is minus the smallest ``i`` for which
    ``B-(<=i) -> B-`` is nonzero on homology; the largest ``i`` for which
    ``B+(>=i) -> B+`` is nonzero must agree with it.

    Raises:
        ConventionMismatch: when the two thresholds disagree

    """
    minus_threshold = _threshold(knot, -1)
    plus_threshold = _threshold(knot, 1)
    logger.debug(
        "thresholds of %r: B- at %s, B+ at %s",
        knot.name,
        minus_threshold,
        plus_threshold,
    )
    if -minus_threshold != plus_threshold:
        raise ConventionMismatch(
            "tau of {name!r}: B- threshold gives {minus}, B+ threshold "
            "gives {plus}".format(
                name=knot.name,
                minus=linalg.format_half(-minus_threshold),
                plus=linalg.format_half(plus_threshold),
            ),
        )
    return plus_threshold


def tau(knot):
    """Return the tau invariant as an exact rational.

    >>> from instcone.catalog import trefoil_neg
    >>> tau(trefoil_neg())
    Fraction(-1, 1)
    """
    return linalg.halve(tau2(knot))


def require_q1(knot, what):
    """Raise unless ``knot`` has ``q = 1``.

    Raises:
        PreconditionFailed: when ``q != 1``

    """
    if knot.q != 1:
        raise PreconditionFailed(
            "{what} needs q = 1, {name!r} has q = {q}".format(
                what=what,
                name=knot.name,
                q=knot.q,
            ),
        )


def nu2(knot):
    """Return twice the nu invariant.

    Nu is tau plus one when ``pi+(tau)`` is nonzero and tau otherwise;
    this is checked against one more than the largest ``s`` with a
    nonzero ``pi+(s)``.

    Raises:
        PreconditionFailed: for ``q != 1``
        ConventionMismatch: when the two computations disagree

    """
    require_q1(knot, "nu")
    fam = family(knot)
    tau_2 = tau2(knot)
    value = tau_2 + 2 if fam.pi(1, tau_2) else tau_2
    last = max(s2 for s2 in lattice(knot, pad=1) if fam.pi(1, s2))
    if last + 2 != value:
        raise ConventionMismatch(
            "nu of {name!r}: pi+ at tau gives {value}, largest nonzero pi+ "
            "gives {other}".format(
                name=knot.name,
                value=linalg.format_half(value),
                other=linalg.format_half(last + 2),
            ),
        )
    return value


def nu(knot):
    """Return the nu invariant.

    >>> from instcone.catalog import unknot
    >>> nu(unknot())
    1
    """
    return nu2(knot) // 2
