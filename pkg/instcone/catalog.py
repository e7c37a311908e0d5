"""Built-in knot complex models and seeded random valid ones.

The built-in models are small synthetic fixtures shaped after the
unknot and the trefoils; their expected invariants are worked out by hand
from the data itself.

>>> [knot.name for knot in catalog()]
['unknot', 'trefoil-neg', 'trefoil-pos', 'box']
"""

import logging
import random
from fractions import Fraction

from .complexes import GradedMap
from .errors import GeneratorFailure, ParseError
from .knot import KnotComplexData, mirror, validate


logger = logging.getLogger(__name__)

RANDOM_MAX_GENERATORS = 12
"""Upper bound on the size of generated complexes."""

_COEFFICIENTS = (1, -1, 2, -2, 3, Fraction(1, 2), Fraction(-3, 2))


def unknot():
    """Return the one-generator unknot model."""
    return KnotComplexData.from_generators("unknot", 0, [("u", 0, 0)])


def trefoil_neg():
    """Return the three-generator staircase with ``tau = -1``."""
    return KnotComplexData.from_generators(
        "trefoil-neg",
        1,
        [("x1", 2, 0), ("x2", 0, 1), ("x3", -2, 0)],
        d_plus=[("x2", "x1", 1)],
        d_minus=[("x2", "x3", 1)],
    )


def trefoil_pos():
    """Return the mirror of :py:func:`trefoil_neg`."""
    return mirror(trefoil_neg(), name="trefoil-pos")


def box():
    """Return the unknot generator plus two acyclic square pieces."""
    return KnotComplexData.from_generators(
        "box",
        1,
        [("u", 0, 0), ("p", 2, 0), ("q", 0, 1), ("t", 0, 1), ("s", -2, 0)],
        d_plus=[("q", "p", 1), ("s", "t", 1)],
        d_minus=[("t", "s", 1), ("p", "q", 1)],
    )


_BUILTINS = {
    "unknot": unknot,
    "trefoil-neg": trefoil_neg,
    "trefoil-pos": trefoil_pos,
    "box": box,
}

RANDOM_PREFIX = "random-"


def catalog():
    """Return every built-in model."""
    return [factory() for factory in _BUILTINS.values()]


def names():
    """Return the names accepted by :py:func:`get`, random ones excluded."""
    return list(_BUILTINS)


def get(name):
    """Return the catalog knot called ``name``.

    ``random-<seed>`` names a seeded random complex.

    Raises:
        ParseError: for unknown names

    """
    if name in _BUILTINS:
        return _BUILTINS[name]()
    if name.startswith(RANDOM_PREFIX):
        seed = name[len(RANDOM_PREFIX):]
        if seed.lstrip("-").isdigit():
            return random_knot(int(seed))
    raise ParseError(
        "unknown catalog knot {name!r}; known: {known}, {prefix}<seed>".format(
            name=name,
            known=", ".join(_BUILTINS),
            prefix=RANDOM_PREFIX,
        ),
    )


def _staircase(rng):
    half = [rng.randint(1, 2) for _ in range(rng.randint(0, 2))]
    steps = half + half[::-1]
    alex2 = 2 * sum(half)
    generators = [("a0", alex2, 0)]
    for pos, step in enumerate(steps, start=1):
        alex2 -= 2 * step
        generators.append(("a{pos}".format(pos=pos), alex2, pos % 2))
    d_plus = []
    d_minus = []
    for pos in range(1, len(generators), 2):
        label = generators[pos][0]
        d_plus.append((label, generators[pos - 1][0], rng.choice(_COEFFICIENTS)))
        d_minus.append((label, generators[pos + 1][0], rng.choice(_COEFFICIENTS)))
    return sum(half), generators, d_plus, d_minus


def _box_pairs(rng, genus, budget):
    """Acyclic squares, each added together with its reversed partner."""
    generators = []
    d_plus = []
    d_minus = []
    count = 0
    while budget >= 4 and rng.random() < 0.6:
        low = rng.randint(-genus, genus - 1)
        high = rng.randint(low + 1, genus)
        low_h = rng.randint(0, 1)
        pieces = (
            (low, high, low_h),
            (-high, -low, 1 - low_h),
        )
        for bottom, top, bottom_h in pieces:
            lower = "b{count}".format(count=count)
            upper = "c{count}".format(count=count)
            count += 1
            generators.append((lower, 2 * bottom, bottom_h))
            generators.append((upper, 2 * top, 1 - bottom_h))
            d_plus.append((lower, upper, rng.choice(_COEFFICIENTS)))
            d_minus.append((upper, lower, rng.choice(_COEFFICIENTS)))
        budget -= 4
    return generators, d_plus, d_minus


def _scrambled(rng, knot):
    """Conjugate both differentials by grading-preserving elementary maps."""
    space = knot.space
    d_plus, d_minus = knot.d_plus, knot.d_minus
    blocks = [labels for labels in space.by_grading().values() if len(labels) > 1]
    for _ in range(rng.randint(0, 4) if blocks else 0):
        first, second = rng.sample(rng.choice(blocks), 2)
        coeff = rng.choice(_COEFFICIENTS)
        identity = GradedMap.identity(space)
        elementary = identity + GradedMap(space, space, [(first, second, coeff)])
        inverse = identity - GradedMap(space, space, [(first, second, coeff)])
        d_plus = elementary @ d_plus @ inverse
        d_minus = elementary @ d_minus @ inverse
    return KnotComplexData(
        knot.name,
        knot.genus,
        space,
        d_plus,
        d_minus,
        q=knot.q,
        q0=knot.q0,
    )


def random_knot(seed, max_generators=RANDOM_MAX_GENERATORS):
    """Return a valid, reverse-symmetric random complex determined by ``seed``.

    The complex is a staircase with palindromic steps plus mirrored pairs
    of acyclic squares, scrambled by a grading-preserving change of basis
    and mirrored half of the time.

    Raises:
        GeneratorFailure: if the result does not validate

    """
    rng = random.Random(seed)
    top, generators, d_plus, d_minus = _staircase(rng)
    genus = max(top, 1) + rng.randint(0, 1)
    extra = _box_pairs(rng, genus, max_generators - len(generators))
    knot = KnotComplexData.from_generators(
        "{prefix}{seed}".format(prefix=RANDOM_PREFIX, seed=seed),
        genus,
        generators + extra[0],
        d_plus=d_plus + extra[1],
        d_minus=d_minus + extra[2],
    )
    knot = _scrambled(rng, knot)
    if rng.random() < 0.5:
        knot = mirror(knot, name=knot.name)
    report = validate(knot)
    if not report.ok:
        raise GeneratorFailure(
            "seed {seed} produced invalid data: {failed}".format(
                seed=seed,
                failed=", ".join(check.name for check in report.failures),
            ),
        )
    logger.debug("random knot %r with %d generators", knot.name, len(knot.space))
    return knot


def random_knots(count, seed=0):
    """Return ``count`` random complexes with consecutive seeds."""
    return [random_knot(seed + offset) for offset in range(count)]
