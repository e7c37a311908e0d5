"""Graded vector spaces, chain complexes, homology and mapping cones.

Everything here is over the rationals. A :py:class:`GradedSpace` is an
ordered list of labelled generators; a :py:class:`GradedMap` stores its
nonzero coefficients as triplets sorted by generator position.

.. spelling::

   endomorphism
   homogeneous
"""

import logging
from fractions import Fraction
from typing import NamedTuple

from jaraco.functools import method_cache
from more_itertools import duplicates_everseen, map_reduce

from . import linalg
from .errors import InvalidComplex, MissingScalar, NotChainMap


logger = logging.getLogger(__name__)


class Grading(NamedTuple):
    """Twice the Alexander grading together with the mod 2 grading.

    ``alex2`` is ``None`` only in homology reports of complexes whose
    differential mixes Alexander directions.
    """

    alex2: int
    h: int

    def shifted(self, alex2=0, h=0):
        """Return the grading moved by ``(alex2, h)``."""
        return Grading(self.alex2 + alex2, (self.h + h) % 2)

    def __str__(self):
        """Render as ``(alexander, h)`` with an exact half."""
        alex = "*" if self.alex2 is None else linalg.format_half(self.alex2)
        return "({alex}, {h})".format(alex=alex, h=self.h)


class GradedSpace:
    """A finite graded rational vector space with labelled generators."""

    def __init__(self, generators=()):
        """Initialize.

        Args:
            generators (iterable): ``(label, grading)`` pairs where the
                grading is a :py:class:`Grading` or an ``(alex2, h)`` pair

        Raises:
            ValueError: if a label appears twice

        """
        self.generators = tuple(
            (str(label), Grading(int(alex2), int(h) % 2))
            for label, (alex2, h) in generators
        )
        repeated = list(duplicates_everseen(self.labels))
        if repeated:
            raise ValueError(
                "duplicate generator labels: {labels}".format(
                    labels=", ".join(repeated),
                ),
            )
        self._index = {label: pos for pos, label in enumerate(self.labels)}

    @property
    def labels(self):
        """Generator labels in order."""
        return tuple(label for label, _grading in self.generators)

    def __len__(self):
        """Return the dimension."""
        return len(self.generators)

    def __iter__(self):
        """Iterate over ``(label, grading)`` pairs."""
        return iter(self.generators)

    def __contains__(self, label):
        """Tell whether ``label`` names a generator."""
        return label in self._index

    def __eq__(self, other):
        """Compare generator lists."""
        if not isinstance(other, GradedSpace):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        """Hash the generator list."""
        return hash(self.generators)

    def __repr__(self):
        """Render compactly."""
        return "GradedSpace({gens})".format(
            gens=", ".join(
                "{label}{grading}".format(label=label, grading=grading)
                for label, grading in self.generators
            ),
        )

    def index(self, label):
        """Return the position of ``label``."""
        return self._index[label]

    def label(self, index):
        """Return the label at position ``index``."""
        return self.generators[index][0]

    def grading(self, label_or_index):
        """Return the grading of a generator given by label or position."""
        if isinstance(label_or_index, int):
            return self.generators[label_or_index][1]
        return self.generators[self._index[label_or_index]][1]

    def restricted(self, predicate):
        """Return the span of generators for which ``predicate(label, grading)``."""
        return GradedSpace(
            (label, grading)
            for label, grading in self.generators
            if predicate(label, grading)
        )

    def relabelled(self, prefix="", alex2=0, h=0):
        """Return a copy with prefixed labels and shifted gradings."""
        return GradedSpace(
            (prefix + label, grading.shifted(alex2, h))
            for label, grading in self.generators
        )

    def by_grading(self):
        """Return labels grouped by grading."""
        return dict(
            map_reduce(
                self.generators,
                keyfunc=lambda gen: gen[1],
                valuefunc=lambda gen: gen[0],
            ),
        )


class GradedMap:
    """A linear map between graded spaces, stored as sorted triplets."""

    def __init__(self, source, target, entries=()):
        """Initialize.

        Args:
            source (GradedSpace): domain
            target (GradedSpace): codomain
            entries (iterable): ``(from_label, to_label, coeff)`` triplets;
                repeated pairs add up and zero sums are dropped

        Raises:
            ValueError: if an entry names an unknown generator

        """
        coefficients = {}
        for from_label, to_label, coeff in entries:
            if from_label not in source or to_label not in target:
                raise ValueError(
                    "entry {src} -> {tgt} references an unknown "
                    "generator".format(src=from_label, tgt=to_label),
                )
            if isinstance(coeff, str):
                coeff = linalg.parse_rational(coeff)
            key = source.index(from_label), target.index(to_label)
            coefficients[key] = coefficients.get(key, 0) + Fraction(coeff)
        self._init(source, target, coefficients)

    def _init(self, source, target, coefficients):
        self.source = source
        self.target = target
        self._coefficients = {
            key: value for key, value in sorted(coefficients.items()) if value
        }

    @classmethod
    def _from_indices(cls, source, target, coefficients):
        new = cls.__new__(cls)
        new._init(source, target, coefficients)
        return new

    @classmethod
    def zero(cls, source, target):
        """Return the zero map."""
        return cls._from_indices(source, target, {})

    @classmethod
    def by_label(cls, source, target):
        """Send each generator to the equally labelled one, if present.

        Generators missing from ``target`` go to zero, so this covers
        identities, inclusions and projections alike.
        """
        return cls(
            source,
            target,
            ((label, label, 1) for label in source.labels if label in target),
        )

    @classmethod
    def identity(cls, space):
        """Return the identity endomorphism."""
        return cls.by_label(space, space)

    @property
    def entries(self):
        """``(from_label, to_label, coeff)`` triplets in storage order."""
        return tuple(
            (self.source.label(i), self.target.label(j), coeff)
            for (i, j), coeff in self._coefficients.items()
        )

    def items(self):
        """Iterate over ``((source_index, target_index), coeff)``."""
        return self._coefficients.items()

    def __bool__(self):
        """Tell whether the map is nonzero."""
        return bool(self._coefficients)

    def __eq__(self, other):
        """Compare spaces and coefficients."""
        if not isinstance(other, GradedMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self._coefficients == other._coefficients
        )

    def __hash__(self):
        """Hash spaces and coefficients."""
        return hash(
            (self.source, self.target, tuple(self._coefficients.items())),
        )

    def __repr__(self):
        """Render the entries."""
        return "GradedMap({entries})".format(
            entries=", ".join(
                "{src}->{tgt}:{coeff}".format(
                    src=src,
                    tgt=tgt,
                    coeff=linalg.format_rational(coeff),
                )
                for src, tgt, coeff in self.entries
            ),
        )

    def _check_compatible(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("maps have different source or target spaces")

    def __add__(self, other):
        """Return the sum of two maps between the same spaces."""
        self._check_compatible(other)
        total = dict(self._coefficients)
        for key, coeff in other.items():
            total[key] = total.get(key, 0) + coeff
        return self._from_indices(self.source, self.target, total)

    def __neg__(self):
        """Return the negated map."""
        return self.scaled(-1)

    def __sub__(self, other):
        """Return the difference of two maps between the same spaces."""
        return self + (-other)

    def scaled(self, scalar):
        """Return ``scalar`` times the map."""
        scalar = Fraction(scalar)
        return self._from_indices(
            self.source,
            self.target,
            {key: scalar * coeff for key, coeff in self.items()},
        )

    __rmul__ = scaled

    def __matmul__(self, other):
        """Compose: ``(self @ other)(x) = self(other(x))``."""
        if other.target != self.source:
            raise ValueError("cannot compose maps with mismatched spaces")
        by_source = map_reduce(
            self.items(),
            keyfunc=lambda item: item[0][0],
            valuefunc=lambda item: (item[0][1], item[1]),
        )
        product = {}
        for (i, j), coeff in other.items():
            for k, outer in by_source.get(j, ()):
                product[i, k] = product.get((i, k), 0) + coeff * outer
        return self._from_indices(other.source, self.target, product)

    def apply(self, vector):
        """Apply the map to a sparse vector over source positions."""
        image = {}
        for (i, j), coeff in self.items():
            value = vector.get(i)
            if value:
                image[j] = image.get(j, 0) + coeff * value
        return {index: value for index, value in image.items() if value}

    def columns(self):
        """Return ``{source_index: {target_index: coeff}}``."""
        columns = {}
        for (i, j), coeff in self.items():
            columns.setdefault(i, {})[j] = coeff
        return columns

    def rows(self):
        """Return ``{target_index: {source_index: coeff}}``."""
        rows = {}
        for (i, j), coeff in self.items():
            rows.setdefault(j, {})[i] = coeff
        return rows

    def matrix(self):
        """Return the dense matrix, one row per target generator."""
        dense = [[Fraction(0)] * len(self.source) for _ in self.target]
        for (i, j), coeff in self.items():
            dense[j][i] = coeff
        return dense

    def rank(self):
        """Return the exact rank."""
        return linalg.rank(self.rows().values())

    def shifts(self):
        """Return the set of ``(alex2, h)`` shifts carried by the entries."""
        return {
            (
                self.target.grading(j).alex2 - self.source.grading(i).alex2,
                (self.target.grading(j).h - self.source.grading(i).h) % 2,
            )
            for i, j in self._coefficients
        }

    def is_homogeneous(self, alex2=None, h=None):
        """Tell whether every entry has the given shifts.

        Omitted components only need to agree among the entries.
        """
        shifts = self.shifts()
        alex_shifts = {shift[0] for shift in shifts}
        h_shifts = {shift[1] for shift in shifts}
        if alex2 is not None and alex_shifts - {alex2}:
            return False
        if h is not None and h_shifts - {h}:
            return False
        return len(alex_shifts) <= 1 and len(h_shifts) <= 1

    def h_shift(self):
        """Return the common mod 2 shift, ``0`` for the zero map.

        Returns ``None`` when entries disagree.
        """
        h_shifts = {shift[1] for shift in self.shifts()}
        if len(h_shifts) > 1:
            return None
        return h_shifts.pop() if h_shifts else 0

    def alexander_direction(self):
        """Classify the Alexander shifts as flat, up, down or mixed."""
        signs = {(shift > 0) - (shift < 0) for shift, _h in self.shifts()}
        if signs <= {0}:
            return "flat"
        if signs <= {0, 1}:
            return "up"
        if signs <= {0, -1}:
            return "down"
        return "mixed"

    def transpose(self):
        """Return the transposed map from target to source."""
        return self._from_indices(
            self.target,
            self.source,
            {(j, i): coeff for (i, j), coeff in self.items()},
        )

    def restricted(self, source, target):
        """Return the map between sub/quotient spaces sharing labels.

        Entries whose ends are missing from the new spaces are dropped.
        """
        return GradedMap(
            source,
            target,
            (
                (src, tgt, coeff)
                for src, tgt, coeff in self.entries
                if src in source and tgt in target
            ),
        )


def rescale_by_grading(graded_map, scalars):
    """Multiply each entry by the scalar attached to its source grading.

    Args:
        graded_map (GradedMap): map to rescale
        scalars (Mapping): nonzero rational per source :py:class:`Grading`

    Returns:
        GradedMap: the rescaled map

    Raises:
        MissingScalar: when a grading carrying entries has no scalar
        ValueError: when a scalar is zero

    """
    rescaled = {}
    for (i, j), coeff in graded_map.items():
        grading = graded_map.source.grading(i)
        try:
            scalar = Fraction(scalars[grading])
        except KeyError:
            raise MissingScalar(
                "no scalar given for grading {grading}".format(grading=grading),
            ) from None
        if not scalar:
            raise ValueError(
                "scalar for grading {grading} is zero".format(grading=grading),
            )
        rescaled[i, j] = scalar * coeff
    return GradedMap._from_indices(
        graded_map.source,
        graded_map.target,
        rescaled,
    )


class Complex:
    """A mod 2 graded chain complex over the rationals."""

    def __init__(self, space, differential=None):
        """Initialize, checking that the differential flips ``h`` and squares to zero.

        Raises:
            ValueError: if the differential is not an endomorphism of ``space``
            InvalidComplex: if the differential is not one

        """
        if differential is None:
            differential = GradedMap.zero(space, space)
        if differential.source != space or differential.target != space:
            raise ValueError("the differential must be an endomorphism")
        same_parity = [
            "{src} -> {tgt}".format(src=src, tgt=tgt)
            for src, tgt, _coeff in differential.entries
            if space.grading(src).h == space.grading(tgt).h
        ]
        if same_parity:
            raise InvalidComplex(
                "differential preserves h on {entries}".format(
                    entries=", ".join(same_parity),
                ),
            )
        square = differential @ differential
        if square:
            raise InvalidComplex(
                "differential squares to {square!r}".format(square=square),
            )
        self.space = space
        self.differential = differential

    def __len__(self):
        """Return the dimension of the underlying space."""
        return len(self.space)

    def __eq__(self, other):
        """Compare spaces and differentials."""
        if not isinstance(other, Complex):
            return NotImplemented
        return self.space == other.space and self.differential == other.differential

    __hash__ = None

    def __repr__(self):
        """Render the space and differential."""
        return "{cls}({space!r}, {diff!r})".format(
            cls=type(self).__name__,
            space=self.space,
            diff=self.differential,
        )

    @method_cache
    def homology(self):
        """Return the :py:class:`Homology` bookkeeping of this complex."""
        return Homology(self)

    def restricted(self, predicate):
        """Return the complex on generators satisfying ``predicate``."""
        space = self.space.restricted(predicate)
        return Complex(space, self.differential.restricted(space, space))


class Homology:
    """Cycle representatives, boundaries and coordinates of a complex."""

    def __init__(self, complex_):
        """Compute bases of boundaries and of homology, parity by parity.

        The homology basis is made of the kernel vectors, taken in
        pivot order, that are independent of the boundaries and of the
        earlier picks.
        """
        self.complex = complex_
        space = complex_.space
        differential = complex_.differential
        columns = differential.columns()
        rows = differential.rows()

        self.representatives = []
        self.parities = []
        self.boundaries = []
        self._solvers = {}
        self._rep_numbers = {}
        for h in (0, 1):
            boundaries = linalg.EchelonBasis(
                columns.get(i, {})
                for i, (_label, grading) in enumerate(space)
                if grading.h != h
            )
            same_parity = [
                i for i, (_label, grading) in enumerate(space) if grading.h == h
            ]
            allowed = set(same_parity)
            cycles = linalg.nullspace(
                [
                    {col: coeff for col, coeff in row.items() if col in allowed}
                    for row in rows.values()
                ],
                same_parity,
            )
            solver = linalg.EchelonBasis(boundaries.rows)
            # NOTE: solver numbers count rejected cycles too
            rep_numbers = {}
            for cycle in cycles:
                if solver.add(cycle):
                    rep_numbers[solver.accepted[-1]] = len(self.representatives)
                    self.representatives.append(cycle)
                    self.parities.append(h)
            self.boundaries.extend(boundaries.rows)
            self._solvers[h] = solver
            self._rep_numbers[h] = rep_numbers

    @property
    def dim(self):
        """Total dimension."""
        return len(self.representatives)

    def dims_by_h(self):
        """Return dimensions keyed by the mod 2 grading."""
        return {h: self.parities.count(h) for h in (0, 1)}

    def _split(self, vector):
        parts = {0: {}, 1: {}}
        for index, value in vector.items():
            parts[self.complex.space.grading(index).h][index] = value
        return parts

    def is_cycle(self, vector):
        """Tell whether the differential kills ``vector``."""
        return not self.complex.differential.apply(vector)

    def coordinates(self, vector):
        """Return the homology class of the cycle ``vector`` in the basis.

        Raises:
            ValueError: when ``vector`` is not a cycle

        """
        if not self.is_cycle(vector):
            raise ValueError("vector is not a cycle")
        coords = [Fraction(0)] * self.dim
        for h, part in self._split(vector).items():
            if not part:
                continue
            combination = self._solvers[h].coordinates(part)
            rep_numbers = self._rep_numbers[h]
            for number, coeff in combination.items():
                if number in rep_numbers:
                    coords[rep_numbers[number]] = coeff
        return tuple(coords)

    def is_boundary(self, vector):
        """Tell whether ``vector`` is a boundary."""
        return self.is_cycle(vector) and not any(self.coordinates(vector))

    def image_rank(self, cycles):
        """Return the dimension of the span of the classes of ``cycles``."""
        return linalg.rank(self.coordinates(cycle) for cycle in cycles)

    def cycles_within(self, positions, h):
        """Return a basis of the cycles of parity ``h`` supported on ``positions``."""
        positions = [
            index
            for index in sorted(positions)
            if self.complex.space.grading(index).h == h
        ]
        allowed = set(positions)
        rows = self.complex.differential.rows()
        return linalg.nullspace(
            [
                {col: coeff for col, coeff in row.items() if col in allowed}
                for row in rows.values()
            ],
            positions,
        )


class HomologyDims(dict):
    """Homology dimensions keyed by :py:class:`Grading`."""

    @property
    def total(self):
        """Total dimension."""
        return sum(self.values())


def homology_dims(complex_):
    """Return per-grading homology dimensions of ``complex_``.

    When the differential moves the Alexander grading in one direction
    only, the split comes from the filtration by Alexander level; when it
    mixes directions only the mod 2 split is meaningful and the keys carry
    ``alex2=None``.

    >>> space = GradedSpace([('a', (0, 0)), ('b', (2, 1))])
    >>> homology_dims(Complex(space)).total
    2
    >>> d = GradedMap(space, space, [('a', 'b', 1)])
    >>> homology_dims(Complex(space, d))
    {}
    """
    homology = complex_.homology()
    space = complex_.space
    direction = complex_.differential.alexander_direction()
    dims = HomologyDims()
    if direction == "mixed":
        for h, count in homology.dims_by_h().items():
            if count:
                dims[Grading(None, h)] = count
        return dims

    levels = sorted({grading.alex2 for _label, grading in space})
    if direction == "down":
        in_level = lambda grading, level: grading.alex2 <= level  # noqa: E731
    else:
        levels.reverse()
        in_level = lambda grading, level: grading.alex2 >= level  # noqa: E731
    for h in (0, 1):
        previous = 0
        for level in levels:
            positions = [
                index
                for index, (_label, grading) in enumerate(space)
                if in_level(grading, level)
            ]
            image = homology.image_rank(homology.cycles_within(positions, h))
            if image > previous:
                dims[Grading(level, h)] = image - previous
            previous = image
    logger.debug("homology dims %s of %d generators", dict(dims), len(space))
    return dims


class ChainMap:
    """A graded map commuting with the differentials."""

    def __init__(self, source, target, graded_map):
        """Initialize.

        Raises:
            ValueError: if ``graded_map`` is not between the two spaces
            NotChainMap: if ``graded_map ∘ d == d ∘ graded_map`` fails

        """
        if graded_map.source != source.space or graded_map.target != target.space:
            raise ValueError("map spaces do not match the complexes")
        if graded_map @ source.differential != target.differential @ graded_map:
            raise NotChainMap("map does not commute with the differentials")
        self.source = source
        self.target = target
        self.map = graded_map

    @method_cache
    def induced(self):
        """Return the :py:class:`HomologyMap` on homology."""
        return HomologyMap(self)


class HomologyMap:
    """Matrix of a chain map between the chosen homology bases."""

    def __init__(self, chain_map):
        """Compute the matrix and check it does not depend on representatives.

        Raises:
            NotChainMap: if a boundary is sent to a non-boundary

        """
        self.source = chain_map.source.homology()
        self.target = chain_map.target.homology()
        for boundary in self.source.boundaries:
            if not self.target.is_boundary(chain_map.map.apply(boundary)):
                raise NotChainMap("induced map is not well defined")
        images = [
            self.target.coordinates(chain_map.map.apply(rep))
            for rep in self.source.representatives
        ]
        self.matrix = [
            [image[row] for image in images] for row in range(self.target.dim)
        ]

    @property
    def shape(self):
        """``(target dimension, source dimension)``."""
        return self.target.dim, self.source.dim

    @property
    def rank(self):
        """Rank of the induced map."""
        return linalg.rank(self.matrix)

    def __bool__(self):
        """Tell whether the induced map is nonzero."""
        return any(any(row) for row in self.matrix)

    def __repr__(self):
        """Render the matrix."""
        return "HomologyMap({matrix})".format(
            matrix=[[linalg.format_rational(v) for v in row] for row in self.matrix],
        )


class ConeComplex(Complex):
    """The mapping cone ``D ⊕ C{1}`` of a chain map ``f: C -> D``.

    Target generators get the prefix ``D:``, shifted source generators
    the prefix ``C:``.
    """

    def __init__(self, chain_map):
        """Initialize with differential blocks ``(d_D, -f; 0, -d_C)``."""
        h_shift = chain_map.map.h_shift()
        if h_shift is None:
            raise NotChainMap("cone needs a map homogeneous in h")
        source, target = chain_map.source, chain_map.target
        space = GradedSpace(
            target.space.relabelled("D:").generators
            + source.space.relabelled("C:", h=1 + h_shift).generators,
        )
        entries = [
            ("D:" + src, "D:" + tgt, coeff)
            for src, tgt, coeff in target.differential.entries
        ]
        entries.extend(
            ("C:" + src, "D:" + tgt, -coeff)
            for src, tgt, coeff in chain_map.map.entries
        )
        entries.extend(
            ("C:" + src, "C:" + tgt, -coeff)
            for src, tgt, coeff in source.differential.entries
        )
        super().__init__(space, GradedMap(space, space, entries))
        self.chain_map = chain_map


def mapping_cone(chain_map):
    """Return the :py:class:`ConeComplex` of ``chain_map``.

    >>> space = GradedSpace([('x', (0, 0))])
    >>> identity = ChainMap(Complex(space), Complex(space), GradedMap.identity(space))
    >>> mapping_cone(identity).homology().dim
    0
    """
    return ConeComplex(chain_map)
