"""Exact linear algebra over the rationals.

Vectors are sparse mappings from an index to a
:py:class:`~fractions.Fraction`; matrices are sequences of such rows.
Elimination runs on sympy's :py:class:`DomainMatrix` over ``QQ`` and
nothing here ever touches floating point.

.. spelling::

   rref
"""

import re
from collections.abc import Mapping
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text):
    """Convert ``"p/q"`` or ``"p"`` (or an int) into a reduced Fraction.

    >>> parse_rational('-6/4')
    Fraction(-3, 2)
    >>> parse_rational(7)
    Fraction(7, 1)

    Raises:
        ValueError: when ``text`` is not an exact rational literal

    """
    if isinstance(text, bool):
        raise ValueError("booleans are not rational coefficients")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(
            "expected a 'p/q' string, got {kind}".format(
                kind=type(text).__name__,
            ),
        )
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError("{text!r} is not of the form 'p/q'".format(text=text))
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ValueError("{text!r} has a zero denominator".format(text=text))
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value):
    """Render a rational as ``"p/q"``, or ``"p"`` when it is integral.

    >>> format_rational(Fraction(3, -6))
    '-1/2'
    >>> format_rational(4)
    '4'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{num}/{den}".format(num=value.numerator, den=value.denominator)


def format_half(doubled):
    """Render a doubled grading as an exact half.

    >>> format_half(-3)
    '-3/2'
    >>> format_half(4)
    '2'
    """
    return format_rational(Fraction(doubled, 2))


def halve(doubled):
    """Return the grading stored doubled in ``doubled``."""
    return Fraction(doubled, 2)


def double(value):
    """Return twice ``value``, which must be an integer or a half-integer.

    >>> double(Fraction(-3, 2))
    -3
    >>> double('1/2')
    1

    Raises:
        ValueError: when ``value`` is not a half-integer

    """
    if isinstance(value, str):
        value = parse_rational(value)
    doubled = Fraction(value) * 2
    if doubled.denominator != 1:
        raise ValueError(
            "{value} is not an integer or a half-integer".format(value=value),
        )
    return doubled.numerator


def as_vector(row):
    """Return ``row`` as a sparse ``{index: Fraction}`` mapping without zeros.

    Both mappings and dense sequences are accepted.
    """
    items = row.items() if isinstance(row, Mapping) else enumerate(row)
    return {index: Fraction(value) for index, value in items if value}


def combine(*terms):
    """Return the linear combination of ``(coefficient, vector)`` pairs."""
    total = {}
    for coeff, vector in terms:
        if not coeff:
            continue
        for index, value in vector.items():
            total[index] = total.get(index, 0) + coeff * value
    return {index: value for index, value in total.items() if value}


def _to_domain(value):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_domain(element):
    return Fraction(int(element.numerator), int(element.denominator))


def _domain_matrix(vectors, columns):
    """Pack sparse ``vectors`` into a sparse :py:class:`DomainMatrix` over QQ."""
    position = {col: index for index, col in enumerate(columns)}
    entries = {
        number: {position[col]: _to_domain(value) for col, value in vector.items()}
        for number, vector in enumerate(vectors)
        if vector
    }
    return DomainMatrix(entries, (len(vectors), len(position)), QQ)


def _sparse_rows(matrix, columns):
    rep = matrix.to_sparse().rep
    return [
        {
            columns[col]: _from_domain(value)
            for col, value in sorted(rep[number].items())
            if value
        }
        for number in sorted(rep)
        if rep[number]
    ]


def _nonzero(rows):
    return [vector for vector in map(as_vector, rows) if vector]


def rank(rows):
    """Return the exact rank of the matrix whose rows are ``rows``.

    >>> rank([[1, 2], [2, 4]])
    1
    >>> rank([])
    0
    """
    vectors = _nonzero(rows)
    if not vectors:
        return 0
    columns = sorted(set().union(*vectors))
    return _domain_matrix(vectors, columns).rank()


def rref(rows):
    """Return ``(reduced_rows, pivots)`` of the reduced row echelon form.

    >>> reduced, pivots = rref([[0, 2, 4], [1, 1, 1]])
    >>> pivots
    [0, 1]
    >>> reduced[1]
    {1: Fraction(1, 1), 2: Fraction(2, 1)}
    """
    vectors = _nonzero(rows)
    if not vectors:
        return [], []
    columns = sorted(set().union(*vectors))
    reduced, pivots = _domain_matrix(vectors, columns).rref()
    return _sparse_rows(reduced, columns), [columns[pivot] for pivot in pivots]


def nullspace(rows, columns):
    """Return a basis of the kernel of the matrix ``rows``.

    Args:
        rows (list): sparse or dense rows of the matrix
        columns (iterable): indices of all columns, free ones included

    Returns:
        list: one sparse vector per free column, in column order, equal
        to one on its own free column and zero on the others

    >>> nullspace([[1, -1, 0]], range(3))
    [{0: Fraction(1, 1), 1: Fraction(1, 1)}, {2: Fraction(1, 1)}]
    """
    columns = list(columns)
    vectors = _nonzero(rows)
    if not vectors:
        return [{col: Fraction(1)} for col in columns]
    matrix = _domain_matrix(vectors, columns)
    _reduced, pivots = matrix.rref()
    pivots = set(pivots)
    free = [index for index in range(len(columns)) if index not in pivots]
    if not free:
        return []
    kernel = matrix.nullspace().to_sparse()
    # NOTE: the free block of the kernel is invertible
    square = kernel.extract(list(range(len(free))), free).to_dense()
    normal = square.inv().to_sparse() * kernel
    return [dict(sorted(vector.items())) for vector in _sparse_rows(normal, columns)]


class EchelonBasis:
    """Reduced row echelon basis of a growing span.

    Every added vector is remembered by its insertion number. The
    elimination of the accepted vectors, tagged with their numbers, gives
    each reduced row together with its expression in terms of the
    originals, so that membership tests also yield coordinates.

    >>> basis = EchelonBasis()
    >>> basis.add({0: 1, 1: 1})
    True
    >>> basis.add({0: 2, 1: 2})
    False
    >>> basis.coordinates({0: 3, 1: 3})
    {0: Fraction(3, 1)}
    """

    def __init__(self, vectors=()):
        """Initialize, adding ``vectors`` in order."""
        self._originals = []
        self._rows = {}
        self._stale = False
        self._count = 0
        self.accepted = []
        self.extend(vectors)

    def __len__(self):
        """Return the dimension of the span."""
        return len(self._originals)

    def _echelon(self):
        if self._stale:
            tagged = [
                {
                    **{(0, col): value for col, value in original.items()},
                    (1, number): Fraction(1),
                }
                for number, original in zip(self.accepted, self._originals)
            ]
            reduced, pivots = rref(tagged)
            self._rows = {}
            for (_tag, pivot), row in zip(pivots, reduced):
                self._rows[pivot] = (
                    {col: value for (tag, col), value in row.items() if tag == 0},
                    {col: value for (tag, col), value in row.items() if tag == 1},
                )
            self._stale = False
        return self._rows

    @property
    def pivots(self):
        """Pivot columns, ascending."""
        return sorted(self._echelon())

    @property
    def rows(self):
        """Reduced rows ordered by pivot column."""
        rows = self._echelon()
        return [rows[pivot][0] for pivot in sorted(rows)]

    def reduce(self, vector):
        """Split ``vector`` into a residual and a combination of originals.

        Returns:
            tuple: ``(residual, combination)`` with
            ``vector = residual + sum(combination[k] * original_k)``

        """
        rows = self._echelon()
        residual = as_vector(vector)
        combination = {}
        for pivot in sorted(rows):
            coeff = residual.get(pivot)
            if not coeff:
                continue
            row, expression = rows[pivot]
            residual = combine((1, residual), (-coeff, row))
            combination = combine((1, combination), (coeff, expression))
        return residual, combination

    def add(self, vector):
        """Add ``vector``; return whether it enlarged the span."""
        number = self._count
        self._count += 1
        residual, _combination = self.reduce(vector)
        if not residual:
            return False
        self._originals.append(as_vector(vector))
        self.accepted.append(number)
        self._stale = True
        return True

    def extend(self, vectors):
        """Add ``vectors`` in order; return the numbers of those accepted.

        A vector is accepted when it is independent of the span and of the
        vectors accepted before it, that is when its column is a pivot of
        the matrix having all candidates as columns.
        """
        vectors = [as_vector(vector) for vector in vectors]
        known = len(self._originals)
        first = self._count
        self._count += len(vectors)
        transposed = {}
        for number, vector in enumerate(self._originals + vectors):
            for col, value in vector.items():
                transposed.setdefault(col, {})[number] = value
        _reduced, pivots = rref(transposed.values())
        numbers = []
        for pivot in pivots:
            if pivot < known:
                continue
            self._originals.append(vectors[pivot - known])
            numbers.append(first + pivot - known)
        if numbers:
            self.accepted.extend(numbers)
            self._stale = True
        return numbers

    def contains(self, vector):
        """Tell whether ``vector`` lies in the span."""
        residual, _combination = self.reduce(vector)
        return not residual

    def coordinates(self, vector):
        """Return ``vector`` in terms of the added vectors, or ``None``.

        Only vectors that enlarged the span get a nonzero coordinate.
        """
        residual, combination = self.reduce(vector)
        if residual:
            return None
        return combination


def matmul(left, right, width=None):
    """Multiply dense matrices given as lists of rows.

    ``width`` is the column count of the product; it is only needed when
    ``right`` has no rows.

    >>> matmul([[1, 2]], [[3], [4]])
    [[11]]
    """
    inner = len(right)
    if width is None:
        width = len(right[0]) if right else 0
    return [
        [sum(row[k] * right[k][col] for k in range(inner)) for col in range(width)]
        for row in left
    ]
