"""
Exact rational linear algebra.

Scalars are ``fractions.Fraction``. Dense matrices are numpy object arrays of
Fractions wrapped in ExactMatrix. Sparse vectors are plain dicts mapping a
coordinate index to a nonzero Fraction; structure-constant tensors and
subspace bases use them because Chevalley tensors are almost entirely zero.

Elimination is fraction-free Gauss-Jordan over integers (each row is first
scaled to integer entries); the reduced echelon form is recovered by a single
division at the end.
"""

from __future__ import absolute_import, division

import logging
from fractions import Fraction
from math import factorial

import numpy

from .errors import DimensionMismatch, NotNilpotent

logger = logging.getLogger(__name__)

ExactScalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value):
    """Coerce an int, Fraction or "num/den" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_scalar(value):
    value = to_scalar(value)
    return "%d/%d" % (value.numerator, value.denominator)


def lcm(a, b):
    a, b = abs(a), abs(b)
    if a == 0 or b == 0:
        return max(a, b)
    x, y = a, b
    while y:
        x, y = y, x % y
    return a // x * b


# Sparse vectors

def sparse(values):
    """Sparse dict from a dense sequence, dropping zeros."""
    return dict(
        (i, to_scalar(x)) for (i, x) in enumerate(values) if x != 0)


def dense(vector, length):
    out = [ZERO] * length
    for (i, x) in vector.items():
        out[i] = x
    return out


def axpy(target, coefficient, vector):
    """target += coefficient * vector, in place."""
    if coefficient == 0:
        return target
    for (i, x) in vector.items():
        value = target.get(i, ZERO) + coefficient * x
        if value == 0:
            target.pop(i, None)
        else:
            target[i] = value
    return target


def add(u, v):
    return axpy(dict(u), ONE, v)


def sub(u, v):
    return axpy(dict(u), -ONE, v)


def scale(coefficient, vector):
    if coefficient == 0:
        return {}
    return dict((i, coefficient * x) for (i, x) in vector.items())


def combine(terms):
    """Sum of coefficient * vector over (coefficient, vector) pairs."""
    out = {}
    for (coefficient, vector) in terms:
        axpy(out, coefficient, vector)
    return out


def basis_vector(i):
    return {i: ONE}


class ExactMatrix(object):
    """Dense matrix of Fractions (row-major numpy object array)."""

    def __init__(self, entries, rows=None, cols=None):
        if isinstance(entries, numpy.ndarray) and entries.ndim == 2:
            array = entries
        else:
            entries = [list(row) for row in entries]
            if rows is None:
                rows = len(entries)
            if cols is None:
                cols = len(entries[0]) if entries else 0
            array = numpy.empty((rows, cols), dtype=object)
            for (i, row) in enumerate(entries):
                if len(row) != cols:
                    raise DimensionMismatch(
                        "Row %d has %d entries, expected %d" % (
                            i, len(row), cols))
                for (j, x) in enumerate(row):
                    array[i, j] = x
        out = numpy.empty(array.shape, dtype=object)
        for index in numpy.ndindex(array.shape):
            out[index] = to_scalar(array[index])
        self.entries = out

    @classmethod
    def zeros(cls, rows, cols):
        array = numpy.empty((rows, cols), dtype=object)
        array.fill(ZERO)
        return cls(array)

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.entries[i, i] = ONE
        return m

    @classmethod
    def from_sparse_rows(cls, vectors, cols):
        m = cls.zeros(len(vectors), cols)
        for (i, vector) in enumerate(vectors):
            for (j, x) in vector.items():
                m.entries[i, j] = x
        return m

    @classmethod
    def from_sparse_columns(cls, vectors, rows):
        return cls.from_sparse_rows(vectors, rows).transpose()

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @property
    def shape(self):
        return self.entries.shape

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, index):
        return self.entries[index]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.shape == other.shape and
                bool(numpy.all(self.entries == other.entries)))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.shape, tuple(self.entries.flatten())))

    def __repr__(self):
        return "ExactMatrix(%d x %d)" % self.shape

    def __add__(self, other):
        _require_same_shape(self, other)
        return ExactMatrix(self.entries + other.entries)

    def __sub__(self, other):
        _require_same_shape(self, other)
        return ExactMatrix(self.entries - other.entries)

    def __neg__(self):
        return ExactMatrix(-self.entries)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self.matmul(other)
        return ExactMatrix(self.entries * to_scalar(other))

    __rmul__ = __mul__

    def matmul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(
                "Cannot multiply %s by %s" % (self, other))
        if self.cols == 0:
            return ExactMatrix.zeros(self.rows, other.cols)
        return ExactMatrix(numpy.dot(self.entries, other.entries))

    def apply(self, vector):
        """Matrix times a sparse column vector, as a sparse vector."""
        out = {}
        for (j, x) in vector.items():
            column = self.entries[:, j]
            for i in range(self.rows):
                if column[i] != 0:
                    value = out.get(i, ZERO) + column[i] * x
                    if value == 0:
                        out.pop(i, None)
                    else:
                        out[i] = value
        return out

    def transpose(self):
        return ExactMatrix(self.entries.T.copy())

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        return sum((self.entries[i, i] for i in range(min(self.shape))), ZERO)

    def is_zero(self):
        return all(x == 0 for x in self.entries.flat)

    def power(self, k):
        result = ExactMatrix.identity(self.rows)
        for _ in range(k):
            result = result.matmul(self)
        return result

    def commutator(self, other):
        return self.matmul(other) - other.matmul(self)

    def to_lists(self):
        return [list(row) for row in self.entries]

    def sparse_rows(self):
        return [sparse(row) for row in self.entries]

    def sparse_columns(self):
        return [sparse(column) for column in self.entries.T]

    def rank(self):
        return len(rref(self)[1])

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatch("Row counts differ")
        return ExactMatrix(numpy.hstack([self.entries, other.entries]))

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatch("Column counts differ")
        return ExactMatrix(numpy.vstack([self.entries, other.entries]))


def _require_same_shape(a, b):
    if a.shape != b.shape:
        raise DimensionMismatch("Shapes %s and %s differ" % (a.shape, b.shape))


def _integer_rows(matrix):
    rows = []
    for row in matrix.entries:
        denominator = 1
        for x in row:
            denominator = lcm(denominator, x.denominator)
        integer_row = numpy.empty(len(row), dtype=object)
        for (j, x) in enumerate(row):
            integer_row[j] = x.numerator * (denominator // x.denominator)
        rows.append(integer_row)
    return rows


def fraction_free_gauss_jordan(rows, cols):
    """
    Fraction-free Gauss-Jordan elimination of integer rows.

    Every intermediate entry is a minor of the input, so each division by the
    previous pivot is exact. On return all pivot entries equal the common
    denominator ``d``.

    Returns
    -------
    (reduced rows, pivot columns, d)
    """
    a = list(rows)
    m = len(a)
    d = 1
    pivots = []
    i = 0
    for j in range(cols):
        if i == m:
            break
        source = None
        for candidate in range(i, m):
            if a[candidate][j] != 0:
                source = candidate
                break
        if source is None:
            continue
        a[i], a[source] = a[source], a[i]
        p = a[i][j]
        pivot_row = a[i]
        for other in range(m):
            if other == i:
                continue
            c = a[other][j]
            if c == 0:
                a[other] = (p * a[other]) // d
            else:
                a[other] = (p * a[other] - c * pivot_row) // d
        d = p
        pivots.append(j)
        i += 1
    return a[:i], pivots, d


def rref(matrix):
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if matrix.rows == 0 or matrix.cols == 0:
        return ExactMatrix.zeros(0, matrix.cols), []
    reduced, pivots, d = fraction_free_gauss_jordan(
        _integer_rows(matrix), matrix.cols)
    out = numpy.empty((len(reduced), matrix.cols), dtype=object)
    for (i, row) in enumerate(reduced):
        for j in range(matrix.cols):
            out[i, j] = Fraction(row[j], d)
    return ExactMatrix(out), pivots


def kernel_vectors(matrix):
    """Sparse basis of the right kernel read off the reduced echelon form."""
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    vectors = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = {free: ONE}
        for (k, p) in enumerate(pivots):
            x = reduced.entries[k, free]
            if x != 0:
                vector[p] = -x
        vectors.append(vector)
    return vectors


def rref_rank_kernel(matrix):
    """
    Rank, kernel and row space of an exact matrix.

    Returns
    -------
    (rank, kernel Subspace, rowspace Subspace)
    """
    reduced, pivots = rref(matrix)
    kernel = Subspace.span(matrix.cols, kernel_vectors(matrix))
    rowspace = Subspace(matrix.cols, reduced.sparse_rows(), pivots=pivots)
    return len(pivots), kernel, rowspace


def solve_linear(matrix, rhs):
    """
    Solve matrix . x = rhs exactly.

    Returns None when the system is inconsistent, otherwise the solution with
    every free variable set to zero (as a dense list).
    """
    rhs = [to_scalar(x) for x in rhs]
    if len(rhs) != matrix.rows:
        raise DimensionMismatch(
            "Right-hand side has length %d, matrix has %d rows" % (
                len(rhs), matrix.rows))
    column = ExactMatrix([[x] for x in rhs], rows=len(rhs), cols=1)
    augmented = matrix.hstack(column)
    reduced, pivots = rref(augmented)
    if matrix.cols in pivots:
        return None
    x = [ZERO] * matrix.cols
    for (k, p) in enumerate(pivots):
        x[p] = reduced.entries[k, matrix.cols]
    return x


def inverse(matrix):
    if not matrix.is_square():
        raise DimensionMismatch("Only square matrices can be inverted")
    n = matrix.rows
    reduced, pivots = rref(matrix.hstack(ExactMatrix.identity(n)))
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("Matrix is singular")
    return ExactMatrix(reduced.entries[:n, n:].copy())


def char_poly(matrix):
    """
    Monic characteristic polynomial det(x I - M).

    Uses reduction to upper Hessenberg form by elementary similarities.
    Coefficients are returned highest degree first.
    """
    if not matrix.is_square():
        raise DimensionMismatch("char_poly needs a square matrix")
    n = matrix.rows
    h = matrix.entries.copy()
    for m in range(1, n - 1):
        source = None
        for i in range(m, n):
            if h[i, m - 1] != 0:
                source = i
                break
        if source is None:
            continue
        if source != m:
            h[[source, m], :] = h[[m, source], :]
            h[:, [source, m]] = h[:, [m, source]]
        t = h[m, m - 1]
        for i in range(m + 1, n):
            u = h[i, m - 1] / t
            if u != 0:
                h[i, :] = h[i, :] - u * h[m, :]
                h[:, m] = h[:, m] + u * h[:, i]
    # polynomials are kept lowest degree first while recurring
    polys = [[ONE]]
    for m in range(1, n + 1):
        previous = polys[m - 1]
        current = [ZERO] + list(previous)
        for (k, c) in enumerate(previous):
            current[k] -= h[m - 1, m - 1] * c
        t = ONE
        for i in range(1, m):
            t = t * h[m - i, m - i - 1]
            if t == 0:
                break
            factor = t * h[m - i - 1, m - 1]
            if factor != 0:
                for (k, c) in enumerate(polys[m - i - 1]):
                    current[k] -= factor * c
        polys.append(current)
    return list(reversed(polys[n]))


def polynomial_at(coefficients, matrix):
    """p(M) by Horner's rule, coefficients highest degree first."""
    if not matrix.is_square():
        raise DimensionMismatch("polynomial_at needs a square matrix")
    n = matrix.rows
    result = ExactMatrix.zeros(n, n)
    identity = ExactMatrix.identity(n)
    for c in coefficients:
        result = result.matmul(matrix) + identity * c
    return result


def exp_nilpotent(matrix):
    """exp(N) = sum N^i / i! for a nilpotent N; raises NotNilpotent."""
    if not matrix.is_square():
        raise DimensionMismatch("exp_nilpotent needs a square matrix")
    n = matrix.rows
    result = ExactMatrix.identity(n)
    term = ExactMatrix.identity(n)
    for i in range(1, n + 1):
        term = term.matmul(matrix)
        if term.is_zero():
            return result
        result = result + term * Fraction(1, factorial(i))
    if n == 0 or term.is_zero():
        return result
    raise NotNilpotent("Matrix is not nilpotent within %d steps" % n)


class SparseEchelon(object):
    """
    Incrementally built reduced echelon basis over sparse rows.

    Every stored row has a leading 1 at its pivot and zeros at all other
    pivots, so the final basis is the canonical reduced echelon form of the
    span regardless of insertion order.
    """

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vector):
        residual = dict(vector)
        for p in [p for p in residual if p in self.rows]:
            c = residual.get(p)
            if c:
                axpy(residual, -c, self.rows[p])
        return residual

    def add(self, vector):
        """Insert a vector; return True when it enlarged the span."""
        residual = self.reduce(vector)
        if not residual:
            return False
        pivot = min(residual)
        residual = scale(ONE / residual[pivot], residual)
        for row in self.rows.values():
            c = row.get(pivot)
            if c:
                axpy(row, -c, residual)
        self.rows[pivot] = residual
        return True

    def extend(self, vectors):
        added = 0
        for vector in vectors:
            if self.add(vector):
                added += 1
        return added

    def subspace(self):
        pivots = sorted(self.rows)
        return Subspace(
            self.ambient_dim, [self.rows[p] for p in pivots], pivots=pivots)


class Subspace(object):
    """
    A subspace of F^n held by its reduced echelon basis.

    Two Subspaces are equal iff their echelon bases coincide.
    """

    def __init__(self, ambient_dim, rows, pivots=None):
        self.ambient_dim = ambient_dim
        self.rows = tuple(dict(row) for row in rows)
        if pivots is None:
            pivots = [min(row) for row in self.rows]
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, ambient_dim, vectors):
        echelon = SparseEchelon(ambient_dim)
        echelon.extend(vectors)
        return echelon.subspace()

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, [{i: ONE} for i in range(ambient_dim)])

    @property
    def dim(self):
        return len(self.rows)

    @property
    def basis(self):
        return ExactMatrix.from_sparse_rows(self.rows, self.ambient_dim)

    def vectors(self):
        return [dict(row) for row in self.rows]

    def echelon(self):
        echelon = SparseEchelon(self.ambient_dim)
        for (p, row) in zip(self.pivots, self.rows):
            echelon.rows[p] = dict(row)
        return echelon

    def reduce(self, vector):
        """Residual of a vector after elimination against the basis."""
        return self.echelon().reduce(vector)

    def contains(self, vector):
        return not self.reduce(vector)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.rows)

    def coordinates(self, vector):
        """Coordinates of a member vector: its entries at the pivots."""
        return [vector.get(p, ZERO) for p in self.pivots]

    def element(self, coordinates):
        return combine(zip(coordinates, self.rows))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and
                self.pivots == other.pivots and self.rows == other.rows)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots,
                     tuple(tuple(sorted(r.items())) for r in self.rows)))

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)


def subspace_meet_join(u, v):
    """Intersection and sum of two subspaces of the same ambient space."""
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatch(
            "Ambient dimensions %d and %d differ" % (
                u.ambient_dim, v.ambient_dim))
    n = u.ambient_dim
    join = Subspace.span(n, list(u.rows) + list(v.rows))
    if v.dim == 0 or u.dim == 0:
        return Subspace.zero(n), join
    echelon = u.echelon()
    residuals = [echelon.reduce(row) for row in v.rows]
    relations = kernel_vectors(
        ExactMatrix.from_sparse_columns(residuals, n))
    meet = Subspace.span(
        n, [combine((c, v.rows[j]) for (j, c) in b.items())
            for b in relations])
    if meet.dim + join.dim != u.dim + v.dim:
        raise DimensionMismatch("Meet/join dimension identity violated")
    return meet, join


def sparse_kernel(rows, ambient_dim):
    """Kernel of the map x -> (r . x) for sparse rows r, as a Subspace."""
    echelon = SparseEchelon(ambient_dim)
    echelon.extend(rows)
    vectors = []
    for free in range(ambient_dim):
        if free in echelon.rows:
            continue
        vector = {free: ONE}
        for (p, row) in echelon.rows.items():
            x = row.get(free)
            if x:
                vector[p] = -x
        vectors.append(vector)
    return Subspace.span(ambient_dim, vectors)
