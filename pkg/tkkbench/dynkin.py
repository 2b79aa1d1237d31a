"""
Dynkin indices of representations and embeddings, module weights and
isotypic decompositions.

The normalized invariant form gives long coroots square length 2; on a
simple algebra it is the Killing form divided by twice the dual Coxeter
number.
"""

from __future__ import absolute_import, division

import logging
from collections import Counter, namedtuple
from fractions import Fraction

from .cartan import joint_eigenspaces, root_decomposition
from .errors import DimensionMismatch, IdentificationFailure
from .exact import (
    ExactMatrix, ONE, Subspace, ZERO, axpy, combine, inverse, kernel_vectors,
    scale, sparse_kernel)
from .rootsys import (
    casimir_pairing, dual_coxeter_number, weyl_dimension)

logger = logging.getLogger(__name__)


def rep_dynkin_index(rs, weight):
    """dim(V) (Lambda, Lambda + 2 rho) / dim(g); the adjoint gives 2 h^vee."""
    dim = weyl_dimension(rs, weight)
    return Fraction(dim) * casimir_pairing(rs, weight) / rs.dimension


def _highest_root(data, component):
    nodes = set(component)
    candidates = [w for w in data.positive
                  if all(c == 0 or i in nodes
                         for (i, c) in enumerate(data.coefficients[w]))]
    return max(candidates, key=lambda w: (sum(data.coefficients[w]), w))


def long_coroot(algebra, data, component):
    """Coroot of the highest root of one simple component."""
    theta = _highest_root(data, component)
    frame = data.frame
    e = frame.roots[theta]
    f = frame.roots[tuple(-v for v in theta)]
    h = algebra.bracket(e, f)
    image = algebra.bracket(h, e)
    pivot = min(e)
    return scale(2 * e[pivot] / image[pivot], h)


class NormalizedForm(object):
    """
    Normalized invariant form of a simple Lie algebra:
    value(x, y) = factor * kappa(x, y) with factor = 2 / kappa(h, h) for a
    long coroot h.
    """

    def __init__(self, algebra, data=None):
        if data is None:
            data = root_decomposition(algebra)
        if len(data.labels) != 1 or data.center_dim:
            raise IdentificationFailure(
                "Normalized form needs a simple algebra, got %s" % (
                    data.labels,))
        self.algebra = algebra
        self.data = data
        self.label = data.labels[0]
        h = long_coroot(algebra, data, data.components[0])
        self.factor = 2 / algebra.killing_value(h, h)
        expected = Fraction(1, 2 * dual_coxeter_number(*self.label))
        if self.factor != expected:
            raise IdentificationFailure(
                "Normalization %s of %s disagrees with 1/(2 h^vee) = %s" % (
                    self.factor, self.label, expected))
        logger.debug("Normalized form of %s%d: factor %s",
                     self.label[0], self.label[1], self.factor)

    def value(self, x, y):
        return self.factor * self.algebra.killing_value(x, y)


def _probe_elements(algebra, data):
    frame = data.frame
    h = long_coroot(algebra, data, data.components[0])
    theta = _highest_root(data, data.components[0])
    e = frame.roots[theta]
    f = frame.roots[tuple(-v for v in theta)]
    mixed = dict(h)
    for simple in data.simple:
        axpy(mixed, ONE, frame.roots[simple])
        axpy(mixed, ONE, frame.roots[tuple(-v for v in simple)])
    return [h, combine([(ONE, e), (ONE, f)]), mixed]


def embedding_index(sub, source_form=None, target_form=None):
    """
    Dynkin index of a simple subalgebra in a simple algebra, evaluated on
    three elements; raises if they disagree.
    """
    source = source_form or NormalizedForm(sub.induced)
    target = target_form or NormalizedForm(sub.parent)
    values = set()
    for x in _probe_elements(sub.induced, source.data):
        norm = source.value(x, x)
        if norm == 0:
            continue
        image = sub.embed(x)
        values.add(target.value(image, image) / norm)
    if len(values) != 1:
        raise IdentificationFailure(
            "Embedding index is not well defined: %s" % sorted(values))
    return values.pop()


def simple_ideals(algebra, data):
    """Ideal of each simple component (component order) and the center."""
    frame = data.frame
    ideals = []
    for nodes in data.components:
        nodes = set(nodes)
        vectors = []
        for w in data.positive:
            if any(data.coefficients[w][i] for i in nodes):
                vectors.append(frame.roots[w])
                vectors.append(frame.roots[tuple(-v for v in w)])
        vectors.extend(data.coroots[i] for i in sorted(nodes))
        ideals.append(Subspace.span(algebra.dim, vectors))
    # center: Cartan elements on which every root vanishes
    cartan = frame.cartan
    relations = [list(w) for w in data.simple]
    center = []
    if cartan:
        matrix = ExactMatrix(relations, rows=len(relations),
                             cols=len(cartan)) if relations else None
        kernel = kernel_vectors(matrix) if matrix is not None else \
            [{k: ONE} for k in range(len(cartan))]
        for coefficients in kernel:
            center.append(combine(
                (c, cartan[k]) for (k, c) in coefficients.items()))
    return ideals, Subspace.span(algebra.dim, center)


class Projector(object):
    """Projection onto the summands of a direct sum decomposition."""

    def __init__(self, dim, spaces):
        self.dim = dim
        self.sizes = [s.dim for s in spaces]
        vectors = []
        for s in spaces:
            vectors.extend(s.vectors())
        if len(vectors) != dim:
            raise DimensionMismatch(
                "Summands have total dimension %d, expected %d" % (
                    len(vectors), dim))
        self.vectors = vectors
        self.inverse = inverse(ExactMatrix.from_sparse_columns(vectors, dim))

    def project(self, vector, index):
        coordinates = self.inverse.apply(vector)
        start = sum(self.sizes[:index])
        stop = start + self.sizes[index]
        return combine((c, self.vectors[k]) for (k, c) in coordinates.items()
                       if start <= k < stop)


class MultiIndex(namedtuple("MultiIndex", ["matrix", "source", "target"])):
    """
    Dynkin multi-index of an embedding of semisimple algebras: rows are the
    source summands, columns the target summands.
    """
    __slots__ = ()

    def then(self, following):
        """Multi-index of the composite (following after self)."""
        return MultiIndex(self.matrix.matmul(following.matrix),
                          self.source, following.target)


def multi_index(sub, source_data=None, target_data=None):
    source = sub.induced
    target = sub.parent
    source_data = source_data or root_decomposition(source)
    target_data = target_data or root_decomposition(target)
    ideals, center = simple_ideals(target, target_data)
    projector = Projector(target.dim, ideals + [center])
    factors = []
    for (j, nodes) in enumerate(target_data.components):
        h = long_coroot(target, target_data, nodes)
        factors.append(2 / target.killing_value(h, h))
    rows = []
    for nodes in source_data.components:
        x = long_coroot(source, source_data, nodes)
        image = sub.embed(x)
        row = []
        for j in range(len(ideals)):
            part = projector.project(image, j)
            row.append(factors[j] * target.killing_value(part, part) / 2)
        rows.append(row)
    matrix = ExactMatrix(rows, rows=len(rows), cols=len(ideals))
    return MultiIndex(matrix, list(source_data.labels),
                      list(target_data.labels))


class ModuleAction(object):
    """
    Action of a Lie algebra on F^dim: one matrix per basis element of the
    acting algebra.
    """

    def __init__(self, algebra, dim, matrices):
        if len(matrices) != algebra.dim:
            raise DimensionMismatch("Need one matrix per basis element")
        self.algebra = algebra
        self.dim = dim
        self.matrices = matrices

    def matrix(self, x):
        out = ExactMatrix.zeros(self.dim, self.dim)
        for (k, c) in x.items():
            out = out + self.matrices[k] * c
        return out

    def operator(self, x):
        matrix = self.matrix(x)
        return matrix.apply

    def is_representation(self):
        """Check [rho(b_i), rho(b_j)] = rho([b_i, b_j]) on basis pairs."""
        n = self.algebra.dim
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.matrices[i].commutator(self.matrices[j])
                rhs = self.matrix(self.algebra.basis_bracket(i, j))
                if lhs != rhs:
                    return False
        return True


def adjoint_module(ambient, sub, space):
    """
    Action of a subalgebra on an invariant subspace of the ambient algebra,
    in the coordinates of the subspace's echelon basis.
    """
    vectors = space.vectors()
    k = len(vectors)
    matrices = []
    for i in range(sub.dim):
        x = sub.embed({i: ONE})
        columns = []
        for v in vectors:
            image = ambient.bracket(x, v)
            if not space.contains(image):
                raise DimensionMismatch("Subspace is not invariant")
            columns.append(space.coordinates(image))
        matrices.append(
            ExactMatrix(columns, rows=k, cols=k).transpose() if k else
            ExactMatrix.zeros(0, 0))
    return ModuleAction(sub.induced, k, matrices)


def _labels(data, weight):
    return tuple(
        sum((c * w for (c, w) in zip(coefficients, weight)), ZERO)
        for coefficients in data.coroot_coordinates)


def _weight_spaces(action, data):
    operators = [action.operator(t) for t in data.frame.cartan]
    return joint_eigenspaces(operators, Subspace.full(action.dim))


def module_weights(action, data=None):
    """Weights (as Dynkin labels on the simple coroots) with multiplicity."""
    data = data or root_decomposition(action.algebra)
    weights = Counter()
    for (weight, space) in _weight_spaces(action, data).items():
        weights[_labels(data, weight)] += space.dim
    return weights


def module_index(action, data=None, component=0):
    """Dynkin index of a module restricted to one simple component."""
    data = data or root_decomposition(action.algebra)
    h = long_coroot(action.algebra, data, data.components[component])
    square = action.matrix(h).matmul(action.matrix(h))
    return square.trace() / 2


IsotypicComponent = namedtuple("IsotypicComponent", [
    "highest_weight",
    "multiplicity",
    "dimension",
])


def _root_lengths(data):
    k = len(data.simple)
    gram = [[data.cartan_matrix[i][j] * data.lengths[j] / 2
             for j in range(k)] for i in range(k)]

    def length(coefficients):
        return sum((coefficients[i] * coefficients[j] * gram[i][j]
                    for i in range(k) for j in range(k)), ZERO)
    return length


def irreducible_dimension(data, labels):
    """Weyl dimension formula on the root data's own simple system."""
    length = _root_lengths(data)
    result = ONE
    for w in data.positive:
        coefficients = data.coefficients[w]
        norm = length(coefficients)
        dual = [c * data.lengths[i] / norm
                for (i, c) in enumerate(coefficients)]
        top = sum((d * (labels[i] + 1) for (i, d) in enumerate(dual)), ZERO)
        bottom = sum(dual, ZERO)
        result *= top / bottom
    return int(result)


def decompose_isotypic(action, data=None):
    """
    Highest weights of the module with multiplicities; the highest-weight
    vectors of weight mu are the vectors of weight mu killed by every
    simple root vector.
    """
    data = data or root_decomposition(action.algebra)
    raising = [action.matrix(data.frame.roots[w]) for w in data.simple]
    components = []
    for (weight, space) in sorted(_weight_spaces(action, data).items()):
        rows = []
        vectors = space.vectors()
        for matrix in raising:
            columns = [matrix.apply(v) for v in vectors]
            for r in range(action.dim):
                row = dict((k, column[r]) for (k, column) in
                           enumerate(columns) if r in column)
                if row:
                    rows.append(row)
        kernel = sparse_kernel(rows, len(vectors))
        if kernel.dim:
            labels = _labels(data, weight)
            if any(c.denominator != 1 or c < 0 for c in labels):
                raise IdentificationFailure(
                    "Highest weight %s is not dominant integral" % (labels,))
            labels = tuple(int(c) for c in labels)
            components.append(IsotypicComponent(
                labels, kernel.dim, irreducible_dimension(data, labels)))
    total = sum(c.multiplicity * c.dimension for c in components)
    if total != action.dim:
        raise IdentificationFailure(
            "Isotypic components add up to %d, module has %d" % (
                total, action.dim))
    return sorted(components, key=lambda c: (-c.dimension, c.highest_weight))


def dims_of(components):
    """Counter of irreducible dimensions with multiplicity."""
    out = Counter()
    for c in components:
        out[c.dimension] += c.multiplicity
    return out
