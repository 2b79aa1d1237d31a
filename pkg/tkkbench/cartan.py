"""
Split Cartan subalgebras, root decompositions and type identification.
"""

from __future__ import absolute_import, division

import logging
import random
from collections import namedtuple
from fractions import Fraction

import sympy

from .config import get_config
from .errors import IdentificationFailure, SplitCartanFailure
from .exact import (
    ExactMatrix, ONE, SparseEchelon, Subspace, ZERO, char_poly, dense,
    kernel_vectors, scale, solve_linear, sparse, sub)
from .liealg import CartanFrame, centralizer
from .rootsys import algebra_dimension

logger = logging.getLogger(__name__)


class Sl2Triple(namedtuple("Sl2Triple", ["e", "h", "f"])):
    """Elements with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    __slots__ = ()

    def verify(self, algebra):
        return (algebra.bracket(self.h, self.e) == scale(2, self.e) and
                algebra.bracket(self.h, self.f) == scale(-2, self.f) and
                algebra.bracket(self.e, self.f) == self.h)


# Eigenspaces

def rational_roots(coefficients):
    """Rational roots (with multiplicity) of a polynomial, highest first."""
    x = sympy.Symbol("x")
    poly = sympy.Poly.from_list(
        [sympy.Rational(c.numerator, c.denominator) for c in coefficients],
        x, domain=sympy.QQ)
    return dict((Fraction(int(r.p), int(r.q)), m)
                for (r, m) in poly.ground_roots().items())


def rational_factors(coefficients):
    """Distinct monic irreducible factors over Q, each highest first."""
    x = sympy.Symbol("x")
    poly = sympy.Poly.from_list(
        [sympy.Rational(c.numerator, c.denominator) for c in coefficients],
        x, domain=sympy.QQ)
    factors = []
    for (factor, _) in poly.factor_list()[1]:
        monic = factor.monic()
        factors.append([Fraction(int(c.p), int(c.q))
                        for c in monic.all_coeffs()])
    return factors


def _restricted_matrix(operator, space):
    columns = []
    for v in space.vectors():
        image = operator(v)
        if not space.contains(image):
            raise SplitCartanFailure("Subspace is not invariant")
        columns.append(space.coordinates(image))
    k = space.dim
    return ExactMatrix(columns, rows=k, cols=k).transpose()


def _is_diagonal(matrix):
    n = matrix.rows
    for i in range(n):
        for j in range(n):
            if i != j and matrix[i, j] != 0:
                return False
    return True


def _krylov_eigenvalues(matrix, start):
    """Eigenvalues seen by the cyclic subspace of a start vector."""
    k = matrix.rows
    vectors = [start]
    while True:
        image = matrix.apply(vectors[-1])
        basis = ExactMatrix.from_sparse_columns(vectors, k)
        coefficients = solve_linear(basis, dense(image, k))
        if coefficients is not None:
            poly = [ONE] + [-c for c in reversed(coefficients)]
            return rational_roots(poly)
        vectors.append(image)


def eigenspaces(matrix):
    """
    Eigenspaces of a diagonalizable matrix with rational spectrum, as
    (eigenvalue, list of sparse kernel vectors). Raises SplitCartanFailure
    otherwise.
    """
    k = matrix.rows
    if _is_diagonal(matrix):
        groups = {}
        for i in range(k):
            groups.setdefault(matrix[i, i], []).append({i: ONE})
        return sorted(groups.items())
    rng = random.Random(get_config().seed + k)
    values = set()
    found = {}
    for attempt in range(4):
        if attempt == 0:
            start = dict((i, ONE) for i in range(k))
        else:
            start = dict((i, Fraction(rng.randint(1, 97))) for i in range(k))
        for value in _krylov_eigenvalues(matrix, start):
            if value in values:
                continue
            values.add(value)
            shifted = matrix - ExactMatrix.identity(k) * value
            found[value] = kernel_vectors(shifted)
        if sum(len(v) for v in found.values()) == k:
            return sorted(found.items())
    raise SplitCartanFailure(
        "Operator is not diagonalizable over the rationals")


def joint_eigenspaces(operators, space):
    """
    Split an invariant subspace into joint eigenspaces of commuting
    operators (callables on sparse vectors). Keys are tuples of
    eigenvalues, one per operator.
    """
    parts = [((), space)]
    for operator in operators:
        refined = []
        for (weight, part) in parts:
            matrix = _restricted_matrix(operator, part)
            rows = part.rows
            for (value, kernel) in eigenspaces(matrix):
                vectors = [
                    _lift(rows, coordinates) for coordinates in kernel]
                refined.append((weight + (value,),
                                Subspace.span(space.ambient_dim, vectors)))
        parts = refined
    return dict(parts)


def _lift(rows, coordinates):
    out = {}
    for (k, c) in coordinates.items():
        for (i, x) in rows[k].items():
            value = out.get(i, ZERO) + c * x
            if value:
                out[i] = value
            else:
                out.pop(i, None)
    return out


def _ad_operator(algebra, x):
    return lambda v: algebra.bracket(x, v)


def weight_spaces(algebra, toral):
    return joint_eigenspaces(
        [_ad_operator(algebra, t) for t in toral],
        Subspace.full(algebra.dim))


# sl2 completion

def _solve_in_span(columns, rhs, basis, n):
    matrix = ExactMatrix.from_sparse_columns(columns, len(rhs))
    solution = solve_linear(matrix, rhs)
    if solution is None:
        return None
    out = {}
    for (c, b) in zip(solution, basis):
        if c:
            for (i, x) in b.items():
                value = out.get(i, ZERO) + c * x
                if value:
                    out[i] = value
                else:
                    out.pop(i, None)
    return out


def complete_sl2(algebra, e, search=None):
    """
    Complete a nilpotent e to an sl2-triple with h, f in the given search
    spaces (default: the whole algebra). ``search`` may be a pair
    (space for y with h = [e, y], space for f). Returns None on failure.
    """
    n = algebra.dim
    if search is None:
        whole = Subspace.full(n)
        search = (whole, whole)
    y_space, f_space = search
    basis = y_space.vectors()
    columns = [algebra.bracket(algebra.bracket(e, b), e) for b in basis]
    y = _solve_in_span(columns, dense(scale(2, e), n), basis, n)
    if y is None:
        return None
    h = algebra.bracket(e, y)
    if not h:
        return None
    basis = f_space.vectors()
    columns = []
    for b in basis:
        top = algebra.bracket(e, b)
        bottom = algebra.bracket(h, b)
        for (i, x) in b.items():
            bottom[i] = bottom.get(i, ZERO) + 2 * x
        column = dict(top)
        for (i, x) in bottom.items():
            if x:
                column[n + i] = x
        columns.append(column)
    f = _solve_in_span(columns, dense(h, n) + [ZERO] * n, basis, 2 * n)
    if f is None:
        return None
    return Sl2Triple(dict(e), h, f)


# Split Cartan search

def _is_abelian(algebra, space):
    vectors = space.vectors()
    for (a, x) in enumerate(vectors):
        for y in vectors[a + 1:]:
            if algebra.bracket(x, y):
                return False
    return True


def _is_ad_nilpotent(algebra, x):
    images = [{j: ONE} for j in range(algebra.dim)]
    for _ in range(algebra.dim + 1):
        images = [algebra.bracket(x, v) for v in images]
        images = [v for v in images if v]
        if not images:
            return True
    return False


def _is_ad_semisimple(algebra, x):
    try:
        matrix = algebra.ad(x)
        eigenspaces(matrix)
    except SplitCartanFailure:
        return False
    return not matrix.is_zero()


def _candidates(vectors):
    for v in vectors:
        yield v
    for (a, u) in enumerate(vectors):
        for v in vectors[a + 1:]:
            yield dict((k, x) for (k, x) in
                       _add(u, v).items() if x)
            yield sub(u, v)


def _add(u, v):
    out = dict(u)
    for (k, x) in v.items():
        out[k] = out.get(k, ZERO) + x
    return out


def _grow_toral(algebra, toral, budget):
    """A new ad-semisimple element commuting with the toral list."""
    n = algebra.dim
    span = SparseEchelon(n)
    span.extend(toral)
    tried = 0
    if not toral:
        for x in _candidates([{i: ONE} for i in range(n)]):
            if tried >= budget:
                return None
            tried += 1
            if not x:
                continue
            if _is_ad_semisimple(algebra, x):
                return x
            if _is_ad_nilpotent(algebra, x):
                triple = complete_sl2(algebra, x)
                if triple is not None:
                    return triple.h
        return None
    spaces = weight_spaces(algebra, toral)
    for weight in sorted(spaces):
        if all(v == 0 for v in weight):
            continue
        opposite = tuple(-v for v in weight)
        if opposite not in spaces:
            continue
        search = (spaces[opposite], spaces[opposite])
        for e in _candidates(spaces[weight].vectors()):
            if tried >= budget:
                return None
            tried += 1
            if not e:
                continue
            triple = complete_sl2(algebra, e, search)
            if triple is not None and span.reduce(triple.h):
                return triple.h
    return None


def split_cartan(algebra, seeds=None, budget=None):
    """
    Split Cartan subalgebra of a reductive Lie algebra.

    The toral part is grown from the seeds (or the algebra's own seeds) by
    completing root vectors of the current weight decomposition to
    sl2-triples, until the toral part is its own centralizer.
    """
    if algebra.frame is not None:
        return algebra.frame
    if seeds is None:
        seeds = algebra.seeds
    if budget is None:
        budget = get_config().cartan_budget
    n = algebra.dim
    echelon = SparseEchelon(n)
    toral = [dict(s) for s in seeds if echelon.add(s)]
    while True:
        if toral:
            cent = centralizer(algebra, toral)
        else:
            cent = Subspace.full(n)
        if cent.dim == len(toral):
            break
        if _is_abelian(algebra, cent):
            toral = cent.vectors()
            break
        grown = _grow_toral(algebra, toral, budget)
        if grown is None:
            raise SplitCartanFailure(
                "No split Cartan found in %r within budget %d" % (
                    algebra, budget))
        echelon.add(grown)
        toral.append(grown)
        logger.debug("Toral part of %r grown to dimension %d",
                     algebra, len(toral))
    spaces = weight_spaces(algebra, toral)
    roots = {}
    for (weight, space) in spaces.items():
        if all(v == 0 for v in weight):
            if space.dim != len(toral):
                raise SplitCartanFailure("Zero weight space is too large")
            continue
        if space.dim != 1:
            raise SplitCartanFailure(
                "Root space of dimension %d for %s" % (space.dim, weight))
        roots[weight] = space.rows[0]
    return CartanFrame(toral, roots)


# Root data and identification

class TypeLabel(namedtuple("TypeLabel", ["summands", "center_dim"])):
    """Isomorphism type of a reductive algebra: sorted simple summands."""
    __slots__ = ()

    def __new__(cls, summands, center_dim=0):
        return super(TypeLabel, cls).__new__(
            cls, tuple(sorted(tuple(s) for s in summands)), center_dim)

    def __str__(self):
        order = sorted(set(self.summands),
                       key=lambda s: (-algebra_dimension(*s), s))
        parts = []
        for s in order:
            count = self.summands.count(s)
            label = "%s%d" % s
            parts.append(label if count == 1 else "%d%s" % (count, label))
        if self.center_dim:
            parts.append("T%d" % self.center_dim)
        return "+".join(parts) if parts else "0"

    @property
    def dimension(self):
        return sum(algebra_dimension(*s) for s in self.summands) + \
            self.center_dim


def parse_type_label(text):
    """'D4+A1', '3A1', 'E7' -> TypeLabel."""
    summands = []
    center = 0
    for part in text.replace(" ", "").split("+"):
        count = 1
        i = 0
        while i < len(part) and part[i].isdigit():
            i += 1
        if i:
            count = int(part[:i])
        family, rank = part[i].upper(), int(part[i + 1:])
        if family == "T":
            center += rank
        else:
            summands.extend([(family, rank)] * count)
    return TypeLabel(summands, center)


RootData = namedtuple("RootData", [
    "frame",
    "positive",
    "simple",
    "coefficients",
    "cartan_matrix",
    "components",
    "labels",
    "coroots",
    "coroot_coordinates",
    "lengths",
    "center_dim",
])


def _is_positive(weight):
    for v in weight:
        if v != 0:
            return v > 0
    return False


def _plus(a, b):
    return tuple(x + y for (x, y) in zip(a, b))


def _root_string_length(roots, alpha, beta):
    p = 0
    current = _plus(beta, alpha)
    while current in roots:
        p += 1
        current = _plus(current, alpha)
    return p


def _classify(cartan, nodes, lengths):
    k = len(nodes)
    if k == 1:
        return ("A", 1)
    entries = dict(((i, j), cartan[i][j]) for i in nodes for j in nodes)
    degree = dict((i, sum(1 for j in nodes if j != i and entries[(i, j)]))
                  for i in nodes)
    if any(abs(v) == 3 for v in entries.values()):
        return ("G", 2)
    double = [(i, j) for i in nodes for j in nodes
              if entries[(i, j)] == -2]
    if double:
        if k == 2:
            return ("C", 2)
        i, j = double[0]
        if degree[i] == 2 and degree[j] == 2:
            return ("F", 4)
        end = i if degree[i] == 1 else j
        long_end = lengths[end] == max(lengths[n] for n in nodes)
        return ("C", k) if long_end else ("B", k)
    branch = [i for i in nodes if degree[i] == 3]
    if not branch:
        return ("A", k)
    center = branch[0]
    arms = []
    for start in nodes:
        if start == center or not entries[(center, start)]:
            continue
        length, previous, current = 1, center, start
        while True:
            following = [j for j in nodes if j not in (previous, current)
                         and entries[(current, j)]]
            if not following:
                break
            previous, current = current, following[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return ("D", k)
    return {(1, 2, 2): ("E", 6), (1, 2, 3): ("E", 7),
            (1, 2, 4): ("E", 8)}.get(tuple(arms), (None, k))


def root_decomposition(algebra, frame=None):
    """Roots, simple system, Cartan matrix and simple components."""
    if frame is None:
        frame = split_cartan(algebra)
    roots = set(frame.roots)
    r = frame.rank
    positive = sorted(w for w in roots if _is_positive(w))
    sums = set(_plus(a, b) for a in positive for b in positive)
    simple = [w for w in positive if w not in sums]
    k = len(simple)
    cartan = [[2 if i == j else
               -_root_string_length(roots, simple[j], simple[i])
               for j in range(k)] for i in range(k)]
    # simple-root coefficients of every positive root
    matrix = ExactMatrix([list(column) for column in simple],
                         rows=k, cols=r).transpose()
    coefficients = {}
    for w in positive:
        solution = solve_linear(matrix, list(w))
        if solution is None or any(c.denominator != 1 or c < 0
                                   for c in solution):
            raise IdentificationFailure("Root %s is not integral" % (w,))
        coefficients[w] = tuple(int(c) for c in solution)
    coroots, coordinates = [], []
    cartan_basis = ExactMatrix.from_sparse_columns(frame.cartan, algebra.dim)
    for w in simple:
        e, f = frame.roots[w], frame.roots[tuple(-v for v in w)]
        h = algebra.bracket(e, f)
        value = _eigenvalue(algebra, h, e)
        if value == 0:
            raise IdentificationFailure("Degenerate root pair for %s" % (w,))
        h = scale(2 / value, h)
        coroots.append(h)
        coordinates.append(solve_linear(cartan_basis, dense(h, algebra.dim)))
    components = _components(cartan, k)
    lengths = _simple_lengths(cartan, components, k)
    ordered = []
    for nodes in components:
        label = _classify(cartan, nodes, lengths)
        if label[0] is None:
            raise IdentificationFailure("Unrecognized Dynkin diagram")
        count = sum(1 for w in positive
                    if any(coefficients[w][i] for i in nodes))
        if 2 * count + len(nodes) != algebra_dimension(*label):
            raise IdentificationFailure(
                "Component %s%d has %d positive roots" % (
                    label[0], label[1], count))
        first = min(min(frame.roots[simple[i]]) for i in nodes)
        ordered.append((label, first, nodes))
    ordered.sort()
    if 2 * len(positive) + r != algebra.dim:
        raise IdentificationFailure("Root decomposition does not add up")
    return RootData(
        frame=frame,
        positive=positive,
        simple=simple,
        coefficients=coefficients,
        cartan_matrix=cartan,
        components=[nodes for (_, _, nodes) in ordered],
        labels=[label for (label, _, _) in ordered],
        coroots=coroots,
        coroot_coordinates=coordinates,
        lengths=lengths,
        center_dim=r - k)


def _eigenvalue(algebra, h, e):
    image = algebra.bracket(h, e)
    pivot = min(e)
    return image.get(pivot, ZERO) / e[pivot]


def _components(cartan, k):
    seen = set()
    out = []
    for start in range(k):
        if start in seen:
            continue
        stack, nodes = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            nodes.append(i)
            for j in range(k):
                if j not in seen and cartan[i][j]:
                    seen.add(j)
                    stack.append(j)
        out.append(sorted(nodes))
    return out


def _simple_lengths(cartan, components, k):
    """Squared lengths of simple roots, longest 2 in each component."""
    lengths = [None] * k
    for nodes in components:
        lengths[nodes[0]] = ONE
        stack = [nodes[0]]
        while stack:
            i = stack.pop()
            for j in nodes:
                if lengths[j] is None and cartan[i][j]:
                    lengths[j] = lengths[i] * cartan[j][i] / cartan[i][j]
                    stack.append(j)
        top = max(lengths[i] for i in nodes)
        for i in nodes:
            lengths[i] = 2 * lengths[i] / top
    return lengths


def identify_type(algebra, frame=None):
    data = root_decomposition(algebra, frame)
    label = TypeLabel(data.labels, data.center_dim)
    logger.info("Identified %r as %s", algebra, label)
    return label


def generic_rank_estimate(algebra, max_samples=6):
    """
    Rank as the minimum multiplicity of eigenvalue 0 of ad x over
    pseudo-random x; stable when two consecutive samples agree.
    """
    rng = random.Random(get_config().seed)
    n = algebra.dim
    best, previous = None, None
    for _ in range(max_samples):
        x = dict((i, Fraction(rng.randint(-9, 9))) for i in range(n))
        x = sparse(dense(x, n))
        coefficients = char_poly(algebra.ad(x))
        zeros = 0
        for c in reversed(coefficients):
            if c != 0:
                break
            zeros += 1
        best = zeros if best is None else min(best, zeros)
        if zeros == previous:
            return best, True
        previous = zeros
    return best, False


def generic_rank(algebra):
    return generic_rank_estimate(algebra)[0]
