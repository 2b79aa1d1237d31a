"""
Root systems of types A-G up to rank 8.

Simple roots live in the standard Euclidean models (Bourbaki numbering), with
exact rational coordinates. Positive roots are generated by simple-root
strings and kept in the order (height, then lexicographic on simple-root
coefficients with the first simple root first). The normalized product
scales the Euclidean one so that the highest root has square length 2.
"""

from __future__ import absolute_import, division

import logging
from collections import namedtuple
from fractions import Fraction

from typechecks import require_integer, require_string

from .errors import DimensionMismatch, InvalidType, NonDominantWeight
from .exact import ExactMatrix, ONE, ZERO, inverse

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

DUAL_COXETER = {
    "E": {6: 12, 7: 18, 8: 30},
    "F": {4: 9},
    "G": {2: 4},
}

ROOT_SYSTEM_CACHE = {}


def valid_type(family, rank):
    if family == "A":
        return 1 <= rank <= 8
    if family in ("B", "C"):
        return 2 <= rank <= 8
    if family == "D":
        return 4 <= rank <= 8
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


def dual_coxeter_number(family, rank):
    if family == "A":
        return rank + 1
    if family == "B":
        return 2 * rank - 1
    if family == "C":
        return rank + 1
    if family == "D":
        return 2 * rank - 2
    return DUAL_COXETER[family][rank]


def algebra_dimension(family, rank):
    n = rank
    if family == "A":
        return n * (n + 2)
    if family in ("B", "C"):
        return n * (2 * n + 1)
    if family == "D":
        return n * (2 * n - 1)
    return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248,
            ("F", 4): 52, ("G", 2): 14}[(family, rank)]


def parse_type(label):
    """'E7' -> ('E', 7)."""
    require_string(label, "type label")
    label = label.strip().upper()
    try:
        family, rank = label[0], int(label[1:])
    except (IndexError, ValueError):
        raise InvalidType("Cannot parse type label %r" % label)
    if not valid_type(family, rank):
        raise InvalidType("%s%d is not a supported simple type" % (
            family, rank))
    return family, rank


def _unit(n, i, value=ONE):
    v = [ZERO] * n
    v[i] = value
    return v


def _difference(n, i, j):
    v = [ZERO] * n
    v[i] = ONE
    v[j] = -ONE
    return v


def _e8_simple_roots():
    first = [HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF]
    second = [ONE, ONE] + [ZERO] * 6
    rest = [_difference(8, i + 1, i) for i in range(6)]
    return [first, second] + rest


def euclidean_simple_roots(family, rank):
    n = rank
    if family == "A":
        return [_difference(n + 1, i, i + 1) for i in range(n)]
    if family in ("B", "C", "D"):
        chain = [_difference(n, i, i + 1) for i in range(n - 1)]
        if family == "B":
            last = _unit(n, n - 1)
        elif family == "C":
            last = _unit(n, n - 1, Fraction(2))
        else:
            last = [ZERO] * n
            last[n - 2] = ONE
            last[n - 1] = ONE
        return chain + [last]
    if family == "E":
        return _e8_simple_roots()[:rank]
    if family == "F":
        return [
            [ZERO, ONE, -ONE, ZERO],
            [ZERO, ZERO, ONE, -ONE],
            [ZERO, ZERO, ZERO, ONE],
            [HALF, -HALF, -HALF, -HALF],
        ]
    if family == "G":
        return [
            [ONE, -ONE, ZERO],
            [Fraction(-2), ONE, ONE],
        ]
    raise InvalidType("Unknown family %r" % family)


def dot(u, v):
    return sum((a * b for (a, b) in zip(u, v)), ZERO)


class Weight(namedtuple("Weight", ["coords"])):
    """Integral weight in the fundamental-weight basis (Dynkin labels)."""
    __slots__ = ()

    def __new__(cls, coords):
        return super(Weight, cls).__new__(cls, tuple(int(c) for c in coords))

    def is_dominant(self):
        return all(c >= 0 for c in self.coords)


class RootSystem(object):
    """
    A reduced irreducible root system with its Euclidean model.

    Attributes
    ----------
    family, rank
    simple_roots : list of tuples of Fraction
    positive_coefficients : list of integer tuples (simple-root coordinates)
    positive_roots : list of Euclidean tuples, same order
    cartan_matrix : list of lists, entry [i][j] = <alpha_i, alpha_j^vee>
    highest_root, weyl_vector, fundamental_weights
    dual_coxeter : int
    """

    def __init__(self, family, rank):
        if not valid_type(family, rank):
            raise InvalidType(
                "%s%s is not a valid simple type of rank <= 8" % (
                    family, rank))
        self.family = family
        self.rank = rank
        self.simple_roots = [
            tuple(r) for r in euclidean_simple_roots(family, rank)]
        self.euclidean_dim = len(self.simple_roots[0])
        self.cartan_matrix = [
            [int(2 * dot(a, b) / dot(b, b)) for b in self.simple_roots]
            for a in self.simple_roots]
        self.positive_coefficients = self._generate_positive()
        self.positive_roots = [
            self.to_euclidean(c) for c in self.positive_coefficients]
        self.coefficient_index = dict(
            (c, i) for (i, c) in enumerate(self.positive_coefficients))
        self.highest_coefficients = self.positive_coefficients[-1]
        self.highest_root = self.positive_roots[-1]
        self.scale = 2 / dot(self.highest_root, self.highest_root)
        self.weyl_vector = tuple(
            HALF * sum((r[k] for r in self.positive_roots), ZERO)
            for k in range(self.euclidean_dim))
        self.fundamental_weights = self._fundamental_weights()
        self.dual_coxeter = dual_coxeter_number(family, rank)

    def __repr__(self):
        return "RootSystem(%s%d)" % (self.family, self.rank)

    @property
    def label(self):
        return "%s%d" % (self.family, self.rank)

    @property
    def dimension(self):
        return 2 * len(self.positive_roots) + self.rank

    def to_euclidean(self, coefficients):
        return tuple(
            sum((c * r[k] for (c, r) in zip(coefficients, self.simple_roots)),
                ZERO)
            for k in range(self.euclidean_dim))

    def pairing(self, coefficients, i):
        """<beta, alpha_i^vee> for beta given by simple-root coefficients."""
        return sum(c * self.cartan_matrix[j][i]
                   for (j, c) in enumerate(coefficients))

    def normalized_product(self, u, v):
        return self.scale * dot(u, v)

    def length_squared(self, coefficients):
        v = self.to_euclidean(coefficients)
        return self.normalized_product(v, v)

    def is_long(self, coefficients):
        return self.length_squared(coefficients) == 2

    def is_root(self, coefficients):
        coefficients = tuple(coefficients)
        if coefficients in self.coefficient_index:
            return True
        return tuple(-c for c in coefficients) in self.coefficient_index

    def roots(self):
        """All roots as coefficient tuples: positive ones, then negatives."""
        return list(self.positive_coefficients) + [
            tuple(-c for c in r) for r in self.positive_coefficients]

    def height(self, coefficients):
        return sum(coefficients)

    def coroot_coefficients(self, coefficients):
        """beta^vee in the basis of simple coroots."""
        norm = self.length_squared(coefficients)
        return tuple(
            int(c * self.length_squared(_unit_tuple(self.rank, i)) / norm)
            for (i, c) in enumerate(coefficients))

    def _generate_positive(self):
        simple = [_unit_tuple(self.rank, i) for i in range(self.rank)]
        known = set(simple)
        layer = list(simple)
        ordered = list(simple)
        while layer:
            following = set()
            for beta in layer:
                for i in range(self.rank):
                    p = 0
                    lowered = list(beta)
                    while True:
                        lowered[i] -= 1
                        if tuple(lowered) in known:
                            p += 1
                        else:
                            break
                    q = p - self.pairing(beta, i)
                    if q > 0:
                        raised = list(beta)
                        raised[i] += 1
                        following.add(tuple(raised))
            layer = sorted(following - known, key=_order_key)
            known.update(layer)
            ordered.extend(layer)
        return sorted(ordered, key=_order_key)

    def _fundamental_weights(self):
        cartan = ExactMatrix(self.cartan_matrix)
        coefficients = inverse(cartan)
        return [
            tuple(sum((coefficients[i, k] * self.simple_roots[k][d]
                       for k in range(self.rank)), ZERO)
                  for d in range(self.euclidean_dim))
            for i in range(self.rank)]

    def weight_vector(self, weight):
        weight = as_weight(weight, self.rank)
        return tuple(
            sum((c * w[d] for (c, w) in zip(weight.coords,
                                            self.fundamental_weights)), ZERO)
            for d in range(self.euclidean_dim))

    def fundamental_weight(self, i):
        """Weight with a single 1 at node i (1-based, Bourbaki)."""
        coords = [0] * self.rank
        coords[i - 1] = 1
        return Weight(coords)

    def adjoint_weight(self):
        return Weight([self.pairing(self.highest_coefficients, i)
                       for i in range(self.rank)])


def _unit_tuple(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def _order_key(coefficients):
    return (sum(coefficients), tuple(-c for c in coefficients))


def as_weight(weight, rank):
    if not isinstance(weight, Weight):
        weight = Weight(weight)
    if len(weight.coords) != rank:
        raise DimensionMismatch(
            "Weight %s has the wrong length for rank %d" % (
                weight.coords, rank))
    return weight


def build_root_system(family, rank):
    """
    Root system of the given type, memoized.

    Parameters
    ----------
    family : one of "A".."G"
    rank : int, at most 8
    """
    require_string(family, "family")
    require_integer(rank, "rank")
    key = (family.upper(), rank)
    if key not in ROOT_SYSTEM_CACHE:
        ROOT_SYSTEM_CACHE[key] = RootSystem(*key)
        logger.debug("Built root system %s%d with %d positive roots",
                     key[0], rank,
                     len(ROOT_SYSTEM_CACHE[key].positive_roots))
    return ROOT_SYSTEM_CACHE[key]


def _require_dominant(rs, weight):
    weight = as_weight(weight, rs.rank)
    if not weight.is_dominant():
        raise NonDominantWeight(
            "Weight %s is not dominant" % (weight.coords,))
    return weight


def weyl_dimension(rs, weight):
    """Dimension of the irreducible module with the given highest weight."""
    weight = _require_dominant(rs, weight)
    shifted = [a + b for (a, b) in zip(rs.weight_vector(weight),
                                        rs.weyl_vector)]
    result = ONE
    for alpha in rs.positive_roots:
        result *= dot(shifted, alpha) / dot(rs.weyl_vector, alpha)
    if result.denominator != 1:
        raise ArithmeticError("Weyl dimension %s is not an integer" % result)
    return int(result)


def casimir_pairing(rs, weight):
    """(Lambda, Lambda + 2 rho) under the normalized product."""
    weight = _require_dominant(rs, weight)
    lam = rs.weight_vector(weight)
    shifted = [a + 2 * b for (a, b) in zip(lam, rs.weyl_vector)]
    return rs.normalized_product(lam, shifted)
