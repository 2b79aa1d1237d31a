"""
Ternary algebras with a bilinear form: the product xyz and the form <x, y>.

Axioms checked (for all x, y, z, v, w):

    xyz - yxz = <x, y> z
    xyz - xzy = <y, z> x
    (xyz)vw = (xvw)yz + x(yvw)z + xy(zwv)
"""

from __future__ import absolute_import, division

import logging
import random
from collections import namedtuple
from fractions import Fraction
from itertools import product

from typechecks import require_integer

from .cartan import rational_factors
from .config import get_config
from .errors import DimensionMismatch
from .exact import (
    ExactMatrix, ONE, SparseEchelon, ZERO, axpy, char_poly, combine,
    kernel_vectors, polynomial_at, sub)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class TernaryAlgebra(object):
    """
    Product tensor ``product[(a, b, c)]`` (sparse vector) on a basis, plus a
    Gram matrix for the form. ``embedding`` optionally lists the vectors of
    an ambient Lie algebra that the basis came from.
    """

    def __init__(self, dim, product, gram, name=None, embedding=None):
        require_integer(dim, "dim")
        self.embedding = embedding
        if gram.shape != (dim, dim):
            raise DimensionMismatch(
                "Gram matrix has shape %s, expected %d x %d" % (
                    gram.shape, dim, dim))
        self.dim = dim
        self.gram = gram
        self.name = name
        self._product = {}
        for ((a, b, c), vector) in product.items():
            vector = dict((k, x) for (k, x) in vector.items() if x != 0)
            if vector:
                self._product[(a, b, c)] = vector

    def __repr__(self):
        return "TernaryAlgebra(%s, dim=%d)" % (self.name or "?", self.dim)

    def __eq__(self, other):
        if not isinstance(other, TernaryAlgebra):
            return NotImplemented
        return (self.dim == other.dim and self.gram == other.gram and
                self._product == other._product)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def basis_triple(self, a, b, c):
        return self._product.get((a, b, c), {})

    def triple(self, x, y, z):
        out = {}
        for (a, p) in x.items():
            for (b, q) in y.items():
                pq = p * q
                for (c, r) in z.items():
                    vector = self._product.get((a, b, c))
                    if vector:
                        axpy(out, pq * r, vector)
        return out

    def form(self, x, y):
        return sum((p * q * self.gram[a, b]
                    for (a, p) in x.items() for (b, q) in y.items()
                    if self.gram[a, b] != 0), ZERO)

    def product_entries(self):
        return sorted(self._product.items())

    def is_nondegenerate(self):
        return self.gram.rank() == self.dim


def trivial_fts(gram, coefficients=(HALF, HALF, -HALF)):
    """
    xyz = a <x,y> z + b <y,z> x + c <z,x> y, with default (1/2, 1/2, -1/2).
    """
    n = gram.rows
    a, b, c = [Fraction(k) for k in coefficients]
    table = {}
    for (i, j, k) in product(range(n), repeat=3):
        out = {}
        axpy(out, a * gram[i, j], {k: ONE})
        axpy(out, b * gram[j, k], {i: ONE})
        axpy(out, c * gram[k, i], {j: ONE})
        if out:
            table[(i, j, k)] = out
    return TernaryAlgebra(n, table, gram, name="trivial")


def standard_symplectic_gram(n):
    """Gram matrix of sum x_i y_{i+m} - x_{i+m} y_i on F^(2m)."""
    if n % 2:
        raise DimensionMismatch("Symplectic forms need even dimension")
    m = n // 2
    gram = ExactMatrix.zeros(n, n)
    for i in range(m):
        gram.entries[i, i + m] = ONE
        gram.entries[i + m, i] = -ONE
    return gram


def fts_direct_sum(first, second):
    """Orthogonal direct sum, product taken componentwise."""
    n, m = first.dim, second.dim
    gram = ExactMatrix.zeros(n + m, n + m)
    gram.entries[:n, :n] = first.gram.entries
    gram.entries[n:, n:] = second.gram.entries
    table = {}
    for ((a, b, c), vector) in first.product_entries():
        table[(a, b, c)] = dict(vector)
    for ((a, b, c), vector) in second.product_entries():
        table[(a + n, b + n, c + n)] = dict(
            (k + n, x) for (k, x) in vector.items())
    return TernaryAlgebra(n + m, table, gram, name="sum")


AxiomResult = namedtuple("AxiomResult", [
    "passed",
    "witness",
    "residual",
    "checked",
    "exhaustive",
])

AxiomReport = namedtuple("AxiomReport", [
    "axiom1",
    "axiom2",
    "axiom3",
    "suspected_variant",
])


def _axiom1_residual(algebra, a, b, c):
    out = sub(algebra.basis_triple(a, b, c), algebra.basis_triple(b, a, c))
    axpy(out, -algebra.gram[a, b], {c: ONE})
    return out


def _axiom2_residual(algebra, a, b, c):
    out = sub(algebra.basis_triple(a, b, c), algebra.basis_triple(a, c, b))
    axpy(out, -algebra.gram[b, c], {a: ONE})
    return out


def _axiom3_residual(algebra, x, y, z, v, w, variant=False):
    bx, by, bz, bv, bw = [{i: ONE} for i in (x, y, z, v, w)]
    out = algebra.triple(algebra.basis_triple(x, y, z), bv, bw)
    axpy(out, -ONE, algebra.triple(algebra.basis_triple(x, v, w), by, bz))
    axpy(out, -ONE, algebra.triple(bx, algebra.basis_triple(y, v, w), bz))
    last = algebra.basis_triple(z, v, w) if variant else \
        algebra.basis_triple(z, w, v)
    axpy(out, -ONE, algebra.triple(bx, by, last))
    return out


def _check(residual, tuples, exhaustive):
    checked = 0
    for t in tuples:
        checked += 1
        value = residual(*t)
        if value:
            return AxiomResult(False, t, value, checked, exhaustive)
    return AxiomResult(True, None, {}, checked, exhaustive)


def _quintuples(n, exhaustive, samples, seed):
    if exhaustive:
        return product(range(n), repeat=5)
    rng = random.Random(seed)
    return (tuple(rng.randrange(n) for _ in range(5))
            for _ in range(samples))


def check_bsta_axioms(algebra, exhaustive=None, samples=None, seed=None):
    """
    Check the three axioms on basis tuples.

    The first two are always exhaustive. The third is exhaustive up to
    dimension 14 unless told otherwise, and sampled above.
    """
    config = get_config()
    n = algebra.dim
    if exhaustive is None:
        exhaustive = n <= 14
    if samples is None:
        samples = config.axiom_samples
    if seed is None:
        seed = config.seed
    triples = list(product(range(n), repeat=3))
    first = _check(lambda a, b, c: _axiom1_residual(algebra, a, b, c),
                   triples, True)
    second = _check(lambda a, b, c: _axiom2_residual(algebra, a, b, c),
                    triples, True)
    third = _check(
        lambda *t: _axiom3_residual(algebra, *t),
        _quintuples(n, exhaustive, samples, seed), exhaustive)
    suspected = False
    if not third.passed:
        variant = _check(
            lambda *t: _axiom3_residual(algebra, *t, variant=True),
            _quintuples(n, exhaustive, samples, seed), exhaustive)
        suspected = variant.passed
        logger.warning("Third axiom fails on %s (variant passes: %s)",
                       third.witness, suspected)
    return AxiomReport(first, second, third, suspected)


def all_axioms_pass(report):
    return report.axiom1.passed and report.axiom2.passed and \
        report.axiom3.passed


ConventionResult = namedtuple("ConventionResult", [
    "coefficients",
    "report",
])


def trivial_convention_search(gram, exhaustive=True):
    """
    Find coefficients (a, b, c) in {+-1/2, +-1} for the trivial product
    that satisfy all axioms; the default convention is tried first.
    """
    values = [HALF, -HALF, ONE, -ONE]
    candidates = [(HALF, HALF, -HALF)] + [
        t for t in product(values, repeat=3) if t != (HALF, HALF, -HALF)]
    for coefficients in candidates:
        report = check_bsta_axioms(
            trivial_fts(gram, coefficients), exhaustive=exhaustive)
        if all_axioms_pass(report):
            return ConventionResult(coefficients, report)
    return None


def fts_subalgebra_closure(algebra, seeds):
    """Smallest product-closed subspace containing the seeds."""
    n = algebra.dim
    echelon = SparseEchelon(n)
    members = []
    for s in seeds:
        if s and echelon.add(s):
            members.append(dict(s))
    frontier = list(members)
    while frontier:
        added = []
        current = list(members)
        for x in frontier:
            for y in current:
                for z in current:
                    for value in (algebra.triple(x, y, z),
                                  algebra.triple(y, x, z),
                                  algebra.triple(y, z, x)):
                        if value and echelon.add(value):
                            added.append(value)
        members.extend(added)
        frontier = added
    return echelon.subspace()


def ideal_closure(algebra, seeds):
    """Smallest ideal containing the seeds."""
    n = algebra.dim
    basis = [{i: ONE} for i in range(n)]
    echelon = SparseEchelon(n)
    frontier = [dict(s) for s in seeds if s and echelon.add(s)]
    while frontier and len(echelon) < n:
        added = []
        for x in frontier:
            for a in basis:
                for b in basis:
                    for value in (algebra.triple(x, a, b),
                                  algebra.triple(a, x, b),
                                  algebra.triple(a, b, x)):
                        if value and echelon.add(value):
                            added.append(value)
                if len(echelon) == n:
                    break
        frontier = added
    return echelon.subspace()


SimplicityResult = namedtuple("SimplicityResult", ["simple", "witness"])


def _operator_mixture(algebra, rng):
    """Random integer combination of the left multiplications z -> xyz."""
    n = algebra.dim
    entries = ExactMatrix.zeros(n, n).entries
    for columns in left_operators(algebra).values():
        r = Fraction(rng.randint(-9, 9))
        if r == 0:
            continue
        for (c, column) in enumerate(columns):
            for (i, x) in column.items():
                entries[i, c] += r * x
    return ExactMatrix(entries)


def _primary_seeds(operator):
    # ker p(T) for an irreducible factor p of the characteristic polynomial
    seeds = []
    for factor in rational_factors(char_poly(operator)):
        kernel = kernel_vectors(polynomial_at(factor, operator))
        if kernel and len(kernel) < operator.rows:
            seeds.append(kernel[0])
    return seeds


def fts_is_simple(algebra, extra_seeds=4, mixtures=3):
    """
    Simple iff nonzero and no tried seed generates a proper nonzero ideal.
    The witness is such an ideal.

    Seeds are the basis vectors, pseudo-random vectors, and one vector from
    each rational primary component of random combinations of left
    multiplications. Those combinations preserve every summand of a direct
    sum of ideals, so a direct sum is found in any basis once their spectra
    on the summands differ.
    """
    n = algebra.dim
    if n == 0:
        return SimplicityResult(False, None)
    rng = random.Random(get_config().seed)
    seeds = [{i: ONE} for i in range(n)]
    for _ in range(extra_seeds):
        seeds.append(dict((i, Fraction(rng.randint(1, 9)))
                          for i in range(n)))
    for seed in seeds:
        ideal = ideal_closure(algebra, [seed])
        if 0 < ideal.dim < n:
            return SimplicityResult(False, ideal)
    for _ in range(mixtures):
        for seed in _primary_seeds(_operator_mixture(algebra, rng)):
            ideal = ideal_closure(algebra, [seed])
            if 0 < ideal.dim < n:
                return SimplicityResult(False, ideal)
    return SimplicityResult(True, None)


def restrict_fts(algebra, space):
    """Ternary algebra induced on a product-closed subspace."""
    vectors = space.vectors()
    k = len(vectors)
    table = {}
    for (a, b, c) in product(range(k), repeat=3):
        value = algebra.triple(vectors[a], vectors[b], vectors[c])
        if value:
            if not space.contains(value):
                raise DimensionMismatch("Subspace is not product-closed")
            table[(a, b, c)] = dict(
                (i, x) for (i, x) in enumerate(space.coordinates(value))
                if x != 0)
    gram = ExactMatrix(
        [[algebra.form(u, v) for v in vectors] for u in vectors],
        rows=k, cols=k)
    embedding = None
    if algebra.embedding is not None:
        embedding = [
            combine((x, algebra.embedding[i]) for (i, x) in v.items())
            for v in vectors]
    return TernaryAlgebra(k, table, gram, name="sub(%s)" % algebra.name,
                          embedding=embedding)


def left_operators(algebra):
    """Matrices of z -> xyz for basis x, y (columns indexed by z)."""
    n = algebra.dim
    out = {}
    for a in range(n):
        for b in range(n):
            columns = [algebra.basis_triple(a, b, c) for c in range(n)]
            if any(columns):
                out[(a, b)] = columns
    return out
