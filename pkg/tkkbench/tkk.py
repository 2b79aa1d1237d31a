"""
Lie triple systems, their inner derivations and the TKK construction.

The Lie triple system of a ternary algebra A lives on M = A (+) A with basis
x^ (first copy, indices 0..n-1) and x' (second copy, n..2n-1). With
<x, y> e = [y, x] the triple product [u, v, w] is

    [x^, y^, z^] = 0                [x^, y^, z'] = -<x,y> z^
    [x', y', z^] = <x,y> z'         [x', y', z'] = 0
    [x^, y', z^] = -(yxz)^          [x^, y', z'] = -<x,y> z' - (yxz)'
    [x', y^, z^] = (xyz)^           [x', y^, z'] = -<x,y> z' + (xyz)'

which is [[u, v], w] on L1 (+) L-1 for A extracted from L, with
x' = [f, x].
"""

from __future__ import absolute_import, division

import logging
import time
from itertools import product

from .errors import TkkError
from .exact import ONE, SparseEchelon, ZERO, axpy
from .liealg import LieAlgebra
from .ternary import TernaryAlgebra

logger = logging.getLogger(__name__)


class LieTripleSystem(object):
    """
    Trilinear product on a basis: ``operators[(i, j)][k]`` is the sparse
    vector [u_i, u_j, u_k].
    """

    def __init__(self, dim, operators, name=None):
        self.dim = dim
        self.name = name
        self.operators = {}
        for ((i, j), columns) in operators.items():
            columns = dict((k, v) for (k, v) in columns.items() if v)
            if columns:
                self.operators[(i, j)] = columns

    def __repr__(self):
        return "LieTripleSystem(%s, dim=%d)" % (self.name or "?", self.dim)

    def basis_triple(self, i, j, k):
        return self.operators.get((i, j), {}).get(k, {})

    def triple(self, x, y, z):
        out = {}
        for (i, a) in x.items():
            for (j, b) in y.items():
                columns = self.operators.get((i, j))
                if not columns:
                    continue
                for (k, c) in z.items():
                    vector = columns.get(k)
                    if vector:
                        axpy(out, a * b * c, vector)
        return out

    def flattened(self, i, j):
        """Operator [u_i, u_j, -] as a sparse vector on dim x dim entries."""
        out = {}
        for (k, vector) in self.operators.get((i, j), {}).items():
            for (r, x) in vector.items():
                out[r * self.dim + k] = x
        return out


def lts_from_fts(algebra):
    """Lie triple system on A (+) A."""
    if not isinstance(algebra, TernaryAlgebra):
        raise TypeError("Expected a TernaryAlgebra, got %r" % (algebra,))
    n = algebra.dim
    g = algebra.gram
    operators = {}

    def shift(vector, offset):
        return dict((k + offset, x) for (k, x) in vector.items())

    for (i, j, k) in product(range(2 * n), repeat=3):
        (a, p), (b, q), (c, r) = divmod(i, n)[::-1], divmod(j, n)[::-1], \
            divmod(k, n)[::-1]
        out = {}
        if p == 0 and q == 0:
            if r == 1:
                axpy(out, -g[a, b], {c: ONE})
        elif p == 1 and q == 1:
            if r == 0:
                axpy(out, g[a, b], {n + c: ONE})
        elif p == 0:
            # [x^, y', -]
            t = algebra.basis_triple(b, a, c)
            if r == 0:
                axpy(out, -ONE, t)
            else:
                axpy(out, -g[a, b], {n + c: ONE})
                axpy(out, -ONE, shift(t, n))
        else:
            # [x', y^, -]
            t = algebra.basis_triple(a, b, c)
            if r == 0:
                axpy(out, ONE, t)
            else:
                axpy(out, -g[a, b], {n + c: ONE})
                axpy(out, ONE, shift(t, n))
        if out:
            operators.setdefault((i, j), {})[k] = out
    return LieTripleSystem(2 * n, operators, name=algebra.name)


class DerivationSpace(object):
    """
    A space of operators on F^dim held as flattened row-major vectors
    (entry (r, c) at index r * dim + c) in reduced echelon form.
    """

    def __init__(self, dim, space):
        self.dim = dim
        self.space = space
        self._matrices = [_as_matrix(row, dim) for row in space.rows]

    @property
    def size(self):
        return self.space.dim

    def matrix(self, k):
        """(rows, columns) dicts of the k-th basis operator."""
        return self._matrices[k]

    def coordinates_at_pivots(self, entry):
        """Coordinates of an operator given by an entry function (r, c)."""
        return dict(
            (k, x) for (k, x) in
            ((k, entry(*divmod(p, self.dim)))
             for (k, p) in enumerate(self.space.pivots)) if x)

    def lie_algebra(self, verify=True):
        return matrix_lie_algebra(self, verify=verify)


def _as_matrix(flat, dim):
    rows, columns = {}, {}
    for (index, x) in flat.items():
        r, c = divmod(index, dim)
        rows.setdefault(r, {})[c] = x
        columns.setdefault(c, {})[r] = x
    return rows, columns


def _commutator_entry(first, second, r, c):
    (rows_a, cols_a), (rows_b, cols_b) = first, second
    total = ZERO
    row, column = rows_a.get(r, {}), cols_b.get(c, {})
    for (k, x) in row.items():
        y = column.get(k)
        if y:
            total += x * y
    row, column = rows_b.get(r, {}), cols_a.get(c, {})
    for (k, x) in row.items():
        y = column.get(k)
        if y:
            total -= x * y
    return total


def _commutator(first, second, dim):
    out = {}
    (rows_a, _), (rows_b, _) = first, second
    for r in set(rows_a) | set(rows_b):
        for c in range(dim):
            value = _commutator_entry(first, second, r, c)
            if value:
                out[r * dim + c] = value
    return out


def matrix_lie_algebra(derivations, verify=True):
    """Lie algebra on the echelon basis of a commutator-closed space."""
    n = derivations.size
    table = {}
    for a in range(n):
        for b in range(a + 1, n):
            first, second = derivations.matrix(a), derivations.matrix(b)
            if verify:
                value = _commutator(first, second, derivations.dim)
                if not derivations.space.contains(value):
                    raise TkkError("Operator space is not a Lie algebra")
            coordinates = derivations.coordinates_at_pivots(
                lambda r, c: _commutator_entry(first, second, r, c))
            if coordinates:
                table[(a, b)] = coordinates
    return LieAlgebra(n, table, name="operators")


def inder(system):
    """Span of the inner derivations [u_i, u_j, -]."""
    echelon = SparseEchelon(system.dim * system.dim)
    for i in range(system.dim):
        for j in range(i + 1, system.dim):
            flat = system.flattened(i, j)
            if flat:
                echelon.add(flat)
    return DerivationSpace(system.dim, echelon.subspace())


def fts_inner_derivations(algebra):
    """Span of the operators z -> xyz of a ternary algebra."""
    n = algebra.dim
    echelon = SparseEchelon(n * n)
    for a in range(n):
        for b in range(n):
            flat = {}
            for c in range(n):
                for (r, x) in algebra.basis_triple(a, b, c).items():
                    flat[r * n + c] = x
            if flat:
                echelon.add(flat)
    return DerivationSpace(n, echelon.subspace())


def _grading_operator(m):
    half = m // 2
    return dict((r * m + r, ONE if r < half else -ONE) for r in range(m))


def tkk(source):
    """
    TKK Lie algebra M (+) Inder(M) with

        [(m1, D1), (m2, D2)] = (D1 m2 - D2 m1, [D1, D2] + [m1, m2, -]).

    Accepts a TernaryAlgebra (through its Lie triple system) or a
    LieTripleSystem. The element acting as +1 on the first copy of A and -1
    on the second is attached as a seed when it is inner.
    """
    start = time.time()
    from_fts = isinstance(source, TernaryAlgebra)
    system = lts_from_fts(source) if from_fts else source
    if not isinstance(system, LieTripleSystem):
        raise TypeError("Expected a ternary algebra or Lie triple system")
    m = system.dim
    derivations = inder(system)
    d = derivations.size
    table = {}
    for i in range(m):
        for j in range(i + 1, m):
            columns = system.operators.get((i, j))
            if not columns:
                continue
            coordinates = derivations.coordinates_at_pivots(
                lambda r, c: columns.get(c, {}).get(r, ZERO))
            if coordinates:
                table[(i, j)] = dict(
                    (m + k, x) for (k, x) in coordinates.items())
    for a in range(d):
        _, cols = derivations.matrix(a)
        for j in range(m):
            image = cols.get(j)
            if image:
                table[(m + a, j)] = dict(image)
    for a in range(d):
        for b in range(a + 1, d):
            first, second = derivations.matrix(a), derivations.matrix(b)
            coordinates = derivations.coordinates_at_pivots(
                lambda r, c: _commutator_entry(first, second, r, c))
            if coordinates:
                table[(m + a, m + b)] = dict(
                    (m + k, x) for (k, x) in coordinates.items())
    seeds = []
    if from_fts and m:
        grading = _grading_operator(m)
        if derivations.space.contains(grading):
            coordinates = derivations.coordinates_at_pivots(
                lambda r, c: grading.get(r * m + c, ZERO))
            seeds.append(dict((m + k, x) for (k, x) in coordinates.items()))
    algebra = LieAlgebra(m + d, table, seeds=seeds,
                         name="TKK(%s)" % (system.name or "?"))
    logger.info("Built %r (M %d + Inder %d) in %0.3f sec.",
                algebra, m, d, time.time() - start)
    return algebra


def check_lts_axioms(system):
    """First failing basis tuple of the Lie triple system axioms, or None."""
    n = system.dim
    basis = [{i: ONE} for i in range(n)]
    for (i, j, k) in product(range(n), repeat=3):
        if system.basis_triple(i, j, k) != dict(
                (r, -x) for (r, x) in system.basis_triple(j, i, k).items()):
            return ("antisymmetry", (i, j, k))
        cyclic = {}
        axpy(cyclic, ONE, system.basis_triple(i, j, k))
        axpy(cyclic, ONE, system.basis_triple(j, k, i))
        axpy(cyclic, ONE, system.basis_triple(k, i, j))
        if cyclic:
            return ("cyclic", (i, j, k))
    for ((i, j), _) in sorted(system.operators.items()):
        for (k, l) in product(range(n), repeat=2):
            for p in range(n):
                lhs = system.triple(
                    basis[i], basis[j], system.basis_triple(k, l, p))
                rhs = system.triple(
                    system.basis_triple(i, j, k), basis[l], basis[p])
                axpy(rhs, ONE, system.triple(
                    basis[k], system.basis_triple(i, j, l), basis[p]))
                axpy(rhs, ONE, system.triple(
                    basis[k], basis[l], system.basis_triple(i, j, p)))
                axpy(lhs, -ONE, rhs)
                if lhs:
                    return ("derivation", (i, j, k, l, p))
    return None
