"""
Lie algebras given by exact structure constants.
"""

from __future__ import absolute_import, division

import logging
import random
from collections import namedtuple

from typechecks import require_instance, require_integer

from .config import get_config
from .errors import DimensionMismatch, TkkError
from .exact import (
    ExactMatrix, ONE, SparseEchelon, Subspace, ZERO, axpy, combine, scale,
    sparse_kernel, subspace_meet_join)

logger = logging.getLogger(__name__)


class CartanFrame(object):
    """
    A split Cartan subalgebra with its root vectors.

    Attributes
    ----------
    cartan : list of sparse vectors, a basis of the Cartan subalgebra
    roots : dict mapping a root (tuple of its values on ``cartan``) to a
        root vector
    root_system : RootSystem or None, set for Chevalley frames
    root_index : dict mapping signed simple-root coefficients to a basis
        index, set for Chevalley frames
    """

    def __init__(self, cartan, roots, root_system=None, root_index=None):
        self.cartan = [dict(h) for h in cartan]
        self.roots = dict(roots)
        self.root_system = root_system
        self.root_index = root_index

    @property
    def rank(self):
        return len(self.cartan)

    def cartan_space(self, ambient_dim):
        return Subspace.span(ambient_dim, self.cartan)

    def __repr__(self):
        return "CartanFrame(rank=%d, roots=%d)" % (
            self.rank, len(self.roots))


class LieAlgebra(object):
    """
    Finite-dimensional Lie algebra with a basis and sparse structure
    constants: ``[b_i, b_j] = table[(i, j)]``.

    ``frame`` is an optional known CartanFrame and ``seeds`` are known
    commuting ad-semisimple elements; both only speed up split_cartan.
    """

    def __init__(self, dim, table, frame=None, seeds=(), name=None):
        require_integer(dim, "dim")
        self.dim = dim
        self.frame = frame
        self.seeds = [dict(s) for s in seeds]
        self.name = name
        self._rows = dict((i, {}) for i in range(dim))
        for ((i, j), vector) in table.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(
                    "Bracket index (%d, %d) out of range" % (i, j))
            vector = dict((k, x) for (k, x) in vector.items() if x != 0)
            if i == j or not vector:
                continue
            self._rows[i][j] = vector
            self._rows[j][i] = scale(-ONE, vector)

    def __repr__(self):
        return "LieAlgebra(%s, dim=%d)" % (self.name or "?", self.dim)

    def with_frame(self, frame):
        out = LieAlgebra(0, {}, frame=frame, seeds=self.seeds, name=self.name)
        out.dim = self.dim
        out._rows = self._rows
        return out

    def basis_bracket(self, i, j):
        """Bracket of two basis vectors; the result must not be mutated."""
        return self._rows[i].get(j, {})

    def structure_entries(self):
        """(i, j, vector) for i < j with nonzero bracket."""
        for i in range(self.dim):
            for (j, vector) in sorted(self._rows[i].items()):
                if i < j:
                    yield i, j, vector

    def bracket(self, x, y):
        out = {}
        for (i, a) in x.items():
            row = self._rows[i]
            if not row:
                continue
            for (j, b) in y.items():
                vector = row.get(j)
                if vector:
                    axpy(out, a * b, vector)
        return out

    def ad_columns(self, x):
        return [self.bracket(x, {j: ONE}) for j in range(self.dim)]

    def ad(self, x):
        return ExactMatrix.from_sparse_columns(self.ad_columns(x), self.dim)

    def killing_value(self, x, y):
        """trace(ad x ad y) without forming matrices."""
        total = ZERO
        for k in range(self.dim):
            image = self.bracket(x, self.bracket(y, {k: ONE}))
            total += image.get(k, ZERO)
        return total


class Subalgebra(object):
    """
    Subalgebra of ``parent`` spanned by ``space``.

    ``induced`` is the Lie algebra on the echelon basis of ``space``;
    coordinates of a member vector are its entries at the pivots.
    """

    def __init__(self, parent, space, frame=None):
        require_instance(parent, LieAlgebra, "parent")
        if space.ambient_dim != parent.dim:
            raise DimensionMismatch(
                "Subspace lives in dimension %d, algebra has %d" % (
                    space.ambient_dim, parent.dim))
        self.parent = parent
        self.space = space
        basis = space.vectors()
        table = {}
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                value = parent.bracket(basis[a], basis[b])
                if not value:
                    continue
                if not space.contains(value):
                    raise TkkError(
                        "Subspace is not closed under the bracket")
                coordinates = dict(
                    (k, x) for (k, x) in enumerate(space.coordinates(value))
                    if x != 0)
                table[(a, b)] = coordinates
        self.induced = LieAlgebra(
            len(basis), table, seeds=self._seeds(frame or parent.frame),
            name="sub(%s)" % (parent.name or "?"))

    def _seeds(self, frame):
        seeds = []
        if frame is None:
            return seeds
        meet, _ = subspace_meet_join(
            self.space, frame.cartan_space(self.parent.dim))
        for vector in meet.vectors():
            seeds.append(self.restrict(vector))
        return seeds

    @property
    def dim(self):
        return self.space.dim

    @property
    def inclusion(self):
        return ExactMatrix.from_sparse_columns(
            self.space.vectors(), self.parent.dim)

    def embed(self, coordinates):
        """Parent vector of a sparse coordinate vector."""
        return combine(
            (c, self.space.rows[k]) for (k, c) in coordinates.items())

    def restrict(self, vector):
        return dict((k, x) for (k, x) in
                    enumerate(self.space.coordinates(vector)) if x != 0)

    def __repr__(self):
        return "Subalgebra(dim=%d of %r)" % (self.dim, self.parent)


def compose(inner, outer, frame=None):
    """Subalgebra of outer.parent given a subalgebra of outer.induced."""
    if inner.parent is not outer.induced:
        raise DimensionMismatch("Subalgebras do not chain")
    space = Subspace.span(
        outer.parent.dim, [outer.embed(v) for v in inner.space.vectors()])
    return Subalgebra(outer.parent, space, frame=frame)


StructuralReport = namedtuple("StructuralReport", [
    "jacobi_ok",
    "jacobi_exhaustive",
    "antisym_ok",
    "semisimple",
    "perfect",
    "center_dim",
    "dim",
])


def _jacobi_residual(algebra, i, j, k):
    bi, bj, bk = {i: ONE}, {j: ONE}, {k: ONE}
    out = algebra.bracket(bi, algebra.basis_bracket(j, k))
    axpy(out, ONE, algebra.bracket(bj, algebra.basis_bracket(k, i)))
    axpy(out, ONE, algebra.bracket(bk, algebra.basis_bracket(i, j)))
    return out


def _jacobi_triples(n, exhaustive, samples, seed):
    if exhaustive:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    yield i, j, k
        return
    rng = random.Random(seed)
    for _ in range(samples):
        yield rng.randrange(n), rng.randrange(n), rng.randrange(n)


def structural_tests(algebra, exhaustive=None, samples=None):
    """
    Jacobi identity, antisymmetry, semisimplicity (nondegenerate Killing
    form), perfectness and center dimension.

    Jacobi is exhaustive over basis triples up to dimension 133 unless
    ``exhaustive`` says otherwise; above that it is sampled.
    """
    config = get_config()
    n = algebra.dim
    if exhaustive is None:
        exhaustive = n <= 133
    if samples is None:
        samples = min(config.axiom_samples, 20000)
    jacobi_ok = True
    for (i, j, k) in _jacobi_triples(n, exhaustive, samples, config.seed):
        if _jacobi_residual(algebra, i, j, k):
            logger.info("Jacobi fails on basis triple (%d, %d, %d)", i, j, k)
            jacobi_ok = False
            break
    antisym_ok = all(
        algebra.basis_bracket(j, i) == scale(-ONE, algebra.basis_bracket(i, j))
        for (i, j, _) in algebra.structure_entries())
    semisimple = killing_gram(algebra).rank() == n
    perfect = derived_subalgebra(algebra).dim == n
    center = centralizer(algebra, [{i: ONE} for i in range(n)])
    return StructuralReport(
        jacobi_ok=jacobi_ok,
        jacobi_exhaustive=exhaustive,
        antisym_ok=antisym_ok,
        semisimple=semisimple,
        perfect=perfect,
        center_dim=center.dim,
        dim=n)


def killing_gram(algebra):
    """
    Gram matrix of the Killing form, kappa_ij = trace(ad b_i ad b_j),
    contracted directly from the sparse structure constants.
    """
    n = algebra.dim
    # by_target[(l, k)] = {i: c_{il}^k}
    by_target = {}
    for i in range(n):
        for (l, vector) in algebra._rows[i].items():
            for (k, c) in vector.items():
                by_target.setdefault((l, k), {})[i] = c
    gram = ExactMatrix.zeros(n, n)
    entries = gram.entries
    for j in range(n):
        for (k, vector) in algebra._rows[j].items():
            for (l, a) in vector.items():
                for (i, b) in by_target.get((l, k), {}).items():
                    entries[i, j] += a * b
    return gram


def centralizer(algebra, elements):
    """{x : [s, x] = 0 for all s} as a Subspace of the algebra."""
    rows = []
    n = algebra.dim
    for s in elements:
        columns = algebra.ad_columns(s)
        by_row = {}
        for (j, column) in enumerate(columns):
            for (r, x) in column.items():
                by_row.setdefault(r, {})[j] = x
        rows.extend(by_row.values())
    return sparse_kernel(rows, n)


def centralizer_subalgebra(algebra, elements, frame=None):
    return Subalgebra(algebra, centralizer(algebra, elements), frame=frame)


def derived_subalgebra(algebra, frame=None):
    echelon = SparseEchelon(algebra.dim)
    echelon.extend(vector for (_, _, vector) in algebra.structure_entries())
    return Subalgebra(algebra, echelon.subspace(), frame=frame)


def generated_subalgebra(algebra, generators, frame=None):
    """Smallest subalgebra containing the generators."""
    echelon = SparseEchelon(algebra.dim)
    queue = [dict(g) for g in generators if g]
    members = []
    for g in queue:
        if echelon.add(g):
            members.append(g)
    frontier = list(members)
    while frontier:
        added = []
        for x in frontier:
            for y in list(members):
                value = algebra.bracket(x, y)
                if value and echelon.add(value):
                    added.append(value)
        members.extend(added)
        frontier = added
    return Subalgebra(algebra, echelon.subspace(), frame=frame)
