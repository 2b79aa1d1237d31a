"""
Gradings by ad(h) and extraction of the ternary algebra from the
extraspecial grading.
"""

from __future__ import absolute_import, division

import logging
import time
from collections import namedtuple

from .cartan import Sl2Triple, joint_eigenspaces, root_decomposition
from .cartan import split_cartan
from .errors import (
    DimensionMismatch, GradingError, NotExtraspecial, SplitCartanFailure)
from .exact import ExactMatrix, ONE, Subspace, ZERO, scale
from .ternary import TernaryAlgebra

logger = logging.getLogger(__name__)


class Grading(namedtuple("Grading", ["element", "components"])):
    """Eigenspace decomposition of ad(element); components: int -> Subspace."""
    __slots__ = ()

    def dims(self):
        return dict((k, v.dim) for (k, v) in self.components.items())

    def component(self, degree):
        space = self.components.get(degree)
        if space is None:
            ambient = next(iter(self.components.values())).ambient_dim
            return Subspace.zero(ambient)
        return space

    def is_extraspecial(self):
        return (set(self.components) <= set(range(-2, 3)) and
                self.component(2).dim == 1 and self.component(-2).dim == 1)


def grading_by(algebra, h, verify=True):
    """
    Grading of the algebra by the eigenvalues of ad(h). Raises GradingError
    unless ad(h) is diagonalizable with integer eigenvalues.
    """
    try:
        spaces = joint_eigenspaces(
            [lambda v: algebra.bracket(h, v)], Subspace.full(algebra.dim))
    except SplitCartanFailure as e:
        raise GradingError(str(e))
    components = {}
    for ((value,), space) in spaces.items():
        if value.denominator != 1:
            raise GradingError("Eigenvalue %s of ad(h) is not an integer" %
                               value)
        components[int(value)] = space
    grading = Grading(dict(h), components)
    if verify:
        _verify_grading(algebra, grading)
    return grading


def _verify_grading(algebra, grading):
    items = sorted(grading.components.items())
    for (i, u) in items:
        for (j, v) in items:
            if j < i:
                continue
            target = grading.component(i + j)
            for x in u.vectors():
                for y in v.vectors():
                    value = algebra.bracket(x, y)
                    if value and not target.contains(value):
                        raise GradingError(
                            "[L%d, L%d] is not inside L%d" % (i, j, i + j))


def extraspecial_sl2(algebra, frame=None):
    """
    The sl2-triple (e_theta, theta coroot, e_-theta) of the highest root.
    """
    if frame is None:
        frame = split_cartan(algebra)
    if frame.root_system is not None:
        rs = frame.root_system
        theta = rs.highest_coefficients
        e = {frame.root_index[theta]: ONE}
        f = {frame.root_index[tuple(-c for c in theta)]: ONE}
        return Sl2Triple(e, algebra.bracket(e, f), f)
    data = root_decomposition(algebra, frame)
    if len(data.labels) != 1 or data.center_dim:
        raise NotExtraspecial("Highest root needs a simple algebra")
    roots = set(frame.roots)
    tops = [w for w in data.positive
            if not any(tuple(a + b for (a, b) in zip(w, s)) in roots
                       for s in data.simple)]
    theta = max(tops, key=lambda w: (sum(data.coefficients[w]), w))
    e = frame.roots[theta]
    f = frame.roots[tuple(-v for v in theta)]
    h = algebra.bracket(e, f)
    image = algebra.bracket(h, e)
    pivot = min(e)
    value = image.get(pivot, ZERO) / e[pivot]
    f = scale(2 / value, f)
    return Sl2Triple(e, algebra.bracket(e, f), f)


def _coefficient(vector, reference):
    pivot = min(reference)
    c = vector.get(pivot, ZERO) / reference[pivot]
    if scale(c, reference) != vector:
        raise NotExtraspecial("Bracket of L1 elements is not a multiple of e")
    return c


def extract_fts(algebra, triple, grading=None, space=None):
    """
    Ternary algebra on L1 of the grading by triple.h:

        xyz = [[[f, x], y], z],    <x, y> e = [y, x].

    With ``space`` (a product-closed subspace of L1) the algebra induced on
    it is returned instead.
    """
    start = time.time()
    if not triple.verify(algebra):
        raise NotExtraspecial("Not an sl2-triple")
    if grading is None:
        grading = grading_by(algebra, triple.h)
    if not grading.is_extraspecial():
        raise NotExtraspecial("Grading %s is not extraspecial" % (
            sorted(grading.dims().items()),))
    top = grading.component(1)
    if space is None:
        space = top
    elif not top.contains_subspace(space):
        raise GradingError("Subspace is not inside L1")
    vectors = space.vectors()
    echelon = space.echelon()
    n = len(vectors)
    lowered = [algebra.bracket(triple.f, u) for u in vectors]
    table = {}
    for a in range(n):
        for b in range(n):
            middle = algebra.bracket(lowered[a], vectors[b])
            if not middle:
                continue
            for c in range(n):
                value = algebra.bracket(middle, vectors[c])
                if not value:
                    continue
                if echelon.reduce(value):
                    raise DimensionMismatch("Subspace is not product-closed")
                table[(a, b, c)] = dict(
                    (k, x) for (k, x) in
                    enumerate(space.coordinates(value)) if x != 0)
    gram = ExactMatrix.zeros(n, n)
    for a in range(n):
        for b in range(n):
            value = algebra.bracket(vectors[b], vectors[a])
            if value:
                gram.entries[a, b] = _coefficient(value, triple.e)
    logger.info("Extracted %d-dimensional ternary algebra from %r in "
                "%0.3f sec.", n, algebra, time.time() - start)
    return TernaryAlgebra(n, table, gram, name="L1(%s)" % algebra.name,
                          embedding=vectors)
