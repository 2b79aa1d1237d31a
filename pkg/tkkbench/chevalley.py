"""
Chevalley bases of the simple Lie algebras.

Basis order: root vectors of the positive roots (root-system order), then
the simple coroots h_1..h_r, then root vectors of the negative roots in the
same order. Signs of the structure constants are fixed by taking
N(alpha, beta) = +(p + 1) on extraspecial pairs and propagating.
"""

from __future__ import absolute_import, division

import logging
import time
from fractions import Fraction

from .errors import InvalidType, TkkError
from .exact import ONE, ZERO, Subspace
from .liealg import CartanFrame, LieAlgebra, generated_subalgebra
from .rootsys import build_root_system

logger = logging.getLogger(__name__)

ALGEBRA_CACHE = {}


def _negate(root):
    return tuple(-c for c in root)


def _plus(a, b):
    return tuple(x + y for (x, y) in zip(a, b))


def _minus(a, b):
    return tuple(x - y for (x, y) in zip(a, b))


def _is_positive(root):
    return sum(root) > 0


class StructureConstants(object):
    """N(alpha, beta) for all pairs of roots, with [e_a, e_b] = N e_{a+b}."""

    def __init__(self, rs):
        self.rs = rs
        self.positive = rs.positive_coefficients
        self.order = dict((r, i) for (i, r) in enumerate(self.positive))
        self.roots = set(rs.roots())
        self.norms = dict((r, rs.length_squared(r)) for r in self.roots)
        self.positive_table = {}
        self._build()

    def string_below(self, alpha, beta):
        """Largest p with beta - p alpha a root."""
        p = 0
        current = _minus(beta, alpha)
        while current in self.roots:
            p += 1
            current = _minus(current, alpha)
        return p

    def _build(self):
        for xi in self.positive:
            if sum(xi) < 2:
                continue
            pairs = [(a, _minus(xi, a)) for a in self.positive
                     if _minus(xi, a) in self.order]
            alpha0, beta0 = pairs[0]
            n0 = self.string_below(alpha0, beta0) + 1
            self._store(alpha0, beta0, Fraction(n0))
            for (a, b) in pairs[1:]:
                if (a, b) in self.positive_table:
                    continue
                value = self.norms[xi] / n0 * (
                    self._term(b, alpha0, a, beta0) +
                    self._term_second(a, alpha0, b, beta0))
                expected = self.string_below(a, b) + 1
                if abs(value) != expected:
                    raise TkkError(
                        "Structure constant N%s%s = %s, expected +-%d" % (
                            a, b, value, expected))
                self._store(a, b, value)

    def _term(self, b, alpha0, a, beta0):
        difference = _minus(b, alpha0)
        if difference not in self.roots:
            return ZERO
        return (self.N(b, _negate(alpha0)) * self.N(a, _negate(beta0)) /
                self.norms[difference])

    def _term_second(self, a, alpha0, b, beta0):
        difference = _minus(a, alpha0)
        if difference not in self.roots:
            return ZERO
        return (self.N(_negate(alpha0), a) * self.N(b, _negate(beta0)) /
                self.norms[difference])

    def _store(self, a, b, value):
        self.positive_table[(a, b)] = value
        self.positive_table[(b, a)] = -value

    def N(self, a, b):
        s = _plus(a, b)
        if s not in self.roots:
            return ZERO
        pos_a, pos_b = _is_positive(a), _is_positive(b)
        if pos_a and pos_b:
            return self.positive_table[(a, b)]
        if not pos_a and not pos_b:
            return -self.positive_table[(_negate(a), _negate(b))]
        if pos_a:
            if _is_positive(s):
                return -self.norms[s] / self.norms[a] * self.N(_negate(b), s)
            return self.norms[s] / self.norms[b] * self.N(_negate(s), a)
        return -self.N(b, a)


def chevalley_algebra(family, rank):
    """
    Chevalley basis of the simple algebra of the given type.

    Returns
    -------
    (LieAlgebra, CartanFrame); the frame is also attached to the algebra.
    """
    key = (family.upper(), rank)
    if key in ALGEBRA_CACHE:
        return ALGEBRA_CACHE[key]
    start = time.time()
    rs = build_root_system(*key)
    constants = StructureConstants(rs)
    positive = rs.positive_coefficients
    npos, r = len(positive), rs.rank
    index = {}
    for (i, root) in enumerate(positive):
        index[root] = i
        index[_negate(root)] = npos + r + i
    dim = 2 * npos + r
    simple_norms = [rs.length_squared(_unit(r, i)) for i in range(r)]

    def coroot(root):
        # h_alpha for a positive root alpha
        norm = constants.norms[root]
        return dict((npos + i, Fraction(c) * simple_norms[i] / norm)
                    for (i, c) in enumerate(root) if c)

    table = {}
    all_roots = rs.roots()
    for a in all_roots:
        for b in all_roots:
            i, j = index[a], index[b]
            if i >= j:
                continue
            s = _plus(a, b)
            if all(c == 0 for c in s):
                if _is_positive(a):
                    table[(i, j)] = coroot(a)
                else:
                    table[(i, j)] = dict(
                        (k, -x) for (k, x) in coroot(b).items())
            elif s in index:
                value = constants.N(a, b)
                if value:
                    table[(i, j)] = {index[s]: value}
    for k in range(r):
        for b in all_roots:
            value = rs.pairing(b, k)
            if value:
                table[(npos + k, index[b])] = {index[b]: Fraction(value)}
    cartan = [{npos + k: ONE} for k in range(r)]
    roots = dict(
        (tuple(Fraction(rs.pairing(b, k)) for k in range(r)),
         {index[b]: ONE})
        for b in all_roots)
    frame = CartanFrame(cartan, roots, root_system=rs, root_index=index)
    algebra = LieAlgebra(dim, table, frame=frame, name=rs.label)
    logger.info("Built Chevalley algebra %s (dim %d) in %0.3f sec.",
                rs.label, dim, time.time() - start)
    ALGEBRA_CACHE[key] = (algebra, frame)
    return algebra, frame


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def root_vector(frame, root):
    """Basis vector e_root of a Chevalley frame (signed coefficients)."""
    return {frame.root_index[tuple(root)]: ONE}


def coroot_vector(algebra, frame, root):
    """h_root = [e_root, e_-root]."""
    return algebra.bracket(root_vector(frame, root),
                           root_vector(frame, _negate(root)))


def subsystem_subalgebra(algebra, frame, nodes):
    """
    Subalgebra generated by e_{+-alpha} for the chosen nodes of the extended
    Dynkin diagram; node 0 is the lowest root -theta, nodes 1..r are the
    simple roots in Bourbaki numbering.
    """
    rs = frame.root_system
    if rs is None:
        raise InvalidType("Subsystem subalgebras need a Chevalley frame")
    generators = []
    for node in nodes:
        if node == 0:
            root = _negate(rs.highest_coefficients)
        elif 1 <= node <= rs.rank:
            root = _unit(rs.rank, node - 1)
        else:
            raise InvalidType("Node %r outside the extended diagram of %s" % (
                node, rs.label))
        generators.append(root_vector(frame, root))
        generators.append(root_vector(frame, _negate(root)))
    sub = generated_subalgebra(algebra, generators)
    logger.debug("Subsystem %s of %s has dimension %d",
                 list(nodes), rs.label, sub.dim)
    return sub


def root_span(algebra, frame, roots):
    """Span of the root vectors of the given roots and their coroots."""
    vectors = []
    for root in roots:
        vectors.append(root_vector(frame, root))
        vectors.append(root_vector(frame, _negate(root)))
        vectors.append(coroot_vector(algebra, frame, root))
    return Subspace.span(algebra.dim, vectors)
