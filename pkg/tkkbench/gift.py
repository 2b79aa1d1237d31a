"""
Split-case check of the derivation formula on W = F^2 (x) L1.

With <x, y>_p defined by [x, y] = <x, y>_p e, W carries the M_2(F)-valued
form phi(s (x) x, t (x) y) = <x, y>_p s t*, where t* is the row (t2, -t1).
The map pi : End(L1) -> End(L1) sends <., u>_p v to z -> uvz. For u, v in W

    D(u, v) = 1/2 (pi(phi(., u) v - phi(., v) u) + phi(v, u) - phi(u, v))

is compared with the inner map [[u, v], -] of the Lie triple system
L1 (+) L-1, identifying e1 (x) x with x and e2 (x) x with [f, x].
"""

from __future__ import absolute_import, division

import logging
import time
from collections import namedtuple
from fractions import Fraction

from .errors import DegenerateForm, DimensionMismatch
from .exact import ExactMatrix, ONE, Subspace, ZERO, axpy, inverse, rref
from .grading import extract_fts, grading_by

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

GiftReport = namedtuple("GiftReport", [
    "module_dim",
    "passed",
    "checked",
    "witness",
])


def _omega(s, t):
    """s* t for standard basis vectors e_s, e_t of F^2 (s, t in {0, 1})."""
    if s == t:
        return ZERO
    return -ONE if (s, t) == (0, 1) else ONE


def _star_row(s):
    # e1* = (0, -1), e2* = (1, 0)
    return (ZERO, -ONE) if s == 0 else (ONE, ZERO)


class GiftData(object):
    """pi and phi for an extracted ternary algebra with nondegenerate form."""

    def __init__(self, fts):
        self.fts = fts
        self.n = n = fts.dim
        self.form = fts.gram * -1
        if self.form.rank() != n:
            raise DegenerateForm("The form on L1 is degenerate")
        self.form_inverse = inverse(self.form)
        # pi applied to the elementary operator E_rc (entry (r, c) = 1)
        self.pi_columns = {}
        for r in range(n):
            for c in range(n):
                image = {}
                for a in range(n):
                    g = self.form_inverse[a, c]
                    if g == 0:
                        continue
                    for z in range(n):
                        for (s, x) in fts.basis_triple(a, r, z).items():
                            image[s * n + z] = image.get(s * n + z, ZERO) + \
                                g * x
                self.pi_columns[r * n + c] = dict(
                    (k, x) for (k, x) in image.items() if x)

    def pi(self, operator):
        """pi of a flattened operator (entry (r, c) at r * n + c)."""
        out = {}
        for (index, x) in operator.items():
            axpy(out, x, self.pi_columns.get(index, {}))
        return out

    def pi_matrix(self):
        size = self.n * self.n
        return ExactMatrix.from_sparse_columns(
            [self.pi_columns[k] for k in range(size)], size)

    def rank_one(self, x, y):
        """z -> <z, x>_p y for basis indices x, y, flattened."""
        n = self.n
        return dict((y * n + z, self.form[z, x]) for z in range(n)
                    if self.form[z, x] != 0)

    def phi(self, u, v):
        """phi(u, v) in M_2 for basis elements u = (s, x), v = (t, y)."""
        (s, x), (t, y) = u, v
        value = self.form[x, y]
        star = _star_row(t)
        matrix = [[ZERO, ZERO], [ZERO, ZERO]]
        for col in range(2):
            matrix[s][col] = value * star[col]
        return matrix

    def derivation(self, u, v):
        """D(u, v) as a dict mapping basis (r, z) to a sparse vector on W."""
        n = self.n
        (s, x), (t, y) = u, v
        operator = {}
        axpy(operator, _omega(s, t), self.rank_one(x, y))
        axpy(operator, -_omega(t, s), self.rank_one(y, x))
        on_l1 = self.pi(operator)
        first, second = self.phi(v, u), self.phi(u, v)
        m2 = [[first[i][j] - second[i][j] for j in range(2)]
              for i in range(2)]
        out = {}
        for r in range(2):
            for z in range(n):
                image = {}
                for (index, c) in on_l1.items():
                    row, col = divmod(index, n)
                    if col == z:
                        axpy(image, HALF * c, {r * n + row: ONE})
                for i in range(2):
                    if m2[i][r]:
                        axpy(image, HALF * m2[i][r], {i * n + z: ONE})
                if image:
                    out[(r, z)] = image
        return out


def split_gift_verify(algebra, triple):
    """
    Check D(u, v) = [[u, v], -] on W for all basis pairs. Requires the
    extraspecial grading of a split algebra and a nondegenerate form.
    """
    start = time.time()
    grading = grading_by(algebra, triple.h)
    fts = extract_fts(algebra, triple, grading)
    data = GiftData(fts)
    n = fts.dim
    upper = fts.embedding
    lower = [algebra.bracket(triple.f, u) for u in upper]
    odd = upper + lower
    odd_space = Subspace.span(algebra.dim, odd)
    basis = ExactMatrix.from_sparse_columns(odd, algebra.dim)
    _, rows = rref(basis.transpose())
    square = ExactMatrix(
        [[basis[r, c] for c in range(2 * n)] for r in rows],
        rows=2 * n, cols=2 * n)
    back = inverse(square)

    def embed(index):
        return odd[index]

    def to_w(vector):
        if not odd_space.contains(vector):
            raise DimensionMismatch("Vector leaves L1 + L-1")
        local = [vector.get(r, ZERO) for r in rows]
        out = {}
        for k in range(2 * n):
            value = sum((back[k, j] * local[j] for j in range(2 * n)), ZERO)
            if value:
                out[k] = value
        return out

    checked = 0
    for i in range(2 * n):
        for j in range(2 * n):
            u, v = divmod(i, n), divmod(j, n)
            predicted = data.derivation(u, v)
            inner = algebra.bracket(embed(i), embed(j))
            for k in range(2 * n):
                checked += 1
                actual = to_w(algebra.bracket(inner, embed(k)))
                if actual != predicted.get(divmod(k, n), {}):
                    logger.info("Derivation formula fails at %s", (i, j, k))
                    return GiftReport(n, False, checked, (i, j, k))
    logger.info("Checked derivation formula on %d triples in %0.3f sec.",
                checked, time.time() - start)
    return GiftReport(n, True, checked, None)
