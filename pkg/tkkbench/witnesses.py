"""
Concrete witnesses inside E7 and E8: the theta centralizer chain, the
commuting 3A1, the 56-dimensional ternary algebra with its D6-fixed part
and conjugate, and the index-2 D4 inside the A7 subsystem.

E7 sits in E8 as the Bourbaki nodes 1..7; the 56 is the degree-one part of
the grading by the coroot of the E8 highest root, i.e. the root vectors with
coefficient 1 at node 8.
"""

from __future__ import absolute_import, division

import logging
import random
import time
from collections import namedtuple
from fractions import Fraction

from .cartan import Sl2Triple, identify_type, split_cartan
from .chevalley import chevalley_algebra, coroot_vector, root_vector
from .config import get_config
from .dynkin import (
    adjoint_module, decompose_isotypic, embedding_index, module_index,
    multi_index)
from .errors import TkkError
from .exact import (
    ExactMatrix, ONE, Subspace, combine, exp_nilpotent, subspace_meet_join)
from .grading import extract_fts, extraspecial_sl2, grading_by
from .liealg import (
    Subalgebra, centralizer_subalgebra, compose, derived_subalgebra,
    generated_subalgebra)
from .tkk import fts_inner_derivations, tkk

logger = logging.getLogger(__name__)

WITNESS_CACHE = {}


def _negate(root):
    return tuple(-c for c in root)


def coroot_pairing(rs, alpha, beta):
    """<alpha, beta^vee> for roots given by simple-root coefficients."""
    coroot = rs.coroot_coefficients(beta)
    return sum(b * rs.pairing(alpha, j) for (j, b) in enumerate(coroot))


def root_triple(algebra, frame, root):
    """The sl2-triple (e_root, h_root, e_-root) of a Chevalley basis."""
    e = root_vector(frame, root)
    f = root_vector(frame, _negate(root))
    return Sl2Triple(e, coroot_vector(algebra, frame, root), f)


def _elements(triples):
    out = []
    for t in triples:
        out.extend([t.e, t.h, t.f])
    return out


def _restrict_triple(sub, triple):
    return Sl2Triple(*[sub.restrict(x) for x in triple])


def _cached(key, build):
    if key not in WITNESS_CACHE:
        start = time.time()
        WITNESS_CACHE[key] = build()
        logger.info("Built witness %s in %0.3f sec.", key,
                    time.time() - start)
    return WITNESS_CACHE[key]


# Centralizer chain in E7

ThetaChain = namedtuple("ThetaChain", [
    "algebra",
    "triple",
    "d6",
    "d6_frame",
    "d6_triple",
    "d4a1",
])


def theta_chain():
    """
    E7 > C(sl2_theta) = D6 > C_D6(sl2_theta') = D4 + A1, each step the
    centralizer of the sl2 of the current highest root.
    """
    def build():
        algebra, frame = chevalley_algebra("E", 7)
        triple = root_triple(algebra, frame, frame.root_system.
                             highest_coefficients)
        d6 = centralizer_subalgebra(algebra, _elements([triple]), frame=frame)
        d6_frame = split_cartan(d6.induced)
        inner = extraspecial_sl2(d6.induced, d6_frame)
        d4a1 = centralizer_subalgebra(
            d6.induced, _elements([inner]), frame=d6_frame)
        return ThetaChain(algebra, triple, d6, d6_frame, inner, d4a1)
    return _cached("theta-chain", build)


def commuting_minuscule_triple(algebra, frame):
    """
    Three mutually commuting long-root sl2-triples: theta, the highest root
    orthogonal to theta, and the root orthogonal to both that leaves the
    largest orthogonal subsystem.
    """
    rs = frame.root_system
    if rs is None:
        raise TkkError("Commuting triples need a Chevalley frame")
    roots = rs.roots()

    def orthogonal(chosen):
        return [r for r in roots
                if all(coroot_pairing(rs, r, c) == 0 for c in chosen)]

    theta = rs.highest_coefficients
    rest = [r for r in orthogonal([theta]) if r in rs.coefficient_index]
    beta = rest[-1]
    candidates = [r for r in orthogonal([theta, beta])
                  if r in rs.coefficient_index and rs.is_long(r)]
    gamma = max(candidates,
                key=lambda r: (len(orthogonal([theta, beta, r])),
                               rs.coefficient_index[r]))
    return [root_triple(algebra, frame, r) for r in (theta, beta, gamma)]


def commuting_centralizer():
    """Centralizer in E7 of the commuting 3A1."""
    def build():
        algebra, frame = chevalley_algebra("E", 7)
        triples = commuting_minuscule_triple(algebra, frame)
        return centralizer_subalgebra(algebra, _elements(triples),
                                      frame=frame)
    return _cached("commuting-3A1", build)


def centralizer_chain_payload():
    """Dimensions and types along the chain."""
    chain = theta_chain()
    cent = commuting_centralizer()
    return [
        ("E7", chain.d6.dim, str(identify_type(chain.d6.induced))),
        ("D6", chain.d4a1.dim, str(identify_type(chain.d4a1.induced))),
        ("3A1", cent.dim, str(identify_type(cent.induced))),
    ]


def chain_multi_indices():
    """Multi-indices of D4+A1 -> D6, D6 -> E7 and of the composite."""
    chain = theta_chain()
    lower = multi_index(chain.d4a1)
    upper = multi_index(chain.d6)
    composite = compose(chain.d4a1, chain.d6, frame=chain.algebra.frame)
    return lower, upper, multi_index(composite)


def theta_sl2_index():
    algebra, frame = chevalley_algebra("E", 7)
    triple = root_triple(algebra, frame, frame.root_system.
                         highest_coefficients)
    sl2 = Subalgebra(algebra, Subspace.span(algebra.dim, list(triple)))
    return embedding_index(sl2)


# The 56 inside E8

E8Setup = namedtuple("E8Setup", [
    "algebra",
    "frame",
    "rs",
    "theta",
    "theta7",
    "top",
    "theta7_top",
    "grading",
    "l1_roots",
])


def e8_setup():
    """E8 with the sl2-triples of its highest root and of the E7 one."""
    def build():
        algebra, frame = chevalley_algebra("E", 8)
        rs = frame.root_system
        theta = rs.highest_coefficients
        theta7 = [r for r in rs.positive_coefficients if r[7] == 0][-1]
        top = root_triple(algebra, frame, theta)
        grading = grading_by(algebra, top.h, verify=False)
        l1_roots = [r for r in rs.positive_coefficients if r[7] == 1]
        return E8Setup(algebra, frame, rs, theta, theta7, top,
                       root_triple(algebra, frame, theta7), grading,
                       l1_roots)
    return _cached("e8", build)


def _root_space(setup, roots):
    return Subspace.span(setup.algebra.dim,
                         [root_vector(setup.frame, r) for r in roots])


def l1_part(setup, level):
    """Root vectors of the 56 on which h_theta7 acts by ``level``."""
    return [r for r in setup.l1_roots
            if coroot_pairing(setup.rs, r, setup.theta7) == level]


def e7_in_e8(setup):
    """E7 as the centralizer of the highest-root sl2 of E8."""
    return centralizer_subalgebra(setup.algebra, _elements([setup.top]),
                                  frame=setup.frame)


def d6_in_e8(setup):
    return centralizer_subalgebra(
        setup.algebra, _elements([setup.top, setup.theta7_top]),
        frame=setup.frame)


def ternary_56():
    """The ternary algebra on L1 of E8 (dimension 56)."""
    def build():
        setup = e8_setup()
        return extract_fts(setup.algebra, setup.top, setup.grading)
    return _cached("fts56", build)


def d6_branching():
    """Isotypic decomposition of the 56 restricted to D6."""
    setup = e8_setup()
    d6 = d6_in_e8(setup)
    module = adjoint_module(setup.algebra, d6, setup.grading.component(1))
    return decompose_isotypic(module)


def e7_module_index():
    """Dynkin index of the 56 as an E7 module, from the action matrices."""
    setup = e8_setup()
    e7 = e7_in_e8(setup)
    module = adjoint_module(setup.algebra, e7, setup.grading.component(1))
    return module_index(module)


def d6_vector_index():
    """Dynkin index of one 12-dimensional D6 summand of the 56."""
    setup = e8_setup()
    d6 = d6_in_e8(setup)
    module = adjoint_module(setup.algebra, d6,
                            _root_space(setup, l1_part(setup, 1)))
    return module_index(module)


# The intersection of two conjugates of the D6-fixed 32

IntersectionWitness = namedtuple("IntersectionWitness", [
    "u1_dim",
    "u2_dim",
    "dim",
    "closed",
    "space",
    "fts",
    "attempts",
])


def _l1_operator(setup, x):
    """Matrix of ad(x) on the 56 for x of degree zero, in root coordinates."""
    indices = [setup.frame.root_index[r] for r in setup.l1_roots]
    position = dict((k, p) for (p, k) in enumerate(indices))
    n = len(indices)
    matrix = ExactMatrix.zeros(n, n)
    for (q, k) in enumerate(indices):
        for (i, c) in setup.algebra.bracket(x, {k: ONE}).items():
            matrix.entries[position[i], q] = c
    return matrix


def _unipotent(setup, rng):
    """exp(ad n-) exp(ad n+) on the 56 for n+- of h_theta7 degree +-1 in E7."""
    raising = [r for r in setup.rs.positive_coefficients
               if r[7] == 0 and coroot_pairing(setup.rs, r, setup.theta7) == 1]
    n_plus = combine((Fraction(rng.randint(1, 9)), root_vector(setup.frame, r))
                     for r in raising)
    n_minus = combine(
        (Fraction(rng.randint(1, 9)), root_vector(setup.frame, _negate(r)))
        for r in raising)
    return exp_nilpotent(_l1_operator(setup, n_minus)).matmul(
        exp_nilpotent(_l1_operator(setup, n_plus)))


def intersection_witness(max_attempts=4):
    """
    U1 = root vectors of the 56 fixed by D6, U2 = g U1 for a unipotent g in
    E7 drawn from the configured seed. Retries with fresh coefficients until
    the intersection has the generic dimension 8.
    """
    def build():
        setup = e8_setup()
        n = len(setup.l1_roots)
        fixed = set(l1_part(setup, 0))
        u1_positions = [p for (p, r) in enumerate(setup.l1_roots)
                        if r in fixed]
        u1 = Subspace.span(n, [{p: ONE} for p in u1_positions])
        rng = random.Random(get_config().seed)
        best = None
        for attempt in range(1, max_attempts + 1):
            g = _unipotent(setup, rng)
            u2 = Subspace.span(
                n, [dict((i, g[i, p]) for i in range(n) if g[i, p] != 0)
                    for p in u1_positions])
            meet, _ = subspace_meet_join(u1, u2)
            logger.info("Attempt %d: U1 and U2 meet in dimension %d",
                        attempt, meet.dim)
            if best is None or meet.dim < best[2].dim:
                best = (attempt, u2, meet)
            if meet.dim <= 8:
                break
        attempts, u2, meet = best
        vectors = [
            combine((c, root_vector(setup.frame, setup.l1_roots[p]))
                    for (p, c) in v.items())
            for v in meet.vectors()]
        space = Subspace.span(setup.algebra.dim, vectors)
        try:
            fts = extract_fts(setup.algebra, setup.top, setup.grading,
                              space=space)
            closed = True
        except TkkError:
            fts, closed = None, False
        return IntersectionWitness(u1.dim, u2.dim, meet.dim, closed, space,
                                   fts, attempts)
    return _cached("intersection", build)


IntersectionTypes = namedtuple("IntersectionTypes", [
    "tkk_type",
    "tkk_dim",
    "inner_dim",
    "inner_derived_type",
])


def intersection_types(witness):
    algebra = tkk(witness.fts)
    inner = fts_inner_derivations(witness.fts).lie_algebra()
    derived = derived_subalgebra(inner)
    return IntersectionTypes(
        str(identify_type(algebra)), algebra.dim, inner.dim,
        str(identify_type(derived.induced)))


def intersection_d4(witness):
    """D4 generated in E8 by U, [f, U] and the highest-root sl2."""
    setup = e8_setup()
    lowered = [setup.algebra.bracket(setup.top.f, u)
               for u in witness.space.vectors()]
    generators = witness.space.vectors() + lowered + [setup.top.e,
                                                      setup.top.f]
    return generated_subalgebra(setup.algebra, generators, frame=setup.frame)


def _inside(sub, ambient):
    """sub (a subalgebra of E8) as a subalgebra of ambient.induced."""
    frame = split_cartan(ambient.induced)
    space = Subspace.span(ambient.dim,
                          [ambient.restrict(v) for v in sub.space.vectors()])
    return Subalgebra(ambient.induced, space, frame=frame)


def intersection_d4_index(witness):
    """Dynkin index of the intersection D4 in the E7 centralizing sl2_theta7."""
    setup = e8_setup()
    d4 = intersection_d4(witness)
    e7 = centralizer_subalgebra(
        setup.algebra, _elements([setup.theta7_top]), frame=setup.frame)
    return embedding_index(_inside(d4, e7))


def vector_branching(witness):
    """The 12 (h_theta7 level 1 of the 56) restricted to C_D4(sl2_theta)."""
    setup = e8_setup()
    d4 = intersection_d4(witness)
    local = centralizer_subalgebra(
        d4.induced, _elements([_restrict_triple(d4, setup.top)]))
    three_a1 = compose(local, d4, frame=setup.frame)
    module = adjoint_module(setup.algebra, three_a1,
                            _root_space(setup, l1_part(setup, 1)))
    return str(identify_type(three_a1.induced)), decompose_isotypic(module)


# The index-2 D4 inside A7

def _a7_chain(setup):
    """Roots of the A7 chain 0-1-3-4-5-6-7 of the extended E7 diagram."""
    rank = setup.rs.rank
    chain = [_negate(setup.theta7)]
    for node in (1, 3, 4, 5, 6, 7):
        chain.append(tuple(1 if k == node - 1 else 0 for k in range(rank)))
    return chain


def _sl8_images(setup):
    """Images of the matrix units E_ij of sl8 under the chain embedding."""
    algebra, frame = setup.algebra, setup.frame
    chain = _a7_chain(setup)
    images = {}
    for (i, root) in enumerate(chain):
        images[(i, i + 1)] = root_vector(frame, root)
        images[(i + 1, i)] = root_vector(frame, _negate(root))
    for width in range(2, 8):
        for i in range(8 - width):
            j = i + width
            images[(i, j)] = algebra.bracket(images[(i, i + 1)],
                                             images[(i + 1, j)])
            images[(j, i)] = algebra.bracket(images[(j, j - 1)],
                                             images[(j - 1, i)])
    coroots = [algebra.bracket(images[(k, k + 1)], images[(k + 1, k)])
               for k in range(7)]
    return images, coroots


def so8_in_a7():
    """
    so8 for the antidiagonal form on F^8 inside the A7 subsystem of E7,
    as a subalgebra of E8.
    """
    def build():
        setup = e8_setup()
        images, coroots = _sl8_images(setup)
        vectors = []
        for i in range(8):
            for j in range(8):
                if i + j >= 7:
                    continue
                if i == j:
                    vectors.append(combine(
                        (ONE, coroots[k]) for k in range(i, 7 - i)))
                else:
                    vectors.append(combine([
                        (ONE, images[(i, j)]),
                        (-ONE, images[(7 - j, 7 - i)])]))
        space = Subspace.span(setup.algebra.dim, vectors)
        return Subalgebra(setup.algebra, space, frame=setup.frame)
    return _cached("so8-in-a7", build)


def so8_index():
    setup = e8_setup()
    return embedding_index(_inside(so8_in_a7(), e7_in_e8(setup)))


def so8_branching():
    """The 56 restricted to so8 and to the 3A1 centralizing its theta sl2."""
    setup = e8_setup()
    so8 = so8_in_a7()
    l1 = setup.grading.component(1)
    whole = decompose_isotypic(adjoint_module(setup.algebra, so8, l1))
    frame = split_cartan(so8.induced)
    triple = extraspecial_sl2(so8.induced, frame)
    local = centralizer_subalgebra(so8.induced, _elements([triple]),
                                   frame=frame)
    three_a1 = compose(local, so8, frame=setup.frame)
    refined = decompose_isotypic(adjoint_module(setup.algebra, three_a1, l1))
    return whole, refined
