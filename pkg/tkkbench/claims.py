"""
Registry of checkable claims and the tiered runner.

Tier 0 runs in seconds, tier 1 in minutes, tier 2 (E8 sweeps, exhaustive
axiom checks in dimension 32) is unbounded and only runs when the budget
allows it.
"""

from __future__ import absolute_import, division

import logging
import multiprocessing
import time
from collections import Counter, OrderedDict, namedtuple

from typechecks import require_integer, require_string

from .cartan import TypeLabel, identify_type
from .chevalley import chevalley_algebra
from .config import get_config
from .dynkin import dims_of, rep_dynkin_index
from .errors import TkkError, UnknownClaim
from .gift import split_gift_verify
from .grading import extract_fts, extraspecial_sl2, grading_by
from .rootsys import build_root_system
from .ternary import (
    all_axioms_pass, check_bsta_axioms, fts_is_simple,
    standard_symplectic_gram, trivial_fts)
from .tkk import tkk
from . import witnesses

logger = logging.getLogger(__name__)

Claim = namedtuple("Claim", [
    "id",
    "description",
    "anchor",
    "tier",
    "procedure",
])

ClaimResult = namedtuple("ClaimResult", [
    "id",
    "status",
    "witnesses",
    "runtime",
])

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

# Types whose extraspecial grading is examined, with the tier needed.
GRADING_TYPES = [
    (("C", 2), 0),
    (("C", 3), 0),
    (("B", 3), 0),
    (("B", 4), 1),
    (("D", 4), 1),
    (("G", 2), 0),
    (("F", 4), 1),
    (("E", 6), 1),
    (("E", 7), 1),
    (("E", 8), 2),
]


def _label(family, rank):
    return "%s%d" % (family, rank)


def _types(budget):
    return [t for (t, tier) in GRADING_TYPES if tier <= budget]


def _extracted(family, rank):
    algebra, frame = chevalley_algebra(family, rank)
    triple = extraspecial_sl2(algebra, frame)
    return extract_fts(algebra, triple)


def _grading_shapes(budget):
    payload = OrderedDict()
    passed = True
    for (family, rank) in _types(budget):
        algebra, frame = chevalley_algebra(family, rank)
        grading = grading_by(algebra, extraspecial_sl2(algebra, frame).h,
                             verify=algebra.dim <= 133)
        dims = [grading.component(k).dim for k in range(-2, 3)]
        m = dims[1]
        expected = [1, m, algebra.dim - 2 * m - 2, m, 1]
        passed = passed and grading.is_extraspecial() and dims == expected
        payload[_label(family, rank)] = dims
    return passed, payload


def _axiom_suite(budget):
    payload = OrderedDict()
    passed = True
    algebras = [(_label(*t), _extracted(*t)) for t in _types(budget)]
    for n in (2, 4, 6):
        algebras.append(("trivial%d" % n,
                         trivial_fts(standard_symplectic_gram(n))))
    for (name, fts) in algebras:
        exhaustive = fts.dim <= 14 or budget >= 2
        report = check_bsta_axioms(fts, exhaustive=exhaustive)
        ok = all_axioms_pass(report)
        passed = passed and ok
        entry = OrderedDict([
            ("dim", fts.dim),
            ("axiom1", report.axiom1.passed),
            ("axiom2", report.axiom2.passed),
            ("axiom3", report.axiom3.passed),
            ("axiom3_checked", report.axiom3.checked),
            ("axiom3_exhaustive", report.axiom3.exhaustive),
        ])
        if not ok:
            failed = [r for r in report[:3] if not r.passed][0]
            entry["witness"] = list(failed.witness)
        payload[name] = entry
    return passed, payload


def _round_trip(budget):
    payload = OrderedDict()
    passed = True
    for (family, rank) in _types(budget):
        fts = _extracted(family, rank)
        algebra = tkk(fts)
        label = identify_type(algebra)
        expected = TypeLabel([(family, rank)])
        ok = label == expected and algebra.dim == expected.dimension
        passed = passed and ok
        payload[_label(family, rank)] = OrderedDict([
            ("fts_dim", fts.dim),
            ("tkk_dim", algebra.dim),
            ("type", str(label)),
        ])
    return passed, payload


def _simplicity(budget):
    payload = OrderedDict()
    passed = True
    for (family, rank) in _types(budget):
        result = fts_is_simple(_extracted(family, rank))
        passed = passed and result.simple
        payload[_label(family, rank)] = (
            True if result.simple else result.witness.dim)
    return passed, payload


CHAIN_EXPECTED = [("E7", 66, "D6"), ("D6", 31, "D4+A1"), ("3A1", 28, "D4")]


def _centralizer_chain(budget):
    observed = witnesses.centralizer_chain_payload()
    payload = OrderedDict(
        (source, OrderedDict([("dim", dim), ("type", label)]))
        for (source, dim, label) in observed)
    return observed == CHAIN_EXPECTED, payload


def _dynkin_indices(budget):
    d6 = build_root_system("D", 6)
    e7 = build_root_system("E", 7)
    values = OrderedDict([
        ("D6_vector", rep_dynkin_index(d6, d6.fundamental_weight(1))),
        ("D6_vector_measured", witnesses.d6_vector_index()),
        ("E7_omega7", rep_dynkin_index(e7, e7.fundamental_weight(7))),
        ("E7_omega7_measured", witnesses.e7_module_index()),
        ("theta_sl2_in_E7", witnesses.theta_sl2_index()),
    ])
    expected = {"D6_vector": 2, "D6_vector_measured": 2, "E7_omega7": 12,
                "E7_omega7_measured": 12, "theta_sl2_in_E7": 1,
                "intersection_D4_in_E7": 1}
    witness = witnesses.intersection_witness()
    # None fails the claim when there is no 8-dim product-closed witness
    values["intersection_D4_in_E7"] = (
        witnesses.intersection_d4_index(witness)
        if witness.dim == 8 and witness.closed else None)
    passed = all(values.get(k) == v for (k, v) in expected.items())
    return passed, values


def _intersection_bound(budget):
    witness = witnesses.intersection_witness()
    payload = OrderedDict([
        ("U1", witness.u1_dim),
        ("U2", witness.u2_dim),
        ("intersection", witness.dim),
        ("product_closed", witness.closed),
        ("attempts", witness.attempts),
    ])
    passed = witness.dim >= 8 and witness.closed
    if passed and witness.dim == 8:
        types = witnesses.intersection_types(witness)
        payload["tkk_type"] = types.tkk_type
        payload["tkk_dim"] = types.tkk_dim
        payload["inner_derived_type"] = types.inner_derived_type
        passed = types.tkk_type == "D4" and types.inner_derived_type == "3A1"
    return passed, payload


def decomposition_text(components):
    """'32+2*12' style summary of irreducible dimensions."""
    counts = dims_of(components)
    parts = []
    for dim in sorted(counts, reverse=True):
        k = counts[dim]
        parts.append("%d" % dim if k == 1 else "%d*%d" % (k, dim))
    return "+".join(parts)


def highest_weights(components):
    """Counter of highest weights with multiplicity."""
    out = Counter()
    for c in components:
        out[c.highest_weight] += c.multiplicity
    return out


def _weight_shapes(components):
    # node order of an identified summand is not fixed, sorted labels are
    out = Counter()
    for c in components:
        out[(c.dimension, tuple(sorted(c.highest_weight)))] += c.multiplicity
    return out


ADJOINTS_3A1 = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
VECTOR_3A1 = Counter(dict([(w, 1) for w in ADJOINTS_3A1] +
                          [((0, 0, 0), 3)]))
REFINED_3A1 = Counter(dict([(w, 2) for w in ADJOINTS_3A1] +
                           [((1, 1, 1), 4), ((0, 0, 0), 6)]))


def _branching(budget):
    payload = OrderedDict()
    checks = []
    d6 = witnesses.d6_branching()
    payload["56|D6"] = decomposition_text(d6)
    checks.append(_weight_shapes(d6) == Counter({
        (12, (0, 0, 0, 0, 0, 1)): 2, (32, (0, 0, 0, 0, 0, 1)): 1}))
    witness = witnesses.intersection_witness()
    if witness.dim == 8 and witness.closed:
        label, components = witnesses.vector_branching(witness)
        payload["12|%s" % label] = decomposition_text(components)
        checks.append(label == "3A1" and
                      highest_weights(components) == VECTOR_3A1)
    else:
        checks.append(False)
    if budget >= 2:
        whole, refined = witnesses.so8_branching()
        payload["56|D4(index 2)"] = decomposition_text(whole)
        payload["56|3A1(index 2)"] = decomposition_text(refined)
        checks.append(_weight_shapes(whole) ==
                      Counter({(28, (0, 0, 0, 1)): 2}))
        checks.append(highest_weights(refined) == REFINED_3A1)
        payload["D4(index 2) in E7"] = witnesses.so8_index()
        checks.append(payload["D4(index 2) in E7"] == 2)
    return all(checks), payload


def _split_gift(budget):
    payload = OrderedDict()
    passed = True
    names = [("C", 2), ("G", 2)] + ([("E", 7)] if budget >= 2 else [])
    for (family, rank) in names:
        algebra, frame = chevalley_algebra(family, rank)
        report = split_gift_verify(algebra, extraspecial_sl2(algebra, frame))
        passed = passed and report.passed
        entry = OrderedDict([("module_dim", report.module_dim),
                             ("checked", report.checked)])
        if not report.passed:
            entry["witness"] = list(report.witness)
        payload[_label(family, rank)] = entry
    return passed, payload


def _matrix(multi):
    return [list(row) for row in multi.matrix.to_lists()]


def _multi_index_composition(budget):
    lower, upper, composite = witnesses.chain_multi_indices()
    product = lower.then(upper)
    payload = OrderedDict([
        ("D4+A1->D6", _matrix(lower)),
        ("D6->E7", _matrix(upper)),
        ("D4+A1->E7", _matrix(composite)),
        ("product", _matrix(product)),
        ("rows", ["%s%d" % s for s in lower.source]),
    ])
    column = [row[0] for row in _matrix(lower)]
    passed = column == [1, 1] and \
        product.matrix == composite.matrix
    return passed, payload


CLAIMS = OrderedDict((c.id, c) for c in [
    Claim("C1", "Extraspecial gradings have shape (1, m, d - 2m - 2, m, 1)",
          "dim L2 = dim L-2 = 1", 0, _grading_shapes),
    Claim("C2", "Extracted and trivial ternary algebras satisfy the axioms",
          "the product satisfies the following axioms", 0, _axiom_suite),
    Claim("C3", "TKK of the extracted algebra recovers the simple algebra",
          "produce the following simple Lie algebras", 0, _round_trip),
    Claim("C4", "Every extracted ternary algebra is simple",
          "then A is simple", 0, _simplicity),
    Claim("C5", "Centralizer chain E7 > D6 > D4+A1 and the commuting 3A1",
          "of type D4+A1", 1, _centralizer_chain),
    Claim("C6", "Dynkin indices of the D6 vector, the 56 and two embeddings",
          "the Dynkin index of the vector representation is 2", 1,
          _dynkin_indices),
    Claim("C7", "Two conjugates of the 32 meet in an 8-dimensional subalgebra",
          "at least 32+32-56=8", 1, _intersection_bound),
    Claim("C8", "Branching of the 56 and of the 12",
          "the sum of two copies of the vector representation and the "
          "half-spinor representation", 1, _branching),
    Claim("C9", "Derivation formula on F^2 (x) L1 in the split case",
          "D(u,v)=1/2(pi(phi(.,u)v-phi(.,v)u)+phi(v,u)-phi(u,v))", 0,
          _split_gift),
    Claim("C10", "Multi-indices compose by matrix product",
          "matrix product of the Dynkin multi-indices", 1,
          _multi_index_composition),
])


def _claim_key(claim_id):
    return int(claim_id[1:]) if claim_id[1:].isdigit() else claim_id


def list_claims(tier=None, claim_id=None):
    """Registered claims, optionally those of at most ``tier`` or one id."""
    out = []
    for claim in CLAIMS.values():
        if tier is not None and claim.tier > tier:
            continue
        if claim_id is not None and claim.id != claim_id:
            continue
        out.append(claim)
    return out


def run_claim(claim_id, tier_budget=1):
    """
    Run one claim. Claims above the tier budget are skipped; a TkkError
    raised by the procedure is reported as a failure with its message.
    """
    require_string(claim_id, "claim_id")
    require_integer(tier_budget, "tier_budget")
    if claim_id not in CLAIMS:
        raise UnknownClaim(claim_id)
    claim = CLAIMS[claim_id]
    if claim.tier > tier_budget:
        logger.info("Skipping claim %s (tier %d > budget %d)",
                    claim_id, claim.tier, tier_budget)
        return ClaimResult(claim_id, SKIPPED, OrderedDict(), 0.0)
    start = time.time()
    try:
        passed, payload = claim.procedure(tier_budget)
    except TkkError as e:
        logger.warning("Claim %s raised %s: %s", claim_id,
                       type(e).__name__, e)
        passed, payload = False, OrderedDict([
            ("error", type(e).__name__), ("message", str(e))])
    runtime = time.time() - start
    logger.info("Ran claim %s in %0.3f sec.", claim_id, runtime)
    return ClaimResult(claim_id, PASS if passed else FAIL, payload, runtime)


def _run_packed(args):
    return run_claim(*args)


def run_claims(claim_ids=None, tier_budget=1, threads=None):
    """Run several claims (in worker processes when threads > 1)."""
    if claim_ids is None:
        claim_ids = list(CLAIMS)
    for claim_id in claim_ids:
        if claim_id not in CLAIMS:
            raise UnknownClaim(claim_id)
    if threads is None:
        threads = get_config().threads
    jobs = [(claim_id, tier_budget) for claim_id in claim_ids]
    if threads > 1 and len(jobs) > 1:
        pool = multiprocessing.Pool(min(threads, len(jobs)))
        try:
            results = pool.map(_run_packed, jobs)
        finally:
            pool.close()
            pool.join()
    else:
        results = [_run_packed(job) for job in jobs]
    return sorted(results, key=lambda r: _claim_key(r.id))
