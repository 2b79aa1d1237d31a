from nose.plugins.attrib import attr
from nose.tools import eq_, ok_, assert_raises

from tkkbench import witnesses
from tkkbench.claims import (
    CLAIMS, Claim, FAIL, PASS, REFINED_3A1, SKIPPED, decomposition_text,
    highest_weights, list_claims, run_claim, run_claims)
from tkkbench.dynkin import IsotypicComponent
from tkkbench.errors import DimensionMismatch, UnknownClaim
from tkkbench.witnesses import IntersectionWitness


def test_registry():
    eq_(len(list_claims()), 10)
    eq_([c.id for c in list_claims(tier=0)], ["C1", "C2", "C3", "C4", "C9"])
    eq_([c.id for c in list_claims(claim_id="C7")], ["C7"])
    eq_(list_claims(claim_id="C99"), [])
    for claim in CLAIMS.values():
        ok_(claim.anchor)
        ok_(claim.description)
        ok_(claim.tier in (0, 1, 2))


def test_unknown_claim():
    assert_raises(UnknownClaim, run_claim, "C99")
    assert_raises(UnknownClaim, run_claims, ["C1", "C99"])
    assert_raises(TypeError, run_claim, 5)


def test_skipped_above_budget():
    result = run_claim("C7", tier_budget=0)
    eq_(result.status, SKIPPED)
    eq_(result.witnesses, {})


def test_grading_shapes():
    result = run_claim("C1", tier_budget=0)
    eq_(result.status, PASS)
    eq_(result.witnesses["C2"], [1, 2, 4, 2, 1])
    eq_(result.witnesses["G2"], [1, 4, 4, 4, 1])
    ok_("E7" not in result.witnesses)


def test_split_gift_claim():
    result = run_claim("C9", tier_budget=0)
    eq_(result.status, PASS)
    eq_(result.witnesses["C2"]["module_dim"], 2)
    ok_("E7" not in result.witnesses)


def test_error_becomes_failure():
    def broken(budget):
        raise DimensionMismatch("broken procedure")
    CLAIMS["C99"] = Claim("C99", "broken", "none", 0, broken)
    try:
        result = run_claim("C99", tier_budget=0)
    finally:
        del CLAIMS["C99"]
    eq_(result.status, FAIL)
    eq_(result.witnesses["error"], "DimensionMismatch")
    eq_(result.witnesses["message"], "broken procedure")


def test_results_sorted_by_number():
    results = run_claims(["C9", "C1", "C10"], tier_budget=0, threads=1)
    eq_([r.id for r in results], ["C1", "C9", "C10"])
    eq_(results[2].status, SKIPPED)


def test_decomposition_text():
    components = [IsotypicComponent((0, 0, 0, 0, 0, 1), 1, 32),
                  IsotypicComponent((1, 0, 0, 0, 0, 0), 2, 12)]
    eq_(decomposition_text(components), "32+2*12")
    eq_(decomposition_text([]), "")


def _with_witnesses(replacements, claim_id):
    originals = dict((name, getattr(witnesses, name))
                     for name in replacements)
    for (name, value) in replacements.items():
        setattr(witnesses, name, value)
    try:
        return run_claim(claim_id, tier_budget=1)
    finally:
        for (name, value) in originals.items():
            setattr(witnesses, name, value)


def _witness(dim):
    return IntersectionWitness(32, 32, dim, True, None, None, 1)


INDEX_VALUES = {
    "d6_vector_index": lambda: 2,
    "e7_module_index": lambda: 12,
    "theta_sl2_index": lambda: 1,
    "intersection_d4_index": lambda witness: 1,
}


def test_dynkin_claim_requires_intersection_index():
    replacements = dict(INDEX_VALUES, intersection_witness=lambda: _witness(8))
    eq_(_with_witnesses(replacements, "C6").status, PASS)

    replacements["intersection_witness"] = lambda: _witness(10)
    result = _with_witnesses(replacements, "C6")
    eq_(result.status, FAIL)
    eq_(result.witnesses["intersection_D4_in_E7"], None)


D6_COMPONENTS = [IsotypicComponent((0, 0, 0, 0, 0, 1), 1, 32),
                 IsotypicComponent((1, 0, 0, 0, 0, 0), 2, 12)]


def test_branching_claim_compares_highest_weights():
    right = [IsotypicComponent((2, 0, 0), 1, 3),
             IsotypicComponent((0, 2, 0), 1, 3),
             IsotypicComponent((0, 0, 2), 1, 3),
             IsotypicComponent((0, 0, 0), 3, 1)]
    wrong = [IsotypicComponent((2, 0, 0), 3, 3),
             IsotypicComponent((0, 0, 0), 3, 1)]
    replacements = {
        "d6_branching": lambda: D6_COMPONENTS,
        "intersection_witness": lambda: _witness(8),
        "vector_branching": lambda witness: ("3A1", right),
    }
    eq_(_with_witnesses(replacements, "C8").status, PASS)

    replacements["vector_branching"] = lambda witness: ("3A1", wrong)
    result = _with_witnesses(replacements, "C8")
    eq_(result.status, FAIL)
    eq_(result.witnesses["12|3A1"], "3*3+3*1")


def test_highest_weights():
    eq_(highest_weights(D6_COMPONENTS),
        {(0, 0, 0, 0, 0, 1): 1, (1, 0, 0, 0, 0, 0): 2})
    eq_(sum(REFINED_3A1.values()), 16)


@attr('slow')
def test_tier0_claims_pass():
    for result in run_claims(tier_budget=0, threads=1):
        ok_(result.status in (PASS, SKIPPED), result)


@attr('slow')
def test_tier1_claims_pass():
    for result in run_claims(tier_budget=1):
        eq_(result.status, PASS, result.id)
