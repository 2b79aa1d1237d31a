import random
from fractions import Fraction
from itertools import product

from nose.tools import eq_, ok_, assert_raises

from tkkbench.errors import DimensionMismatch
from tkkbench.exact import ExactMatrix, axpy, inverse
from tkkbench.ternary import (
    HALF, TernaryAlgebra, all_axioms_pass, check_bsta_axioms, fts_direct_sum,
    fts_is_simple, fts_subalgebra_closure, ideal_closure, left_operators,
    restrict_fts, standard_symplectic_gram, trivial_convention_search,
    trivial_fts)


def test_symplectic_gram():
    gram = standard_symplectic_gram(4)
    eq_(gram.to_lists(), [[0, 0, 1, 0], [0, 0, 0, 1],
                          [-1, 0, 0, 0], [0, -1, 0, 0]])
    assert_raises(DimensionMismatch, standard_symplectic_gram, 3)


def test_trivial_product():
    algebra = trivial_fts(standard_symplectic_gram(2))
    e0, e1 = {0: 1}, {1: 1}
    eq_(algebra.form(e0, e1), 1)
    eq_(algebra.form(e1, e0), -1)
    eq_(algebra.triple(e0, e0, e1), e0)
    eq_(algebra.triple(e1, e1, e0), {1: -1})
    eq_(algebra.triple(e0, e1, e0), {})
    ok_(algebra.is_nondegenerate())


def test_trivial_axioms():
    for n in [2, 4, 6]:
        report = check_bsta_axioms(trivial_fts(standard_symplectic_gram(n)))
        ok_(all_axioms_pass(report), n)
        ok_(report.axiom3.exhaustive)
        eq_(report.axiom1.checked, n ** 3)
        eq_(report.axiom3.checked, n ** 5)


def test_sampled_third_axiom():
    algebra = trivial_fts(standard_symplectic_gram(4))
    report = check_bsta_axioms(algebra, exhaustive=False, samples=300)
    ok_(all_axioms_pass(report))
    ok_(not report.axiom3.exhaustive)
    eq_(report.axiom3.checked, 300)


def test_wrong_convention_fails():
    gram = standard_symplectic_gram(2)
    report = check_bsta_axioms(trivial_fts(gram, (1, 1, -1)))
    ok_(not report.axiom1.passed)
    ok_(report.axiom1.witness is not None)
    ok_(report.axiom1.residual)
    ok_(not all_axioms_pass(report))


def test_all_positive_halves_fail_first_axiom():
    gram = standard_symplectic_gram(2)
    algebra = trivial_fts(gram, (HALF, HALF, HALF))
    report = check_bsta_axioms(algebra)
    ok_(not report.axiom1.passed)
    (a, b, c) = report.axiom1.witness
    x, y, z = {a: 1}, {b: 1}, {c: 1}
    expected = {}
    axpy(expected, algebra.form(y, z), x)
    axpy(expected, algebra.form(z, x), y)
    eq_(report.axiom1.residual, expected)
    eq_(report.axiom1.witness, (0, 1, 0))
    eq_(report.axiom1.residual, {0: -1})


def test_convention_search():
    result = trivial_convention_search(standard_symplectic_gram(2))
    eq_(result.coefficients, (HALF, HALF, -HALF))
    ok_(all_axioms_pass(result.report))


def test_simplicity():
    algebra = trivial_fts(standard_symplectic_gram(2))
    ok_(fts_is_simple(algebra).simple)
    doubled = fts_direct_sum(algebra, algebra)
    eq_(doubled.dim, 4)
    result = fts_is_simple(doubled)
    ok_(not result.simple)
    eq_(result.witness.dim, 2)


def _rebased(algebra, vectors):
    """The same algebra written in the basis ``vectors``."""
    n = algebra.dim
    change = ExactMatrix.from_sparse_columns(vectors, n)
    back = inverse(change)
    table = {}
    for (a, b, c) in product(range(n), repeat=3):
        value = back.apply(algebra.triple(vectors[a], vectors[b], vectors[c]))
        if value:
            table[(a, b, c)] = value
    gram = ExactMatrix([[algebra.form(u, v) for v in vectors]
                        for u in vectors])
    return TernaryAlgebra(n, table, gram)


def test_simplicity_in_mixed_basis():
    algebra = trivial_fts(standard_symplectic_gram(2))
    doubled = fts_direct_sum(algebra, algebra)
    mixed = _rebased(doubled, [{0: 1, 2: 1}, {1: 1, 3: 1},
                               {0: 1, 2: -1}, {1: 1, 3: 2}])
    ok_(all_axioms_pass(check_bsta_axioms(mixed)))
    for i in range(4):
        eq_(ideal_closure(mixed, [{i: 1}]).dim, 4)
    result = fts_is_simple(mixed)
    ok_(not result.simple)
    eq_(result.witness.dim, 2)


def test_direct_sum_is_componentwise():
    first = trivial_fts(standard_symplectic_gram(2))
    doubled = fts_direct_sum(first, first)
    eq_(doubled.triple({2: 1}, {2: 1}, {3: 1}), {2: 1})
    eq_(doubled.triple({0: 1}, {2: 1}, {3: 1}), {})
    eq_(doubled.form({0: 1}, {3: 1}), 0)
    eq_(doubled.form({2: 1}, {3: 1}), 1)


def test_closure_and_restriction():
    algebra = trivial_fts(standard_symplectic_gram(4))
    # a symplectic pair spans a closed subalgebra
    space = fts_subalgebra_closure(algebra, [{0: 1}, {2: 1}])
    eq_(space.dim, 2)
    sub = restrict_fts(algebra, space)
    eq_(sub, trivial_fts(standard_symplectic_gram(2)))
    ok_(all_axioms_pass(check_bsta_axioms(sub)))

    # the trivial product stays inside the span of its arguments
    eq_(fts_subalgebra_closure(algebra, [{0: 1}, {1: 1}]).dim, 2)
    eq_(fts_subalgebra_closure(algebra, [{0: 1, 1: 1}, {2: 1}]).dim, 2)


def test_left_operators():
    algebra = trivial_fts(standard_symplectic_gram(2))
    operators = left_operators(algebra)
    eq_(operators[(0, 0)][1], {0: 1})
    eq_(operators[(0, 1)][0], {})


def test_product_values_are_fractions():
    algebra = trivial_fts(standard_symplectic_gram(2))
    for (_, vector) in algebra.product_entries():
        for x in vector.values():
            ok_(isinstance(x, Fraction))


def test_closure_is_monotone_and_idempotent():
    algebra = trivial_fts(standard_symplectic_gram(6))
    rng = random.Random(11)

    def seed():
        return dict((rng.randrange(6), Fraction(rng.randint(1, 4)))
                    for _ in range(2))

    for _ in range(5):
        first = [seed()]
        both = first + [seed()]
        small = fts_subalgebra_closure(algebra, first)
        large = fts_subalgebra_closure(algebra, both)
        ok_(small.dim >= 1)
        ok_(large.contains_subspace(small))
        eq_(fts_subalgebra_closure(algebra, small.vectors()), small)
        eq_(fts_subalgebra_closure(algebra, large.vectors()), large)
