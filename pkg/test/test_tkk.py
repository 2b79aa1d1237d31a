from nose.plugins.attrib import attr
from nose.tools import eq_, ok_, assert_raises

from tkkbench.cartan import identify_type, parse_type_label
from tkkbench.chevalley import chevalley_algebra
from tkkbench.grading import extract_fts, extraspecial_sl2
from tkkbench.liealg import structural_tests
from tkkbench.ternary import standard_symplectic_gram, trivial_fts
from tkkbench.tkk import (
    check_lts_axioms, fts_inner_derivations, inder, lts_from_fts,
    matrix_lie_algebra, tkk)


def _trivial(n):
    return trivial_fts(standard_symplectic_gram(n))


def test_lts_axioms():
    for n in [2, 4]:
        eq_(check_lts_axioms(lts_from_fts(_trivial(n))), None)


def test_lts_of_g2():
    algebra, frame = chevalley_algebra("G", 2)
    fts = extract_fts(algebra, extraspecial_sl2(algebra, frame))
    eq_(check_lts_axioms(lts_from_fts(fts)), None)


def test_tkk_of_trivial():
    algebra = tkk(_trivial(2))
    eq_(algebra.dim, 10)
    ok_(algebra.seeds)
    report = structural_tests(algebra)
    ok_(report.jacobi_ok)
    ok_(report.semisimple)
    eq_(identify_type(algebra), parse_type_label("C2"))


def test_tkk_of_trivial_c3():
    algebra = tkk(_trivial(4))
    eq_(algebra.dim, 21)
    eq_(str(identify_type(algebra)), "C3")


def test_round_trip_g2():
    algebra, frame = chevalley_algebra("G", 2)
    fts = extract_fts(algebra, extraspecial_sl2(algebra, frame))
    rebuilt = tkk(fts)
    eq_(rebuilt.dim, 14)
    eq_(str(identify_type(rebuilt)), "G2")


@attr('slow')
def test_round_trip_f4():
    algebra, frame = chevalley_algebra("F", 4)
    fts = extract_fts(algebra, extraspecial_sl2(algebra, frame))
    eq_(str(identify_type(tkk(fts))), "F4")


def test_inner_derivations():
    system = lts_from_fts(_trivial(2))
    # L-2 + L0 + L2 of C2
    eq_(inder(system).size, 6)
    # gl2: the operators xyz include the identity
    derivations = fts_inner_derivations(_trivial(2))
    eq_(derivations.size, 4)
    eq_(str(identify_type(derivations.lie_algebra())), "A1+T1")


def test_matrix_lie_algebra():
    derivations = fts_inner_derivations(_trivial(4))
    algebra = matrix_lie_algebra(derivations)
    eq_(algebra.dim, derivations.size)
    ok_(structural_tests(algebra).jacobi_ok)


def test_tkk_of_lts_directly():
    system = lts_from_fts(_trivial(2))
    algebra = tkk(system)
    eq_(algebra.dim, 10)
    eq_(algebra.seeds, [])
    assert_raises(TypeError, tkk, object())
