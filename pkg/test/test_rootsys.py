from nose.tools import eq_, ok_, assert_raises

from tkkbench.errors import DimensionMismatch, InvalidType, NonDominantWeight
from tkkbench.rootsys import (
    algebra_dimension, build_root_system, casimir_pairing,
    dual_coxeter_number, parse_type, weyl_dimension)


def test_root_counts():
    a1 = build_root_system("A", 1)
    eq_(len(a1.roots()), 2)
    eq_(a1.dimension, 3)

    g2 = build_root_system("G", 2)
    eq_(len(g2.roots()), 12)
    eq_(sum(1 for r in g2.roots() if g2.is_long(r)), 6)

    e7 = build_root_system("E", 7)
    eq_(len(e7.roots()), 126)
    eq_(e7.dimension, 133)


def test_dimensions_match_table():
    for (family, ranks) in [("A", range(1, 9)), ("B", range(2, 9)),
                            ("C", range(2, 9)), ("D", range(4, 9)),
                            ("E", [6, 7, 8]), ("F", [4]), ("G", [2])]:
        for rank in ranks:
            rs = build_root_system(family, rank)
            eq_(rs.dimension, algebra_dimension(family, rank))


def test_highest_roots():
    eq_(build_root_system("E", 8).highest_coefficients,
        (2, 3, 4, 6, 5, 4, 3, 2))
    eq_(build_root_system("E", 7).highest_coefficients,
        (2, 2, 3, 4, 3, 2, 1))
    g2 = build_root_system("G", 2)
    ok_(g2.is_long(g2.highest_coefficients))


def test_cartan_matrix_convention():
    # entry [i][j] = <alpha_i, alpha_j^vee>; for G2 alpha_2 is long
    g2 = build_root_system("G", 2)
    eq_(g2.cartan_matrix, [[2, -1], [-3, 2]])


def test_dual_coxeter_numbers():
    expected = {("A", 3): 4, ("B", 4): 7, ("C", 3): 4, ("D", 6): 10,
                ("E", 6): 12, ("E", 7): 18, ("E", 8): 30, ("F", 4): 9,
                ("G", 2): 4}
    for ((family, rank), value) in expected.items():
        eq_(dual_coxeter_number(family, rank), value)
        eq_(build_root_system(family, rank).dual_coxeter, value)


def test_weyl_dimension():
    eq_(weyl_dimension(build_root_system("A", 1), [1]), 2)
    e7 = build_root_system("E", 7)
    eq_(weyl_dimension(e7, e7.fundamental_weight(7)), 56)
    eq_(weyl_dimension(e7, e7.adjoint_weight()), 133)
    d6 = build_root_system("D", 6)
    eq_(weyl_dimension(d6, d6.fundamental_weight(1)), 12)
    eq_(weyl_dimension(d6, d6.fundamental_weight(6)), 32)
    eq_(weyl_dimension(d6, d6.fundamental_weight(5)), 32)


def test_casimir_pairing():
    a1 = build_root_system("A", 1)
    eq_(casimir_pairing(a1, [2]), 4)
    eq_(casimir_pairing(a1, [0]), 0)
    d6 = build_root_system("D", 6)
    eq_(casimir_pairing(d6, d6.fundamental_weight(1)), 11)
    e8 = build_root_system("E", 8)
    eq_(casimir_pairing(e8, [0] * 8), 0)
    # adjoint: (theta, theta + 2 rho) = 2 h^vee
    eq_(casimir_pairing(e8, e8.adjoint_weight()), 60)


def test_bad_inputs():
    assert_raises(InvalidType, build_root_system, "D", 3)
    assert_raises(InvalidType, build_root_system, "E", 9)
    assert_raises(InvalidType, parse_type, "Q4")
    assert_raises(InvalidType, parse_type, "E")
    assert_raises(TypeError, build_root_system, "E", "7")
    a2 = build_root_system("A", 2)
    assert_raises(NonDominantWeight, weyl_dimension, a2, [1, -1])
    assert_raises(DimensionMismatch, weyl_dimension, a2, [1])
    eq_(parse_type(" e7 "), ("E", 7))
