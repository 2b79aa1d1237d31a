from fractions import Fraction

from nose.plugins.attrib import attr
from nose.tools import eq_, ok_

from tkkbench.cartan import (
    TypeLabel, complete_sl2, generic_rank, identify_type, parse_type_label,
    rational_roots, root_decomposition, split_cartan)
from tkkbench.chevalley import chevalley_algebra
from tkkbench.liealg import LieAlgebra


def _forget_frame(algebra):
    table = dict(((i, j), v) for (i, j, v) in algebra.structure_entries())
    return LieAlgebra(algebra.dim, table)


def test_type_labels():
    eq_(parse_type_label("D4+A1"), TypeLabel([("A", 1), ("D", 4)]))
    eq_(str(parse_type_label("A1+A1+A1")), "3A1")
    eq_(str(parse_type_label("a1 + d4")), "D4+A1")
    label = TypeLabel([("A", 2)], 1)
    eq_(str(label), "A2+T1")
    eq_(label.dimension, 9)
    eq_(parse_type_label("A2+T1"), label)
    eq_(str(TypeLabel([])), "0")


def test_rational_roots():
    eq_(rational_roots([1, 0, -1]), {1: 1, -1: 1})
    eq_(rational_roots([4, -4, 1]), {Fraction(1, 2): 2})


def test_complete_sl2():
    algebra, _ = chevalley_algebra("A", 1)
    triple = complete_sl2(algebra, {0: 1})
    ok_(triple.verify(algebra))
    eq_(triple.h, {1: 1})
    eq_(complete_sl2(algebra, {1: 1}), None)


def test_split_cartan_from_scratch():
    for (family, rank) in [("A", 2), ("G", 2), ("B", 3)]:
        algebra, _ = chevalley_algebra(family, rank)
        bare = _forget_frame(algebra)
        frame = split_cartan(bare)
        eq_(frame.rank, rank)
        eq_(len(frame.roots), algebra.dim - rank)
        eq_(identify_type(bare), TypeLabel([(family, rank)]))


def test_reductive_with_center():
    # gl2 as sl2 plus a central element
    algebra, _ = chevalley_algebra("A", 1)
    table = dict(((i, j), v) for (i, j, v) in algebra.structure_entries())
    gl2 = LieAlgebra(4, table)
    eq_(str(identify_type(gl2)), "A1+T1")


def test_root_decomposition_c3():
    algebra, frame = chevalley_algebra("C", 3)
    data = root_decomposition(algebra, frame)
    eq_(len(data.positive), 9)
    eq_(len(data.simple), 3)
    eq_(data.labels, [("C", 3)])
    eq_(data.center_dim, 0)
    eq_(sorted(data.lengths), [1, 1, 2])
    for h in data.coroots:
        ok_(h)


def test_identify_chevalley():
    for text in ["A3", "C2", "D4", "F4"]:
        family, rank = text[0], int(text[1:])
        algebra, _ = chevalley_algebra(family, rank)
        eq_(identify_type(algebra), parse_type_label(text))


def test_b2_reads_as_c2():
    algebra, _ = chevalley_algebra("B", 2)
    eq_(str(identify_type(algebra)), "C2")


def test_generic_rank():
    algebra, _ = chevalley_algebra("A", 2)
    eq_(generic_rank(algebra), 2)


def _check_round_trip(types):
    for (family, rank) in types:
        algebra, _ = chevalley_algebra(family, rank)
        expected = "C2" if (family, rank) == ("B", 2) else \
            "%s%d" % (family, rank)
        eq_(str(identify_type(algebra)), expected)


def test_identify_round_trip_small():
    _check_round_trip([("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2),
                       ("B", 3), ("B", 4), ("C", 2), ("C", 3), ("C", 4),
                       ("D", 4), ("D", 5), ("F", 4), ("G", 2)])


@attr('slow')
def test_identify_round_trip_rank_at_most_8():
    _check_round_trip(
        [("A", r) for r in range(5, 9)] + [("B", r) for r in range(5, 9)] +
        [("C", r) for r in range(5, 9)] + [("D", r) for r in range(6, 9)] +
        [("E", 6), ("E", 7), ("E", 8)])
