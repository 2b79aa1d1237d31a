from nose.plugins.attrib import attr
from nose.tools import eq_, ok_, assert_raises

from tkkbench.chevalley import chevalley_algebra
from tkkbench.errors import DegenerateForm
from tkkbench.exact import ExactMatrix
from tkkbench.gift import GiftData, split_gift_verify
from tkkbench.grading import extraspecial_sl2
from tkkbench.ternary import trivial_fts


def _verify(family, rank):
    algebra, frame = chevalley_algebra(family, rank)
    return split_gift_verify(algebra, extraspecial_sl2(algebra, frame))


def test_small_split_algebras():
    for (family, rank, dim) in [("C", 2, 2), ("C", 3, 4), ("G", 2, 4)]:
        report = _verify(family, rank)
        ok_(report.passed, family)
        eq_(report.module_dim, dim)
        eq_(report.checked, (2 * dim) ** 3)
        eq_(report.witness, None)


@attr('slow')
def test_f4():
    ok_(_verify("F", 4).passed)


def test_degenerate_form():
    assert_raises(DegenerateForm, GiftData,
                  trivial_fts(ExactMatrix.zeros(2, 2)))
