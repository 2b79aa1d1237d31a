import random
from fractions import Fraction

from nose.tools import eq_, ok_, assert_raises
import numpy.testing

from tkkbench.chevalley import chevalley_algebra
from tkkbench.errors import DimensionMismatch, NotNilpotent
from tkkbench.exact import (
    ExactMatrix, Subspace, char_poly, exp_nilpotent, format_scalar,
    inverse, rref_rank_kernel, solve_linear, sparse_kernel,
    subspace_meet_join, to_scalar)
from tkkbench.grading import extraspecial_sl2
from tkkbench.liealg import killing_gram


def test_scalars():
    eq_(to_scalar("3/6"), Fraction(1, 2))
    eq_(format_scalar(Fraction(-4, 6)), "-2/3")
    eq_(format_scalar(5), "5/1")


def test_rref_rank_kernel():
    rank, kernel, rowspace = rref_rank_kernel(ExactMatrix.identity(3))
    eq_(rank, 3)
    eq_(kernel.dim, 0)
    eq_(rowspace, Subspace.full(3))

    rank, kernel, rowspace = rref_rank_kernel(ExactMatrix([[1, 1]]))
    eq_(rank, 1)
    eq_(kernel, Subspace.span(2, [{0: 1, 1: -1}]))
    eq_(rowspace, Subspace.span(2, [{0: 1, 1: 1}]))


def test_killing_rank_g2():
    algebra, _ = chevalley_algebra("G", 2)
    rank, _, _ = rref_rank_kernel(killing_gram(algebra))
    eq_(rank, 14)


def test_solve_linear():
    eq_(solve_linear(ExactMatrix.identity(3), [1, "2/3", -4]),
        [1, Fraction(2, 3), -4])
    eq_(solve_linear(ExactMatrix([[1, 1]]), [2]), [2, 0])
    eq_(solve_linear(ExactMatrix([[1], [1]]), [1, 2]), None)
    assert_raises(DimensionMismatch, solve_linear,
                  ExactMatrix.identity(2), [1])


def test_inverse():
    m = ExactMatrix([[2, 1], [1, 1]])
    eq_(inverse(m).matmul(m), ExactMatrix.identity(2))
    assert_raises(ZeroDivisionError, inverse, ExactMatrix([[1, 2], [2, 4]]))


def test_char_poly():
    eq_(char_poly(ExactMatrix.identity(2)), [1, -2, 1])
    jordan = ExactMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    eq_(char_poly(jordan), [1, 0, 0, 0])


def test_char_poly_of_extraspecial_grading():
    algebra, frame = chevalley_algebra("C", 2)
    h = extraspecial_sl2(algebra, frame).h
    # x^4 (x - 1)^2 (x + 1)^2 (x - 2) (x + 2)
    eq_(char_poly(algebra.ad(h)),
        [1, 0, -6, 0, 9, 0, -4, 0, 0, 0, 0])


def test_subspace_meet_join():
    u = Subspace.span(3, [{0: 1}, {1: 1, 2: 1}])
    meet, join = subspace_meet_join(u, u)
    eq_(meet, u)
    eq_(join, u)

    first = Subspace.span(4, [{0: 1}, {1: 1}])
    second = Subspace.span(4, [{2: 1}, {3: 1}])
    meet, join = subspace_meet_join(first, second)
    eq_(meet.dim, 0)
    eq_(join, Subspace.full(4))

    third = Subspace.span(4, [{0: 1, 2: 1}, {1: 1}])
    meet, join = subspace_meet_join(first, third)
    eq_(meet, Subspace.span(4, [{1: 1}]))
    eq_(join.dim, 3)

    assert_raises(DimensionMismatch, subspace_meet_join, u, first)


def test_exp_nilpotent():
    eq_(exp_nilpotent(ExactMatrix.zeros(3, 3)), ExactMatrix.identity(3))
    n = ExactMatrix([[0, 1], [0, 0]])
    eq_(exp_nilpotent(n), ExactMatrix.identity(2) + n)
    jordan = ExactMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    numpy.testing.assert_array_equal(
        exp_nilpotent(jordan).entries,
        ExactMatrix([[1, 1, "1/2"], [0, 1, 1], [0, 0, 1]]).entries)
    assert_raises(NotNilpotent, exp_nilpotent, ExactMatrix.identity(2))


def test_sparse_kernel():
    kernel = sparse_kernel([{0: 1, 1: -1}, {2: 1}], 4)
    eq_(kernel.dim, 2)
    ok_(kernel.contains({0: 1, 1: 1}))
    ok_(kernel.contains({3: 5}))
    ok_(not kernel.contains({2: 1}))


def test_subspace_coordinates():
    space = Subspace.span(3, [{0: 2, 1: 2}, {2: 3}])
    vector = {0: 5, 1: 5, 2: 7}
    ok_(space.contains(vector))
    eq_(space.element(space.coordinates(vector)), vector)


def _random_matrix(rng, rows, cols, upper=False):
    entries = []
    for i in range(rows):
        entries.append([
            0 if upper and j <= i else Fraction(
                rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]),
                rng.randint(1, 3))
            for j in range(cols)])
    return ExactMatrix(entries)


def test_exp_nilpotent_inverse():
    rng = random.Random(3)
    for n in [2, 4, 6]:
        nilpotent = _random_matrix(rng, n, n, upper=True)
        ok_(not nilpotent.is_zero())
        eq_(exp_nilpotent(nilpotent).matmul(exp_nilpotent(-nilpotent)),
            ExactMatrix.identity(n))

    algebra, frame = chevalley_algebra("A", 2)
    ad = algebra.ad({frame.root_index[(1, 1)]: 1})
    eq_(exp_nilpotent(ad).matmul(exp_nilpotent(-ad)),
        ExactMatrix.identity(8))


def test_rank_of_transpose():
    rng = random.Random(5)
    for (rows, cols) in [(3, 5), (6, 4), (7, 7)]:
        m = _random_matrix(rng, rows, cols)
        eq_(m.rank(), m.transpose().rank())
    # rank 2 by construction: third row is the sum of the first two
    m = ExactMatrix([[1, 2, 3, 4], [0, 1, "1/2", 2], [1, 3, "7/2", 6]])
    eq_(m.rank(), 2)
    eq_(m.transpose().rank(), 2)
