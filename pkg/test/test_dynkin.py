from fractions import Fraction

from nose.tools import eq_, ok_, assert_raises

from tkkbench import dynkin
from tkkbench.chevalley import chevalley_algebra, root_vector
from tkkbench.dynkin import (
    NormalizedForm, adjoint_module, decompose_isotypic, dims_of,
    embedding_index, long_coroot, module_index, module_weights, multi_index,
    rep_dynkin_index)
from tkkbench.errors import IdentificationFailure
from tkkbench.exact import ExactMatrix
from tkkbench.grading import extraspecial_sl2, grading_by
from tkkbench.liealg import centralizer_subalgebra, generated_subalgebra
from tkkbench.rootsys import build_root_system, dual_coxeter_number


def _theta_pair(frame):
    theta = frame.root_system.highest_coefficients
    return [root_vector(frame, theta),
            root_vector(frame, tuple(-c for c in theta))]


def test_rep_dynkin_index():
    a1 = build_root_system("A", 1)
    eq_(rep_dynkin_index(a1, [1]), 1)
    eq_(rep_dynkin_index(a1, [2]), 4)
    d6 = build_root_system("D", 6)
    eq_(rep_dynkin_index(d6, d6.fundamental_weight(1)), 2)
    e7 = build_root_system("E", 7)
    eq_(rep_dynkin_index(e7, e7.fundamental_weight(7)), 12)
    eq_(rep_dynkin_index(e7, e7.adjoint_weight()), 36)
    g2 = build_root_system("G", 2)
    eq_(rep_dynkin_index(g2, g2.fundamental_weight(1)), 2)


def test_adjoint_index_is_twice_dual_coxeter():
    for (family, ranks) in [("A", range(1, 9)), ("B", range(2, 9)),
                            ("C", range(2, 9)), ("D", range(4, 9)),
                            ("E", [6, 7, 8]), ("F", [4]), ("G", [2])]:
        for rank in ranks:
            rs = build_root_system(family, rank)
            eq_(rep_dynkin_index(rs, rs.adjoint_weight()),
                2 * dual_coxeter_number(family, rank))


def test_normalized_form():
    algebra, _ = chevalley_algebra("C", 3)
    form = NormalizedForm(algebra)
    eq_(form.factor, Fraction(1, 8))
    h = long_coroot(algebra, form.data, form.data.components[0])
    eq_(form.value(h, h), 2)


def test_normalized_form_rejects_wrong_coxeter_number():
    algebra, _ = chevalley_algebra("C", 3)
    original = dynkin.dual_coxeter_number
    dynkin.dual_coxeter_number = lambda family, rank: 5
    try:
        assert_raises(IdentificationFailure, NormalizedForm, algebra)
    finally:
        dynkin.dual_coxeter_number = original


def test_root_sl2_indices():
    algebra, frame = chevalley_algebra("G", 2)
    long_sl2 = generated_subalgebra(algebra, _theta_pair(frame))
    eq_(long_sl2.dim, 3)
    eq_(embedding_index(long_sl2), 1)
    short_sl2 = generated_subalgebra(
        algebra, [root_vector(frame, (1, 0)), root_vector(frame, (-1, 0))])
    eq_(embedding_index(short_sl2), 3)


def test_embedding_index_needs_simple():
    algebra, frame = chevalley_algebra("C", 3)
    pair = _theta_pair(frame)
    centralizer = centralizer_subalgebra(algebra, pair, frame=frame)
    eq_(embedding_index(centralizer), 1)
    both = generated_subalgebra(
        algebra, pair + centralizer.space.vectors(), frame=frame)
    eq_(both.dim, 13)
    assert_raises(IdentificationFailure, embedding_index, both)


def test_multi_index():
    algebra, frame = chevalley_algebra("C", 3)
    pair = _theta_pair(frame)
    centralizer = centralizer_subalgebra(algebra, pair, frame=frame)
    both = generated_subalgebra(
        algebra, pair + centralizer.space.vectors(), frame=frame)
    multi = multi_index(both)
    eq_(multi.source, [("A", 1), ("C", 2)])
    eq_(multi.target, [("C", 3)])
    eq_(multi.matrix, ExactMatrix([[1], [1]]))

    # C2 inside C3 inside C3 composes to the same multi-index
    whole = generated_subalgebra(algebra, [{i: 1} for i in range(21)],
                                 frame=frame)
    composite = multi_index(centralizer).then(multi_index(whole))
    eq_(composite.matrix, ExactMatrix([[1]]))
    eq_(composite.source, [("C", 2)])


def test_l1_as_module():
    algebra, frame = chevalley_algebra("C", 3)
    triple = extraspecial_sl2(algebra, frame)
    top = grading_by(algebra, triple.h).component(1)
    centralizer = centralizer_subalgebra(
        algebra, [triple.e, triple.f], frame=frame)
    action = adjoint_module(algebra, centralizer, top)
    ok_(action.is_representation())
    eq_(sum(module_weights(action).values()), 4)
    components = decompose_isotypic(action)
    eq_(dims_of(components), {4: 1})
    eq_(components[0].multiplicity, 1)
    eq_(module_index(action), 1)


def test_adjoint_module_index():
    algebra, frame = chevalley_algebra("G", 2)
    whole = generated_subalgebra(
        algebra, [{i: 1} for i in range(algebra.dim)], frame=frame)
    action = adjoint_module(algebra, whole, whole.space)
    eq_(module_index(action), 8)
    eq_(dims_of(decompose_isotypic(action)), {14: 1})
