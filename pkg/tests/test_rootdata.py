from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affmv.errors import DimensionMismatch, NotInTitsConeInterior
from affmv.rootdata import (
    CartanMatrix,
    affine_reflection,
    affine_root,
    build_affine_sl2,
    build_finite,
    build_from_cartan,
    finite_weyl_group,
    pair,
    reduced_words,
    vec,
)

A = build_affine_sl2()
coords = st.integers(-6, 6)
vectors = st.tuples(coords, coords, coords).map(vec)


def test_affine_pairings():
    assert A.cartan.entries == ((2, -2), (-2, 2))
    a0, a1 = A.simple_roots
    assert add_forms(a0, a1) == vec(A.delta)
    assert pair(A.delta, A.null_coroot) == 0
    assert pair(a0, A.null_coroot) == 0 and pair(a1, A.null_coroot) == 0


def add_forms(f, g):
    return tuple(a + b for a, b in zip(f, g))


def test_cartan_rejects_bad_matrices():
    with pytest.raises(ValueError):
        CartanMatrix(((2, 1), (-1, 2)))
    with pytest.raises(ValueError):
        CartanMatrix(((2, -1), (0, 2)))
    with pytest.raises(ValueError):
        CartanMatrix(((1, 0), (0, 2)))


def test_pair_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        pair((1, 2), (1, 2, 3))


@given(vectors, st.sampled_from([0, 1]))
def test_simple_reflection_is_involution(v, i):
    assert A.reflect(i, A.reflect(i, v)) == v


@given(vectors, st.lists(st.sampled_from([0, 1]), max_size=6))
def test_weyl_action_preserves_level_and_pairing(v, word):
    w = A.weyl_act(word, v)
    assert pair(A.delta, w) == pair(A.delta, v)
    f = A.weyl_act_form(word, A.simple_roots[0])
    assert pair(f, w) == pair(A.simple_roots[0], v)


def test_weyl_word_order():
    v = vec(0, 1, 4)
    assert A.weyl_act([0, 1], v) == A.reflect(0, A.reflect(1, v))


@given(st.sampled_from([1, -1]), st.integers(0, 5))
def test_affine_roots(sign, k):
    r = affine_root(A, sign, k)
    assert pair(r.form, r.coroot) == 2
    assert (r.sign, r.k) == (sign, k)
    x = vec(3, -1, 2)
    y = affine_reflection(r, k, x)
    assert affine_reflection(r, k, y) == x
    assert pair(r.form, x) + pair(r.form, y) == -2 * k


def test_labels_of_root_images():
    r = A.root_image([0], A.simple_root(1))  # s0(a1) = 2 delta - a1
    assert (r.sign, r.k) == (-1, 2)
    assert A.is_positive(r)
    assert not A.is_positive(r.negate())


@pytest.mark.parametrize(
    "word,ok", [((0, 1, 0, 1), True), ((0, 0), False), ((1, 0, 1), True), ((1, 0, 0, 1), False), ((), True)]
)
def test_is_reduced_affine(word, ok):
    assert A.is_reduced(word) is ok


@pytest.mark.parametrize("name,order", [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12)])
def test_finite_weyl_group_orders(name, order):
    assert len(finite_weyl_group(build_finite(name))) == order


@pytest.mark.parametrize("name,count", [("A2", 3), ("B2", 4), ("G2", 6)])
def test_positive_roots_finite(name, count):
    assert len(build_finite(name).positive_real_roots()) == count


def test_reduced_words_of_longest_elements():
    assert sorted(reduced_words(build_finite("A2"), (0, 1, 0))) == [(0, 1, 0), (1, 0, 1)]
    assert len(reduced_words(build_finite("B2"), (0, 1, 0, 1))) == 2


def test_build_from_cartan_dispatch():
    assert build_from_cartan(((2, -2), (-2, 2))).is_affine
    assert build_from_cartan(((2, -1), (-1, 2))).name == "A2"


def test_dominant_representative_and_tits_cone():
    v = vec(1, -2, 3)
    dom, word = A.dominant_representative(v)
    assert A.is_dominant(dom)
    assert A.weyl_act(word, dom) == v
    with pytest.raises(NotInTitsConeInterior):
        A.dominant_representative(vec(1, 0, 0))
    assert A.dominant_representative(vec(1, 1, 0))[0] == vec(1, 1, 0)


def test_integrality_convention():
    assert A.is_integral(vec(0, 1, 4))
    assert A.is_integral(vec(Q(1, 2), Q(1, 2), 3))  # both simple roots integral
    assert not A.is_integral(vec(Q(1, 4), 0, 3))


def test_affine_positive_roots_cutoff():
    roots = A.positive_real_roots(2)
    assert len(roots) == 5
    assert all(A.is_positive(r) for r in roots)
