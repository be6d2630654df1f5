import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from affmv.errors import DimensionMismatch, NonReducedWord
from affmv.paths import AFFINE, apply_fword, ddim, is_lambda_path, minimum, parse_fword, point, straight_path
from affmv.rootdata import pair
from affmv.treefold import (
    Factor,
    build_folded,
    fold_plus,
    genericity,
    parameter_space,
    random_coeffs,
    retract_step,
    stable_sections,
)
from affmv.upsilon import upsilon_prime

from .conftest import LEVEL3, SMALL


def alternating_words(n):
    out = [()]
    for length in range(1, n + 1):
        out += [tuple((s + j) % 2 for j in range(length)) for s in (0, 1)]
    return out


def steps(max_len):
    for w in alternating_words(max_len - 1):
        for i in (0, 1):
            if not w or w[-1] != i:
                yield w, i


def twisted_rho_defect(path, word):
    """rho(lambda - w^{-1} mu) with mu the displacement of the path."""
    mu = tuple(b - a for a, b in zip(path.start, path.end))
    m = AFFINE.weyl_act(tuple(reversed(word)), mu)
    return pair(AFFINE.rho, tuple(a - b for a, b in zip(path.shape, m)))


EXAMPLE = apply_fword(straight_path(LEVEL3), parse_fword("f1^3 f0^3 f1^2 f0^2 f1 f0"))


# genericity


def test_genericity_examples():
    assert genericity([Q(3)])
    assert not genericity([Q(1), Q(-1)])
    assert genericity([Q(1), Q(-1)], levels=[0, 1])
    assert genericity([Q(2, 3), Q(5), Q(1, 7)])
    assert not genericity([Q(0)])
    assert genericity([])


@given(st.lists(st.fractions(min_value=Q(1, 100), max_value=10), max_size=8))
def test_positive_is_generic(cs):
    assert genericity(cs)


def test_backwards_sums():
    # the last entry is summed first
    assert genericity([Q(-1), Q(2)])
    assert not genericity([Q(1), Q(-2), Q(2)])
    assert genericity([Q(2), Q(-2), Q(1)])
    assert not genericity([Q(1), Q(1), Q(-2), Q(1)])


def test_random_coeffs_generic():
    rng = random.Random(7)
    for n in range(8):
        cs = random_coeffs(n, rng)
        assert len(cs) == n and genericity(cs)


# building


def test_straight_path_has_no_markers():
    p = straight_path(SMALL)
    eta = build_folded(p, (), 1, [])
    assert eta.markers == ()
    assert fold_plus(eta) == upsilon_prime(p, (1,))


def test_example_markers():
    secs = stable_sections(EXAMPLE, (), 1)
    assert sorted(s.level for s in secs) == [-2, -1]
    eta = build_folded(EXAMPLE, (), 1, [Q(1), Q(2)])
    assert [m.level for m in eta.markers] == [s.level for s in secs]
    assert [m.interval for m in eta.markers] == sorted(m.interval for m in eta.markers)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        build_folded(EXAMPLE, (), 1, [Q(1)])


def test_non_reduced_step():
    with pytest.raises(NonReducedWord):
        build_folded(EXAMPLE, (1,), 1, [])


def test_zero_coefficients_keep_tail(small_crystal):
    """With vanishing coefficients only the prefix up to the first minimum moves."""
    for p in small_crystal.elements(4):
        for w, i in steps(3):
            n = len(stable_sections(p, w, i))
            base = upsilon_prime(p, w)
            beta = AFFINE.root_image(w, AFFINE.simple_root(i))
            _, q, _ = minimum(base, beta)
            out, generic = retract_step(p, w, i, [Q(0)] * n)
            assert generic == (n == 0)
            for t in (q + (1 - q) * Q(k, 7) for k in range(1, 8)):
                assert point(out, t) == point(base, t)


# the induction step


def test_generic_matches_upsilon(small_crystal):
    rng = random.Random(11)
    for d in range(5):
        for p in small_crystal.elements(d):
            for w, i in steps(4):
                n = len(stable_sections(p, w, i))
                for _ in range(3):
                    out, generic = retract_step(p, w, i, random_coeffs(n, rng))
                    assert generic
                    assert out == upsilon_prime(p, w + (i,))


def test_some_degenerate_vector_differs(small_crystal):
    found = None
    for p in small_crystal.elements():
        for w, i in steps(4):
            n = len(stable_sections(p, w, i))
            if n < 2:
                continue
            cs = [Q(1)] * n
            cs[-2] = Q(-1)
            out, generic = retract_step(p, w, i, cs)
            assert not generic
            if out != upsilon_prime(p, w + (i,)):
                found = (p, w, i, cs)
                break
        if found:
            break
    assert found is not None


def test_degenerate_outputs_are_hecke(small_crystal):
    for d in range(5):
        for p in small_crystal.elements(d):
            for w, i in steps(4):
                n = len(stable_sections(p, w, i))
                if n == 0:
                    continue
                for cs in ([Q(0)] * n, [Q(1)] * (n - 1) + [Q(-1)] if n > 1 else [Q(0)]):
                    out, _ = retract_step(p, w, i, cs)
                    assert is_lambda_path(out)
                    assert out.shape == p.shape
                    assert ddim(out, w + (i,)) <= twisted_rho_defect(out, w + (i,))


def test_generic_outputs_saturate(small_crystal):
    rng = random.Random(3)
    for p in small_crystal.elements(4):
        for w, i in steps(3):
            n = len(stable_sections(p, w, i))
            out, _ = retract_step(p, w, i, random_coeffs(n, rng))
            assert ddim(out, w + (i,)) == twisted_rho_defect(out, w + (i,))


def test_bases_ignore_earlier_coefficients(small_crystal):
    rng = random.Random(5)
    for p in small_crystal.elements(4):
        word = ()
        for i in (1, 0, 1, 0):
            a = build_folded(p, word, i, random_coeffs(len(stable_sections(p, word, i)), rng))
            b = build_folded(p, word, i, random_coeffs(len(stable_sections(p, word, i)), rng))
            assert a.base == b.base and a.root == b.root
            word += (i,)


# parameters


def test_parameter_space(small_crystal):
    for p in small_crystal.elements(3):
        ps = parameter_space(p)
        assert ps.count == ddim(p) == len(ps.kinds)
        if ps.count:
            assert ps.kinds[0] is Factor.PUNCTURED_LINE
            assert all(k is Factor.FREE_LINE for k in ps.kinds[1:])
        sample = ps.sample(random.Random(1))
        assert len(sample) == ps.count
        if ps.count:
            assert sample[0] != 0
