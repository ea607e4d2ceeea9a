from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import seeded_rng, x_gens
from liegrowth.expr import Generator, evaluate, parse_expr, random_expr
from liegrowth.metabelian import basis_monomials, graded_dim, normalize_expr, normalize_word
from liegrowth.poly import MultiPoly
from liegrowth.wreath import (
    MODE_W,
    MODE_WPLUS,
    ModeMismatchError,
    WreathElement,
    action_poly,
    certify_embedding,
    magnus_embedding,
    magnus_generator_images,
    model_laws_report,
    standard_assignment,
    wreath_bracket,
)


def a(k, m=2, n=2):
    return WreathElement.gen_a(k, m, n)


def t(i, m=2, n=2):
    return WreathElement.gen_t(i, m, n)


def u(i, m=2, n=2):
    return WreathElement.gen_u(i, m, n)


# -------------------------------------------------------------------- bracket

def test_bracket_of_embedded_generators():
    p = a(0) + t(0)
    q = a(1) + t(1)
    got = wreath_bracket(p, q, MODE_W)
    want = WreathElement(
        2, 2,
        [MultiPoly(2, {(0, 1): Fraction(1)}), MultiPoly(2, {(1, 0): Fraction(-1)})],
    )
    assert got == want


def test_u_acts_as_square():
    got = wreath_bracket(a(0), u(0), MODE_WPLUS)
    want = WreathElement(2, 2, [MultiPoly(2, {(2, 0): 1}), MultiPoly.zero(2)])
    assert got == want
    # and equals [a1,t1,t1]
    twice = wreath_bracket(wreath_bracket(a(0), t(0), MODE_WPLUS), t(0), MODE_WPLUS)
    assert got == twice


def test_torus_is_abelian_and_commutators_land_in_module():
    assert wreath_bracket(t(0), t(1), MODE_W).is_zero()
    assert wreath_bracket(u(0), u(1), MODE_WPLUS).is_zero()
    rng = seeded_rng(1)
    from liegrowth.wreath import _random_element

    for _ in range(20):
        p = _random_element(rng, 2, 2, MODE_WPLUS)
        q = _random_element(rng, 2, 2, MODE_WPLUS)
        pq = wreath_bracket(p, q, MODE_WPLUS)
        assert not any(pq.tor_t) and not any(pq.tor_u)


def test_mode_w_rejects_u_components():
    with pytest.raises(ModeMismatchError):
        wreath_bracket(a(0), u(0), MODE_W)
    with pytest.raises(ModeMismatchError):
        wreath_bracket(u(0), a(0), MODE_W)


def test_shape_mismatch_rejected():
    with pytest.raises(ValueError):
        wreath_bracket(a(0, 2, 2), WreathElement.gen_a(0, 3, 3), MODE_W)


def test_action_poly():
    e = t(0) * 2 + u(1) * Fraction(1, 3)
    assert action_poly(e) == MultiPoly(2, {(1, 0): Fraction(2), (0, 2): Fraction(1, 3)})


def test_general_rectangular_model():
    # m = 1 module vector over n = 3 torus variables
    ak = WreathElement.gen_a(0, 1, 3)
    t3 = WreathElement.gen_t(2, 1, 3)
    got = wreath_bracket(ak, t3, MODE_W)
    assert got == WreathElement(1, 3, [MultiPoly(3, {(0, 0, 1): 1})])


def test_standard_assignment_blocks():
    asg = standard_assignment(2, 2, MODE_W)
    assert Generator("u", 0) not in asg
    asg_plus = standard_assignment(2, 2, MODE_WPLUS)
    assert asg_plus[Generator("u", 1)] == u(1)


# ------------------------------------------------------------------ embedding

def test_magnus_image_of_degree_two():
    got = magnus_embedding(normalize_word((1, 0), 2))
    want = WreathElement(
        2, 2,
        [MultiPoly(2, {(0, 1): Fraction(-1)}), MultiPoly(2, {(1, 0): Fraction(1)})],
    )
    assert got == want


def test_magnus_images_have_zero_torus_beyond_degree_one():
    for d in (1, 2, 3):
        for n in (2, 3, 4):
            for mono in basis_monomials(d, n):
                from liegrowth.metabelian import MetabelianElement

                img = magnus_embedding(MetabelianElement(d, {mono: Fraction(1)}))
                assert not any(img.tor_t) and not any(img.tor_u)
                assert img.module_degree() == n - 1


def test_certify_embedding_small():
    for d in (1, 2, 3):
        rep = certify_embedding(d, 6)
        assert rep.passed, rep.failures
        assert all(rank == expected == graded_dim(d, n) for n, rank, expected in rep.ranks)


def test_embedding_commutes_with_normal_form():
    d = 3
    rng = seeded_rng(11)
    images = magnus_generator_images(d)
    brack = lambda p, q: wreath_bracket(p, q, MODE_W)
    for _ in range(100):
        e = random_expr(rng, x_gens(d), rng.randint(1, 6))
        assert magnus_embedding(normalize_expr(e, d)) == evaluate(e, images, brack)


def test_permutation_of_tail_letters_in_model():
    # [a1,t1,t2] = [a1,t2,t1] in the model
    asg = standard_assignment(2, 2, MODE_WPLUS)
    brack = lambda p, q: wreath_bracket(p, q, MODE_WPLUS)
    lhs = evaluate(parse_expr("[a1,t1,t2]"), asg, brack)
    rhs = evaluate(parse_expr("[a1,t2,t1]"), asg, brack)
    assert lhs == rhs and not lhs.is_zero()


# ----------------------------------------------------------------- model laws

def test_model_laws_both_modes():
    for mode in (MODE_W, MODE_WPLUS):
        rep = model_laws_report(2, mode, seed=0, trials=25)
        assert rep.passed, rep.failures
    rep = model_laws_report(3, MODE_WPLUS, seed=1, trials=15, span_degree=3)
    assert rep.passed, rep.failures
