"""Quadratic tower arithmetic: exactness, embeddings, sign decisions."""

import random
from fractions import Fraction

import pytest

from diffrad import FieldTower, compare_real, default_tower
from diffrad.errors import (
    NonRealRadicandError,
    SquareRadicandError,
    ZeroRadicandError,
)
from diffrad.generators import random_element


def test_default_tower_shape(tower):
    assert tower.depth == 3
    assert tower.dim == 8
    assert tower.describe() == "Q(i, sqrt(2), sqrt(3))"


def test_generators_square_to_radicands(tower):
    i, s2, s3 = (tower.sqrt_gen(k) for k in range(3))
    assert i * i == -1
    assert s2 * s2 == 2
    assert s3 * s3 == 3
    assert (s2 * s3) ** 2 == 6


def test_field_axioms_bulk(tower):
    rng = random.Random(101)
    one = tower.one
    for _ in range(1000):
        a = random_element(rng, tower, 4, 0.6)
        b = random_element(rng, tower, 4, 0.6)
        c = random_element(rng, tower, 4, 0.6)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == one
            assert (one / a) * a == one


def test_conj_involutive_and_multiplicative(tower):
    rng = random.Random(7)
    for _ in range(300):
        a = random_element(rng, tower, 4, 0.7)
        b = random_element(rng, tower, 4, 0.7)
        assert a.conj().conj() == a
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()


def test_abs_squared_multiplicative(tower):
    rng = random.Random(8)
    for _ in range(300):
        a = random_element(rng, tower, 4, 0.7)
        b = random_element(rng, tower, 4, 0.7)
        ab = (a * b).abs_squared()
        assert ab == a.abs_squared() * b.abs_squared()
        assert ab.is_real()


def test_embed_encloses_and_separates(tower):
    # sqrt(2) = 1.41421356...; tighter boxes must separate it from nearby
    # rationals on both sides.
    s2 = tower.sqrt_gen(1)
    assert compare_real(s2, Fraction(141421356, 100000000)) == 1
    assert compare_real(s2, Fraction(141421357, 100000000)) == -1
    assert compare_real(s2 * s2, 2) == 0
    box = s2.embed(64)
    assert box.re_lo**2 <= 2 <= box.re_hi**2  # encloses the true root
    assert box.width <= Fraction(1, 2**64)


def test_embed_width_contract(tower):
    rng = random.Random(9)
    for _ in range(25):
        a = random_element(rng, tower, 4, 0.8)
        wide = a.embed(16)
        tight = a.embed(48)
        assert tight.width <= Fraction(1, 2**48)
        assert wide.re_lo <= tight.re_lo and tight.re_hi <= wide.re_hi
        assert wide.im_lo <= tight.im_lo and tight.im_hi <= wide.im_hi


def test_sign_decisions_are_exact(tower):
    s2, s3 = tower.sqrt_gen(1), tower.sqrt_gen(2)
    # s2 + s3 - 3.1462643... is tiny but nonzero; refinement must resolve it.
    delta = s2 + s3 - tower.rational(Fraction(31462643699419723, 10**16))
    assert delta.sign_real() != 0
    assert compare_real(s2 + s3, 3) == 1
    assert compare_real(s2 - s3, 0) == -1
    assert tower.zero.sign_real() == 0


def test_sign_real_rejects_complex(tower):
    i = tower.sqrt_gen(0)
    with pytest.raises(ValueError):
        (tower.one + i).sign_real()


def test_adjoin_rejects_degenerate_radicands(tower):
    with pytest.raises(ZeroRadicandError):
        tower.adjoin_sqrt(0)
    with pytest.raises(SquareRadicandError):
        tower.adjoin_sqrt(4)
    with pytest.raises(SquareRadicandError):
        tower.adjoin_sqrt(6)  # sqrt(2)*sqrt(3) already in the tower
    with pytest.raises(NonRealRadicandError):
        tower.adjoin_sqrt(tower.one + tower.sqrt_gen(0))


def test_adjoin_extends_and_lifts(tower):
    big = tower.adjoin_sqrt(5)
    assert big.depth == 4
    assert big.extends(tower)
    s5 = big.sqrt_gen(3)
    assert s5 * s5 == 5
    lifted = tower.sqrt_gen(1).lift_to(big)
    assert lifted * lifted == 2
    assert big.sqrt_of_rational(5) == s5
    # positive branch selected
    assert big.sqrt_of_rational(5).sign_real() == 1


def test_sqrt_of_rational_branches(tower):
    s2 = tower.sqrt_of_rational(2)
    assert s2 is not None and s2.sign_real() == 1
    r = tower.sqrt_of_rational(-2)
    assert r is not None and (r * r) == -2
    assert r._sign_of_imag() == 1
    assert tower.sqrt_of_rational(5) is None
    assert tower.try_sqrt(tower.rational(Fraction(9, 4))) is not None


def test_rationals_tower():
    q = FieldTower.rationals()
    assert q.dim == 1
    assert q.describe() == "Q"
    x = q.rational(Fraction(3, 7))
    assert x + x == q.rational(Fraction(6, 7))
    assert x.as_fraction() == Fraction(3, 7)


def test_incompatible_towers_rejected(tower):
    other = FieldTower.rationals().adjoin_sqrt(7)
    with pytest.raises(ValueError):
        tower.one + other.sqrt_gen(0)


def test_element_hash_consistent_across_lifts(tower):
    small = FieldTower.rationals()
    a = small.rational(Fraction(5, 3))
    b = a.lift_to(tower)
    assert hash(a) == hash(b)
    assert a == b
    assert b == tower.rational(Fraction(5, 3))
