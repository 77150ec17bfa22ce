"""Expression grammar, canonical printing, and their round trip."""

import random
import string
from fractions import Fraction

import pytest

from diffrad import (
    FactoredPoly,
    Polynomial,
    parse_constant,
    parse_factored,
    parse_poly,
    print_element,
    print_factored,
    print_poly,
)
from diffrad.errors import (
    NegativeExponentError,
    ParseError,
    UnknownConstantError,
)
from diffrad.generators import random_element, random_factored, random_kappa, random_poly
from diffrad.parser import iter_objects, parse_root_mult


def test_poly_round_trip_bulk(tower):
    rng = random.Random(55)
    for _ in range(1000):
        p = random_poly(rng, tower, 6)
        assert parse_poly(print_poly(p), tower) == p


def test_element_round_trip(tower):
    rng = random.Random(56)
    for _ in range(300):
        x = random_element(rng, tower, 6, 0.8)
        assert parse_constant(print_element(x), tower) == x


def test_factored_round_trip(tower):
    rng = random.Random(57)
    for _ in range(200):
        f = random_factored(rng, tower, random_kappa(rng, tower))
        assert parse_factored(print_factored(f), tower) == f
    empty = FactoredPoly(tower.rational(Fraction(5, 3)))
    assert parse_factored(print_factored(empty), tower) == empty


def test_grammar_basics(tower):
    z = Polynomial.variable(tower)
    i = tower.sqrt_gen(0)
    s2 = tower.sqrt_gen(1)
    cases = {
        "0": Polynomial.zero(tower),
        "z^2*(z-1)*(z-2)^3": (z**2) * (z - 1) * ((z - 2) ** 3),
        "z**2 + 1": z * z + 1,
        "3/4": Polynomial(tower, (Fraction(3, 4),)),
        "i/2": Polynomial.constant(i * Fraction(1, 2)),
        "-(z + 5)": -(z + 5),
        "- - z": z,
        "2*z - z - z": Polynomial.zero(tower),
        "sqrt(2)*z": z.scale(s2),
        "(1+i)^4": Polynomial(tower, (-4,)),
    }
    for src, expected in cases.items():
        assert parse_poly(src, tower) == expected, src


def test_sqrt_normalization(tower):
    s2 = tower.sqrt_gen(1)
    i = tower.sqrt_gen(0)
    assert parse_constant("sqrt(8)", tower) == s2 * 2
    assert parse_constant("sqrt(-2)", tower) == i * s2
    assert parse_constant("sqrt(9/4)", tower) == Fraction(3, 2)
    assert parse_constant("sqrt(1/2)", tower) == s2 * Fraction(1, 2)


def test_rejections(tower):
    bad = {
        "2z": ParseError,           # no implicit multiplication
        "z^": ParseError,
        "z^-2": NegativeExponentError,
        "(z": ParseError,
        "z)": ParseError,
        "$": ParseError,
        "z/z": ParseError,          # divisor must be a constant
        "1/0": ParseError,
        "sqrt(z)": ParseError,
        "sqrt(5)": UnknownConstantError,
        "q + 1": UnknownConstantError,
        "": ParseError,
        "1 + ": ParseError,
    }
    for src, exc in bad.items():
        with pytest.raises(exc):
            parse_poly(src, tower)


def test_parse_error_reports_position(tower):
    with pytest.raises(ParseError) as err:
        parse_poly("z + $", tower)
    assert err.value.position == 4
    assert "position 4" in str(err.value)


def test_parse_constant_rejects_nonconstant(tower):
    with pytest.raises(ParseError):
        parse_constant("z + 1", tower)


def test_parse_root_mult(tower):
    root, mult = parse_root_mult("(1/2, 3)", tower)
    assert root == Fraction(1, 2) and mult == 3
    root, mult = parse_root_mult("(-1 - i, 2)", tower)
    assert root == tower.rational(-1) - tower.sqrt_gen(0) and mult == 2
    with pytest.raises(ParseError):
        parse_root_mult("(1, 2) junk", tower)
    with pytest.raises(ParseError):
        parse_root_mult("(z, 2)", tower)


def test_iter_objects_strips_comments():
    lines = ["# header", "", "  (0, 2)  # inline", "(1, 1)", "   ", "# end"]
    assert list(iter_objects(lines)) == ["(0, 2)", "(1, 1)"]


def test_fuzz_mutations_raise_only_parse_errors(tower):
    rng = random.Random(58)
    seeds = [
        "z^2*(z-1)*(z-2)^3",
        "1/2 + sqrt(2)*i",
        "-(z + 5)^4 - i*z",
        "sqrt(8) * (z - 1/3)",
    ]
    alphabet = string.ascii_lowercase + string.digits + "+-*/^()., ;"
    for _ in range(400):
        src = list(rng.choice(seeds))
        for _ in range(rng.randint(1, 4)):
            op = rng.randrange(3)
            pos = rng.randrange(len(src)) if src else 0
            if op == 0 and src:
                src[pos] = rng.choice(alphabet)
            elif op == 1:
                src.insert(pos, rng.choice(alphabet))
            elif src:
                del src[pos]
        text = "".join(src)
        try:
            parse_poly(text, tower)
        except ParseError:
            pass  # structured rejection is the only acceptable failure


def test_print_element_shapes(tower):
    i = tower.sqrt_gen(0)
    s2 = tower.sqrt_gen(1)
    assert print_element(tower.zero) == "0"
    assert print_element(tower.rational(Fraction(-3, 2))) == "-3/2"
    assert print_element(s2 * i) == "sqrt(2)*i"
    x = tower.rational(Fraction(1, 2)) + s2 * i
    assert print_element(x) == "1/2 + sqrt(2)*i"


def test_print_poly_shapes(tower):
    z = Polynomial.variable(tower)
    assert print_poly(z * z - 1) == "z^2 - 1"
    assert print_poly(-z) == "-z"
    p = z.scale(tower.sqrt_gen(1) + 1)  # two basis terms force parentheses
    assert print_poly(p) == "(1 + sqrt(2))*z"
    assert parse_poly(print_poly(p), tower) == p
