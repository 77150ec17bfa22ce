"""Seeded random builders for property tests and stress runs.

Every function takes an explicit random.Random so suites stay
reproducible. Roots are drawn from small shift lattices on purpose:
collisions between a root and its kappa-translates are what make the
difference radical, the Casoratian and the truncated counts interesting.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .divisor import Divisor
from .fermat import FermatInstance, Form
from .field import FieldElement, FieldTower, default_tower
from .mason import linearly_independent, setwise_coprime
from .poly import FactoredPoly, Polynomial, gcd, multi_gcd

_MAX_RESAMPLE = 200


def random_fraction(rng: random.Random, max_num: int = 6, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_kappa(rng: random.Random, tower: FieldTower) -> FieldElement:
    picks = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 2)]
    value = tower._coerce(rng.choice(picks))
    if tower.depth >= 1 and rng.random() < 0.25:
        value = value * tower.sqrt_gen(0)
    return value


def random_element(
    rng: random.Random, tower: FieldTower, scale: int = 4, mix: float = 0.3
) -> FieldElement:
    """Small rational element, sometimes mixed with a square-root generator."""
    out = tower._coerce(random_fraction(rng, scale, 2))
    if tower.depth and rng.random() < mix:
        g = rng.randrange(tower.depth)
        out = out + tower.sqrt_gen(g) * tower._coerce(random_fraction(rng, 2, 2))
    return out


def random_lattice_roots(
    rng: random.Random,
    tower: FieldTower,
    kappa: FieldElement,
    count: int,
    spread: int = 3,
) -> list[FieldElement]:
    """Roots of the form base + j*kappa with a couple of random bases."""
    bases = [random_element(rng, tower) for _ in range(max(1, count // 2))]
    roots = []
    for _ in range(count):
        base = rng.choice(bases)
        roots.append(base + kappa * rng.randint(-spread, spread))
    return roots


def random_factored(
    rng: random.Random,
    tower: FieldTower,
    kappa: FieldElement,
    max_roots: int = 3,
    max_mult: int = 3,
) -> FactoredPoly:
    roots = random_lattice_roots(rng, tower, kappa, rng.randint(1, max_roots))
    entries = [(r, rng.randint(1, max_mult)) for r in roots]
    lead = tower._coerce(rng.choice([1, -1, 2, Fraction(1, 2), 3]))
    return FactoredPoly(lead, entries)


def random_poly(
    rng: random.Random,
    tower: FieldTower,
    max_deg: int = 5,
    kappa: FieldElement | None = None,
) -> Polynomial:
    """Nonzero polynomial of degree uniform in 0..max_deg; mostly a product
    of lattice-rooted linear factors, sometimes dense coefficients."""
    if kappa is None or kappa.is_zero():
        kappa = tower.one
    deg = rng.randint(0, max_deg)
    if deg == 0 or rng.random() < 0.3:
        coeffs = [random_element(rng, tower, 3, 0.2) for _ in range(deg + 1)]
        while coeffs[-1].is_zero():
            coeffs[-1] = random_element(rng, tower, 3, 0.2)
        return Polynomial(tower, coeffs)
    count = rng.randint(1, deg)
    roots = random_lattice_roots(rng, tower, kappa, count)
    mults = [1] * count
    for _ in range(deg - count):
        mults[rng.randrange(count)] += 1
    lead = tower._coerce(rng.choice([1, -1, 2, Fraction(1, 2), 3]))
    return FactoredPoly(lead, list(zip(roots, mults))).expand()


def _disjoint_factored(
    rng: random.Random,
    tower: FieldTower,
    kappa: FieldElement,
    parts: int,
    max_roots: int,
    max_mult: int,
) -> list[FactoredPoly]:
    """Factored polynomials with pairwise disjoint root sets."""
    pool = random_lattice_roots(rng, tower, kappa, parts * max_roots, spread=4)
    seen: set[FieldElement] = set()
    distinct = []
    for r in pool:
        if r not in seen:
            seen.add(r)
            distinct.append(r)
    extra = 0
    while len(distinct) < parts:
        extra += 1
        cand = random_element(rng, tower) + kappa * extra
        if cand not in seen:
            seen.add(cand)
            distinct.append(cand)
    rng.shuffle(distinct)
    buckets: list[list[FieldElement]] = [[] for _ in range(parts)]
    for idx, r in enumerate(distinct):
        buckets[idx % parts].append(r)
    out = []
    for bucket in buckets:
        take = bucket[: rng.randint(1, max(1, min(len(bucket), max_roots)))]
        lead = tower._coerce(rng.choice([1, -1, 2, Fraction(1, 2)]))
        out.append(FactoredPoly(lead, [(r, rng.randint(1, max_mult)) for r in take]))
    return out


def random_coprime_pair(
    rng: random.Random,
    tower: FieldTower,
    kappa: FieldElement,
    max_roots: int = 3,
    max_mult: int = 3,
) -> tuple[Polynomial, Polynomial]:
    a, b = _disjoint_factored(rng, tower, kappa, 2, max_roots, max_mult)
    return a.expand(), b.expand()


def random_mason_triple(
    rng: random.Random,
    tower: FieldTower,
    kappa: FieldElement,
    max_roots: int = 2,
    max_mult: int = 2,
) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(a, b, a+b) with a, b coprime and the sum nonzero."""
    for _ in range(_MAX_RESAMPLE):
        a, b = random_coprime_pair(rng, tower, kappa, max_roots, max_mult)
        c = a + b
        if c.is_zero():
            continue
        if max(a.degree, b.degree, c.degree) < 1:
            continue
        return a, b, c
    raise RuntimeError("could not build a Mason triple")


def random_mason_tuple(
    rng: random.Random,
    tower: FieldTower,
    kappa: FieldElement,
    m: int,
    max_roots: int = 2,
    max_mult: int = 2,
) -> tuple[Polynomial, ...]:
    """m pairwise coprime summands plus their sum, independent over constants."""
    if m < 2:
        raise ValueError("need m >= 2 summands")
    for _ in range(_MAX_RESAMPLE):
        parts = [f.expand() for f in _disjoint_factored(rng, tower, kappa, m, max_roots, max_mult)]
        total = Polynomial.zero(tower)
        for p in parts:
            total = total + p
        if total.is_zero():
            continue
        ps = parts + [total]
        if not linearly_independent(parts):
            continue
        # parts have disjoint root sets by construction; only the sum needs vetting
        if any(gcd(total, p).degree != 0 for p in parts):
            continue
        return tuple(ps)
    raise RuntimeError("could not build a Mason tuple")


def random_divisor(
    rng: random.Random,
    tower: FieldTower,
    kappa: FieldElement,
    max_points: int = 4,
    max_mult: int = 3,
) -> Divisor:
    roots = random_lattice_roots(rng, tower, kappa, rng.randint(1, max_points))
    return Divisor(tower, [(r, rng.randint(1, max_mult)) for r in roots])


def random_ord_inputs(
    rng: random.Random,
    tower: FieldTower,
    kappa: FieldElement,
    m: int,
    max_roots: int = 3,
    max_mult: int = 2,
) -> list[FactoredPoly]:
    """m factored summands: independent, nonzero sum, no common zero."""
    if m < 2:
        raise ValueError("need m >= 2 summands")
    for _ in range(_MAX_RESAMPLE):
        if rng.random() < 0.5:
            gs = _disjoint_factored(rng, tower, kappa, m, max_roots, max_mult)
        else:
            gs = [random_factored(rng, tower, kappa, max_roots, max_mult) for _ in range(m)]
        dense = [g.expand() for g in gs]
        total = Polynomial.zero(tower)
        for p in dense:
            total = total + p
        if total.is_zero() or not linearly_independent(dense):
            continue
        if multi_gcd(dense).degree != 0:
            continue
        return gs
    raise RuntimeError("could not build order-inequality inputs")


def _quadratic_factorial_triple(tower: FieldTower):
    """Base triple whose squared order-2 factorials sum exactly."""
    if tower.depth < 2 or tower.gen_radicand(0) != -1 or tower.gen_radicand(1) != 2:
        raise ValueError("tower must start with sqrt(-1), sqrt(2)")
    i = tower.sqrt_gen(0)
    s2 = tower.sqrt_gen(1)
    half = Fraction(1, 2)
    a = Polynomial(tower, (0, 0, 1))
    b = Polynomial(tower, (i * s2 * half, -i, -i * s2 * half))
    c = Polynomial(tower, (s2 * half, 1, -s2 * half))
    return a, b, c


def _dilate(p: Polynomial, alpha: FieldElement) -> Polynomial:
    """p(alpha * z)."""
    coeffs = []
    power = p.tower.one
    for c in p.coeffs:
        coeffs.append(c * power)
        power = power * alpha
    return Polynomial(p.tower, coeffs)


def random_fermat_instance(
    rng: random.Random,
    tower: FieldTower,
    form: Form,
    m: int = 2,
    n: int | None = None,
) -> FermatInstance:
    """Hypothesis-satisfying instance; n = 2 cases come from transforming
    the quadratic triple by shifts, dilations and unit rescalings."""
    kappa = random_kappa(rng, tower)
    if n == 2:
        if form == Form.SUM_ONE or m != 2:
            raise ValueError("n = 2 instances exist only for two nonconstant summands")
        a, b, c = _quadratic_factorial_triple(tower)
        kappa = tower.one
        t = tower._coerce(random_fraction(rng, 3, 2))
        ps = [p.taylor_shift(t) for p in (a, b, c)]
        alpha = tower._coerce(rng.choice([1, -1, 2, Fraction(1, 2), Fraction(3, 2)]))
        ps = [_dilate(p, alpha) for p in ps]
        kappa = kappa / alpha
        lam = tower._coerce(rng.choice([1, -1, 2, Fraction(1, 2)]))
        ps = [p.scale(lam * rng.choice([1, -1])) for p in ps]
        return FermatInstance(tuple(ps), kappa, 2, form)

    if form in (Form.XYZ, Form.SUM_FACTORIAL):
        count = 3 if form == Form.XYZ else m + 1
        for _ in range(_MAX_RESAMPLE):
            parts = [
                f.expand()
                for f in _disjoint_factored(rng, tower, kappa, count - 1, 2, 2)
            ]
            total = Polynomial.zero(tower)
            for p in parts:
                total = total + p
            if total.is_zero():
                continue
            ps = parts + [total]
            if form == Form.XYZ and max(p.degree for p in ps) < 1:
                continue
            if form == Form.SUM_FACTORIAL and any(p.degree < 1 for p in ps):
                continue
            if any(gcd(total, p).degree != 0 for p in parts):
                continue
            return FermatInstance(tuple(ps), kappa, 1, form)
        raise RuntimeError("could not build a factorial-equation instance")

    if form == Form.SUM_ONE:
        for _ in range(_MAX_RESAMPLE):
            parts = [
                f.expand() for f in _disjoint_factored(rng, tower, kappa, m - 1, 2, 2)
            ]
            last = Polynomial(tower, (1,))
            for p in parts:
                last = last - p
            ps = parts + [last]
            if any(p.degree < 1 for p in ps):
                continue
            if not setwise_coprime(ps):
                continue
            return FermatInstance(tuple(ps), kappa, 1, form)
        raise RuntimeError("could not build a sum-to-one instance")

    raise ValueError(f"unknown form {form!r}")
