#!/usr/bin/env python3
"""Randomized stress runner for the exact identities behind the checkers.

Each suite draws fresh random inputs and asserts an identity that must hold
on every single trial: the radical product decomposition, the counting
properties, the degree bounds for sum identities, oracle agreement between
the gcd and root routes, factorial power bounds, truncated counting
domination, and the pointwise order inequality.

    python scripts/stress_identities.py --trials 200 --seed 7
    python scripts/stress_identities.py --suites lemma,oracle --max-deg 15
"""

import argparse
import random
import sys
import time

from diffrad import (
    Form,
    default_tower,
    check_fermat_theorem,
    check_mason_multi,
    check_mason_triple,
    check_ord_inequality,
    check_truncation,
    diff_radical,
    diff_radical_from_roots,
    diff_radical_m,
    gcd,
    n_tilde,
)
from diffrad.generators import (
    random_divisor,
    random_factored,
    random_fermat_instance,
    random_kappa,
    random_mason_triple,
    random_mason_tuple,
    random_ord_inputs,
    random_poly,
)


def suite_lemma(rng, tower, trials, max_deg):
    for _ in range(trials):
        kappa = random_kappa(rng, tower)
        p = random_poly(rng, tower, max_deg, kappa)
        res = diff_radical(p, kappa)
        assert res.reconstruct() == p
        if p.degree > 0:
            assert res.cofactor == gcd(p, p.delta(kappa))
        assert p.degree == res.cofactor.degree + res.n_tilde


def suite_counts(rng, tower, trials, max_deg):
    deg = min(max_deg, 4)
    for _ in range(trials):
        kappa = random_kappa(rng, tower)
        p = random_poly(rng, tower, deg, kappa)
        q = random_poly(rng, tower, deg, kappa)
        np_, nq = n_tilde(p, kappa), n_tilde(q, kappa)
        assert 0 <= np_ <= p.degree
        assert n_tilde(p * p, kappa) == 2 * np_
        assert n_tilde(p * q, kappa) <= np_ + nq


def suite_triples(rng, tower, trials, max_deg):
    for _ in range(trials):
        kappa = random_kappa(rng, tower)
        a, b, c = random_mason_triple(rng, tower, kappa)
        report = check_mason_triple(a, b, c, kappa)
        assert report.hypotheses_ok and report.holds


def suite_multi(rng, tower, trials, max_deg):
    for trial in range(trials):
        kappa = random_kappa(rng, tower)
        ps = random_mason_tuple(rng, tower, kappa, 2 + trial % 3)
        report = check_mason_multi(list(ps), kappa)
        assert report.hypotheses_ok and report.holds
        assert report.artifacts["casoratian_divisible_by_gcd_product"]


def suite_oracle(rng, tower, trials, max_deg):
    for trial in range(trials):
        kappa = random_kappa(rng, tower)
        f = random_factored(rng, tower, kappa)
        m = 2 + trial % 3
        via_gcd = diff_radical_m(f.expand(), kappa, m)
        via_roots = diff_radical_from_roots(f, kappa, m)
        assert via_gcd.radical == via_roots.radical
        assert via_gcd.n_tilde == via_roots.n_tilde


def suite_fermat(rng, tower, trials, max_deg):
    plans = [
        (Form.XYZ, 2, 1),
        (Form.XYZ, 2, 2),
        (Form.SUM_FACTORIAL, 2, 2),
        (Form.SUM_FACTORIAL, 3, 1),
        (Form.SUM_ONE, 2, 1),
        (Form.SUM_ONE, 3, 1),
    ]
    for trial in range(trials):
        form, m, n = plans[trial % len(plans)]
        inst = random_fermat_instance(rng, tower, form, m, n)
        report = check_fermat_theorem(inst)
        assert report.hypotheses_ok and report.holds


def suite_divisor(rng, tower, trials, max_deg):
    radii = [1, 2, 5, 10]
    for _ in range(trials):
        kappa = random_kappa(rng, tower)
        D = random_divisor(rng, tower, kappa)
        report = check_truncation(
            D, kappa, rng.randint(1, 3), rng.randint(1, 2), radii
        )
        assert report.holds
        assert all(row["N_error"] <= 1e-9 for row in report.artifacts["per_radius"])


def suite_ord(rng, tower, trials, max_deg):
    for trial in range(trials):
        kappa = random_kappa(rng, tower)
        gs = random_ord_inputs(rng, tower, kappa, 2 + trial % 2)
        report = check_ord_inequality(gs, kappa)
        assert report.hypotheses_ok and report.holds
        assert not report.artifacts["violations"]


SUITES = {
    "lemma": suite_lemma,
    "counts": suite_counts,
    "triples": suite_triples,
    "multi": suite_multi,
    "oracle": suite_oracle,
    "fermat": suite_fermat,
    "divisor": suite_divisor,
    "ord": suite_ord,
}


def main(argv=None):
    parser = argparse.ArgumentParser(
        description=__doc__.splitlines()[0],
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--trials", type=int, default=100, help="trials per suite")
    parser.add_argument("--seed", type=int, default=0, help="base RNG seed")
    parser.add_argument("--max-deg", type=int, default=10, help="degree cap")
    parser.add_argument(
        "--suites",
        default="all",
        help="comma-separated subset of: " + ", ".join(SUITES),
    )
    args = parser.parse_args(argv)

    names = list(SUITES) if args.suites == "all" else args.suites.split(",")
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        parser.error(f"unknown suites: {', '.join(unknown)}")

    tower = default_tower()
    failures = 0
    for offset, name in enumerate(names):
        rng = random.Random(args.seed + offset)
        t0 = time.perf_counter()
        try:
            SUITES[name](rng, tower, args.trials, args.max_deg)
        except AssertionError as exc:
            failures += 1
            print(f"{name:<8} FAIL after {time.perf_counter() - t0:.2f}s: {exc}")
            continue
        print(f"{name:<8} ok  {args.trials} trials  {time.perf_counter() - t0:.2f}s")
    if failures:
        print(f"{failures}/{len(names)} suites failed", file=sys.stderr)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
