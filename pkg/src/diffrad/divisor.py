"""Finitely supported zero divisors and disc counting functions.

A divisor stores ord_w data for finitely many points w. On top of it sit
the unintegrated counts n(r), the shift-truncated counts

    n_tilde_q(r) = sum over |w| <= r of (ord_w - min_{0<=j<=q} ord_{w+j*kappa}),

and their integrated companions, evaluated in closed form

    N(r) = sum_{0<|w|<=r} c_w log(r/|w|) + c_0 log r

with certified interval arithmetic. Note the min here runs over q+1 shifts;
the order-m radical count used elsewhere corresponds to q = m - 1.

check_truncation verifies, radius by radius, that truncated counting of an
order-n factorial power is dominated by q plain counts of shifted copies.
check_ord_inequality verifies the per-point order inequality for
G = g_1 ... g_{m+1} / C at every enumerable candidate point, and certifies
the non-enumerable points (roots of the dense sum only) by exhibiting the
shift-gcd of the sum as a divisor of the Casoratian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from mpmath import iv

from .errors import (
    DependentInputsError,
    NonPositiveMultiplicityError,
    ZeroShiftError,
    ZeroSumError,
)
from .field import FieldElement, FieldTower, compare_real
from .mason import casoratian, linearly_independent
from .poly import FactoredPoly, Polynomial, multi_gcd
from .report import CheckReport, Hypothesis, Statement

DEFAULT_PRECISION_BITS = 40


class Divisor:
    """Finite map from points to positive multiplicities."""

    __slots__ = ("tower", "_support")

    def __init__(self, tower: FieldTower, entries: Mapping | Iterable = ()):
        object.__setattr__(self, "tower", tower)
        merged: dict[FieldElement, int] = {}
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        for point, mult in pairs:
            point = self._coerce_point(tower, point)
            if not isinstance(mult, int) or mult < 1:
                raise NonPositiveMultiplicityError(
                    f"multiplicity must be a positive integer, got {mult!r}"
                )
            merged[point] = merged.get(point, 0) + mult
        object.__setattr__(self, "_support", merged)

    @staticmethod
    def _coerce_point(tower: FieldTower, point) -> FieldElement:
        if isinstance(point, FieldElement):
            if point.tower == tower:
                return point
            if tower.extends(point.tower):
                return point.lift_to(tower)
            raise ValueError("divisor point lives in an incompatible tower")
        return tower._coerce(point)

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    @classmethod
    def empty(cls, tower: FieldTower) -> "Divisor":
        return cls(tower)

    def multiplicity(self, point) -> int:
        return self._support.get(self._coerce_point(self.tower, point), 0)

    def support(self) -> tuple[FieldElement, ...]:
        return tuple(sorted(self._support, key=lambda e: e.coords))

    def items(self):
        for point in self.support():
            yield point, self._support[point]

    def total(self) -> int:
        return sum(self._support.values())

    def translate(self, delta) -> "Divisor":
        delta = self._coerce_point(self.tower, delta)
        return Divisor(self.tower, [(w + delta, c) for w, c in self._support.items()])

    def __len__(self) -> int:
        return len(self._support)

    def __bool__(self) -> bool:
        return bool(self._support)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._support == other._support

    def __hash__(self) -> int:
        return hash(frozenset(self._support.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {c}" for w, c in self.items())
        return f"Divisor({{{body}}})"


def divisor_of(f: FactoredPoly) -> Divisor:
    """Zero divisor of a polynomial given in product form."""
    return Divisor(f.tower, list(f.factors))


def shift_divisor(D: Divisor, kappa) -> Divisor:
    """Divisor of f(z + kappa): the support moves by -kappa."""
    kappa = D._coerce_point(D.tower, kappa)
    return D.translate(-kappa)


def factorial_divisor(D: Divisor, kappa, n: int) -> Divisor:
    """Divisor of the order-n factorial power built from D's function."""
    kappa = D._coerce_point(D.tower, kappa)
    if kappa.is_zero():
        raise ZeroShiftError("factorial divisor needs a nonzero shift")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorial order must be a positive integer, got {n!r}")
    entries = []
    for i in range(n):
        step = kappa * i
        entries.extend((w - step, c) for w, c in D.items())
    return Divisor(D.tower, entries)


def _as_fraction(r) -> Fraction:
    if isinstance(r, Fraction):
        return r
    return Fraction(r)


def _in_closed_disc(point: FieldElement, r_sq: Fraction) -> int:
    """-1 strictly inside, 0 on the boundary, 1 outside."""
    return compare_real(point.abs_squared(), point.tower._coerce(r_sq))


def n_count(D: Divisor, r) -> int:
    """Multiplicity mass inside the closed disc of radius r about 0."""
    r = _as_fraction(r)
    if r < 0:
        raise ValueError("radius must be non-negative")
    r_sq = r * r
    return sum(c for w, c in D.items() if _in_closed_disc(w, r_sq) <= 0)


def _truncated_weights(D: Divisor, kappa, q: int) -> list[tuple[FieldElement, int]]:
    """ord_w - min over shifts w, w+kappa, ..., w+q*kappa, per support point."""
    kappa = D._coerce_point(D.tower, kappa)
    if kappa.is_zero():
        raise ZeroShiftError("truncated counting needs a nonzero shift")
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"truncation order must be a positive integer, got {q!r}")
    out = []
    for w, c in D.items():
        low = c
        point = w
        for _ in range(q):
            point = point + kappa
            low = min(low, D.multiplicity(point))
            if low == 0:
                break
        if c > low:
            out.append((w, c - low))
    return out


def n_tilde_q(D: Divisor, kappa, q: int, r) -> int:
    """Shift-truncated count inside the closed disc of radius r."""
    r = _as_fraction(r)
    if r < 0:
        raise ValueError("radius must be non-negative")
    r_sq = r * r
    return sum(
        d for w, d in _truncated_weights(D, kappa, q) if _in_closed_disc(w, r_sq) <= 0
    )


@dataclass(frozen=True)
class CountingValue:
    """Exact count the integrand jumps through, plus its certified integral."""

    n_value: int
    N_value: float
    error: float


def _iv_fraction(q: Fraction):
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def _iv_real_enclosure(x: FieldElement, bits: int):
    """Interval containing the real tower element x, endpoints widened outward."""
    if x.is_rational():
        return _iv_fraction(x.as_fraction())
    box = x.embed(bits)
    lo = _iv_fraction(box.re_lo)
    hi = _iv_fraction(box.re_hi)
    return iv.mpf([lo.a, hi.b])


def _integrate_weights(
    weights: Sequence[tuple[FieldElement, int]], r: Fraction, precision_bits: int
) -> tuple[float, float]:
    """Closed-form sum of c_w log(r/|w|) over |w| <= r, with c_0 log r at 0."""
    if r <= 0:
        raise ValueError("integrated counting needs a positive radius")
    r_sq = r * r
    bits = max(precision_bits + 24, 64)
    saved_prec = iv.prec
    iv.prec = bits + 16
    try:
        total = iv.mpf(0)
        log_r = iv.log(_iv_fraction(r)) if weights else None
        for w, c in weights:
            if w.is_zero():
                total += iv.mpf(c) * log_r
                continue
            cmp = _in_closed_disc(w, r_sq)
            if cmp >= 0:
                continue
            abs_sq = w.abs_squared()
            enc = _iv_real_enclosure(abs_sq, bits)
            while enc.a <= 0:
                bits *= 2
                enc = _iv_real_enclosure(abs_sq, bits)
            ratio = _iv_fraction(r_sq) / enc
            total += iv.mpf(c) * iv.log(ratio) / iv.mpf(2)
        mid = float(total.mid)
        err = float(total.delta) * 0.51 + 4e-16 * abs(mid)
    finally:
        iv.prec = saved_prec
    return mid, err


def N_integrated(D: Divisor, r, precision_bits: int = DEFAULT_PRECISION_BITS) -> CountingValue:
    """n(r) together with the integrated count N(r) and its error bound."""
    r = _as_fraction(r)
    mid, err = _integrate_weights(list(D.items()), r, precision_bits)
    return CountingValue(n_count(D, r), mid, err)


def N_tilde_q_integrated(
    D: Divisor, kappa, q: int, r, precision_bits: int = DEFAULT_PRECISION_BITS
) -> CountingValue:
    """Truncated count and its integral; the step function jumps at each |w|."""
    r = _as_fraction(r)
    weights = _truncated_weights(D, kappa, q)
    mid, err = _integrate_weights(weights, r, precision_bits)
    n_val = 0
    r_sq = r * r
    for w, d in weights:
        if _in_closed_disc(w, r_sq) <= 0:
            n_val += d
    return CountingValue(n_val, mid, err)


def check_truncation(
    D: Divisor,
    kappa,
    q: int,
    n: int,
    radii: Sequence,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> CheckReport:
    """Truncated counting of an order-n factorial power vs q plain counts.

    At every radius r the exact level asserts

        n_tilde_q(factorial_divisor(D, kappa, n), kappa, q, r)
            <= sum_{i=0}^{q-1} n_count(shift_divisor(D, i*kappa), r)

    and the integrated level asserts the same shape up to certified error.
    The integrated comparison is only asserted at radii >= 1: below that
    the origin term carries a negative log r weight and integrating the
    count-level inequality no longer preserves its direction, so those rows
    report values without a verdict.
    """
    kappa = D._coerce_point(D.tower, kappa)
    if kappa.is_zero():
        raise ZeroShiftError("truncation check needs a nonzero shift")
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"truncation order must be a positive integer, got {q!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorial order must be a positive integer, got {n!r}")
    radii = [_as_fraction(r) for r in radii]
    if not radii:
        raise ValueError("need at least one radius")
    if any(r <= 0 for r in radii):
        raise ValueError("radii must be positive")
    radii = sorted(set(radii))

    fact = factorial_divisor(D, kappa, n)
    shifted = [shift_divisor(D, kappa * i) for i in range(q)]

    per_radius = []
    all_ok = True
    last_lhs = last_rhs = 0
    for r in radii:
        lhs_n = n_tilde_q(fact, kappa, q, r)
        rhs_n = sum(n_count(S, r) for S in shifted)
        lhs_cv = N_tilde_q_integrated(fact, kappa, q, r, precision_bits)
        rhs_cvs = [N_integrated(S, r, precision_bits) for S in shifted]
        rhs_N = sum(cv.N_value for cv in rhs_cvs)
        slack = lhs_cv.error + sum(cv.error for cv in rhs_cvs)
        n_ok = lhs_n <= rhs_n
        N_ok = lhs_cv.N_value <= rhs_N + slack if r >= 1 else None
        all_ok = all_ok and n_ok and (N_ok is not False)
        last_lhs, last_rhs = lhs_n, rhs_n
        per_radius.append(
            {
                "r": str(r),
                "n_lhs": lhs_n,
                "n_rhs": rhs_n,
                "n_holds": n_ok,
                "N_lhs": lhs_cv.N_value,
                "N_rhs": rhs_N,
                "N_error": slack,
                "N_holds": N_ok,
            }
        )

    hypotheses = (
        Hypothesis("parameters", True, f"q={q}, n={n}, {len(radii)} radii"),
    )
    return CheckReport(
        Statement.TRUNCATION,
        hypotheses,
        lhs=last_lhs,
        rhs=last_rhs,
        holds=all_ok,
        artifacts={
            "q": q,
            "n": n,
            "support": len(D),
            "factorial_support": len(fact),
            "per_radius": per_radius,
        },
    )


def _cover_radius(points: Iterable[FieldElement]) -> Fraction:
    """A rational radius whose closed disc contains every given point."""
    best = Fraction(0)
    for w in points:
        abs_sq = w.abs_squared()
        if abs_sq.is_rational():
            hi = abs_sq.as_fraction()
        else:
            hi = abs_sq.embed(16).re_hi
        if hi > best:
            best = hi
    return Fraction(math.isqrt(math.ceil(best)) + 1)


def check_ord_inequality(
    gs: Sequence[FactoredPoly], kappa, radii: Sequence | None = None
) -> CheckReport:
    """Per-point order inequality for G = g_1 ... g_{m+1} / C.

    The inputs are the m summands in product form; the dense sum g_{m+1}
    and the Casoratian C of the summands are computed here. At every
    candidate point w (roots of the summands and their forward translates)
    with ord_w(G) > 0 the check asserts

        ord_w(G) <= sum_j (ord_w(g_j) - min_{0<=i<=m-1} ord_{w+i*kappa}(g_j)).

    Zeros of G that are roots of the dense sum alone cannot be enumerated
    exactly; for those the inequality reduces to
    min_i ord_{w+i*kappa}(g_{m+1}) <= ord_w(C), which is certified globally
    by checking that the shift-gcd of the sum divides C. The count-level
    aggregate over candidate points is reported at each radius.
    """
    m = len(gs)
    if m < 2:
        raise ValueError(f"need at least two summands, got {m}")
    tower = gs[0].tower
    if any(g.tower != tower for g in gs):
        raise ValueError("all summands must share one coefficient tower")
    kappa_el = tower._coerce(kappa)
    if kappa_el.is_zero():
        raise ZeroShiftError("order inequality needs a nonzero shift")

    dense = [g.expand() for g in gs]
    total = Polynomial.zero(tower)
    for p in dense:
        total = total + p
    if total.is_zero():
        raise ZeroSumError("the summands add up to zero")
    if not linearly_independent(dense):
        raise DependentInputsError("summands are linearly dependent over constants")

    hypotheses = [
        Hypothesis(
            "independent",
            True,
            "linearly independent over constants; over polynomials this is "
            "the same as independence over shift-periodic coefficients",
        )
    ]
    common = multi_gcd(dense)
    no_common = common.degree == 0
    hypotheses.append(
        Hypothesis(
            "no common zeros",
            no_common,
            "gcd of summands is constant" if no_common else f"common factor {common}",
        )
    )
    if not no_common:
        return CheckReport(Statement.ORD_INEQUALITY, tuple(hypotheses))

    C = casoratian(dense, kappa_el)
    if C.is_zero():
        raise DependentInputsError("Casoratian vanishes; summands are dependent")

    # certificate for zeros of G lying only on the dense sum
    sum_shifts = [total.taylor_shift(kappa_el * i) for i in range(m)]
    M = multi_gcd(sum_shifts)
    certificate = (C % M).is_zero()

    candidates: set[FieldElement] = set()
    for g in gs:
        for w in g.roots():
            for i in range(m):
                candidates.add(w + kappa_el * i)
    ordered = sorted(candidates, key=lambda e: e.coords)

    polys = dense + [total]
    factored_ords = list(gs)

    def ord_plus(j: int, point: FieldElement) -> int:
        if j < m:
            return factored_ords[j].ord_at(point)
        return polys[m].ord_at(point)

    violations = []
    point_rows = []
    for w in ordered:
        lhs_w = sum(ord_plus(j, w) for j in range(m + 1)) - C.ord_at(w)
        rhs_w = 0
        for j in range(m + 1):
            base = ord_plus(j, w)
            if base == 0:
                continue
            low = base
            point = w
            for _ in range(1, m):
                point = point + kappa_el
                low = min(low, ord_plus(j, point))
                if low == 0:
                    break
            rhs_w += base - low
        point_rows.append((w, max(lhs_w, 0), rhs_w))
        if lhs_w > 0 and lhs_w > rhs_w:
            violations.append({"point": str(w), "lhs": lhs_w, "rhs": rhs_w})

    if radii is None:
        base = [Fraction(1), Fraction(2), Fraction(5), Fraction(10)]
        cover = _cover_radius(ordered)
        radii = sorted(set(base + [cover]))
    else:
        radii = sorted({_as_fraction(r) for r in radii})
        if any(r < 0 for r in radii):
            raise ValueError("radii must be non-negative")

    per_radius = []
    agg_ok = True
    last_lhs = last_rhs = 0
    for r in radii:
        r_sq = r * r
        lhs_r = rhs_r = 0
        for w, lhs_w, rhs_w in point_rows:
            if _in_closed_disc(w, r_sq) <= 0:
                lhs_r += lhs_w
                rhs_r += rhs_w
        ok = lhs_r <= rhs_r
        agg_ok = agg_ok and ok
        last_lhs, last_rhs = lhs_r, rhs_r
        per_radius.append({"r": str(r), "lhs": lhs_r, "rhs": rhs_r, "holds": ok})

    holds = not violations and certificate and agg_ok
    return CheckReport(
        Statement.ORD_INEQUALITY,
        tuple(hypotheses),
        lhs=last_lhs,
        rhs=last_rhs,
        holds=holds,
        artifacts={
            "m": m,
            "points_checked": len(ordered),
            "violations": violations,
            "shift_gcd_divides_casoratian": certificate,
            "casoratian_degree": int(C.degree),
            "per_radius": per_radius,
        },
    )
