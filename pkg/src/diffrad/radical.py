"""Difference radicals of exact polynomials.

The order-m difference radical of p with shift kappa keeps each root w with
exponent  ord_w(p) - min_{0 <= j <= m-1} ord_{w + j*kappa}(p),  so roots whose
whole forward shift chain stays inside the zero set drop out.  Two independent
routes compute it: a gcd route on dense coefficients (no root data needed) and
a root route on factored input; the suite holds them equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ZeroPolynomialError, ZeroShiftError
from .poly import FactoredPoly, Polynomial, gcd, multi_gcd


@dataclass(frozen=True)
class RadicalResult:
    """monic(p) = cofactor * radical; leading restores the input scale."""

    radical: Polynomial
    cofactor: Polynomial
    n_tilde: int
    leading: object  # FieldElement

    def reconstruct(self) -> Polynomial:
        return (self.cofactor * self.radical).scale(self.leading)


def _check_inputs(p: Polynomial, kappa) -> object:
    if p.is_zero():
        raise ZeroPolynomialError("radical of the zero polynomial is undefined")
    kappa = p.tower._coerce(kappa)
    if kappa.is_zero():
        raise ZeroShiftError("difference radical needs a nonzero shift")
    return kappa


def diff_radical_m(p: Polynomial, kappa, m: int = 2) -> RadicalResult:
    """Order-m difference radical along the kappa-lattice (gcd route).

    The cofactor is the monic gcd of p(z), p(z+kappa), ..., p(z+(m-1)kappa);
    the radical is the monic exact quotient p / cofactor.
    """
    kappa = _check_inputs(p, kappa)
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"radical order must be an integer >= 2, got {m!r}")
    shifts = [p]
    for j in range(1, m):
        shifts.append(p.taylor_shift(kappa * j))
    cofactor = multi_gcd(shifts)
    radical = p.divide_exact(cofactor).monic()
    return RadicalResult(
        radical=radical,
        cofactor=cofactor,
        n_tilde=int(radical.degree),
        leading=p.lead,
    )


def diff_radical(p: Polynomial, kappa) -> RadicalResult:
    """The order-2 difference radical, gcd(p, p(z+kappa)) as cofactor."""
    return diff_radical_m(p, kappa, 2)


def n_tilde(p: Polynomial, kappa, m: int = 2) -> int:
    return diff_radical_m(p, kappa, m).n_tilde


def classical_radical(p: Polynomial) -> RadicalResult:
    """Squarefree part via gcd(p, p'); n_tilde counts distinct roots."""
    if p.is_zero():
        raise ZeroPolynomialError("radical of the zero polynomial is undefined")
    if p.degree == 0:
        one = Polynomial(p.tower, (1,))
        return RadicalResult(one, one, 0, p.lead)
    cofactor = gcd(p, p.derivative())
    radical = p.divide_exact(cofactor).monic()
    return RadicalResult(radical, cofactor, int(radical.degree), p.lead)


def _chain_exponents(f: FactoredPoly, kappa, m: int) -> dict:
    """root -> ord_w - min over the m forward shifts, from root data alone."""
    orders = dict(f.factors)
    out = {}
    for root, mult in f.factors:
        low = mult
        for j in range(1, m):
            low = min(low, orders.get(root + kappa * j, 0))
            if low == 0:
                break
        out[root] = mult - low
    return out


def diff_radical_from_roots(f: FactoredPoly, kappa, m: int = 2) -> RadicalResult:
    """Root-route oracle for diff_radical_m on factored input."""
    kappa = f.tower._coerce(kappa)
    if kappa.is_zero():
        raise ZeroShiftError("difference radical needs a nonzero shift")
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"radical order must be an integer >= 2, got {m!r}")
    exponents = _chain_exponents(f, kappa, m)
    one = f.tower.one
    radical_factors = [(r, e) for r, e in exponents.items() if e > 0]
    cofactor_factors = [
        (r, mult - exponents[r]) for r, mult in f.factors if mult - exponents[r] > 0
    ]
    radical = FactoredPoly(one, radical_factors).expand()
    cofactor = FactoredPoly(one, cofactor_factors).expand()
    return RadicalResult(
        radical=radical,
        cofactor=cofactor,
        n_tilde=sum(exponents.values()),
        leading=f.leading,
    )


def n_tilde_sum_bound(f: FactoredPoly, kappa, m: int) -> tuple[int, int]:
    """(order-m count, sum over j of the order-2 counts at shift j*kappa).

    The left side never exceeds the right: a root surviving the m-window
    survives some single jump.  Both sides come from root data.
    """
    kappa = f.tower._coerce(kappa)
    if kappa.is_zero():
        raise ZeroShiftError("difference radical needs a nonzero shift")
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"order must be an integer >= 2, got {m!r}")
    lhs = sum(_chain_exponents(f, kappa, m).values())
    rhs = 0
    for j in range(1, m):
        rhs += sum(_chain_exponents(f, kappa * j, 2).values())
    return lhs, rhs
