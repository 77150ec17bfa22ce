"""Mason-type degree bounds along a shift lattice, checked exactly.

For coprime a + b = c, not all constant, the maximum degree is at most
n~(a) + n~(b) + n~(c) - 1 with n~ the order-2 difference radical degree.
For a_1 + ... + a_m = a_{m+1} with the first m linearly independent over the
constants, order-m radical degrees bound the maximum degree with slack
m(m-1)/2.  The Casoratian (shift analogue of the Wronskian) powers the
multi-term case; its determinant is computed fraction-free, with a naive
cofactor expansion kept around as an oracle for small sizes.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import ZeroShiftError
from .poly import Polynomial, gcd, multi_gcd
from .radical import diff_radical_m
from .report import CheckReport, Hypothesis, Statement


def casoratian(ps: Sequence[Polynomial], kappa) -> Polynomial:
    """det of the m x m matrix with entry (i, j) = p_j(z + i*kappa)."""
    if not ps:
        raise ValueError("casoratian of an empty list")
    tower = ps[0].tower
    kappa = tower._coerce(kappa)
    if kappa.is_zero():
        raise ZeroShiftError("casoratian needs a nonzero shift")
    rows = [list(ps)]
    for i in range(1, len(ps)):
        rows.append([p.taylor_shift(kappa * i) for p in ps])
    return _det_bareiss(rows)


def _det_bareiss(mat: list[list[Polynomial]]) -> Polynomial:
    """Fraction-free determinant; every division is exact in the poly ring."""
    n = len(mat)
    tower = mat[0][0].tower
    if n == 1:
        return mat[0][0]
    m = [row[:] for row in mat]
    sign = 1
    prev = Polynomial(tower, (1,))
    zero = Polynomial.zero(tower)
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not m[r][k].is_zero()), None)
        if pivot_row is None:
            return zero
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev)
            m[i][k] = zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def det_cofactor(mat: list[list[Polynomial]]) -> Polynomial:
    """Naive cofactor expansion; exponential, oracle use only (m <= 4)."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    tower = mat[0][0].tower
    acc = Polynomial.zero(tower)
    for j, entry in enumerate(mat[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = entry * det_cofactor(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def casoratian_naive(ps: Sequence[Polynomial], kappa) -> Polynomial:
    tower = ps[0].tower
    kappa = tower._coerce(kappa)
    rows = [list(ps)] + [
        [p.taylor_shift(kappa * i) for p in ps] for i in range(1, len(ps))
    ]
    return det_cofactor(rows)


def linearly_independent(ps: Sequence[Polynomial]) -> bool:
    """Exact rank test of the coefficient matrix over the tower field."""
    if not ps:
        return True
    tower = ps[0].tower
    width = max((len(p.coeffs) for p in ps), default=0)
    if width == 0:
        return False  # some zero polynomial present
    rows = [[p.coeff(k) for k in range(width)] for p in ps]
    rank = 0
    for col in range(width):
        pivot = next(
            (r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None
        )
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [c * inv for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                factor = rows[r][col]
                rows[r] = [
                    rc - factor * pc for rc, pc in zip(rows[r], rows[rank])
                ]
        rank += 1
        if rank == len(rows):
            break
    return rank == len(ps)


def pairwise_coprime(ps: Sequence[Polynomial]) -> tuple[bool, Optional[Polynomial]]:
    """(True, None) or (False, first nontrivial common factor found)."""
    for a in range(len(ps)):
        for b in range(a + 1, len(ps)):
            g = gcd(ps[a], ps[b])
            if g.degree != 0:
                return False, g
    return True, None


def setwise_coprime(ps: Sequence[Polynomial]) -> bool:
    return multi_gcd(ps).degree == 0


def _coprime_hypothesis(ps: Sequence[Polynomial], mode: str) -> Hypothesis:
    if mode == "pairwise":
        ok, witness = pairwise_coprime(ps)
        detail = "no two share a factor" if ok else f"common factor {witness}"
    elif mode == "setwise":
        ok = setwise_coprime(ps)
        detail = (
            "no factor common to all" if ok else f"common factor {multi_gcd(ps)}"
        )
    else:
        raise ValueError(f"unknown coprimality mode {mode!r}")
    return Hypothesis(f"coprime ({mode})", ok, detail)


def shift_gcd_factor(p: Polynomial, kappa, m: int) -> Polynomial:
    """Monic gcd of p(z), p(z+kappa), ..., p(z+(m-1)kappa)."""
    tower = p.tower
    kappa = tower._coerce(kappa)
    return multi_gcd([p.taylor_shift(kappa * j) for j in range(m)])


def check_mason_triple(a: Polynomial, b: Polynomial, c: Polynomial, kappa) -> CheckReport:
    """max deg <= n~(a) + n~(b) + n~(c) - 1 for coprime a + b = c."""
    tower = a.tower
    kappa = tower._coerce(kappa)
    if kappa.is_zero():
        raise ZeroShiftError("check needs a nonzero shift")
    ps = [a, b, c]
    hypotheses = []

    nonzero = all(not p.is_zero() for p in ps)
    hypotheses.append(
        Hypothesis("nonzero", nonzero, "all of a, b, c nonzero" if nonzero else "a zero input")
    )
    if not nonzero:
        return CheckReport(Statement.MASON_TRIPLE, tuple(hypotheses))

    sum_ok = (a + b) == c
    hypotheses.append(Hypothesis("sum", sum_ok, "a + b = c" if sum_ok else "a + b differs from c"))
    if not sum_ok:
        return CheckReport(Statement.MASON_TRIPLE, tuple(hypotheses))

    cop = _coprime_hypothesis(ps, "pairwise")
    hypotheses.append(cop)
    if not cop.passed:
        return CheckReport(Statement.MASON_TRIPLE, tuple(hypotheses))

    nonconst = any(p.degree > 0 for p in ps)
    hypotheses.append(
        Hypothesis("nonconstant", nonconst, "not all constant" if nonconst else "all constant")
    )
    if not nonconst:
        return CheckReport(Statement.MASON_TRIPLE, tuple(hypotheses))

    results = [diff_radical_m(p, kappa, 2) for p in ps]
    tildes = [r.n_tilde for r in results]
    lhs = max(int(p.degree) for p in ps)
    rhs = sum(tildes) - 1
    return CheckReport(
        Statement.MASON_TRIPLE,
        tuple(hypotheses),
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        artifacts={
            "n_tilde": tildes,
            "radicals": [str(r.radical) for r in results],
            "sharp": lhs == rhs,
        },
    )


def check_mason_multi(
    ps: Sequence[Polynomial], kappa, coprimality: str = "setwise"
) -> CheckReport:
    """Order-m radical bound for a_1 + ... + a_m = a_{m+1}.

    Also computes the divisibility certificate q | C, where q is the product
    of the per-input shift-gcd factors and C the Casoratian of the first m.
    """
    if len(ps) < 3:
        raise ValueError("need at least 3 polynomials (m >= 2 summands plus the sum)")
    m = len(ps) - 1
    tower = ps[0].tower
    kappa = tower._coerce(kappa)
    if kappa.is_zero():
        raise ZeroShiftError("check needs a nonzero shift")
    hypotheses = []

    nonzero = all(not p.is_zero() for p in ps)
    hypotheses.append(
        Hypothesis("nonzero", nonzero, "all inputs nonzero" if nonzero else "a zero input")
    )
    if not nonzero:
        return CheckReport(Statement.MASON_MULTI, tuple(hypotheses))

    total = Polynomial.zero(tower)
    for p in ps[:-1]:
        total = total + p
    sum_ok = total == ps[-1]
    hypotheses.append(
        Hypothesis(
            "sum",
            sum_ok,
            "a_1 + ... + a_m = a_{m+1}" if sum_ok else "sum differs from the last entry",
        )
    )
    if not sum_ok:
        return CheckReport(Statement.MASON_MULTI, tuple(hypotheses))

    cop = _coprime_hypothesis(ps, coprimality)
    hypotheses.append(cop)
    if not cop.passed:
        return CheckReport(Statement.MASON_MULTI, tuple(hypotheses))

    indep = linearly_independent(ps[:-1])
    hypotheses.append(
        Hypothesis(
            "independent",
            indep,
            "first m linearly independent over the constants"
            if indep
            else "first m linearly dependent",
        )
    )
    if not indep:
        return CheckReport(Statement.MASON_MULTI, tuple(hypotheses))

    results = [diff_radical_m(p, kappa, m) for p in ps]
    tildes = [r.n_tilde for r in results]
    lhs = max(int(p.degree) for p in ps)
    rhs = sum(tildes) - m * (m - 1) // 2

    cas = casoratian(ps[:-1], kappa)
    # Each cofactor is already the monic gcd of the m shifts of its input.
    q = Polynomial(tower, (1,))
    for r in results:
        q = q * r.cofactor
    divisible = not cas.is_zero() and (cas % q).is_zero()

    return CheckReport(
        Statement.MASON_MULTI,
        tuple(hypotheses),
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        artifacts={
            "m": m,
            "n_tilde": tildes,
            "coprimality": coprimality,
            "casoratian_degree": int(cas.degree) if not cas.is_zero() else None,
            "shift_gcd_product_degree": int(q.degree),
            "casoratian_divisible_by_gcd_product": divisible,
            "sharp": lhs == rhs,
        },
    )
