"""Dense exact univariate polynomials over a quadratic tower field."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    NonPositiveMultiplicityError,
    NotDivisibleError,
    ZeroLeadingError,
    ZeroPolynomialError,
    ZeroShiftError,
)
from .field import FieldElement, FieldTower

NEG_INF = float("-inf")

CoeffLike = Union[int, Fraction, FieldElement]


class Polynomial:
    """Coefficients ascending by degree, trailing zeros trimmed."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: FieldTower, coeffs: Iterable[CoeffLike] = ()):
        elems = [tower._coerce(c) for c in coeffs]
        while elems and elems[-1].is_zero():
            elems.pop()
        self.tower = tower
        self.coeffs = tuple(elems)

    @classmethod
    def zero(cls, tower: FieldTower) -> "Polynomial":
        return cls(tower, ())

    @classmethod
    def constant(cls, value: FieldElement) -> "Polynomial":
        return cls(value.tower, (value,))

    @classmethod
    def variable(cls, tower: FieldTower) -> "Polynomial":
        return cls(tower, (0, 1))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lead(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> FieldElement:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.tower.zero

    def constant_value(self) -> FieldElement:
        """The value of a constant polynomial (zero included)."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else self.tower.zero

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            other = Polynomial(self.tower, (other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations -----------------------------------------------------

    def _coerce_operand(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return Polynomial(self.tower, (other,))
        return None

    def __add__(self, other):
        q = self._coerce_operand(other)
        if q is None:
            return NotImplemented
        a, b = self.coeffs, q.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(self.tower, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.tower, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        q = self._coerce_operand(other)
        if q is None:
            return NotImplemented
        return self.__add__(-q)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        q = self._coerce_operand(other)
        if q is None:
            return NotImplemented
        if self.is_zero() or q.is_zero():
            return Polynomial.zero(self.tower)
        zero = self.tower.zero
        out = [zero] * (len(self.coeffs) + len(q.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for k, b in enumerate(q.coeffs):
                out[j + k] = out[j + k] + a * b
        return Polynomial(self.tower, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be natural numbers")
        result = Polynomial(self.tower, (1,))
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c: CoeffLike) -> "Polynomial":
        return self * Polynomial(self.tower, (c,))

    # -- division ------------------------------------------------------------

    def __divmod__(self, other: "Polynomial"):
        d = self._coerce_operand(other)
        if d is None:
            return NotImplemented
        if d.is_zero():
            raise ZeroPolynomialError("division by the zero polynomial")
        if self.degree < d.degree:
            return Polynomial.zero(self.tower), self
        lead_inv = d.lead.inverse()
        rem = list(self.coeffs)
        dd = len(d.coeffs) - 1
        quot = [self.tower.zero] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            q = c * lead_inv
            quot[k - dd] = q
            for j, dc in enumerate(d.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - q * dc
        return Polynomial(self.tower, quot), Polynomial(self.tower, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def divide_exact(self, d: "Polynomial") -> "Polynomial":
        quot, rem = divmod(self, d)
        if not rem.is_zero():
            raise NotDivisibleError("exact division left a remainder")
        return quot

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ZeroPolynomialError("the zero polynomial cannot be made monic")
        inv = self.lead.inverse()
        return Polynomial(self.tower, tuple(c * inv for c in self.coeffs))

    # -- calculus on the kappa-lattice ---------------------------------------

    def eval_at(self, x: CoeffLike) -> FieldElement:
        x = self.tower._coerce(x)
        acc = self.tower.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor_shift(self, kappa: CoeffLike) -> "Polynomial":
        """p(z + kappa), exactly."""
        kappa = self.tower._coerce(kappa)
        acc = Polynomial.zero(self.tower)
        shift = Polynomial(self.tower, (kappa, 1))
        for c in reversed(self.coeffs):
            acc = acc * shift + c
        return acc

    def delta(self, kappa: CoeffLike) -> "Polynomial":
        """Forward difference p(z + kappa) - p(z); kappa must be nonzero."""
        kappa = self.tower._coerce(kappa)
        if kappa.is_zero():
            raise ZeroShiftError("difference operator needs a nonzero shift")
        return self.taylor_shift(kappa) - self

    def derivative(self) -> "Polynomial":
        return Polynomial(
            self.tower, tuple(c * k for k, c in enumerate(self.coeffs) if k)
        )

    def ord_at(self, w: CoeffLike) -> int:
        """Multiplicity of w as a root (0 when p(w) != 0)."""
        if self.is_zero():
            raise ZeroPolynomialError("order at a point is undefined for the zero polynomial")
        w = self.tower._coerce(w)
        coeffs = list(self.coeffs)
        order = 0
        while True:
            # Horner pass produces quotient by (z - w) and the remainder p(w).
            quot = []
            acc = self.tower.zero
            for c in reversed(coeffs):
                acc = acc * w + c
                quot.append(acc)
            if not acc.is_zero():
                return order
            order += 1
            coeffs = list(reversed(quot[:-1]))
            if not coeffs:
                return order

    def __repr__(self):
        from .parser import print_poly

        return f"Polynomial({print_poly(self)})"

    def __str__(self):
        from .parser import print_poly

        return print_poly(self)


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(p, 0) = monic(p)."""
    if p.is_zero() and q.is_zero():
        raise ZeroPolynomialError("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        r = a % b
        a, b = b, (r if r.is_zero() else r.monic())
    return a.monic()


def multi_gcd(ps: Sequence[Polynomial]) -> Polynomial:
    """Monic gcd of a nonempty list (zero entries ignored unless all are zero)."""
    if not ps:
        raise ValueError("multi_gcd of an empty list")
    acc = ps[0]
    for q in ps[1:]:
        if acc.is_zero():
            acc = q
        elif not q.is_zero():
            acc = gcd(acc, q)
        if not acc.is_zero() and acc.degree == 0:
            return acc.monic()
    if acc.is_zero():
        raise ZeroPolynomialError("multi_gcd of all-zero inputs")
    return acc.monic()


class FactoredPoly:
    """gamma * prod (z - w_j)^{m_j} with distinct roots, kept canonical.

    Duplicate roots merge on construction and factors sort by root
    coordinates, so equal products compare equal.
    """

    __slots__ = ("leading", "factors")

    def __init__(self, leading: FieldElement, factors: Iterable[tuple] = ()):
        if not isinstance(leading, FieldElement):
            raise TypeError("leading coefficient must be a field element")
        if leading.is_zero():
            raise ZeroLeadingError("factored polynomial with zero leading coefficient")
        tower = leading.tower
        merged: dict = {}
        for root, mult in factors:
            if not isinstance(mult, int) or mult < 1:
                raise NonPositiveMultiplicityError(
                    f"root multiplicity must be a positive integer, got {mult!r}"
                )
            root = tower._coerce(root)
            merged[root] = merged.get(root, 0) + mult
        self.leading = leading
        self.factors = tuple(sorted(merged.items(), key=lambda rm: rm[0].coords))

    @property
    def tower(self) -> FieldTower:
        return self.leading.tower

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.factors)

    def ord_at(self, w: CoeffLike) -> int:
        w = self.tower._coerce(w)
        for root, mult in self.factors:
            if root == w:
                return mult
        return 0

    def roots(self) -> tuple:
        return tuple(root for root, _ in self.factors)

    def expand(self) -> Polynomial:
        out = Polynomial(self.tower, (self.leading,))
        for root, mult in self.factors:
            linear = Polynomial(self.tower, (-root, 1))
            for _ in range(mult):
                out = out * linear
        return out

    def scale_roots_and_leading(self, leading=None, shift=None):
        """Convenience for building transformed copies; internal use."""
        lead = self.leading if leading is None else self.tower._coerce(leading)
        if shift is None:
            return FactoredPoly(lead, self.factors)
        shift = self.tower._coerce(shift)
        return FactoredPoly(lead, [(r + shift, m) for r, m in self.factors])

    def __eq__(self, other):
        if not isinstance(other, FactoredPoly):
            return NotImplemented
        return self.leading == other.leading and self.factors == other.factors

    def __hash__(self):
        return hash((self.leading, self.factors))

    def __repr__(self):
        from .parser import print_factored

        return f"FactoredPoly({print_factored(self)})"

    def __str__(self):
        from .parser import print_factored

        return print_factored(self)
