"""Exact arithmetic in iterated quadratic extensions of the rationals.

A tower starts at Q and grows one square root at a time: Q(i), Q(i, sqrt(2)),
Q(i, sqrt(2), sqrt(3)), ...  An element of a tower with k adjoined roots
carries 2**k rational coordinates over the product basis of those roots, so
equality, conjugation, inversion and squareness are all decidable exactly.

Complex embeddings are produced as rational rectangles guaranteed to contain
the true value; they are used to pick branches and to decide signs of real
elements, never to decide equality.  Each radicand must be real (fixed by
conjugation of the tower built so far); positive radicands embed to the
positive real root, negative ones to the root with positive imaginary part.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .errors import NonRealRadicandError, SquareRadicandError, ZeroRadicandError

Scalar = Union[int, Fraction, "FieldElement"]

_F0 = Fraction(0)
_F1 = Fraction(1)


def _sqrt_bounds(q: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(q) <= hi with hi - lo <= 2**-prec, for q >= 0."""
    if q == 0:
        return _F0, _F0
    num, den = q.numerator, q.denominator
    s = isqrt((num * den) << (2 * prec))
    scale = den << prec
    return Fraction(s, scale), Fraction(s + 1, scale)


def _iv_mul(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]):
    p1, p2, p3, p4 = a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]
    return min(p1, p2, p3, p4), max(p1, p2, p3, p4)


class ComplexInterval:
    """Axis-aligned rational rectangle containing a complex number."""

    __slots__ = ("re_lo", "re_hi", "im_lo", "im_hi")

    def __init__(self, re_lo, re_hi, im_lo, im_hi):
        self.re_lo = re_lo
        self.re_hi = re_hi
        self.im_lo = im_lo
        self.im_hi = im_hi

    @classmethod
    def point(cls, re: Fraction, im: Fraction = _F0) -> "ComplexInterval":
        return cls(re, re, im, im)

    def __add__(self, other: "ComplexInterval") -> "ComplexInterval":
        return ComplexInterval(
            self.re_lo + other.re_lo,
            self.re_hi + other.re_hi,
            self.im_lo + other.im_lo,
            self.im_hi + other.im_hi,
        )

    def __mul__(self, other: "ComplexInterval") -> "ComplexInterval":
        ac = _iv_mul((self.re_lo, self.re_hi), (other.re_lo, other.re_hi))
        bd = _iv_mul((self.im_lo, self.im_hi), (other.im_lo, other.im_hi))
        ad = _iv_mul((self.re_lo, self.re_hi), (other.im_lo, other.im_hi))
        bc = _iv_mul((self.im_lo, self.im_hi), (other.re_lo, other.re_hi))
        return ComplexInterval(ac[0] - bd[1], ac[1] - bd[0], ad[0] + bc[0], ad[1] + bc[1])

    @property
    def width(self) -> Fraction:
        return max(self.re_hi - self.re_lo, self.im_hi - self.im_lo)

    @property
    def mid(self) -> complex:
        return complex((self.re_lo + self.re_hi) / 2, (self.im_lo + self.im_hi) / 2)

    def contains(self, value: complex) -> bool:
        return (
            self.re_lo <= Fraction(value.real) <= self.re_hi
            and self.im_lo <= Fraction(value.imag) <= self.im_hi
        )

    def __repr__(self):
        return (
            f"ComplexInterval([{float(self.re_lo)}, {float(self.re_hi)}]"
            f" + [{float(self.im_lo)}, {float(self.im_hi)}]*i)"
        )


# Coordinate kernels.  Coordinates are tuples of Fractions of length 2**k,
# split recursively over the last adjoined root: x = lo + hi*sqrt(d).

def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _neg(a):
    return tuple(-x for x in a)


def _is_zero(a) -> bool:
    return all(x == 0 for x in a)


def _scale(a, q):
    return tuple(x * q for x in a)


def _mul(a, b, gens):
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n >> 1
    alo, ahi = a[:h], a[h:]
    blo, bhi = b[:h], b[h:]
    # Elements lifted from a subtower have zero upper halves; prune those.
    if _is_zero(ahi):
        if _is_zero(bhi):
            return _mul(alo, blo, gens) + (_F0,) * h
        return _mul(alo, blo, gens) + _mul(alo, bhi, gens)
    if _is_zero(bhi):
        return _mul(alo, blo, gens) + _mul(ahi, blo, gens)
    d = gens[h.bit_length() - 1]
    t_lo = _mul(alo, blo, gens)
    t_hi = _mul(ahi, bhi, gens)
    mixed = _mul(_add(alo, ahi), _add(blo, bhi), gens)
    hi = _sub(_sub(mixed, t_lo), t_hi)
    if all(x == 0 for x in d[1:]):
        cross = _scale(t_hi, d[0])
    else:
        cross = _mul(t_hi, d, gens)
    return _add(t_lo, cross) + hi


def _inv(a, gens):
    n = len(a)
    if n == 1:
        if a[0] == 0:
            raise ZeroDivisionError("division by zero in the tower")
        return (1 / a[0],)
    h = n >> 1
    d = gens[h.bit_length() - 1]
    alo, ahi = a[:h], a[h:]
    # 1/(x + y*sqrt(d)) = (x - y*sqrt(d)) / (x^2 - y^2 d); the norm vanishes
    # only for the zero element because d is a non-square by construction.
    norm = _sub(_mul(alo, alo, gens), _mul(_mul(ahi, ahi, gens), d, gens))
    ninv = _inv(norm, gens)
    return _mul(alo, ninv, gens) + _neg(_mul(ahi, ninv, gens))


def _conj(a, signs):
    n = len(a)
    if n == 1:
        return a
    h = n >> 1
    lo = _conj(a[:h], signs)
    hi = _conj(a[h:], signs)
    if signs[h.bit_length() - 1] < 0:
        hi = _neg(hi)
    return lo + hi


def _try_sqrt(a, gens):
    """A square root of `a` in the tower, or None.  Either root may come back."""
    n = len(a)
    if n == 1:
        q = a[0]
        if q < 0:
            return None
        rn, rd = isqrt(q.numerator), isqrt(q.denominator)
        if rn * rn == q.numerator and rd * rd == q.denominator:
            return (Fraction(rn, rd),)
        return None
    h = n >> 1
    d = gens[h.bit_length() - 1]
    alo, ahi = a[:h], a[h:]
    zeros = (_F0,) * h
    if _is_zero(ahi):
        r = _try_sqrt(alo, gens)
        if r is not None:
            return r + zeros
        e = _try_sqrt(_mul(alo, _inv(d, gens), gens), gens)
        if e is not None:
            return zeros + e
        return None
    # y = c + e*sqrt(d) with y^2 = a requires c^2 - e^2 d = +-sqrt(norm(a)).
    norm = _sub(_mul(alo, alo, gens), _mul(_mul(ahi, ahi, gens), d, gens))
    s = _try_sqrt(norm, gens)
    if s is None:
        return None
    half = (Fraction(1, 2),) + zeros[1:]
    for signed in (s, _neg(s)):
        csq = _mul(_add(alo, signed), half, gens)
        c = _try_sqrt(csq, gens)
        if c is None or _is_zero(c):
            continue
        e = _mul(ahi, _inv(_add(c, c), gens), gens)
        if _add(_mul(c, c, gens), _mul(_mul(e, e, gens), d, gens)) == alo:
            return c + e
    return None


class FieldTower:
    """Q with a fixed chain of adjoined square roots.

    Towers are immutable; adjoining returns a new tower whose generator list
    extends this one, so elements of the smaller tower lift losslessly.
    """

    __slots__ = ("_gens", "_signs", "_box_cache", "_hash")

    def __init__(self, gens=(), signs=()):
        self._gens = tuple(gens)
        self._signs = tuple(signs)
        self._box_cache: dict = {}
        self._hash = hash(self._gens)

    @classmethod
    def rationals(cls) -> "FieldTower":
        return cls()

    @property
    def depth(self) -> int:
        return len(self._gens)

    @property
    def dim(self) -> int:
        return 1 << len(self._gens)

    def __eq__(self, other):
        return isinstance(other, FieldTower) and self._gens == other._gens

    def __hash__(self):
        return self._hash

    def extends(self, other: "FieldTower") -> bool:
        """True when `other`'s generator chain is a prefix of this one's."""
        return self._gens[: len(other._gens)] == other._gens

    def element(self, coords) -> "FieldElement":
        coords = tuple(Fraction(c) if not isinstance(c, Fraction) else c for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def rational(self, q) -> "FieldElement":
        return FieldElement(self, (Fraction(q),) + (_F0,) * (self.dim - 1))

    @property
    def zero(self) -> "FieldElement":
        return self.rational(0)

    @property
    def one(self) -> "FieldElement":
        return self.rational(1)

    def sqrt_gen(self, index: int) -> "FieldElement":
        """The adjoined root sqrt(d_index) as an element of this tower."""
        coords = [_F0] * self.dim
        coords[1 << index] = _F1
        return FieldElement(self, tuple(coords))

    def gen_radicand(self, index: int) -> "FieldElement":
        """The radicand d_index lifted into this tower."""
        sub = self._gens[index]
        return FieldElement(self, sub + (_F0,) * (self.dim - len(sub)))

    def gen_sign(self, index: int) -> int:
        """+1 when sqrt(d_index) embeds real, -1 when purely imaginary."""
        return self._signs[index]

    def adjoin_sqrt(self, d: Scalar) -> "FieldTower":
        """Extend the tower by a square root of `d`.

        `d` must be a nonzero non-square element of this tower, fixed by
        conjugation.  The embedding of the new root is the positive real root
        for positive `d` and the root with positive imaginary part otherwise.
        """
        elt = self._coerce(d)
        if elt.is_zero():
            raise ZeroRadicandError("cannot adjoin sqrt(0)")
        if elt.conj() != elt:
            raise NonRealRadicandError(
                "radicand must be fixed by conjugation of the current tower"
            )
        root = _try_sqrt(elt.coords, self._gens)
        if root is not None:
            raise SquareRadicandError(
                "radicand is already a square in the tower",
                root=FieldElement(self, root),
            )
        sign = 1 if elt._sign_of_real() > 0 else -1
        return FieldTower(self._gens + (elt.coords,), self._signs + (sign,))

    def try_sqrt(self, x: Scalar) -> Optional["FieldElement"]:
        """Some square root of `x` inside the tower, or None."""
        elt = self._coerce(x)
        root = _try_sqrt(elt.coords, self._gens)
        return None if root is None else FieldElement(self, root)

    def sqrt_of_rational(self, q) -> Optional["FieldElement"]:
        """The branch-selected square root of a rational, when the tower has it.

        Positive q: the root embedding positive real.  Negative q: the root
        with positive imaginary part.  Returns None when no root exists.
        """
        q = Fraction(q)
        root = self.try_sqrt(self.rational(q))
        if root is None or root.is_zero():
            return root
        if q > 0:
            return root if root._sign_of_real() > 0 else -root
        # Roots of a negative rational are purely imaginary.
        return root if root._sign_of_imag() > 0 else -root

    def describe(self) -> str:
        if not self._gens:
            return "Q"
        names = []
        for idx in range(self.depth):
            rad = self.gen_radicand(idx)
            if rad.is_rational():
                q = rad.as_fraction()
                names.append("i" if q == -1 else f"sqrt({q})")
            else:
                from .parser import print_element  # local import, no cycle at load

                names.append(f"sqrt({print_element(rad)})")
        return "Q(" + ", ".join(names) + ")"

    def __repr__(self):
        return f"FieldTower({self.describe()})"

    def _coerce(self, value: Scalar) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.tower == self:
                return value
            if self.extends(value.tower):
                return value.lift_to(self)
            raise ValueError("element belongs to an incompatible tower")
        return self.rational(value)

    def _root_box(self, index: int, prec: int) -> ComplexInterval:
        """Enclosure of the embedding of sqrt(d_index)."""
        key = (index, prec)
        cached = self._box_cache.get(key)
        if cached is not None:
            return cached
        d = self._gens[index]
        sign = self._signs[index]
        work = prec
        while True:
            box = _eval_box(d, self._gens, self, work)
            # Real radicand: the imaginary part is exactly zero by construction.
            if sign > 0 and box.re_lo > 0:
                lo, hi = _sqrt_bounds(box.re_lo, prec)
                lo2, hi2 = _sqrt_bounds(box.re_hi, prec)
                out = ComplexInterval(lo, hi2, _F0, _F0)
                break
            if sign < 0 and box.re_hi < 0:
                lo, hi = _sqrt_bounds(-box.re_hi, prec)
                lo2, hi2 = _sqrt_bounds(-box.re_lo, prec)
                out = ComplexInterval(_F0, _F0, lo, hi2)
                break
            work *= 2
        self._box_cache[key] = out
        return out


def _eval_box(coords, gens, tower: FieldTower, prec: int) -> ComplexInterval:
    n = len(coords)
    if n == 1:
        return ComplexInterval.point(coords[0])
    h = n >> 1
    lo = _eval_box(coords[:h], gens, tower, prec)
    hi = _eval_box(coords[h:], gens, tower, prec)
    return lo + hi * tower._root_box(h.bit_length() - 1, prec)


class FieldElement:
    """An exact element of a quadratic extension tower."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower: FieldTower, coords: tuple):
        self.tower = tower
        self.coords = coords

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return _is_zero(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def lift_to(self, tower: FieldTower) -> "FieldElement":
        if not tower.extends(self.tower):
            raise ValueError("target tower does not extend this element's tower")
        pad = (_F0,) * (tower.dim - len(self.coords))
        return FieldElement(tower, self.coords + pad)

    def _pair(self, other) -> tuple["FieldElement", "FieldElement"]:
        if isinstance(other, FieldElement):
            if other.tower == self.tower:
                return self, other
            if other.tower.extends(self.tower):
                return self.lift_to(other.tower), other
            if self.tower.extends(other.tower):
                return self, other.lift_to(self.tower)
            raise ValueError("elements of incompatible towers")
        if isinstance(other, (int, Fraction)):
            return self, self.tower.rational(other)
        return self, NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(a.tower, _add(a.coords, b.coords))

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(a.tower, _sub(a.coords, b.coords))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return FieldElement(self.tower, _neg(self.coords))

    def __mul__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(a.tower, _mul(a.coords, b.coords, a.tower._gens))

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._pair(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(a.tower, _mul(a.coords, _inv(b.coords, a.tower._gens), a.tower._gens))

    def __rtruediv__(self, other):
        return self.tower.rational(other).__truediv__(self)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.tower, _inv(self.coords, self.tower._gens))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self.inverse() if n < 0 else self
        result = self.tower.one
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        try:
            a, b = self._pair(other)
        except ValueError:
            return False
        return a.coords == b.coords

    def __hash__(self):
        coords = self.coords
        end = len(coords)
        while end > 1 and coords[end - 1] == 0:
            end -= 1
        return hash(coords[:end])

    # -- conjugation and embedding ------------------------------------------

    def conj(self) -> "FieldElement":
        """Complex conjugate; generator-wise, a field automorphism."""
        return FieldElement(self.tower, _conj(self.coords, self.tower._signs))

    def abs_squared(self) -> "FieldElement":
        """|x|^2 = x * conj(x), an exact element of the real subtower."""
        return self * self.conj()

    def is_real(self) -> bool:
        return self.conj() == self

    def embed(self, precision_bits: int = 53) -> ComplexInterval:
        """A rational rectangle containing the complex embedding.

        The width never exceeds 2**-precision_bits (exact rationals come back
        as zero-width points).  precision_bits must be at least 8.
        """
        if precision_bits < 8:
            raise ValueError("precision_bits must be at least 8")
        target = Fraction(1, 1 << precision_bits)
        prec = precision_bits + 4
        for _ in range(24):
            box = _eval_box(self.coords, self.tower._gens, self.tower, prec)
            if box.width <= target:
                return box
            prec *= 2
        return box

    def __complex__(self) -> complex:
        return self.embed(53).mid

    def _sign_of_real(self) -> int:
        """Sign of a real element, decided exactly by refinement."""
        if self.is_zero():
            return 0
        prec = 32
        while True:
            box = _eval_box(self.coords, self.tower._gens, self.tower, prec)
            if box.re_lo > 0:
                return 1
            if box.re_hi < 0:
                return -1
            prec *= 2

    def _sign_of_imag(self) -> int:
        """Sign of the imaginary part of a nonzero purely imaginary element."""
        prec = 32
        while True:
            box = _eval_box(self.coords, self.tower._gens, self.tower, prec)
            if box.im_lo > 0:
                return 1
            if box.im_hi < 0:
                return -1
            prec *= 2

    def sign_real(self) -> int:
        if not self.is_real():
            raise ValueError("sign is defined only for real elements")
        return self._sign_of_real()

    def __repr__(self):
        from .parser import print_element

        return f"FieldElement({print_element(self)})"

    def __str__(self):
        from .parser import print_element

        return print_element(self)


def compare_real(a: FieldElement, b: Scalar) -> int:
    """-1, 0 or +1 as the real element a is below, equal to or above b."""
    diff = a - b if isinstance(b, FieldElement) else a - a.tower.rational(b)
    return diff.sign_real()


_DEFAULT: Optional[FieldTower] = None


def default_tower() -> FieldTower:
    """The session default Q(i, sqrt(2), sqrt(3))."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = (
            FieldTower.rationals().adjoin_sqrt(-1).adjoin_sqrt(2).adjoin_sqrt(3)
        )
    return _DEFAULT
