"""Base arithmetic for a p-adic field of odd residue characteristic.

Everything downstream works at *square-class resolution*: an element of
k^x is remembered as an exact power of the uniformizer pi times a unit
whose class in R^x/(R^x)^2 is either trivial or the fixed nonsquare eps.
This is enough data for every branching formula; the finite oracle
refines units to actual residues when it needs explicit characters.

Moy-Prasad filtration indices live in the extended reals
R union (R+) union {infinity}, with r < r+ < r' for every r' > r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math


class ArithError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldParams:
    """Residue data of the field: q = p^f with p an odd prime.

    -1 is a square in the residue field (hence in R^x) exactly when
    q = 1 mod 4; in the other case the convention eps = -1 is in force.
    """

    p: int
    f: int = 1

    def __post_init__(self):
        if not _is_prime(self.p) or self.p == 2:
            raise ArithError("residue characteristic must be an odd prime, got %r" % (self.p,))
        if self.f < 1:
            raise ArithError("residue degree must be positive")

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def minus_one_square(self) -> bool:
        return self.q % 4 == 1


@dataclass(frozen=True, order=False)
class ExtReal:
    """An extended filtration index: a rational r, its successor r+, or infinity."""

    value: Fraction = Fraction(0)
    plus: bool = False
    infinite: bool = False

    @staticmethod
    def of(x) -> "ExtReal":
        return ExtReal(Fraction(x))

    @staticmethod
    def plus_of(x) -> "ExtReal":
        return ExtReal(Fraction(x), plus=True)

    def _key(self):
        # (value, plus) is a total order; infinity dominates everything
        if self.infinite:
            return (1, Fraction(0), False)
        return (0, self.value, self.plus)

    def __lt__(self, other):
        other = _coerce(other)
        if self.infinite:
            return False
        if other.infinite:
            return True
        return (self.value, self.plus) < (other.value, other.plus)

    def __le__(self, other):
        return self == _coerce(other) or self < other

    def __gt__(self, other):
        return _coerce(other) < self

    def __ge__(self, other):
        return _coerce(other) <= self

    def __add__(self, c) -> "ExtReal":
        if self.infinite:
            return self
        return ExtReal(self.value + Fraction(c), plus=self.plus)

    def __sub__(self, c) -> "ExtReal":
        return self + (-Fraction(c))

    def __str__(self):
        if self.infinite:
            return "inf"
        return str(self.value) + ("+" if self.plus else "")


INFINITY = ExtReal(infinite=True)


def _coerce(x) -> ExtReal:
    if isinstance(x, ExtReal):
        return x
    return ExtReal(Fraction(x))


def ceil_index(r) -> int:
    """Least integer >= r, or strictly > r for a plus-tagged index."""
    r = _coerce(r)
    if r.infinite:
        raise ArithError("unbounded index")
    if r.plus:
        return math.floor(r.value) + 1
    return math.ceil(r.value)


# ---------------------------------------------------------------------------
# square classes and field elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SquareClass:
    """A class in k^x/(k^x)^2: uniformizer parity and an eps flag."""

    odd_val: bool
    eps: bool

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        return SquareClass(self.odd_val != other.odd_val, self.eps != other.eps)

    @property
    def is_trivial(self) -> bool:
        return not self.odd_val and not self.eps

    def __str__(self):
        if not self.odd_val:
            return "eps" if self.eps else "1"
        return "eps*pi" if self.eps else "pi"


SQ_ONE = SquareClass(False, False)
SQ_EPS = SquareClass(False, True)
SQ_PI = SquareClass(True, False)
SQ_EPS_PI = SquareClass(True, True)
SQUARE_CLASSES = (SQ_ONE, SQ_EPS, SQ_PI, SQ_EPS_PI)


def minus_one_class(fp: FieldParams) -> SquareClass:
    return SQ_ONE if fp.minus_one_square else SQ_EPS


@dataclass(frozen=True)
class KElem:
    """An element of k at square-class resolution.

    val is the exact valuation (None encodes zero, of valuation infinity)
    and eps says whether the unit part is a nonsquare.  refinement
    optionally carries a unit residue for the finite oracle.
    """

    val: int | None = 0
    eps: bool = False
    refinement: int | None = None

    @property
    def is_zero(self) -> bool:
        return self.val is None

    def __mul__(self, other: "KElem") -> "KElem":
        if self.is_zero or other.is_zero:
            return K_ZERO
        return KElem(self.val + other.val, self.eps != other.eps)

    def inv(self) -> "KElem":
        if self.is_zero:
            raise ArithError("zero is not invertible")
        # eps^{-1} = eps * (eps^{-1})^2 lies in the eps class
        return KElem(-self.val, self.eps)

    def neg(self, fp: FieldParams) -> "KElem":
        if self.is_zero:
            return self
        return KElem(self.val, self.eps != (not fp.minus_one_square))

    def square_class(self) -> SquareClass:
        if self.is_zero:
            raise ArithError("zero has no square class")
        return SquareClass(self.val % 2 == 1, self.eps)

    @property
    def unit_class(self) -> SquareClass:
        """Square class of the unit part, valuation stripped."""
        if self.is_zero:
            raise ArithError("zero has no unit class")
        return SQ_EPS if self.eps else SQ_ONE

    def __str__(self):
        if self.is_zero:
            return "0"
        u = "eps" if self.eps else "1"
        if self.val == 0:
            return u
        if u == "1":
            return "pi^%d" % self.val
        return "%s*pi^%d" % (u, self.val)


K_ZERO = KElem(None, False)
K_ONE = KElem(0, False)
K_EPS = KElem(0, True)
K_PI = KElem(1, False)


def kelem(val: int, cls: SquareClass | None = None, eps: bool = False) -> KElem:
    if cls is not None:
        if cls.odd_val != (val % 2 == 1):
            raise ArithError("valuation parity does not match the square class")
        eps = cls.eps
    return KElem(val, eps)


def class_elem(cls: SquareClass) -> KElem:
    """The standard representative 1, eps, pi or eps*pi of a square class."""
    return KElem(1 if cls.odd_val else 0, cls.eps)


def hilbert_sgn(tau: SquareClass, x: KElem, fp: FieldParams) -> int:
    """The 2-Hilbert symbol (x, tau), i.e. sgn_tau(x).

    Tame closed form for odd residue characteristic: with x = u pi^a and
    tau = w pi^b, the symbol is the residue character of
    (-1)^{ab} u^b w^a.  Only square-class data enters.
    """
    if x.is_zero:
        raise ArithError("Hilbert symbol needs a nonzero element")
    a = x.val % 2
    b = 1 if tau.odd_val else 0
    exponent = a * b * (0 if fp.minus_one_square else 1)
    exponent += b * (1 if x.eps else 0)
    exponent += a * (1 if tau.eps else 0)
    return -1 if exponent % 2 else 1


def sgn_tau_of_minus_one(tau: SquareClass, fp: FieldParams) -> int:
    """sgn_tau(-1), the central value of the sign character."""
    return hilbert_sgn(tau, class_elem(minus_one_class(fp)), fp)


# ---------------------------------------------------------------------------
# Moy-Prasad congruence exponents
# ---------------------------------------------------------------------------

#: marker for the open facet (0, 1/2) used by ramified K-types
FACET = "facet"


@dataclass(frozen=True)
class ExponentMatrix:
    """Congruence exponents (d1, u, l, d2) of a filtration subgroup:
    diagonal entries in 1 + P^d, upper right in P^u, lower left in P^l."""

    d1: int
    u: int
    l: int
    d2: int

    def dominates(self, other: "ExponentMatrix") -> bool:
        return (self.d1 >= other.d1 and self.u >= other.u
                and self.l >= other.l and self.d2 >= other.d2)

    def as_tuple(self):
        return (self.d1, self.u, self.l, self.d2)


def filtration_exponents(x, r) -> ExponentMatrix:
    """Exponent matrix of G_{x,r} for x in {0, 1/2, 1}, or of the facet
    group G_{[0,1/2],l} for x = FACET.

    The facet group is the intersection of the G_{x,l} over x in the open
    interval (0, 1/2): exponents (l, l, l+1, l) at integer l and
    (l+1/2, ..., l+1/2) at half-odd l.
    """
    r = _coerce(r)
    if r.infinite or not (r > ExtReal.of(0)):
        raise ArithError("filtration index must be positive")
    if x == FACET:
        if r.plus:
            raise ArithError("facet index must be a plain half-integer")
        two_l = r.value * 2
        if two_l.denominator != 1:
            raise ArithError("facet index must be a half-integer")
        if r.value.denominator == 1:
            l = int(r.value)
            return ExponentMatrix(l, l, l + 1, l)
        m = int(r.value - Fraction(1, 2))
        return ExponentMatrix(m + 1, m + 1, m + 1, m + 1)
    x = Fraction(x)
    if x not in (Fraction(0), Fraction(1, 2), Fraction(1)):
        raise ArithError("point must be 0, 1/2 or 1 (or FACET)")
    d = ceil_index(r)
    return ExponentMatrix(d, ceil_index(r - x), ceil_index(r + x), d)
