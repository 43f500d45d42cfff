"""Anisotropic tori of SL2(k) and their filtrations.

A torus T_{g1,g2} is the centralizer of the antidiagonal matrix
X_{g1,g2} = [[0, g1], [g2, 0]]; it is anisotropic exactly when g1*g2 is
a nonsquare, and its splitting field k(sqrt(g1*g2)) sorts it into an
unramified family (building point y = 0 or 1) and two ramified families
(y = 1/2).  Representatives are taken in the normal shape

    unramified   (val g1, val g2) in {(0,0), (-1,1)}
    ramified     (val g1, val g2) in {(0,1), (1,0)}

which is what the branching formulas consume.  Within a ramified
splitting field two classes are distinguished when -1 is a square; the
selector is the unit class of g1 (corrected by the unit of g1*g2 when
val(g1) is odd, which makes it stable under the swap
(g1, g2) -> (-g2, -g1)).  When -1 is a nonsquare the two merge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import (
    ExtReal, FieldParams, KElem, SquareClass,
    SQ_ONE, SQ_EPS, K_EPS, K_ONE, K_PI,
    ceil_index,
)


class TorusError(ValueError):
    pass


UNRAMIFIED = "unramified"
RAM_PI = "ram_pi"          # splitting field k(sqrt(pi))
RAM_EPS_PI = "ram_eps_pi"  # splitting field k(sqrt(eps*pi))


@dataclass(frozen=True)
class TorusDesc:
    gamma1: KElem
    gamma2: KElem
    y: Fraction
    split_type: str
    standard_index: int
    iota: SquareClass  # ramified class selector; SQ_ONE when merged or unramified

    @property
    def ramified(self) -> bool:
        return self.split_type != UNRAMIFIED

    def gamma_ratio_class(self) -> SquareClass:
        """Square class of g1*g2 (equivalently of g1^{-1} g2)."""
        return (self.gamma1 * self.gamma2).square_class()


@dataclass(frozen=True)
class TorusFiltrationIndex:
    a_exponent: int
    b_exponent: int


# Table rows: (index, split_type, (gamma1, gamma2), y, iota, needs -1 square)
_STANDARD = (
    (0, UNRAMIFIED, (K_ONE, K_EPS), Fraction(0), SQ_ONE, False),
    (1, UNRAMIFIED, (KElem(-1), KElem(1, True)), Fraction(1), SQ_ONE, False),
    (2, RAM_PI, (K_ONE, K_PI), Fraction(1, 2), SQ_ONE, False),
    (3, RAM_PI, (K_EPS, KElem(1, True)), Fraction(1, 2), SQ_EPS, True),
    (4, RAM_EPS_PI, (K_ONE, KElem(1, True)), Fraction(1, 2), SQ_ONE, False),
    (5, RAM_EPS_PI, (K_EPS, K_PI), Fraction(1, 2), SQ_EPS, True),
)


def standard_tori(fp: FieldParams) -> list[TorusDesc]:
    """The 6 (resp. 4) class representatives, depending on whether -1 is a square."""
    out = []
    for idx, st, (g1, g2), y, iota, needs in _STANDARD:
        if needs and not fp.minus_one_square:
            continue
        out.append(TorusDesc(g1, g2, y, st, idx, iota))
    return out


def _ramified_iota(g1: KElem, g2: KElem, fp: FieldParams) -> SquareClass:
    if not fp.minus_one_square:
        return SQ_ONE
    iota = g1.unit_class
    if g1.val % 2 == 1:
        iota = iota * (g1 * g2).unit_class
    return iota


def classify_torus(gamma1: KElem, gamma2: KElem, fp: FieldParams) -> TorusDesc:
    """Sort a pair (gamma1, gamma2) into its class of anisotropic tori.

    The pair must be in normal shape (see module docstring); pairs whose
    product is a square are rejected as isotropic.
    """
    if gamma1.is_zero or gamma2.is_zero:
        raise TorusError("torus pair entries must be nonzero")
    prod = (gamma1 * gamma2).square_class()
    if prod.is_trivial:
        raise TorusError("isotropic pair: gamma1*gamma2 is a square")
    v1 = gamma1.val
    v2 = gamma2.val
    if not prod.odd_val:
        # unramified: splitting field k(sqrt(eps))
        if (v1, v2) == (0, 0):
            y = Fraction(0)
        elif (v1, v2) in ((-1, 1), (1, -1)):
            y = Fraction(1)
        else:
            raise TorusError(
                "unnormalized unramified pair (val %s, val %s); use shape (0,0) or (-1,1)"
                % (v1, v2))
        idx = 0 if y == 0 else 1
        return TorusDesc(gamma1, gamma2, y, UNRAMIFIED, idx, SQ_ONE)
    if (v1, v2) not in ((0, 1), (1, 0)):
        raise TorusError(
            "unnormalized ramified pair (val %s, val %s); use shape (0,1)" % (v1, v2))
    split = RAM_PI if not prod.eps else RAM_EPS_PI
    iota = _ramified_iota(gamma1, gamma2, fp)
    base = 2 if split == RAM_PI else 4
    idx = base + (1 if iota == SQ_EPS else 0)
    return TorusDesc(gamma1, gamma2, Fraction(1, 2), split, idx, iota)


def same_torus_class(a: TorusDesc, b: TorusDesc, fp: FieldParams) -> bool:
    if a.split_type != b.split_type:
        return False
    if a.split_type == UNRAMIFIED:
        return a.y == b.y
    return a.iota == b.iota


def swap_pair(gamma1: KElem, gamma2: KElem, fp: FieldParams) -> tuple[KElem, KElem]:
    """Conjugation by w = [[0,1],[-1,0]] sends X_{g1,g2} to X_{-g2,-g1}."""
    return gamma2.neg(fp), gamma1.neg(fp)


def eta_partner_pair(T: TorusDesc) -> tuple[KElem, KElem]:
    """Conjugation by eta = diag(1, pi) (or its inverse, from the far
    vertex): swaps the two unramified classes y = 0 and y = 1."""
    if T.y == 0:
        return T.gamma1 * KElem(-1), T.gamma2 * K_PI
    return T.gamma1 * K_PI, T.gamma2 * KElem(-1)


def beta_partner_pair(T: TorusDesc) -> tuple[KElem, KElem]:
    """Conjugation by beta = diag(1, eps), at square-class resolution:
    X_{g1,g2} -> X_{eps*g1, eps*g2}."""
    return T.gamma1 * K_EPS, T.gamma2 * K_EPS


def torus_filtration(T: TorusDesc, u, lie: bool = False) -> TorusFiltrationIndex:
    """Congruence exponents of T_u: a in 1 + P^{ceil(u)}, b*gamma1 in P^{ceil(u-y)}.

    The group filtration needs u > 0; with lie=True the Lie algebra
    filtration t_u is queried instead, where any index is allowed (only
    the b-exponent is then meaningful).
    """
    if isinstance(u, (int, Fraction)):
        u = ExtReal.of(u)
    if not lie and not (u > ExtReal.of(0)):
        raise TorusError("group filtration needs a positive index")
    return TorusFiltrationIndex(ceil_index(u), ceil_index(u - T.y))
