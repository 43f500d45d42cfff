"""Irreducible admissible representations of G = SL2(k).

Four families, mirroring the classification:

  * principal series Ind_P^G chi, irreducible unless chi is one of the
    three sign characters sgn_tau;
  * the constituents pi_tau^{+-} of the reducible ones;
  * depth-zero supercuspidals compactly induced from a cuspidal of
    SL2(residue field) at one of the two vertices;
  * positive-depth supercuspidals attached to an anisotropic torus T, a
    building point y and a generic character phi of depth r, with
    Gamma = a * X_T and val(a * gamma1) = -(r + y).

Characters are carried by the finite data the formulas consume (depth,
scalar classes, central value) plus an opaque label.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .arith import FieldParams, KElem, SquareClass, sgn_tau_of_minus_one
from . import tori
from .tori import TorusDesc, classify_torus


class RepError(ValueError):
    pass


RESTRICTION_TRIVIAL = "trivial"
RESTRICTION_SGN = "sgn"
RESTRICTION_OTHER = "other"


@dataclass(frozen=True)
class CharKx:
    """A character chi of k^x at engine resolution.

    restriction is the type of chi on R^x modulo 1+P; lam is the scalar
    lambda_chi in R^x attached to a positive-depth chi (class data only,
    defined modulo P^{ceil(s+)} with s = depth/2); sgn_tau marks the
    three global sign characters.
    """

    depth: int
    restriction: str
    central: int
    label: str = ""
    lam: KElem | None = None
    sgn_tau: SquareClass | None = None

    def __post_init__(self):
        if self.depth < 0:
            raise RepError("character depth must be >= 0")
        if self.restriction not in (RESTRICTION_TRIVIAL, RESTRICTION_SGN, RESTRICTION_OTHER):
            raise RepError("unknown restriction type %r" % (self.restriction,))
        if self.central not in (1, -1):
            raise RepError("central value must be +-1")
        if self.depth > 0:
            if self.lam is None or self.lam.is_zero or self.lam.val != 0:
                raise RepError("positive-depth character needs a unit scalar lambda")
            if self.sgn_tau is not None:
                raise RepError("sign characters have depth zero")
        if self.sgn_tau is not None:
            if self.sgn_tau.is_trivial:
                raise RepError("sgn_tau must be a nontrivial square class")
            want = RESTRICTION_TRIVIAL if not self.sgn_tau.odd_val else RESTRICTION_SGN
            if self.restriction != want:
                raise RepError("sgn_tau restriction to units is %s" % want)


def sign_character(tau: SquareClass, fp: FieldParams) -> CharKx:
    """The character sgn_tau = (., tau), with its forced central value."""
    if tau.is_trivial:
        raise RepError("tau must be a nontrivial square class")
    restriction = RESTRICTION_TRIVIAL if not tau.odd_val else RESTRICTION_SGN
    return CharKx(depth=0, restriction=restriction,
                  central=sgn_tau_of_minus_one(tau, fp),
                  label="sgn_%s" % tau, sgn_tau=tau)


@dataclass(frozen=True)
class CharT:
    """A generic character phi of an anisotropic torus.

    a_coeff is the scalar with Gamma = a * X_T on the torus attached to
    the stored pair; genericity forces val(a * gamma1) = -(depth + y).
    conj records packet-partner twists (eta or beta superscripts).
    """

    torus: TorusDesc
    depth: Fraction
    a_coeff: KElem
    central: int
    label: str = ""
    conj: tuple = ()

    def __post_init__(self):
        if self.central not in (1, -1):
            raise RepError("central value must be +-1")

    def normalized_unit_class(self) -> SquareClass:
        """Square class of a*gamma1*pi^{r+y}, the unit scalar the
        branching formulas are written with."""
        shift = KElem(int(self.depth + self.torus.y))
        return (self.a_coeff * self.torus.gamma1 * shift).square_class()


GENERIC = "generic"
SPECIAL_PLUS = "special_plus"
SPECIAL_MINUS = "special_minus"


@dataclass(frozen=True)
class FiniteCuspidal:
    """A cuspidal representation of SL2(residue field): either a
    Deligne-Lusztig sigma(omega) with omega^2 != 1 (degree q-1), or one
    of the two halves sigma_0^{+-} of sigma(omega_0) (degree (q-1)/2)."""

    kind: str
    central: int
    omega: str = ""
    omega_squared_one: bool = False

    def __post_init__(self):
        if self.kind not in (GENERIC, SPECIAL_PLUS, SPECIAL_MINUS):
            raise RepError("unknown cuspidal kind %r" % (self.kind,))
        if self.central not in (1, -1):
            raise RepError("central value must be +-1")
        if self.kind == GENERIC and self.omega_squared_one:
            raise RepError("generic cuspidal needs omega^2 != 1")


def special_central(fp: FieldParams) -> int:
    """Central value of sigma_0^{+-}: omega_0(-1) = -1 exactly when -1 is a square."""
    return -1 if fp.minus_one_square else 1


def special_cuspidal(sign: int, fp: FieldParams) -> FiniteCuspidal:
    kind = SPECIAL_PLUS if sign > 0 else SPECIAL_MINUS
    return FiniteCuspidal(kind=kind, central=special_central(fp))


@dataclass(frozen=True)
class PrincipalSeries:
    chi: CharKx


@dataclass(frozen=True)
class ReduciblePSConstituent:
    tau: SquareClass
    sign: int
    central: int


@dataclass(frozen=True)
class DepthZeroSC:
    vertex: int
    sigma: FiniteCuspidal

    def __post_init__(self):
        if self.vertex not in (0, 1):
            raise RepError("vertex must be 0 or 1")


@dataclass(frozen=True)
class PositiveSC:
    phi: CharT
    rho_kind: str  # 'character', or 'weil' when T is unramified and the depth even


GRep = Union[PrincipalSeries, ReduciblePSConstituent, DepthZeroSC, PositiveSC]


def make_principal_series(chi: CharKx):
    """Ind_P^G chi: a single irreducible, or the ordered pair
    (pi_tau^+, pi_tau^-) when chi is the sign character sgn_tau."""
    if chi.sgn_tau is not None:
        tau = chi.sgn_tau
        return (ReduciblePSConstituent(tau, +1, chi.central),
                ReduciblePSConstituent(tau, -1, chi.central))
    return PrincipalSeries(chi)


def reducible_ps(tau: SquareClass, sign: int, fp: FieldParams) -> ReduciblePSConstituent:
    if sign not in (1, -1):
        raise RepError("constituent sign must be +-1")
    return ReduciblePSConstituent(tau, sign, sgn_tau_of_minus_one(tau, fp))


def make_depth_zero_sc(vertex: int, sigma: FiniteCuspidal) -> DepthZeroSC:
    return DepthZeroSC(vertex, sigma)


def make_positive_sc(T: TorusDesc, phi: CharT) -> PositiveSC:
    """Attach the compactly induced supercuspidal to a datum (T, y, phi)."""
    if phi.torus != T:
        raise RepError("character torus does not match")
    r = Fraction(phi.depth)
    if r <= 0:
        raise RepError("positive depth required")
    if T.split_type == tori.UNRAMIFIED:
        if r.denominator != 1:
            raise RepError("depth incompatible with ramification: unramified torus needs integer depth")
    else:
        if (r - Fraction(1, 2)).denominator != 1:
            raise RepError("depth incompatible with ramification: ramified torus needs half-odd depth")
    a = phi.a_coeff
    if a.is_zero or a.val + T.gamma1.val != -(r + T.y):
        raise RepError("non-generic character: val(a*gamma1) must be -(r+y)")
    if T.split_type == tori.UNRAMIFIED and r.numerator % 2 == 0:
        rho = "weil"
    else:
        rho = "character"
    return PositiveSC(phi, rho)


def depth(rep: GRep) -> Fraction:
    if isinstance(rep, PrincipalSeries):
        return Fraction(rep.chi.depth)
    if isinstance(rep, PositiveSC):
        return Fraction(rep.phi.depth)
    return Fraction(0)


def central_character(rep: GRep) -> int:
    if isinstance(rep, PrincipalSeries):
        return rep.chi.central
    if isinstance(rep, ReduciblePSConstituent):
        return rep.central
    if isinstance(rep, DepthZeroSC):
        return rep.sigma.central
    return rep.phi.central


def _flip_special(sigma: FiniteCuspidal) -> FiniteCuspidal:
    kind = SPECIAL_MINUS if sigma.kind == SPECIAL_PLUS else SPECIAL_PLUS
    return replace(sigma, kind=kind)


def l_packet(rep: GRep, fp: FieldParams) -> frozenset:
    """The full L-packet containing rep: the fiber of restriction from
    GL2(k), of size 1, 2 or 4 according to the six structural classes."""
    if isinstance(rep, PrincipalSeries):
        return frozenset({rep})
    if isinstance(rep, ReduciblePSConstituent):
        return frozenset({rep, replace(rep, sign=-rep.sign)})
    if isinstance(rep, DepthZeroSC):
        other_vertex = 1 - rep.vertex
        if rep.sigma.kind == GENERIC:
            return frozenset({rep, DepthZeroSC(other_vertex, rep.sigma)})
        members = set()
        for v in (0, 1):
            for s in (rep.sigma, _flip_special(rep.sigma)):
                members.add(DepthZeroSC(v, s))
        return frozenset(members)
    phi = rep.phi
    T = phi.torus
    if T.split_type == tori.UNRAMIFIED:
        g1, g2 = tori.eta_partner_pair(T)
        T2 = classify_torus(g1, g2, fp)
        conj = phi.conj[:-1] if phi.conj and phi.conj[-1] == "eta" else phi.conj + ("eta",)
    else:
        g1, g2 = tori.beta_partner_pair(T)
        T2 = classify_torus(g1, g2, fp)
        conj = phi.conj[:-1] if phi.conj and phi.conj[-1] == "beta" else phi.conj + ("beta",)
    phi2 = CharT(torus=T2, depth=phi.depth, a_coeff=phi.a_coeff,
                 central=phi.central, label=phi.label, conj=conj)
    partner = make_positive_sc(T2, phi2)
    return frozenset({rep, partner})
