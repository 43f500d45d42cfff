"""Irreducible representations of K = SL2(R) occurring in branching rules.

Depth-zero types are inflations from SL2(residue field): the trivial and
Steinberg representations, the two halves Xi^{+-} of the induced sign
character, irreducible finite principal series, and the cuspidals.

Positive-depth types are Shalika's ramified representations
S_d(phi, X_{u,v}) with val(v) > val(u) = 0: the induction of phi*Psi_X
from C(X) G_{[0,1/2],d/2} to K.  S_d is irreducible of depth d and
degree q^{d-1}(q^2-1)/2, and X only matters modulo the facet lattice,
so X_{u,v} reduces to X_{u,0} once val(v) > floor(d/2).

The leading terms of positive-depth principal series and of unramified
supercuspidals at the near vertex are not of Shalika type; they are kept
as opaque tags carrying their subgroup-index degree.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .arith import FieldParams, KElem, K_ZERO


class KTypeError(ValueError):
    pass


EQUIVALENT = "equivalent"
INEQUIVALENT = "inequivalent"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class XParam:
    """Antidiagonal parameter X_{u,v} with val(v) > val(u) = 0 (v = 0 allowed)."""

    u: KElem
    v: KElem = K_ZERO

    def __post_init__(self):
        if self.u.is_zero or self.u.val != 0:
            raise KTypeError("invalid Shalika parameter: val(u) must be 0")
        if not self.v.is_zero and self.v.val <= 0:
            raise KTypeError("invalid Shalika parameter: val(v) must be positive")

    def __str__(self):
        return "X_{%s,%s}" % (self.u, self.v)


@dataclass(frozen=True)
class PhiLabel:
    """Engine-resolution character of the centralizer C(X).

    kind 'central' means the character factors through {+-1} and is the
    central value; 'chi_gamma' is a split-torus character chi(a + b*gamma);
    'torus' is a conjugated supercuspidal character phi^{(conj)}.
    Labels compare structurally.
    """

    kind: str
    central: int
    name: str = ""
    gamma: KElem | None = None
    conj: tuple = ()

    def __post_init__(self):
        if self.kind not in ("central", "chi_gamma", "torus"):
            raise KTypeError("unknown phi label kind %r" % (self.kind,))
        if self.central not in (1, -1):
            raise KTypeError("central value must be +-1")

    def __str__(self):
        if self.kind == "central":
            return "theta(%+d)" % self.central
        base = self.name or self.kind
        if self.kind == "chi_gamma" and self.gamma is not None:
            base = "%s_[%s]" % (base, self.gamma)
        if self.conj:
            base += "^{%s}" % ",".join(str(c) for c in self.conj)
        return base


def central_label(central: int) -> PhiLabel:
    return PhiLabel(kind="central", central=central)


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class Steinberg:
    pass


@dataclass(frozen=True)
class XiSgn:
    sign: int


@dataclass(frozen=True)
class FinitePS:
    label: str
    central: int


@dataclass(frozen=True)
class CuspidalType:
    kind: str    # grep.GENERIC / SPECIAL_PLUS / SPECIAL_MINUS
    central: int
    omega: str = ""


@dataclass(frozen=True)
class Shalika:
    d: int
    phi: PhiLabel
    x: XParam

    def __post_init__(self):
        if self.d < 1:
            raise KTypeError("Shalika depth must be a positive integer")


@dataclass(frozen=True)
class PSLeading:
    """K_{r+1}-fixed part of a depth-r principal series, r > 0; degree (q+1)q^r."""
    r: int
    label: str
    central: int


@dataclass(frozen=True)
class SCLeading:
    """Leading component Ind_{T G_{0,r/2}}^K rho of an unramified
    supercuspidal at the near vertex; degree (q-1)q^r."""
    r: int
    label: str
    central: int
    rho_kind: str


KType = Union[Trivial, Steinberg, XiSgn, FinitePS, CuspidalType, Shalika,
              PSLeading, SCLeading]


def make_shalika(d: int, phi: PhiLabel, x: XParam, fp: FieldParams) -> Shalika:
    if not isinstance(d, int) or d < 1:
        raise KTypeError("Shalika depth must be a positive integer")
    return Shalika(d, phi, x)


def depth_of(t: KType) -> Fraction:
    if isinstance(t, Shalika):
        return Fraction(t.d)
    if isinstance(t, (PSLeading, SCLeading)):
        return Fraction(t.r)
    return Fraction(0)


def degree(t: KType, fp: FieldParams) -> int:
    q = fp.q
    if isinstance(t, Trivial):
        return 1
    if isinstance(t, Steinberg):
        return q
    if isinstance(t, XiSgn):
        return (q + 1) // 2
    if isinstance(t, FinitePS):
        return q + 1
    if isinstance(t, CuspidalType):
        return q - 1 if t.kind == "generic" else (q - 1) // 2
    if isinstance(t, Shalika):
        return q ** (t.d - 1) * (q * q - 1) // 2
    if isinstance(t, PSLeading):
        return (q + 1) * q ** t.r
    if isinstance(t, SCLeading):
        return (q - 1) * q ** t.r
    raise KTypeError("unknown K-type %r" % (t,))


def central_of(t: KType, fp: FieldParams) -> int:
    if isinstance(t, (Trivial, Steinberg)):
        return 1
    if isinstance(t, XiSgn):
        # central value of the sign character of the residue field
        return 1 if fp.minus_one_square else -1
    if isinstance(t, Shalika):
        return t.phi.central
    return t.central


def reduction_threshold(d: int) -> int:
    """X_{u,v} = X_{u,0} modulo the facet lattice once val(v) >= floor(d/2)+1."""
    return d // 2 + 1


def reduce_x(x: XParam, d: int) -> XParam:
    if not x.v.is_zero and x.v.val >= reduction_threshold(d):
        return replace(x, v=K_ZERO)
    return x


def _shalika_compare(a: Shalika, b: Shalika, fp: FieldParams) -> str:
    xa = reduce_x(a.x, a.d)
    xb = reduce_x(b.x, b.d)
    if xa.v.is_zero != xb.v.is_zero:
        # one parameter is nilpotent modulo the lattice, the other is not
        return INEQUIVALENT
    if xa.v.is_zero:
        if xa.u.unit_class != xb.u.unit_class:
            return INEQUIVALENT
        if a.phi.kind == "central" and b.phi.kind == "central":
            return EQUIVALENT
        if a.phi == b.phi:
            return EQUIVALENT
        return UNKNOWN
    # both genuinely anisotropic mod the lattice: the splitting class of
    # C(X) = T_{u,v} is a conjugation invariant
    if (xa.u * xa.v).square_class() != (xb.u * xb.v).square_class():
        return INEQUIVALENT
    if xa == xb and a.phi == b.phi:
        return EQUIVALENT
    return UNKNOWN


def same_class(a: KType, b: KType, fp: FieldParams) -> str:
    """Decide equivalence of two K-types on engine-visible data.

    'unknown' is returned for X-conjugacy questions the symbolic layer
    does not resolve (they are the finite oracle's job at small p).
    """
    if depth_of(a) != depth_of(b) or degree(a, fp) != degree(b, fp):
        return INEQUIVALENT
    if central_of(a, fp) != central_of(b, fp):
        return INEQUIVALENT
    if type(a) is not type(b):
        return INEQUIVALENT
    if isinstance(a, (Trivial, Steinberg)):
        return EQUIVALENT
    if isinstance(a, XiSgn):
        return EQUIVALENT if a.sign == b.sign else INEQUIVALENT
    if isinstance(a, FinitePS):
        return EQUIVALENT if a.label == b.label else UNKNOWN
    if isinstance(a, CuspidalType):
        if a.kind != b.kind:
            return INEQUIVALENT
        if a.kind != "generic":
            return EQUIVALENT
        return EQUIVALENT if a.omega == b.omega else UNKNOWN
    if isinstance(a, Shalika):
        return _shalika_compare(a, b, fp)
    # opaque leading tags
    return EQUIVALENT if a == b else UNKNOWN
