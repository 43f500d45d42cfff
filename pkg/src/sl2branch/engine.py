"""Branching of irreducible SL2(k)-representations over K = SL2(R).

branch() emits the explicit decomposition series, truncated at a caller
depth bound, for every representation class:

  * depth-zero supercuspidals: the inducing cuspidal (near vertex only)
    plus Shalika components S_d(theta, X_{u,0}), one per even or odd
    depth for the special halves sigma_0^{+-}, a {1, eps}-pair per even
    or odd depth for the Deligne-Lusztig cuspidals;
  * depth-zero principal series: the level-one part (a finite principal
    series, 1+St, or Xi^+ + Xi^-) plus a {1, eps}-pair at every depth;
  * the reducible constituents pi_tau^{+-}, which split that series in
    three tau-dependent ways;
  * positive-depth principal series: a leading term of degree (q+1)q^r
    plus pairs S_{r+t}(chi_{u0}, X_{1,u0^2}), S_{r+t}(chi_{u1},
    X_{eps,eps*u1^2}) with u0 = lambda*pi^t, u1 = eps^{-1}u0;
  * unramified supercuspidals: a leading term of degree (q-1)q^r at the
    near vertex, then pairs at every other depth;
  * ramified supercuspidals: a single component at each integral depth
    above r.  The degenerate t = 0 term of the w-indexed family (whose
    X-parameter would be invalid) is never emitted, and the standalone
    leading term coincides with the t = 0 term of the plain family.

Ramified emissions are written in the gamma1-normalized presentation
Gamma = (a*gamma1) X_{1, gamma1^{-1}gamma2}, which is the form stable
under conjugating the datum across an L-packet; for the representative
with gamma1 = 1 it agrees verbatim with the unnormalized form.

Components of depth d > 2r are the tail end: their X reduces to X_{1,0}
or X_{eps,0} and their character collapses to the central value, with
the class pattern determined by the source class and the splitting field
of its torus (constant z for tori split over k(sqrt(-pi)), parity-
alternating z(d) over k(sqrt(-eps*pi))).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .arith import (
    FieldParams, KElem, K_ONE, K_EPS, SquareClass, SQ_ONE, SQ_EPS,
    minus_one_class,
)
from . import grep, ktype, tori
from .grep import (
    GRep, PrincipalSeries, ReduciblePSConstituent, DepthZeroSC, PositiveSC,
    depth as rep_depth, central_character, special_central,
)
from .ktype import (
    KType, PhiLabel, XParam, Shalika, Trivial, Steinberg, XiSgn, FinitePS,
    CuspidalType, PSLeading, SCLeading, central_label, make_shalika,
    reduce_x, reduction_threshold, degree as ktype_degree, depth_of,
)


class EngineError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesEntry:
    kt: KType
    depth: Fraction
    mult: int = 1


@dataclass(frozen=True)
class BranchingSeries:
    source: GRep
    max_depth: Fraction
    entries: tuple

    def per_depth(self) -> dict:
        out: dict = {}
        for e in self.entries:
            out.setdefault(e.depth, []).append(e)
        return out

    def min_depth(self) -> Fraction:
        if not self.entries:
            raise EngineError("empty series")
        return min(e.depth for e in self.entries)

    def restricted(self, bound: Fraction) -> "BranchingSeries":
        return BranchingSeries(self.source, Fraction(bound),
                               tuple(e for e in self.entries if e.depth <= bound))

    def total_degree(self, fp: FieldParams, below=None) -> int:
        return sum(e.mult * ktype_degree(e.kt, fp) for e in self.entries
                   if below is None or e.depth < below)


def _entry(kt: KType) -> SeriesEntry:
    return SeriesEntry(kt, depth_of(kt))


def _u_elem(cls: SquareClass) -> KElem:
    if cls.odd_val:
        raise EngineError("X-parameter u must be a unit class")
    return K_EPS if cls.eps else K_ONE


def _pair_x():
    return XParam(K_ONE), XParam(K_EPS)


def _special_u(sign: int, fp: FieldParams) -> SquareClass:
    """u_+ is the class of -1, u_- the class of -eps."""
    m1 = minus_one_class(fp)
    return m1 if sign > 0 else m1 * SQ_EPS


def _level_one_part(chi: grep.CharKx, fp: FieldParams) -> list:
    if chi.restriction == grep.RESTRICTION_TRIVIAL:
        if chi.central != 1:
            raise EngineError("a character trivial on units has central value +1")
        return [Trivial(), Steinberg()]
    if chi.restriction == grep.RESTRICTION_SGN:
        want = 1 if fp.minus_one_square else -1
        if chi.central != want:
            raise EngineError("central value must equal sgn(-1) = %+d" % want)
        return [XiSgn(+1), XiSgn(-1)]
    return [FinitePS(chi.label, chi.central)]


def _minus_pi_class(fp: FieldParams) -> SquareClass:
    return minus_one_class(fp) * SquareClass(True, False)


def _diamond(fp: FieldParams) -> int:
    """Xi-sign in the plus constituent: + unless -1 is a square."""
    return -1 if fp.minus_one_square else 1


def branch(rep: GRep, D, fp: FieldParams) -> BranchingSeries:
    """Decomposition of Res_K rep as a formal series, truncated at depth D."""
    D = Fraction(D)
    r = rep_depth(rep)
    if D < r:
        raise EngineError("truncation below depth")
    entries: list[SeriesEntry] = []

    def emit(kt: KType):
        e = _entry(kt)
        if e.depth <= D:
            entries.append(e)

    if isinstance(rep, DepthZeroSC):
        _branch_depth_zero_sc(rep, D, fp, emit)
    elif isinstance(rep, PrincipalSeries):
        if rep.chi.depth == 0:
            _branch_ps_depth_zero(rep.chi, D, fp, emit)
        else:
            _branch_ps_positive(rep.chi, D, fp, emit)
    elif isinstance(rep, ReduciblePSConstituent):
        _branch_reducible(rep, D, fp, emit)
    elif isinstance(rep, PositiveSC):
        _branch_positive_sc(rep, D, fp, emit)
    else:
        raise EngineError("unknown representation %r" % (rep,))

    entries.sort(key=lambda e: e.depth)
    return BranchingSeries(rep, D, tuple(entries))


def _branch_depth_zero_sc(rep: DepthZeroSC, D, fp, emit):
    sigma = rep.sigma
    theta = sigma.central
    if sigma.kind != grep.GENERIC and theta != special_central(fp):
        raise EngineError("sigma_0^{+-} has central value %+d when q = %d"
                          % (special_central(fp), fp.q))
    if rep.vertex == 0:
        if sigma.kind == grep.GENERIC:
            emit(CuspidalType(sigma.kind, theta, sigma.omega))
        else:
            emit(CuspidalType(sigma.kind, theta))
    lab = central_label(theta)
    first = 2 if rep.vertex == 0 else 1
    d = first
    while d <= D:
        if sigma.kind == grep.GENERIC:
            x1, xe = _pair_x()
            emit(make_shalika(d, lab, x1, fp))
            emit(make_shalika(d, lab, xe, fp))
        else:
            u = _special_u(+1 if sigma.kind == grep.SPECIAL_PLUS else -1, fp)
            emit(make_shalika(d, lab, XParam(_u_elem(u)), fp))
        d += 2


def _branch_ps_depth_zero(chi, D, fp, emit):
    for part in _level_one_part(chi, fp):
        emit(part)
    # chi restricted to C(X_{u,0}) factors through the center, so the
    # Shalika labels are already the central collapse
    lab = central_label(chi.central)
    t = 1
    while t <= D:
        x1, xe = _pair_x()
        emit(make_shalika(t, lab, x1, fp))
        emit(make_shalika(t, lab, xe, fp))
        t += 1


def _branch_reducible(rep: ReduciblePSConstituent, D, fp, emit):
    tau = rep.tau
    if tau.is_trivial:
        raise EngineError("tau must be a nontrivial square class")
    theta = rep.central
    lab = central_label(theta)
    diamond = _diamond(fp)
    x1, xe = _pair_x()
    if tau == SQ_EPS:
        emit(Trivial() if rep.sign > 0 else Steinberg())
        d = 2 if rep.sign > 0 else 1
        while d <= D:
            emit(make_shalika(d, lab, x1, fp))
            emit(make_shalika(d, lab, xe, fp))
            d += 2
        return
    emit(XiSgn(diamond if rep.sign > 0 else -diamond))
    if tau == _minus_pi_class(fp):
        # plus constituent holds the X_{1,0} family at every depth
        x = x1 if rep.sign > 0 else xe
        for n in range(1, math.floor(D) + 1):
            emit(make_shalika(n, lab, x, fp))
        return
    # tau in the class of -eps*pi: classes alternate with the parity
    x_odd, x_even = (xe, x1) if rep.sign > 0 else (x1, xe)
    for n in range(1, math.floor(D) + 1):
        emit(make_shalika(n, lab, x_odd if n % 2 else x_even, fp))


def _branch_ps_positive(chi, D, fp, emit):
    r = chi.depth
    emit(PSLeading(r, chi.label, chi.central))
    lam = chi.lam
    t = 1
    while r + t <= D:
        u0 = lam * KElem(t)
        u1 = K_EPS * u0  # eps^{-1} u0, same square class as eps*u0
        lab0 = PhiLabel(kind="chi_gamma", central=chi.central, name=chi.label, gamma=u0)
        lab1 = PhiLabel(kind="chi_gamma", central=chi.central, name=chi.label, gamma=u1)
        emit(make_shalika(r + t, lab0, XParam(K_ONE, u0 * u0), fp))
        emit(make_shalika(r + t, lab1, XParam(K_EPS, K_EPS * u1 * u1), fp))
        t += 1


def _torus_label(phi, conj: tuple) -> PhiLabel:
    return PhiLabel(kind="torus", central=phi.central, name=phi.label or "phi",
                    conj=phi.conj + conj)


def _branch_positive_sc(rep: PositiveSC, D, fp, emit):
    phi = rep.phi
    T = phi.torus
    r = phi.depth
    A = phi.normalized_unit_class()
    if A.odd_val:
        raise EngineError("normalized scalar must be a unit class")
    uA = _u_elem(A)
    uAe = _u_elem(A * SQ_EPS)
    if T.split_type == tori.UNRAMIFIED:
        ri = int(r)
        if T.y == 0:
            emit(SCLeading(ri, phi.label or "phi", phi.central, rep.rho_kind))
            t = 1
            while r + 2 * t <= D:
                emit(make_shalika(ri + 2 * t, _torus_label(phi, ("alpha^%d" % t,)),
                                  XParam(uA, uAe * KElem(4 * t)), fp))
                emit(make_shalika(ri + 2 * t, _torus_label(phi, ("alpha^%d" % t, "E")),
                                  XParam(uAe, uA * KElem(4 * t)), fp))
                t += 1
        else:
            t = 0
            while r + 2 * t + 1 <= D:
                emit(make_shalika(ri + 2 * t + 1, _torus_label(phi, ("alpha^%d" % t,)),
                                  XParam(uA, uAe * KElem(4 * t + 2)), fp))
                emit(make_shalika(ri + 2 * t + 1, _torus_label(phi, ("alpha^%d" % t, "E^eta")),
                                  XParam(uAe, uA * KElem(4 * t + 2)), fp))
                t += 1
        return
    # ramified torus: one component per integral depth above r
    g = T.gamma1.inv() * T.gamma2  # gamma1-normalized ratio, valuation 1
    m = 0
    while r + Fraction(1, 2) + m <= D:
        d = int(r + Fraction(1, 2)) + m
        if m % 2 == 0:
            t = m // 2
            emit(make_shalika(d, _torus_label(phi, ("alpha^%d" % t,)),
                              XParam(uA, uA * g * KElem(4 * t)), fp))
        else:
            t = (m + 1) // 2
            u = (uA * g * KElem(-1)).neg(fp)
            v = (uA * KElem(4 * t - 1)).neg(fp)
            emit(make_shalika(d, _torus_label(phi, ("alpha^%d" % t, "w")),
                              XParam(u, v), fp))
        m += 1


def leading_term(s: BranchingSeries) -> list:
    """All components of minimal depth."""
    if not s.entries:
        raise EngineError("empty series has no leading term")
    m = s.min_depth()
    return [e.kt for e in s.entries if e.depth == m]


# ---------------------------------------------------------------------------
# tail ends
# ---------------------------------------------------------------------------

PATTERN_BOTH_EACH = "both_classes_each_depth"
PATTERN_BOTH_ALT = "both_classes_alternate_depth"
PATTERN_SINGLE_EACH = "single_class_each_depth"
PATTERN_SINGLE_PARITY = "single_class_parity_alternating"
PATTERN_SINGLE_ALT = "single_class_alternate_depth"


@dataclass(frozen=True)
class TailDescriptor:
    central: int
    pattern: str
    start_depth: Fraction
    parity: int | None = None       # depth parity populated, for alternate patterns
    z: SquareClass | None = None    # the single class, where constant
    z_even: SquareClass | None = None
    z_odd: SquareClass | None = None

    def matches(self, other: "TailDescriptor") -> bool:
        """Agreement of everything except the starting depth."""
        return (self.central == other.central and self.pattern == other.pattern
                and self.parity == other.parity and self.z == other.z
                and self.z_even == other.z_even and self.z_odd == other.z_odd)


def _splits_over_minus_pi(T: tori.TorusDesc, fp: FieldParams) -> bool:
    if fp.minus_one_square:
        return T.split_type == tori.RAM_PI
    return T.split_type == tori.RAM_EPS_PI


def _first_tail_depth(two_r: Fraction, parity: int | None) -> Fraction:
    d = Fraction(math.floor(two_r) + 1)
    if parity is not None and int(d) % 2 != parity:
        d += 1
    return d


def tail_descriptor(rep: GRep, fp: FieldParams) -> TailDescriptor:
    """Predicted pattern of the components of depth > 2r."""
    theta = central_character(rep)
    r = rep_depth(rep)
    two_r = 2 * r
    if isinstance(rep, PrincipalSeries):
        return TailDescriptor(theta, PATTERN_BOTH_EACH, _first_tail_depth(two_r, None))
    if isinstance(rep, ReduciblePSConstituent):
        tau = rep.tau
        if tau == SQ_EPS:
            par = 0 if rep.sign > 0 else 1
            return TailDescriptor(theta, PATTERN_BOTH_ALT,
                                  _first_tail_depth(two_r, par), parity=par)
        if tau == _minus_pi_class(fp):
            z = SQ_ONE if rep.sign > 0 else SQ_EPS
            return TailDescriptor(theta, PATTERN_SINGLE_EACH, Fraction(1), z=z)
        z_odd = SQ_EPS if rep.sign > 0 else SQ_ONE
        return TailDescriptor(theta, PATTERN_SINGLE_PARITY, Fraction(1),
                              z_even=z_odd * SQ_EPS, z_odd=z_odd)
    if isinstance(rep, DepthZeroSC):
        par = 0 if rep.vertex == 0 else 1
        start = _first_tail_depth(two_r, par)
        if rep.sigma.kind == grep.GENERIC:
            return TailDescriptor(theta, PATTERN_BOTH_ALT, start, parity=par)
        z = _special_u(+1 if rep.sigma.kind == grep.SPECIAL_PLUS else -1, fp)
        return TailDescriptor(theta, PATTERN_SINGLE_ALT, start, parity=par, z=z)
    phi = rep.phi
    T = phi.torus
    if T.split_type == tori.UNRAMIFIED:
        par = int(r + T.y) % 2
        return TailDescriptor(theta, PATTERN_BOTH_ALT,
                              _first_tail_depth(two_r, par), parity=par)
    A = phi.normalized_unit_class()
    if _splits_over_minus_pi(T, fp):
        return TailDescriptor(theta, PATTERN_SINGLE_EACH,
                              _first_tail_depth(two_r, None), z=A)
    # split over k(sqrt(-eps*pi)): z alternates with the parity of the
    # depth, anchored at z(r + 1/2) = A
    p0 = int(r + Fraction(1, 2)) % 2
    z_at_p0, z_other = A, A * SQ_EPS
    if p0 == 0:
        z_even, z_odd = z_at_p0, z_other
    else:
        z_even, z_odd = z_other, z_at_p0
    return TailDescriptor(theta, PATTERN_SINGLE_PARITY,
                          _first_tail_depth(two_r, None), z_even=z_even, z_odd=z_odd)


def _normalize_tail_entry(e: SeriesEntry, theta: int, fp: FieldParams) -> SeriesEntry:
    kt = e.kt
    if not isinstance(kt, Shalika):
        raise EngineError("non-Shalika component of depth > 2r: %r" % (kt,))
    x = reduce_x(kt.x, kt.d)
    if not x.v.is_zero:
        raise EngineError(
            "tail X-parameter fails to reduce: val(v)=%s < %d at depth %d"
            % (kt.x.v.val, reduction_threshold(kt.d), kt.d))
    if kt.phi.central != theta:
        raise EngineError("tail character label disagrees with the central character")
    u = _u_elem(x.u.unit_class)
    return SeriesEntry(Shalika(kt.d, central_label(theta), XParam(u)), e.depth, e.mult)


def _check_tail_against_descriptor(entries, desc: TailDescriptor):
    by_depth: dict = {}
    for e in entries:
        by_depth.setdefault(int(e.depth), []).append(e.kt.x.u.unit_class)
    for d, classes in sorted(by_depth.items()):
        if desc.pattern in (PATTERN_BOTH_EACH, PATTERN_BOTH_ALT):
            ok = sorted(str(c) for c in classes) == ["1", "eps"]
        elif desc.pattern == PATTERN_SINGLE_EACH:
            ok = classes == [desc.z]
        elif desc.pattern == PATTERN_SINGLE_PARITY:
            ok = classes == [desc.z_even if d % 2 == 0 else desc.z_odd]
        else:
            ok = len(classes) == 1 and classes[0] == desc.z
        if desc.pattern in (PATTERN_BOTH_ALT, PATTERN_SINGLE_ALT):
            ok = ok and d % 2 == desc.parity
        if not ok:
            raise EngineError("tail at depth %d does not match pattern %s"
                              % (d, desc.pattern))


def tail_end(rep: GRep, D, fp: FieldParams):
    """Normalized components of depth > 2r, with their pattern descriptor."""
    D = Fraction(D)
    r = rep_depth(rep)
    if D <= 2 * r:
        raise EngineError("need a truncation bound above twice the depth")
    s = branch(rep, D, fp)
    theta = central_character(rep)
    tail = [
        _normalize_tail_entry(e, theta, fp)
        for e in s.entries if e.depth > 2 * r
    ]
    desc = tail_descriptor(rep, fp)
    _check_tail_against_descriptor(tail, desc)
    return desc, BranchingSeries(rep, D, tuple(tail))


def tails_match(a: GRep, b: GRep, fp: FieldParams):
    """Whether the tail ends of two positive-depth representations agree.

    On a match the report records the shared attributes: the common
    central character, and that the sources are either both principal
    series or supercuspidals for tori with a common splitting field.
    """
    if rep_depth(a) <= 0 or rep_depth(b) <= 0:
        raise EngineError("tail comparison needs positive depth")
    da = tail_descriptor(a, fp)
    db = tail_descriptor(b, fp)
    ok = da.matches(db)
    report = {"match": ok, "central": da.central if ok else None}
    if ok:
        if isinstance(a, PrincipalSeries) and isinstance(b, PrincipalSeries):
            report["shared"] = "both principal series"
        elif isinstance(a, PositiveSC) and isinstance(b, PositiveSC):
            report["shared"] = ("supercuspidals for tori of splitting type %s"
                                % a.phi.torus.split_type)
        else:
            report["shared"] = "matching tail patterns"
    return ok, report


def _torus_marker(rep: GRep, fp: FieldParams):
    if isinstance(rep, PrincipalSeries):
        return ("split",)
    if isinstance(rep, PositiveSC):
        T = rep.phi.torus
        if T.split_type == tori.UNRAMIFIED:
            return (T.split_type, T.y)
        return (T.split_type, str(T.iota))
    return None


def intertwine_rule(a: GRep, b: GRep, fp: FieldParams) -> str | None:
    """Which of the four sufficient conditions applies, if any.

    Hypotheses: positive depth, same torus class, same central character.
    Returns None when the hypotheses fail (caller falls back to tails).
    """
    if rep_depth(a) <= 0 or rep_depth(b) <= 0:
        raise EngineError("tail comparison needs positive depth")
    if central_character(a) != central_character(b):
        return None
    ta, tb = _torus_marker(a, fp), _torus_marker(b, fp)
    if ta is None or tb is None or ta != tb:
        return None
    if ta == ("split",):
        return "a"
    T = a.phi.torus
    if T.split_type == tori.UNRAMIFIED:
        if int(rep_depth(a)) % 2 == int(rep_depth(b)) % 2:
            return "b"
        return None
    if _splits_over_minus_pi(T, fp):
        if a.phi.normalized_unit_class() == b.phi.normalized_unit_class():
            return "c"
        return None
    da, db = tail_descriptor(a, fp), tail_descriptor(b, fp)
    if (da.z_even, da.z_odd) == (db.z_even, db.z_odd):
        return "d"
    return None


def k_intertwines(a: GRep, b: GRep, fp: FieldParams) -> bool:
    """Sufficient criterion for Res_K a and Res_K b to intertwine.

    Under the hypotheses (same torus class, same central character) this
    applies the four explicit rules; otherwise it falls back to
    comparing tail descriptors.  One-sided: False is not a proof of
    non-intertwining.
    """
    rule = intertwine_rule(a, b, fp)
    if rule is not None:
        return True
    ok, _ = tails_match(a, b, fp)
    return ok


# ---------------------------------------------------------------------------
# profiles and identities
# ---------------------------------------------------------------------------

CLASS_PS = "principal_series"
CLASS_UNRAMIFIED = "unramified_sc"
CLASS_RAMIFIED = "ramified_sc"


def classify_from_profile(s: BranchingSeries) -> str:
    """Read off the class of a positive-depth representation from the
    number of components per depth above r: two per depth for principal
    series, two every other depth for unramified supercuspidals, one per
    depth for ramified ones."""
    r = rep_depth(s.source)
    if r <= 0:
        raise EngineError("profile undecidable: needs positive depth")
    if s.max_depth < r + 4:
        raise EngineError("profile undecidable: need max depth >= depth + 4")
    counts: dict[int, int] = {}
    for e in s.entries:
        if e.depth > r:
            if e.depth.denominator != 1:
                raise EngineError("unexpected non-integral component depth")
            counts[int(e.depth)] = counts.get(int(e.depth), 0) + e.mult
    window = list(range(math.floor(r) + 1, math.floor(s.max_depth) + 1))
    vals = [counts.get(d, 0) for d in window]
    if all(v == 1 for v in vals):
        got = CLASS_RAMIFIED
    elif all(v == 2 for v in vals):
        got = CLASS_PS
    elif all(v == (2 if d % 2 == window[0] % 2 else 0) for d, v in zip(window, vals)) \
            and vals[0] == 2:
        got = CLASS_UNRAMIFIED
    elif all(v == (2 if d % 2 != window[0] % 2 else 0) for d, v in zip(window, vals)):
        got = CLASS_UNRAMIFIED
    else:
        raise EngineError("profile undecidable: counts %r" % (vals,))
    if isinstance(s.source, PrincipalSeries):
        expect = CLASS_PS
    elif isinstance(s.source, PositiveSC):
        expect = (CLASS_UNRAMIFIED
                  if s.source.phi.torus.split_type == tori.UNRAMIFIED
                  else CLASS_RAMIFIED)
    else:
        expect = None
    if expect is not None and got != expect:
        raise EngineError("profile %s disagrees with the source class %s" % (got, expect))
    return got


@dataclass(frozen=True)
class DimensionReport:
    ok: bool
    total: int
    expected: int
    level: int
    leading_ok: bool | None = None
    leading_degree: int | None = None


def dimension_identity(s, n: int, fp: FieldParams) -> DimensionReport:
    """Degrees of the components of depth < n of a principal series sum
    to q^{n-1}(q+1), the index of the level-n Borel subgroup; a positive
    depth-r series moreover has leading degree (q+1)q^r."""
    series = list(s) if isinstance(s, (list, tuple)) else [s]
    sources = [x.source for x in series]
    if len(series) == 1 and isinstance(sources[0], PrincipalSeries):
        r = sources[0].chi.depth
    elif (len(series) == 2
          and all(isinstance(x, ReduciblePSConstituent) for x in sources)
          and sources[0].tau == sources[1].tau
          and {sources[0].sign, sources[1].sign} == {1, -1}):
        r = 0
    else:
        raise EngineError("dimension identity needs a principal series "
                          "or a summed reducible pair")
    if n <= r:
        raise EngineError("level must exceed the depth")
    if any(x.max_depth < n - 1 for x in series):
        raise EngineError("series truncated below level %d" % n)
    q = fp.q
    total = sum(x.total_degree(fp, below=n) for x in series)
    expected = q ** (n - 1) * (q + 1)
    leading_ok = None
    leading_degree = None
    if r > 0:
        lead = leading_term(series[0])
        leading_degree = sum(ktype_degree(t, fp) for t in lead)
        leading_ok = leading_degree == (q + 1) * q ** r
    ok = total == expected and leading_ok is not False
    return DimensionReport(ok, total, expected, n, leading_ok, leading_degree)


@dataclass(frozen=True)
class PacketReport:
    ok: bool
    packet_depth: Fraction
    counts: dict
    leading_counts: dict
    failures: tuple


def packet_profile(packet, D, fp: FieldParams) -> PacketReport:
    """Sum of the branching series across an L-packet: exactly two
    components at every depth strictly above the packet depth."""
    D = Fraction(D)
    members = list(packet)
    if not members:
        raise EngineError("empty packet")
    depths = {rep_depth(m) for m in members}
    if len(depths) != 1:
        raise EngineError("packet members have unequal depths")
    pdepth = depths.pop()
    counts: dict = {}
    for m in members:
        for e in branch(m, D, fp).entries:
            counts[e.depth] = counts.get(e.depth, 0) + e.mult
    failures = []
    for d in range(math.floor(pdepth) + 1, math.floor(D) + 1):
        got = counts.get(Fraction(d), 0)
        if Fraction(d) > pdepth and got != 2:
            failures.append((d, got))
    leading = {k: v for k, v in counts.items() if k <= pdepth}
    return PacketReport(not failures, pdepth, dict(sorted(counts.items())),
                        leading, tuple(failures))
