"""Branching series, tail ends, intertwining, profiles and identities."""

from fractions import Fraction

import pytest

from sl2branch.arith import (
    FieldParams, KElem, K_ONE, K_EPS, K_PI,
    SQ_ONE, SQ_EPS, SQ_PI, SQ_EPS_PI, minus_one_class,
)
from sl2branch import engine, grep, ktype
from sl2branch.engine import (
    EngineError, branch, leading_term, tail_end, tails_match, k_intertwines,
    intertwine_rule, classify_from_profile, dimension_identity, packet_profile,
    PATTERN_BOTH_EACH, PATTERN_BOTH_ALT, PATTERN_SINGLE_EACH,
    PATTERN_SINGLE_PARITY,
    CLASS_PS, CLASS_UNRAMIFIED, CLASS_RAMIFIED,
)
from sl2branch.grep import (
    CharKx, CharT, FiniteCuspidal, make_principal_series, make_positive_sc,
    make_depth_zero_sc, sign_character, special_cuspidal, l_packet,
)
from sl2branch.ktype import Shalika, Trivial, Steinberg, XiSgn, FinitePS, degree
from sl2branch.tori import classify_torus

FP3 = FieldParams(3)
FP5 = FieldParams(5)
FP7 = FieldParams(7)


def chi_other(r=0, central=1, label="chi", lam_eps=False):
    lam = KElem(0, lam_eps) if r > 0 else None
    return CharKx(depth=r, restriction="other", central=central, label=label, lam=lam)


def unram_sc(fp, r=1, a_eps=False, central=1, y=0, label="phi"):
    if y == 0:
        T = classify_torus(K_ONE, K_EPS, fp)
    else:
        T = classify_torus(KElem(-1), KElem(1, True), fp)
    a = KElem(-r, a_eps)
    phi = CharT(torus=T, depth=Fraction(r), a_coeff=a, central=central, label=label)
    return make_positive_sc(T, phi)


def ram_sc(fp, g1=K_ONE, g2=K_PI, r=Fraction(1, 2), a_eps=False, central=1, label="phi"):
    T = classify_torus(g1, g2, fp)
    a = KElem(-int(r + Fraction(1, 2)) - g1.val, a_eps)
    phi = CharT(torus=T, depth=Fraction(r), a_coeff=a, central=central, label=label)
    return make_positive_sc(T, phi)


def entry_summary(s):
    return [(e.depth, type(e.kt).__name__) for e in s.entries]


# ---------------------------------------------------------------------------
# depth-zero supercuspidals
# ---------------------------------------------------------------------------

def test_special_sc_vertex0():
    rep = make_depth_zero_sc(0, special_cuspidal(+1, FP3))
    s = branch(rep, 4, FP3)
    assert [e.depth for e in s.entries] == [0, 2, 4]
    assert [degree(e.kt, FP3) for e in s.entries] == [1, 12, 108]
    u_plus = minus_one_class(FP3)  # eps class at q = 3
    for e in s.entries[1:]:
        assert isinstance(e.kt, Shalika)
        assert e.kt.x.u.unit_class == u_plus
        assert e.kt.x.v.is_zero
        assert e.kt.phi.central == 1


def test_special_sc_signs_use_complementary_classes():
    for fp in (FP3, FP5):
        rp = branch(make_depth_zero_sc(0, special_cuspidal(+1, fp)), 2, fp)
        rm = branch(make_depth_zero_sc(0, special_cuspidal(-1, fp)), 2, fp)
        up = rp.entries[-1].kt.x.u.unit_class
        um = rm.entries[-1].kt.x.u.unit_class
        assert {str(up), str(um)} == {"1", "eps"}
        assert up == minus_one_class(fp)
        assert um == minus_one_class(fp) * SQ_EPS


def test_special_sc_vertex1():
    rep = make_depth_zero_sc(1, special_cuspidal(+1, FP3))
    s = branch(rep, 5, FP3)
    assert [e.depth for e in s.entries] == [1, 3, 5]
    assert all(isinstance(e.kt, Shalika) for e in s.entries)


def test_generic_sc_pairs():
    sigma = FiniteCuspidal(kind="generic", central=-1, omega="w")
    s0 = branch(make_depth_zero_sc(0, sigma), 4, FP3)
    assert [e.depth for e in s0.entries] == [0, 2, 2, 4, 4]
    s1 = branch(make_depth_zero_sc(1, sigma), 4, FP3)
    assert [e.depth for e in s1.entries] == [1, 1, 3, 3]
    for s in (s0, s1):
        for d, group in s.per_depth().items():
            if d > 0:
                classes = sorted(str(e.kt.x.u.unit_class) for e in group)
                assert classes == ["1", "eps"]


# ---------------------------------------------------------------------------
# principal series
# ---------------------------------------------------------------------------

def test_depth_zero_ps_generic_restriction():
    rep = make_principal_series(chi_other())
    s = branch(rep, 2, FP3)
    assert [type(e.kt).__name__ for e in s.entries] == [
        "FinitePS", "Shalika", "Shalika", "Shalika", "Shalika"]
    assert s.total_degree(FP3) == 4 + 4 + 4 + 12 + 12
    # level-3 identity: 36 = 3^2 * 4
    assert s.total_degree(FP3, below=3) == 36


def test_depth_zero_ps_trivial_restriction():
    chi = CharKx(depth=0, restriction="trivial", central=1, label="1")
    s = branch(make_principal_series(chi), 1, FP3)
    names = [type(e.kt).__name__ for e in s.entries]
    assert names[:2] == ["Trivial", "Steinberg"]
    assert len(s.entries) == 4


def test_depth_zero_ps_sgn_restriction():
    chi = CharKx(depth=0, restriction="sgn", central=-1, label="x")
    s = branch(make_principal_series(chi), 1, FP3)
    assert [type(e.kt).__name__ for e in s.entries[:2]] == ["XiSgn", "XiSgn"]
    with pytest.raises(EngineError):
        bad = CharKx(depth=0, restriction="sgn", central=1, label="x")
        branch(make_principal_series(bad), 1, FP3)


def test_positive_ps_display():
    chi = chi_other(r=1, central=-1)
    s = branch(make_principal_series(chi), 3, FP3)
    assert [e.depth for e in s.entries] == [1, 2, 2, 3, 3]
    lead = s.entries[0].kt
    assert degree(lead, FP3) == 12  # (q+1)q^r
    for e in s.entries[1:]:
        kt = e.kt
        t = int(e.depth) - 1
        assert isinstance(kt, Shalika)
        assert kt.phi.kind == "chi_gamma"
        assert kt.phi.gamma.val == t
        assert kt.x.v.val == 2 * t
        if kt.x.u.unit_class == SQ_ONE:
            assert kt.x.v.unit_class == SQ_ONE       # v = (lambda pi^t)^2
        else:
            assert kt.x.v.unit_class == SQ_EPS       # v = eps u1^2


def test_reducible_ps_tau_eps():
    pair = make_principal_series(sign_character(SQ_EPS, FP3))
    sp = branch(pair[0], 4, FP3)
    sm = branch(pair[1], 4, FP3)
    assert isinstance(sp.entries[0].kt, Trivial)
    assert isinstance(sm.entries[0].kt, Steinberg)
    assert [e.depth for e in sp.entries] == [0, 2, 2, 4, 4]
    assert [e.depth for e in sm.entries] == [0, 1, 1, 3, 3]
    # complement: together they give the full pair at every depth
    full = branch(make_principal_series(
        CharKx(depth=0, restriction="trivial", central=1, label="s")), 4, FP3)
    merged = sorted([e.depth for e in sp.entries[1:] + sm.entries[1:]])
    assert merged == sorted(e.depth for e in full.entries[2:])


def _tau_minus_pi(fp):
    return minus_one_class(fp) * SQ_PI


def _tau_minus_eps_pi(fp):
    return minus_one_class(fp) * SQ_EPS_PI


def test_reducible_ps_tau_minus_pi():
    for fp in (FP3, FP5):
        tau = _tau_minus_pi(fp)
        pair = make_principal_series(sign_character(tau, fp))
        sp = branch(pair[0], 3, fp)
        diamond = -1 if fp.minus_one_square else 1
        assert isinstance(sp.entries[0].kt, XiSgn)
        assert sp.entries[0].kt.sign == diamond
        assert [e.depth for e in sp.entries] == [0, 1, 2, 3]
        assert all(e.kt.x.u.unit_class == SQ_ONE for e in sp.entries[1:])
        sm = branch(pair[1], 3, fp)
        assert sm.entries[0].kt.sign == -diamond
        assert all(e.kt.x.u.unit_class == SQ_EPS for e in sm.entries[1:])


def test_reducible_ps_tau_minus_eps_pi():
    for fp in (FP3, FP5):
        tau = _tau_minus_eps_pi(fp)
        pair = make_principal_series(sign_character(tau, fp))
        sp = branch(pair[0], 4, fp)
        for e in sp.entries[1:]:
            want = SQ_EPS if int(e.depth) % 2 == 1 else SQ_ONE
            assert e.kt.x.u.unit_class == want
        sm = branch(pair[1], 4, fp)
        for e in sm.entries[1:]:
            want = SQ_ONE if int(e.depth) % 2 == 1 else SQ_EPS
            assert e.kt.x.u.unit_class == want


# ---------------------------------------------------------------------------
# positive-depth supercuspidals
# ---------------------------------------------------------------------------

def test_unramified_sc_y0_display():
    rep = unram_sc(FP3, r=1)
    s = branch(rep, 5, FP3)
    assert [e.depth for e in s.entries] == [1, 3, 3, 5, 5]
    assert degree(s.entries[0].kt, FP3) == 6  # (q-1)q
    by_depth = s.per_depth()
    for d, t in ((3, 1), (5, 2)):
        group = by_depth[Fraction(d)]
        vals = sorted(e.kt.x.v.val for e in group)
        assert vals == [4 * t, 4 * t]
        classes = sorted(str(e.kt.x.u.unit_class) for e in group)
        assert classes == ["1", "eps"]
        # v sits in the opposite unit class from u (a X_{1,eps pi^4t} etc.)
        for e in group:
            assert e.kt.x.v.unit_class == e.kt.x.u.unit_class * SQ_EPS


def test_unramified_sc_y1_display():
    rep = unram_sc(FP3, r=1, y=1)
    s = branch(rep, 6, FP3)
    assert [e.depth for e in s.entries] == [2, 2, 4, 4, 6, 6]
    for e in s.entries:
        t = (int(e.depth) - 1 - 1) // 2
        assert e.kt.x.v.val == 4 * t + 2


def test_unramified_sc_weil_leading():
    rep = unram_sc(FP3, r=2)
    assert rep.rho_kind == "weil"
    s = branch(rep, 4, FP3)
    assert degree(s.entries[0].kt, FP3) == 18  # (q-1)q^2
    assert [e.depth for e in s.entries] == [2, 4, 4]


def test_ramified_sc_display():
    rep = ram_sc(FP3, r=Fraction(1, 2))
    s = branch(rep, 3, FP3)
    assert [e.depth for e in s.entries] == [1, 2, 3]
    e1, e2, e3 = [e.kt for e in s.entries]
    # leading term S_1(phi, a X_{1,pi})
    assert e1.x.u.unit_class == SQ_ONE and e1.x.v.val == 1
    assert e1.phi.conj[-1] == "alpha^0"
    # depth 2: w-family, X_{-1, -pi^3}
    assert e2.x.v.val == 3
    assert e2.phi.conj[-1] == "w"
    assert e2.x.u.unit_class == minus_one_class(FP3)
    # depth 3: plain family at t = 1, X_{1, pi^5}
    assert e3.x.v.val == 5
    assert e3.x.u.unit_class == SQ_ONE
    assert e3.phi.conj[-1] == "alpha^1"


def test_ramified_sc_single_per_depth():
    for fp in (FP3, FP5):
        for g2 in (K_PI, KElem(1, True)):
            rep = ram_sc(fp, g2=g2, r=Fraction(3, 2))
            s = branch(rep, 8, fp)
            depths = [e.depth for e in s.entries]
            assert depths == [2, 3, 4, 5, 6, 7, 8]


def test_truncation_rules():
    rep = unram_sc(FP3, r=2)
    with pytest.raises(EngineError):
        branch(rep, 1, FP3)
    s6 = branch(rep, 6, FP3)
    s4 = branch(rep, 4, FP3)
    assert s6.restricted(4).entries == s4.entries


def test_truncation_coherence_all_classes():
    reps = [
        make_principal_series(chi_other()),
        make_principal_series(chi_other(r=2)),
        make_principal_series(sign_character(SQ_PI, FP3))[0],
        make_depth_zero_sc(0, special_cuspidal(+1, FP3)),
        make_depth_zero_sc(1, FiniteCuspidal(kind="generic", central=1, omega="w")),
        unram_sc(FP3, r=1), unram_sc(FP3, r=2, y=1),
        ram_sc(FP3), ram_sc(FP3, r=Fraction(5, 2)),
    ]
    for rep in reps:
        big = branch(rep, 8, FP3)
        small = branch(rep, 5, FP3)
        assert big.restricted(5).entries == small.entries


# ---------------------------------------------------------------------------
# leading terms
# ---------------------------------------------------------------------------

def test_leading_terms():
    s = branch(make_depth_zero_sc(0, FiniteCuspidal(kind="generic", central=1,
                                                    omega="w")), 4, FP3)
    lead = leading_term(s)
    assert len(lead) == 1 and isinstance(lead[0], ktype.CuspidalType)
    pair = make_principal_series(sign_character(SQ_EPS, FP3))
    assert isinstance(leading_term(branch(pair[0], 3, FP3))[0], Trivial)
    s = branch(make_principal_series(chi_other(r=1)), 3, FP3)
    assert degree(leading_term(s)[0], FP3) == 12


def test_min_depth_by_class():
    """The minimal component depth is r at the near vertex and for
    principal series, r+1 at the far vertex, r+1/2 for ramified tori."""
    assert branch(make_depth_zero_sc(0, special_cuspidal(1, FP3)), 4, FP3).min_depth() == 0
    assert branch(make_depth_zero_sc(1, special_cuspidal(1, FP3)), 4, FP3).min_depth() == 1
    assert branch(make_principal_series(chi_other(r=2)), 6, FP3).min_depth() == 2
    assert branch(unram_sc(FP3, r=2), 6, FP3).min_depth() == 2
    assert branch(unram_sc(FP3, r=2, y=1), 6, FP3).min_depth() == 3
    assert branch(ram_sc(FP3, r=Fraction(3, 2)), 6, FP3).min_depth() == 2


# ---------------------------------------------------------------------------
# dimension identities
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("fp", [FP3, FP5, FP7, FieldParams(3, 2)])
def test_dimension_identity_depth_zero(fp):
    rep = make_principal_series(chi_other())
    s = branch(rep, 6, fp)
    for n in range(1, 7):
        rept = dimension_identity(s, n, fp)
        assert rept.ok, (fp.q, n, rept)


def test_dimension_identity_positive_depth():
    for r in (1, 2):
        s = branch(make_principal_series(chi_other(r=r)), 6, FP3)
        for n in range(r + 1, 7):
            rept = dimension_identity(s, n, FP3)
            assert rept.ok and rept.leading_ok


def test_dimension_identity_reducible_pair():
    pair = make_principal_series(sign_character(SQ_PI, FP3))
    series = [branch(c, 5, FP3) for c in pair]
    for n in (1, 2, 3):
        assert dimension_identity(series, n, FP3).ok
    with pytest.raises(EngineError):
        dimension_identity(series[:1], 2, FP3)


def test_dimension_identity_examples():
    s = branch(make_principal_series(chi_other()), 3, FP3)
    rept = dimension_identity(s, 2, FP3)
    assert (rept.total, rept.expected) == (12, 12)
    s5 = branch(make_principal_series(chi_other()), 3, FP5)
    rept = dimension_identity(s5, 3, FP5)
    assert (rept.total, rept.expected) == (150, 150)
    s1 = branch(make_principal_series(chi_other(r=1)), 3, FP3)
    rept = dimension_identity(s1, 3, FP3)
    assert rept.total == 36 and rept.leading_degree == 12


# ---------------------------------------------------------------------------
# tails
# ---------------------------------------------------------------------------

def test_tail_end_depth_zero_generic():
    rep = make_depth_zero_sc(0, FiniteCuspidal(kind="generic", central=-1, omega="w"))
    desc, tail = tail_end(rep, 4, FP3)
    assert desc.pattern == PATTERN_BOTH_ALT and desc.parity == 0
    assert desc.central == -1
    assert all(e.kt.phi.kind == "central" for e in tail.entries)


def test_tail_end_ps():
    desc, tail = tail_end(make_principal_series(chi_other(r=1, central=-1)), 6, FP3)
    assert desc.pattern == PATTERN_BOTH_EACH
    assert sorted(e.depth for e in tail.entries) == [3, 3, 4, 4, 5, 5, 6, 6]
    for e in tail.entries:
        assert e.kt.x.v.is_zero and e.kt.phi.central == -1


def test_tail_end_ramified_minus_pi_field():
    # at q = 3 (-1 nonsquare), k(sqrt(-pi)) corresponds to the eps*pi class
    rep = ram_sc(FP3, g2=KElem(1, True), a_eps=True)
    desc, tail = tail_end(rep, 5, FP3)
    assert desc.pattern == PATTERN_SINGLE_EACH
    assert desc.z == SQ_EPS
    assert [e.depth for e in tail.entries] == [2, 3, 4, 5]
    # at q = 5 it is the plain pi class
    rep = ram_sc(FP5, g2=K_PI, a_eps=False)
    desc, _ = tail_end(rep, 5, FP5)
    assert desc.pattern == PATTERN_SINGLE_EACH and desc.z == SQ_ONE


def test_tail_end_ramified_parity_field():
    # k(sqrt(-eps*pi)): the pi class at q = 3
    rep = ram_sc(FP3, g2=K_PI, a_eps=False, r=Fraction(1, 2))
    desc, tail = tail_end(rep, 5, FP3)
    assert desc.pattern == PATTERN_SINGLE_PARITY
    # z(r + 1/2) = z(1) = class of the normalized scalar = 1
    assert desc.z_odd == SQ_ONE and desc.z_even == SQ_EPS
    for e in tail.entries:
        want = desc.z_odd if int(e.depth) % 2 else desc.z_even
        assert e.kt.x.u.unit_class == want


def test_tail_requires_window():
    with pytest.raises(EngineError):
        tail_end(make_principal_series(chi_other(r=2)), 4, FP3)


def test_tails_match_pairs():
    a = make_principal_series(chi_other(r=1, central=1))
    b = make_principal_series(chi_other(r=2, central=1, label="chi2"))
    ok, report = tails_match(a, b, FP3)
    assert ok and report["shared"] == "both principal series"
    c = unram_sc(FP3, r=1)
    ok, _ = tails_match(a, c, FP3)
    assert not ok
    d = ram_sc(FP3, central=1)
    ok, _ = tails_match(c, d, FP3)
    assert not ok
    with pytest.raises(EngineError):
        tails_match(a, make_principal_series(sign_character(SQ_PI, FP3))[0], FP3)


def test_tails_match_central_sensitivity():
    a = unram_sc(FP3, r=1, central=1)
    b = unram_sc(FP3, r=3, central=-1)
    ok, _ = tails_match(a, b, FP3)
    assert not ok
    c = unram_sc(FP3, r=3, central=1)
    ok, _ = tails_match(a, c, FP3)
    assert ok


# ---------------------------------------------------------------------------
# intertwining
# ---------------------------------------------------------------------------

def test_intertwine_rules():
    a = make_principal_series(chi_other(r=1))
    b = make_principal_series(chi_other(r=2, label="chi2"))
    assert intertwine_rule(a, b, FP3) == "a"
    assert k_intertwines(a, b, FP3)
    u1 = unram_sc(FP3, r=1)
    u3 = unram_sc(FP3, r=3)
    u2 = unram_sc(FP3, r=2)
    assert intertwine_rule(u1, u3, FP3) == "b"
    assert intertwine_rule(u1, u2, FP3) is None
    assert not k_intertwines(u1, u2, FP3)
    # rule (c): same torus over k(sqrt(-pi)), equal scalar classes
    r1 = ram_sc(FP3, g2=KElem(1, True), a_eps=False)
    r2 = ram_sc(FP3, g2=KElem(1, True), a_eps=False, r=Fraction(3, 2))
    assert intertwine_rule(r1, r2, FP3) == "c"
    r3 = ram_sc(FP3, g2=KElem(1, True), a_eps=True)
    assert intertwine_rule(r1, r3, FP3) is None
    assert not k_intertwines(r1, r3, FP3)
    # rule (d): z functions must agree as functions of parity
    d1 = ram_sc(FP3, g2=K_PI, a_eps=False, r=Fraction(1, 2))
    d2 = ram_sc(FP3, g2=K_PI, a_eps=False, r=Fraction(5, 2))
    assert intertwine_rule(d1, d2, FP3) == "d"
    d3 = ram_sc(FP3, g2=K_PI, a_eps=False, r=Fraction(3, 2))
    assert intertwine_rule(d1, d3, FP3) is None
    d4 = ram_sc(FP3, g2=K_PI, a_eps=True, r=Fraction(3, 2))
    assert intertwine_rule(d1, d4, FP3) == "d"


def test_intertwine_sufficiency_implies_tails_match():
    cases = [
        (make_principal_series(chi_other(r=1)),
         make_principal_series(chi_other(r=2, label="x"))),
        (unram_sc(FP3, r=1), unram_sc(FP3, r=3)),
        (ram_sc(FP3, g2=KElem(1, True)), ram_sc(FP3, g2=KElem(1, True), r=Fraction(3, 2))),
        (ram_sc(FP3, g2=K_PI), ram_sc(FP3, g2=K_PI, r=Fraction(5, 2))),
    ]
    for a, b in cases:
        assert intertwine_rule(a, b, FP3) is not None
        assert tails_match(a, b, FP3)[0]


# ---------------------------------------------------------------------------
# profiles
# ---------------------------------------------------------------------------

def test_classify_from_profile():
    s = branch(make_principal_series(chi_other(r=1)), 5, FP3)
    assert classify_from_profile(s) == CLASS_PS
    s = branch(unram_sc(FP3, r=1), 5, FP3)
    assert classify_from_profile(s) == CLASS_UNRAMIFIED
    s = branch(unram_sc(FP3, r=1, y=1), 5, FP3)
    assert classify_from_profile(s) == CLASS_UNRAMIFIED
    s = branch(ram_sc(FP3), Fraction(9, 2), FP3)
    assert classify_from_profile(s) == CLASS_RAMIFIED
    with pytest.raises(EngineError):
        classify_from_profile(branch(make_principal_series(chi_other()), 5, FP3))
    with pytest.raises(EngineError):
        classify_from_profile(branch(unram_sc(FP3, r=1), 4, FP3))


# ---------------------------------------------------------------------------
# packets
# ---------------------------------------------------------------------------

def _packet_reps(fp):
    return [
        make_principal_series(CharKx(depth=0, restriction="trivial",
                                     central=1, label="chi0")),
        make_principal_series(sign_character(SQ_PI, fp))[0],
        make_depth_zero_sc(0, special_cuspidal(+1, fp)),
        make_depth_zero_sc(0, FiniteCuspidal(kind="generic", central=-1, omega="w")),
        unram_sc(fp, r=1),
        ram_sc(fp),
    ]


@pytest.mark.parametrize("fp", [FP3, FP5, FP7])
def test_packet_two_per_depth_all_classes(fp):
    for rep in _packet_reps(fp):
        packet = l_packet(rep, fp)
        report = packet_profile(packet, 6, fp)
        assert report.ok, (type(rep).__name__, report.failures)


def test_packet_leading_counts():
    packet = l_packet(make_depth_zero_sc(0, special_cuspidal(+1, FP3)), FP3)
    report = packet_profile(packet, 4, FP3)
    assert report.leading_counts == {Fraction(0): 2}
    packet = l_packet(unram_sc(FP3, r=1), FP3)
    report = packet_profile(packet, 4, FP3)
    assert report.leading_counts == {Fraction(1): 1}
