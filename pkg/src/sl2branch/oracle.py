"""Brute-force verification over the finite groups SL2(Z/p^n).

Every K-type of depth d < n factors through SL2(Z/p^n), so the symbolic
branching formulas have finite-level consequences that can be checked by
honest character theory: build the group, its conjugacy classes and the
relevant subgroups, induce explicit characters, and compare class
functions pointwise.

Conventions, recorded in every report:
  * the additive character is Psi(x) = exp(2*pi*i*x~/p^(m+1)) for
    x = x~/p^m, i.e. nontrivial on R and trivial on P;
  * eps is the least positive quadratic non-residue mod p.

Character values are complex floats; every verdict is an integer
obtained by rounding with an asserted residual below 1e-6.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .arith import filtration_exponents, FACET
from fractions import Fraction


class OracleError(ValueError):
    pass


class BudgetExceeded(OracleError):
    pass


DEFAULT_BUDGET = 200_000  # cap on p^(3n); keeps SL2(Z/27) well inside


def least_nonresidue(p: int) -> int:
    squares = {(x * x) % p for x in range(1, p)}
    for u in range(2, p):
        if u not in squares:
            return u
    raise OracleError("no nonresidue found (p must be an odd prime)")


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise OracleError("legendre symbol of zero")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _mat_mul(x, y, m):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % m, (a * f + b * h) % m,
            (c * e + d * g) % m, (c * f + d * h) % m)


def _mat_inv(x, m):
    # det = 1 throughout
    a, b, c, d = x
    return (d % m, (-b) % m, (-c) % m, a % m)


@dataclass
class FiniteGroup:
    """SL2(Z/p^n) with its conjugacy partition."""

    p: int
    n: int
    modulus: int
    elements: list
    index: dict              # element tuple -> ordinal
    class_of: list           # ordinal -> class id
    class_reps: list         # class id -> element tuple
    class_sizes: list

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def num_classes(self) -> int:
        return len(self.class_reps)

    def class_id(self, g) -> int:
        return self.class_of[self.index[g]]

    def centralizer_order(self, cid: int) -> int:
        return self.order // self.class_sizes[cid]


def _enumerate_sl2(m: int, p: int):
    """All (a,b,c,d) mod m with ad - bc = 1.

    For (a, b) not both divisible by p the solution set of ad - bc = 1
    is the line {(c0 + t a, d0 + t b)}, which has exactly m points.
    """
    elements = []
    for a in range(m):
        a_unit = a % p != 0
        for b in range(m):
            if not a_unit and b % p == 0:
                continue
            if a_unit:
                d0 = pow(a, -1, m)
                c0 = 0
            else:
                c0 = (-pow(b, -1, m)) % m
                d0 = 0
            for t in range(m):
                elements.append((a, b, (c0 + t * a) % m, (d0 + t * b) % m))
    return elements


def enumerate_group(p: int, n: int, budget: int = DEFAULT_BUDGET) -> FiniteGroup:
    if p % 2 == 0 or p < 3:
        raise OracleError("p must be an odd prime")
    if n < 1:
        raise OracleError("level must be >= 1")
    if p ** (3 * n) > budget:
        raise BudgetExceeded("p^(3n) = %d exceeds the budget %d" % (p ** (3 * n), budget))
    m = p ** n
    elements = _enumerate_sl2(m, p)
    elements.sort()
    index = {g: i for i, g in enumerate(elements)}
    expected = m ** 3 - m ** 3 // (p * p)
    if len(elements) != expected:
        raise OracleError("element count %d != p^{3n}(1-p^{-2}) = %d"
                          % (len(elements), expected))
    # conjugation orbits under the elementary generators and inverses
    gens = [(1, 1, 0, 1), (1, 0, 1, 1)]
    gens += [_mat_inv(g, m) for g in gens]
    inv_gens = [_mat_inv(g, m) for g in gens]
    class_of = [-1] * len(elements)
    class_reps = []
    class_sizes = []
    for start in range(len(elements)):
        if class_of[start] >= 0:
            continue
        cid = len(class_reps)
        class_reps.append(elements[start])
        stack = [start]
        class_of[start] = cid
        size = 1
        while stack:
            i = stack.pop()
            x = elements[i]
            for g, gi in zip(gens, inv_gens):
                y = _mat_mul(_mat_mul(g, x, m), gi, m)
                j = index[y]
                if class_of[j] < 0:
                    class_of[j] = cid
                    size += 1
                    stack.append(j)
        class_sizes.append(size)
    if sum(class_sizes) != len(elements):
        raise OracleError("class sizes do not sum to the group order")
    return FiniteGroup(p, n, m, elements, index, class_of, class_reps, class_sizes)


@lru_cache(maxsize=None)
def cached_group(p: int, n: int, budget: int = DEFAULT_BUDGET) -> FiniteGroup:
    return enumerate_group(p, n, budget)


@dataclass
class ClassFunction:
    group: FiniteGroup
    values: np.ndarray  # complex, one per class

    def at(self, g) -> complex:
        return self.values[self.group.class_id(g)]


def _identity_class(G: FiniteGroup) -> int:
    return G.class_id((1 % G.modulus, 0, 0, 1 % G.modulus))


def inner_product(a: ClassFunction, b: ClassFunction) -> int:
    if a.group is not b.group:
        raise OracleError("class functions live on different groups")
    G = a.group
    sizes = np.array(G.class_sizes, dtype=float)
    val = np.sum(sizes * a.values * np.conj(b.values)) / G.order
    out = round(val.real)
    if abs(val - out) > 1e-6:
        raise OracleError("non-character input: inner product %r is not integral" % (val,))
    return int(out)


def pointwise_equal(a: ClassFunction, b: ClassFunction, tol: float = 1e-6):
    """None if equal; otherwise the first class where the values differ."""
    if a.group is not b.group:
        raise OracleError("class functions live on different groups")
    diffs = np.abs(a.values - b.values)
    worst = int(np.argmax(diffs))
    if diffs[worst] > tol:
        return worst, a.values[worst], b.values[worst]
    return None


@dataclass
class FiniteSubgroup:
    group: FiniteGroup
    elements: list
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def verify_closure(self):
        m = self.group.modulus
        s = set(self.elements)
        sample = self.elements if len(self.elements) <= 64 else self.elements[::max(1, len(self.elements) // 64)]
        for x in sample:
            if _mat_inv(x, m) not in s:
                raise OracleError("subgroup %s not closed under inverse" % self.name)
            for y in sample:
                if _mat_mul(x, y, m) not in s:
                    raise OracleError("subgroup %s not closed under product" % self.name)


def borel_subgroup(G: FiniteGroup) -> FiniteSubgroup:
    m = G.modulus
    els = []
    for a in range(m):
        if a % G.p == 0:
            continue
        ai = pow(a, -1, m)
        for b in range(m):
            els.append((a, b, 0, ai))
    return FiniteSubgroup(G, els, "borel")


def congruence_subgroup(G: FiniteGroup, j: int) -> FiniteSubgroup:
    m = G.modulus
    pj = G.p ** j
    els = [g for g in G.elements
           if g[0] % pj == 1 and g[3] % pj == 1 and g[1] % pj == 0 and g[2] % pj == 0]
    return FiniteSubgroup(G, els, "K_%d" % j)


def facet_subgroup(G: FiniteGroup, ell: Fraction) -> FiniteSubgroup:
    """G_{[0,1/2],ell} mod p^n, from the symbolic exponent matrix."""
    e = filtration_exponents(FACET, ell)
    m = G.modulus
    p = G.p
    pd, pu, pl = p ** min(e.d1, G.n), p ** min(e.u, G.n), p ** min(e.l, G.n)
    els = [g for g in G.elements
           if (g[0] - 1) % pd == 0 and (g[3] - 1) % pd == 0
           and g[1] % pu == 0 and g[2] % pl == 0]
    return FiniteSubgroup(G, els, "facet_%s" % ell)


def mackey_subgroup(G: FiniteGroup, t: int) -> FiniteSubgroup:
    """K intersect K^{alpha^t}: lower left entry divisible by p^{2t}."""
    pt = G.p ** min(2 * t, G.n)
    els = [g for g in G.elements if g[2] % pt == 0]
    return FiniteSubgroup(G, els, "mackey_%d" % t)


def centralizer_x(G: FiniteGroup, u: int, v: int) -> FiniteSubgroup:
    """Centralizer in SL2(Z/p^n) of X = [[0,u],[v,0]]."""
    m = G.modulus
    x = (0, u % m, v % m, 0)
    els = [g for g in G.elements if _mat_mul(g, x, m) == _mat_mul(x, g, m)]
    return FiniteSubgroup(G, els, "C(X_{%d,%d})" % (u, v))


def induce_character(G: FiniteGroup, H: FiniteSubgroup, chi: dict) -> ClassFunction:
    """Induction of a character given as a dict element -> value on H.

    Ind chi (g) = |C_G(g)|/|H| * sum of chi over H intersect class(g).
    """
    if H.group is not G:
        raise OracleError("subgroup does not live in the group")
    acc = np.zeros(G.num_classes, dtype=complex)
    for h, val in chi.items():
        acc[G.class_id(h)] += val
    sizes = np.array(G.class_sizes, dtype=float)
    values = acc * (G.order / sizes) / H.order
    return ClassFunction(G, values)


# ---------------------------------------------------------------------------
# explicit characters
# ---------------------------------------------------------------------------

def psi(numerator: int, p_power: int) -> complex:
    """exp(2 pi i numerator / p_power)."""
    return cmath.exp(2j * cmath.pi * (numerator % p_power) / p_power)


def psi_x_values(G: FiniteGroup, u: int, v: int, d: int) -> dict:
    """Psi_X on the facet group at depth d = 2*ell:
    z -> Psi(pi^{-d} (u z21 + v z12)), a character trivial on K_{d+1}."""
    if G.n < d + 1:
        raise OracleError("level %d too small for depth %d" % (G.n, d))
    H = facet_subgroup(G, Fraction(d, 2))
    mod = G.p ** (d + 1)
    out = {}
    for z in H.elements:
        out[z] = psi(u * z[2] + v * z[1], mod)
    return out


def shalika_character_subgroup(G: FiniteGroup, u: int, v: int, d: int,
                               theta: int, phi_values: dict | None = None):
    """The pair (C(X) G_{[0,1/2],d/2}, phi*Psi_X) at level p^n.

    phi defaults to the central extension: theta on -I, trivial on the
    unipotent part of C(X) (the tail-type character).  A custom phi may
    be supplied as a dict on the centralizer; agreement with Psi_X on
    the overlap is checked pointwise.
    """
    m = G.modulus
    psix = psi_x_values(G, u, v, d)
    cent = centralizer_x(G, u, v)
    if phi_values is None:
        phi_values = {}
        for c in cent.elements:
            # c = +-(I + s E12 u); the sign is the reduction of the diagonal
            sign = 1 if c[0] % G.p == 1 else -1
            if (c[0] - sign) % m or (c[3] - sign) % m:
                raise OracleError("unexpected centralizer element %r" % (c,))
            phi_values[c] = 1 if sign == 1 else theta
    values = dict(psix)
    for c, pv in phi_values.items():
        for z, zv in psix.items():
            g = _mat_mul(c, z, m)
            val = pv * zv
            old = values.get(g)
            if old is None:
                values[g] = val
            elif abs(old - val) > 1e-9:
                raise OracleError("incompatible (phi, Psi_X) pair at %r" % (g,))
    H = FiniteSubgroup(G, sorted(values), "C(X)facet")
    return H, values


def shalika_character(G: FiniteGroup, u: int, v: int, d: int, theta: int) -> ClassFunction:
    H, values = shalika_character_subgroup(G, u, v, d, theta)
    return induce_character(G, H, values)


# ---------------------------------------------------------------------------
# character table of SL2(F_p) by the class-algebra (Burnside/Dixon) method
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def character_table_sl2fp(p: int):
    """All irreducible characters of SL2(F_p), as ClassFunctions sorted
    by (degree, values); supported for p in {3, 5, 7, 11}."""
    if p not in (3, 5, 7, 11):
        raise OracleError("character table supported for p in {3,5,7,11}")
    G = cached_group(p, 1)
    k = G.num_classes
    # structure constants: A_i[s, j] = #{x in C_i, y in C_s : xy = rep_j}
    mats = np.zeros((k, k, k), dtype=float)
    by_class = [[] for _ in range(k)]
    for g in G.elements:
        by_class[G.class_id(g)].append(g)
    for i in range(k):
        for j, rep in enumerate(G.class_reps):
            for x in by_class[i]:
                y = _mat_mul(_mat_inv(x, G.modulus), rep, G.modulus)
                mats[i, G.class_id(y), j] += 1
    rng = np.random.default_rng(20240517)
    ident = _identity_class(G)
    for _ in range(32):
        weights = rng.standard_normal(k)
        M = np.tensordot(weights, mats, axes=(0, 0))
        eigvals, eigvecs = np.linalg.eig(M)
        if len(set(np.round(eigvals, 6))) < k:
            continue
        chars = []
        ok = True
        sizes = np.array(G.class_sizes, dtype=float)
        for col in range(k):
            v = eigvecs[:, col]
            if abs(v[ident]) < 1e-12:
                ok = False
                break
            omega = v / v[ident]
            norm = np.sum(np.abs(omega) ** 2 / sizes)
            deg = (G.order / norm) ** 0.5
            if abs(deg - round(deg.real)) > 1e-6:
                ok = False
                break
            deg = round(deg.real)
            chars.append(ClassFunction(G, deg * omega / sizes))
        if not ok:
            continue
        gram = np.array([[inner_product(a, b) for b in chars] for a in chars])
        if not np.array_equal(gram, np.eye(k, dtype=int)):
            continue
        chars.sort(key=lambda c: (round(c.values[ident].real),
                                  tuple(np.round(c.values, 6).view(float))))
        return tuple(chars)
    raise OracleError("class-algebra eigenvalue separation failed")


def table_degrees(p: int) -> list:
    G = cached_group(p, 1)
    ident = _identity_class(G)
    return [int(round(c.values[ident].real)) for c in character_table_sl2fp(p)]


def _central_value(G: FiniteGroup, chi: ClassFunction) -> int:
    m = G.modulus
    ident = _identity_class(G)
    minus = G.class_id(((m - 1), 0, 0, (m - 1)))
    val = chi.values[minus] / chi.values[ident]
    out = round(val.real)
    if abs(val - out) > 1e-6 or out not in (1, -1):
        raise OracleError("central value is not a sign")
    return out


def _borel_inductions(p: int) -> list:
    """Inductions of all p-1 characters of the diagonal torus of SL2(F_p).

    A table character is cuspidal exactly when it is orthogonal to all
    of these.  (At p = 3 this matters: degrees alone cannot separate the
    cuspidal of degree q-1 = 2 from the halves Xi of degree (q+1)/2 = 2.)
    """
    G = cached_group(p, 1)
    B = borel_subgroup(G)
    root = 2
    while set(pow(root, k, p) for k in range(p - 1)) != set(range(1, p)):
        root += 1
    dlog = {pow(root, k, p): k for k in range(p - 1)}
    out = []
    for exp_j in range(p - 1):
        vals = {g: cmath.exp(2j * cmath.pi * (exp_j * dlog[g[0] % p]) / (p - 1))
                for g in B.elements}
        out.append(induce_character(G, B, vals))
    return out


def cuspidal_characters(p: int):
    """(generic cuspidals of degree q-1, the two special halves of degree (q-1)/2)."""
    G = cached_group(p, 1)
    ident = _identity_class(G)
    inductions = _borel_inductions(p)
    generic = []
    special = []
    for c in character_table_sl2fp(p):
        if any(inner_product(c, ind) != 0 for ind in inductions):
            continue
        deg = int(round(c.values[ident].real))
        if deg == p - 1:
            generic.append(c)
        elif deg == (p - 1) // 2:
            special.append(c)
        else:
            raise OracleError("cuspidal of unexpected degree %d" % deg)
    if len(special) != 2 or not generic:
        raise OracleError("cuspidal identification failed")
    return generic, special


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    name: str
    passed: bool
    skipped: bool = False
    details: dict = field(default_factory=dict)

    def to_text(self) -> str:
        lines = ["case: %s" % self.name]
        for k, v in self.details.items():
            lines.append("%s: %s" % (k, v))
        lines.append("verdict: %s" % ("SKIP" if self.skipped else
                                      "PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _psi_convention(p: int, d: int) -> str:
    return "Psi(x) = exp(2 pi i x / %d^%d) on pi^{-%d} R" % (p, d + 1, d)


def verify_shalika_finite(p: int, d: int, theta: int, u_class: str,
                          budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """S_d(theta, X_{u,0}) at level p^{d+1}: irreducible, of the stated
    degree, and of depth exactly d."""
    name = "shalika p=%d d=%d theta=%+d u=%s" % (p, d, theta, u_class)
    try:
        G = cached_group(p, d + 1, budget)
    except BudgetExceeded as e:
        return VerifyReport(name, False, skipped=True, details={"reason": str(e)})
    u = 1 if u_class == "1" else least_nonresidue(p)
    chi = shalika_character(G, u, 0, d, theta)
    ident = _identity_class(G)
    deg = int(round(chi.values[ident].real))
    want = p ** (d - 1) * (p * p - 1) // 2
    norm = inner_product(chi, chi)
    # depth exactly d: some element of K_d acts nontrivially
    kd = congruence_subgroup(G, d)
    nontrivial = any(abs(chi.values[G.class_id(g)] - chi.values[ident]) > 1e-6
                     for g in kd.elements)
    details = {
        "group": "SL2(Z/%d), order %d" % (G.modulus, G.order),
        "degree": deg, "expected_degree": want,
        "self_inner_product": norm,
        "nontrivial_on_K%d" % d: nontrivial,
        "psi": _psi_convention(p, d),
        "eps": least_nonresidue(p),
    }
    return VerifyReport(name, deg == want and norm == 1 and nontrivial, details=details)


def verify_shalika_orthogonality(p: int, d: int, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Distinct parameters (u-class or central value) give orthogonal characters."""
    name = "shalika orthogonality p=%d d=%d" % (p, d)
    try:
        G = cached_group(p, d + 1, budget)
    except BudgetExceeded as e:
        return VerifyReport(name, False, skipped=True, details={"reason": str(e)})
    eps = least_nonresidue(p)
    chars = {}
    for theta in (1, -1):
        for label, u in (("1", 1), ("eps", eps)):
            chars[(theta, label)] = shalika_character(G, u, 0, d, theta)
    keys = sorted(chars, key=str)
    gram = {}
    ok = True
    for i, a in enumerate(keys):
        for b in keys[i:]:
            ip = inner_product(chars[a], chars[b])
            gram["<%s,%s>" % (a, b)] = ip
            if (ip == 1) != (a == b):
                ok = False
    details = {"group": "SL2(Z/%d)" % G.modulus, "eps": eps}
    details.update(gram)
    return VerifyReport(name, ok, details=details)


def _depth_zero_char(p: int, kind: str, a: int) -> complex:
    if kind == "trivial":
        return 1
    return legendre(a, p)


def verify_ps_branching_finite(p: int, n: int, chi_kind: str,
                               budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Induction from the level-n Borel of a depth-zero character equals
    the inflated level-one part plus the Shalika pairs of depth < n."""
    name = "ps p=%d n=%d chi=%s" % (p, n, chi_kind)
    try:
        G = cached_group(p, n, budget)
    except BudgetExceeded as e:
        return VerifyReport(name, False, skipped=True, details={"reason": str(e)})
    B = borel_subgroup(G)
    chi_vals = {g: _depth_zero_char(p, chi_kind, g[0]) for g in B.elements}
    lhs = induce_character(G, B, chi_vals)
    # level-one part, inflated from SL2(F_p)
    G1 = cached_group(p, 1)
    B1 = borel_subgroup(G1)
    lvl1 = induce_character(G1, B1, {g: _depth_zero_char(p, chi_kind, g[0])
                                     for g in B1.elements})
    inflated = np.array([lvl1.values[G1.class_id(tuple(x % p for x in rep))]
                         for rep in G.class_reps])
    total = inflated.copy()
    theta = 1 if chi_kind == "trivial" else legendre(-1, p)
    eps = least_nonresidue(p)
    degrees = {"borel_index": int(round(lhs.values[_identity_class(G)].real))}
    for t in range(1, n):
        for u in (1, eps):
            st = shalika_character(G, u, 0, t, theta)
            degrees["S_%d(X_%d)" % (t, u)] = int(round(st.values[_identity_class(G)].real))
            total = total + st.values
    mismatch = pointwise_equal(lhs, ClassFunction(G, total))
    details = {
        "group": "SL2(Z/%d), order %d" % (G.modulus, G.order),
        "borel_order": B.order,
        "theta": theta,
        "eps": eps,
        "psi": _psi_convention(p, n - 1),
    }
    details.update(degrees)
    if mismatch is not None:
        cid, a, b = mismatch
        details["first_mismatch"] = "class %d (rep %s): %s vs %s" % (
            cid, G.class_reps[cid], a, b)
    return VerifyReport(name, mismatch is None, details=details)


def verify_dzsc_mackey_finite(p: int, sigma_kind: str, t: int,
                              budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """The Mackey component Ind_{K cap K^{alpha^t}}^K sigma^{alpha^t} of a
    depth-zero supercuspidal: for a Deligne-Lusztig cuspidal it is the
    pair S_{2t}(theta, X_{1,0}) + S_{2t}(theta, X_{eps,0}); for each
    special half it is a single such component.
    """
    name = "mackey p=%d sigma=%s t=%d" % (p, sigma_kind, t)
    n = max(2 * t + 1, 1)
    try:
        G = cached_group(p, n, budget)
    except BudgetExceeded as e:
        return VerifyReport(name, False, skipped=True, details={"reason": str(e)})
    generic, special = cuspidal_characters(p)
    G1 = cached_group(p, 1)
    if sigma_kind == "generic":
        sigmas = [generic[0]]
    elif sigma_kind == "special_pair":
        sigmas = list(special)
    else:
        raise OracleError("sigma_kind must be 'generic' or 'special_pair'")
    H = mackey_subgroup(G, t)
    p2t = p ** (2 * t)
    details = {"group": "SL2(Z/%d), order %d" % (G.modulus, G.order),
               "mackey_order": H.order, "eps": least_nonresidue(p)}
    ok = True
    induced = []
    for idx, sigma in enumerate(sigmas):
        vals = {}
        for h in H.elements:
            # alpha^-t h alpha^t has entries (a, p^{2t} b, c / p^{2t}, d)
            red = (h[0] % p, (h[1] * p2t) % p, (h[2] // p2t) % p, h[3] % p)
            vals[h] = sigma.values[G1.class_id(red)]
        ind = induce_character(G, H, vals)
        induced.append(ind)
        details["induced_degree_%d" % idx] = int(round(ind.values[_identity_class(G)].real))
    theta = _central_value(G1, sigmas[0])
    details["theta"] = theta
    eps = least_nonresidue(p)
    if t == 0:
        # identity coset: the induced character is the inflation itself
        for idx, (sigma, ind) in enumerate(zip(sigmas, induced)):
            inflated = np.array([sigma.values[G1.class_id(tuple(x % p for x in rep))]
                                 for rep in G.class_reps])
            if pointwise_equal(ind, ClassFunction(G, inflated)) is not None:
                ok = False
                details["mismatch_%d" % idx] = "inflation differs"
        return VerifyReport(name, ok, details=details)
    s1 = shalika_character(G, 1, 0, 2 * t, theta)
    se = shalika_character(G, eps, 0, 2 * t, theta)
    if sigma_kind == "generic":
        ind = induced[0]
        mism = pointwise_equal(ind, ClassFunction(G, s1.values + se.values))
        norm = inner_product(ind, ind)
        details["self_inner_product"] = norm
        ok = mism is None and norm == 2
        if mism is not None:
            details["first_mismatch"] = str(mism)
    else:
        # each special half matches exactly one of the two predicted
        # components, and they split them between themselves
        matches = []
        for idx, ind in enumerate(induced):
            norm = inner_product(ind, ind)
            details["self_inner_product_%d" % idx] = norm
            hit = None
            if pointwise_equal(ind, s1) is None:
                hit = "X_1"
            elif pointwise_equal(ind, se) is None:
                hit = "X_eps"
            matches.append(hit)
            details["matches_%d" % idx] = hit
            if norm != 1 or hit is None:
                ok = False
        if sorted(m for m in matches if m) != ["X_1", "X_eps"]:
            ok = False
        details["u_plus_class"] = "eps" if legendre(-1, p) == -1 else "1"
    return VerifyReport(name, ok, details=details)


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------

def run_suite(suite: str, p: int, budget: int = DEFAULT_BUDGET) -> list:
    if p not in (3, 5, 7, 11):
        raise OracleError("verification supports p in {3,5,7,11}")
    reports = []
    if suite in ("shalika", "all"):
        for d in (1, 2):
            for theta in (1, -1):
                for u in ("1", "eps"):
                    reports.append(verify_shalika_finite(p, d, theta, u, budget))
            reports.append(verify_shalika_orthogonality(p, d, budget))
    if suite in ("ps", "all"):
        for n in (2, 3):
            for kind in ("trivial", "sgn"):
                reports.append(verify_ps_branching_finite(p, n, kind, budget))
    if suite in ("mackey", "all"):
        for t in (0, 1):
            for kind in ("generic", "special_pair"):
                reports.append(verify_dzsc_mackey_finite(p, kind, t, budget))
    if not reports:
        raise OracleError("unknown suite %r" % (suite,))
    return reports
