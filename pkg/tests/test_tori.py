"""Classification of anisotropic tori and their filtrations."""

from fractions import Fraction

import pytest

from sl2branch.arith import (
    ExtReal, FieldParams, KElem, K_ONE, K_EPS, K_PI,
    SQ_EPS,
)
from sl2branch.tori import (
    TorusError, UNRAMIFIED, RAM_PI, RAM_EPS_PI,
    classify_torus, torus_filtration, standard_tori, same_torus_class,
    swap_pair, beta_partner_pair, eta_partner_pair,
)


FP3 = FieldParams(3)
FP5 = FieldParams(5)


def test_table_rows():
    T = classify_torus(K_ONE, K_EPS, FP5)
    assert T.split_type == UNRAMIFIED and T.y == 0
    T = classify_torus(KElem(-1), KElem(1, True), FP5)
    assert T.split_type == UNRAMIFIED and T.y == 1
    T = classify_torus(K_ONE, K_PI, FP5)
    assert T.split_type == RAM_PI and T.y == Fraction(1, 2)
    T = classify_torus(K_ONE, KElem(1, True), FP5)
    assert T.split_type == RAM_EPS_PI
    # second ramified representatives (gamma1 in the eps class)
    T = classify_torus(K_EPS, KElem(1, True), FP5)
    assert T.split_type == RAM_PI and T.iota == SQ_EPS
    T = classify_torus(K_EPS, K_PI, FP5)
    assert T.split_type == RAM_EPS_PI and T.iota == SQ_EPS


def test_isotropic_rejected():
    with pytest.raises(TorusError):
        classify_torus(K_ONE, K_ONE, FP3)
    with pytest.raises(TorusError):
        classify_torus(K_EPS, K_EPS, FP3)
    with pytest.raises(TorusError):
        classify_torus(K_PI, K_PI, FP3)


def test_unnormalized_pairs_rejected():
    with pytest.raises(TorusError):
        classify_torus(KElem(2), K_EPS, FP3)
    with pytest.raises(TorusError):
        classify_torus(K_ONE, KElem(3), FP3)


def test_class_counts():
    """Six classes when -1 is a square, four otherwise, reached by brute
    force over normalized square-class pairs."""
    for fp, expected in ((FP5, 6), (FP3, 4)):
        reached = set()
        pairs = []
        for e1 in (False, True):
            for e2 in (False, True):
                pairs.append((KElem(0, e1), KElem(0, e2)))      # (0,0)
                pairs.append((KElem(-1, e1), KElem(1, e2)))     # (-1,1)
                pairs.append((KElem(0, e1), KElem(1, e2)))      # (0,1)
                pairs.append((KElem(1, e1), KElem(0, e2)))      # (1,0)
        for g1, g2 in pairs:
            try:
                T = classify_torus(g1, g2, fp)
            except TorusError:
                continue
            reached.add(T.standard_index)
        assert len(reached) == expected
        assert reached == {t.standard_index for t in standard_tori(fp)}


def test_swap_invariance():
    """Classification is stable under (g1, g2) -> (-g2, -g1)."""
    for fp in (FP3, FP5):
        for g1e in (False, True):
            for g2e in (False, True):
                g1, g2 = KElem(0, g1e), KElem(1, g2e)
                T = classify_torus(g1, g2, fp)
                Tw = classify_torus(*swap_pair(g1, g2, fp), fp)
                assert T.standard_index == Tw.standard_index, (fp.p, g1, g2)
                assert same_torus_class(T, Tw, fp)


def test_merged_classes_when_minus_one_nonsquare():
    T1 = classify_torus(K_ONE, K_PI, FP3)
    T2 = classify_torus(K_EPS, KElem(1, True), FP3)
    assert same_torus_class(T1, T2, FP3)
    T1 = classify_torus(K_ONE, K_PI, FP5)
    T2 = classify_torus(K_EPS, KElem(1, True), FP5)
    assert not same_torus_class(T1, T2, FP5)


def test_partner_pairs():
    T0 = classify_torus(K_ONE, K_EPS, FP5)
    g1, g2 = eta_partner_pair(T0)
    T1 = classify_torus(g1, g2, FP5)
    assert T1.y == 1
    back = classify_torus(*eta_partner_pair(T1), FP5)
    assert back.y == 0
    Tr = classify_torus(K_ONE, K_PI, FP5)
    Tb = classify_torus(*beta_partner_pair(Tr), FP5)
    assert Tb.split_type == RAM_PI and Tb.iota == SQ_EPS
    assert not same_torus_class(Tr, Tb, FP5)


def test_torus_filtration_examples():
    T = classify_torus(K_ONE, K_EPS, FP3)
    idx = torus_filtration(T, 1)
    assert (idx.a_exponent, idx.b_exponent) == (1, 1)
    Tr = classify_torus(K_ONE, K_PI, FP3)
    idx = torus_filtration(Tr, Fraction(1, 2))
    assert (idx.a_exponent, idx.b_exponent) == (1, 0)
    idx = torus_filtration(Tr, ExtReal.plus_of(Fraction(1, 2)))
    assert (idx.a_exponent, idx.b_exponent) == (1, 1)
    with pytest.raises(TorusError):
        torus_filtration(T, 0)
    # Lie algebra filtration admits any index
    idx = torus_filtration(Tr, Fraction(-1, 2), lie=True)
    assert idx.b_exponent == -1


def test_torus_filtration_antitone():
    T = classify_torus(K_ONE, K_PI, FP3)
    grid = [Fraction(n, 2) for n in range(1, 9)]
    idxs = [torus_filtration(T, u) for u in grid]
    for lo, hi in zip(idxs, idxs[1:]):
        assert hi.a_exponent >= lo.a_exponent
        assert hi.b_exponent >= lo.b_exponent
