"""charp module: dim homs, trace form, p-th power, Frobenius machinery."""

from __future__ import annotations

import random

import pytest

from conftest import shipped_dim_pairs
from fusionring.based import RingElement, group_ring, yang_lee_ring
from fusionring.charp import (
    DimHom,
    FrobeniusTable,
    FrobeniusType,
    ModpMatrix,
    apply_dim_hom,
    canonical_dim_hom,
    dim_hom,
    frobenius_candidates,
    frobenius_type,
    global_dimension,
    is_semisimple_mod_p,
    pth_power,
    regular_dual_element,
    trace_form_gram,
    verlinde_frobenius_table,
)
from fusionring.green import green_ring
from fusionring.verlinde import frobenius_on_verlinde, verlinde_ring


def test_dim_hom_verlinde_canonical():
    v3 = verlinde_ring(3)
    d = canonical_dim_hom(v3, 3)
    assert d.residues == (1, 2)  # dim(L2) = 2 = -1 mod 3


def test_dim_hom_group_ring_all_ones():
    g = group_ring(4)
    d = dim_hom(g, [1, 1, 1, 1], 5)
    assert d.residues == (1, 1, 1, 1)


def test_dim_hom_rejects_non_multiplicative():
    v5 = verlinde_ring(5)
    with pytest.raises(ValueError, match="L2"):
        dim_hom(v5, [1, 1, 1, 1], 5)


def test_dim_hom_rejects_bad_unit():
    g = group_ring(2)
    with pytest.raises(ValueError, match="unit"):
        dim_hom(g, [0, 1], 3)


def test_canonical_dim_hom_requires_dims():
    with pytest.raises(ValueError):
        canonical_dim_hom(yang_lee_ring(), 5)


def test_global_dimension_verlinde():
    assert global_dimension(verlinde_ring(3), canonical_dim_hom(verlinde_ring(3), 3)) == 2
    for p in (5, 7, 11, 13):
        v = verlinde_ring(p)
        got = global_dimension(v, canonical_dim_hom(v, p))
        # independent closed-form check on the sum of squares
        assert got == sum(s * s for s in range(1, p)) % p == 0


def test_global_dimension_trivial_ring():
    t = group_ring(1)
    assert global_dimension(t, canonical_dim_hom(t, 5)) == 1


def test_regular_dual_element_examples():
    for n in (1, 2, 4, 8):
        g = group_ring(n)
        r = regular_dual_element(g)
        want = [0] * n
        want[0] = n
        assert r.coeffs == tuple(want)
    v3 = verlinde_ring(3)
    assert regular_dual_element(v3).coeffs == (2, 0)


def test_regular_dual_dim_equals_global_dimension():
    for ring, d, p in shipped_dim_pairs():
        r = regular_dual_element(ring)
        assert apply_dim_hom(d, r) == global_dimension(ring, d), (ring.name, p)


def test_trace_form_examples():
    assert trace_form_gram(verlinde_ring(3), 3).entries == ((2, 0), (0, 2))
    assert trace_form_gram(group_ring(2), 2).entries == ((0, 0), (0, 0))
    assert trace_form_gram(group_ring(1), 5).entries == ((1,),)


def test_trace_form_symmetric():
    for ring, _, p in shipped_dim_pairs():
        g = trace_form_gram(ring, p).entries
        for i in range(ring.n):
            for j in range(ring.n):
                assert g[i][j] == g[j][i]


def test_semisimplicity():
    assert is_semisimple_mod_p(verlinde_ring(3), 3)
    for p in (5, 7, 11):
        assert not is_semisimple_mod_p(verlinde_ring(p), p)
    assert not is_semisimple_mod_p(group_ring(2), 2)


def test_semisimple_implies_nonzero_global_dimension():
    # the directional claim only: semisimple => dim(C) != 0
    for ring, d, p in shipped_dim_pairs():
        if is_semisimple_mod_p(ring, p):
            assert global_dimension(ring, d) != 0, (ring.name, p)


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_pth_power_of_l2(p):
    v = verlinde_ring(p)
    got = pth_power(v, v.basis_element("L2"), p)
    want = [0] * (p - 1)
    want[p - 2] = (-2) % p
    assert got.coeffs == tuple(want)


def test_pth_power_edges():
    v5 = verlinde_ring(5)
    assert pth_power(v5, v5.unit_element(), 5) == v5.unit_element()
    yl = yang_lee_ring()
    assert pth_power(yl, yl.basis_element("X"), 5).coeffs == (3, 0)


def test_pth_power_additive():
    rng = random.Random(11)
    for ring, _, p in shipped_dim_pairs():
        for _ in range(5):
            x = RingElement(ring, tuple(rng.randrange(0, 3) for _ in range(ring.n)))
            y = RingElement(ring, tuple(rng.randrange(0, 3) for _ in range(ring.n)))
            both = pth_power(ring, x + y, p)
            split = tuple(
                (a + b) % p
                for a, b in zip(pth_power(ring, x, p).coeffs, pth_power(ring, y, p).coeffs)
            )
            assert both.coeffs == split, (ring.name, p)


@pytest.mark.parametrize("p", (3, 5, 7, 11, 13))
def test_stup_consistency(p):
    # applying id (x) dim to the closed-form Frobenius row equals the
    # p-th power of the class, exactly
    v = verlinde_ring(p)
    for s in range(1, p):
        a, b = frobenius_on_verlinde(s, p)
        want = [0] * (p - 1)
        want[a - 1] = b % p
        got = pth_power(v, v.basis_element(s - 1), p)
        assert got.coeffs == tuple(want), s


def test_frobenius_candidates_yang_lee():
    yl = yang_lee_ring()
    cands = frobenius_candidates(yl, None, yl.index("X"), 5)
    assert len(cands) == 1
    m = cands[0]
    assert m[0][2] == 1
    assert sum(sum(row) for row in m) == 1


def test_frobenius_candidates_unit_is_unit():
    yl = yang_lee_ring()
    cands = frobenius_candidates(yl, None, yl.unit, 5)
    assert len(cands) == 1
    assert cands[0][0][0] == 1
    assert sum(sum(row) for row in cands[0]) == 1
    g2 = group_ring(2)
    cands = frobenius_candidates(g2, dim_hom(g2, [1, 1], 5), g2.unit, 5)
    assert len(cands) == 1
    assert cands[0][0][0] == 1


@pytest.mark.parametrize("p", (5, 7, 11, 13))
def test_frobenius_candidates_verlinde_unique_closed_form(p):
    v = verlinde_ring(p)
    d = canonical_dim_hom(v, p)
    for s in range(1, p):
        cands = frobenius_candidates(v, d, s - 1, p)
        a, b = frobenius_on_verlinde(s, p)
        want = [[0] * (p - 1) for _ in range(p - 1)]
        want[a - 1][b - 1] = 1
        want_t = tuple(tuple(r) for r in want)
        assert want_t in cands, s
        assert len(cands) == 1, s


def test_frobenius_candidates_respects_max_total():
    yl = yang_lee_ring()
    assert frobenius_candidates(yl, None, 1, 5, max_total=0) == []


def test_verlinde_frobenius_table_and_type():
    for p in (5, 7, 11, 13):
        table = verlinde_frobenius_table(p)
        assert frobenius_type(table, p) == FrobeniusType.PLUS
        assert str(frobenius_type(table, p)) == "Ver_p^+"


def test_frobenius_type_degenerate_and_small():
    # identity-style table touching only L1
    n = 4
    rows = []
    for i in range(n):
        m = [[0] * n for _ in range(n)]
        m[i][0] = 1
        rows.append(tuple(tuple(r) for r in m))
    table = FrobeniusTable(5, tuple(rows))
    assert frobenius_type(table, 5) == FrobeniusType.VEC

    # Yang-Lee style table: Fr(1) = 1 x L1, Fr(X) = 1 x L3
    rows = []
    for t in (0, 2):
        m = [[0] * 4 for _ in range(2)]
        m[0][t] = 1
        rows.append(tuple(tuple(r) for r in m))
    table = FrobeniusTable(5, tuple(rows))
    assert frobenius_type(table, 5) == FrobeniusType.PLUS

    # sVec-flavoured table at p = 3
    m1 = ((1, 0), (0, 0))
    m2 = ((0, 1), (0, 0))
    table = FrobeniusTable(3, (m1, m2))
    assert frobenius_type(table, 3) == FrobeniusType.SVEC

    # full type
    m = [[0] * 4 for _ in range(4)]
    m[0][1] = 1
    table = FrobeniusTable(5, (tuple(tuple(r) for r in m),) * 4)
    assert frobenius_type(table, 5) == FrobeniusType.FULL


def test_frobenius_table_rejects_negative():
    with pytest.raises(ValueError):
        FrobeniusTable(5, ((((-1,) * 4),) * 4,))


def test_modp_matrix_rejects_unreduced():
    with pytest.raises(ValueError):
        ModpMatrix(((5,),), 5)


def test_frobenius_candidates_requires_matching_dimhom():
    yl = yang_lee_ring()
    with pytest.raises(ValueError):
        frobenius_candidates(yl, DimHom((1, 1), 7), 1, 5)


def test_mod2_green_gram_rank_zero():
    g = green_ring(2)
    gram = trace_form_gram(g, 2)
    assert not is_semisimple_mod_p(g, 2)
    assert all(all(v in (0, 1) for v in row) for row in gram.entries)
