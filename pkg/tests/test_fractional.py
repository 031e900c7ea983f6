"""Fractional 1-factor machinery: membership, usage weights, decompositions."""

import random
from fractions import Fraction

import pytest

from matchcover import (
    CapExceededError,
    FractionalOneFactor,
    Matching,
    MembershipFailure,
    NotRegularError,
    bf_double_cover,
    bridge_pair,
    build_w_k,
    decompose,
    dipole,
    enumerate_perfect_matchings,
    k4,
    k33,
    multicoloring,
    petersen,
    prism,
    uniform,
    verify_membership,
    w_k_entry,
)
from matchcover.multigraph import Multigraph

from helpers import PETERSEN_PMS, corpus

F = Fraction


def test_vector_validation():
    v = FractionalOneFactor((F(1, 2), 1, 0))
    assert v[0] == F(1, 2)
    assert len(v) == 3
    assert v.total((0, 1)) == F(3, 2)
    with pytest.raises(ValueError, match="outside"):
        FractionalOneFactor((F(3, 2),))
    with pytest.raises(ValueError, match="outside"):
        FractionalOneFactor((F(-1, 2),))


def test_uniform():
    w = uniform(petersen(), 3)
    assert set(w.values) == {F(1, 3)}
    with pytest.raises(NotRegularError):
        uniform(petersen(), 4)
    with pytest.raises(ValueError):
        uniform(petersen(), 0)


def test_entry_frozen_spots():
    assert w_k_entry(3, 2, 0) == F(2, 5)
    assert w_k_entry(3, 2, 1) == F(1, 5)
    assert w_k_entry(4, 2, 1) == F(1, 5)
    assert w_k_entry(3, 6, 0) == F(6, 13)
    # with no history the weight is the uniform one, for both parities
    for r in (3, 4, 5, 6):
        assert w_k_entry(r, 1, 0) == F(1, r)


def test_entry_strictly_decreasing_in_count():
    for r in (3, 4, 5, 6):
        for k in (2, 5, 9):
            vals = [w_k_entry(r, k, c) for c in range(k)]
            assert all(a > b for a, b in zip(vals, vals[1:]))


def test_entry_range():
    for r in (3, 4, 5, 6):
        for k in range(1, 11):
            for c in range(k):
                assert 0 < w_k_entry(r, k, c) < 1


def test_entry_floor_is_sharp():
    """The smallest entry is at count k-1; its exact floor depends on parity.

    For r = 3 that minimum is exactly 1/(2k+1), which crosses below 1/7
    from k = 3 on; the wider constant floors only hold for r >= 4.
    """
    for k in range(2, 11):
        assert w_k_entry(3, k, k - 1) == F(1, 2 * k + 1)
        for r in (4, 6):
            assert w_k_entry(r, k, k - 1) > F(1, r + 3)
        assert w_k_entry(5, k, k - 1) > F(1, 9)
    assert w_k_entry(3, 3, 2) == F(1, 7)
    assert w_k_entry(3, 4, 3) < F(1, 7)


def test_entry_star_sums_to_one():
    # r entries whose counts split k-1 arbitrarily always sum to exactly 1
    rng = random.Random(5150)
    for r in (3, 4, 5, 6):
        for k in (2, 4, 7, 10):
            for _ in range(20):
                cuts = sorted(rng.randint(0, k - 1) for _ in range(r - 1))
                counts = [b - a for a, b in zip([0] + cuts, cuts + [k - 1])]
                assert sum(counts) == k - 1
                assert sum(w_k_entry(r, k, c) for c in counts) == 1


def test_entry_validation():
    with pytest.raises(ValueError):
        w_k_entry(2, 2, 0)
    with pytest.raises(ValueError):
        w_k_entry(3, 0, 0)
    with pytest.raises(ValueError):
        w_k_entry(3, 2, 2)
    with pytest.raises(ValueError):
        w_k_entry(3, 2, -1)


def test_build_w_k_from_one_matching():
    g = petersen()
    counts = [0] * 15
    for e in PETERSEN_PMS[0]:
        counts[e] = 1
    w = build_w_k(g, 3, 2, counts)
    assert set(w.values) == {F(1, 5), F(2, 5)}
    assert all(w[e] == F(1, 5) for e in PETERSEN_PMS[0])
    assert verify_membership(g, w).ok


def test_build_w_k_validation():
    g = petersen()
    zeros = [0] * 15
    with pytest.raises(ValueError, match="at least 2"):
        build_w_k(g, 3, 1, zeros)
    with pytest.raises(NotRegularError):
        build_w_k(g, 4, 2, zeros)
    with pytest.raises(ValueError, match="expected 15 counts"):
        build_w_k(g, 3, 2, [0] * 14)
    with pytest.raises(ValueError, match="integer"):
        build_w_k(g, 3, 2, [0.0] * 15)
    with pytest.raises(ValueError, match="0..1"):
        build_w_k(g, 3, 2, [2] + zeros[1:])
    # counts summing wrong around a vertex: all zeros needs k = 1, not 2
    with pytest.raises(ValueError, match="sum to 0, expected 1"):
        build_w_k(g, 3, 2, zeros)


def test_membership_positive():
    rep = verify_membership(petersen(), uniform(petersen(), 3))
    assert rep.ok and rep.condition is None
    assert rep.min_cut.value == 1  # the vertex stars are tight


def test_membership_vertex_sum_failure():
    w = [F(1, 3)] * 15
    w[0] = F(1, 2)
    rep = verify_membership(petersen(), FractionalOneFactor(tuple(w)))
    assert not rep.ok
    assert rep.condition == "vertex_sum"
    assert rep.witness == 0


def test_membership_odd_cut_failure():
    g = bridge_pair()
    rep = verify_membership(g, uniform(g, 3))
    assert not rep.ok
    assert rep.condition == "odd_cut"
    assert rep.witness.value == F(1, 3)
    assert rep.witness.witness == {5, 6, 7, 8, 9}


def test_membership_odd_vertex_count():
    g = Multigraph(3, ((0, 1), (1, 2), (0, 2)))
    rep = verify_membership(g, FractionalOneFactor((F(1, 2),) * 3))
    assert not rep.ok
    assert rep.condition == "odd_cut"
    assert rep.witness.witness == {0, 1, 2}


def test_membership_length_mismatch():
    with pytest.raises(ValueError, match="entries"):
        verify_membership(petersen(), FractionalOneFactor((F(1, 3),)))


def test_decompose_petersen_uniform():
    g = petersen()
    dec = decompose(g, uniform(g, 3))
    assert [(m.edge_ids, c) for m, c in dec.terms] == [
        (ids, F(1, 6)) for ids in PETERSEN_PMS
    ]
    assert dec.coefficients_sum() == 1
    assert dec.reconstruct() == uniform(g, 3).values


def test_decompose_properties_and_determinism():
    g = k33()
    w = uniform(g, 3)
    dec1 = decompose(g, w)
    dec2 = decompose(g, w)
    assert dec1 == dec2
    assert dec1.coefficients_sum() == 1
    assert all(c > 0 for _, c in dec1.terms)
    assert dec1.reconstruct() == w.values


def test_decompose_matching_indicator_is_a_single_term():
    g = petersen()
    ind = [F(0)] * 15
    for e in PETERSEN_PMS[0]:
        ind[e] = F(1)
    dec = decompose(g, FractionalOneFactor(tuple(ind)))
    assert len(dec.terms) == 1
    m, c = dec.terms[0]
    assert (m.edge_ids, c) == (PETERSEN_PMS[0], 1)


def test_decompose_rejects_non_members():
    g = bridge_pair()
    with pytest.raises(MembershipFailure) as exc:
        decompose(g, uniform(g, 3))
    assert exc.value.report.condition == "odd_cut"


def test_decompose_respects_cap():
    with pytest.raises(CapExceededError):
        decompose(petersen(), uniform(petersen(), 3), cap=3)


def test_multicoloring_petersen_needs_two_rounds():
    mc = multicoloring(petersen(), 3)
    assert mc.p == 2
    assert len(mc.matchings) == 6
    per_edge = [0] * 15
    for m in mc.matchings:
        for e in m.edge_ids:
            per_edge[e] += 1
    assert per_edge == [2] * 15


def test_multicoloring_proper_colorings():
    # these graphs split into r disjoint matchings, one round each
    for g, r in [(k4(), 3), (k33(), 3), (dipole(5), 5), (prism(4), 3)]:
        mc = multicoloring(g, r)
        assert mc.p == 1
        assert len(mc.matchings) == r
        seen = sorted(e for m in mc.matchings for e in m.edge_ids)
        assert seen == list(range(g.m))


def test_double_cover_petersen_uses_all_six():
    res = bf_double_cover(petersen(), 3)
    assert res.found and not res.exhausted
    assert tuple(m.edge_ids for m in res.matchings) == PETERSEN_PMS
    assert res.pm_count == 6


def test_double_cover_k4_doubles_a_coloring():
    res = bf_double_cover(k4(), 3)
    assert res.found
    assert tuple(m.edge_ids for m in res.matchings) == (
        (0, 5), (0, 5), (1, 4), (1, 4), (2, 3), (2, 3),
    )


def test_double_cover_refutation_is_exhaustive():
    res = bf_double_cover(bridge_pair(), 3)
    assert not res.found
    assert res.exhausted
    assert res.matchings is None
    assert res.pm_count == 4


def test_double_cover_validation():
    with pytest.raises(ValueError):
        bf_double_cover(Multigraph(0, ()), 3)
    with pytest.raises(NotRegularError):
        bf_double_cover(petersen(), 4)


def test_double_cover_exists_across_corpus():
    for name, g, r in corpus():
        if g.n > 10 or len(enumerate_perfect_matchings(g)) > 40:
            continue  # keep the exhaustive search cheap
        res = bf_double_cover(g, r)
        assert res.found, name
        per_edge = [0] * g.m
        for m in res.matchings:
            for e in m.edge_ids:
                per_edge[e] += 1
        assert per_edge == [2] * g.m, name
        assert len(res.matchings) == 2 * r, name
