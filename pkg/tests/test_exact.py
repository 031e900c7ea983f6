"""Exhaustive coverage optimum and excessive index."""

from fractions import Fraction

import pytest

from matchcover import (
    FAST,
    NoPerfectMatchingError,
    UncoverableEdgeError,
    bridge_pair,
    dipole,
    excessive_index,
    greedy_cover,
    k4,
    k33,
    m_exact,
    petersen,
    prism,
)
from matchcover.multigraph import Multigraph

from helpers import PETERSEN_M_EXACT, PETERSEN_PMS, corpus

F = Fraction


def test_petersen_coverage_chain():
    for k, expected in PETERSEN_M_EXACT.items():
        cov = m_exact(petersen(), k)
        assert cov.fraction == expected
        assert cov.pm_count == 6
        assert cov.witness_indices == tuple(range(k))


def test_petersen_witness_padding_past_saturation():
    cov = m_exact(petersen(), 7)
    assert cov.fraction == 1
    assert cov.witness_indices == (0, 0, 1, 2, 3, 4, 5)
    assert len(cov.matchings) == 7


def test_petersen_excessive_index():
    res = excessive_index(petersen())
    assert res.value == 5
    assert res.witness_indices == (0, 1, 2, 3, 4)
    union = set()
    for m in res.matchings:
        union.update(m.edge_ids)
    assert union == set(range(15))


def test_witness_matchings_achieve_the_fraction():
    for name, g, _ in corpus():
        if g.n > 12:
            continue
        cov = m_exact(g, 3)
        union = {e for m in cov.matchings for e in m.edge_ids}
        assert F(len(union), g.m) == cov.fraction, name


def test_small_graph_chains():
    for g in (k4(), k33(), dipole(3)):
        assert m_exact(g, 1).fraction == F(1, 3)
        assert m_exact(g, 2).fraction == F(2, 3)
        assert m_exact(g, 3).fraction == 1
        assert excessive_index(g).value == 3
    assert m_exact(k33(), 2).witness_indices == (0, 3)
    assert excessive_index(k33()).witness_indices == (0, 3, 4)


def test_excessive_matches_saturation_point():
    for g in (petersen(), k4(), k33(), dipole(4), prism(3)):
        ei = excessive_index(g).value
        assert m_exact(g, ei).fraction == 1
        if ei > 1:
            assert m_exact(g, ei - 1).fraction < 1


def test_uncoverable_edge():
    with pytest.raises(UncoverableEdgeError) as exc:
        excessive_index(bridge_pair())
    assert exc.value.edge_id == 0  # lowest edge outside every matching


def test_uncoverable_graph_still_has_a_best_fraction():
    # the union of all four matchings misses six edges, so k = 4 tops out
    cov = m_exact(bridge_pair(), 4)
    assert cov.fraction == F(3, 5)
    assert cov.pm_count == 4


def test_no_perfect_matching():
    two_triangles = Multigraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    with pytest.raises(NoPerfectMatchingError):
        m_exact(two_triangles, 2)
    with pytest.raises(NoPerfectMatchingError):
        excessive_index(two_triangles)


def test_argument_validation():
    with pytest.raises(ValueError):
        m_exact(petersen(), 0)
    with pytest.raises(ValueError):
        m_exact(Multigraph(0, ()), 1)
    with pytest.raises(ValueError):
        excessive_index(Multigraph(0, ()))


def test_greedy_never_beats_the_oracle():
    for name, g, r in corpus():
        if g.n > 12:
            continue
        for k in (1, 2, 3):
            rep = greedy_cover(g, r, k, mode=FAST)
            assert rep.fraction <= m_exact(g, k).fraction, (name, k)
