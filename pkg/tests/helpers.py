"""Shared test corpus and frozen reference values.

The corpus is the fixed family every cross-cutting test sweeps: the
named graphs plus 20 seeded random r-graphs (r in {3, 4, 5}, n <= 16).
Seeds are frozen so every run sees the same graphs.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from matchcover import (
    Multigraph,
    bridge_pair,
    dipole,
    k4,
    k33,
    petersen,
    prism,
    random_regular,
)

RANDOM_SPECS = (
    (8, 3, 101), (10, 3, 102), (12, 3, 103), (12, 3, 104),
    (14, 3, 105), (14, 3, 106), (16, 3, 107), (16, 3, 108),
    (8, 4, 201), (8, 4, 202), (10, 4, 203), (10, 4, 204),
    (12, 4, 205), (12, 4, 206), (14, 4, 207),
    (6, 5, 301), (8, 5, 302), (8, 5, 303), (10, 5, 304), (10, 5, 305),
)


@lru_cache(maxsize=1)
def corpus() -> tuple[tuple[str, Multigraph, int], ...]:
    """(name, graph, r) triples; every graph is an r-graph by construction."""
    named = [
        ("petersen", petersen(), 3),
        ("k4", k4(), 3),
        ("k33", k33(), 3),
        ("dipole3", dipole(3), 3),
        ("dipole4", dipole(4), 4),
        ("dipole5", dipole(5), 5),
        ("dipole6", dipole(6), 6),
        ("prism3", prism(3), 3),
        ("prism4", prism(4), 3),
        ("prism5", prism(5), 3),
        ("prism6", prism(6), 3),
        ("prism7", prism(7), 3),
    ]
    rand = [
        (f"random_r{r}_n{n}_s{seed}", random_regular(n, r, seed), r)
        for n, r, seed in RANDOM_SPECS
    ]
    return tuple(named + rand)


CORPUS_IDS = [name for name, _, _ in corpus()]


def frac(s) -> Fraction:
    return Fraction(s)


# The full bound table: (r, k) -> (reduced rational, decimal string, exact flag).
# Values recomputed from the product formula by every table test; frozen here
# so a formula regression cannot silently agree with itself.
BOUND_TABLE = {
    (3, 2): ("3/5", "0.6", True),
    (3, 3): ("27/35", "0.7714", False),
    (3, 4): ("55/63", "0.873", False),
    (3, 5): ("215/231", "0.9307", False),
    (3, 6): ("413/429", "0.9627", False),
    (3, 7): ("6307/6435", "0.9801", False),
    (3, 8): ("12027/12155", "0.9895", False),
    (3, 9): ("45933/46189", "0.9945", False),
    (4, 2): ("9/20", "0.45", True),
    (4, 3): ("3/5", "0.6", True),
    (4, 4): ("103/145", "0.7103", False),
    (4, 5): ("344/435", "0.7908", False),
    (4, 6): ("15884/18705", "0.8492", False),
    (4, 7): ("138949/155875", "0.8914", False),
    (4, 8): ("2730303/2961625", "0.9219", False),
    (4, 9): ("44725797/47386000", "0.9439", False),
    (5, 2): ("13/35", "0.3714", False),
    (5, 3): ("409/805", "0.5081", False),
    (5, 4): ("793/1288", "0.6157", False),
    (5, 5): ("4621/6601", "0.7", False),
    (5, 6): ("25283/33005", "0.766", False),
    (5, 7): ("69221/84665", "0.8176", False),
    (5, 8): ("1234672/1439305", "0.8578", False),
    (5, 9): ("1791791/2015027", "0.8892", False),
}

# Every perfect matching of the Petersen graph, by edge id.
PETERSEN_PMS = (
    (0, 2, 9, 10, 11),
    (0, 3, 7, 13, 14),
    (1, 3, 5, 11, 12),
    (1, 4, 8, 10, 14),
    (2, 4, 6, 12, 13),
    (5, 6, 7, 8, 9),
)

# Best k-cover fractions of the Petersen graph (exhaustive search).
PETERSEN_M_EXACT = {
    1: Fraction(1, 3),
    2: Fraction(3, 5),
    3: Fraction(4, 5),
    4: Fraction(14, 15),
    5: Fraction(1),
}
