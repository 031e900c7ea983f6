"""Guaranteed coverage fractions for k greedily chosen matchings.

Three closed-form lower bounds on the fraction of edges of an r-graph
coverable by k perfect matchings, all exact rationals:

* `geometric_bound`: 1 - ((r-1)/r)^k, from the crude argument that each
  step covers at least 1/r of what remains.
* `product_bound`: the sharper product using the usage-count weights;
  this is the bound the greedy cover certifies against, and the value
  the bound table prints.
* `small_k_bound`: a further improvement valid only for k <= 2r-1.

Also hosts the exact -> decimal rendering used by the CLI: round
half-even to four places, strip trailing zeros, keep at least one
decimal, and flag values that are exact at four places.
"""

from __future__ import annotations

from fractions import Fraction


def _check_rk(r: int, k: int):
    if r < 3:
        raise ValueError(f"r must be at least 3, got {r}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")


def geometric_bound(r: int, k: int) -> Fraction:
    """1 - ((r-1)/r)^k."""
    _check_rk(r, k)
    return 1 - Fraction(r - 1, r) ** k


def product_bound(r: int, k: int) -> Fraction:
    """The per-step product bound matching the greedy certificates.

    Each factor is 1 minus the step-i certified gain rate, so the
    product telescopes the uncovered fraction across i = 1..k.
    """
    _check_rk(r, k)
    rest = Fraction(1)
    for i in range(1, k + 1):
        if r % 2 == 0:
            num = (r * r - 3 * r + 1) * i - (r * r - 5 * r + 3)
            den = (r * r - 2 * r - 1) * i - (r * r - 4 * r - 1)
        else:
            num = (r * r - 2 * r - 1) * i - (r * r - 4 * r + 1)
            den = (r * r - r - 2) * i - (r * r - 3 * r - 2)
        rest *= Fraction(num, den)
    return 1 - rest


def small_k_bound(r: int, k: int) -> Fraction:
    """The early-step improvement 1 - prod (2r-1-i)/(2r+1-i), for k <= 2r-1."""
    _check_rk(r, k)
    if k > 2 * r - 1:
        raise ValueError(f"small-k bound only holds for k <= {2 * r - 1}, got k = {k}")
    rest = Fraction(1)
    for i in range(1, k + 1):
        rest *= Fraction(2 * r - 1 - i, 2 * r + 1 - i)
    return 1 - rest


def bound_table(
    rs=(3, 4, 5), ks=tuple(range(2, 10))
) -> list[tuple[int, int, Fraction]]:
    """(r, k, product_bound) rows, r-major."""
    return [(r, k, product_bound(r, k)) for r in rs for k in ks]


def format_fraction(f: Fraction) -> str:
    """Reduced 'p/q', or a bare integer when q is 1."""
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def approx_decimal(f: Fraction, places: int = 4) -> tuple[str, bool]:
    """Decimal rendering and exactness flag.

    Rounds half-even to `places`, strips trailing zeros but keeps at
    least one decimal digit.  The flag is True when the value needs no
    rounding at that precision.
    """
    f = Fraction(f)
    if f < 0:
        s, exact = approx_decimal(-f, places)
        return "-" + s, exact
    scale = 10**places
    scaled = f * scale
    rounded = round(scaled)
    exact = scaled == rounded
    digits = f"{rounded % scale:0{places}d}".rstrip("0") or "0"
    return f"{rounded // scale}.{digits}", exact
