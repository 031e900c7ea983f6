"""Exact rational feasibility for A x = b, x >= 0.

Phase-1 simplex over `fractions.Fraction` with Bland's least-index
rule, so termination is guaranteed and the answer is exact.  This is
all the LP machinery the package needs: feasibility plus one basic
feasible point, no objective of its own.
"""

from __future__ import annotations

from fractions import Fraction


def solve_nonneg(A, b) -> list[Fraction] | None:
    """Return x >= 0 with A x = b, or None when the system is infeasible.

    A is a dense row-major rational matrix, b a rational vector.  The
    returned point is a basic feasible solution, so at most len(b) of
    its entries are nonzero.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if any(len(row) != cols for row in A):
        raise ValueError("ragged constraint matrix")
    if len(b) != rows:
        raise ValueError("right-hand side length mismatch")
    if rows == 0:
        return []

    # tableau: real columns, then one artificial per row, then the rhs
    tab = []
    for i in range(rows):
        line = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            line = [-x for x in line]
            rhs = -rhs
        line += [Fraction(0)] * rows
        line[cols + i] = Fraction(1)
        line.append(rhs)
        tab.append(line)
    width = cols + rows
    basis = [cols + i for i in range(rows)]

    # reduced-cost row for minimizing the artificial sum
    obj = [Fraction(0)] * (width + 1)
    for j in range(width + 1):
        obj[j] = -sum(tab[i][j] for i in range(rows))
    for i in range(rows):
        obj[cols + i] += 1  # cost of each artificial

    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(rows):
            coeff = tab[i][enter]
            if coeff > 0:
                ratio = tab[i][width] / coeff
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            # phase-1 objective is bounded below by 0, so this cannot happen
            raise AssertionError("unbounded phase-1 objective")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(rows):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [a - f * c for a, c in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [a - f * c for a, c in zip(obj, tab[leave])]
        basis[leave] = enter

    artificial_total = -obj[width]
    if artificial_total != 0:
        return None
    x = [Fraction(0)] * cols
    for i, bv in enumerate(basis):
        if bv < cols:
            x[bv] = tab[i][width]
    return x
