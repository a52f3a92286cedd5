"""Exact rational linear feasibility via a phase-1 simplex.

Solves: find x with lo_j <= x_j <= hi_j and A x = b, all data Fractions.
Box bounds are rewritten as shifted nonnegative variables plus slack rows,
then phase-1 with artificial variables and Bland's rule (no cycling, no
floating point).  Intended for the small systems produced by eigenpair
verification, not as a general-purpose LP code.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

ZERO = Fraction(0)
ONE = Fraction(1)


def find_feasible(
    bounds: Sequence[Tuple[Fraction, Fraction]],
    rows: Sequence[Tuple[dict, Fraction]],
) -> Optional[List[Fraction]]:
    """Return a point satisfying all equality rows within the boxes, or None.

    bounds: per-variable (lo, hi) with lo <= hi, both finite.
    rows: equality constraints as ({var_index: coeff}, rhs).
    """
    nv = len(bounds)
    for lo, hi in bounds:
        if lo > hi:
            return None

    # substitute x_j = lo_j + s_j with s_j in [0, d_j]; drop d_j = 0 vars
    shift = [lo for lo, _ in bounds]
    span = [hi - lo for lo, hi in bounds]
    active = [j for j in range(nv) if span[j] > 0]
    col_of = {j: k for k, j in enumerate(active)}
    ns = len(active)

    eqs = []
    for coeffs, rhs in rows:
        row = [ZERO] * ns
        b = rhs
        for j, a in coeffs.items():
            b -= a * shift[j]
            if j in col_of:
                row[col_of[j]] += a
        eqs.append((row, b))

    # upper-bound slack rows: s_k + t_k = span
    for k, j in enumerate(active):
        row = [ZERO] * ns
        row[k] = ONE
        eqs.append((row, span[j]))

    m = len(eqs)
    width = ns + ns + m  # s vars, t slacks, artificials
    tableau = []
    for i, (row, b) in enumerate(eqs):
        t_part = [ZERO] * ns
        if i >= len(rows):
            t_part[i - len(rows)] = ONE
        full = row + t_part + [ZERO] * m + [b]
        if b < 0:
            full = [-v for v in full]
        full[ns + ns + i] = ONE
        tableau.append(full)

    basis = [ns + ns + i for i in range(m)]
    # phase-1 objective: minimize sum of artificials
    cost = [ZERO] * (width + 1)
    for r in tableau:
        for c in range(width + 1):
            cost[c] -= r[c]
    for i in range(m):
        cost[ns + ns + i] = ZERO

    while True:
        pivot_col = next(
            (c for c in range(width) if cost[c] < 0 and c not in basis), None
        )
        if pivot_col is None:
            break
        pivot_row = None
        best = None
        for i in range(m):
            a = tableau[i][pivot_col]
            if a > 0:
                ratio = tableau[i][width] / a
                key = (ratio, basis[i])  # Bland tie-break on basis index
                if best is None or key < best:
                    best = key
                    pivot_row = i
        if pivot_row is None:
            return None  # unbounded phase-1 cannot happen; defensive
        piv = tableau[pivot_row][pivot_col]
        tableau[pivot_row] = [v / piv for v in tableau[pivot_row]]
        for i in range(m):
            if i != pivot_row and tableau[i][pivot_col] != 0:
                f = tableau[i][pivot_col]
                tableau[i] = [
                    vi - f * vp for vi, vp in zip(tableau[i], tableau[pivot_row])
                ]
        if cost[pivot_col] != 0:
            f = cost[pivot_col]
            cost = [vi - f * vp for vi, vp in zip(cost, tableau[pivot_row])]
        basis[pivot_row] = pivot_col

    if -cost[width] != 0:
        return None  # residual artificial mass: infeasible

    s_val = [ZERO] * ns
    for i, bvar in enumerate(basis):
        if bvar < ns:
            s_val[bvar] = tableau[i][width]
        elif bvar >= ns + ns and tableau[i][width] != 0:
            return None  # artificial stuck in basis at nonzero level

    out = list(shift)
    for k, j in enumerate(active):
        out[j] = shift[j] + s_val[k]
    return out
