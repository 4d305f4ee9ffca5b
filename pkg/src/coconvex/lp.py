"""Exact rational linear programming feasibility (phase-1 simplex).

Used as the independent oracle side of dual-description checks: membership
of a point in a cone is decided here by solving for a nonnegative
combination of the generators, never by the facet inequalities.
"""

from __future__ import annotations

from fractions import Fraction


def nonnegative_combination(columns, target):
    """Solve ``sum x_i c_i = target`` with ``x >= 0`` exactly.

    `columns` is a sequence of equal-length vectors.  Returns a tuple of
    Fractions on success, None if infeasible.  Phase-1 simplex with Bland's
    rule, so termination is guaranteed.
    """
    m = len(target)
    k = len(columns)
    # Tableau rows: [x_1..x_k | art_1..art_m | rhs], all Fractions.
    rows = []
    for i in range(m):
        coeffs = [Fraction(col[i]) for col in columns]
        rhs = Fraction(target[i])
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(coeffs + art + [rhs])
    basis = [k + i for i in range(m)]
    # Objective: minimize sum of artificials; reduced costs for current basis.
    obj = [Fraction(0)] * (k + m + 1)
    for r in rows:
        for j in range(k + m + 1):
            obj[j] += r[j]
    for i in range(m):
        obj[k + i] -= 1

    total = k + m
    while True:
        enter = next((j for j in range(total) if obj[j] > 0), None)
        if enter is None:
            break
        # Bland leaving rule: least ratio, ties by smallest basis index.
        leave = None
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][-1] / rows[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            # Unbounded phase-1 objective cannot happen; defensive.
            return None
        piv = rows[leave][enter]
        rows[leave] = [a / piv for a in rows[leave]]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                c = rows[i][enter]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[leave])]
        c = obj[enter]
        obj = [a - c * b for a, b in zip(obj, rows[leave])]
        basis[leave] = enter

    # Feasible iff all artificials are zero, i.e. phase-1 optimum is 0.
    value = sum(rows[i][-1] for i in range(m) if basis[i] >= k)
    if value != 0:
        return None
    x = [Fraction(0)] * k
    for i in range(m):
        if basis[i] < k:
            x[basis[i]] = rows[i][-1]
    return tuple(x)


def in_cone_hull(rays, point) -> bool:
    """True iff `point` is a nonnegative rational combination of `rays`."""
    return nonnegative_combination(rays, point) is not None
