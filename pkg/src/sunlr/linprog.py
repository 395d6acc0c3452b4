"""Exact rational linear feasibility.

No floating point anywhere: coefficients are ints or fractions.Fraction.
Three entry points:

* ``fourier_motzkin_feasible`` decides Ax <= b by variable elimination with
  row normalization and deduplication.  Exponential in the worst case but
  comfortable for the small systems produced by hive polytopes.
* ``simplex_feasible`` decides {Ax <= b, Ex = d} by a phase-1 simplex with
  Bland's rule (termination guaranteed).  Used for larger systems and as an
  independent cross-check of the elimination backend.
* ``cone_implied`` decides whether c.x <= 0 follows from a homogeneous
  system {rows.x <= 0, eqs.x = 0}; by LP duality this is membership of c in
  the cone spanned by the rows plus the span of the equalities, solved as a
  small phase-1 problem in the dual (one equation per ambient coordinate).

Rows are dense sequences of length nvars; a constraint is (coeffs, rhs).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import InvalidInputError


def _normalize_int_row(coeffs, rhs):
    """Scale a rational row to coprime integers (returns tuple, int)."""
    denoms = [Fraction(c).denominator for c in coeffs] + [Fraction(rhs).denominator]
    mult = 1
    for d in denoms:
        mult = mult * d // gcd(mult, d)
    ints = [int(Fraction(c) * mult) for c in coeffs]
    r = int(Fraction(rhs) * mult)
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    g = gcd(g, abs(r))
    if g > 1:
        ints = [c // g for c in ints]
        r = r // g
    return tuple(ints), r


def eliminate_equalities(ineqs, eqs, nvars):
    """Substitute out equality-pinned variables.

    Returns (status, new_ineqs) with status False when the equalities alone
    are inconsistent.  Output inequalities still use the original variable
    indexing; eliminated columns are identically zero.  Rows carry the rhs
    as their last entry internally.
    """
    eq_rows = [[Fraction(c) for c in a] + [Fraction(b)] for a, b in eqs]
    ineq_rows = [[Fraction(c) for c in a] + [Fraction(b)] for a, b in ineqs]
    for idx in range(len(eq_rows)):
        row = eq_rows[idx]
        pivot = None
        for j in range(nvars):
            if row[j] != 0:
                pivot = j
                if abs(row[j]) == 1:
                    break
        if pivot is None:
            if row[nvars] != 0:
                return False, []
            continue
        pc = row[pivot]
        for other in eq_rows[idx + 1 :]:
            cj = other[pivot]
            if cj:
                factor = cj / pc
                for j in range(nvars + 1):
                    other[j] -= factor * row[j]
        for other in ineq_rows:
            cj = other[pivot]
            if cj:
                factor = cj / pc
                for j in range(nvars + 1):
                    other[j] -= factor * row[j]
    return True, [(tuple(r[:nvars]), r[nvars]) for r in ineq_rows]


def fourier_motzkin_feasible(ineqs, nvars, max_rows=20000) -> bool:
    """Feasibility of Ax <= b over the rationals by variable elimination."""
    rows = set()
    for a, b in ineqs:
        ia, ib = _normalize_int_row(a, b)
        rows.add((ia, ib))
    for ia, ib in rows:
        if all(c == 0 for c in ia) and ib < 0:
            return False
    active = set(rows)
    while True:
        # pick the live variable with the fewest pairings
        counts = {}
        for ia, _ in active:
            for j, c in enumerate(ia):
                if c:
                    pos, neg = counts.get(j, (0, 0))
                    counts[j] = (pos + (c > 0), neg + (c < 0))
        live = {j: pn for j, pn in counts.items() if pn[0] or pn[1]}
        if not live:
            return all(b >= 0 for a, b in active)
        var = min(live, key=lambda j: live[j][0] * live[j][1])
        pos, neg, rest = [], [], set()
        for a, b in active:
            if a[var] > 0:
                pos.append((a, b))
            elif a[var] < 0:
                neg.append((a, b))
            else:
                rest.add((a, b))
        for ap, bp in pos:
            for an, bn in neg:
                s, t = -an[var], ap[var]
                comb = tuple(s * x + t * y for x, y in zip(ap, an))
                rhs = s * bp + t * bn
                ia, ib = _normalize_int_row(comb, rhs)
                if all(c == 0 for c in ia):
                    if ib < 0:
                        return False
                    continue
                rest.add((ia, ib))
        active = rest
        if len(active) > max_rows:
            raise InvalidInputError(
                f"Fourier-Motzkin exceeded {max_rows} rows; use the simplex backend"
            )


def simplex_feasible(ineqs, eqs, nvars) -> bool:
    """Phase-1 simplex feasibility for {Ax <= b, Ex = d}, x free.

    Free variables are split x = u - v; every row gets a slack (inequality)
    and, when needed, an artificial; Bland's rule prevents cycling.
    """
    n_ineq = len(ineqs)
    base_cols = 2 * nvars + n_ineq
    rows = []
    basis = []
    art_rows = []
    for i, (a, b) in enumerate(ineqs):
        row = [Fraction(c) for c in a] + [-Fraction(c) for c in a] + [Fraction(0)] * n_ineq
        row[2 * nvars + i] = Fraction(1)
        b = Fraction(b)
        if b < 0:
            row = [-c for c in row]
            b = -b
            basis.append(None)
            art_rows.append(len(rows))
        else:
            basis.append(2 * nvars + i)
        rows.append((row, b))
    for a, b in eqs:
        row = [Fraction(c) for c in a] + [-Fraction(c) for c in a] + [Fraction(0)] * n_ineq
        b = Fraction(b)
        if b < 0:
            row = [-c for c in row]
            b = -b
        basis.append(None)
        art_rows.append(len(rows))
        rows.append((row, b))
    n_art = len(art_rows)
    tableau = []
    for r, (row, b) in enumerate(rows):
        ext = row + [Fraction(0)] * n_art + [b]
        tableau.append(ext)
    for k, r in enumerate(art_rows):
        tableau[r][base_cols + k] = Fraction(1)
        basis[r] = base_cols + k
    ncols = base_cols + n_art
    is_art = [False] * ncols
    for k in range(n_art):
        is_art[base_cols + k] = True

    def reduced_costs():
        red = [Fraction(0)] * ncols
        for r, bc in enumerate(basis):
            if is_art[bc]:
                row = tableau[r]
                for j in range(ncols):
                    red[j] += row[j]
        for j in range(ncols):
            if is_art[j]:
                red[j] -= 1
        return red

    while True:
        red = reduced_costs()
        enter = next((j for j in range(ncols) if red[j] > 0), None)
        if enter is None:
            w = sum(tableau[r][ncols] for r, bc in enumerate(basis) if is_art[bc])
            return w == 0
        best = None
        for r in range(len(tableau)):
            a = tableau[r][enter]
            if a > 0:
                ratio = tableau[r][ncols] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            # unbounded in phase 1 cannot happen (objective bounded below by 0)
            return False
        _, r = best
        piv = tableau[r][enter]
        tableau[r] = [c / piv for c in tableau[r]]
        for rr in range(len(tableau)):
            if rr == r:
                continue
            factor = tableau[rr][enter]
            if factor:
                tableau[rr] = [c - factor * p for c, p in zip(tableau[rr], tableau[r])]
        basis[r] = enter


def feasible(ineqs, eqs, nvars, method="auto") -> bool:
    """Exact feasibility of {Ax <= b, Ex = d} over the rationals."""
    if method not in ("auto", "fm", "simplex"):
        raise InvalidInputError(f"unknown LP method {method!r}")
    if method == "simplex":
        return simplex_feasible(ineqs, eqs, nvars)
    ok, reduced = eliminate_equalities(ineqs, eqs, nvars)
    if not ok:
        return False
    if method == "fm":
        return fourier_motzkin_feasible(reduced, nvars)
    live = len({j for a, _ in reduced for j in range(nvars) if a[j]})
    if live <= 14 and len(reduced) <= 160:
        try:
            return fourier_motzkin_feasible(reduced, nvars)
        except InvalidInputError:
            pass
    return simplex_feasible(ineqs, eqs, nvars)


def cone_implied(c, rows, eqs, nvars) -> bool:
    """Does c.x <= 0 follow from {r.x <= 0 for r in rows, h.x = 0 for h in eqs}?

    Equivalent, by LP duality for homogeneous systems, to
    c = sum y_r r + sum t_h h with y >= 0, t free; decided as a phase-1
    problem with one equation per coordinate and one variable per row.
    """
    gens = [tuple(Fraction(x) for x in r) for r in rows]
    frees = [tuple(Fraction(x) for x in h) for h in eqs]
    target = [Fraction(x) for x in c]
    # variables: y_r >= 0, t_h split into two nonnegative halves
    cols = []
    cols.extend(gens)
    for h in frees:
        cols.append(h)
        cols.append(tuple(-x for x in h))
    ncols = len(cols)
    eq_rows = []
    for coord in range(nvars):
        eq_rows.append((tuple(col[coord] for col in cols), target[coord]))
    return _nonneg_feasible(eq_rows, ncols)


def _nonneg_feasible(eq_rows, nvars) -> bool:
    """Phase-1 feasibility of {Ex = d, x >= 0} (no sign splitting)."""
    rows = []
    for a, b in eq_rows:
        row = [Fraction(c) for c in a]
        b = Fraction(b)
        if b < 0:
            row = [-c for c in row]
            b = -b
        rows.append((row, b))
    n_art = len(rows)
    ncols = nvars + n_art
    tableau = []
    basis = []
    for r, (row, b) in enumerate(rows):
        ext = row + [Fraction(0)] * n_art + [b]
        ext[nvars + r] = Fraction(1)
        tableau.append(ext)
        basis.append(nvars + r)
    is_art = [j >= nvars for j in range(ncols)]

    while True:
        red = [Fraction(0)] * ncols
        for r, bc in enumerate(basis):
            if is_art[bc]:
                row = tableau[r]
                for j in range(ncols):
                    red[j] += row[j]
        for j in range(ncols):
            if is_art[j]:
                red[j] -= 1
        enter = next((j for j in range(ncols) if red[j] > 0), None)
        if enter is None:
            w = sum(tableau[r][ncols] for r, bc in enumerate(basis) if is_art[bc])
            return w == 0
        best = None
        for r in range(len(tableau)):
            a = tableau[r][enter]
            if a > 0:
                ratio = tableau[r][ncols] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            return False
        _, r = best
        piv = tableau[r][enter]
        tableau[r] = [x / piv for x in tableau[r]]
        for rr in range(len(tableau)):
            if rr != r and tableau[rr][enter]:
                factor = tableau[rr][enter]
                tableau[rr] = [x - factor * p for x, p in zip(tableau[rr], tableau[r])]
        basis[r] = enter
