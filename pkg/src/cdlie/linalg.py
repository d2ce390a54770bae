"""Exact linear algebra over the rationals.

Everything here works on plain Python lists of Fraction (or int) entries;
no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotSymmetric


def rref(rows):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns).  Zero rows are dropped, pivots are
    normalized to 1 with zeros above and below.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    ncols = len(work[0]) if work else 0
    reduced = []
    pivots = []
    col = 0
    while work and col < ncols:
        pivot_row = None
        for r, row in enumerate(work):
            if row[col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            col += 1
            continue
        row = work.pop(pivot_row)
        inv = Fraction(1) / row[col]
        row = [x * inv for x in row]
        for other in work:
            if other[col] != 0:
                f = other[col]
                for c in range(col, ncols):
                    other[c] -= f * row[c]
        for other in reduced:
            if other[col] != 0:
                f = other[col]
                for c in range(col, ncols):
                    other[c] -= f * row[c]
        reduced.append(row)
        pivots.append(col)
        col += 1
    order = sorted(range(len(pivots)), key=lambda k: pivots[k])
    return [reduced[k] for k in order], [pivots[k] for k in order]


def decompose_in_rref(vector, reduced_rows, pivots):
    """Coefficients of vector in an rref basis, or None if outside the span."""
    coeffs = [Fraction(vector[p]) for p in pivots]
    residual = [Fraction(x) for x in vector]
    for c, row in zip(coeffs, reduced_rows):
        if c != 0:
            for j, x in enumerate(row):
                if x != 0:
                    residual[j] -= c * x
    if any(x != 0 for x in residual):
        return None
    return coeffs


def nullspace(rows, ncols):
    """Basis of the right kernel of the matrix given by rows."""
    reduced, pivots = rref(rows) if rows else ([], [])
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def kernel_dimension(rows, ncols):
    """dim ker of the matrix given by rows (exact)."""
    if not rows:
        return ncols
    _, pivots = rref(rows)
    return ncols - len(pivots)


def symmetric_inertia(mat):
    """Inertia (n_plus, n_minus, n_zero) of an exact symmetric matrix.

    Congruence elimination with exact pivots; when no nonzero diagonal pivot
    remains, a 2x2 hyperbolic block contributes one positive and one negative
    direction.
    """
    n = len(mat)
    for i in range(n):
        if len(mat[i]) != n:
            raise NotSymmetric("matrix is not square")
    # sparse symmetric storage
    a = {}
    for i in range(n):
        for j in range(n):
            x = Fraction(mat[i][j])
            if x != 0:
                a.setdefault(i, {})[j] = x
    for i in list(a):
        for j, x in a[i].items():
            if a.get(j, {}).get(i, Fraction(0)) != x:
                raise NotSymmetric("matrix is not symmetric")
    alive = set(range(n))
    n_plus = n_minus = 0

    def row(i):
        return a.get(i, {})

    def set_entry(i, j, x):
        if x == 0:
            if j in a.get(i, {}):
                del a[i][j]
        else:
            a.setdefault(i, {})[j] = x

    while alive:
        pivot = None
        best = None
        for i in alive:
            d = row(i).get(i, Fraction(0))
            if d != 0:
                nz = len(row(i))
                if best is None or nz < best:
                    best = nz
                    pivot = i
        if pivot is not None:
            i = pivot
            d = row(i)[i]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            alive.discard(i)
            targets = [(j, x) for j, x in row(i).items() if j != i and j in alive]
            # congruence update touches each unordered pair of targets once:
            # M'_jk = M_jk - M_ji M_ik / d
            for t1 in range(len(targets)):
                j, mji = targets[t1]
                for t2 in range(t1, len(targets)):
                    k, mki = targets[t2]
                    new = row(j).get(k, Fraction(0)) - mji * mki / d
                    set_entry(j, k, new)
                    set_entry(k, j, new)
            for j, _ in targets:
                set_entry(j, i, Fraction(0))
            a.pop(i, None)
            continue
        # all remaining diagonals zero: look for a hyperbolic pair
        pair = None
        for i in alive:
            for j, x in row(i).items():
                if j in alive and j != i and x != 0:
                    pair = (i, j, x)
                    break
            if pair:
                break
        if pair is None:
            break  # remaining block is zero
        i, j, b = pair
        n_plus += 1
        n_minus += 1
        alive.discard(i)
        alive.discard(j)
        others = [k for k in alive if row(i).get(k) or row(j).get(k)]
        # block pivot [[0,b],[b,0]]: M'_kl = M_kl - (M_ki M_jl + M_kj M_il)/b
        for t1 in range(len(others)):
            k = others[t1]
            mki = row(i).get(k, Fraction(0))
            mkj = row(j).get(k, Fraction(0))
            for t2 in range(t1, len(others)):
                l = others[t2]
                mil = row(i).get(l, Fraction(0))
                mjl = row(j).get(l, Fraction(0))
                if (mki and mjl) or (mkj and mil):
                    new = row(k).get(l, Fraction(0)) - (mki * mjl + mkj * mil) / b
                    set_entry(k, l, new)
                    set_entry(l, k, new)
        for k in others:
            set_entry(k, i, Fraction(0))
            set_entry(k, j, Fraction(0))
        a.pop(i, None)
        a.pop(j, None)
    n_zero = n - n_plus - n_minus
    return n_plus, n_minus, n_zero
