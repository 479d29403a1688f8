"""Exact integer lattice routines: echelon bases, kernels, Smith normal form.

Everything works on dense lists of Python ints, so there is no overflow and
no floating point anywhere.  Matrices are lists of rows.
"""

from __future__ import annotations

from dataclasses import dataclass


def _axpy(row, q, pivot):
    # row - q * pivot
    return [a - q * b for a, b in zip(row, pivot)]


def echelon(rows, pivot_cols=None):
    """Row-echelon basis of the lattice spanned by ``rows``.

    Only columns ``0 .. pivot_cols-1`` are used for pivoting; the remaining
    columns ride along (useful for tracking transforms).  Returns
    ``(basis, rest)`` where ``basis`` has strictly increasing pivot columns
    with positive pivots and ``rest`` holds the rows that became zero on
    the pivot columns.  The two together are a unimodular image of the input.
    """
    if not rows:
        return [], []
    width = len(rows[0])
    if pivot_cols is None:
        pivot_cols = width
    live = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(pivot_cols):
        hit = [r for r in live if r[col]]
        if not hit:
            continue
        live = [r for r in live if not r[col]]
        while len(hit) > 1:
            hit.sort(key=lambda r: abs(r[col]))
            p = hit[0]
            keep = [p]
            for r in hit[1:]:
                r = _axpy(r, r[col] // p[col], p)
                if r[col]:
                    keep.append(r)
                elif any(r):
                    live.append(r)
            hit = keep
        p = hit[0]
        if p[col] < 0:
            p = [-a for a in p]
        # keep entries above the pivot small
        for i, b in enumerate(basis):
            if b[col]:
                basis[i] = _axpy(b, b[col] // p[col], p)
        basis.append(p)
    return basis, [r for r in live if any(r)]


def _pivot(row):
    for j, a in enumerate(row):
        if a:
            return j
    return None


class Lattice:
    """A sublattice of Z^dim, stored as an echelon basis.

    Supports membership tests and solving for coordinates in the basis.
    """

    def __init__(self, generators, dim):
        self.dim = dim
        gens = [list(g) for g in generators]
        self.basis, _ = echelon(gens, dim) if gens else ([], [])
        self.pivots = [_pivot(b) for b in self.basis]

    @property
    def rank(self):
        return len(self.basis)

    def coordinates(self, vector):
        """Integer coefficients expressing ``vector`` in the basis, or None."""
        v = list(vector)
        coords = []
        for b, j in zip(self.basis, self.pivots):
            q, r = divmod(v[j], b[j])
            if r:
                return None
            coords.append(q)
            if q:
                v = _axpy(v, q, b)
        if any(v):
            return None
        return coords

    def __contains__(self, vector):
        return self.coordinates(vector) is not None


def kernel(matrix, ncols):
    """Basis of the integer kernel ``{v : matrix @ v = 0}``.

    ``matrix`` is m x ncols.  The result is a list of vectors of length
    ``ncols`` forming a lattice basis of the kernel.
    """
    m = len(matrix)
    if m == 0:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    aug = []
    for j in range(ncols):
        row = [matrix[i][j] for i in range(m)]
        row.extend(int(k == j) for k in range(ncols))
        aug.append(row)
    _, rest = echelon(aug, m)
    return [r[m:] for r in rest]


@dataclass
class SmithForm:
    """``left @ A @ right == diag(d_1, ..., d_r, 0, ...)``.

    ``left`` and ``right`` are only populated when requested.
    """

    diagonal: list
    left: list | None
    right: list | None


def smith_normal_form(matrix, ncols=None, want_left=False, want_right=False):
    """Smith normal form of an integer matrix.

    ``diagonal`` lists the nonzero invariant factors, positive and in
    divisibility order.
    """
    a = [list(r) for r in matrix]
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    left = [[int(i == j) for j in range(m)] for i in range(m)] if want_left else None
    right = [[int(i == j) for j in range(n)] for i in range(n)] if want_right else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if left is not None:
            left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if right is not None:
            for r in right:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row dst -= q * row src
        a[dst] = _axpy(a[dst], q, a[src])
        if left is not None:
            left[dst] = _axpy(left[dst], q, left[src])

    def add_col(dst, src, q):
        for r in a:
            r[dst] -= q * r[src]
        if right is not None:
            for r in right:
                r[dst] -= q * r[src]

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, a[i][t] // p)
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, a[t][j] // p)
                    if a[t][j]:
                        done = False
            if not done:
                # move the smallest leftover in row/col t onto the pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            # divisibility of the remaining block by the pivot
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            if left is not None:
                left[t] = [-v for v in left[t]]
        diag.append(a[t][t])
        t += 1
    return SmithForm(diag, left, right)


def invariant_factors(matrix, ncols=None):
    return smith_normal_form(matrix, ncols).diagonal


def matmul(a, b):
    cols = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
