"""Exact linear algebra over rationals and integers.

Matrices are plain lists of lists, vectors plain lists.  Rational entries
are fractions.Fraction, integer entries plain int.  Every routine is
deterministic: pivots are chosen by fixed scan order, never by magnitude
heuristics that depend on input encoding.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Vec = list[Fraction]
Mat = list[list[Fraction]]
IntVec = list[int]
IntMat = list[list[int]]


def qmat(rows) -> Mat:
    m = [[Fraction(x) for x in row] for row in rows]
    if m:
        w = len(m[0])
        if any(len(row) != w for row in m):
            raise ValueError("ragged matrix")
    return m


def qvec(entries) -> Vec:
    return [Fraction(x) for x in entries]


def identity(n: int) -> Mat:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def int_identity(n: int) -> IntMat:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def mat_vec(m, v) -> Vec:
    return [sum((Fraction(a) * Fraction(x) for a, x in zip(row, v)), Fraction(0)) for row in m]


def mat_mul(a, b) -> Mat:
    bt = transpose(b)
    return [[sum((Fraction(x) * Fraction(y) for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def _rref(m: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices).

    Pivot is the first nonzero entry scanning down each column, so the
    result is canonical for a given row ordering.
    """
    a = [[Fraction(x) for x in row] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                row_r = a[r]
                a[i] = [x - f * y for x, y in zip(a[i], row_r)]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    return len(_rref(qmat(m))[1])


def nullspace(m) -> list[Vec]:
    """Basis of {x : m x = 0}, one vector per free column of the echelon form.

    Each basis vector has entry 1 at its free column and zeros at the other
    free columns, so the output is canonical.
    """
    a = qmat(m)
    ncols = len(a[0]) if a else 0
    red, pivots = _rref(a)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def solve(a, b) -> Vec | None:
    """One exact solution of a x = b with free variables set to 0, or None."""
    am = qmat(a)
    bv = qvec(b)
    if len(am) != len(bv):
        raise ValueError("size mismatch")
    ncols = len(am[0]) if am else 0
    aug = [row + [bv[i]] for i, row in enumerate(am)]
    red, pivots = _rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return x


def det(m) -> Fraction:
    a = qmat(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of non-square matrix")
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        inv = a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def is_positive_definite(g) -> bool:
    """Sylvester test: all leading principal minors strictly positive."""
    a = qmat(g)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("non-square form")
    for k in range(1, n + 1):
        if det([row[:k] for row in a[:k]]) <= 0:
            return False
    return True


def _as_int_matrix(m) -> IntMat:
    out = []
    for row in m:
        r = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise ValueError("integer matrix expected")
            r.append(f.numerator)
        out.append(r)
    if out:
        w = len(out[0])
        if any(len(r) != w for r in out):
            raise ValueError("ragged matrix")
    return out


def hermite_normal_form(m) -> tuple[IntMat, IntMat]:
    """Row Hermite normal form H = U m with U unimodular.

    Pivot entries are positive, entries above each pivot are reduced into
    [0, pivot), zero rows collect at the bottom.  Returns (H, U).
    """
    h = _as_int_matrix(m)
    nrows = len(h)
    ncols = len(h[0]) if h else 0
    u = int_identity(nrows)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        while True:
            live = [i for i in range(r, nrows) if h[i][c] != 0]
            if not live:
                break
            i0 = min(live, key=lambda i: (abs(h[i][c]), i))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                u[r], u[i0] = u[i0], u[r]
            rest = [i for i in range(r + 1, nrows) if h[i][c] != 0]
            if not rest:
                break
            for i in rest:
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        if h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            piv = h[r][c]
            for i in range(r):
                q = h[i][c] // piv  # floor keeps residues in [0, piv)
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
    return h, u


def integral_kernel(m) -> list[IntVec]:
    """Z-basis of the integer kernel {y : m y = 0}, in Hermite-canonical form.

    The returned vectors span every integer solution over Z, not merely the
    rational kernel.  Rows of U matching zero rows of the Hermite form of
    the transpose give such a basis; a second Hermite pass canonicalizes it.
    Each vector comes out primitive with positive leading entry.
    """
    mi = _as_int_matrix(m)
    ncols = len(mi[0]) if mi else 0
    if ncols == 0:
        return []
    h, u = hermite_normal_form(transpose(mi))
    raw = [u[i] for i in range(len(h)) if not any(h[i])]
    if not raw:
        return []
    hb, _ = hermite_normal_form(raw)
    return [row for row in hb if any(row)]


def primitivize(v) -> IntVec:
    """Scale a rational vector to a primitive integer vector.

    Clears denominators, divides by the content, and flips sign so the
    first nonzero entry is positive.  Rejects the zero vector.
    """
    fv = [Fraction(x) for x in v]
    if all(x == 0 for x in fv):
        raise ValueError("zero vector has no primitive form")
    scale = lcm(*(x.denominator for x in fv)) if fv else 1
    ints = [int(x * scale) for x in fv]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def sparse_rank(rows) -> int:
    """Rank of a sparse integer matrix given as {column: entry} dicts.

    Fraction-free elimination: each incoming row is reduced against stored
    pivot rows by leftmost column until it dies or yields a new pivot.
    Rows are gcd-normalized after every combination to bound entry growth.
    """
    pivots: dict[int, dict[int, int]] = {}
    rk = 0
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            g = 0
            for v in r.values():
                g = gcd(g, v)
            if g > 1:
                r = {c: v // g for c, v in r.items()}
            c = min(r)
            p = pivots.get(c)
            if p is None:
                pivots[c] = r
                rk += 1
                break
            a, b = r[c], p[c]
            merged = {k: b * v for k, v in r.items()}
            for k, v in p.items():
                merged[k] = merged.get(k, 0) - a * v
            r = {k: v for k, v in merged.items() if v}
    return rk
