"""Polytope model: rational vertex data, Gram forms, distance matrices,
circumscribed spheres and the bounded-window emptiness check.

A polytope here is just its vertex set with exact rational coordinates in
some reference basis.  A Gram form turns coordinates into geometry; squared
distances are d(u, v) = (u - v)^T G (u - v).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import exact
from .errors import (
    DimensionDeficient,
    DuplicateVertex,
    NotCospherical,
    NotPositiveDefinite,
    NotRealizable,
    TooFewVertices,
)


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]
    base_index: int = 0

    @property
    def nvertices(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Circumdata:
    center: tuple[Fraction, ...]
    radius_sq: Fraction


@dataclass(frozen=True)
class EmptySphereReport:
    window: int
    box: tuple[tuple[int, int], ...]
    points_checked: int
    strict_violations: tuple[tuple[int, ...], ...]
    on_sphere_nonvertices: tuple[tuple[int, ...], ...]
    caveats: tuple[str, ...] = ()
    note: str = "heuristic bounded-window check, not a proof of emptiness"

    def ok(self) -> bool:
        return not self.strict_violations


def from_coords(dim: int, vertices, base_index: int = 0) -> Polytope:
    """Build a validated polytope from coordinate vectors.

    Requires at least dim + 1 distinct vertices spanning an affine space of
    exactly the stated dimension.
    """
    vts = tuple(tuple(Fraction(x) for x in v) for v in vertices)
    if any(len(v) != dim for v in vts):
        raise DimensionDeficient(f"coordinate vectors must have length {dim}")
    if len(vts) < dim + 1:
        raise TooFewVertices(f"need at least {dim + 1} vertices, got {len(vts)}")
    if len(set(vts)) != len(vts):
        seen: set[tuple[Fraction, ...]] = set()
        for i, v in enumerate(vts):
            if v in seen:
                raise DuplicateVertex(f"vertex {i} repeats an earlier vertex")
            seen.add(v)
    if not 0 <= base_index < len(vts):
        raise ValueError("base_index out of range")
    base = vts[base_index]
    diffs = [[x - b for x, b in zip(v, base)] for v in vts]
    if exact.rank(diffs) != dim:
        raise DimensionDeficient("vertices do not affinely span the stated dimension")
    return Polytope(dim=dim, vertices=vts, base_index=base_index)


def _validate_gram_shape(p: Polytope, gram) -> list[list[Fraction]]:
    g = exact.qmat(gram)
    if len(g) != p.dim or any(len(row) != p.dim for row in g):
        raise ValueError("Gram form size does not match polytope dimension")
    for i in range(p.dim):
        for j in range(i):
            if g[i][j] != g[j][i]:
                raise ValueError("Gram form must be symmetric")
    return g


def inner(g, u, v) -> Fraction:
    return sum(
        (Fraction(gij) * Fraction(ui) * Fraction(vj) for row, ui in zip(g, u) for gij, vj in zip(row, v)),
        Fraction(0),
    )


def norm_sq(g, u) -> Fraction:
    return inner(g, u, u)


def distance_matrix(p: Polytope, gram) -> list[list[Fraction]]:
    """Squared-distance matrix of the vertex set under the Gram form."""
    g = _validate_gram_shape(p, gram)
    n = p.nvertices
    d = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            diff = [a - b for a, b in zip(p.vertices[i], p.vertices[j])]
            val = norm_sq(g, diff)
            d[i][j] = val
            d[j][i] = val
    return d


def validate_distance_matrix(dm) -> list[list[Fraction]]:
    d = exact.qmat(dm)
    n = len(d)
    if any(len(row) != n for row in d):
        raise ValueError("distance matrix must be square")
    for i in range(n):
        if d[i][i] != 0:
            raise ValueError("distance matrix diagonal must be zero")
        for j in range(i + 1, n):
            if d[i][j] != d[j][i]:
                raise ValueError("distance matrix must be symmetric")
            if d[i][j] <= 0:
                raise ValueError("off-diagonal squared distances must be positive")
    return d


def affine_basis_indices(p: Polytope) -> list[int]:
    """First vertex subset of size dim + 1 that is affinely independent.

    Scans vertices in order starting from the base vertex, so the choice is
    deterministic.
    """
    base = p.vertices[p.base_index]
    chosen = [p.base_index]
    reduced: list[list[Fraction]] = []
    for i, v in enumerate(p.vertices):
        if i == p.base_index:
            continue
        vec = [x - b for x, b in zip(v, base)]
        for row in reduced:
            lead = next(k for k, x in enumerate(row) if x != 0)
            if vec[lead] != 0:
                f = vec[lead] / row[lead]
                vec = [x - f * y for x, y in zip(vec, row)]
        if any(x != 0 for x in vec):
            reduced.append(vec)
            chosen.append(i)
        if len(chosen) == p.dim + 1:
            return chosen
    raise DimensionDeficient("could not extract an affine basis")


def circumcenter(p: Polytope, gram) -> Circumdata:
    """Center and squared radius of the sphere through all vertices.

    Solves the n equations fixing the center against an affine basis, then
    checks every remaining vertex exactly.
    """
    g = _validate_gram_shape(p, gram)
    basis = affine_basis_indices(p)
    v0 = p.vertices[basis[0]]
    us = [[x - b for x, b in zip(p.vertices[i], v0)] for i in basis[1:]]
    # rows: 2 u_i^T G x = u_i^T G u_i, unknown x = center - v0
    a = [[2 * sum(u[k] * g[k][j] for k in range(p.dim)) for j in range(p.dim)] for u in us]
    b = [norm_sq(g, u) for u in us]
    x = exact.solve(a, b)
    if x is None:
        raise NotCospherical("circumcenter system is inconsistent")
    center = tuple(c + off for c, off in zip(v0, x))
    r2 = norm_sq(g, x)
    for i, v in enumerate(p.vertices):
        diff = [a_ - c_ for a_, c_ in zip(v, center)]
        if norm_sq(g, diff) != r2:
            raise NotCospherical(f"vertex {i} is not on the sphere through the affine basis")
    return Circumdata(center=center, radius_sq=r2)


def is_centrally_symmetric(p: Polytope, gram) -> tuple[bool, dict[int, int] | None]:
    """Whether v -> 2c - v permutes the vertex set; returns the pairing if so."""
    cd = circumcenter(p, gram)
    index = {v: i for i, v in enumerate(p.vertices)}
    pairing: dict[int, int] = {}
    for i, v in enumerate(p.vertices):
        mirror = tuple(2 * c - x for c, x in zip(cd.center, v))
        j = index.get(mirror)
        if j is None:
            return False, None
        pairing[i] = j
    return True, pairing


def _difference_lattice_caveats(p: Polytope) -> tuple[str, ...]:
    # The box scan walks integer coordinate vectors; flag inputs whose
    # vertex-difference lattice is not exactly the integer coordinate lattice.
    base = p.vertices[p.base_index]
    diffs = [[x - b for x, b in zip(v, base)] for i, v in enumerate(p.vertices) if i != p.base_index]
    if any(x.denominator != 1 for row in diffs for x in row):
        return ("vertex differences are not all integral; the integer box scan covers only a sublattice of the vertex lattice",)
    h, _ = exact.hermite_normal_form(diffs)
    nz = [row for row in h if any(row)]
    d = Fraction(1)
    for i, row in enumerate(nz):
        d *= row[i] if i < len(row) else 0
    if len(nz) != p.dim or d != 1:
        return ("vertex differences generate a proper sublattice of the integer coordinate lattice; the box scan includes points outside it",)
    return ()


def verify_empty_sphere(p: Polytope, gram, window: int = 1) -> EmptySphereReport:
    """Scan integer points in a box around the polytope for sphere violations.

    The box spans the vertex coordinates expanded by `window` in every axis
    direction.  A strict violation is an integer point strictly inside the
    circumscribed sphere.  Integer points on the sphere that are not
    vertices are reported separately.  This bounded scan is a heuristic
    check only; it can never prove global emptiness.
    """
    if window < 0:
        raise ValueError("window must be >= 0")
    g = _validate_gram_shape(p, gram)
    cd = circumcenter(p, gram)
    n = p.dim
    los = []
    his = []
    for k in range(n):
        vals = [v[k] for v in p.vertices]
        los.append(math.ceil(min(vals)) - window)
        his.append(math.floor(max(vals)) + window)
    scale = lcm(
        *(x.denominator for row in g for x in row),
        *(x.denominator for x in cd.center),
        cd.radius_sq.denominator,
    )
    w = [[int(scale * x) for x in row] for row in g]
    cc = [int(scale * x) for x in cd.center]
    threshold = int(scale**3 * cd.radius_sq)
    int_vertices = {
        tuple(int(x) for x in v) for v in p.vertices if all(x.denominator == 1 for x in v)
    }
    strict: list[tuple[int, ...]] = []
    on_sphere: list[tuple[int, ...]] = []
    count = 0
    for z in itertools.product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        count += 1
        u = [scale * z[k] - cc[k] for k in range(n)]
        s = 0
        for i in range(n):
            ui = u[i]
            if ui:
                row = w[i]
                s += row[i] * ui * ui
                for j in range(i + 1, n):
                    s += 2 * row[j] * ui * u[j]
        if s < threshold:
            strict.append(z)
        elif s == threshold and z not in int_vertices:
            on_sphere.append(z)
    return EmptySphereReport(
        window=window,
        box=tuple(zip(los, his)),
        points_checked=count,
        strict_violations=tuple(strict),
        on_sphere_nonvertices=tuple(on_sphere),
        caveats=_difference_lattice_caveats(p),
    )


def from_distances(dm) -> tuple[Polytope, list[list[Fraction]]]:
    """Reconstruct (polytope, Gram form) from an exact squared-distance matrix.

    Vertex 0 becomes the origin.  A greedy scan picks the first vertices
    whose pairwise form is nonsingular; those become unit coordinate
    vectors and the form restricted to them is the Gram matrix.  Every
    other vertex is solved for and the full distance matrix is recomputed
    and compared entry by entry, so the result is exact or an error.
    """
    d = validate_distance_matrix(dm)
    m = len(d)
    if m < 2:
        raise TooFewVertices("need at least 2 vertices")
    # a[i][j] = <v_i - v_0, v_j - v_0> recovered from distances
    a = [
        [(d[i][0] + d[j][0] - d[i][j]) / 2 for j in range(1, m)]
        for i in range(1, m)
    ]
    n = exact.rank(a)
    if n == 0:
        raise DimensionDeficient("all vertices coincide with vertex 0")
    chosen: list[int] = []
    for i in range(m - 1):
        trial = chosen + [i]
        sub = [[a[r][c] for c in trial] for r in trial]
        if exact.rank(sub) == len(trial):
            chosen = trial
        if len(chosen) == n:
            break
    if len(chosen) < n:
        raise NotRealizable("no nonsingular coordinate subset found")
    gram = [[a[r][c] for c in chosen] for r in chosen]
    if not exact.is_positive_definite(gram):
        raise NotPositiveDefinite("reconstructed Gram form is not positive definite")
    coords: list[list[Fraction]] = []
    unit = {idx: pos for pos, idx in enumerate(chosen)}
    for i in range(m):
        if i == 0:
            coords.append([Fraction(0)] * n)
            continue
        k = i - 1
        if k in unit:
            coords.append([Fraction(int(unit[k] == j)) for j in range(n)])
            continue
        rhs = [a[r][k] for r in chosen]
        z = exact.solve(gram, rhs)
        if z is None:
            raise NotRealizable(f"vertex {i} has no coordinates over the chosen basis")
        coords.append(z)
    try:
        p = from_coords(n, coords)
    except DuplicateVertex as e:
        raise NotRealizable(str(e)) from e
    if distance_matrix(p, gram) != d:
        raise NotRealizable("reconstructed coordinates do not reproduce the distance matrix")
    return p, gram
