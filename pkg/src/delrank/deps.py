"""Integral affine dependencies among the vertices of a polytope.

A dependency is an integer vector y indexed by vertices with sum(y) = 0 and
sum(y(v) v) = 0.  These vectors form a Z-module whose rank is always
nvertices - dim - 1; a simplex has none.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import exact
from .errors import NotAffineBasis, SumNotZero
from .model import Polytope


@dataclass(frozen=True)
class DependencyBasis:
    vectors: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


@dataclass(frozen=True)
class VertexDependency:
    """Dependency supported on an affine basis plus one extra vertex w.

    Normalized primitive with coefficients[w] > 0.
    """

    w: int
    coefficients: tuple[int, ...]


def dependency_module(p: Polytope) -> DependencyBasis:
    """Canonical Z-basis of all integral affine dependencies of the vertex set."""
    rows: list[list[int]] = []
    for k in range(p.dim):
        coords = [v[k] for v in p.vertices]
        scale = lcm(*(x.denominator for x in coords))
        rows.append([int(x * scale) for x in coords])
    rows.append([1] * p.nvertices)
    kernel = exact.integral_kernel(rows)
    assert len(kernel) == p.nvertices - p.dim - 1
    return DependencyBasis(vectors=tuple(tuple(v) for v in kernel))


def basis_dependencies(p: Polytope, basis_indices) -> list[VertexDependency]:
    """One dependency per vertex outside the affine basis.

    For w outside the basis the unique affine representation of w over the
    basis yields an integral dependency supported on basis + {w}.  Together
    these span the same rational space as dependency_module(p).
    """
    basis = list(basis_indices)
    if len(basis) != p.dim + 1 or len(set(basis)) != len(basis):
        raise NotAffineBasis(f"expected {p.dim + 1} distinct indices")
    if any(not 0 <= i < p.nvertices for i in basis):
        raise NotAffineBasis("index out of range")
    # affine system: columns are basis vertices, last row forces sum = 1
    a = [[p.vertices[i][k] for i in basis] for k in range(p.dim)]
    a.append([Fraction(1)] * len(basis))
    if exact.rank(a) != p.dim + 1:
        raise NotAffineBasis("indices are not affinely independent")
    out: list[VertexDependency] = []
    for w in range(p.nvertices):
        if w in basis:
            continue
        rhs = list(p.vertices[w]) + [Fraction(1)]
        x = exact.solve(a, rhs)
        assert x is not None
        y = [Fraction(0)] * p.nvertices
        y[w] = Fraction(1)
        for i, c in zip(basis, x):
            y[i] = -c
        yi = exact.primitivize(y)
        if yi[w] < 0:
            yi = [-c for c in yi]
        out.append(VertexDependency(w=w, coefficients=tuple(yi)))
    return out


def check_dist_system(dm, y) -> bool:
    """Whether sum_v y(v) d(u, v) = 0 holds for every probe vertex u."""
    d = exact.qmat(dm)
    if len(y) != len(d):
        raise ValueError("coefficient count does not match matrix size")
    for row in d:
        if sum((c * x for c, x in zip(y, row)), Fraction(0)) != 0:
            return False
    return True


def check_negative_type(dm, y) -> bool:
    """Whether sum_{u,v} y(u) y(v) d(u, v) = 0.  Requires sum(y) = 0."""
    d = exact.qmat(dm)
    if len(y) != len(d):
        raise ValueError("coefficient count does not match matrix size")
    if sum(y) != 0:
        raise SumNotZero("dependency coefficients must sum to zero")
    total = Fraction(0)
    for i, yi in enumerate(y):
        if yi:
            total += yi * sum((yj * d[i][j] for j, yj in enumerate(y) if yj), Fraction(0))
    return total == 0
