"""Builders shared across test modules."""

import delrank as dr


def square():
    return dr.from_coords(2, [[0, 0], [1, 0], [0, 1], [1, 1]])


def random_unimodular(n, rng, steps=12):
    """Random unimodular integer matrix built from shears, swaps and flips."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if kind == 0 and i != j:
            c = rng.randrange(-2, 3)
            for k in range(n):
                m[i][k] += c * m[j][k]
        elif kind == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-x for x in m[i]]
    return m


def random_polytope(rng, max_dim=4):
    """Random integer vertex set with full affine rank, dimension <= max_dim."""
    while True:
        n = rng.randrange(2, max_dim + 1)
        nv = rng.randrange(n + 1, n + 5)
        verts = set()
        while len(verts) < nv:
            verts.add(tuple(rng.randrange(-3, 4) for _ in range(n)))
        try:
            return dr.from_coords(n, sorted(verts))
        except dr.DelrankError:
            continue


def reduction_instance():
    """Centrally symmetric 3-polytope whose hyperplane section is a triangle.

    Under the attached form the eight vertices are cospherical, the section
    by the last coordinate hyperplane is the triangle {0, e1, e2}, and the
    vertex e1+e2+e3 avoids both the section and its mirror image.
    """
    verts = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1],
             [1, 1, 2], [0, 1, 2], [1, 0, 2], [1, 1, 1]]
    gram = [[3, 2, -1], [2, 3, -1], [-1, -1, 2]]
    return dr.from_coords(3, verts), gram


def family_corpus():
    """Named instances the cross-cutting suites run over, all with |V| <= 128."""
    out = [("square", square())]
    for n in range(1, 9):
        out.append((f"simplex{n}", dr.simplex(n)))
    for n in range(2, 9):
        out.append((f"cross{n}", dr.cross_polytope(n)))
    for n in range(3, 9):
        out.append((f"halfcube{n}", dr.half_cube(n)))
    for n in range(1, 5):
        out.append((f"cube{n}", dr.cube(n)))
    out.append(("p0", dr.p0().polytope))
    return out


def gram_corpus():
    """(name, polytope, gram) triples for geometry-dependent suites."""
    out = []
    for n in range(1, 5):
        out.append((f"simplex{n}", dr.simplex(n), dr.canonical_gram("simplex", n)))
    for n in range(2, 5):
        out.append((f"cross{n}", dr.cross_polytope(n), dr.canonical_gram("cross", n)))
    for n in range(3, 6):
        out.append((f"halfcube{n}", dr.half_cube(n), dr.canonical_gram("halfcube", n)))
    for n in range(1, 4):
        out.append((f"cube{n}", dr.cube(n), dr.canonical_gram("cube", n)))
    data = dr.p0()
    out.append(("p0", data.polytope, [list(r) for r in data.gram]))
    return out
