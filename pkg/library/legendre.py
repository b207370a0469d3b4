#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""The Legendre polytope P_n: conv{e_j - e_i : i != j} inside the zero-sum
hyperplane of R^(n+1). Vertex (i,j) is the arrow from i to j."""

from dataclasses import dataclass
from itertools import combinations, product

import networkx as nx
import sympy

from cyclohedron_common import (CyclohedronDomainError, CyclohedronUnsupportedScaleError,
                                CyclohedronValidationError, SCALE_GATES, require_positive_n)
from representation import Arrow, all_arrows


@dataclass(frozen=True)
class LatticeFace(object):
    """conv(I x J) for disjoint nonempty node sets I (tails) and J (heads)."""
    n: int
    I: frozenset
    J: frozenset

    def __post_init__(self):
        require_positive_n(self.n, 'LatticeFace')
        object.__setattr__(self, 'I', frozenset(self.I))
        object.__setattr__(self, 'J', frozenset(self.J))
        nodes = set(range(1, self.n + 2))
        if not self.I or not self.J:
            raise CyclohedronValidationError('LatticeFace', "Both I and J must be nonempty")
        if not (self.I | self.J) <= nodes:
            raise CyclohedronValidationError('LatticeFace', "Nodes must lie in 1..%s" % (self.n + 1))
        if self.I & self.J:
            raise CyclohedronValidationError('LatticeFace', "I and J must be disjoint, both contain %s" % sorted(self.I & self.J))

    @property
    def dimension(self):
        return len(self.I) + len(self.J) - 2

    @property
    def is_facet(self):
        return len(self.I | self.J) == self.n + 1

    @property
    def is_simplex(self):
        return len(self.I) == 1 or len(self.J) == 1

    def arrows(self):
        return frozenset(Arrow(self.n, i, j) for i in self.I for j in self.J)

    def contains(self, a):
        return a.tail in self.I and a.head in self.J

    def opposite(self):
        return LatticeFace(self.n, self.J, self.I)

    def to_json(self):
        return {'I': sorted(self.I), 'J': sorted(self.J)}

    @classmethod
    def from_json(cls, n, data):
        try:
            return cls(n, frozenset(data['I']), frozenset(data['J']))
        except (KeyError, TypeError):
            raise CyclohedronValidationError('LatticeFace', "Expected {'I': [...], 'J': [...]}, got %r" % (data,))


def vertex_coordinates(a):
    coords = [0] * (a.n + 1)
    coords[a.head - 1] = 1
    coords[a.tail - 1] = -1
    return tuple(coords)


def origin(n):
    return (0,) * (n + 1)


def positive_vertices(n):
    """Non-origin vertices of P_n^+, i.e. the backward arrows."""
    return [a for a in all_arrows(n) if a.backward]


def enumerate_faces(n, dim=None):
    require_positive_n(n)
    if dim is not None and not 0 <= dim <= n - 1:
        raise CyclohedronDomainError("Face dimension must lie in 0..%s, got %s" % (n - 1, dim))
    nodes = range(1, n + 2)
    # each node goes to I, to J or to neither
    for assignment in product((0, 1, 2), repeat=n + 1):
        tails = frozenset(x for x, side in zip(nodes, assignment) if side == 1)
        heads = frozenset(x for x, side in zip(nodes, assignment) if side == 2)
        if not tails or not heads:
            continue
        if dim is not None and len(tails) + len(heads) - 2 != dim:
            continue
        yield LatticeFace(n, tails, heads)


def enumerate_facets(n):
    return enumerate_faces(n, n - 1)


def face_facets(f):
    if f.dimension < 1:
        raise CyclohedronDomainError("A vertex has no facets")
    facets = []
    if len(f.I) >= 2:
        facets.extend(LatticeFace(f.n, f.I - {x}, f.J) for x in sorted(f.I))
    if len(f.J) >= 2:
        facets.extend(LatticeFace(f.n, f.I, f.J - {y}) for y in sorted(f.J))
    return facets


def maximal_faces_containing(a, n):
    others = [x for x in range(1, n + 2) if x not in (a.tail, a.head)]
    faces = []
    for sides in product((0, 1), repeat=len(others)):
        tails = {a.tail} | {x for x, side in zip(others, sides) if side == 0}
        heads = {a.head} | {x for x, side in zip(others, sides) if side == 1}
        faces.append(LatticeFace(n, frozenset(tails), frozenset(heads)))
    return faces


def common_face(arrows):
    """Smallest face containing all arrows, or None when some node is both a
    head and a tail."""
    arrows = list(arrows)
    if not arrows:
        return None
    tails = frozenset(a.tail for a in arrows)
    heads = frozenset(a.head for a in arrows)
    if tails & heads:
        return None
    return LatticeFace(arrows[0].n, tails, heads)


def is_simplex_set(arrows):
    arrows = list(arrows)
    if not arrows:
        return True
    # antiparallel arrows count as a 2-cycle
    graph = nx.MultiGraph()
    graph.add_edges_from((a.tail, a.head) for a in arrows)
    return nx.is_forest(graph)


def _lattice_coordinates(vector):
    # coordinates in the basis e_i - e_(i+1), i = 1..n, are the partial sums
    partial, coords = 0, []
    for x in vector[:-1]:
        partial += x
        coords.append(partial)
    return coords


def affine_rank(points):
    points = [tuple(p) for p in points]
    if len(points) <= 1:
        return len(points) - 1
    base = points[0]
    matrix = sympy.Matrix([[x - y for x, y in zip(p, base)] for p in points[1:]])
    return matrix.rank()


def simplex_normalized_volume(points):
    points = [tuple(p) for p in points]
    if not points:
        raise CyclohedronDomainError("A simplex needs at least one point")
    ambient = len(points[0])
    if any(len(p) != ambient for p in points):
        raise CyclohedronDomainError("All points must have %s coordinates" % ambient)
    if len(points) != ambient:
        raise CyclohedronDomainError("An %s-simplex in the hyperplane needs %s points, got %s" % (
            ambient - 1, ambient, len(points)))
    if any(sum(p) != 0 for p in points):
        raise CyclohedronDomainError("Points must lie in the zero-sum hyperplane")
    base = points[0]
    rows = [_lattice_coordinates([x - y for x, y in zip(p, base)]) for p in points[1:]]
    if not rows:
        return 1
    return abs(int(sympy.Matrix(rows).det()))


def coned_facet_volume(arrows):
    arrows = list(arrows)
    n = arrows[0].n
    return simplex_normalized_volume([origin(n)] + [vertex_coordinates(a) for a in arrows])


def incidence_matrix(n):
    columns = [vertex_coordinates(a) for a in all_arrows(n)]
    return sympy.Matrix(columns).T


def incidence_is_totally_unimodular(n, unsafe_scale=False):
    require_positive_n(n)
    limit = SCALE_GATES['unimodularity']
    if n > limit and not unsafe_scale:
        raise CyclohedronUnsupportedScaleError('total unimodularity scan', n, limit)
    matrix = incidence_matrix(n)
    rows, cols = matrix.shape
    for size in range(1, rows + 1):
        for row_set in combinations(range(rows), size):
            for col_set in combinations(range(cols), size):
                if matrix.extract(list(row_set), list(col_set)).det() not in (-1, 0, 1):
                    return False
    return True
