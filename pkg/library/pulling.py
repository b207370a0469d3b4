#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Hudson's pulling triangulation of the boundary of P_n.

A pulling order ranks all n(n+1) arrows; the least arrow is pulled first.
"""

from dataclasses import dataclass
from itertools import combinations
from random import Random

from cyclohedron_common import CyclohedronDomainError, CyclohedronValidationError, require_positive_n
from legendre import enumerate_facets, face_facets, is_simplex_set, maximal_faces_containing
from representation import Arrow, all_arrows


ORDER_SCHEMES = ('lex', 'revlex-backward-first', 'simion-canonical', 'random', 'random-simion')


class PullOrder(object):
    def __init__(self, n, arrows):
        require_positive_n(n, 'PullOrder')
        arrows = list(arrows)
        if len(arrows) != n * (n + 1) or set(arrows) != set(all_arrows(n)):
            raise CyclohedronValidationError('PullOrder', "Order must list each of the %s arrows of n=%s exactly once" % (
                n * (n + 1), n))
        self.n = n
        self.arrows = tuple(arrows)
        self.rank = {a: position for position, a in enumerate(arrows)}

    def least(self, arrows):
        return min(arrows, key=self.rank.__getitem__)

    def to_json(self):
        return [a.to_json() for a in self.arrows]

    @classmethod
    def from_json(cls, n, data):
        if not isinstance(data, (list, tuple)):
            raise CyclohedronValidationError('PullOrder', "Expected a list of [tail, head] pairs")
        return cls(n, [Arrow.from_json(n, item, position) for position, item in enumerate(data)])

    def __eq__(self, other):
        return isinstance(other, PullOrder) and self.arrows == other.arrows

    def __hash__(self):
        return hash(self.arrows)


def _span_length(a):
    return abs(a.tail - a.head)


def _interval(a):
    return set(range(a.span[0], a.span[1] + 1))


def _must_precede(a, b):
    """a is forced before b by the Simion order conditions."""
    if a.backward and b.forward:
        return True
    if a.backward != b.backward:
        return False
    return _interval(a) < _interval(b)


def make_order(n, scheme, rng=None, explicit=None):
    require_positive_n(n)
    arrows = all_arrows(n)
    if explicit is not None:
        return PullOrder(n, explicit)
    if scheme == 'lex':
        return PullOrder(n, sorted(arrows, key=lambda a: (a.tail, a.head)))
    if scheme == 'revlex-backward-first':
        return PullOrder(n, sorted(arrows, key=lambda a: (a.forward, -a.tail, -a.head)))
    if scheme in ('simion-canonical', 'simion'):
        return PullOrder(n, sorted(arrows, key=lambda a: (a.forward, _span_length(a), a.tail, a.head)))
    if scheme == 'random':
        return random_order(n, rng or Random(0))
    if scheme == 'random-simion':
        return random_simion_order(n, rng or Random(0))
    raise CyclohedronValidationError('PullOrder', "Unknown order scheme '%s', expected one of %s" % (
        scheme, ', '.join(ORDER_SCHEMES)))


def random_order(n, rng):
    arrows = all_arrows(n)
    rng.shuffle(arrows)
    return PullOrder(n, arrows)


def random_simion_order(n, rng):
    """A random linear extension of the Simion order conditions: repeatedly
    pick uniformly among the arrows whose forced predecessors are placed."""
    remaining = all_arrows(n)
    placed = []
    while remaining:
        available = [a for a in remaining if not any(_must_precede(b, a) for b in remaining if b != a)]
        choice = rng.choice(available)
        placed.append(choice)
        remaining.remove(choice)
    return PullOrder(n, placed)


def is_valid_simion_order(order):
    for a, b in combinations(order.arrows, 2):
        # a precedes b
        if _must_precede(b, a):
            return False
    return True


@dataclass(frozen=True)
class SimplicialComplex(object):
    """Downward closure of its facets; vertices can be any sortable values."""
    facets: frozenset
    n: int = None

    def __post_init__(self):
        object.__setattr__(self, 'facets', frozenset(frozenset(f) for f in self.facets))

    @property
    def vertices(self):
        return frozenset().union(*self.facets) if self.facets else frozenset()

    @property
    def dimension(self):
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self):
        return len({len(f) for f in self.facets}) <= 1

    def faces(self):
        seen = {frozenset()}
        for facet in self.facets:
            members = sorted(facet)
            for size in range(1, len(members) + 1):
                seen.update(frozenset(c) for c in combinations(members, size))
        return seen

    def f_vector(self):
        counts = [0] * (self.dimension + 2)
        for face in self.faces():
            counts[len(face)] += 1
        return tuple(counts)

    def edges(self):
        return {face for face in self.faces() if len(face) == 2}

    def contains(self, simplex):
        simplex = frozenset(simplex)
        return any(simplex <= facet for facet in self.facets)

    def is_flag(self):
        return all(len(s) == 2 for s in minimal_nonfaces(self))

    def to_json(self):
        return {'n': self.n, 'facets': sorted([sorted(_json(v) for v in f) for f in self.facets])}


def _json(value):
    return value.to_json() if hasattr(value, 'to_json') else value


def _triangulate_face(face, order, memo):
    """Maximal simplices of the pulling triangulation of a single face."""
    if face in memo:
        return memo[face]
    if face.is_simplex:
        simplices = [face.arrows()]
    else:
        v = order.least(face.arrows())
        simplices = []
        for subface in face_facets(face):
            if subface.contains(v):
                continue
            simplices.extend(s | {v} for s in _triangulate_face(subface, order, memo))
    memo[face] = simplices
    return simplices


def pull_triangulate(n, order):
    require_positive_n(n)
    if not isinstance(order, PullOrder) or order.n != n:
        raise CyclohedronValidationError('PullOrder', "Order does not belong to n=%s" % n)
    memo = {}
    remaining = set(enumerate_facets(n))
    simplices = set()
    # pull vertices in order; the star of each pulled vertex is coned off and
    # the rest of the complex is triangulated with the remaining order
    for v in order.arrows:
        if not remaining:
            break
        star = [face for face in maximal_faces_containing(v, n) if face in remaining]
        for face in star:
            simplices.update(_triangulate_face(face, order, memo))
            remaining.discard(face)
    return SimplicialComplex(frozenset(simplices), n)


def minimal_nonfaces(complex_):
    faces = complex_.faces()
    vertices = sorted(complex_.vertices)
    found = set()
    for face in faces:
        for x in vertices:
            if x in face:
                continue
            candidate = face | {x}
            if candidate in faces or candidate in found:
                continue
            if all(candidate - {y} in faces for y in candidate):
                found.add(candidate)
    return found


def square_diagonal(x1, x2, y1, y2, order):
    if len({x1, x2, y1, y2}) != 4:
        raise CyclohedronDomainError("Square needs four distinct nodes, got %s" % ((x1, x2, y1, y2),))
    n = order.n
    first = order.least([Arrow(n, x1, y1), Arrow(n, x1, y2), Arrow(n, x2, y2), Arrow(n, x2, y1)])
    if first in (Arrow(n, x1, y1), Arrow(n, x2, y2)):
        return frozenset([Arrow(n, x1, y1), Arrow(n, x2, y2)])
    return frozenset([Arrow(n, x1, y2), Arrow(n, x2, y1)])


# Relative order of x1 < x2, y1 < y2 -> the diagonal that is an edge under
# every valid Simion order.
SQUARE_PATTERNS = {
    'x1 x2 y1 y2': 'crossed',
    'x1 y1 x2 y2': 'crossed',
    'x1 y1 y2 x2': 'parallel',
    'y1 x1 x2 y2': 'parallel',
    'y1 x1 y2 x2': 'parallel',
    'y1 y2 x1 x2': 'crossed',
}


def pattern_edge(x1, x2, y1, y2, n):
    """Edge predicted for the square {x1,x2} x {y1,y2}; 'parallel' is
    {(x1,y1),(x2,y2)} and 'crossed' is {(x1,y2),(x2,y1)}."""
    x1, x2 = sorted((x1, x2))
    y1, y2 = sorted((y1, y2))
    names = {x1: 'x1', x2: 'x2', y1: 'y1', y2: 'y2'}
    pattern = ' '.join(names[node] for node in sorted(names))
    if SQUARE_PATTERNS[pattern] == 'parallel':
        return frozenset([Arrow(n, x1, y1), Arrow(n, x2, y2)])
    return frozenset([Arrow(n, x1, y2), Arrow(n, x2, y1)])


def check_triangulation(complex_):
    """Geometric consistency: each simplex is a forest inside some face of P_n."""
    problems = []
    for facet in complex_.facets:
        tails = {a.tail for a in facet}
        heads = {a.head for a in facet}
        if tails & heads:
            problems.append(('not in a face', sorted(facet)))
        elif not is_simplex_set(facet):
            problems.append(('not a simplex', sorted(facet)))
        elif len(facet) != complex_.n:
            problems.append(('wrong size', sorted(facet)))
    return problems
