#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Simion's type-B associahedron as a flag complex on the arrows of P_n.

Faces are the cliques of the compatibility graph; a facet carries exactly one
diameter arrow whose index is the facet type.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

import networkx as nx

from cyclohedron_common import (CyclohedronDomainError, CyclohedronInvariantError, CyclohedronValidationError,
                                check_scale, require_positive_n)
from representation import Arrow, all_arrows, arrows_compatible, arrows_cross, spans_nest, spans_weakly_nest


def _ambient(arrows):
    ns = {a.n for a in arrows}
    if len(ns) > 1:
        raise CyclohedronDomainError("Arrows belong to different n: %s" % sorted(ns))
    return ns.pop() if ns else None


def compatibility_graph(n):
    require_positive_n(n)
    graph = nx.Graph()
    arrows = all_arrows(n)
    graph.add_nodes_from(arrows)
    graph.add_edges_from((a, b) for a, b in combinations(arrows, 2) if arrows_compatible(a, b))
    return graph


def is_face(s):
    s = frozenset(s)
    _ambient(s)
    return all(arrows_compatible(a, b) for a, b in combinations(s, 2))


def enumerate_faces(n, dim=None):
    """All faces of the complex, the empty face first, in order of size."""
    require_positive_n(n)
    if dim is not None and not -1 <= dim <= n - 1:
        raise CyclohedronDomainError("Face dimension must lie in -1..%s, got %s" % (n - 1, dim))
    if dim is None or dim == -1:
        yield frozenset()
        if dim == -1:
            return
    for clique in nx.enumerate_all_cliques(compatibility_graph(n)):
        if dim is None or len(clique) == dim + 1:
            yield frozenset(clique)
        elif len(clique) > dim + 1:
            return


def enumerate_facets(n):
    return enumerate_faces(n, n - 1)


def diameter_arrow(k, n):
    require_positive_n(n)
    if not 1 <= k <= n + 1:
        raise CyclohedronDomainError("Facet type must lie in 1..%s, got %s" % (n + 1, k))
    if k == 1:
        return Arrow(n, n + 1, 1)
    return Arrow(n, k - 1, k)


def _diameter_types(s, n):
    return [k for k in range(1, n + 2) if diameter_arrow(k, n) in s]


def is_facet(s):
    s = frozenset(s)
    n = _ambient(s)
    return n is not None and len(s) == n and is_face(s)


def satisfies_facet_conditions(s):
    """Independent characterisation of facets, condition by condition."""
    s = frozenset(s)
    n = _ambient(s)
    if n is None or len(s) != n:
        return False
    types = _diameter_types(s, n)
    if len(types) != 1:
        return False
    k = types[0]
    forward = [a for a in s if a.forward]
    backward = [a for a in s if a.backward]
    if any(spans_nest(b, f) for b in backward for f in forward):
        return False
    if k == 1 and forward:
        return False
    if not all(spans_weakly_nest(a, b) for a, b in combinations(forward, 2)):
        return False
    if k > 1 and not all(a.tail <= k - 1 and a.head >= k for a in forward):
        return False
    if {a.head for a in s} & {a.tail for a in s}:
        return False
    return not any(arrows_cross(a, b) for a, b in combinations(s, 2))


def facet_type(s):
    s = frozenset(s)
    n = _ambient(s)
    if n is None:
        raise CyclohedronInvariantError("The empty face has no type")
    if len(s) != n:
        raise CyclohedronInvariantError("A face with %s arrows is not a facet for n=%s" % (len(s), n))
    types = _diameter_types(s, n)
    if len(types) != 1:
        raise CyclohedronInvariantError("Expected exactly one diameter arrow, found %s in %s" % (
            len(types), sorted(str(a) for a in s)))
    return types[0]


def facets_by_type(n, unsafe_scale=False):
    check_scale('enumeration', n, unsafe_scale)
    classes = {k: [] for k in range(1, n + 2)}
    for facet in enumerate_facets(n):
        classes[facet_type(facet)].append(facet)
    return classes


def link_of_diameter(k, n, unsafe_scale=False):
    """Facets of the link of the diameter {k, k+n+1}."""
    d = diameter_arrow(k, n)
    return [facet - {d} for facet in facets_by_type(n, unsafe_scale)[k]]


@dataclass(frozen=True)
class FaceVector(object):
    n: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.n + 1 or self.entries[0] != 1:
            raise CyclohedronValidationError('FaceVector', "Expected f_-1 = 1 followed by %s face counts, got %s" % (
                self.n, self.entries))

    @property
    def proper(self):
        """(f_0, ..., f_(n-1))."""
        return self.entries[1:]

    @property
    def total(self):
        return sum(self.entries)

    def f(self, j):
        return self.entries[j + 1]

    def to_json(self):
        return {'n': self.n, 'f': list(self.entries)}


def f_vector(n, mode='formula', unsafe_scale=False):
    require_positive_n(n)
    if mode == 'formula':
        return FaceVector(n, tuple(comb(n + j, j) * comb(n, j) for j in range(n + 1)))
    if mode == 'enumerated':
        check_scale('enumeration', n, unsafe_scale)
        counts = [0] * (n + 1)
        for face in enumerate_faces(n):
            counts[len(face)] += 1
        return FaceVector(n, tuple(counts))
    raise CyclohedronValidationError('FaceVector', "Unknown mode '%s', expected formula or enumerated" % mode)


def h_from_f(entries):
    """h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_(i-1)."""
    d = len(entries) - 1
    return tuple(sum((-1) ** (k - i) * comb(d - i, k - i) * entries[i] for i in range(k + 1))
                 for k in range(d + 1))


def h_vector(n, mode='formula', unsafe_scale=False):
    require_positive_n(n)
    if mode == 'formula':
        return tuple(comb(n, i) ** 2 for i in range(n + 1))
    if mode == 'from_f':
        return h_from_f(f_vector(n, 'formula').entries)
    if mode == 'enumerated':
        return h_from_f(f_vector(n, 'enumerated', unsafe_scale).entries)
    raise CyclohedronValidationError('FaceVector', "Unknown mode '%s', expected formula, from_f or enumerated" % mode)
