#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Bijection between valid digraphs (faces of the type-B associahedron) and
balanced Delannoy words over U, D and H.

Valid digraphs live on any finite node set of positive integers. Validity
only depends on the relative order of the nodes, so it is checked after
compressing the node set to 1..|V|.
"""

from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from math import comb

import networkx as nx

from cyclohedron_common import (CyclohedronDomainError, CyclohedronPreconditionError,
                                CyclohedronValidationError, require_label, require_positive_n)
from representation import Arrow, arrows_compatible
from simion import enumerate_faces


class Digraph(object):
    def __init__(self, nodes, arrows=()):
        nodes = tuple(sorted(set(nodes)))
        if not nodes:
            raise CyclohedronValidationError('Digraph', "A digraph needs at least one node")
        if any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in nodes):
            raise CyclohedronValidationError('Digraph', "Nodes must be positive integers, got %s" % (nodes,))
        checked = set()
        for position, arrow in enumerate(arrows):
            try:
                t, h = arrow
            except (TypeError, ValueError):
                raise CyclohedronValidationError('Digraph', "Arrow at position %s is not a [tail, head] pair: %r" % (
                    position, arrow))
            checked.add((require_label(t, 'Digraph', 'Tail of arrow at position %s' % position),
                         require_label(h, 'Digraph', 'Head of arrow at position %s' % position)))
        arrows = frozenset(checked)
        members = set(nodes)
        for t, h in sorted(arrows):
            if t not in members or h not in members:
                raise CyclohedronValidationError('Digraph', "Arrow (%s,%s) leaves the node set" % (t, h))
            if t == h:
                raise CyclohedronValidationError('Digraph', "Arrow (%s,%s) is a loop" % (t, h))
        self.nodes = nodes
        self.arrows = arrows

    @classmethod
    def on_range(cls, size, arrows=()):
        return cls(range(1, size + 1), arrows)

    @property
    def forward_arrows(self):
        return frozenset((t, h) for t, h in self.arrows if t < h)

    @property
    def backward_arrows(self):
        return frozenset((t, h) for t, h in self.arrows if t > h)

    def restrict(self, nodes):
        nodes = set(nodes) & set(self.nodes)
        return Digraph(nodes, [(t, h) for t, h in self.arrows if t in nodes and h in nodes])

    def compressed(self):
        """Arrows relabelled onto 1..|V|, as arrows of P_(|V|-1)."""
        position = {x: i + 1 for i, x in enumerate(self.nodes)}
        n = len(self.nodes) - 1
        return [Arrow(n, position[t], position[h]) for t, h in sorted(self.arrows)]

    def is_valid(self):
        if len(self.nodes) == 1:
            return not self.arrows
        return all(arrows_compatible(a, b) for a, b in combinations(self.compressed(), 2))

    def validate(self):
        if not self.is_valid():
            raise CyclohedronValidationError('Digraph', "Arrows %s on nodes %s do not form a valid digraph" % (
                sorted(self.arrows), list(self.nodes)))
        return self

    def to_json(self):
        return {'nodes': list(self.nodes), 'arrows': [list(a) for a in sorted(self.arrows)]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or 'nodes' not in data:
            raise CyclohedronValidationError('Digraph', "Expected {'nodes': [...], 'arrows': [[t, h], ...]}")
        try:
            return cls(data['nodes'], [tuple(a) for a in data.get('arrows', [])])
        except (TypeError, ValueError):
            raise CyclohedronValidationError('Digraph', "Malformed digraph %r" % (data,))

    def __eq__(self, other):
        return isinstance(other, Digraph) and (self.nodes, self.arrows) == (other.nodes, other.arrows)

    def __hash__(self):
        return hash((self.nodes, self.arrows))

    def __repr__(self):
        return 'Digraph(%s, %s)' % (list(self.nodes), sorted(self.arrows))


class DelannoyWord(str):
    """A word over U, D, H; H has length two."""

    def __new__(cls, letters=''):
        letters = str(letters)
        for position, letter in enumerate(letters):
            if letter not in 'UDH':
                raise CyclohedronValidationError('DelannoyWord', "Invalid letter %r at position %s" % (letter, position))
        return super(DelannoyWord, cls).__new__(cls, letters)

    @property
    def weighted_length(self):
        return len(self) + self.count('H')

    @property
    def ups(self):
        return self.count('U')

    def is_balanced(self):
        return self.count('U') == self.count('D')

    def is_schroeder(self):
        height = 0
        for letter in self:
            height += _STEP[letter]
            if height < 0:
                return False
        return height == 0


_STEP = {'U': 1, 'D': -1, 'H': 0}
_LETTER_RANK = {'D': 0, 'U': 1, 'H': 2}


@total_ordering
@dataclass(frozen=True)
class IndexedLetter(object):
    """Ordered as D_x < U_x < H_x < D_(x+1)."""
    letter: str
    index: int

    def __post_init__(self):
        if self.letter not in _LETTER_RANK:
            raise CyclohedronValidationError('IndexedLetter', "Invalid letter %r" % (self.letter,))

    def sort_key(self):
        return self.index, _LETTER_RANK[self.letter]

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def to_json(self):
        return {'letter': self.letter, 'index': self.index}

    def __str__(self):
        return '%s_%s' % (self.letter, self.index)


def _sp(a):
    if len(a.nodes) == 1:
        return ''
    v = a.nodes[0]
    tails = [t for t, h in a.arrows if h == v]
    if not tails:
        return 'H' + _sp(a.restrict(a.nodes[1:]))
    w = min(tails)
    inner = [x for x in a.nodes if v < x <= w]
    outer = [x for x in a.nodes if not v < x <= w]
    return 'U' + _sp(a.restrict(inner)) + 'D' + _sp(a.restrict(outer))


def sp(a):
    if a.forward_arrows:
        raise CyclohedronDomainError("Schroeder encoding needs backward arrows only, got %s" % sorted(a.forward_arrows))
    a.validate()
    return DelannoyWord(_sp(a))


def _check_word_length(word, nodes):
    if word.weighted_length != 2 * (len(nodes) - 1):
        raise CyclohedronValidationError('DelannoyWord', "Word %r has length %s, expected %s for %s nodes" % (
            str(word), word.weighted_length, 2 * (len(nodes) - 1), len(nodes)))


def _matching_down(word):
    """Position of the D closing the leading U."""
    height = 0
    for position, letter in enumerate(word):
        height += _STEP[letter]
        if height == 0:
            return position
    raise CyclohedronValidationError('DelannoyWord', "Unmatched U at position 0 of %r" % str(word))


def _sp_inverse(word, nodes):
    if not word:
        return set()
    if word[0] == 'H':
        return _sp_inverse(word[1:], nodes[1:])
    close = _matching_down(word)
    beta, gamma = DelannoyWord(word[1:close]), DelannoyWord(word[close + 1:])
    p = beta.weighted_length // 2
    arrows = _sp_inverse(beta, nodes[1:p + 2])
    arrows |= _sp_inverse(gamma, nodes[:1] + nodes[p + 2:])
    arrows.add((nodes[p + 1], nodes[0]))
    return arrows


def sp_inverse(word, nodes):
    word = DelannoyWord(word)
    nodes = sorted(set(nodes))
    if not word.is_schroeder():
        raise CyclohedronValidationError('DelannoyWord', "Word %r is not a Schroeder word" % str(word))
    _check_word_length(word, nodes)
    return Digraph(nodes, _sp_inverse(word, nodes))


def _tw(a):
    v, w = a.nodes[0], a.nodes[-1]
    rest = a.restrict(a.nodes[1:])
    twisted = set(rest.arrows) | {(w, z) for t, z in a.arrows if t == v and z != w}
    return Digraph(rest.nodes, twisted)


def tw(a):
    if len(a.nodes) < 2 or (a.nodes[0], a.nodes[-1]) not in a.arrows:
        raise CyclohedronPreconditionError("Twisting needs the forward arrow from the least to the largest node")
    return _tw(a)


def tw_inverse(b, v):
    if v >= b.nodes[0]:
        raise CyclohedronDomainError("Node %s is not below every node of %s" % (v, list(b.nodes)))
    w = b.nodes[-1]
    # arrows out of w turn back into arrows out of v; forward arrows into w stay
    kept = {(t, h) for t, h in b.arrows if t != w}
    untwisted = {(v, z) for t, z in b.arrows if t == w}
    return Digraph((v,) + b.nodes, kept | untwisted | {(v, w)})


def _outermost_forward(a):
    forward = a.forward_arrows
    x = min(t for t, h in forward)
    y = max(h for t, h in forward)
    return x, y


def _dp(a):
    if not a.forward_arrows:
        return _sp(a)
    x, y = _outermost_forward(a)
    left = a.restrict(z for z in a.nodes if z <= x)
    middle = a.restrict(z for z in a.nodes if x <= z <= y)
    right = a.restrict(z for z in a.nodes if z >= y)
    return _sp(left) + 'D' + _dp(_tw(middle)) + 'U' + _sp(right)


def dp(a):
    a.validate()
    return DelannoyWord(_dp(a))


def _first_dip(word):
    height = 0
    for position, letter in enumerate(word):
        height += _STEP[letter]
        if height < 0:
            return position
    return None


def _last_rise(word):
    height = 0
    for position in range(len(word) - 1, -1, -1):
        height += _STEP[word[position]]
        if height > 0:
            return position
    return None


def _dp_inverse(word, nodes):
    if word.is_schroeder():
        return _sp_inverse(word, nodes)
    dip, rise = _first_dip(word), _last_rise(word)
    beta = DelannoyWord(word[:dip])
    gamma = DelannoyWord(word[dip + 1:rise])
    delta = DelannoyWord(word[rise + 1:])
    p = beta.weighted_length // 2
    r = delta.weighted_length // 2
    x_at, y_at = p, len(nodes) - 1 - r
    middle = Digraph(nodes[x_at + 1:y_at + 1], _dp_inverse(gamma, nodes[x_at + 1:y_at + 1]))
    arrows = set(tw_inverse(middle, nodes[x_at]).arrows)
    arrows |= _sp_inverse(beta, nodes[:x_at + 1])
    arrows |= _sp_inverse(delta, nodes[y_at:])
    return arrows


def dp_inverse(word, nodes):
    word = DelannoyWord(word)
    nodes = sorted(set(nodes))
    if not word.is_balanced():
        raise CyclohedronValidationError('DelannoyWord', "Word %r is not balanced (%s U, %s D)" % (
            str(word), word.count('U'), word.count('D')))
    _check_word_length(word, nodes)
    return Digraph(nodes, _dp_inverse(word, nodes))


def weak_components(a):
    graph = nx.Graph()
    graph.add_nodes_from(a.nodes)
    graph.add_edges_from(a.arrows)
    return sorted((frozenset(c) for c in nx.connected_components(graph)), key=min)


def rewire_forward_arrows(a):
    """Each forward star at x collapses onto its longest arrow (x, w), which is
    dropped, and the shorter arrows (x, y) become (w, y). The result need not
    be valid."""
    arrows = set(a.backward_arrows)
    for x in sorted({t for t, h in a.forward_arrows}):
        w = max(h for t, h in a.forward_arrows if t == x)
        arrows.update((w, y) for t, y in a.forward_arrows if t == x and y != w)
    return Digraph(a.nodes, arrows)


def multiset_of_digraph(a):
    a.validate()
    letters = []
    top = a.nodes[-1]
    letters.extend(IndexedLetter('H', max(c)) for c in weak_components(a) if max(c) < top)
    for x in sorted({t for t, h in a.forward_arrows}):
        w = max(h for t, h in a.forward_arrows if t == x)
        letters.append(IndexedLetter('D', x))
        letters.append(IndexedLetter('U', w))
    rewired = rewire_forward_arrows(a)
    for y in sorted({h for t, h in rewired.arrows}):
        tails = sorted(t for t, h in rewired.arrows if h == y)
        letters.append(IndexedLetter('U', y))
        letters.extend(IndexedLetter('D', x) for x in tails)
        letters.extend(IndexedLetter('U', x) for x in tails[:-1])
    return sorted(letters)


def word_of_multiset(letters):
    return DelannoyWord(''.join(item.letter for item in sorted(letters)))


def count_paths(n, k=None):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise CyclohedronDomainError("n must be a nonnegative integer, got %r" % (n,))
    if k is None:
        return sum(comb(n + j, j) * comb(n, j) for j in range(n + 1))
    if not 0 <= k <= n:
        raise CyclohedronDomainError("k must lie in 0..%s, got %s" % (n, k))
    return comb(n + k, k) * comb(n, k)


def enumerate_valid_digraphs(size, k=None):
    """All valid digraphs on the nodes 1..size, optionally with k arrows."""
    if size == 1:
        if k in (None, 0):
            yield Digraph.on_range(1)
        return
    require_positive_n(size - 1)
    dim = None if k is None else k - 1
    for face in enumerate_faces(size - 1, dim):
        yield Digraph.on_range(size, [(a.tail, a.head) for a in face])


def enumerate_balanced_words(n, k=None):
    """Balanced words of length 2n in lexicographic order, optionally with k ups."""
    def extend(prefix, remaining, height, ups):
        if abs(height) > remaining:
            return
        if remaining == 0:
            if k is None or ups == k:
                yield DelannoyWord(prefix)
            return
        yield from extend(prefix + 'D', remaining - 1, height - 1, ups)
        if remaining >= 2:
            yield from extend(prefix + 'H', remaining - 2, height, ups)
        yield from extend(prefix + 'U', remaining - 1, height + 1, ups + 1)

    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise CyclohedronDomainError("n must be a nonnegative integer, got %r" % (n,))
    return extend('', 2 * n, 0, 0)