#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""B-diagonals of the centrally symmetric (2n+2)-gon, their arc and arrow
representations, and the noncrossing predicate on arrows.

Polygon labels run 1..2n+2 with the bar of i identified with i+n+1.
"""

from dataclasses import dataclass
from numbers import Rational

from cyclohedron_common import (CyclohedronDomainError, CyclohedronValidationError,
                                require_label, require_positive_n)


def _label(x, n):
    return (x - 1) % (2 * n + 2) + 1


def _bar(x, n):
    return _label(x + n + 1, n)


@dataclass(frozen=True, order=True)
class Arrow(object):
    n: int
    tail: int
    head: int

    def __post_init__(self):
        require_positive_n(self.n, 'Arrow')
        for field in ('tail', 'head'):
            value = getattr(self, field)
            if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= self.n + 1:
                raise CyclohedronValidationError('Arrow', "Field '%s' must be a node in 1..%s, got %r" % (
                    field, self.n + 1, value))
        if self.tail == self.head:
            raise CyclohedronValidationError('Arrow', "Arrow (%s,%s) is a loop" % (self.tail, self.head))

    @property
    def backward(self):
        return self.tail > self.head

    @property
    def forward(self):
        return self.tail < self.head

    @property
    def span(self):
        return min(self.tail, self.head), max(self.tail, self.head)

    def endpoints(self):
        return {self.tail, self.head}

    def to_json(self):
        return [self.tail, self.head]

    @classmethod
    def from_json(cls, n, data, position=None):
        where = '' if position is None else ' at position %s' % position
        try:
            tail, head = data
        except (TypeError, ValueError):
            raise CyclohedronValidationError('Arrow', "Expected a [tail, head] pair%s, got %r" % (where, data))
        return cls(n, require_label(tail, 'Arrow', 'Tail' + where), require_label(head, 'Arrow', 'Head' + where))

    def __str__(self):
        return '(%s,%s)' % (self.tail, self.head)


def all_arrows(n):
    require_positive_n(n)
    return [Arrow(n, t, h) for t in range(1, n + 2) for h in range(1, n + 2) if t != h]


class BDiagonal(object):
    kind = None

    @staticmethod
    def from_json(n, data):
        if not isinstance(data, dict) or data.get('kind') not in ('diameter', 'pair'):
            raise CyclohedronValidationError('BDiagonal', "Expected {'kind': 'diameter'|'pair', ...}, got %r" % (data,))
        try:
            if data['kind'] == 'diameter':
                return Diameter(n, require_label(data['i'], 'Diameter', "Field 'i'"))
            return SymmetricPair.of(n, require_label(data['u'], 'SymmetricPair', "Field 'u'"),
                                   require_label(data['v'], 'SymmetricPair', "Field 'v'"))
        except KeyError as err:
            raise CyclohedronValidationError('BDiagonal', "Missing field %s" % err)


@dataclass(frozen=True, order=True)
class Diameter(BDiagonal):
    n: int
    i: int

    kind = 'diameter'

    def __post_init__(self):
        require_positive_n(self.n, 'Diameter')
        if not isinstance(self.i, int) or not 1 <= self.i <= self.n + 1:
            raise CyclohedronValidationError('Diameter', "Field 'i' must be in 1..%s, got %r" % (self.n + 1, self.i))

    def diagonals(self):
        return frozenset([frozenset([self.i, self.i + self.n + 1])])

    def to_json(self):
        return {'kind': self.kind, 'i': self.i}


@dataclass(frozen=True, order=True)
class SymmetricPair(BDiagonal):
    """The pair {{u,v},{u+n+1,v+n+1}}; u is the least of the four endpoints
    lying in 1..n+1 and v is its partner."""
    n: int
    u: int
    v: int

    kind = 'pair'

    def __post_init__(self):
        require_positive_n(self.n, 'SymmetricPair')
        size = 2 * self.n + 2
        if not 1 <= self.u <= self.n + 1 or not 1 <= self.v <= size:
            raise CyclohedronValidationError('SymmetricPair', "Labels (%s,%s) out of range for n=%s" % (self.u, self.v, self.n))
        gap = (self.v - self.u) % size
        if gap in (0, 1, size - 1):
            raise CyclohedronValidationError('SymmetricPair', "{%s,%s} is not a diagonal" % (self.u, self.v))
        if gap == self.n + 1:
            raise CyclohedronValidationError('SymmetricPair', "{%s,%s} is a diameter" % (self.u, self.v))
        if (self.u, self.v) != self._canonical(self.n, self.u, self.v):
            raise CyclohedronValidationError('SymmetricPair', "(%s,%s) is not in canonical form" % (self.u, self.v))

    @staticmethod
    def _canonical(n, a, b):
        a, b = _label(a, n), _label(b, n)
        candidates = [(a, b), (b, a), (_bar(a, n), _bar(b, n)), (_bar(b, n), _bar(a, n))]
        return min(c for c in candidates if c[0] <= n + 1)

    @classmethod
    def of(cls, n, a, b):
        require_positive_n(n, 'SymmetricPair')
        u, v = cls._canonical(n, a, b)
        return cls(n, u, v)

    def diagonals(self):
        return frozenset([frozenset([self.u, self.v]),
                          frozenset([_bar(self.u, self.n), _bar(self.v, self.n)])])

    def to_json(self):
        return {'kind': self.kind, 'u': self.u, 'v': self.v}


def all_bdiagonals(n):
    require_positive_n(n)
    size = 2 * n + 2
    pairs = set()
    for u in range(1, n + 2):
        for v in range(1, size + 1):
            if (v - u) % size in (0, 1, size - 1, n + 1):
                continue
            pairs.add(SymmetricPair.of(n, u, v))
    return [Diameter(n, i) for i in range(1, n + 2)] + sorted(pairs)


@dataclass(frozen=True)
class CircularArc(object):
    """Closed arc of the circle R/mZ from start, increasing, of the given length."""
    circumference: int
    start: Rational
    length: Rational

    def __post_init__(self):
        m = self.circumference
        if not isinstance(m, int) or m < 1:
            raise CyclohedronValidationError('CircularArc', "circumference must be a positive integer, got %r" % (m,))
        if not 0 < self.start <= m:
            raise CyclohedronValidationError('CircularArc', "start %s outside (0, %s]" % (self.start, m))
        if not 0 < self.length < m:
            raise CyclohedronValidationError('CircularArc', "length %s outside (0, %s)" % (self.length, m))

    @property
    def end(self):
        return (self.start + self.length - 1) % self.circumference + 1

    def contains(self, other):
        self._check_same_circle(other)
        return (other.start - self.start) % self.circumference + other.length <= self.length

    def is_disjoint(self, other):
        self._check_same_circle(other)
        m = self.circumference
        return (other.start - self.start) % m > self.length and (self.start - other.start) % m > other.length

    def nested_or_disjoint(self, other):
        return self.contains(other) or other.contains(self) or self.is_disjoint(other)

    def shifted(self, k):
        m = self.circumference
        return CircularArc(m, (self.start + k - 1) % m + 1, self.length)

    def _check_same_circle(self, other):
        if other.circumference != self.circumference:
            raise CyclohedronDomainError("Arcs live on circles of different circumference (%s, %s)" % (
                self.circumference, other.circumference))

    def to_json(self):
        return {'start': self.start, 'len': self.length, 'mod': self.circumference}


@dataclass(frozen=True)
class ArcPair(object):
    n: int
    arcs: tuple

    def __post_init__(self):
        first, second = self.arcs
        if first.circumference != 2 * self.n + 2 or first.shifted(self.n + 1) != second:
            raise CyclohedronValidationError('ArcPair', "Arcs %s are not a centrally symmetric pair" % (self.arcs,))

    @classmethod
    def of(cls, n, start, length):
        size = 2 * n + 2
        first = CircularArc(size, _label(start, n), length)
        second = first.shifted(n + 1)
        return cls(n, tuple(sorted((first, second), key=lambda arc: arc.start)))

    def to_json(self):
        return [arc.to_json() for arc in self.arcs]


def pi(x, n):
    require_positive_n(n)
    if not 0 < x <= 2 * n + 2:
        raise CyclohedronDomainError("Point %s is outside the fundamental domain (0, %s]" % (x, 2 * n + 2))
    if x <= n + 1:
        return x
    return x - (n + 1)


def arc_of_bdiagonal(d):
    if not isinstance(d, BDiagonal):
        raise CyclohedronValidationError('BDiagonal', "Expected a B-diagonal, got %r" % (d,))
    n = d.n
    if isinstance(d, Diameter):
        return ArcPair.of(n, d.i, n)
    size = 2 * n + 2
    gap = (d.v - d.u) % size
    # the arc runs along the short side of the diagonal
    if gap <= n:
        return ArcPair.of(n, d.u, gap - 1)
    return ArcPair.of(n, d.v, size - gap - 1)


def arrow_of_bdiagonal(d):
    pair = arc_of_bdiagonal(d)
    n = d.n
    arc = pair.arcs[0]
    return Arrow(n, (arc.start + arc.length - 1) % (n + 1) + 1, arc.start)


def bdiagonal_of_arrow(a):
    n = a.n
    length = (a.tail - a.head) % (n + 1)
    if length == n:
        return Diameter(n, a.head)
    return SymmetricPair.of(n, a.head, a.head + length + 1)


def rotate_arc_pair(pair, k):
    return ArcPair.of(pair.n, pair.arcs[0].start + k, pair.arcs[0].length)


def image_arc(a):
    return CircularArc(a.n + 1, a.head, (a.tail - a.head) % (a.n + 1))


def _check_pair(a, b):
    if a.n != b.n:
        raise CyclohedronDomainError("Arrows %s and %s have different ambient n (%s, %s)" % (a, b, a.n, b.n))
    if a == b:
        raise CyclohedronDomainError("Compatibility of arrow %s with itself is undefined" % (a,))


def arrows_compatible(a, b):
    _check_pair(a, b)
    return image_arc(a).nested_or_disjoint(image_arc(b))


def arrows_cross(a, b):
    """Spans interleave; only meaningful for four distinct endpoints."""
    if len(a.endpoints() | b.endpoints()) < 4:
        return False
    lo, hi = a.span
    inside = [lo < x < hi for x in (b.tail, b.head)]
    return inside[0] != inside[1]


def spans_nest(outer, inner):
    """The span of outer strictly contains the span of inner."""
    if len(outer.endpoints() | inner.endpoints()) < 4:
        return False
    return outer.span[0] < inner.span[0] and inner.span[1] < outer.span[1]


def spans_weakly_nest(a, b):
    (a_lo, a_hi), (b_lo, b_hi) = a.span, b.span
    return (a_lo <= b_lo and b_hi <= a_hi) or (b_lo <= a_lo and a_hi <= b_hi)


def arrows_compatible_by_cases(a, b):
    _check_pair(a, b)
    if a.head == b.tail or b.head == a.tail:
        return False
    if a.head == b.head or a.tail == b.tail:
        return True
    if a.backward and b.backward:
        return not arrows_cross(a, b)
    if a.forward and b.forward:
        return spans_nest(a, b) or spans_nest(b, a)
    backward, forward = (a, b) if a.backward else (b, a)
    return not (spans_nest(backward, forward) or arrows_cross(backward, forward))
