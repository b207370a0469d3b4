#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""The cyclic action of Z_(n+1) on arrows and Cho's decomposition of P_n into
the rotated copies of P_n^+."""

from math import comb

from cyclohedron_common import CyclohedronDomainError, check_scale, require_positive_n
from legendre import coned_facet_volume
from representation import Arrow
from simion import enumerate_facets, facet_type


def zeta_apply(a, power=1):
    m = a.n + 1
    return Arrow(a.n, (a.tail + power - 1) % m + 1, (a.head + power - 1) % m + 1)


def zeta_face(f, power=1):
    return frozenset(zeta_apply(a, power) for a in f)


def is_in_positive_component(f, k, n=None):
    """The empty face needs n to range-check k."""
    f = frozenset(f)
    ns = {a.n for a in f} | ({n} if n is not None else set())
    if len(ns) != 1:
        raise CyclohedronDomainError("Cannot determine a single n from face %s and n=%s" % (sorted(f), n))
    n = ns.pop()
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n + 1:
        raise CyclohedronDomainError("Component index must lie in 1..%s, got %r" % (n + 1, k))
    return all(a.backward for a in zeta_face(f, 1 - k))


def type_classes(n, unsafe_scale=False):
    check_scale('decomposition', n, unsafe_scale)
    classes = {k: set() for k in range(1, n + 2)}
    for facet in enumerate_facets(n):
        classes[facet_type(facet)].add(facet)
    return classes


def positive_part(n, unsafe_scale=False):
    """Facets triangulating the boundary part of P_n^+, i.e. the type 1 class."""
    return type_classes(n, unsafe_scale)[1]


def _describe(face):
    return sorted(a.to_json() for a in face)


def verify_decomposition(n, unsafe_scale=False, with_volumes=False):
    require_positive_n(n)
    classes = type_classes(n, unsafe_scale)
    expected = comb(2 * n, n) // (n + 1)
    report = {
        'n': n,
        'facets': sum(len(c) for c in classes.values()),
        'class_size': expected,
        'per_type': {k: len(c) for k, c in classes.items()},
        'orbit': {},
        'checks': {},
        'counterexamples': [],
    }

    outside = [(k, f) for k, c in classes.items() for f in c if not is_in_positive_component(f, k)]
    report['checks']['in_positive_component'] = not outside
    report['counterexamples'].extend(
        {'check': 'in_positive_component', 'type': k, 'facet': _describe(f)} for k, f in outside[:10])

    orbit_ok = True
    for k, facets in classes.items():
        target = k % (n + 1) + 1
        image = {zeta_face(f) for f in facets}
        report['orbit'][k] = target
        if image != classes[target]:
            orbit_ok = False
            report['counterexamples'].append({
                'check': 'zeta_orbit', 'type': k, 'target': target,
                'missing': [_describe(f) for f in sorted(classes[target] - image, key=_describe)[:5]],
                'extra': [_describe(f) for f in sorted(image - classes[target], key=_describe)[:5]],
            })
    report['checks']['zeta_orbit'] = orbit_ok

    bad_sizes = {k: len(c) for k, c in classes.items() if len(c) != expected}
    report['checks']['class_sizes'] = not bad_sizes
    if bad_sizes:
        report['counterexamples'].append({'check': 'class_sizes', 'sizes': bad_sizes, 'expected': expected})

    if with_volumes:
        # coning from the origin gives a unimodular triangulation of each copy
        volumes = {k: sum(coned_facet_volume(f) for f in c) for k, c in classes.items()}
        report['volumes'] = volumes
        report['checks']['volumes'] = all(v == expected for v in volumes.values())
        if not report['checks']['volumes']:
            report['counterexamples'].append({'check': 'volumes', 'volumes': volumes, 'expected': expected})

    report['passed'] = all(report['checks'].values())
    return report
