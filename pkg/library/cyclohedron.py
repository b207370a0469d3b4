#!/usr/bin/env python
# -*- coding: utf-8 -*-

DOCUMENTATION = '''
---
module: cyclohedron
author: "Cyclohedron maintainers"
short_description: Enumerate and verify the type-B associahedron inside the Legendre polytope
description:
    - Enumerates faces of Simion's type-B associahedron as noncrossing arrow sets,
      computes pulling triangulations of the Legendre polytope, encodes faces as
      Delannoy words and verifies the structural identities between them.
    - The same file runs as a command-line tool when its first argument is a verb.
options:
    command:
        required: true
        choices: [fvector, faces, facets, triangulate, delannoy, rotate, verify]
        description:
            - What to compute
    n:
        required: false
        description:
            - Dimension parameter; the polygon has 2n+2 vertices and P_n lives in R^(n+1).
              Required for every command except delannoy.
    action:
        required: false
        choices: [encode, decode]
        description:
            - Direction of the delannoy command
    dim:
        required: false
        description:
            - Restrict faces to this dimension
    order:
        required: false
        default: simion-canonical
        description:
            - Pulling order, one of lex, revlex-backward-first, simion-canonical,
              random, random-simion or file:PATH pointing to a JSON list of [tail, head] pairs
    explicit_order:
        required: false
        description:
            - Explicit pulling order as a list of [tail, head] pairs; overrides order
    seed:
        required: false
        description:
            - Seed for random orders. If not set then the value of the CYCLOHEDRON_SEED
              environment variable is used, and 0 otherwise.
    samples:
        required: false
        default: 20
        description:
            - Number of random orders checked by verify
    format:
        required: false
        default: json
        choices: [json, csv, text]
        description:
            - Output format of the command-line tool
    unsafe_scale:
        required: false
        default: false
        description:
            - Lift the default scale gates
    word:
        required: false
        description:
            - Delannoy word to decode, over the letters U, D and H
    digraph:
        required: false
        description:
            - Digraph to encode, as {nodes, arrows}
    face:
        required: false
        description:
            - Arrow set to rotate, as a list of [tail, head] pairs
    power:
        required: false
        default: 1
        description:
            - Rotation power for the rotate command
'''

EXAMPLES = '''
# f- and h-vector of the three-dimensional type-B associahedron
- cyclohedron:
    command: fvector
    n: 3

# Compare a seeded random Simion order with the associahedron
- cyclohedron:
    command: triangulate
    n: 4
    order: random-simion
    seed: 7

# Encode a valid digraph as a balanced Delannoy word
- cyclohedron:
    command: delannoy
    action: encode
    digraph:
      nodes: [1, 2, 3]
      arrows: [[3, 1]]

# Shell usage
#   cyclohedron.py verify --n 3 --format text
#   cyclohedron.py delannoy decode --word UHDDDUDUDUHUDUUDUD
'''

import argparse
import csv
import json
import os
import sys
import time
import traceback
from math import comb
from random import Random

from ansible.module_utils.basic import AnsibleModule

from cho import verify_decomposition, zeta_apply, zeta_face
from cyclohedron_common import (SCALE_GATES, CyclohedronError, CyclohedronObject, CyclohedronUnsupportedScaleError,
                                CyclohedronValidationError, check_scale, dumps, require_positive_n)
from delannoy import (DelannoyWord, Digraph, count_paths, dp, dp_inverse, enumerate_balanced_words,
                      enumerate_valid_digraphs, multiset_of_digraph, rewire_forward_arrows, word_of_multiset)
from legendre import coned_facet_volume, incidence_is_totally_unimodular
from pulling import (ORDER_SCHEMES, PullOrder, SimplicialComplex, check_triangulation, is_valid_simion_order,
                     make_order, minimal_nonfaces, pull_triangulate)
from representation import (Arrow, all_arrows, arc_of_bdiagonal, arrows_compatible, arrows_compatible_by_cases,
                            bdiagonal_of_arrow, rotate_arc_pair)
from simion import enumerate_faces, f_vector, facet_type, h_vector, is_face, satisfies_facet_conditions


COMMANDS = ['fvector', 'faces', 'facets', 'triangulate', 'delannoy', 'rotate', 'verify']

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_SCALE = 3


class RunConfig(CyclohedronObject):
    schema = {
        'command': dict(required=True, type='str', choices=COMMANDS),
        'n': dict(required=False, type='int', default=None),
        'action': dict(required=False, type='str', default=None, choices=['encode', 'decode', None]),
        'dim': dict(required=False, type='int', default=None),
        'order': dict(required=False, type='str', default='simion-canonical'),
        'explicit_order': dict(required=False, type='list', default=None),
        'seed': dict(required=False, type='int', default=None),
        'samples': dict(required=False, type='int', default=20),
        'format': dict(required=False, type='str', default='json', choices=['json', 'csv', 'text']),
        'unsafe_scale': dict(required=False, type='bool', default=False),
        'word': dict(required=False, type='str', default=None),
        'digraph': dict(required=False, type='dict', default=None),
        'face': dict(required=False, type='list', default=None),
        'power': dict(required=False, type='int', default=1),
    }

    def __init__(self, config, validate_choices=True):
        self.command = self.read_config(config, validate_choices, 'command')
        self.n = self.read_config(config, validate_choices, 'n')
        self.action = self.read_config(config, validate_choices, 'action')
        self.dim = self.read_config(config, validate_choices, 'dim')
        self.order = self.read_config(config, validate_choices, 'order')
        self.explicit_order = self.read_config(config, validate_choices, 'explicit_order')
        self.seed = self.read_config(config, validate_choices, 'seed')
        self.samples = self.read_config(config, validate_choices, 'samples')
        self.format = self.read_config(config, validate_choices, 'format')
        self.unsafe_scale = self.read_config(config, validate_choices, 'unsafe_scale')
        self.word = self.read_config(config, validate_choices, 'word')
        self.digraph = self.read_config(config, validate_choices, 'digraph')
        self.face = self.read_config(config, validate_choices, 'face')
        self.power = self.read_config(config, validate_choices, 'power')

        if self.seed is None:
            try:
                self.seed = int(os.environ.get('CYCLOHEDRON_SEED', 0))
            except ValueError:
                raise CyclohedronValidationError('RunConfig', "CYCLOHEDRON_SEED must be an integer")
        if self.command != 'delannoy':
            if self.n is None:
                raise CyclohedronValidationError('RunConfig', "Field 'n' is required for command '%s'" % self.command)
            require_positive_n(self.n, 'RunConfig')
        elif self.action is None:
            raise CyclohedronValidationError('RunConfig', "Field 'action' is required for command 'delannoy'")
        if self.samples < 0:
            raise CyclohedronValidationError('RunConfig', "Field 'samples' must be nonnegative")


class Report(object):
    def __init__(self, config):
        self.command = config.command
        self.config = config
        self.result = {}
        self.checks = {}
        self.actions = []
        self.warnings = []
        self.seed = config.seed
        self.timing = {}

    @property
    def passed(self):
        return all(self.checks.values())

    def check(self, name, outcome):
        self.checks[name] = bool(outcome)
        return self.checks[name]

    def to_json(self):
        return {
            'command': self.command,
            'config': self.config.to_json(),
            'result': self.result,
            'checks': self.checks,
            'passed': self.passed,
            'actions': self.actions,
            'warnings': self.warnings,
            'seed': self.seed,
            'timing': self.timing,
        }


def _face_json(face):
    arrows = sorted(face)
    return {
        'arrows': [a.to_json() for a in arrows],
        'bdiagonals': [bdiagonal_of_arrow(a).to_json() for a in arrows],
    }


def _sorted_simplices(simplices):
    return sorted(sorted(a.to_json() for a in s) for s in simplices)


def _read_order_file(n, path):
    try:
        with open(path) as handle:
            data = json.load(handle)
    except (IOError, OSError, ValueError) as err:
        raise CyclohedronValidationError('PullOrder', "Unable to read order file %s: %s" % (path, err))
    return PullOrder.from_json(n, data)


class CyclohedronRunner(object):
    def __init__(self, config):
        self.config = config
        self.rng = Random(config.seed)

    def run(self, sink=None):
        started = time.monotonic()
        report = Report(self.config)
        getattr(self, 'cmd_' + self.config.command)(report, sink)
        report.timing['seconds'] = round(time.monotonic() - started, 6)
        return report

    def _gate(self, report, what):
        n = self.config.n
        check_scale(what, n, self.config.unsafe_scale)
        if n > SCALE_GATES[what]:
            report.warnings.append("%s at n=%s exceeds the default gate n <= %s and may take very long" % (
                what, n, SCALE_GATES[what]))

    def _order(self):
        n = self.config.n
        if self.config.explicit_order is not None:
            return PullOrder.from_json(n, self.config.explicit_order)
        scheme = self.config.order
        if scheme.startswith('file:'):
            return _read_order_file(n, scheme[len('file:'):])
        return make_order(n, scheme, rng=self.rng)

    def cmd_fvector(self, report, sink=None):
        n = self.config.n
        self._gate(report, 'enumeration')
        formula = f_vector(n, 'formula')
        enumerated = f_vector(n, 'enumerated', self.config.unsafe_scale)
        h_formula = h_vector(n, 'formula')
        h_enumerated = h_vector(n, 'enumerated', self.config.unsafe_scale)
        report.result.update({
            'f': list(formula.proper),
            'f_enumerated': list(enumerated.proper),
            'h': list(h_formula),
            'h_from_f': list(h_vector(n, 'from_f')),
            'h_enumerated': list(h_enumerated),
            'total_faces': enumerated.total,
        })
        report.check('f_agree', formula == enumerated)
        report.check('h_agree', h_formula == h_enumerated)

    def _stream_faces(self, report, sink, faces, with_type=False):
        count = 0
        collected = []
        for face in faces:
            item = _face_json(face)
            if with_type:
                item['type'] = facet_type(face)
            count += 1
            if sink is not None:
                sink(item)
            else:
                collected.append(item)
        report.result['count'] = count
        if sink is None:
            report.result['faces'] = collected
        return count

    def cmd_faces(self, report, sink=None):
        self._gate(report, 'enumeration')
        self._stream_faces(report, sink, enumerate_faces(self.config.n, self.config.dim))

    def cmd_facets(self, report, sink=None):
        n = self.config.n
        self._gate(report, 'enumeration')
        count = self._stream_faces(report, sink, enumerate_faces(n, n - 1), with_type=True)
        report.check('facet_count', count == comb(2 * n, n))

    def cmd_triangulate(self, report, sink=None):
        n = self.config.n
        self._gate(report, 'triangulation')
        order = self._order()
        triangulation = pull_triangulate(n, order)
        report.result['order'] = order.to_json()
        report.result['simplices'] = _sorted_simplices(triangulation.facets)
        report.result['count'] = len(triangulation.facets)
        report.result['simion_valid'] = is_valid_simion_order(order)
        report.check('pure', triangulation.is_pure() and triangulation.dimension == n - 1)
        report.check('facet_count', len(triangulation.facets) == comb(2 * n, n))
        report.check('geometric', not check_triangulation(triangulation))
        if report.result['simion_valid']:
            report.check('equals_associahedron', triangulation.facets == frozenset(enumerate_faces(n, n - 1)))
        else:
            report.actions.append("Skipped comparison with the associahedron: order is not a Simion order")

    def cmd_delannoy(self, report, sink=None):
        if self.config.action == 'encode':
            if self.config.digraph is None:
                raise CyclohedronValidationError('RunConfig', "Field 'digraph' is required to encode")
            digraph = Digraph.from_json(self.config.digraph).validate()
            word = dp(digraph)
            multiset = multiset_of_digraph(digraph)
            report.result.update({
                'word': str(word),
                'multiset': [item.to_json() for item in multiset],
                'rewired': [list(a) for a in sorted(rewire_forward_arrows(digraph).arrows)],
                'arrows': len(digraph.arrows),
            })
            report.check('methods_agree', word_of_multiset(multiset) == word)
            report.check('roundtrip', dp_inverse(word, digraph.nodes) == digraph)
        else:
            if self.config.word is None:
                raise CyclohedronValidationError('RunConfig', "Field 'word' is required to decode")
            word = DelannoyWord(self.config.word.strip().upper())
            size = word.weighted_length // 2 + 1
            if self.config.n is not None and self.config.n != size - 1:
                raise CyclohedronValidationError('DelannoyWord', "Word of length %s does not match n=%s" % (
                    word.weighted_length, self.config.n))
            digraph = dp_inverse(word, range(1, size + 1))
            report.result['digraph'] = digraph.to_json()
            report.check('valid', digraph.is_valid())
            report.check('roundtrip', dp(digraph) == word)

    def cmd_rotate(self, report, sink=None):
        n = self.config.n
        if self.config.face is None:
            raise CyclohedronValidationError('RunConfig', "Field 'face' is required to rotate")
        face = frozenset(Arrow.from_json(n, item, position) for position, item in enumerate(self.config.face))
        power = self.config.power
        rotated = zeta_face(face, power)
        report.result['face'] = _face_json(face)
        report.result['rotated'] = _face_json(rotated)
        report.check('face_preserved', is_face(face) == is_face(rotated))
        report.check('arc_rotation', all(
            arc_of_bdiagonal(bdiagonal_of_arrow(zeta_apply(a, power))) ==
            rotate_arc_pair(arc_of_bdiagonal(bdiagonal_of_arrow(a)), power) for a in face))

    def cmd_verify(self, report, sink=None):
        n = self.config.n
        unsafe = self.config.unsafe_scale
        self._gate(report, 'enumeration')

        facets = frozenset(enumerate_faces(n, n - 1))
        report.check('f_vector', f_vector(n, 'enumerated', unsafe) == f_vector(n, 'formula'))
        report.check('h_vector', h_vector(n, 'enumerated', unsafe) == h_vector(n, 'formula'))
        report.check('facet_count', len(facets) == comb(2 * n, n))
        report.check('diameter_uniqueness', all(satisfies_facet_conditions(f) for f in facets))

        arrows = all_arrows(n)
        pairs = [(a, b) for a in arrows for b in arrows if a != b]
        report.check('predicate_equivalence', all(
            arrows_compatible(a, b) == arrows_compatible_by_cases(a, b) for a, b in pairs))
        report.check('zeta_equivariance', all(
            arrows_compatible(a, b) == arrows_compatible(zeta_apply(a), zeta_apply(b)) for a, b in pairs))

        if self._within(report, 'triangulation'):
            report.check('flag', all(len(s) == 2 for s in minimal_nonfaces(SimplicialComplex(facets, n))))
            report.check('simion_canonical_order', pull_triangulate(n, make_order(n, 'simion-canonical')).facets == facets)
            report.check('random_simion_orders', all(
                pull_triangulate(n, make_order(n, 'random-simion', rng=self.rng)).facets == facets
                for _ in range(self.config.samples)))
            self._verify_random_orders(report)
            if self.config.explicit_order is not None or self.config.order not in ('simion-canonical', 'simion'):
                order = self._order()
                report.result['order'] = order.to_json()
                report.check('requested_order', pull_triangulate(n, order).facets == facets)

        if self._within(report, 'decomposition'):
            decomposition = verify_decomposition(n, unsafe)
            report.result['decomposition'] = decomposition
            report.check('cho_decomposition', decomposition['passed'])
            report.check('unimodular_volumes', all(coned_facet_volume(f) == 1 for f in facets))
        if self._within(report, 'unimodularity'):
            report.check('totally_unimodular', incidence_is_totally_unimodular(n, unsafe))
        if self._within(report, 'roundtrip'):
            self._verify_bijection(report)

    def _within(self, report, what):
        n = self.config.n
        if n <= SCALE_GATES[what] or self.config.unsafe_scale:
            return True
        report.actions.append("Skipped %s checks: n=%s exceeds the gate n <= %s" % (what, n, SCALE_GATES[what]))
        return False

    def _verify_random_orders(self, report):
        n = self.config.n
        expected = f_vector(n, 'formula').entries
        ok_f, ok_flag = True, True
        for _ in range(self.config.samples):
            triangulation = pull_triangulate(n, make_order(n, 'random', rng=self.rng))
            ok_f = ok_f and triangulation.f_vector() == expected
            if n <= 4:
                ok_flag = ok_flag and triangulation.is_flag()
        report.check('random_orders_f_vector', ok_f)
        report.check('random_orders_flag', ok_flag)

    def _verify_bijection(self, report):
        n = self.config.n
        words = {}
        roundtrip, statistic, multiset_ok = True, True, True
        for digraph in enumerate_valid_digraphs(n + 1):
            word = dp(digraph)
            words[word] = words.get(word, 0) + 1
            roundtrip = roundtrip and dp_inverse(word, digraph.nodes) == digraph
            statistic = statistic and word.ups == len(digraph.arrows)
            multiset_ok = multiset_ok and word_of_multiset(multiset_of_digraph(digraph)) == word
        balanced = set(enumerate_balanced_words(n))
        report.result['delannoy_total'] = len(words)
        report.check('dp_injective', all(c == 1 for c in words.values()))
        report.check('dp_surjective', set(words) == balanced)
        report.check('delannoy_count', len(balanced) == count_paths(n))
        report.check('dp_roundtrip', roundtrip)
        report.check('dp_inverse_roundtrip', all(dp(dp_inverse(w, range(1, n + 2))) == w for w in balanced))
        report.check('arrows_equal_ups', statistic)
        report.check('multiset_agrees', multiset_ok)


def _render_text(payload, prefix=''):
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, dict):
            lines.extend(_render_text(value, prefix + key + '.'))
        else:
            lines.append('%s%s: %s' % (prefix, key, dumps(value)))
    return lines


def _face_line(item):
    return ' '.join('(%s,%s)' % tuple(a) for a in item['arrows']) or '{}'


class ShellFrontend(object):
    """Command-line surface; the first argument is the verb."""

    def __init__(self, stdout=None, stderr=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    @staticmethod
    def parser():
        parser = argparse.ArgumentParser(
            prog='cyclohedron', description='Type-B associahedron and Legendre polytope combinatorics')
        parser.add_argument('command', choices=COMMANDS)
        parser.add_argument('action', nargs='?', choices=['encode', 'decode'])
        parser.add_argument('--n', type=int)
        parser.add_argument('--dim', type=int)
        parser.add_argument('--order', default='simion-canonical',
                            help='one of %s or file:PATH' % ', '.join(ORDER_SCHEMES))
        parser.add_argument('--seed', type=int)
        parser.add_argument('--samples', type=int, default=20)
        parser.add_argument('--format', choices=['json', 'csv', 'text'], default='json')
        parser.add_argument('--unsafe-scale', action='store_true')
        parser.add_argument('--word')
        parser.add_argument('--digraph', help='JSON object {"nodes": [...], "arrows": [[t, h], ...]}')
        parser.add_argument('--face', help='JSON list of [tail, head] pairs')
        parser.add_argument('--power', type=int, default=1)
        return parser

    def config(self, argv):
        args = self.parser().parse_args(argv)
        params = dict(vars(args))
        for field in ('digraph', 'face'):
            if params[field] is not None:
                try:
                    params[field] = json.loads(params[field])
                except ValueError as err:
                    raise CyclohedronValidationError('RunConfig', "Field '%s' is not valid JSON: %s" % (field, err))
        return RunConfig(params)

    def _sink(self, fmt):
        if fmt == 'json':
            return lambda item: self.stdout.write(dumps(item) + '\n')
        if fmt == 'csv':
            writer = csv.writer(self.stdout, lineterminator='\n')
            return lambda item: writer.writerow([_face_line(item)] + ([item['type']] if 'type' in item else []))
        return lambda item: self.stdout.write(_face_line(item) + ('  type %s' % item['type'] if 'type' in item else '') + '\n')

    def emit(self, report, fmt, streaming=False):
        payload = report.to_json()
        del payload['warnings']
        if fmt == 'json':
            self.stdout.write(dumps(payload, indent=None if streaming else 2) + '\n')
        elif fmt == 'csv':
            writer = csv.writer(self.stdout, lineterminator='\n')
            writer.writerow(['check', 'passed'])
            for name in sorted(report.checks):
                writer.writerow([name, 'true' if report.checks[name] else 'false'])
        else:
            self.stdout.write('\n'.join(_render_text(payload)) + '\n')
            self.stdout.write('%s\n' % ('PASS' if report.passed else 'FAIL'))

    def run(self, argv):
        try:
            config = self.config(argv)
            streaming = config.command in ('faces', 'facets')
            report = CyclohedronRunner(config).run(self._sink(config.format) if streaming else None)
        except CyclohedronUnsupportedScaleError as err:
            self.stderr.write('error: %s\n' % err)
            return EXIT_SCALE
        except CyclohedronValidationError as err:
            self.stderr.write('error in %s: %s\n' % (err.cls, err.message))
            return EXIT_INVALID
        except CyclohedronError as err:
            self.stderr.write('error: %s\n' % err)
            return EXIT_INVALID
        for warning in report.warnings:
            self.stderr.write('warning: %s\n' % warning)
        self.emit(report, config.format, streaming)
        return EXIT_PASSED if report.passed else EXIT_FAILED


class CyclohedronModule(object):
    def __init__(self):
        self.module = AnsibleModule(
            argument_spec=dict(
                command=dict(required=True, choices=COMMANDS, type='str'),
                n=dict(required=False, type='int'),
                action=dict(required=False, choices=['encode', 'decode'], type='str'),
                dim=dict(required=False, type='int'),
                order=dict(required=False, type='str', default='simion-canonical'),
                explicit_order=dict(required=False, type='list'),
                seed=dict(required=False, type='int'),
                samples=dict(required=False, type='int', default=20),
                format=dict(required=False, type='str', default='json', choices=['json', 'csv', 'text']),
                unsafe_scale=dict(required=False, type='bool', default=False),
                word=dict(required=False, type='str'),
                digraph=dict(required=False, type='dict'),
                face=dict(required=False, type='list'),
                power=dict(required=False, type='int', default=1),
            ),
            supports_check_mode=True
        )

    def configuration(self):
        try:
            return RunConfig(self.module.params)
        except CyclohedronValidationError as err:
            self.module.fail_json(msg='Error in ' + err.cls + ': ' + err.message)

    def report(self, config):
        try:
            return CyclohedronRunner(config).run()
        except CyclohedronValidationError as err:
            self.module.fail_json(msg='Error in ' + err.cls + ': ' + err.message)
        except CyclohedronError as err:
            self.module.fail_json(msg=str(err))
        except Exception as err:
            self.module.fail_json(msg=str(err), trace=traceback.format_exc())

    def run(self):
        report = self.report(self.configuration())
        for warning in report.warnings:
            self.module.warn(warning)
        payload = json.loads(dumps(report.to_json()))
        del payload['warnings']
        if report.passed:
            self.module.exit_json(changed=False, **payload)
        failed = sorted(name for name, ok in report.checks.items() if not ok)
        self.module.fail_json(msg='Checks failed: ' + ', '.join(failed), **payload)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] in COMMANDS:
        return ShellFrontend().run(argv)
    cyclohedron_module = CyclohedronModule()
    cyclohedron_module.run()


if __name__ == '__main__':
    sys.exit(main())
