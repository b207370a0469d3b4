#!/usr/bin/env python
# -*- coding: utf-8 -*-

import json


class CyclohedronError(RuntimeError):
    pass


class CyclohedronValidationError(CyclohedronError):
    def __init__(self, cls, message):
        super(CyclohedronValidationError, self).__init__(message)
        self.cls = cls
        self.message = message


class CyclohedronDomainError(CyclohedronError):
    pass


class CyclohedronPreconditionError(CyclohedronError):
    pass


class CyclohedronInvariantError(CyclohedronError):
    pass


class CyclohedronUnsupportedScaleError(CyclohedronError):
    def __init__(self, what, n, limit):
        super(CyclohedronUnsupportedScaleError, self).__init__(
            "%s is gated to n <= %s (got n=%s); pass unsafe_scale to override" % (what, limit, n))
        self.what = what
        self.n = n
        self.limit = limit


# Default scale gates, overridable by the unsafe_scale flag.
SCALE_GATES = {
    'enumeration': 7,
    'triangulation': 5,
    'unimodularity': 3,
    'decomposition': 6,
    'roundtrip': 5,
}


def check_scale(what, n, unsafe_scale=False):
    limit = SCALE_GATES[what]
    if n > limit and not unsafe_scale:
        raise CyclohedronUnsupportedScaleError(what, n, limit)
    return n <= limit


def require_label(value, cls, what):
    """Integer node or polygon label; bools and floats are rejected, not coerced."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise CyclohedronValidationError(cls, "%s must be an integer label, got %r" % (what, value))
    return value


def require_positive_n(n, cls='n'):
    if isinstance(n, bool) or not isinstance(n, int):
        raise CyclohedronValidationError(cls, "n must be an integer, got %r" % (n,))
    if n < 1:
        raise CyclohedronDomainError("n must be at least 1, got %s" % n)


class CyclohedronObjectEncoder(json.JSONEncoder):
    def default(self, o):
        try:
            return o.to_json()
        except AttributeError:
            pass
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        return json.JSONEncoder.default(self, o)


def dumps(payload, **kwargs):
    return json.dumps(payload, cls=CyclohedronObjectEncoder, sort_keys=True, **kwargs)


class CyclohedronObject(object):
    schema = {}

    def read_config(self, config, validate_choices, param_name):
        required = self.schema[param_name].get('required', True)
        param_type = self.schema[param_name].get('type', 'str')
        default = self.schema[param_name].get('default', None)
        choices = self.schema[param_name].get('choices', None)

        if config and param_name in config and config[param_name] is not None:
            value = config[param_name]
        else:
            value = default

        if value is None and required:
            raise CyclohedronValidationError(self.__class__.__name__, "Field '%s' is required but not set" % param_name)

        if value is None:
            return value

        if validate_choices and choices is not None and value not in choices:
            raise CyclohedronValidationError(self.__class__.__name__,
                                             "Field '%s' must be one of %s" % (param_name, ','.join(str(c) for c in choices)))

        if param_type == 'str':
            value = str(value)
        elif param_type == 'int':
            try:
                value = int(value)
            except (TypeError, ValueError):
                raise CyclohedronValidationError(self.__class__.__name__,
                                                 "Field '%s' with value '%s' couldn't be converted to integer" % (
                                                     param_name, value))
        elif param_type == 'bool':
            if isinstance(value, str):
                value = value.strip().lower() in ('1', 'true', 'yes', 'on')
            else:
                value = bool(value)
        elif param_type == 'list':
            if not isinstance(value, (list, tuple)):
                raise CyclohedronValidationError(self.__class__.__name__,
                                                 "Field '%s' with value '%s' is not a list" % (
                                                     param_name, value))
            value = list(value)
        elif param_type == 'dict':
            if not isinstance(value, dict):
                raise CyclohedronValidationError(self.__class__.__name__,
                                                 "Field '%s' with value '%s' is not a mapping" % (
                                                     param_name, value))

        return value

    def to_json(self):
        return {k: v for k, v in self.__dict__.items() if v is not None or not self.schema.get(k, {}).get('omit_empty', False)}

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __ne__(self, other):
        return not self.__eq__(other)
