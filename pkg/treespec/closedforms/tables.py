# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

"""Coefficient tables of the closed forms in x, where lambda = x + 1/x

Every table is a tuple of (coefficient, exponent) pairs in the order the
terms are displayed. An exponent is an affine expression in n, p, q and r
written as text, e.g. '2n+9', '2p+2q+7' or '14'.

C0, W          (x^2 - 1)^3 x^(n+5) P(L(T4(p, q, r)))      = C0 + W
C0p, W1        (x^2 - 1)^2 x^(n+2) P(L(T4(1, q, r)))      = C0p + W1
C1             x^n (x^2 - 1)^3 P(T4(1, 1, r))             = C1
C2, U1         x^n (x^2 - 1)^3 P(T4(1, q, r)), q >= 2     = C2 + U1
C3, U          x^n (x^2 - 1)^3 P(T4(p, q, r)), p >= 2     = C3 + U

"""

import re
from treespec.poly.intpoly import DomainError
from treespec.poly.laurent import LaurentPoly

_C0 = (
    (1, '2n+9'), (-6, '2n+7'), (-8, '2n+6'), (9, '2n+5'), (36, '2n+4'),
    (29, '2n+3'), (-30, '2n+2'), (-87, '2n+1'), (-72, '2n'), (9, '2n-1'),
    (78, '2n-2'), (84, '2n-3'), (48, '2n-4'), (15, '2n-5'), (2, '2n-6'),
    (-2, '20'), (-15, '19'), (-48, '18'), (-84, '17'), (-78, '16'), (-9, '15'),
    (72, '14'), (87, '13'), (30, '12'), (-29, '11'), (-36, '10'), (-9, '9'),
    (8, '8'), (6, '7'), (-1, '5'),
)

_C0P = (
    (1, '2n+5'), (-5, '2n+3'), (-8, '2n+2'), (3, '2n+1'), (24, '2n'),
    (28, '2n-1'), (2, '2n-2'), (-30, '2n-3'), (-36, '2n-4'), (-20, '2n-5'),
    (-10, '2n-6'), (-15, '2n-7'), (-20, '2n-8'), (-15, '2n-9'), (-6, '2n-10'),
    (-1, '2n-11'), (-1, '19'), (-6, '18'), (-15, '17'), (-20, '16'),
    (-15, '15'), (-10, '14'), (-20, '13'), (-36, '12'), (-30, '11'), (2, '10'),
    (28, '9'), (24, '8'), (3, '7'), (-8, '6'), (-5, '5'), (1, '3'),
)

_W = (
    (1, '2p+7'), (1, '2q+7'), (1, '2r+7'), (4, '2p+8'), (4, '2q+8'),
    (4, '2r+8'), (4, '2p+9'), (4, '2q+9'), (4, '2r+9'), (-8, '2p+10'),
    (-8, '2q+10'), (-8, '2r+10'), (-29, '2p+11'), (-29, '2q+11'),
    (-29, '2r+11'), (-34, '2p+12'), (-34, '2q+12'), (-34, '2r+12'),
    (-1, '2p+13'), (-1, '2q+13'), (-1, '2r+13'), (52, '2p+14'), (52, '2q+14'),
    (52, '2r+14'), (79, '2p+15'), (79, '2q+15'), (79, '2r+15'), (58, '2p+16'),
    (58, '2q+16'), (58, '2r+16'), (15, '2p+17'), (15, '2q+17'), (15, '2r+17'),
    (-12, '2p+18'), (-12, '2q+18'), (-12, '2r+18'), (-14, '2p+19'),
    (-14, '2q+19'), (-14, '2r+19'), (-6, '2p+20'), (-6, '2q+20'),
    (-6, '2r+20'), (-1, '2p+21'), (-1, '2q+21'), (-1, '2r+21'), (1, '2p+2q+7'),
    (6, '2p+2q+8'), (14, '2p+2q+9'), (12, '2p+2q+10'), (-15, '2p+2q+11'),
    (-58, '2p+2q+12'), (-79, '2p+2q+13'), (-52, '2p+2q+14'), (1, '2p+2q+15'),
    (34, '2p+2q+16'), (29, '2p+2q+17'), (8, '2p+2q+18'), (-4, '2p+2q+19'),
    (-4, '2p+2q+20'), (-1, '2p+2q+21'), (1, '2p+2r+7'), (6, '2p+2r+8'),
    (14, '2p+2r+9'), (12, '2p+2r+10'), (-15, '2p+2r+11'), (-58, '2p+2r+12'),
    (-79, '2p+2r+13'), (-52, '2p+2r+14'), (1, '2p+2r+15'), (34, '2p+2r+16'),
    (29, '2p+2r+17'), (8, '2p+2r+18'), (-4, '2p+2r+19'), (-4, '2p+2r+20'),
    (-1, '2p+2r+21'), (1, '2q+2r+7'), (6, '2q+2r+8'), (14, '2q+2r+9'),
    (12, '2q+2r+10'), (-15, '2q+2r+11'), (-58, '2q+2r+12'), (-79, '2q+2r+13'),
    (-52, '2q+2r+14'), (1, '2q+2r+15'), (34, '2q+2r+16'), (29, '2q+2r+17'),
    (8, '2q+2r+18'), (-4, '2q+2r+19'), (-4, '2q+2r+20'), (-1, '2q+2r+21'),
)

_W1 = (
    (-1, '2q+5'), (-1, '2r+5'), (-4, '2q+6'), (-4, '2r+6'), (-6, '2q+7'),
    (-6, '2r+7'), (-2, '2q+8'), (-2, '2r+8'), (9, '2q+9'), (9, '2r+9'),
    (20, '2q+10'), (20, '2r+10'), (25, '2q+11'), (25, '2r+11'), (26, '2q+12'),
    (26, '2r+12'), (25, '2q+13'), (25, '2r+13'), (20, '2q+14'), (20, '2r+14'),
    (9, '2q+15'), (9, '2r+15'), (-2, '2q+16'), (-2, '2r+16'), (-6, '2q+17'),
    (-6, '2r+17'), (-4, '2q+18'), (-4, '2r+18'), (-1, '2q+19'), (-1, '2r+19'),
)

_C1 = (
    (2, '2n-13'), (-1, '2n-12'), (2, '2n-11'), (-4, '2n-9'), (1, '2n-8'),
    (-6, '2n-7'), (2, '2n-6'), (6, '2n-3'), (-2, '2n-2'), (4, '2n-1'),
    (-1, '2n'), (-2, '2n+1'), (-2, '2n+3'), (1, '2n+4'), (-2, '19'), (1, '18'),
    (-2, '17'), (4, '15'), (-1, '14'), (6, '13'), (-2, '12'), (-6, '9'),
    (2, '8'), (-4, '7'), (1, '6'), (2, '5'), (2, '3'), (-1, '2'),
)

_C2 = (
    (1, '2n-11'), (1, '2n-10'), (-1, '2n-9'), (1, '2n-8'), (-2, '2n-7'),
    (-3, '2n-6'), (1, '2n-5'), (-3, '2n-4'), (2, '2n-3'), (3, '2n-2'),
    (1, '2n-1'), (3, '2n'), (-2, '2n+1'), (-1, '2n+2'), (-1, '2n+3'),
    (-1, '2n+4'), (1, '2n+5'), (-1, '17'), (-1, '16'), (1, '15'), (-1, '14'),
    (2, '13'), (3, '12'), (-1, '11'), (3, '10'), (-2, '9'), (-3, '8'),
    (-1, '7'), (-3, '6'), (2, '5'), (1, '4'), (1, '3'), (1, '2'), (-1, '1'),
)

_C3 = (
    (2, '2n-8'), (-1, '2n-6'), (-6, '2n-4'), (3, '2n-2'), (6, '2n'),
    (-3, '2n+2'), (-2, '2n+4'), (1, '2n+6'), (-2, '14'), (1, '12'), (6, '10'),
    (-3, '8'), (-6, '6'), (3, '4'), (2, '2'), (-1, '0'),
)

_U1 = (
    (1, '2q+4'), (1, '2q+6'), (-3, '2q+8'), (-3, '2q+10'), (3, '2q+12'),
    (3, '2q+14'), (-1, '2q+16'), (-1, '2q+18'), (1, '2r+4'), (1, '2r+6'),
    (-3, '2r+8'), (-3, '2r+10'), (3, '2r+12'), (3, '2r+14'), (-1, '2r+16'),
    (-1, '2r+18'),
)

_U = (
    (1, '2p+4'), (-3, '2p+8'), (3, '2p+12'), (-1, '2p+16'), (1, '2q+4'),
    (-3, '2q+8'), (3, '2q+12'), (-1, '2q+16'), (1, '2r+4'), (-3, '2r+8'),
    (3, '2r+12'), (-1, '2r+16'), (1, '2p+2q+4'), (-3, '2p+2q+8'),
    (3, '2p+2q+12'), (-1, '2p+2q+16'), (1, '2p+2r+4'), (-3, '2p+2r+8'),
    (3, '2p+2r+12'), (-1, '2p+2r+16'), (1, '2q+2r+4'), (-3, '2q+2r+8'),
    (3, '2q+2r+12'), (-1, '2q+2r+16'),
)

_table_data = (('C0', _C0), ('C0p', _C0P), ('W', _W), ('W1', _W1),
               ('C1', _C1), ('C2', _C2), ('C3', _C3), ('U1', _U1),
               ('U', _U))

table_names = tuple(name for name, _ in _table_data)

# (number of terms, sum of coefficients, sum of absolute coefficients)
table_checksums = {'C0': (30, 0, 1028),
                   'C0p': (32, -216, 448),
                   'W': (90, 0, 1908),
                   'W1': (30, 216, 320),
                   'C1': (28, 0, 72),
                   'C2': (34, 0, 56),
                   'C3': (16, 0, 48),
                   'U1': (16, 0, 32),
                   'U': (24, 0, 48)}

_exponent_variables = ('n', 'p', 'q', 'r')
_term_re = re.compile(r'([+-]?)(\d*)([npqr]?)')


class UnknownTableError(KeyError):
    pass


def parse_exponent(text):
    """'2p+2q+7' -> (0, 2, 2, 0, 7), coefficients of n, p, q, r, 1"""
    body = text.replace(' ', '')
    if not body:
        raise ValueError("Empty exponent expression.")
    coefs = [0] * 5
    pos = 0
    while pos < len(body):
        match = _term_re.match(body, pos)
        if match is None or match.end() == pos:
            raise ValueError("Malformed exponent expression '%s'." % text)
        sign, digits, var = match.groups()
        if not digits and not var:
            raise ValueError("Malformed exponent expression '%s'." % text)
        value = int(digits) if digits else 1
        if sign == '-':
            value = -value
        if var:
            coefs[_exponent_variables.index(var)] += value
        else:
            coefs[4] += value
        pos = match.end()
    return tuple(coefs)


class CoefficientTable(object):
    """Named tuple of (coefficient, affine exponent) terms"""

    def __init__(self, name, terms):
        self._name = name
        self._texts = tuple(terms)
        self._terms = tuple((int(c), parse_exponent(e)) for c, e in terms)

    @property
    def name(self):
        return self._name

    @property
    def terms(self):
        return self._terms

    @property
    def num_terms(self):
        return len(self._terms)

    @property
    def variables(self):
        return tuple(v for i, v in enumerate(_exponent_variables)
                     if any(e[i] for _, e in self._terms))

    @property
    def coefficient_sum(self):
        return sum(c for c, _ in self._terms)

    @property
    def absolute_sum(self):
        return sum(abs(c) for c, _ in self._terms)

    def checksum(self):
        return (self.num_terms, self.coefficient_sum, self.absolute_sum)

    def instantiate(self, n=None, p=None, q=None, r=None):
        values = dict(zip(_exponent_variables, (n, p, q, r)))
        for v in self.variables:
            if values[v] is None:
                raise DomainError("Table %s needs a value for %s."
                                  % (self._name, v))
        terms = []
        for c, e in self._terms:
            exp = e[4]
            for i, v in enumerate(_exponent_variables):
                if e[i]:
                    exp += e[i] * values[v]
            terms.append((c, exp))
        return LaurentPoly.from_terms(terms)

    def get_yaml_lines(self):
        lines = ["name: %s" % self._name,
                 "num_terms: %d" % self.num_terms,
                 "terms:"]
        for c, e in self._texts:
            lines.append("- [ %4d, \"%s\" ]" % (c, e))
        return lines

    def __str__(self):
        return "\n".join(self.get_yaml_lines())


_tables = dict((name, CoefficientTable(name, data))
               for name, data in _table_data)


def get_table(name):
    try:
        return _tables[name]
    except KeyError:
        raise UnknownTableError("Unknown coefficient table '%s'; choose from "
                                "%s." % (name, ", ".join(table_names)))


def instantiate_table(name, n=None, p=None, q=None, r=None):
    """Laurent polynomial of a table at concrete parameters

    When p, q and r are all given, n defaults to p + q + r + 7 and any
    other value of n is rejected.

    """
    table = get_table(name)
    if p is not None and q is not None and r is not None:
        if n is None:
            n = p + q + r + 7
        elif n != p + q + r + 7:
            raise DomainError("n = %d differs from p + q + r + 7 = %d."
                              % (n, p + q + r + 7))
    return table.instantiate(n=n, p=p, q=q, r=r)


def check_tables():
    """Compare every table against its recorded checksum"""
    report = {}
    passed = True
    for name, data in _table_data:
        table = _tables[name]
        fresh = CoefficientTable(name, data)
        ok = (isinstance(data, tuple) and
              table.terms == fresh.terms and
              table.checksum() == table_checksums[name])
        report[name] = {'checksum': list(table.checksum()),
                        'expected': list(table_checksums[name]),
                        'passed': ok}
        passed = passed and ok
    report['passed'] = passed
    return report
