# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from fractions import Fraction
from treespec.poly.intpoly import IntPoly, DomainError


class LaurentPoly(object):
    """Integer Laurent polynomial in x

    coeffs[i] is the coefficient of x^(min_exp + i). Zero coefficients are
    trimmed at both ends; the zero polynomial has min_exp 0 and no
    coefficients.

    """

    def __init__(self, coeffs=(), min_exp=0):
        coeffs = [int(c) for c in coeffs]
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            self._min_exp = 0
            self._coeffs = ()
        else:
            self._min_exp = min_exp + start
            self._coeffs = tuple(coeffs[start:end])

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls([coef], exp)

    @classmethod
    def from_terms(cls, terms):
        """Build from (coefficient, exponent) pairs; repeated exponents add"""
        terms = list(terms)
        if not terms:
            return cls()
        low = min(e for _, e in terms)
        high = max(e for _, e in terms)
        coeffs = [0] * (high - low + 1)
        for c, e in terms:
            coeffs[e - low] += c
        return cls(coeffs, low)

    @classmethod
    def from_intpoly(cls, poly):
        return cls(poly.coeffs, 0)

    @classmethod
    def from_text(cls, text):
        fields = text.split()
        if not fields or not fields[0].startswith('min_exp='):
            raise DomainError("Laurent text has to start with 'min_exp='.")
        try:
            min_exp = int(fields[0][len('min_exp='):])
            return cls([int(x) for x in fields[1:]], min_exp)
        except ValueError:
            raise DomainError("Malformed Laurent text '%s'." % text)

    @property
    def min_exp(self):
        return self._min_exp

    @property
    def max_exp(self):
        if not self._coeffs:
            return 0
        return self._min_exp + len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def is_zero(self):
        return not self._coeffs

    def coefficient(self, exp):
        i = exp - self._min_exp
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def terms(self):
        """Nonzero (exponent, coefficient) pairs, highest exponent first"""
        return [(self._min_exp + i, c)
                for i, c in reversed(list(enumerate(self._coeffs))) if c]

    def num_terms(self):
        return sum(1 for c in self._coeffs if c)

    def shift(self, k):
        """x^k times self"""
        if not self._coeffs:
            return LaurentPoly()
        return LaurentPoly(self._coeffs, self._min_exp + k)

    def __add__(self, other):
        other = _as_laurent(other)
        if not self._coeffs:
            return other
        if not other.coeffs:
            return self
        low = min(self._min_exp, other.min_exp)
        high = max(self.max_exp, other.max_exp)
        coeffs = [0] * (high - low + 1)
        for i, c in enumerate(self._coeffs):
            coeffs[self._min_exp - low + i] += c
        for i, c in enumerate(other.coeffs):
            coeffs[other.min_exp - low + i] += c
        return LaurentPoly(coeffs, low)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self._coeffs], self._min_exp)

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        a, b = self._coeffs, other.coeffs
        if not a or not b:
            return LaurentPoly()
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return LaurentPoly(prod, self._min_exp + other.min_exp)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self._coeffs) != 1 or abs(self._coeffs[0]) != 1:
                raise DomainError("Only unit monomials have inverses.")
            return LaurentPoly([self._coeffs[0] ** (-k)],
                               self._min_exp * k)
        result = LaurentPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, IntPoly)):
            other = _as_laurent(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self._min_exp == other.min_exp and
                self._coeffs == other.coeffs)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._min_exp, self._coeffs))

    def __call__(self, x):
        """Exact evaluation at a nonzero rational x"""
        if isinstance(x, int):
            x = Fraction(x)
        value = 0
        for c in reversed(self._coeffs):
            value = value * x + c
        if self._min_exp >= 0:
            return value * x ** self._min_exp
        return value / x ** (-self._min_exp)

    def coefficient_sum(self):
        return sum(self._coeffs)

    def alternating_sum(self):
        """Value at x = -1"""
        return sum(c if (self._min_exp + i) % 2 == 0 else -c
                   for i, c in enumerate(self._coeffs))

    def to_intpoly(self):
        if self._min_exp < 0:
            raise DomainError("Negative exponent %d." % self._min_exp)
        return IntPoly([0] * self._min_exp + list(self._coeffs))

    def to_text(self):
        return "min_exp=%d %s" % (self._min_exp,
                                  " ".join("%d" % c for c in self._coeffs))

    def to_string(self, var='x'):
        terms = []
        for exp, c in self.terms():
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if exp == 0:
                body = "%d" % mag
            else:
                power = var if exp == 1 else "%s^%d" % (var, exp)
                body = power if mag == 1 else "%d*%s" % (mag, power)
            terms.append((sign, body))
        if not terms:
            return "0"
        text = ('-' if terms[0][0] == '-' else '') + terms[0][1]
        for sign, body in terms[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "LaurentPoly(%s, min_exp=%d)" % (list(self._coeffs),
                                                self._min_exp)

    def __str__(self):
        return self.to_string()


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, IntPoly):
        return LaurentPoly.from_intpoly(x)
    if isinstance(x, int):
        return LaurentPoly([x])
    raise TypeError("Cannot combine LaurentPoly with %s."
                    % type(x).__name__)


X = LaurentPoly([1], 1)
X_INV = LaurentPoly([1], -1)
LAMBDA_X = X + X_INV


def to_laurent(p, pre_factor=None):
    """pre_factor * p(x + 1/x), expanded exactly

    Horner's scheme in the Laurent ring keeps every intermediate exact.

    """
    value = LaurentPoly()
    for c in reversed(p.coeffs):
        value = value * LAMBDA_X + c
    if pre_factor is None:
        return value
    return _as_laurent(pre_factor) * value


def laurent_diff(lhs, rhs):
    """Monomials where two Laurent polynomials differ

    Returns [(exponent, lhs_coeff, rhs_coeff)] sorted by exponent,
    highest first.

    """
    exps = set(e for e, _ in lhs.terms()) | set(e for e, _ in rhs.terms())
    diff = []
    for e in sorted(exps, reverse=True):
        a, b = lhs.coefficient(e), rhs.coefficient(e)
        if a != b:
            diff.append((e, a, b))
    return diff


def monomial_shift(lhs, rhs):
    """k with lhs = x^k * rhs, or None"""
    if lhs.is_zero() or rhs.is_zero():
        return None
    k = lhs.min_exp - rhs.min_exp
    if lhs.coeffs == rhs.coeffs:
        return k
    return None
