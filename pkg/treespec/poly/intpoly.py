# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.


class DomainError(ValueError):
    pass


def _trim(coeffs):
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly(object):
    """Univariate polynomial with exact integer coefficients

    coeffs[i] is the coefficient of the i-th power; trailing zeros are
    trimmed, so the zero polynomial has an empty coefficient tuple and
    degree -1.

    """

    def __init__(self, coeffs=()):
        self._coeffs = _trim(coeffs)

    @classmethod
    def monomial(cls, degree, coef=1):
        return cls([0] * degree + [coef])

    @classmethod
    def from_highest_first(cls, coeffs):
        return cls(list(reversed(list(coeffs))))

    @classmethod
    def from_text(cls, text):
        """Inverse of to_text: space separated, lowest degree first"""
        fields = text.split()
        try:
            return cls([int(x) for x in fields])
        except ValueError:
            raise DomainError("Malformed polynomial text '%s'." % text)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self):
        if not self._coeffs:
            return 0
        return self._coeffs[-1]

    def coefficient(self, i):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def is_zero(self):
        return not self._coeffs

    def is_monic(self):
        return self.leading_coefficient == 1

    def lowest_order(self):
        """Exponent of the lowest nonzero term (multiplicity of root 0)"""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return -1

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self._coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0)
                        for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self._coeffs])
        other = _as_poly(other)
        a, b = self._coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return IntPoly(prod)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise DomainError("Negative power of a polynomial.")
        result = IntPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other.coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._coeffs)

    def __call__(self, x):
        """Horner evaluation; exact for int, Fraction and sympy Rational"""
        value = 0
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self._coeffs)][1:])

    def shift(self, a):
        """p(x + a) for an integer a"""
        result = IntPoly()
        linear = IntPoly([a, 1])
        for c in reversed(self._coeffs):
            result = result * linear + c
        return result

    def reflect(self, a):
        """p(a - x) for an integer a"""
        result = IntPoly()
        linear = IntPoly([a, -1])
        for c in reversed(self._coeffs):
            result = result * linear + c
        return result

    def divide_by_power(self, k):
        """p / x^k; p has to vanish to order k at zero"""
        if any(self._coeffs[:k]):
            raise DomainError("Polynomial is not divisible by x^%d." % k)
        return IntPoly(self._coeffs[k:])

    def divmod_monic(self, divisor):
        """Quotient and remainder by a monic integer polynomial"""
        if not divisor.is_monic():
            raise DomainError("Divisor has to be monic.")
        rem = list(self._coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                quot[i - d] = c
                for j, y in enumerate(divisor.coeffs):
                    rem[i - d + j] -= c * y
        return IntPoly(quot), IntPoly(rem)

    def is_even(self):
        return not any(self._coeffs[1::2])

    def is_odd(self):
        return not any(self._coeffs[0::2])

    def to_sympy(self, symbol=None):
        from sympy import Poly, Symbol, ZZ
        if symbol is None:
            symbol = Symbol('x')
        return Poly(list(reversed(self._coeffs)) or [0], symbol, domain=ZZ)

    @classmethod
    def from_sympy(cls, poly):
        coeffs = list(reversed(poly.all_coeffs()))
        for c in coeffs:
            if c != int(c):
                raise DomainError("Non-integer coefficient %s." % c)
        return cls([int(c) for c in coeffs])

    def to_text(self):
        if not self._coeffs:
            return "0"
        return " ".join("%d" % c for c in self._coeffs)

    def to_string(self, var='x'):
        """Human-readable form, highest degree first"""
        terms = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if i == 0:
                body = "%d" % mag
            else:
                power = var if i == 1 else "%s^%d" % (var, i)
                body = power if mag == 1 else "%d*%s" % (mag, power)
            terms.append((sign, body))
        if not terms:
            return "0"
        text = ('-' if terms[0][0] == '-' else '') + terms[0][1]
        for sign, body in terms[1:]:
            text += " %s %s" % (sign, body)
        return text

    def __repr__(self):
        return "IntPoly(%s)" % list(self._coeffs)

    def __str__(self):
        return self.to_string()


def _as_poly(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    raise TypeError("Cannot combine IntPoly with %s." % type(x).__name__)


LAMBDA = IntPoly([0, 1])
ONE = IntPoly([1])
ZERO = IntPoly()
