# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

"""Exact real-root counting with Sturm chains

Chains are built by sympy on the squarefree part of the input, so
repeated roots (common in Laplacian spectra) are counted once.
"""

from fractions import Fraction
from sympy import Rational, Symbol
from treespec.poly.intpoly import IntPoly, DomainError

_x = Symbol('x')
DEFAULT_WIDTH = Fraction(1, 10 ** 9)


def _rational(a):
    if isinstance(a, Fraction):
        return Rational(a.numerator, a.denominator)
    return Rational(a)


def squarefree_part(poly):
    if poly.is_zero():
        raise DomainError("The zero polynomial has no squarefree part.")
    sqf = poly.to_sympy(_x).sqf_part()
    return IntPoly.from_sympy(sqf)


def gcd(f, g):
    return IntPoly.from_sympy(f.to_sympy(_x).gcd(g.to_sympy(_x)))


def sturm_chain(poly):
    if poly.degree < 1:
        return [poly.to_sympy(_x)]
    return poly.to_sympy(_x).sqf_part().sturm()


def _sign_changes(values):
    nonzero = [v for v in values if v != 0]
    changes = 0
    for a, b in zip(nonzero, nonzero[1:]):
        if (a > 0) != (b > 0):
            changes += 1
    return changes


def _variations(chain, a):
    if a is None:
        return _sign_changes([p.LC() for p in chain])
    a = _rational(a)
    return _sign_changes([p.eval(a) for p in chain])


def sturm_count(poly, a, b=None, chain=None):
    """Number of distinct real roots in (a, b]; b = None means +infinity"""
    if poly.is_zero():
        raise DomainError("The zero polynomial has infinitely many roots.")
    if b is not None and not _rational(a) < _rational(b):
        raise DomainError("Empty interval (%s, %s]." % (a, b))
    if poly.degree < 1:
        return 0
    if chain is None:
        chain = sturm_chain(poly)
    return _variations(chain, a) - _variations(chain, b)


def root_bound(poly):
    """Cauchy bound: every real root lies in [-B, B]"""
    if poly.degree < 1:
        return Fraction(1)
    lead = abs(poly.leading_coefficient)
    return 1 + max(Fraction(abs(c), lead) for c in poly.coeffs[:-1])


def real_root_enclosure(poly, width=DEFAULT_WIDTH):
    """Rational interval (lo, hi] of width <= width around the largest root

    Returns None when the polynomial has no real roots.

    """
    chain = sturm_chain(poly)
    bound = Fraction(root_bound(poly))
    lo = -bound - 1
    hi = bound
    if sturm_count(poly, lo, None, chain=chain) == 0:
        return None
    while hi - lo > width:
        mid = (lo + hi) / 2
        if sturm_count(poly, mid, None, chain=chain) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def largest_root_exceeds(poly, a):
    """True if some real root of poly is > a"""
    return sturm_count(poly, a, None) > 0


def compare_largest_roots(f, g):
    """Sign of (largest root of f) - (largest root of g), decided exactly

    Both polynomials need a real root. Equality is detected through a
    common root larger than every other root of either polynomial.

    """
    chain_f = sturm_chain(f)
    chain_g = sturm_chain(g)
    common = gcd(f, g)
    bound = max(root_bound(f), root_bound(g))
    lo = -bound - 1
    if sturm_count(f, lo, None, chain=chain_f) == 0 or \
       sturm_count(g, lo, None, chain=chain_g) == 0:
        raise DomainError("Polynomial without real roots.")
    if common.degree >= 1 and sturm_count(common, lo, None) > 0:
        enclosure = real_root_enclosure(common)
        t, c_hi = enclosure
        while True:
            above_f = sturm_count(f, c_hi, None, chain=chain_f)
            above_g = sturm_count(g, c_hi, None, chain=chain_g)
            inside_f = sturm_count(f, t, c_hi, chain=chain_f)
            inside_g = sturm_count(g, t, c_hi, chain=chain_g)
            if inside_f == 1 and inside_g == 1:
                break
            mid = (t + c_hi) / 2
            if sturm_count(common, mid, None) > 0:
                t = mid
            else:
                c_hi = mid
        if above_f == 0 and above_g == 0:
            return 0
    hi = bound
    while True:
        mid = (lo + hi) / 2
        above_f = sturm_count(f, mid, None, chain=chain_f) > 0
        above_g = sturm_count(g, mid, None, chain=chain_g) > 0
        if above_f and not above_g:
            return 1
        if above_g and not above_f:
            return -1
        if above_f:
            lo = mid
        else:
            hi = mid
