# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

"""Characteristic polynomials of T4(p, q, r) and its line graph written
through path polynomials

The head and case formulas are evaluated as written; they are audit input
and are compared against charpoly() in treespec.closedforms.audit.
triangle_decomposition_charpoly expands P(L(T4)) at the central triangle
of the line graph and holds for every 1 <= p <= q <= r.

"""

from treespec.poly.intpoly import LAMBDA, DomainError
from treespec.poly.charpoly import path_poly
from treespec.graph.families import FamilySpec

case_formula_names = ('p=q=r=1', '1=p=q<r', '1=p<q', '2<=p')


def build_h(k):
    """h_k = lambda p_{k-1} (p_2 - 2) - p_2 p_{k-2} - 2 p_{k-1}

    h_k is defined for k >= 0; h_0 = p_2.

    """
    if k < 0:
        raise DomainError("h_%d needs p_%d, which is outside the path "
                          "polynomial convention." % (k, k - 2))
    p2 = path_poly(2)
    return (LAMBDA * path_poly(k - 1) * (p2 - 2) - p2 * path_poly(k - 2) -
            path_poly(k - 1) * 2)


def build_f_qr(q, r):
    """f(q, r) = h_r (lambda h_{q-1} - h_{q-2}) - h_{q-1} h_r - 1"""
    h_r = build_h(r)
    return (h_r * (LAMBDA * build_h(q - 1) - build_h(q - 2)) -
            build_h(q - 1) * h_r - 1)


def build_f_r(r):
    """f_r = lambda (p_{r+1} - p_{r-1}); f_0 = lambda^2, f_1 = p_3"""
    return LAMBDA * (path_poly(r + 1) - path_poly(r - 1))


def _check_params(p, q, r):
    FamilySpec('T4', (p, q, r))


def formula_line_t4_charpoly(p, q, r):
    """Head formula for P(L(T4(p, q, r))), the p = 1 variant when p = 1

    q = 1 needs h_{-1} inside f(q, r) and raises DomainError.

    """
    _check_params(p, q, r)
    f_qr = build_f_qr(q, r)
    h_q, h_r = build_h(q), build_h(r)
    h_q1, h_r1 = build_h(q - 1), build_h(r - 1)
    if p == 1:
        p2 = path_poly(2)
        return (f_qr * (LAMBDA * p2 - LAMBDA * 2 - 2) -
                p2 * (h_q1 * h_r + h_q * h_r1 + h_q1 * h_r1 * 2))
    h_p1 = build_h(p - 1)
    return (f_qr * (LAMBDA * h_p1 - build_h(p - 2)) -
            h_p1 * (h_q1 * h_r - h_q * h_r1 - h_q1 * h_r1 * 2))


def triangle_decomposition_charpoly(p, q, r):
    """P(L(T4(p, q, r))) expanded at the central triangle

    h_p h_q h_r - h_{p-1} h_{q-1} h_r - h_{p-1} h_q h_{r-1}
    - h_p h_{q-1} h_{r-1} - 2 h_{p-1} h_{q-1} h_{r-1}

    """
    _check_params(p, q, r)
    hp, hq, hr = build_h(p), build_h(q), build_h(r)
    hp1, hq1, hr1 = build_h(p - 1), build_h(q - 1), build_h(r - 1)
    return (hp * hq * hr - hp1 * hq1 * hr - hp1 * hq * hr1 -
            hp * hq1 * hr1 - hp1 * hq1 * hr1 * 2)


def case_of(p, q, r):
    if p >= 2:
        return '2<=p'
    if q >= 2:
        return '1=p<q'
    if r >= 2:
        return '1=p=q<r'
    return 'p=q=r=1'


def _case_formula(p, q, r, short):
    """short is the path polynomial standing for a leg of length one"""
    lam = LAMBDA
    case = case_of(p, q, r)
    if case == 'p=q=r=1':
        return lam * short ** 3 - lam ** 2 * short ** 2 * 3
    f_r, f_r1 = build_f_r(r), build_f_r(r - 1)
    if case == '1=p=q<r':
        return (lam * short * short * f_r - lam ** 2 * short * f_r * 2 -
                short ** 2 * f_r1)
    f_q, f_q1 = build_f_r(q), build_f_r(q - 1)
    if case == '1=p<q':
        return (lam * short * f_q * f_r - lam ** 2 * f_q * f_r -
                short * f_q1 * f_r - short * f_q * f_r1)
    f_p, f_p1 = build_f_r(p), build_f_r(p - 1)
    return (lam * f_q * f_p * f_r - f_q1 * f_p * f_r - f_q * f_p1 * f_r -
            f_q * f_p * f_r1)


def formula_t4_charpoly_cases(p, q, r):
    """Case formula for P(T4(p, q, r)) as written, with p_2 factors"""
    _check_params(p, q, r)
    return _case_formula(p, q, r, path_poly(2))


def repaired_case_formulas(p, q, r):
    """Case formula with every p_2 factor replaced by p_3 = f_1"""
    _check_params(p, q, r)
    return _case_formula(p, q, r, path_poly(3))
