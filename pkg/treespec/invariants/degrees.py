# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from treespec.graph.graph import line_graph
from treespec.graph.families import t4, expected_t4_linegraph_census
from treespec.poly.intpoly import DomainError
from treespec.poly.sturm import sturm_count
from treespec.walks.census import closed_walks

MAX_RECOVERED_DEGREE = 4
MU1_GATE = 5


class HypothesisError(RuntimeError):
    pass


class InconsistencyError(RuntimeError):
    pass


class DegreeCensus(object):
    """Numbers of vertices of degree 1, 2, 3 and 4"""

    def __init__(self, counts):
        counts = tuple(int(x) for x in counts)
        if len(counts) != MAX_RECOVERED_DEGREE:
            raise ValueError("A degree census has %d entries."
                             % MAX_RECOVERED_DEGREE)
        if min(counts) < 0:
            raise ValueError("Negative entry in degree census %s."
                             % (counts,))
        self._counts = counts

    @classmethod
    def from_graph(cls, graph):
        degrees = graph.degrees
        if degrees and max(degrees) > MAX_RECOVERED_DEGREE:
            raise DomainError("Maximum degree %d exceeds %d."
                              % (max(degrees), MAX_RECOVERED_DEGREE))
        return cls([degrees.count(d)
                    for d in range(1, MAX_RECOVERED_DEGREE + 1)])

    @property
    def counts(self):
        return self._counts

    @property
    def num_vertices(self):
        return sum(self._counts)

    @property
    def degree_sum(self):
        return sum((i + 1) * x for i, x in enumerate(self._counts))

    def __eq__(self, other):
        if isinstance(other, tuple):
            return self._counts == other
        if not isinstance(other, DegreeCensus):
            return NotImplemented
        return self._counts == other.counts

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._counts)

    def __repr__(self):
        return "DegreeCensus(%s)" % (self._counts,)


def mu1_at_most(laplacian_poly, bound=MU1_GATE):
    """Exact certificate that every Laplacian eigenvalue is <= bound"""
    return sturm_count(laplacian_poly, bound, None) == 0


def degree_recovery(facts, mu1_at_most_5):
    """Degree census of a tree from spectrum-determined moments

    Solves
        x1 +   x2 +    x3 +    x4 = n
        x1 +  2x2 +   3x3 +   4x4 = 2m
        x1 +  4x2 +   9x3 +  16x4 = sum d^2
        x1 +  8x2 +  27x3 +  64x4 = sum d^3
    over the rationals. mu_1 <= 5 caps the maximum degree at 4.

    """
    if not mu1_at_most_5:
        raise HypothesisError("mu_1 <= 5 is not certified; the maximum "
                              "degree is not bounded by 4.")
    if not facts.is_tree() or facts.n < 2:
        raise DomainError("Degree recovery needs the facts of a tree with "
                          "at least two vertices.")
    if facts.sum_deg_cube is None:
        raise DomainError("Sum of cubed degrees is missing.")
    rows = [[QQ(d ** k) for d in range(1, 5)] for k in range(4)]
    rhs = [[QQ(facts.n)], [QQ(2 * facts.m)], [QQ(facts.sum_deg_sq)],
           [QQ(facts.sum_deg_cube)]]
    system = DomainMatrix(rows, (4, 4), QQ)
    solution = system.lu_solve(DomainMatrix(rhs, (4, 1), QQ))
    values = list(solution.to_Matrix())
    counts = []
    for x in values:
        if x.q != 1 or x.p < 0:
            raise InconsistencyError(
                "Moment system has no nonnegative integral solution: %s"
                % ", ".join(str(v) for v in values))
        counts.append(int(x.p))
    return DegreeCensus(counts)


def adjacent_pairs_from_walks(closed_walks_4, num_edges, num_c4=0):
    """N(P3) = (N(4) - 2e - 8 N(C4)) / 4"""
    value = closed_walks_4 - 2 * num_edges - 8 * num_c4
    if value % 4:
        raise InconsistencyError("N(4) - 2e - 8 N(C4) = %d is not divisible "
                                 "by 4." % value)
    return value // 4


def linegraph_degree_census(n_l, e_l, t_l, pairs, max_deg=4):
    """All (y1, .., y4) with
        y1 +  y2 +  y3 +  y4 = n_l
        y1 + 2y2 + 3y3 + 4y4 = 2 e_l
              y2 + 3y3 + 6y4 = pairs
    enumerated by y4. Every vertex of degree d carries C(d, 2) adjacent
    pairs, and the t_l triangles need 3 t_l <= pairs; an empty list is a
    valid outcome.

    """
    if max_deg != 4:
        raise DomainError("Only maximum degree 4 is supported.")
    if 3 * t_l > pairs:
        return []
    solutions = []
    for y4 in range(n_l + 1):
        y3 = pairs - 2 * e_l + n_l - 3 * y4
        y2 = (2 * e_l - n_l) - 2 * y3 - 3 * y4
        y1 = n_l - y2 - y3 - y4
        if min(y1, y2, y3) < 0:
            if y3 < 0:
                break
            continue
        solutions.append((y1, y2, y3, y4))
    return solutions


def printed_census_rhs(p, q, r):
    """Adjacent-pair counts written as sums of binomials per subfamily

    T4(1, 1, 1) falls under the p = q = 1 expression, which is one short
    there: its line graph has 24 pairs of adjacent edges, not 23.

    """
    m = p + q + r + 6
    if p >= 2:
        return 6 * 3 + m - 6
    if q >= 2:
        return 6 + 4 * 3 + m - 5
    return 2 * 6 + 2 * 3 + m - 4


def t4_linegraph_census(p, q, r):
    """Census system data of L(T4(p, q, r)) read from walk counts"""
    lg = line_graph(t4(p, q, r))
    n_l = lg.n
    e_l = closed_walks(lg, 2) // 2
    t_l = closed_walks(lg, 3) // 6
    pairs = adjacent_pairs_from_walks(closed_walks(lg, 4), e_l)
    solutions = linegraph_degree_census(n_l, e_l, t_l, pairs)
    true_census = tuple(lg.degrees.count(d) for d in (1, 2, 3, 4))
    printed = printed_census_rhs(p, q, r)
    return {'params': [p, q, r],
            'n_l': n_l,
            'e_l': e_l,
            't_l': t_l,
            'pairs': pairs,
            'printed_pairs': printed,
            'pairs_match_printed': pairs == printed,
            'printed_offset': pairs - printed,
            'solutions': [list(s) for s in solutions],
            'true_census': list(true_census),
            'contains_true_census': true_census in solutions,
            'unique': len(solutions) == 1,
            'expected_census': list(expected_t4_linegraph_census(p, q, r))}
