# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from treespec.poly.intpoly import IntPoly, DomainError, LAMBDA
from treespec.poly.charpoly import power_sums, spanning_tree_count


class LaplacianFacts(object):
    """Graph invariants read off a Laplacian characteristic polynomial

    Only the polynomial is consulted. sum_deg_cube is None unless the
    input is certified bipartite.

    """

    def __init__(self, n, m, components, spanning_trees, sum_deg_sq,
                 sum_deg_cube=None):
        self.n = n
        self.m = m
        self.components = components
        self.spanning_trees = spanning_trees
        self.sum_deg_sq = sum_deg_sq
        self.sum_deg_cube = sum_deg_cube

    def is_tree(self):
        return self.components == 1 and self.m == self.n - 1

    def to_dict(self):
        return {'n': self.n,
                'm': self.m,
                'components': self.components,
                'spanning_trees': self.spanning_trees,
                'sum_deg_sq': self.sum_deg_sq,
                'sum_deg_cube': self.sum_deg_cube}

    def totuple(self):
        return (self.n, self.m, self.components, self.spanning_trees,
                self.sum_deg_sq, self.sum_deg_cube)

    def __eq__(self, other):
        if not isinstance(other, LaplacianFacts):
            return NotImplemented
        return self.totuple() == other.totuple()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.totuple())

    def get_yaml_lines(self):
        lines = []
        for key, value in (('n', self.n), ('m', self.m),
                           ('components', self.components),
                           ('spanning_trees', self.spanning_trees),
                           ('sum_deg_sq', self.sum_deg_sq)):
            lines.append("%-15s %d" % (key + ':', value))
        if self.sum_deg_cube is not None:
            lines.append("%-15s %d" % ('sum_deg_cube:', self.sum_deg_cube))
        return lines

    def __repr__(self):
        return "LaplacianFacts(%s)" % ", ".join(
            "%s=%s" % item for item in sorted(self.to_dict().items()))

    def __str__(self):
        return "\n".join(self.get_yaml_lines())


def facts_from_graph(graph):
    """The same invariants computed directly from a graph"""
    degrees = graph.degrees
    components = graph.num_components()
    sum_deg_cube = None
    if graph.is_forest():
        sum_deg_cube = sum(d ** 3 for d in degrees)
    return LaplacianFacts(graph.n, graph.m, components,
                          spanning_tree_count(graph) if components == 1
                          else 0,
                          sum(d ** 2 for d in degrees), sum_deg_cube)


def check_laplacian_poly(poly):
    """Raise DomainError unless poly looks like det(x I - L(G))"""
    if poly.is_zero() or not poly.is_monic():
        raise DomainError("Laplacian polynomial has to be monic.")
    if poly.degree >= 1 and poly.coefficient(0) != 0:
        raise DomainError("Laplacian polynomial has a nonzero constant "
                          "term %d." % poly.coefficient(0))
    n = poly.degree
    for i, c in enumerate(poly.coeffs):
        if c and (c > 0) != ((n - i) % 2 == 0):
            raise DomainError("Coefficient of x^%d has the wrong sign for "
                              "a Laplacian polynomial." % i)


def laplacian_facts(poly, bipartite=None):
    """LaplacianFacts of det(x I - L(G)) without access to G

    m, the sum of squared degrees and, for bipartite inputs, the sum of
    cubed degrees come from the power sums of the roots:
        s_1 = 2m
        s_2 = sum d^2 + 2m
        s_3 = sum d^3 + 3 sum d^2 - 6 t      (t triangles)
    Bipartiteness is taken from the argument or, when it is None, from the
    forest criterion m = n - components, which the polynomial itself
    certifies.

    """
    check_laplacian_poly(poly)
    n = poly.degree
    sums = power_sums(poly, 3)
    m = sums[1] // 2
    components = poly.lowest_order() if n > 0 else 0
    if components == 1:
        spanning_trees = abs(poly.coefficient(1)) // n
    else:
        spanning_trees = 0
    sum_deg_sq = sums[2] - 2 * m
    if bipartite is None:
        bipartite = (m == n - components)
    sum_deg_cube = None
    if bipartite:
        sum_deg_cube = sums[3] - 3 * sum_deg_sq
    return LaplacianFacts(n, m, components, spanning_trees, sum_deg_sq,
                          sum_deg_cube)


def complement_laplacian(poly, n=None):
    """Laplacian polynomial of the complement, by a polynomial transform

    With poly = x R(x), the complement has (-1)^(n-1) x R(n - x): the
    zero root is kept and every other root mu moves to n - mu.

    """
    check_laplacian_poly(poly)
    if n is None:
        n = poly.degree
    if n != poly.degree:
        raise DomainError("Polynomial degree %d does not match n = %d."
                          % (poly.degree, n))
    if n == 0:
        return IntPoly([1])
    reduced = poly.divide_by_power(1)
    sign = -1 if (n - 1) % 2 else 1
    return LAMBDA * reduced.reflect(n) * sign


def line_graph_charpoly_from_laplacian(poly):
    """Adjacency polynomial of L(T) for a tree T from its Laplacian one

    L(T) has the Laplacian eigenvalues of T minus 2 with the zero root
    dropped, so P_L(x) = R(x + 2) with poly = x R(x).

    """
    check_laplacian_poly(poly)
    return poly.divide_by_power(1).shift(2)
