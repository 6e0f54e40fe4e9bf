# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from treespec.graph.graph import iter_bits
from treespec.poly.intpoly import IntPoly, DomainError, LAMBDA
from treespec.poly.laurent import LaurentPoly

charpoly_kinds = ('adjacency', 'laplacian')


def _domain_matrix(matrix):
    n = len(matrix)
    rows = [[ZZ(int(x)) for x in row] for row in matrix]
    return DomainMatrix(rows, (n, n), ZZ)


def charpoly(graph, kind='adjacency'):
    """det(x I - M) for M = A(G) or L(G) = D(G) - A(G)

    Computed over ZZ by sympy's division-free Berkowitz algorithm.

    """
    if kind == 'adjacency':
        matrix = graph.adjacency_matrix()
    elif kind == 'laplacian':
        matrix = graph.laplacian_matrix()
    else:
        raise DomainError("Unknown matrix kind '%s'." % kind)
    if graph.n == 0:
        return IntPoly([1])
    coeffs = _domain_matrix(matrix.tolist()).charpoly()
    return IntPoly.from_highest_first([int(c) for c in coeffs])


def spanning_tree_count(graph):
    """Matrix-Tree theorem: determinant of L(G) with row/column 0 removed"""
    n = graph.n
    if n == 0:
        return 0
    if n == 1:
        return 1
    lap = graph.laplacian_matrix()[1:, 1:]
    return int(_domain_matrix(lap.tolist()).det())


_path_polys = {-2: IntPoly([-1]), -1: IntPoly(), 0: IntPoly([1])}


def path_poly(r):
    """p_r = x p_{r-1} - p_{r-2} with p_0 = 1, p_{-1} = 0, p_{-2} = -1"""
    if r < -2:
        raise DomainError("p_%d is outside the path polynomial convention."
                          % r)
    if r not in _path_polys:
        top = max(_path_polys)
        for k in range(top + 1, r + 1):
            _path_polys[k] = LAMBDA * _path_polys[k - 1] - _path_polys[k - 2]
    return _path_polys[r]


def path_poly_laurent(r):
    """p_r(x + 1/x) as (x^(2r+2) - 1) / (x^r (x^2 - 1))

    Returns the pair (numerator, denominator).

    """
    if r < -2:
        raise DomainError("p_%d is outside the path polynomial convention."
                          % r)
    numerator = LaurentPoly.from_terms([(1, 2 * r + 2), (-1, 0)])
    denominator = LaurentPoly.from_terms([(1, r + 2), (-1, r)])
    return numerator, denominator


def _cycles_through(rows, mask, v):
    """Vertex bitsets of cycles through v inside the vertex set mask

    Each cycle is found once: its second vertex is smaller than its last.

    """
    cycles = []
    start_neighbors = rows[v] & mask
    for first in iter_bits(start_neighbors):
        stack = [(first, (1 << v) | (1 << first))]
        while stack:
            u, visited = stack.pop()
            for w in iter_bits(rows[u] & mask & ~visited):
                if (start_neighbors >> w) & 1 and w > first:
                    cycles.append(visited | (1 << w))
                stack.append((w, visited | (1 << w)))
    return cycles


def deletion_charpoly(graph, v):
    """Characteristic polynomial expanded at vertex v

    P(G) = x P(G - v) - sum_{u ~ v} P(G - u - v)
           - 2 sum_{Z cycle through v} P(G - V(Z))

    Every smaller characteristic polynomial is expanded the same way
    at its least vertex, down to the empty graph.

    """
    if not 0 <= v < graph.n:
        raise DomainError("Vertex %d is not in the graph." % v)
    rows = graph.rows
    memo = {0: IntPoly([1])}

    def expand(mask, w=None):
        if w is None and mask in memo:
            return memo[mask]
        if w is None:
            w = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << w)
        value = LAMBDA * expand(rest)
        for u in iter_bits(rows[w] & mask):
            value = value - expand(rest & ~(1 << u))
        for cycle in _cycles_through(rows, mask, w):
            value = value - expand(mask & ~cycle) * 2
        memo[mask] = value
        return value

    return expand((1 << graph.n) - 1, v)


def power_sums(poly, k_max):
    """Power sums s_0 .. s_k_max of the roots of a monic polynomial

    Newton's identities over the integers; no root is extracted.

    """
    if not poly.is_monic():
        raise DomainError("Power sums need a monic polynomial.")
    n = poly.degree
    # e_k = (-1)^k c_{n-k}
    e = [1] + [(-1) ** k * poly.coefficient(n - k) for k in range(1, n + 1)]
    sums = [n]
    for k in range(1, k_max + 1):
        s = 0
        for i in range(1, min(k - 1, n) + 1):
            s += (-1) ** (i - 1) * e[i] * sums[k - i]
        if k <= n:
            s += (-1) ** (k - 1) * k * e[k]
        sums.append(s)
    return sums
