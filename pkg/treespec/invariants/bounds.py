# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from fractions import Fraction
from treespec.graph.graph import subdivide_edge
from treespec.graph.canonical import is_isomorphic
from treespec.graph.families import FamilySpec, build_family
from treespec.poly.intpoly import DomainError
from treespec.poly.charpoly import charpoly
from treespec.poly.sturm import (sturm_count, real_root_enclosure,
                                 compare_largest_roots, DEFAULT_WIDTH)
from treespec.invariants.degrees import HypothesisError


class ExceptionCaseError(RuntimeError):
    pass


def _enclosure_dict(enclosure):
    lo, hi = enclosure
    return {'lower': "%s" % lo,
            'upper': "%s" % hi,
            'value': float((lo + hi) / 2)}


def edge_upper_bound(graph):
    """max over edges uv of (d_u (d_u + m_u) + d_v (d_v + m_v)) / (d_u + d_v)

    m_v is the average degree of the neighbours of v, so
    d_v (d_v + m_v) = d_v^2 + (sum of neighbour degrees).

    """
    degrees = graph.degrees
    nsum = [sum(degrees[u] for u in graph.neighbors(v))
            for v in range(graph.n)]
    best = None
    for u, v in graph.edges:
        value = Fraction(degrees[u] ** 2 + nsum[u] + degrees[v] ** 2 +
                         nsum[v], degrees[u] + degrees[v])
        if best is None or value > best:
            best = value
    return best


def mu1_bounds_check(graph, width=DEFAULT_WIDTH):
    """Delta + 1 <= mu_1 <= edge bound, decided by Sturm counts"""
    if graph.m == 0:
        raise DomainError("The largest Laplacian eigenvalue bounds need at "
                          "least one edge.")
    poly = charpoly(graph, 'laplacian')
    lower = graph.max_degree + 1
    upper = edge_upper_bound(graph)
    lower_holds = (poly(lower) == 0 or sturm_count(poly, lower, None) > 0)
    upper_holds = sturm_count(poly, upper, None) == 0
    enclosure = real_root_enclosure(poly, width=width)
    return {'num_vertices': graph.n,
            'lower_bound': lower,
            'upper_bound': "%s" % upper,
            'mu1': _enclosure_dict(enclosure),
            'enclosure_width': "%s" % (enclosure[1] - enclosure[0]),
            'lower_holds': lower_holds,
            'upper_holds': upper_holds,
            'passed': lower_holds and upper_holds}


def _walk_internal(graph, start, previous):
    """Follow degree-2 vertices from start away from previous

    Returns the degree of the first vertex that is not of degree 2, or 2
    if the walk closes a cycle of degree-2 vertices.

    """
    degrees = graph.degrees
    v = start
    came = previous
    seen = set([previous])
    while degrees[v] == 2:
        if v in seen:
            return 2
        seen.add(v)
        nxt = [u for u in graph.neighbors(v) if u != came][0]
        came, v = v, nxt
    return degrees[v]


def is_internal_path_edge(graph, u, v):
    """Whether uv lies on a path whose ends have degree >= 3 and whose
    inner vertices have degree 2 (the ends may coincide)"""
    end_u = _walk_internal(graph, u, v)
    end_v = _walk_internal(graph, v, u)
    return end_u >= 3 and end_v >= 3


def is_w_graph(graph):
    if graph.n < 6 or not graph.is_tree():
        return False
    return is_isomorphic(graph, build_family(FamilySpec('WGraph',
                                                        (graph.n,))))


def subdivision_check(graph, u, v, width=DEFAULT_WIDTH):
    """lambda_1 does not increase when an internal-path edge is subdivided

    Cycles are the equality case. W_n is the exception and is rejected.

    """
    if not graph.is_connected():
        raise HypothesisError("Subdivision check needs a connected graph.")
    if not graph.has_edge(u, v):
        # raises MissingEdgeError
        subdivide_edge(graph, u, v)
    if is_w_graph(graph):
        raise ExceptionCaseError("Input is isomorphic to W_%d." % graph.n)
    is_cycle = all(d == 2 for d in graph.degrees)
    if not is_cycle and not is_internal_path_edge(graph, u, v):
        raise HypothesisError("Edge (%d, %d) does not lie on an internal "
                              "path." % (u, v))
    subdivided = subdivide_edge(graph, u, v)
    before = charpoly(graph, 'adjacency')
    after = charpoly(subdivided, 'adjacency')
    comparison = compare_largest_roots(after, before)
    if is_cycle:
        holds = comparison == 0
    else:
        holds = comparison <= 0
    return {'edge': [u, v],
            'cycle': is_cycle,
            'lambda1_before': _enclosure_dict(
                real_root_enclosure(before, width=width)),
            'lambda1_after': _enclosure_dict(
                real_root_enclosure(after, width=width)),
            'comparison': comparison,
            'passed': holds}


def internal_path_edges(graph):
    return [(u, v) for u, v in graph.edges
            if is_internal_path_edge(graph, u, v)]
