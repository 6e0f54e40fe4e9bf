# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

import numpy as np
from treespec.graph.graph import iter_bits
from treespec.graph.canonical import canonical_form
from treespec.graph.codecs import encode_graph6
from treespec.graph.trees import enumerate_graphs, DEFAULT_CENSUS_LIMIT
from treespec.walks.patterns import (walk_coefficients, pattern_catalog,
                                     pattern_sort_key)

identity_lengths = (2, 3, 4, 5, 7)


def closed_walks(graph, k):
    """Trace of A^k with exact (object dtype) integer arithmetic"""
    if k < 0:
        raise ValueError("Walk length has to be non-negative.")
    if k == 0:
        return graph.n
    adj = graph.adjacency_matrix().astype(object)
    power = adj
    for i in range(k - 1):
        power = power.dot(adj)
    return int(np.trace(power))


def count_embeddings(graph, pattern):
    """Injective maps of pattern into graph that send edges to edges"""
    if pattern.n > graph.n or pattern.m > graph.m:
        return 0
    order = _bfs_order(pattern)
    position = dict((v, i) for i, v in enumerate(order))
    back = []
    for v in order:
        back.append([u for u in pattern.neighbors(v)
                     if position[u] < position[v]])
    need = [pattern.degrees[v] for v in order]
    rows = graph.rows
    degrees = graph.degrees
    all_vertices = (1 << graph.n) - 1
    image = [0] * len(order)

    def extend(i, used):
        if i == len(order):
            return 1
        candidates = all_vertices & ~used
        for u in back[i]:
            candidates &= rows[image[position[u]]]
        count = 0
        for w in iter_bits(candidates):
            if degrees[w] >= need[i]:
                image[i] = w
                count += extend(i + 1, used | (1 << w))
        return count

    return extend(0, 0)


def _bfs_order(graph):
    order = []
    seen = 0
    for root in range(graph.n):
        if (seen >> root) & 1:
            continue
        seen |= 1 << root
        order.append(root)
        i = len(order) - 1
        while i < len(order):
            for u in iter_bits(graph.rows[order[i]] & ~seen):
                seen |= 1 << u
                order.append(u)
            i += 1
    return order


def count_subgraph_copies(graph, pattern):
    """Number of (not necessarily induced) subgraphs isomorphic to pattern"""
    if pattern.n == 0:
        raise ValueError("Pattern has to be nonempty.")
    if not pattern.is_connected():
        raise ValueError("Pattern has to be connected.")
    return count_embeddings(graph, pattern) // \
        canonical_form(pattern).aut_count


class WalkIdentity(object):
    """N_G(k) = sum of coefficient * N_G(pattern)

    terms are (name, coefficient) pairs in (vertices, edges, certificate)
    order of the patterns; patterns maps names to graphs.

    """

    def __init__(self, k, terms, patterns):
        self._k = k
        self._terms = list(terms)
        self._patterns = dict(patterns)
        self._aut_counts = dict((name, canonical_form(g).aut_count)
                                for name, g in self._patterns.items())

    @property
    def k(self):
        return self._k

    @property
    def terms(self):
        return list(self._terms)

    @property
    def patterns(self):
        return dict(self._patterns)

    @property
    def coefficients(self):
        return dict(self._terms)

    def evaluate(self, graph):
        return sum(coef * self.copies(graph, name)
                   for name, coef in self._terms)

    def copies(self, graph, name):
        return count_embeddings(graph, self._patterns[name]) // \
            self._aut_counts[name]

    def get_yaml_lines(self):
        lines = ["k: %d" % self._k, "terms:"]
        for name, coef in self._terms:
            pattern = self._patterns[name]
            lines.append("- name: %s" % name)
            lines.append("  coefficient: %d" % coef)
            lines.append("  graph6: \"%s\"" % encode_graph6(pattern))
            lines.append("  num_vertices: %d" % pattern.n)
            lines.append("  num_edges: %d" % pattern.m)
        return lines

    def to_dict(self):
        return {'k': self._k,
                'terms': [{'name': name,
                           'coefficient': coef,
                           'graph6': encode_graph6(self._patterns[name]),
                           'num_vertices': self._patterns[name].n,
                           'num_edges': self._patterns[name].m}
                          for name, coef in self._terms]}

    def __str__(self):
        if not self._terms:
            return "N(%d) = 0" % self._k
        body = " + ".join("%d N(%s)" % (coef, name)
                          for name, coef in self._terms)
        return "N(%d) = %s" % (self._k, body)


def derive_walk_identity(k, catalog=None):
    """Coefficients of the closed-walk decomposition of length k

    A pattern's coefficient is the number of closed k-walks inside it
    that use every one of its edges; patterns with zero coefficient are
    dropped.

    """
    if catalog is None:
        catalog = pattern_catalog()
    terms = []
    patterns = {}
    for pattern, coef in sorted(walk_coefficients(k),
                                key=lambda x: pattern_sort_key(x[0])):
        name = catalog.name_of(pattern)
        terms.append((name, coef))
        patterns[name] = pattern
    return WalkIdentity(k, terms, patterns)


def pattern_counts(graph, identity):
    """{name: N_graph(pattern)} for the patterns of an identity"""
    return dict((name, identity.copies(graph, name))
                for name, _ in identity.terms)


def adjacent_edge_pairs(graph):
    """N(P3): pairs of edges sharing an endpoint"""
    return sum(d * (d - 1) // 2 for d in graph.degrees)


def _check_graph(args):
    graph, identities = args
    violations = []
    for identity in identities:
        lhs = closed_walks(graph, identity.k)
        rhs = identity.evaluate(graph)
        if lhs != rhs:
            violations.append({'graph6': encode_graph6(graph),
                               'k': identity.k,
                               'closed_walks': lhs,
                               'identity_value': rhs})
    return violations


def verify_walk_identities(census_max_n, ks=identity_lengths,
                           limit=DEFAULT_CENSUS_LIMIT, workers=1,
                           log_level=0):
    """Check every derived identity on every connected graph up to max_n

    Both sides are additive over connected components, so connected
    graphs cover all graphs.

    """
    identities = [derive_walk_identity(k) for k in ks]
    graphs = list(enumerate_graphs(census_max_n, limit=limit,
                                   log_level=(log_level > 1)))
    if log_level:
        print("Walk identity census: %d connected graphs with at most %d "
              "vertices, k = %s" % (len(graphs), census_max_n,
                                    ", ".join(str(k) for k in ks)))
        for identity in identities:
            print("  %s" % identity)
    tasks = [(g, identities) for g in graphs]
    if workers > 1:
        from multiprocessing import Pool
        pool = Pool(workers)
        try:
            results = list(pool.imap(_check_graph, tasks, chunksize=64))
        finally:
            pool.close()
            pool.join()
    else:
        results = [_check_graph(t) for t in tasks]
    violations = [v for result in results for v in result]
    if log_level:
        print("Violations: %d" % len(violations))
    return {'census_max_n': census_max_n,
            'graphs_checked': len(graphs),
            'identities': [identity.to_dict() for identity in identities],
            'violations': violations,
            'passed': not violations}


def odd_walks_vanish(graph, k_max=7):
    """True if no closed walk of odd length up to k_max exists"""
    return all(closed_walks(graph, k) == 0 for k in range(1, k_max + 1, 2))


def edge_count_from_walks(graph):
    return closed_walks(graph, 2) // 2


def triangle_count_from_walks(graph):
    return closed_walks(graph, 3) // 6
