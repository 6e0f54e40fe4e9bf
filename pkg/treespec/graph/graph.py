# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

import numpy as np

# Rows are Python ints, so a row is a single machine word up to 64
# vertices and transparently multi-word above it. The ceiling only guards
# against runaway inputs.
MAX_VERTICES = 4096


class CapacityError(RuntimeError):
    pass


class MissingEdgeError(ValueError):
    pass


def iter_bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x):
    return bin(x).count('1')


class Graph(object):
    """Undirected simple graph stored as per-vertex adjacency bitsets.

    Graphs are treated as immutable values: every operation of this
    package returns a new Graph.

    Parameters
    ----------
    num_vertices: int
        Number of vertices, labelled 0 .. num_vertices - 1.
    rows: sequence of int, optional
        rows[v] has bit u set iff u and v are adjacent.

    """

    def __init__(self, num_vertices, rows=None):
        if num_vertices < 0:
            raise ValueError("Number of vertices has to be non-negative.")
        if num_vertices > MAX_VERTICES:
            raise CapacityError(
                "%d vertices exceed the capacity of %d."
                % (num_vertices, MAX_VERTICES))
        self._n = num_vertices
        if rows is None:
            self._rows = (0,) * num_vertices
        else:
            self._rows = tuple(int(x) for x in rows)
        self._degrees = None
        self._check()

    @classmethod
    def from_edges(cls, num_vertices, edges):
        rows = [0] * num_vertices
        for u, v in edges:
            if u == v:
                raise ValueError("Self-loop at vertex %d." % u)
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError("Edge (%d, %d) is out of range." % (u, v))
            if (rows[u] >> v) & 1:
                raise ValueError("Multiple edge (%d, %d)." % (u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(num_vertices, rows)

    @classmethod
    def from_networkx(cls, nx_graph):
        nodes = sorted(nx_graph.nodes())
        index = dict((x, i) for i, x in enumerate(nodes))
        return cls.from_edges(
            len(nodes),
            [(index[u], index[v]) for u, v in nx_graph.edges()])

    def to_networkx(self):
        import networkx as nx
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    @property
    def n(self):
        return self._n

    @property
    def num_vertices(self):
        return self._n

    @property
    def rows(self):
        return self._rows

    @property
    def degrees(self):
        if self._degrees is None:
            self._degrees = tuple(popcount(x) for x in self._rows)
        return self._degrees

    @property
    def m(self):
        return sum(self.degrees) // 2

    @property
    def num_edges(self):
        return self.m

    @property
    def edges(self):
        """Edges (u, v) with u < v in lexicographic order."""
        edge_list = []
        for u in range(self._n):
            for v in iter_bits(self._rows[u] >> (u + 1)):
                edge_list.append((u, u + 1 + v))
        return edge_list

    @property
    def max_degree(self):
        if self._n == 0:
            return 0
        return max(self.degrees)

    def neighbors(self, v):
        return list(iter_bits(self._rows[v]))

    def has_edge(self, u, v):
        return bool((self._rows[u] >> v) & 1)

    def copy(self):
        return Graph(self._n, self._rows)

    def totuple(self):
        return (self._n, self._rows)

    def components(self):
        """Vertex bitsets of connected components, ordered by least vertex"""
        unseen = (1 << self._n) - 1
        comps = []
        while unseen:
            start = unseen & -unseen
            comp = start
            frontier = start
            while frontier:
                reach = 0
                for v in iter_bits(frontier):
                    reach |= self._rows[v]
                frontier = reach & ~comp
                comp |= frontier
            comps.append(comp)
            unseen &= ~comp
        return comps

    def num_components(self):
        return len(self.components())

    def is_connected(self):
        return self._n > 0 and len(self.components()) == 1

    def is_tree(self):
        return self.is_connected() and self.m == self._n - 1

    def is_forest(self):
        return self.m == self._n - len(self.components())

    def triangle_count(self):
        count = 0
        for u, v in self.edges:
            count += popcount(self._rows[u] & self._rows[v])
        return count // 3

    def adjacency_matrix(self):
        adj = np.zeros((self._n, self._n), dtype='int64')
        for u, v in self.edges:
            adj[u, v] = 1
            adj[v, u] = 1
        return adj

    def laplacian_matrix(self):
        return np.diag(np.array(self.degrees, dtype='int64')) - \
            self.adjacency_matrix()

    def get_yaml_lines(self):
        lines = ["num_vertices: %d" % self._n,
                 "num_edges: %d" % self.m,
                 "edges:"]
        for u, v in self.edges:
            lines.append("- [ %d, %d ]" % (u, v))
        return lines

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.totuple() == other.totuple()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.totuple())

    def __repr__(self):
        return "Graph(%d, edges=%s)" % (self._n, self.edges)

    def __str__(self):
        return "\n".join(self.get_yaml_lines())

    def _check(self):
        if len(self._rows) != self._n:
            raise RuntimeError('len(rows) != num_vertices.')
        full = (1 << self._n) - 1
        for v, row in enumerate(self._rows):
            if row & ~full:
                raise RuntimeError('Row %d points outside the vertex set.'
                                   % v)
            if (row >> v) & 1:
                raise RuntimeError('Self-loop at vertex %d.' % v)
            for u in iter_bits(row):
                if not (self._rows[u] >> v) & 1:
                    raise RuntimeError('Adjacency is not symmetric at '
                                       '(%d, %d).' % (v, u))


def line_graph(graph):
    """Line graph with vertices ordered lexicographically by edge"""
    edges = graph.edges
    incident = [0] * graph.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = []
    for i, (u, v) in enumerate(edges):
        rows.append((incident[u] | incident[v]) & ~(1 << i))
    return Graph(len(edges), rows)


def complement(graph):
    full = (1 << graph.n) - 1
    rows = [(full & ~row) & ~(1 << v) for v, row in enumerate(graph.rows)]
    return Graph(graph.n, rows)


def subdivide_edge(graph, u, v):
    """Replace edge uv by a path u-w-v through a new vertex w = n"""
    if u == v or not (0 <= u < graph.n and 0 <= v < graph.n):
        raise MissingEdgeError("(%d, %d) is not an edge." % (u, v))
    if not graph.has_edge(u, v):
        raise MissingEdgeError("(%d, %d) is not an edge." % (u, v))
    w = graph.n
    rows = list(graph.rows)
    rows[u] = (rows[u] & ~(1 << v)) | (1 << w)
    rows[v] = (rows[v] & ~(1 << u)) | (1 << w)
    rows.append((1 << u) | (1 << v))
    return Graph(graph.n + 1, rows)


def delete_vertices(graph, vertices):
    """Induced subgraph on the remaining vertices, order preserved"""
    removed = 0
    for v in vertices:
        removed |= 1 << v
    keep = [v for v in range(graph.n) if not (removed >> v) & 1]
    return induced_subgraph(graph, keep)


def induced_subgraph(graph, vertices):
    index = dict((v, i) for i, v in enumerate(vertices))
    rows = []
    for v in vertices:
        row = 0
        for u in iter_bits(graph.rows[v]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph(len(vertices), rows)


def relabel(graph, order):
    """Graph whose vertex i is vertex order[i] of the input"""
    return induced_subgraph(graph, order)


def disjoint_union(*graphs):
    rows = []
    offset = 0
    for g in graphs:
        rows += [row << offset for row in g.rows]
        offset += g.n
    return Graph(offset, rows)
