# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from treespec.graph.graph import Graph, CapacityError
from treespec.graph.canonical import canonical_form
from treespec.graph.codecs import encode_graph6, decode_graph6
from treespec.graph.families import FamilySpec, build_family

MAX_WALK_LENGTH = 8

_patterns = {}
_coefficients = {}
_catalog = []


def enumerate_patterns(max_edges):
    """Connected graphs with 1 .. max_edges edges, no isolated vertices

    Built by edge augmentation: every connected graph with m edges arises
    from one with m - 1 edges by adding an edge between two present
    vertices or a pendant edge to a new vertex. Sorted by (vertices, edges,
    canonical certificate).

    """
    if max_edges in _patterns:
        return list(_patterns[max_edges])
    layer = {canonical_form(Graph.from_edges(2, [(0, 1)])).certificate:
             Graph.from_edges(2, [(0, 1)])}
    found = dict(layer)
    for m in range(2, max_edges + 1):
        next_layer = {}
        for g in layer.values():
            for child in _edge_children(g):
                key = canonical_form(child).certificate
                if key not in next_layer:
                    next_layer[key] = child
        found.update(next_layer)
        layer = next_layer
    patterns = sorted(found.values(), key=pattern_sort_key)
    _patterns[max_edges] = patterns
    return list(patterns)


def pattern_sort_key(graph):
    return (graph.n, graph.m, canonical_form(graph).certificate)


def _edge_children(graph):
    n = graph.n
    rows = graph.rows
    for u in range(n):
        for v in range(u + 1, n):
            if not (rows[u] >> v) & 1:
                new_rows = list(rows)
                new_rows[u] |= 1 << v
                new_rows[v] |= 1 << u
                yield Graph(n, new_rows)
    for u in range(n):
        new_rows = list(rows) + [1 << u]
        new_rows[u] |= 1 << n
        yield Graph(n + 1, new_rows)


def covering_walk_count(pattern, k):
    """Closed walks of length k in pattern that use every edge

    Dynamic programme over (current vertex, used-edge mask), summed over
    all start vertices.

    """
    edges = pattern.edges
    index = {}
    for i, (u, v) in enumerate(edges):
        index[(u, v)] = i
        index[(v, u)] = i
    full = (1 << len(edges)) - 1
    neighbors = [pattern.neighbors(v) for v in range(pattern.n)]
    total = 0
    for start in range(pattern.n):
        states = {(start, 0): 1}
        for step in range(k):
            next_states = {}
            for (v, mask), count in states.items():
                for u in neighbors[v]:
                    key = (u, mask | (1 << index[(v, u)]))
                    next_states[key] = next_states.get(key, 0) + count
            states = next_states
        total += states.get((start, full), 0)
    return total


def walk_coefficients(k):
    """[(pattern, coefficient)] with nonzero coefficients for length k"""
    if k < 1:
        raise ValueError("Walk length has to be positive.")
    if k > MAX_WALK_LENGTH:
        raise CapacityError("Walk length %d exceeds the census bound %d."
                            % (k, MAX_WALK_LENGTH))
    if k not in _coefficients:
        terms = []
        for pattern in enumerate_patterns(k):
            coef = covering_walk_count(pattern, k)
            if coef:
                terms.append((pattern, coef))
        _coefficients[k] = terms
    return list(_coefficients[k])


class PatternCatalog(object):
    """Named small graphs with their automorphism counts

    P2, P3, K3, C4, C5, C7 and G1 (triangle with a pendant edge) are built
    explicitly. G2 .. G8 are the remaining patterns of the length-7 walk
    identity taken in (vertices, edges, certificate) order. Any other
    pattern is named "H:" followed by its canonical graph6.

    """

    def __init__(self, entries=None):
        self._entries = []
        self._by_certificate = {}
        self._by_name = {}
        if entries is not None:
            for name, graph in entries:
                self.add(name, graph)

    def add(self, name, graph):
        form = canonical_form(graph)
        if form.certificate in self._by_certificate:
            raise ValueError("Pattern %s is isomorphic to %s."
                             % (name, self._by_certificate[form.certificate]))
        if name in self._by_name:
            raise ValueError("Pattern name %s is used twice." % name)
        self._entries.append((name, graph, form.aut_count))
        self._by_certificate[form.certificate] = name
        self._by_name[name] = len(self._entries) - 1

    @property
    def entries(self):
        return list(self._entries)

    @property
    def names(self):
        return [name for name, _, _ in self._entries]

    def get(self, name):
        if name.startswith('H:') and name not in self._by_name:
            return decode_graph6(name[2:])
        return self._entries[self._by_name[name]][1]

    def aut_count(self, name):
        return canonical_form(self.get(name)).aut_count

    def name_of(self, graph):
        form = canonical_form(graph)
        if form.certificate in self._by_certificate:
            return self._by_certificate[form.certificate]
        return "H:" + form.graph6

    def get_lines(self):
        """'name<TAB>graph6' lines"""
        return ["%s\t%s" % (name, encode_graph6(graph))
                for name, graph, _ in self._entries]

    @classmethod
    def from_lines(cls, lines):
        catalog = cls()
        for line in lines:
            body = line.split('#')[0].strip()
            if not body:
                continue
            fields = body.split('\t')
            if len(fields) != 2:
                fields = body.split()
            if len(fields) != 2:
                raise ValueError("Catalog line '%s' is not "
                                 "'name<TAB>graph6'." % body)
            catalog.add(fields[0], decode_graph6(fields[1]))
        return catalog

    def get_yaml_lines(self):
        lines = ["patterns:"]
        for name, graph, aut_count in self._entries:
            lines.append("- name: %s" % name)
            lines.append("  graph6: \"%s\"" % encode_graph6(graph))
            lines.append("  num_vertices: %d" % graph.n)
            lines.append("  num_edges: %d" % graph.m)
            lines.append("  aut_count: %d" % aut_count)
        return lines

    def __len__(self):
        return len(self._entries)

    def __str__(self):
        return "\n".join(self.get_yaml_lines())


def paw():
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def named_patterns():
    return [('P2', build_family(FamilySpec('Path', (2,)))),
            ('P3', build_family(FamilySpec('Path', (3,)))),
            ('K3', build_family(FamilySpec('Cycle', (3,)))),
            ('C4', build_family(FamilySpec('Cycle', (4,)))),
            ('C5', build_family(FamilySpec('Cycle', (5,)))),
            ('C7', build_family(FamilySpec('Cycle', (7,)))),
            ('G1', paw())]


def pattern_catalog():
    """The default catalog (built once)"""
    if _catalog:
        return _catalog[0]
    catalog = PatternCatalog(named_patterns())
    extra = [pattern for pattern, _ in walk_coefficients(7)
             if catalog.name_of(pattern).startswith('H:')]
    for i, pattern in enumerate(sorted(extra, key=pattern_sort_key)):
        catalog.add("G%d" % (i + 2), pattern)
    _catalog.append(catalog)
    return catalog
