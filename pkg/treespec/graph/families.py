# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from treespec.graph.graph import Graph, line_graph, iter_bits

family_kinds = ('T4', 'Path', 'Cycle', 'Star', 'CompleteBipartite',
                'Centipede', 'WGraph', 'Complete')

# Accepted spellings on the command line
family_aliases = {'t4': 'T4',
                  'path': 'Path',
                  'cycle': 'Cycle',
                  'star': 'Star',
                  'completebipartite': 'CompleteBipartite',
                  'bipartite': 'CompleteBipartite',
                  'centipede': 'Centipede',
                  'wgraph': 'WGraph',
                  'w': 'WGraph',
                  'complete': 'Complete'}


class ParameterOrderError(ValueError):
    pass


class StructuralHypothesisError(RuntimeError):
    pass


class FamilySpec(object):
    """Named graph family with its integer parameters

    T4          (p, q, r) with 1 <= p <= q <= r
    Path        (k,) with k >= 1 vertices
    Cycle       (k,) with k >= 3
    Star        (k,) with k >= 1 leaves
    CompleteBipartite  (a, b) with a, b >= 1
    Complete    (k,) with k >= 1
    Centipede   (k,) with k >= 2 path vertices, 2k - 2 vertices in total
    WGraph      (n,) with n >= 6

    """

    _num_params = {'T4': 3, 'Path': 1, 'Cycle': 1, 'Star': 1,
                   'CompleteBipartite': 2, 'Centipede': 1, 'WGraph': 1,
                   'Complete': 1}

    def __init__(self, kind, params):
        if kind in family_aliases:
            kind = family_aliases[kind]
        elif kind.lower() in family_aliases:
            kind = family_aliases[kind.lower()]
        if kind not in family_kinds:
            raise ValueError("Unknown graph family '%s'." % kind)
        self._kind = kind
        self._params = tuple(int(x) for x in params)
        self._check()

    @property
    def kind(self):
        return self._kind

    @property
    def params(self):
        return self._params

    @property
    def num_vertices(self):
        k = self._params
        if self._kind == 'T4':
            return sum(k) + 7
        if self._kind == 'Star':
            return k[0] + 1
        if self._kind == 'CompleteBipartite':
            return k[0] + k[1]
        if self._kind == 'Centipede':
            return 2 * k[0] - 2
        return k[0]

    def __repr__(self):
        return "FamilySpec(%s, %s)" % (self._kind, self._params)

    def _check(self):
        if len(self._params) != self._num_params[self._kind]:
            raise ValueError("%s takes %d parameter(s), %d given."
                             % (self._kind, self._num_params[self._kind],
                                len(self._params)))
        k = self._params
        if self._kind == 'T4':
            if not (1 <= k[0] <= k[1] <= k[2]):
                raise ParameterOrderError(
                    "T4 parameters have to satisfy 1 <= p <= q <= r, "
                    "got (%d, %d, %d)." % k)
            return
        lower = {'Path': 1, 'Cycle': 3, 'Star': 1, 'CompleteBipartite': 1,
                 'Centipede': 2, 'WGraph': 6, 'Complete': 1}[self._kind]
        if min(k) < lower:
            raise ParameterOrderError(
                "%s parameters have to be at least %d, got %s."
                % (self._kind, lower, k))


def build_family(spec, check=True):
    """Construct the graph named by a FamilySpec

    T4(p, q, r) is a centre vertex 0 with three legs of p, q and r path
    vertices. The far end of every leg carries two pendant leaves. Every
    T4 construction is validated by check_t4_structure unless check is
    False.

    """
    kind = spec.kind
    k = spec.params
    if kind == 'Path':
        return Graph.from_edges(k[0], [(i, i + 1) for i in range(k[0] - 1)])
    if kind == 'Cycle':
        return Graph.from_edges(k[0],
                                [(i, (i + 1) % k[0]) for i in range(k[0])])
    if kind == 'Star':
        return Graph.from_edges(k[0] + 1,
                                [(0, i) for i in range(1, k[0] + 1)])
    if kind == 'Complete':
        return Graph.from_edges(
            k[0], [(i, j) for i in range(k[0]) for j in range(i + 1, k[0])])
    if kind == 'CompleteBipartite':
        a, b = k
        return Graph.from_edges(
            a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == 'Centipede':
        return _centipede(k[0])
    if kind == 'WGraph':
        return _w_graph(k[0])
    graph = _t4(*k)
    if check:
        report = check_t4_structure(k[0], k[1], k[2], graph=graph)
        if not report['passed']:
            raise StructuralHypothesisError(
                "T4(%d, %d, %d) fails the structural self-test: %s"
                % (k + (", ".join(report['failures']),)))
    return graph


def t4(p, q, r):
    return build_family(FamilySpec('T4', (p, q, r)))


def _t4(p, q, r):
    edges = []
    n = 1
    tips = []
    for a in (p, q, r):
        prev = 0
        for i in range(a):
            edges.append((prev, n))
            prev = n
            n += 1
        tips.append(prev)
    for tip in tips:
        edges.append((tip, n))
        edges.append((tip, n + 1))
        n += 2
    return Graph.from_edges(n, edges)


def _centipede(k):
    # path 0 .. k-1, pendant k + i - 1 on internal vertex i
    edges = [(i, i + 1) for i in range(k - 1)]
    for i in range(1, k - 1):
        edges.append((i, k + i - 1))
    return Graph.from_edges(2 * k - 2, edges)


def _w_graph(n):
    # P_{n-2} with pendants on its second and second to last vertices
    length = n - 2
    edges = [(i, i + 1) for i in range(length - 1)]
    edges.append((1, length))
    edges.append((length - 2, length + 1))
    return Graph.from_edges(n, edges)


def paw_count(graph):
    """Copies of the triangle with a pendant edge

    Every such copy has a unique triangle, so the count is the sum over
    triangles of the surplus degrees of their corners.

    """
    rows = graph.rows
    degrees = graph.degrees
    count = 0
    for u, v in graph.edges:
        common = rows[u] & rows[v] & ~((1 << (v + 1)) - 1)
        for w in iter_bits(common):
            count += degrees[u] + degrees[v] + degrees[w] - 6
    return count


def expected_t4_linegraph_census(p, q, r):
    m = p + q + r + 6
    if p >= 2:
        return (0, m - 6, 6, 0)
    if q >= 2:
        return (0, m - 5, 4, 1)
    if r >= 2:
        return (0, m - 4, 2, 2)
    return (0, 6, 0, 3)


def expected_t4_paw_count(p, q, r):
    if p >= 2:
        return 6
    if q >= 2:
        return 8
    if r >= 2:
        return 10
    return 12


def check_t4_structure(p, q, r, graph=None):
    """Self-test of the T4 construction against four derived constraints

    1. n = p + q + r + 7
    2. degree multiset: four of degree 3, six leaves, the rest degree 2
    3. line graph degree census per subfamily (p >= 2, p = 1 < q,
       p = q = 1 < r and T4(1, 1, 1))
    4. triangle-with-pendant copies in the line graph: 6, 8, 10 and 12 for
       the four subfamilies, with exactly 4 triangles

    """
    if graph is None:
        graph = _t4(p, q, r)
    failures = []
    n = p + q + r + 7
    if graph.n != n:
        failures.append("vertex count %d != %d" % (graph.n, n))
    degrees = graph.degrees
    census = tuple(degrees.count(d) for d in (1, 2, 3))
    if census != (6, n - 10, 4) or max(degrees) != 3:
        failures.append("degree census %s" % (census,))
    if not graph.is_tree():
        failures.append("not a tree")
    lg = line_graph(graph)
    lg_degrees = lg.degrees
    lg_census = tuple(lg_degrees.count(d) for d in (1, 2, 3, 4))
    if lg_census != expected_t4_linegraph_census(p, q, r):
        failures.append("line graph degree census %s" % (lg_census,))
    if lg.triangle_count() != 4:
        failures.append("line graph has %d triangles" % lg.triangle_count())
    paws = paw_count(lg)
    if paws != expected_t4_paw_count(p, q, r):
        failures.append("line graph has %d copies of G1" % paws)
    return {'params': [p, q, r],
            'num_vertices': graph.n,
            'degree_census': list(census),
            'linegraph_degree_census': list(lg_census),
            'linegraph_triangles': lg.triangle_count(),
            'linegraph_g1_copies': paws,
            'failures': failures,
            'passed': not failures}
