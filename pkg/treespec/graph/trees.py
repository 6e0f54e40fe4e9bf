# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

"""Exhaustive generation of free trees, forests and connected graphs

Rooted trees are kept per size as non-increasing tuples of child
references (size, index). A free tree is emitted once, rooted at its
centroid: a single centroid carries subtrees of size at most (n - 1) // 2,
two centroids (n even) split the tree into two rooted halves of size n / 2.

"""

from treespec.graph.graph import Graph, CapacityError
from treespec.graph.canonical import certificate

DEFAULT_ENUMERATION_LIMIT = 18
DEFAULT_CENSUS_LIMIT = 8

_rooted_trees = {1: [()]}
_connected_graphs = {}


def rooted_trees(size):
    """Rooted trees of a given size as child-reference tuples"""
    if size not in _rooted_trees:
        for s in range(2, size + 1):
            if s not in _rooted_trees:
                _rooted_trees[s] = list(_multisets(s - 1, (s - 1, None)))
    return _rooted_trees[size]


def _items_below(bound):
    """Child references (size, index) not above bound, largest first"""
    size, index = bound
    for s in range(size, 0, -1):
        count = len(rooted_trees(s))
        top = count - 1 if (s < size or index is None) else index
        for i in range(top, -1, -1):
            yield (s, i)


def _multisets(total, bound):
    """Non-increasing tuples of child references with sizes summing to total

    bound = (max_size, max_index); max_index None means no index limit.

    """
    if total == 0:
        yield ()
        return
    max_size = min(bound[0], total)
    if max_size < 1:
        return
    if max_size < bound[0]:
        bound = (max_size, None)
    for item in _items_below(bound):
        for rest in _multisets(total - item[0], item):
            yield (item,) + rest


def _emit(children, edges, start):
    """Append edges of a rooted tree rooted at start; return next label"""
    stack = [(start, children)]
    next_label = start + 1
    while stack:
        v, kids = stack.pop()
        for size, index in kids:
            edges.append((v, next_label))
            stack.append((next_label, rooted_trees(size)[index]))
            next_label += 1
    return next_label


def _check_limit(n, limit):
    if n < 1:
        raise ValueError("Number of vertices has to be positive.")
    if limit is not None and n > limit:
        raise CapacityError("n = %d exceeds the enumeration limit %d."
                            % (n, limit))


def enumerate_trees(n, limit=DEFAULT_ENUMERATION_LIMIT):
    """Yield one Graph per isomorphism class of free trees on n vertices"""
    _check_limit(n, limit)
    half = (n - 1) // 2
    for forest in _multisets(n - 1, (half, None)):
        edges = []
        _emit(forest, edges, 0)
        yield Graph.from_edges(n, edges)
    if n % 2 == 0:
        trees = rooted_trees(n // 2)
        for j in range(len(trees)):
            for i in range(j + 1):
                edges = []
                nxt = _emit(trees[i], edges, 0)
                _emit(trees[j], edges, nxt)
                edges.append((0, nxt))
                yield Graph.from_edges(n, edges)


def _multichoose(k, j):
    x = 1
    for i in range(j):
        x = x * (k + i) // (i + 1)
    return x


def count_trees(n, limit=None):
    """Number of free trees on n vertices without building graphs"""
    _check_limit(n, limit)
    rooted = [0, 1]
    # forests[k][t]: multisets of rooted trees of total t, sizes <= k
    forests = [[1] + [0] * n]
    for k in range(1, n + 1):
        if k > 1:
            rooted.append(forests[k - 1][k - 1])
        row = list(forests[k - 1])
        for t in range(k, n + 1):
            total = 0
            for j in range(1, t // k + 1):
                total += forests[k - 1][t - j * k] * \
                    _multichoose(rooted[k], j)
            row[t] += total
        forests.append(row)
    count = forests[(n - 1) // 2][n - 1]
    if n % 2 == 0:
        count += _multichoose(rooted[n // 2], 2)
    return count


def count_rooted_trees(n):
    return len(rooted_trees(n))


def enumerate_forests(n, m, limit=DEFAULT_ENUMERATION_LIMIT):
    """Forests on n vertices with m edges, one per isomorphism class"""
    num_components = n - m
    if num_components < 1 or m < 0:
        return
    _check_limit(n, limit)
    tree_lists = {}
    for sizes in _partitions(n, num_components, n):
        for parts in _forest_parts(sizes, 0, None, tree_lists, limit):
            rows = []
            offset = 0
            for tree in parts:
                rows += [row << offset for row in tree.rows]
                offset += tree.n
            yield Graph(n, rows)


def _partitions(total, num_parts, max_part):
    if num_parts == 0:
        if total == 0:
            yield ()
        return
    for part in range(min(total - num_parts + 1, max_part), 0, -1):
        if part * num_parts < total:
            break
        for rest in _partitions(total - part, num_parts - 1, part):
            yield (part,) + rest


def _forest_parts(sizes, pos, prev, tree_lists, limit):
    if pos == len(sizes):
        yield ()
        return
    size = sizes[pos]
    if size not in tree_lists:
        tree_lists[size] = list(enumerate_trees(size, limit=limit))
    trees = tree_lists[size]
    top = len(trees) - 1
    if pos > 0 and sizes[pos - 1] == size:
        top = prev
    for i in range(top + 1):
        for rest in _forest_parts(sizes, pos + 1, i, tree_lists, limit):
            yield (trees[i],) + rest


def enumerate_connected_graphs(n, limit=DEFAULT_CENSUS_LIMIT, log_level=0):
    """Connected graphs on n vertices, one per isomorphism class

    Every connected graph has a vertex whose removal keeps it connected,
    so adding a vertex with every nonempty neighbourhood to every
    connected graph on n - 1 vertices reaches all classes. Graphs come out
    sorted by canonical certificate.

    """
    _check_limit(n, limit)
    if n in _connected_graphs:
        return list(_connected_graphs[n])
    if n == 1:
        graphs = [Graph(1)]
    else:
        found = {}
        for parent in enumerate_connected_graphs(n - 1, limit=limit):
            rows = list(parent.rows)
            for subset in range(1, 1 << (n - 1)):
                new_rows = [row | (((subset >> v) & 1) << (n - 1))
                            for v, row in enumerate(rows)]
                new_rows.append(subset)
                g = Graph(n, new_rows)
                key = certificate(g)
                if key not in found:
                    found[key] = g
        graphs = [found[key] for key in sorted(found)]
        if log_level:
            print("Connected graphs on %d vertices: %d" % (n, len(graphs)))
    _connected_graphs[n] = graphs
    return list(graphs)


def enumerate_graphs(max_n, limit=DEFAULT_CENSUS_LIMIT, log_level=0):
    """Connected graphs with 1 .. max_n vertices"""
    for n in range(1, max_n + 1):
        for g in enumerate_connected_graphs(n, limit=limit,
                                            log_level=log_level):
            yield g
