# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

"""Canonical labelling of small graphs

Trees are labelled from a centre-rooted canonical encoding. Other graphs
go through equitable colour refinement followed by individualisation of
every vertex of the first smallest non-singleton cell. The search tree is
walked without pruning, so the number of leaves reaching the minimal
certificate equals the order of the automorphism group.

"""

from treespec.graph.graph import iter_bits, relabel
from treespec.graph.codecs import encode_graph6


class CanonicalForm(object):
    """Canonical certificate of a graph

    Attributes
    ----------
    certificate: bytes
        graph6 of the canonically relabelled graph.
    aut_count: int
        Order of the automorphism group.
    labeling: tuple of int
        labeling[i] is the input vertex placed at canonical position i.

    """

    def __init__(self, certificate, aut_count, labeling):
        self._certificate = certificate
        self._aut_count = aut_count
        self._labeling = tuple(labeling)

    @property
    def certificate(self):
        return self._certificate

    @property
    def bytes(self):
        return self._certificate

    @property
    def aut_count(self):
        return self._aut_count

    @property
    def labeling(self):
        return self._labeling

    @property
    def graph6(self):
        return self._certificate.decode('ascii')

    def __eq__(self, other):
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self._certificate == other.certificate

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._certificate)

    def __repr__(self):
        return "CanonicalForm(%s, aut_count=%d)" % (self.graph6,
                                                    self._aut_count)


def canonical_form(graph):
    if graph.n > 0 and graph.is_tree():
        labeling, aut_count = _tree_labeling(graph)
    else:
        labeling, aut_count = _search_labeling(graph)
    certificate = encode_graph6(relabel(graph, labeling)).encode('ascii')
    return CanonicalForm(certificate, aut_count, labeling)


def certificate(graph):
    return canonical_form(graph).certificate


def is_isomorphic(g, h):
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return certificate(g) == certificate(h)


def tree_centers(graph):
    """One or two central vertices found by repeated leaf removal"""
    n = graph.n
    if n <= 2:
        return list(range(n))
    degrees = list(graph.degrees)
    leaves = [v for v in range(n) if degrees[v] <= 1]
    remaining = n
    removed = [False] * n
    while remaining > 2:
        remaining -= len(leaves)
        next_leaves = []
        for v in leaves:
            removed[v] = True
            for u in iter_bits(graph.rows[v]):
                if not removed[u]:
                    degrees[u] -= 1
                    if degrees[u] == 1:
                        next_leaves.append(u)
        leaves = next_leaves
    return sorted(leaves)


def _factorial(k):
    x = 1
    for i in range(2, k + 1):
        x *= i
    return x


def _rooted_encoding(graph, root, blocked):
    """Canonical string, automorphism count and sorted preorder of a subtree

    blocked is a vertex bitset excluded from the subtree.

    """
    parent = {root: None}
    order = [root]
    seen = blocked | (1 << root)
    i = 0
    while i < len(order):
        v = order[i]
        for u in iter_bits(graph.rows[v] & ~seen):
            parent[u] = v
            order.append(u)
            seen |= 1 << u
        i += 1

    code = {}
    auts = {}
    children = dict((v, []) for v in order)
    for v in order[1:]:
        children[parent[v]].append(v)
    for v in reversed(order):
        kids = sorted(children[v], key=lambda u: code[u])
        children[v] = kids
        code[v] = '(' + ''.join(code[u] for u in kids) + ')'
        count = 1
        run = 1
        for j, u in enumerate(kids):
            count *= auts[u]
            if j > 0 and code[kids[j - 1]] == code[u]:
                run += 1
            else:
                count *= _factorial(run)
                run = 1
        count *= _factorial(run)
        auts[v] = count

    preorder = []
    stack = [root]
    while stack:
        v = stack.pop()
        preorder.append(v)
        stack.extend(reversed(children[v]))
    return code[root], auts[root], preorder


def _tree_labeling(graph):
    centers = tree_centers(graph)
    if len(centers) == 1:
        _, aut_count, order = _rooted_encoding(graph, centers[0], 0)
        return order, aut_count
    a, b = centers
    code_a, aut_a, order_a = _rooted_encoding(graph, a, 1 << b)
    code_b, aut_b, order_b = _rooted_encoding(graph, b, 1 << a)
    aut_count = aut_a * aut_b
    if code_a == code_b:
        aut_count *= 2
    if code_b < code_a:
        order_a, order_b = order_b, order_a
    return order_a + order_b, aut_count


def refine(graph, colors):
    """Coarsest equitable refinement of a vertex colouring

    colors is a list of non-negative ints. The returned colours are dense,
    and their numbering depends only on the isomorphism class of the
    coloured graph.

    """
    n = graph.n
    colors = list(colors)
    num_colors = len(set(colors))
    while True:
        signatures = []
        for v in range(n):
            counts = {}
            for u in iter_bits(graph.rows[v]):
                counts[colors[u]] = counts.get(colors[u], 0) + 1
            signatures.append((colors[v], tuple(sorted(counts.items()))))
        ranks = dict((s, i) for i, s in enumerate(sorted(set(signatures))))
        colors = [ranks[s] for s in signatures]
        if len(ranks) == num_colors:
            return colors
        num_colors = len(ranks)


def _search_labeling(graph):
    n = graph.n
    if n == 0:
        return [], 1
    best = [None, None, 0]

    def leaf(colors):
        order = sorted(range(n), key=lambda v: colors[v])
        position = [0] * n
        for i, v in enumerate(order):
            position[v] = i
        key = []
        for v in order:
            row = 0
            for u in iter_bits(graph.rows[v]):
                row |= 1 << position[u]
            key.append(row)
        key = tuple(key)
        if best[0] is None or key < best[0]:
            best[0] = key
            best[1] = order
            best[2] = 1
        elif key == best[0]:
            best[2] += 1

    def search(colors):
        colors = refine(graph, colors)
        if len(set(colors)) == n:
            leaf(colors)
            return
        sizes = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((size, c) for c, size in sizes.items() if size > 1)[1]
        for v in range(n):
            if colors[v] == target:
                search([2 * c + (0 if u == v else 1)
                        for u, c in enumerate(colors)])

    search([0] * n)
    return best[1], best[2]
