# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

from treespec.graph.graph import line_graph, complement, CapacityError
from treespec.graph.canonical import certificate, is_isomorphic
from treespec.graph.codecs import encode_graph6
from treespec.graph.families import (FamilySpec, build_family, t4,
                                     expected_t4_paw_count)
from treespec.graph.trees import (enumerate_trees, enumerate_forests,
                                  count_trees, DEFAULT_ENUMERATION_LIMIT)
from treespec.poly.intpoly import DomainError
from treespec.poly.charpoly import charpoly
from treespec.invariants.laplacian import (
    laplacian_facts, complement_laplacian,
    line_graph_charpoly_from_laplacian)
from treespec.invariants.degrees import HypothesisError
from treespec.walks.census import count_subgraph_copies
from treespec.walks.patterns import paw
from treespec.closedforms.audit import valid_triples
from treespec.dsverify.spectrum import SpectrumKey, spectrum_key

search_spaces = ('trees_same_n', 'forests_same_nm')

DEFAULT_FAMILY_SCAN_LIMIT = 30
DEFAULT_CORRESPONDENCE_LIMIT = 10


def _key_task(args):
    graph, kind = args
    return SpectrumKey.from_poly(kind, charpoly(graph, kind))


def _compute_keys(graphs, kind, cache=None, workers=1):
    if cache is not None:
        return [spectrum_key(g, kind, cache=cache) for g in graphs]
    if workers > 1:
        from multiprocessing import Pool
        pool = Pool(workers)
        try:
            return list(pool.imap(_key_task, [(g, kind) for g in graphs],
                                  chunksize=64))
        finally:
            pool.close()
            pool.join()
    return [_key_task((g, kind)) for g in graphs]


def _space_graphs(graph, kind, space, limit):
    if space not in search_spaces:
        raise ValueError("Unknown search space '%s'." % space)
    if kind == 'laplacian':
        facts = laplacian_facts(charpoly(graph, 'laplacian'))
        if space == 'trees_same_n' and not facts.is_tree():
            raise HypothesisError(
                "The Laplacian spectrum does not certify a tree "
                "(n = %d, m = %d, %d components); trees are not a "
                "complete search space." % (facts.n, facts.m,
                                            facts.components))
    elif space == 'trees_same_n' and not graph.is_tree():
        raise DomainError("trees_same_n needs a tree as input.")
    if space == 'trees_same_n':
        return list(enumerate_trees(graph.n, limit=limit))
    return list(enumerate_forests(graph.n, graph.m, limit=limit))


def cospectral_mate_search(graph, kind='laplacian', space='trees_same_n',
                           limit=DEFAULT_ENUMERATION_LIMIT, cache=None,
                           workers=1, log_level=0):
    """Non-isomorphic graphs of the search space sharing the key of graph

    For the Laplacian, n, m and the number of components are read off the
    input's polynomial, so every mate of a tree is a tree and trees_same_n
    is complete; this is checked before the search.

    """
    candidates = _space_graphs(graph, kind, space, limit)
    target = spectrum_key(graph, kind, cache=cache)
    own = certificate(graph)
    keys = _compute_keys(candidates, kind, cache=cache, workers=workers)
    mates = [g for g, key in zip(candidates, keys)
             if key == target and certificate(g) != own]
    if log_level:
        print("%d cospectral mates (%s) among %d graphs of %s"
              % (len(mates), kind, len(candidates), space))
    return mates


def degree_multiset_trees(n, degrees, limit=DEFAULT_ENUMERATION_LIMIT):
    """Trees on n vertices with the given multiset of degrees"""
    target = sorted(degrees)
    if len(target) != n:
        raise ValueError("Degree multiset has %d entries for n = %d."
                         % (len(target), n))
    return [g for g in enumerate_trees(n, limit=limit)
            if sorted(g.degrees) == target]


def degree_dichotomy(limit=DEFAULT_ENUMERATION_LIMIT):
    """Trees on 10 vertices with four vertices of degree 3 and six leaves

    Each one is the centipede on 10 vertices or T4(1, 1, 1).

    """
    centipede = build_family(FamilySpec('Centipede', (6,)))
    star_like = t4(1, 1, 1)
    listing = []
    for g in degree_multiset_trees(10, [3] * 4 + [1] * 6, limit=limit):
        if is_isomorphic(g, centipede):
            label = 'Centipede(6)'
        elif is_isomorphic(g, star_like):
            label = 'T4(1,1,1)'
        else:
            label = None
        listing.append({'graph6': encode_graph6(g), 'identified_as': label})
    return {'num_vertices': 10,
            'degrees': [3] * 4 + [1] * 6,
            'trees': listing,
            'passed': all(x['identified_as'] for x in listing)}


def ds_check_t4(n, kind='laplacian', limit=DEFAULT_ENUMERATION_LIMIT,
                cache=None, workers=1, log_level=0):
    """Cospectral mates of every T4(p, q, r) on n vertices among all trees"""
    if n < 10:
        raise DomainError("T4 needs at least 10 vertices; n = %d." % n)
    trees = list(enumerate_trees(n, limit=limit))
    expected_count = count_trees(n)
    keys = _compute_keys(trees, kind, cache=cache, workers=workers)
    groups = {}
    for g, key in zip(trees, keys):
        groups.setdefault(key, []).append(g)
    members = []
    total_mates = 0
    for p, q, r in valid_triples(n - 7):
        if p + q + r != n - 7:
            continue
        graph = t4(p, q, r)
        facts = laplacian_facts(charpoly(graph, 'laplacian'))
        if not facts.is_tree():
            raise HypothesisError("Laplacian facts of T4(%d, %d, %d) do "
                                  "not certify a tree." % (p, q, r))
        key = spectrum_key(graph, kind, cache=cache)
        own = certificate(graph)
        mates = [encode_graph6(g) for g in groups.get(key, [])
                 if certificate(g) != own]
        total_mates += len(mates)
        members.append({'params': [p, q, r], 'mates': mates})
    if log_level:
        print("%d cospectral mates among %d trees on %d vertices (%d T4 "
              "members)" % (total_mates, len(trees), n, len(members)))
    report = {'n': n,
              'kind': kind,
              'candidates_checked': len(trees),
              'tree_count_oracle': expected_count,
              'members': members,
              'collisions': [m for m in members if m['mates']],
              'passed': (total_mates == 0 and len(trees) == expected_count)}
    if n == 10:
        dichotomy = degree_dichotomy(limit=limit)
        report['degree_dichotomy'] = dichotomy
        report['passed'] = report['passed'] and dichotomy['passed']
    return report


def family_collision_scan(kind='laplacian', sum_bound=24,
                          limit=DEFAULT_FAMILY_SCAN_LIMIT, g1_bound=12,
                          workers=1, log_level=0):
    """Keys of all T4(p, q, r) with p + q + r <= sum_bound are distinct

    The copies of G1 (triangle with a pendant edge) in the line graphs
    separate the subfamilies p >= 2, p = 1 < q, p = q = 1 < r and
    T4(1, 1, 1) (6, 8, 10 and 12 copies); they are counted for every
    member with p + q + r <= g1_bound.

    """
    if sum_bound > limit:
        raise CapacityError("Sum bound %d exceeds the scan limit %d."
                            % (sum_bound, limit))
    triples = list(valid_triples(sum_bound))
    graphs = [t4(p, q, r) for p, q, r in triples]
    keys = _compute_keys(graphs, kind, workers=workers)
    seen = {}
    collisions = []
    for params, key in zip(triples, keys):
        if key in seen:
            collisions.append([list(seen[key]), list(params)])
        else:
            seen[key] = params
    pattern = paw()
    separation = {'2<=p': set(), '1=p<q': set(), 'p=q=1<r': set(),
                  'p=q=r=1': set()}
    g1_failures = []
    for p, q, r in triples:
        if p + q + r > g1_bound:
            continue
        copies = count_subgraph_copies(line_graph(t4(p, q, r)), pattern)
        if p >= 2:
            separation['2<=p'].add(copies)
        elif q >= 2:
            separation['1=p<q'].add(copies)
        elif r >= 2:
            separation['p=q=1<r'].add(copies)
        else:
            separation['p=q=r=1'].add(copies)
        if copies != expected_t4_paw_count(p, q, r):
            g1_failures.append({'params': [p, q, r], 'copies': copies})
    if log_level:
        print("T4 %s keys for p + q + r <= %d: %d members, %d collisions"
              % (kind, sum_bound, len(triples), len(collisions)))
        print("G1 copies in line graphs: p >= 2 %s, p = 1 < q %s, "
              "p = q = 1 < r %s, T4(1, 1, 1) %s"
              % tuple(sorted(separation[x]) for x in
                      ('2<=p', '1=p<q', 'p=q=1<r', 'p=q=r=1')))
    return {'kind': kind,
            'sum_bound': sum_bound,
            'candidates_checked': len(triples),
            'collisions': collisions,
            'g1_bound': g1_bound,
            'g1_copies': dict((k, sorted(v)) for k, v in separation.items()),
            'g1_failures': g1_failures,
            'passed': not collisions and not g1_failures}


def verify_line_correspondence(max_n, limit=DEFAULT_CORRESPONDENCE_LIMIT,
                               log_level=0):
    """Laplacian spectra of trees against adjacency spectra of line graphs

    (a) P(L(T), x) = R(x + 2) where det(x I - L(T)) = x R(x)
    (b) for trees with the same n, Laplacian keys are equal exactly when
        the line graph adjacency keys are equal

    """
    if max_n > limit:
        raise CapacityError("max_n = %d exceeds the correspondence limit "
                            "%d." % (max_n, limit))
    shift_violations = []
    pair_violations = []
    checked = 0
    for n in range(2, max_n + 1):
        lap_classes = {}
        line_classes = {}
        for i, tree in enumerate(enumerate_trees(n)):
            lap = charpoly(tree, 'laplacian')
            line = charpoly(line_graph(tree), 'adjacency')
            if line_graph_charpoly_from_laplacian(lap) != line:
                shift_violations.append(encode_graph6(tree))
            lap_classes.setdefault(lap, []).append(i)
            line_classes.setdefault(line, []).append(i)
            checked += 1
        lap_partition = sorted(lap_classes.values())
        line_partition = sorted(line_classes.values())
        if lap_partition != line_partition:
            pair_violations.append({'n': n,
                                    'laplacian_classes': lap_partition,
                                    'line_graph_classes': line_partition})
        if log_level > 1:
            print("  n = %2d: %d Laplacian classes" % (n, len(lap_classes)))
    if log_level:
        print("Line graph correspondence for trees with n <= %d: %d trees, "
              "%d shift and %d pair violations"
              % (max_n, checked, len(shift_violations),
                 len(pair_violations)))
    return {'max_n': max_n,
            'candidates_checked': checked,
            'shift_violations': shift_violations,
            'pair_violations': pair_violations,
            'passed': not shift_violations and not pair_violations}


def centipede_ds_check(n_values=(6, 8, 10, 12),
                       limit=DEFAULT_ENUMERATION_LIMIT, cache=None,
                       workers=1, log_level=0):
    """Laplacian mates of centipedes among trees of the same order"""
    results = []
    for n in n_values:
        if n < 4 or n % 2:
            raise DomainError("Centipedes have an even number n >= 4 of "
                              "vertices; n = %d." % n)
        graph = build_family(FamilySpec('Centipede', ((n + 2) // 2,)))
        mates = cospectral_mate_search(graph, 'laplacian', 'trees_same_n',
                                       limit=limit, cache=cache,
                                       workers=workers, log_level=log_level)
        results.append({'n': n,
                        'candidates_checked': count_trees(n),
                        'mates': [encode_graph6(g) for g in mates]})
    return {'centipedes': results,
            'collisions': [x for x in results if x['mates']],
            'passed': all(not x['mates'] for x in results)}


def complement_ds_check(n, limit=DEFAULT_ENUMERATION_LIMIT, log_level=0):
    """Complements of trees through the Laplacian transform

    Checks complement_laplacian against the direct Laplacian polynomial of
    every tree complement on n vertices, then looks for complements of
    trees sharing the Laplacian key of the complement of a T4.

    """
    transform_violations = []
    keys = {}
    trees = list(enumerate_trees(n, limit=limit))
    for tree in trees:
        lap = charpoly(tree, 'laplacian')
        transformed = complement_laplacian(lap)
        if transformed != charpoly(complement(tree), 'laplacian'):
            transform_violations.append(encode_graph6(tree))
        keys.setdefault(transformed, []).append(certificate(tree))
    members = []
    for p, q, r in valid_triples(n - 7):
        if p + q + r != n - 7:
            continue
        graph = t4(p, q, r)
        key = complement_laplacian(charpoly(graph, 'laplacian'))
        own = certificate(graph)
        mates = [c for c in keys.get(key, []) if c != own]
        members.append({'params': [p, q, r], 'mates': len(mates)})
    if log_level:
        print("Complements of %d trees on %d vertices: %d transform "
              "violations" % (len(trees), n, len(transform_violations)))
    return {'n': n,
            'candidates_checked': len(trees),
            'transform_violations': transform_violations,
            'members': members,
            'passed': (not transform_violations and
                       all(m['mates'] == 0 for m in members))}
