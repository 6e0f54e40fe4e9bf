# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

"""Exhaustive runs of the invariant checks over small trees and T4"""

from fractions import Fraction
import numpy as np
from treespec.graph.graph import line_graph
from treespec.graph.families import FamilySpec, build_family, t4, \
    expected_t4_paw_count
from treespec.graph.trees import enumerate_trees
from treespec.graph.codecs import encode_graph6
from treespec.poly.charpoly import charpoly
from treespec.poly.sturm import sturm_count
from treespec.walks.census import derive_walk_identity, pattern_counts
from treespec.invariants.laplacian import laplacian_facts, facts_from_graph
from treespec.invariants.degrees import (DegreeCensus, degree_recovery,
                                         mu1_at_most, t4_linegraph_census,
                                         MAX_RECOVERED_DEGREE)
from treespec.invariants.bounds import (mu1_bounds_check, subdivision_check,
                                        internal_path_edges, is_w_graph,
                                        ExceptionCaseError)

T4_MU1_BOUND = Fraction(49, 10)

# mu_1(T4(1, 1, 1)) = 5 and 4.9 < mu_1(T4(1, 1, 2)) < 4.91
T4_MU1_BOUND_EXCEPTIONS = ((1, 1, 1), (1, 1, 2))


def tree_invariant_census(max_n, log_level=0):
    """Laplacian facts, degree recovery and mu_1 bounds on all trees"""
    checked = 0
    certified = 0
    facts_failures = []
    recovery_failures = []
    bound_failures = []
    for n in range(2, max_n + 1):
        for tree in enumerate_trees(n):
            checked += 1
            poly = charpoly(tree, 'laplacian')
            facts = laplacian_facts(poly)
            if facts != facts_from_graph(tree):
                facts_failures.append(tree)
            if mu1_at_most(poly):
                certified += 1
                if tree.max_degree > MAX_RECOVERED_DEGREE:
                    recovery_failures.append(tree)
                elif degree_recovery(facts, True) != \
                        DegreeCensus.from_graph(tree):
                    recovery_failures.append(tree)
            if not mu1_bounds_check(tree)['passed']:
                bound_failures.append(tree)
        if log_level > 1:
            print("  trees on %2d vertices checked" % n)
    if log_level:
        print("Tree invariants for n <= %d: %d trees, %d with mu_1 <= 5"
              % (max_n, checked, certified))
    return {'max_n': max_n,
            'trees_checked': checked,
            'mu1_certified': certified,
            'facts_failures': [encode_graph6(g) for g in facts_failures],
            'recovery_failures': [encode_graph6(g)
                                  for g in recovery_failures],
            'bound_failures': [encode_graph6(g) for g in bound_failures],
            'passed': not (facts_failures or recovery_failures or
                           bound_failures)}


def subdivision_sample(max_n, num_samples=100, seed=0, log_level=0):
    """subdivision_check on sampled internal-path edges of trees

    W_n for 6 <= n <= max_n is checked to be rejected.

    """
    candidates = []
    for n in range(4, max_n + 1):
        for tree in enumerate_trees(n):
            if is_w_graph(tree):
                continue
            for edge in internal_path_edges(tree):
                candidates.append((tree, edge))
    rng = np.random.RandomState(seed)
    size = min(num_samples, len(candidates))
    picks = sorted(rng.choice(len(candidates), size=size, replace=False)) \
        if size else []
    failures = []
    for i in picks:
        tree, (u, v) = candidates[i]
        if not subdivision_check(tree, u, v)['passed']:
            failures.append([encode_graph6(tree), [u, v]])
    rejected = []
    for n in range(6, max_n + 1):
        w = build_family(FamilySpec('WGraph', (n,)))
        try:
            subdivision_check(w, 2, 3)
        except ExceptionCaseError:
            rejected.append(n)
    expected_rejected = list(range(6, max_n + 1))
    if log_level:
        print("Subdivision: %d of %d internal-path edges sampled, %d "
              "failures" % (size, len(candidates), len(failures)))
    return {'max_n': max_n,
            'candidates': len(candidates),
            'sampled': size,
            'seed': seed,
            'failures': failures,
            'w_graphs_rejected': rejected,
            'passed': not failures and rejected == expected_rejected}


def _subfamily(p, q, r):
    if p >= 2:
        return '2<=p'
    if q >= 2:
        return '1=p<q'
    if r >= 2:
        return 'p=q=1<r'
    return 'p=q=r=1'


_expected_branches = {'2<=p': [0], '1=p<q': [0, 1], 'p=q=1<r': [0, 1, 2],
                      'p=q=r=1': [1, 2, 3]}

# pairs minus the printed right-hand side
_expected_printed_offset = {'2<=p': 0, '1=p<q': 0, 'p=q=1<r': 0,
                            'p=q=r=1': 1}


def t4_census(max_sum, log_level=0):
    """Line graph censuses, G1 copies and mu_1 < 4.9 for T4 members

    mu_1 < 4.9 is expected to fail exactly on
    T4_MU1_BOUND_EXCEPTIONS; every member must still have mu_1 <= 5.

    """
    identity = derive_walk_identity(5)
    members = []
    passed = True
    for total in range(3, max_sum + 1):
        for p in range(1, total // 3 + 1):
            for q in range(p, (total - p) // 2 + 1):
                r = total - p - q
                graph = t4(p, q, r)
                lap = charpoly(graph, 'laplacian')
                mu1_below = sturm_count(lap, T4_MU1_BOUND, None) == 0
                mu1_expected_below = \
                    (p, q, r) not in T4_MU1_BOUND_EXCEPTIONS
                census = t4_linegraph_census(p, q, r)
                branches = sorted(s[3] for s in census['solutions'])
                g1 = pattern_counts(line_graph(graph), identity)['G1']
                family = _subfamily(p, q, r)
                at_most_5 = mu1_at_most(lap)
                ok = (at_most_5 and mu1_below == mu1_expected_below and
                      census['contains_true_census'] and
                      census['printed_offset'] ==
                      _expected_printed_offset[family] and
                      branches == _expected_branches[family] and
                      g1 == expected_t4_paw_count(p, q, r))
                passed = passed and ok
                members.append({'params': [p, q, r],
                                'subfamily': family,
                                'mu1_below_4.9': mu1_below,
                                'mu1_at_most_5': at_most_5,
                                'solutions': census['solutions'],
                                'true_census': census['true_census'],
                                'printed_offset': census['printed_offset'],
                                'y4_branches': branches,
                                'g1_copies': g1,
                                'passed': ok})
    if log_level:
        print("T4 census for p + q + r <= %d: %d members, %s"
              % (max_sum, len(members), "passed" if passed else "FAILED"))
    return {'max_sum': max_sum,
            'members': members,
            'passed': passed}
