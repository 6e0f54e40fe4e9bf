import unittest
from treespec.graph.families import FamilySpec, build_family, t4
from treespec.graph.trees import enumerate_connected_graphs
from treespec.walks.patterns import paw
from treespec.walks.census import (closed_walks, count_embeddings,
                                   count_subgraph_copies,
                                   derive_walk_identity, pattern_counts,
                                   adjacent_edge_pairs,
                                   verify_walk_identities, odd_walks_vanish,
                                   edge_count_from_walks,
                                   triangle_count_from_walks)


def _family(kind, *params):
    return build_family(FamilySpec(kind, params))


class TestWalkIdentities(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_low_lengths(self):
        self.assertEqual(derive_walk_identity(2).coefficients, {'P2': 2})
        self.assertEqual(derive_walk_identity(3).coefficients, {'K3': 6})
        self.assertEqual(derive_walk_identity(4).coefficients,
                         {'P2': 2, 'P3': 4, 'C4': 8})
        self.assertEqual(derive_walk_identity(5).coefficients,
                         {'K3': 30, 'C5': 10, 'G1': 10})

    def test_length_seven(self):
        identity = derive_walk_identity(7)
        coefs = sorted(identity.coefficients.values())
        self.assertEqual(len(identity.terms), 11)
        self.assertEqual(coefs, sorted([126, 84, 14, 14, 14, 28, 42, 28, 112,
                                        70, 14]))
        self.assertEqual(identity.coefficients['K3'], 126)
        self.assertEqual(identity.coefficients['C7'], 14)

    def test_identity_values(self):
        graphs = [t4(1, 1, 2), _family('Complete', 5),
                  _family('CompleteBipartite', 3, 3)]
        for k in (2, 3, 4, 5, 7):
            identity = derive_walk_identity(k)
            for g in graphs:
                self.assertEqual(identity.evaluate(g), closed_walks(g, k))

    def test_census(self):
        report = verify_walk_identities(5)
        self.assertTrue(report['passed'])
        self.assertEqual(report['graphs_checked'], 31)
        self.assertEqual(len(report['identities']), 5)

    def test_text(self):
        self.assertEqual("%s" % derive_walk_identity(3), "N(3) = 6 N(K3)")
        self.assertEqual("%s" % derive_walk_identity(1), "N(1) = 0")
        d = derive_walk_identity(4).to_dict()
        self.assertEqual([x['name'] for x in d['terms']], ['P2', 'P3', 'C4'])


class TestCounting(unittest.TestCase):
    def setUp(self):
        self._k4 = _family('Complete', 4)

    def tearDown(self):
        pass

    def test_closed_walks(self):
        self.assertEqual(closed_walks(self._k4, 0), 4)
        self.assertEqual(closed_walks(self._k4, 2), 12)
        self.assertEqual(closed_walks(self._k4, 3), 24)
        self.assertRaises(ValueError, closed_walks, self._k4, -1)

    def test_subgraph_copies(self):
        self.assertEqual(count_subgraph_copies(self._k4, paw()), 12)
        self.assertEqual(count_embeddings(self._k4, paw()), 24)
        c4 = _family('Cycle', 4)
        self.assertEqual(count_subgraph_copies(self._k4, c4), 3)
        star = _family('Star', 3)
        self.assertEqual(count_subgraph_copies(star, _family('Path', 3)), 3)
        self.assertEqual(count_subgraph_copies(star, c4), 0)

    def test_pattern_counts(self):
        identity = derive_walk_identity(5)
        counts = pattern_counts(self._k4, identity)
        self.assertEqual(counts, {'K3': 4, 'C5': 0, 'G1': 12})
        for g in enumerate_connected_graphs(5):
            self.assertEqual(adjacent_edge_pairs(g),
                             count_subgraph_copies(g, _family('Path', 3)))

    def test_helpers(self):
        g = t4(1, 2, 2)
        self.assertTrue(odd_walks_vanish(g))
        self.assertFalse(odd_walks_vanish(self._k4))
        self.assertEqual(edge_count_from_walks(g), g.m)
        self.assertEqual(triangle_count_from_walks(self._k4), 4)


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestWalkIdentities)
    unittest.TextTestRunner(verbosity=2).run(suite)
    suite = unittest.TestLoader().loadTestsFromTestCase(TestCounting)
    unittest.TextTestRunner(verbosity=2).run(suite)
