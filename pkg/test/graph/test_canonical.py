import unittest
import numpy as np
from treespec.graph.graph import relabel
from treespec.graph.families import FamilySpec, build_family, t4
from treespec.graph.trees import enumerate_trees, enumerate_connected_graphs
from treespec.graph.canonical import (canonical_form, certificate,
                                      is_isomorphic, tree_centers)


class TestCanonical(unittest.TestCase):
    def setUp(self):
        self._rng = np.random.RandomState(7)

    def tearDown(self):
        pass

    def _shuffled(self, graph):
        return relabel(graph, list(self._rng.permutation(graph.n)))

    def test_invariance(self):
        graphs = (enumerate_connected_graphs(5) + list(enumerate_trees(9)) +
                  [t4(1, 2, 3), build_family(FamilySpec('WGraph', (8,)))])
        for g in graphs:
            h = self._shuffled(g)
            self.assertEqual(certificate(g), certificate(h))
            self.assertTrue(is_isomorphic(g, h))

    def test_distinct_classes(self):
        graphs = enumerate_connected_graphs(5)
        self.assertEqual(len(set(certificate(g) for g in graphs)), 21)
        self.assertFalse(is_isomorphic(t4(1, 1, 2), build_family(
            FamilySpec('Centipede', (7,)))))

    def test_aut_count(self):
        cases = (('T4', (1, 1, 1), 48),
                 ('T4', (1, 2, 3), 8),
                 ('T4', (2, 2, 3), 16),
                 ('Complete', (4,), 24),
                 ('Cycle', (6,), 12),
                 ('Path', (4,), 2),
                 ('Star', (3,), 6),
                 ('CompleteBipartite', (2, 3), 12))
        for kind, params, aut_count in cases:
            g = build_family(FamilySpec(kind, params))
            self.assertEqual(canonical_form(g).aut_count, aut_count)
            self.assertEqual(canonical_form(self._shuffled(g)).aut_count,
                             aut_count)

    def test_labeling(self):
        g = self._shuffled(t4(1, 2, 2))
        form = canonical_form(g)
        self.assertEqual(sorted(form.labeling), list(range(g.n)))
        self.assertEqual(relabel(g, form.labeling).n, g.n)
        self.assertEqual(form.graph6.encode('ascii'), form.certificate)

    def test_tree_centers(self):
        self.assertEqual(tree_centers(t4(1, 1, 1)), [0])
        path = build_family(FamilySpec('Path', (6,)))
        self.assertEqual(tree_centers(path), [2, 3])


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestCanonical)
    unittest.TextTestRunner(verbosity=2).run(suite)
