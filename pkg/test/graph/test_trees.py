import unittest
import networkx as nx
from treespec.graph.graph import Graph, CapacityError
from treespec.graph.canonical import certificate
from treespec.graph.trees import (enumerate_trees, count_trees,
                                  enumerate_forests,
                                  enumerate_connected_graphs)

free_tree_counts = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301,
                    3159, 7741, 19320, 48629, 123867]
connected_graph_counts = [1, 1, 2, 6, 21, 112]


class TestTrees(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_count_trees(self):
        for n, count in enumerate(free_tree_counts, start=1):
            self.assertEqual(count_trees(n), count)

    def test_enumerate_trees(self):
        for n in range(1, 13):
            trees = list(enumerate_trees(n))
            self.assertEqual(len(trees), free_tree_counts[n - 1])
            self.assertTrue(all(t.is_tree() for t in trees))
            self.assertEqual(len(set(certificate(t) for t in trees)),
                             len(trees))

    def test_against_networkx(self):
        for n in range(3, 11):
            ours = set(certificate(t) for t in enumerate_trees(n))
            theirs = set()
            for tree in nx.nonisomorphic_trees(n):
                theirs.add(certificate(Graph.from_networkx(tree)))
            self.assertEqual(ours, theirs)

    def test_limit(self):
        self.assertRaises(CapacityError, list, enumerate_trees(19))
        self.assertRaises(CapacityError, list, enumerate_trees(6, limit=5))
        self.assertRaises(ValueError, list, enumerate_trees(0))

    def test_forests(self):
        # forests on 5 vertices with 3 edges: P4+K1, K13+K1, P3+K2
        forests = list(enumerate_forests(5, 3))
        self.assertEqual(len(forests), 3)
        self.assertTrue(all(f.is_forest() and f.num_components() == 2
                            for f in forests))
        self.assertEqual(len(list(enumerate_forests(6, 5))), 6)
        self.assertEqual(list(enumerate_forests(3, 3)), [])

    def test_connected_graphs(self):
        for n, count in enumerate(connected_graph_counts, start=1):
            graphs = enumerate_connected_graphs(n)
            self.assertEqual(len(graphs), count)
            self.assertTrue(all(g.is_connected() for g in graphs))


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestTrees)
    unittest.TextTestRunner(verbosity=2).run(suite)
