import unittest
import numpy as np
import networkx as nx
from treespec.graph.graph import (Graph, CapacityError, MissingEdgeError,
                                  line_graph, complement, subdivide_edge,
                                  delete_vertices, relabel, disjoint_union,
                                  popcount, MAX_VERTICES)
from treespec.graph.families import FamilySpec, build_family
from treespec.graph.canonical import certificate
from treespec.graph.trees import enumerate_connected_graphs


class TestGraph(unittest.TestCase):
    def setUp(self):
        self._c4 = build_family(FamilySpec('Cycle', (4,)))
        self._k13 = build_family(FamilySpec('Star', (3,)))

    def tearDown(self):
        pass

    def test_from_edges(self):
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(g.n, 4)
        self.assertEqual(g.m, 3)
        self.assertEqual(g.degrees, (1, 2, 2, 1))
        self.assertEqual(g.edges, [(0, 1), (1, 2), (2, 3)])
        self.assertTrue(g.is_tree())
        self.assertRaises(ValueError, Graph.from_edges, 3, [(0, 0)])
        self.assertRaises(ValueError, Graph.from_edges, 3, [(0, 3)])
        self.assertRaises(ValueError, Graph.from_edges, 3, [(0, 1), (1, 0)])

    def test_capacity(self):
        self.assertRaises(CapacityError, Graph, MAX_VERTICES + 1)

    def test_asymmetric_rows(self):
        self.assertRaises(RuntimeError, Graph, 2, [2, 0])

    def test_matrices(self):
        adj = self._c4.adjacency_matrix()
        lap = self._c4.laplacian_matrix()
        np.testing.assert_array_equal(adj, adj.T)
        np.testing.assert_array_equal(lap.sum(axis=1), [0, 0, 0, 0])
        np.testing.assert_array_equal(np.diag(lap), [2, 2, 2, 2])

    def test_components(self):
        g = disjoint_union(self._c4, Graph(1))
        self.assertEqual(g.n, 5)
        self.assertEqual(g.num_components(), 2)
        self.assertFalse(g.is_connected())
        self.assertFalse(g.is_forest())
        self.assertTrue(disjoint_union(self._k13, Graph(2)).is_forest())

    def test_line_graph(self):
        self.assertEqual(line_graph(self._k13).m, 3)
        self.assertEqual(line_graph(self._k13).triangle_count(), 1)
        lg = line_graph(self._c4)
        self.assertEqual((lg.n, lg.m), (4, 4))
        self.assertEqual(lg.degrees, (2, 2, 2, 2))

    def test_line_graph_edge_count(self):
        for n in range(2, 7):
            for g in enumerate_connected_graphs(n):
                expected = sum(d * (d - 1) // 2 for d in g.degrees)
                self.assertEqual(line_graph(g).m, expected)
                self.assertEqual(complement(complement(g)), g)

    def test_whitney(self):
        classes = {}
        for n in range(2, 7):
            for g in enumerate_connected_graphs(n):
                classes.setdefault(certificate(line_graph(g)), []).append(g)
        shared = [graphs for graphs in classes.values() if len(graphs) > 1]
        self.assertEqual(len(shared), 1)
        self.assertEqual(sorted((g.n, g.m) for g in shared[0]),
                         [(3, 3), (4, 3)])

    def test_line_graph_networkx(self):
        for g in enumerate_connected_graphs(5):
            self.assertTrue(nx.is_isomorphic(
                line_graph(g).to_networkx(),
                nx.line_graph(g.to_networkx())))

    def test_complement(self):
        c = complement(self._c4)
        self.assertEqual(c.m, 2)
        self.assertEqual(complement(c), self._c4)

    def test_subdivide_edge(self):
        g = subdivide_edge(self._c4, 0, 1)
        self.assertEqual((g.n, g.m), (5, 5))
        self.assertFalse(g.has_edge(0, 1))
        self.assertTrue(g.has_edge(0, 4) and g.has_edge(1, 4))
        self.assertRaises(MissingEdgeError, subdivide_edge, self._c4, 0, 2)
        self.assertRaises(MissingEdgeError, subdivide_edge, self._c4, 0, 9)

    def test_delete_and_relabel(self):
        g = delete_vertices(self._k13, [0])
        self.assertEqual((g.n, g.m), (3, 0))
        h = relabel(self._k13, [3, 2, 1, 0])
        self.assertEqual(h.degrees, (1, 1, 1, 3))

    def test_networkx(self):
        nx_graph = self._c4.to_networkx()
        self.assertEqual(nx_graph.number_of_edges(), 4)
        self.assertEqual(Graph.from_networkx(nx_graph), self._c4)

    def test_popcount(self):
        self.assertEqual(popcount(0), 0)
        self.assertEqual(popcount(0b101101), 4)


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestGraph)
    unittest.TextTestRunner(verbosity=2).run(suite)
