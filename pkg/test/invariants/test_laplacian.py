import unittest
from treespec.graph.graph import Graph, line_graph, complement, disjoint_union
from treespec.graph.families import FamilySpec, build_family, t4
from treespec.graph.trees import enumerate_trees, enumerate_connected_graphs
from treespec.poly.intpoly import IntPoly, DomainError
from treespec.poly.charpoly import charpoly
from treespec.invariants.laplacian import (LaplacianFacts, facts_from_graph,
                                           check_laplacian_poly,
                                           laplacian_facts,
                                           complement_laplacian,
                                           line_graph_charpoly_from_laplacian)


class TestLaplacianFacts(unittest.TestCase):
    def setUp(self):
        self._graphs = [t4(1, 2, 3),
                        build_family(FamilySpec('Complete', (3,))),
                        disjoint_union(build_family(FamilySpec('Cycle', (4,))),
                                       Graph(1)),
                        build_family(FamilySpec('CompleteBipartite', (2, 3)))]

    def tearDown(self):
        pass

    def test_facts(self):
        for g in self._graphs:
            facts = laplacian_facts(charpoly(g, 'laplacian'))
            self.assertEqual(facts, facts_from_graph(g))

    def test_tree_facts(self):
        g = t4(1, 2, 3)
        facts = laplacian_facts(charpoly(g, 'laplacian'))
        self.assertTrue(facts.is_tree())
        self.assertEqual(facts.n, 13)
        self.assertEqual(facts.m, 12)
        self.assertEqual(facts.spanning_trees, 1)
        self.assertEqual(facts.sum_deg_sq, sum(d ** 2 for d in g.degrees))
        self.assertEqual(facts.sum_deg_cube, sum(d ** 3 for d in g.degrees))
        self.assertEqual(len(facts.get_yaml_lines()), 6)

    def test_non_bipartite(self):
        facts = laplacian_facts(charpoly(self._graphs[1], 'laplacian'))
        self.assertEqual(facts.sum_deg_cube, None)
        self.assertEqual(facts.spanning_trees, 3)
        # K_{2,3} is bipartite without being a forest
        facts = laplacian_facts(charpoly(self._graphs[3], 'laplacian'),
                                bipartite=True)
        self.assertEqual(facts.sum_deg_cube, 2 * 27 + 3 * 8)
        self.assertTrue(isinstance(facts, LaplacianFacts))

    def test_check(self):
        self.assertRaises(DomainError, check_laplacian_poly, IntPoly([1, 1]))
        self.assertRaises(DomainError, check_laplacian_poly, IntPoly([0, 2]))
        self.assertRaises(DomainError, check_laplacian_poly,
                          IntPoly([0, 1, 1]))
        check_laplacian_poly(charpoly(t4(1, 1, 1), 'laplacian'))

    def test_complement(self):
        for g in enumerate_connected_graphs(5):
            lap = charpoly(g, 'laplacian')
            self.assertEqual(complement_laplacian(lap),
                             charpoly(complement(g), 'laplacian'))
        self.assertRaises(DomainError, complement_laplacian,
                          charpoly(t4(1, 1, 1), 'laplacian'), 9)

    def test_line_graph(self):
        for n in range(2, 9):
            for tree in enumerate_trees(n):
                lap = charpoly(tree, 'laplacian')
                self.assertEqual(line_graph_charpoly_from_laplacian(lap),
                                 charpoly(line_graph(tree)))


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestLaplacianFacts)
    unittest.TextTestRunner(verbosity=2).run(suite)
