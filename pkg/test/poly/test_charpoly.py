import unittest
from fractions import Fraction
import numpy as np
from treespec.graph.graph import disjoint_union, Graph
from treespec.graph.families import FamilySpec, build_family, t4
from treespec.graph.trees import enumerate_connected_graphs
from treespec.poly.intpoly import IntPoly, DomainError, LAMBDA, ZERO
from treespec.poly.laurent import to_laurent
from treespec.poly.charpoly import (charpoly, spanning_tree_count,
                                    path_poly, path_poly_laurent,
                                    deletion_charpoly, power_sums)
from treespec.poly.sturm import (sturm_count, real_root_enclosure,
                                 largest_root_exceeds, compare_largest_roots,
                                 squarefree_part, root_bound)


def _family(kind, *params):
    return build_family(FamilySpec(kind, params))


class TestCharpoly(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_small_graphs(self):
        self.assertEqual(charpoly(_family('Complete', 3)),
                         IntPoly([-2, -3, 0, 1]))
        self.assertEqual(charpoly(_family('Star', 3), 'laplacian'),
                         IntPoly([0, -4, 9, -6, 1]))
        self.assertEqual(charpoly(Graph(0)), 1)
        self.assertRaises(DomainError, charpoly, _family('Path', 2),
                          'signless')

    def test_cospectral_pair(self):
        # K_{1,4} and C4 + K1 share the adjacency spectrum
        star = _family('Star', 4)
        other = disjoint_union(_family('Cycle', 4), Graph(1))
        self.assertEqual(charpoly(star), charpoly(other))
        self.assertNotEqual(charpoly(star, 'laplacian'),
                            charpoly(other, 'laplacian'))

    def test_laplacian_facts(self):
        g = t4(1, 2, 3)
        lap = charpoly(g, 'laplacian')
        self.assertEqual(lap.coefficient(0), 0)
        # n times the number of spanning trees
        self.assertEqual(abs(lap.coefficient(1)), g.n)
        self.assertEqual(-lap.coefficient(g.n - 1), 2 * g.m)

    def test_spanning_tree_count(self):
        self.assertEqual(spanning_tree_count(_family('Complete', 4)), 16)
        self.assertEqual(spanning_tree_count(_family('Cycle', 5)), 5)
        self.assertEqual(spanning_tree_count(t4(1, 1, 1)), 1)
        self.assertEqual(spanning_tree_count(Graph(3)), 0)

    def test_path_poly(self):
        for r in range(-2, 12):
            self.assertEqual(path_poly(r)(2), r + 1)
        for r in range(1, 9):
            self.assertEqual(path_poly(r), charpoly(_family('Path', r)))
        self.assertEqual(path_poly(2), LAMBDA ** 2 - 1)
        self.assertRaises(DomainError, path_poly, -3)

    def test_path_poly_laurent(self):
        for r in range(-2, 8):
            numerator, denominator = path_poly_laurent(r)
            self.assertEqual(to_laurent(path_poly(r)) * denominator,
                             numerator)
        self.assertRaises(DomainError, path_poly_laurent, -3)

    def test_deletion_charpoly(self):
        graphs = enumerate_connected_graphs(5) + [t4(1, 1, 2)]
        for g in graphs:
            expected = charpoly(g)
            for v in (0, g.n - 1):
                self.assertEqual(deletion_charpoly(g, v), expected)
        self.assertRaises(DomainError, deletion_charpoly, t4(1, 1, 1), 10)

    def test_power_sums(self):
        for g in enumerate_connected_graphs(4) + [t4(1, 1, 1)]:
            adj = g.adjacency_matrix()
            sums = power_sums(charpoly(g), 6)
            for k in range(7):
                walks = int(np.trace(np.linalg.matrix_power(adj, k)))
                self.assertEqual(sums[k], walks)
        self.assertRaises(DomainError, power_sums, IntPoly([1, 2]), 2)


class TestSturm(unittest.TestCase):
    def setUp(self):
        self._f = LAMBDA ** 2 - 2

    def tearDown(self):
        pass

    def test_count(self):
        self.assertEqual(sturm_count(self._f, 0), 1)
        self.assertEqual(sturm_count(self._f, -2, 2), 2)
        self.assertEqual(sturm_count(self._f, 2), 0)
        # repeated roots count once
        self.assertEqual(sturm_count((LAMBDA - 1) ** 2 * LAMBDA, -1), 2)
        self.assertEqual(sturm_count(IntPoly([5]), 0), 0)
        self.assertRaises(DomainError, sturm_count, ZERO, 0)
        self.assertRaises(DomainError, sturm_count, self._f, 1, 1)

    def test_enclosure(self):
        lo, hi = real_root_enclosure(self._f)
        self.assertTrue(hi - lo <= Fraction(1, 10 ** 9))
        self.assertTrue(lo * lo < 2 <= hi * hi)
        self.assertEqual(real_root_enclosure(LAMBDA ** 2 + 1), None)
        self.assertTrue(root_bound(self._f) >= 2)

    def test_largest_roots(self):
        g = LAMBDA ** 2 - 3
        self.assertTrue(largest_root_exceeds(self._f, Fraction(141, 100)))
        self.assertFalse(largest_root_exceeds(self._f, Fraction(3, 2)))
        self.assertEqual(compare_largest_roots(self._f, g), -1)
        self.assertEqual(compare_largest_roots(g, self._f), 1)
        self.assertEqual(compare_largest_roots(self._f, self._f * LAMBDA),
                         0)
        self.assertRaises(DomainError, compare_largest_roots,
                          LAMBDA ** 2 + 1, g)

    def test_squarefree_part(self):
        self.assertEqual(squarefree_part((LAMBDA - 1) ** 3 * LAMBDA),
                         LAMBDA ** 2 - LAMBDA)
        self.assertRaises(DomainError, squarefree_part, ZERO)


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestCharpoly)
    unittest.TextTestRunner(verbosity=2).run(suite)
    suite = unittest.TestLoader().loadTestsFromTestCase(TestSturm)
    unittest.TextTestRunner(verbosity=2).run(suite)
