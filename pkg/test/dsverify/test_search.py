import unittest
from treespec.graph.graph import CapacityError
from treespec.graph.families import FamilySpec, build_family, t4
from treespec.graph.trees import enumerate_trees
from treespec.poly.intpoly import DomainError
from treespec.invariants.degrees import HypothesisError
from treespec.dsverify.spectrum import SpectrumCache
from treespec.dsverify.search import (cospectral_mate_search,
                                      degree_multiset_trees,
                                      degree_dichotomy, ds_check_t4,
                                      family_collision_scan,
                                      verify_line_correspondence,
                                      centipede_ds_check,
                                      complement_ds_check)


def _family(kind, *params):
    return build_family(FamilySpec(kind, params))


class TestMateSearch(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_t4_has_no_mates(self):
        self.assertEqual(cospectral_mate_search(t4(1, 1, 1)), [])
        cache = SpectrumCache()
        self.assertEqual(
            cospectral_mate_search(t4(1, 1, 2), cache=cache), [])
        self.assertEqual(len(cache), 235)

    def test_small_trees_adjacency(self):
        for tree in enumerate_trees(7):
            self.assertEqual(
                cospectral_mate_search(tree, 'adjacency'), [])
        found = [tree for tree in enumerate_trees(8)
                 if cospectral_mate_search(tree, 'adjacency')]
        self.assertTrue(len(found) >= 2)

    def test_forest_space(self):
        self.assertEqual(
            cospectral_mate_search(_family('Star', 4), 'adjacency',
                                   'forests_same_nm'), [])

    def test_errors(self):
        cycle = _family('Cycle', 6)
        self.assertRaises(HypothesisError, cospectral_mate_search, cycle)
        self.assertRaises(DomainError, cospectral_mate_search, cycle,
                          'adjacency')
        self.assertRaises(ValueError, cospectral_mate_search, t4(1, 1, 1),
                          'laplacian', 'all_graphs')


class TestDSChecks(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_degree_multiset(self):
        degrees = [3] * 4 + [1] * 6
        self.assertEqual(len(degree_multiset_trees(10, degrees)), 2)
        self.assertEqual(len(degree_multiset_trees(5, [2, 2, 2, 1, 1])), 1)
        self.assertRaises(ValueError, degree_multiset_trees, 9, degrees)

    def test_degree_dichotomy(self):
        result = degree_dichotomy()
        self.assertTrue(result['passed'])
        self.assertEqual(
            sorted(x['identified_as'] for x in result['trees']),
            ['Centipede(6)', 'T4(1,1,1)'])

    def test_ds_check_t4(self):
        result = ds_check_t4(10)
        self.assertTrue(result['passed'])
        self.assertEqual(result['candidates_checked'], 106)
        self.assertEqual(result['tree_count_oracle'], 106)
        self.assertEqual(result['members'],
                         [{'params': [1, 1, 1], 'mates': []}])
        self.assertTrue(result['degree_dichotomy']['passed'])
        result = ds_check_t4(11, workers=2)
        self.assertTrue(result['passed'])
        self.assertEqual([m['params'] for m in result['members']],
                         [[1, 1, 2]])
        self.assertFalse('degree_dichotomy' in result)
        self.assertRaises(DomainError, ds_check_t4, 9)

    def test_family_collision_scan(self):
        result = family_collision_scan(sum_bound=10, g1_bound=9)
        self.assertTrue(result['passed'])
        self.assertEqual(result['collisions'], [])
        self.assertEqual(result['g1_copies'],
                         {'2<=p': [6], '1=p<q': [8], 'p=q=1<r': [10],
                          'p=q=r=1': [12]})
        self.assertEqual(result['g1_failures'], [])
        self.assertRaises(CapacityError, family_collision_scan,
                          sum_bound=31)

    def test_line_correspondence(self):
        result = verify_line_correspondence(7)
        self.assertTrue(result['passed'])
        self.assertEqual(result['candidates_checked'], 24)
        self.assertRaises(CapacityError, verify_line_correspondence, 11)

    def test_centipedes(self):
        result = centipede_ds_check((6, 8))
        self.assertTrue(result['passed'])
        self.assertEqual([x['candidates_checked']
                          for x in result['centipedes']], [6, 23])
        self.assertRaises(DomainError, centipede_ds_check, (7,))
        self.assertRaises(DomainError, centipede_ds_check, (2,))

    def test_complements(self):
        result = complement_ds_check(10)
        self.assertTrue(result['passed'])
        self.assertEqual(result['transform_violations'], [])
        self.assertEqual(result['members'],
                         [{'params': [1, 1, 1], 'mates': 0}])


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestMateSearch)
    unittest.TextTestRunner(verbosity=2).run(suite)
    suite = unittest.TestLoader().loadTestsFromTestCase(TestDSChecks)
    unittest.TextTestRunner(verbosity=2).run(suite)
