import unittest
from treespec.poly.intpoly import DomainError, LAMBDA
from treespec.poly.charpoly import charpoly, path_poly
from treespec.graph.graph import line_graph
from treespec.graph.families import t4
from treespec.closedforms.tables import (table_names, table_checksums,
                                         UnknownTableError, parse_exponent,
                                         get_table, instantiate_table,
                                         check_tables)
from treespec.closedforms.formulas import (build_h, build_f_r,
                                           case_of, case_formula_names,
                                           triangle_decomposition_charpoly,
                                           repaired_case_formulas,
                                           formula_line_t4_charpoly)


class TestTables(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_checksums(self):
        report = check_tables()
        self.assertTrue(report['passed'])
        for name in table_names:
            self.assertEqual(tuple(report[name]['checksum']),
                             table_checksums[name])
        self.assertEqual(get_table('W').checksum(), (90, 0, 1908))
        self.assertEqual(get_table('C0p').checksum(), (32, -216, 448))

    def test_parse_exponent(self):
        self.assertEqual(parse_exponent('2p+2q+7'), (0, 2, 2, 0, 7))
        self.assertEqual(parse_exponent('-n + 3'), (-1, 0, 0, 0, 3))
        self.assertEqual(parse_exponent('14'), (0, 0, 0, 0, 14))
        self.assertEqual(parse_exponent('2n-8'), (2, 0, 0, 0, -8))
        for text in ('', '2x', '2n+', '+-3'):
            self.assertRaises(ValueError, parse_exponent, text)

    def test_get_table(self):
        self.assertRaises(UnknownTableError, get_table, 'C9')
        self.assertTrue(issubclass(UnknownTableError, KeyError))
        self.assertEqual(get_table('C0').variables, ('n',))
        self.assertEqual(len(get_table('U').get_yaml_lines()), 27)

    def test_instantiate(self):
        c3 = instantiate_table('C3', n=13)
        self.assertEqual(c3.num_terms(), 16)
        self.assertEqual(c3.coefficient(0), -1)
        self.assertEqual(c3.coefficient(18), 2)
        u = instantiate_table('U', p=5, q=5, r=5)
        self.assertEqual(u.num_terms(), 8)
        self.assertEqual(u.coefficient(14), 3)
        self.assertEqual(u.coefficient(24), 3)
        self.assertRaises(DomainError, instantiate_table, 'W', n=99, p=1,
                          q=1, r=1)
        self.assertRaises(DomainError, instantiate_table, 'U', n=10)
        self.assertRaises(DomainError, instantiate_table, 'C0')


class TestFormulas(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_building_blocks(self):
        self.assertEqual(build_h(0), path_poly(2))
        self.assertEqual(build_h(1), LAMBDA ** 3 - 3 * LAMBDA - 2)
        self.assertEqual(build_f_r(0), LAMBDA ** 2)
        self.assertEqual(build_f_r(1), path_poly(3))
        self.assertRaises(DomainError, build_h, -1)

    def test_case_of(self):
        self.assertEqual(case_of(1, 1, 1), 'p=q=r=1')
        self.assertEqual(case_of(1, 1, 2), '1=p=q<r')
        self.assertEqual(case_of(1, 2, 2), '1=p<q')
        self.assertEqual(case_of(2, 2, 2), '2<=p')
        self.assertEqual(len(case_formula_names), 4)

    def test_triangle(self):
        for p, q, r in ((1, 1, 1), (1, 1, 3), (1, 2, 4), (2, 3, 3)):
            self.assertEqual(triangle_decomposition_charpoly(p, q, r),
                             charpoly(line_graph(t4(p, q, r))))

    def test_repaired_cases(self):
        for p, q, r in ((1, 1, 1), (1, 1, 2), (1, 2, 3), (3, 3, 3)):
            self.assertEqual(repaired_case_formulas(p, q, r),
                             charpoly(t4(p, q, r)))

    def test_head_gap(self):
        self.assertRaises(DomainError, formula_line_t4_charpoly, 1, 1, 2)
        self.assertRaises(DomainError, formula_line_t4_charpoly, 1, 1, 1)
        self.assertFalse(formula_line_t4_charpoly(1, 2, 2).is_zero())


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestTables)
    unittest.TextTestRunner(verbosity=2).run(suite)
    suite = unittest.TestLoader().loadTestsFromTestCase(TestFormulas)
    unittest.TextTestRunner(verbosity=2).run(suite)
