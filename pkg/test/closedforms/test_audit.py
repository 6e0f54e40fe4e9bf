import unittest
from treespec.graph.graph import CapacityError
from treespec.closedforms.audit import (CaseMismatchError, PASS, MISMATCH,
                                        GAP, identity_applies,
                                        verify_identity, audit_formula,
                                        audit, expected_status,
                                        valid_triples, audit_grid,
                                        injectivity_scan, audit_names)


class TestAudit(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_eq31(self):
        report = verify_identity('eq31', 2, 2, 2)
        self.assertEqual(report['status'], MISMATCH)
        self.assertEqual(report['shift'], 1)
        self.assertEqual(report['case'], 'C0+W')
        self.assertTrue(len(report['diff']) > 0)
        report = verify_identity('eq31', 2, 3, 4, repair=True)
        self.assertEqual(report['identity'], 'eq31-repair')
        self.assertEqual(report['status'], PASS)
        self.assertEqual(report['diff'], [])

    def test_eq32(self):
        for params in ((1, 2, 2), (1, 2, 5), (1, 3, 3)):
            report = verify_identity('eq32', *params)
            self.assertEqual(report['status'], PASS)
            self.assertEqual(report['case'], 'C0p+W1')

    def test_eq41(self):
        report = verify_identity('eq41', 1, 1, 3)
        self.assertEqual(report['status'], MISMATCH)
        self.assertEqual(report['case'], 'C1')
        report = verify_identity('eq41', 1, 2, 3)
        self.assertEqual(report['status'], MISMATCH)
        self.assertEqual(report['case'], 'C2+U1')
        report = verify_identity('eq41', 2, 2, 2)
        self.assertEqual(report['status'], PASS)
        self.assertEqual(report['case'], 'C3+U')

    def test_formulas(self):
        self.assertEqual(audit_formula('cases', 1, 1, 1)['status'], MISMATCH)
        self.assertEqual(audit_formula('cases', 2, 2, 3)['status'], PASS)
        self.assertEqual(audit_formula('cases-repair', 1, 1, 1)['status'],
                         PASS)
        self.assertEqual(audit_formula('triangle', 1, 1, 1)['status'], PASS)
        report = audit_formula('head', 1, 1, 2)
        self.assertEqual(report['status'], GAP)
        self.assertTrue(report['reason'])
        self.assertEqual(audit_formula('head', 1, 2, 2)['status'], MISMATCH)
        self.assertRaises(ValueError, audit_formula, 'eq31', 2, 2, 2)

    def test_case_mismatch(self):
        self.assertRaises(CaseMismatchError, verify_identity, 'eq31', 1, 2, 2)
        self.assertRaises(CaseMismatchError, verify_identity, 'eq32', 2, 2, 2)
        self.assertRaises(CaseMismatchError, verify_identity, 'eq32', 1, 1, 3)
        self.assertRaises(CaseMismatchError, verify_identity, 'eq41', 3, 2, 2)
        self.assertRaises(ValueError, verify_identity, 'eq99', 2, 2, 2)

    def test_registry(self):
        for which in audit_names:
            for p, q, r in valid_triples(8):
                if not identity_applies(which, p, q, r):
                    continue
                self.assertEqual(audit(which, p, q, r)['status'],
                                 expected_status(which, p, q, r))

    def test_valid_triples(self):
        triples = list(valid_triples(6))
        self.assertEqual(len(triples), 7)
        self.assertTrue(all(1 <= p <= q <= r for p, q, r in triples))
        self.assertEqual(list(valid_triples(7, min_p=2)),
                         [(2, 2, 2), (2, 2, 3)])

    def test_grid(self):
        report = audit_grid(7, repair=True)
        self.assertTrue(report['passed'])
        self.assertTrue(report['mismatches'] > 0)
        self.assertEqual(report['identities'][-2:],
                         ['eq31-repair', 'cases-repair'])
        self.assertEqual(report['summary']['triangle'][PASS], 11)
        self.assertEqual(report['summary']['eq31'][MISMATCH], 2)
        self.assertRaises(ValueError, audit_grid, 5, identities=['eq99'])

    def test_grid_smallest_member(self):
        report = audit_grid(3, repair=True)
        self.assertTrue(report['passed'])
        row = dict((e['identity'], e['status']) for e in report['entries'])
        self.assertEqual(row, {'head': GAP, 'cases': MISMATCH,
                               'triangle': PASS, 'cases-repair': PASS})
        self.assertTrue(all(e['params'] == [1, 1, 1]
                            for e in report['entries']))

    def test_grid_workers(self):
        serial = audit_grid(6, identities=['eq41'])
        parallel = audit_grid(6, identities=['eq41'], workers=2)
        self.assertEqual(serial['entries'], parallel['entries'])


class TestInjectivity(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_scans(self):
        for table, bound in (('W', 14), ('U', 14), ('W1', 12), ('U1', 12)):
            report = injectivity_scan(table, bound)
            self.assertTrue(report['passed'])
            self.assertTrue(report['triples_checked'] > 0)

    def test_errors(self):
        self.assertRaises(ValueError, injectivity_scan, 'C0', 10)
        self.assertRaises(CapacityError, injectivity_scan, 'W', 31)


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestAudit)
    unittest.TextTestRunner(verbosity=2).run(suite)
    suite = unittest.TestLoader().loadTestsFromTestCase(TestInjectivity)
    unittest.TextTestRunner(verbosity=2).run(suite)
