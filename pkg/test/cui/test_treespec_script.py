import os
import shutil
import tempfile
import unittest
from treespec.graph.families import t4
from treespec.file_IO import read_graph6_file, read_report
from treespec.cui.treespec_script import run


class TestRun(unittest.TestCase):
    def setUp(self):
        self._dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self._dir)

    def _path(self, name):
        return os.path.join(self._dir, name)

    def test_gen(self):
        filename = self._path("t4.g6")
        self.assertEqual(run(['gen', 't4', '1', '1', '1', '-o', filename]),
                         0)
        self.assertEqual(read_graph6_file(filename), [t4(1, 1, 1)])
        filename = self._path("t4.json")
        self.assertEqual(run(['gen', 'T4', '1', '2', '3', '--format',
                              'json', '-o', filename]), 0)
        report = read_report(filename)
        self.assertEqual(report['task'], 'gen')
        self.assertEqual(report['num_vertices'], 13)
        self.assertEqual(report['params'], [1, 2, 3])

    def test_input_errors(self):
        self.assertEqual(run(['gen', 't4', '2', '1', '1']), 1)
        self.assertEqual(run(['gen', 'hypercube', '3']), 1)
        self.assertEqual(run(['charpoly', '--graph6', 'A']), 1)
        self.assertEqual(run(['charpoly']), 1)
        self.assertEqual(run(['identities', 'eq32', '--format', 'graph6']),
                         1)
        self.assertEqual(run(['identities', 'eq99']), 1)
        self.assertEqual(run(['census', '--config',
                              self._path("missing.conf")]), 1)

    def test_charpoly(self):
        filename = self._path("charpoly.tsv")
        self.assertEqual(run(['charpoly', '--family', 'star', '4',
                              '--kind', 'laplacian', '--format', 'tsv',
                              '-o', filename]), 0)
        with open(filename) as f:
            lines = [line.rstrip("\n") for line in f]
        self.assertTrue("graph6\tkind\tcoeffs" in lines)
        self.assertEqual(lines[-1].split("\t")[1], 'laplacian')

    def test_identities(self):
        filename = self._path("eq32.json")
        self.assertEqual(run(['identities', 'eq32', '--max-sum', '6', '-q',
                              '-o', filename]), 0)
        report = read_report(filename)
        self.assertEqual(report['mismatches'], 0)
        self.assertEqual(report['config']['max_sum'], 6)
        self.assertEqual(run(['identities', 'eq31', '--max-sum', '7', '-q',
                              '-o', self._path("eq31.json")]), 2)

    def test_reports_are_reproducible(self):
        contents = []
        for name in ("first.json", "second.json"):
            filename = self._path(name)
            self.assertEqual(run(['identities', 'eq32', '--max-sum', '5',
                                  '-q', '-o', filename]), 0)
            with open(filename) as f:
                contents.append(f.read())
        self.assertEqual(contents[0], contents[1])
        report = read_report(self._path("first.json"))
        self.assertFalse('elapsed' in report)
        self.assertEqual(report['task'], 'identities')

    def test_underscore_options(self):
        self.assertEqual(run(['census', '--max_n', '8', '-q']), 1)

    def test_walks(self):
        filename = self._path("walks.json")
        self.assertEqual(run(['walks', '--family', 'complete', '4',
                              '--k', '3', '4', '5', '-o', filename]), 0)
        report = read_report(filename)
        walks = report['graphs'][0]['walks']
        self.assertEqual(walks['3']['closed_walks'], 24)
        self.assertEqual(walks['5']['pattern_counts']['G1'], 12)

    def test_ds_search_cache(self):
        cache_dir = self._path("cache")
        filename = self._path("ds.json")
        self.assertEqual(run(['ds-search', '--n', '10', '-q', '--cache-dir',
                              cache_dir, '--sample-fraction', '1',
                              '-o', filename]), 0)
        report = read_report(filename)
        self.assertEqual(report['cache']['keys'], 106)
        self.assertEqual(report['cache']['incoherent'], [])
        self.assertTrue(os.path.exists(os.path.join(cache_dir,
                                                    "spectra.txt")))


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestRun)
    unittest.TextTestRunner(verbosity=2).run(suite)
