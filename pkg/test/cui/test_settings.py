import os
import shutil
import tempfile
import unittest
from treespec.cui.settings import ConfParser, Settings
from treespec.cui.treespec_argparse import get_parser
from treespec.dsverify.spectrum import CACHE_DIR_ENV


class TestConfParser(unittest.TestCase):
    def setUp(self):
        self._dir = tempfile.mkdtemp()
        self._saved = os.environ.pop(CACHE_DIR_ENV, None)

    def tearDown(self):
        shutil.rmtree(self._dir)
        if self._saved is not None:
            os.environ[CACHE_DIR_ENV] = self._saved

    def _write_conf(self, lines):
        filename = os.path.join(self._dir, "treespec.conf")
        with open(filename, 'w') as w:
            w.write("\n".join(lines) + "\n")
        return filename

    def test_defaults(self):
        settings = Settings()
        config = settings.get_config_dict()
        self.assertEqual(config['workers'], 1)
        self.assertEqual(config['sample_fraction'], 0.01)
        self.assertFalse(config['repair'])
        self.assertIsNone(config['cache_dir'])

    def test_file(self):
        filename = self._write_conf(["# census settings",
                                     "MAX_SUM = 9",
                                     "WORKERS = 2",
                                     "REPAIR = .TRUE.",
                                     "FORMAT = yaml",
                                     "SAMPLE_FRACTION = 0.5"])
        settings = ConfParser(filename=filename).get_settings()
        self.assertEqual(settings.get_max_sum(), 9)
        self.assertEqual(settings.get_workers(), 2)
        self.assertTrue(settings.get_repair())
        self.assertEqual(settings.get_format(), 'yaml')
        self.assertEqual(settings.get_sample_fraction(), 0.5)

    def test_options_override_file(self):
        filename = self._write_conf(["MAX_SUM = 9", "WORKERS = 2"])
        args = get_parser().parse_args(
            ['identities', 'eq32', '--max-sum', '6', '-q'])
        settings = ConfParser(filename=filename, args=args).get_settings()
        self.assertEqual(settings.get_max_sum(), 6)
        self.assertEqual(settings.get_workers(), 2)
        self.assertEqual(settings.get_log_level(), 0)

    def test_underscore_options(self):
        self.assertRaises(SystemExit, get_parser().parse_args,
                          ['census', '--max_n', '8'])
        args = get_parser().parse_args(['census', '--max-n', '8'])
        self.assertEqual(args.max_n, 8)

    def test_cache_dir_environment(self):
        os.environ[CACHE_DIR_ENV] = self._dir
        try:
            settings = ConfParser().get_settings()
            self.assertEqual(settings.get_cache_dir(), self._dir)
            filename = self._write_conf(["CACHE_DIR = elsewhere"])
            settings = ConfParser(filename=filename).get_settings()
            self.assertEqual(settings.get_cache_dir(), 'elsewhere')
        finally:
            del os.environ[CACHE_DIR_ENV]

    def test_errors(self):
        for lines in (["MAX_SUM = 2"],
                      ["WORKERS = two"],
                      ["REPAIR = yes"],
                      ["FORMAT = xml"],
                      ["SAMPLE_FRACTION = 0"],
                      ["TOLERANCE = 1e-8"]):
            filename = self._write_conf(lines)
            self.assertRaises(SystemExit, ConfParser, filename)
        self.assertRaises(SystemExit, ConfParser,
                          os.path.join(self._dir, "missing.conf"))


if __name__ == '__main__':
    suite = unittest.TestLoader().loadTestsFromTestCase(TestConfParser)
    unittest.TextTestRunner(verbosity=2).run(suite)
