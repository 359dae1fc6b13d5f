import os
import unittest
from unittest import mock

from utils.config import Settings


class TestSettings(unittest.TestCase):

    @mock.patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        """Test the defaults with an empty environment"""
        self.assertEqual(Settings.from_env(), Settings(threads=1, log_level="WARNING", results_dir="results"))

    @mock.patch.dict(os.environ, {"TDV_THREADS": "4", "TDV_LOG_LEVEL": "DEBUG", "TDV_RESULTS_DIR": "out"}, clear=True)
    def test_from_env(self):
        """Test that every variable is read"""
        settings = Settings.from_env()
        self.assertEqual((settings.threads, settings.log_level, settings.results_dir), (4, "DEBUG", "out"))

    def test_invalid_threads(self):
        """Test that a non-integer or non-positive thread count is rejected"""
        for value in ("many", "0", "-2"):
            with self.subTest(value=value):
                with mock.patch.dict(os.environ, {"TDV_THREADS": value}, clear=True):
                    with self.assertRaises(ValueError):
                        Settings.from_env()


if __name__ == '__main__':
    unittest.main()
