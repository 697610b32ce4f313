import os
import tempfile
import unittest
from unittest import mock

from cliffcz.util.config import ATLAS_DIR_ENV, DEFAULT_ATLAS_DIR, get_atlas_dir


class TestConfig(unittest.TestCase):
    def test_override_wins(self):
        with mock.patch.dict(os.environ, {ATLAS_DIR_ENV: '/tmp/from-env'}):
            self.assertEqual(os.path.abspath('/tmp/explicit'), get_atlas_dir('/tmp/explicit'))

    def test_environment(self):
        with mock.patch.dict(os.environ, {ATLAS_DIR_ENV: '/tmp/from-env'}):
            self.assertEqual(os.path.abspath('/tmp/from-env'), get_atlas_dir())

    def test_dotenv_file(self):
        with tempfile.TemporaryDirectory() as directory:
            env_path = os.path.join(directory, '.env')
            with open(env_path, 'w') as f:
                f.write('{}=/tmp/from-dotenv\n'.format(ATLAS_DIR_ENV))
            with mock.patch.dict(os.environ, {}, clear=False):
                os.environ.pop(ATLAS_DIR_ENV, None)
                self.assertEqual(os.path.abspath('/tmp/from-dotenv'), get_atlas_dir(env_path=env_path))

    def test_default(self):
        with tempfile.TemporaryDirectory() as directory:
            env_path = os.path.join(directory, '.env')
            open(env_path, 'w').close()
            with mock.patch.dict(os.environ, {}, clear=False):
                os.environ.pop(ATLAS_DIR_ENV, None)
                self.assertEqual(os.path.abspath(os.path.expanduser(DEFAULT_ATLAS_DIR)),
                                 get_atlas_dir(env_path=env_path))
