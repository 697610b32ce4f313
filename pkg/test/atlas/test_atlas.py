import os
import shutil
import tempfile
import unittest
from unittest import mock

from cliffcz import CliffordAtlas
from cliffcz.flow.acceptance import artifact_texts
from cliffcz.model.matrix import gates
from cliffcz.model.ring import OMEGA_NUM
from cliffcz.util.exception import CorruptTableError, NotCliffordError
from cliffcz.util.file import OrbitFileUtil

WARNING_LOGGER = 'cliffcz.util.exception.exception_info'


class TestCliffordAtlas(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.atlas = CliffordAtlas.shared()

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def test_shared_is_cached(self):
        self.assertIs(self.atlas, CliffordAtlas.shared())

    def test_lookup(self):
        found = self.atlas.lookup(gates.CNOT12)
        self.assertEqual(1, found['layer'])
        self.assertEqual(self.atlas.c2.contains(gates.CNOT12), found['element_id'])
        self.assertEqual(found['orbit'], self.atlas.orbits.orbit_of_element(found['element_id']))
        self.assertEqual(20, self.atlas.lookup(gates.SWAP)['paper_label'])
        with self.assertRaises(NotCliffordError):
            self.atlas.lookup(gates.diagonal([1, 1, 1, OMEGA_NUM]))

    def test_regenerates_missing_tables(self):
        directory = os.path.join(self.tmp.name, 'atlas')
        with mock.patch.object(CliffordAtlas, 'build', return_value=self.atlas):
            with self.assertLogs(WARNING_LOGGER, level='WARNING') as logs:
                atlas = CliffordAtlas.load_or_build(directory)
        self.assertIs(self.atlas, atlas)
        self.assertIn('W001', logs.output[0])
        self.assertTrue(CliffordAtlas.tables_exist(directory))

    def test_unwritable_directory_keeps_tables_in_memory(self):
        with mock.patch.object(CliffordAtlas, 'build', return_value=self.atlas), \
                mock.patch.object(CliffordAtlas, 'save', side_effect=PermissionError(13, 'Permission denied')):
            with self.assertLogs(WARNING_LOGGER, level='WARNING') as logs:
                atlas = CliffordAtlas.load_or_build(self.tmp.name)
        self.assertIs(self.atlas, atlas)
        self.assertIn('W003', logs.output[-1])

    def test_no_regen(self):
        with self.assertRaises(CorruptTableError):
            CliffordAtlas.load_or_build(self.tmp.name, regen=False)

    def test_table_names_checked(self):
        self.atlas.save(self.tmp.name)
        shutil.copy(os.path.join(self.tmp.name, 'c1.tbl'), os.path.join(self.tmp.name, 'lc2.tbl'))
        with self.assertRaises(CorruptTableError):
            CliffordAtlas.load(self.tmp.name)


class TestIndependentBuild(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.shared = CliffordAtlas.shared()
        cls.fresh = CliffordAtlas.build()

    def test_build_is_not_cached(self):
        self.assertIsNot(self.shared, self.fresh)

    def test_outputs_are_byte_identical(self):
        expected = artifact_texts(self.shared)
        observed = artifact_texts(self.fresh)
        self.assertEqual(sorted(expected), sorted(observed))
        for name in expected:
            self.assertEqual(expected[name], observed[name], name)

    def test_written_files_are_byte_identical(self):
        with tempfile.TemporaryDirectory() as first, tempfile.TemporaryDirectory() as second:
            for atlas, directory in [(self.shared, first), (self.fresh, second)]:
                atlas.save(directory)
                OrbitFileUtil.write(atlas.orbits, directory)
            names = sorted(os.listdir(first))
            self.assertEqual(['c1.tbl', 'c2.tbl', 'lc2.tbl', 'orbits.map', 'orbits.summary'], names)
            for name in names:
                with open(os.path.join(first, name), 'rb') as f, open(os.path.join(second, name), 'rb') as g:
                    self.assertEqual(f.read(), g.read(), name)

    def test_reloaded_tables_give_same_outputs(self):
        with tempfile.TemporaryDirectory() as directory:
            self.fresh.save(directory)
            loaded = CliffordAtlas.load(directory)
        self.assertEqual(artifact_texts(self.shared), artifact_texts(loaded))
