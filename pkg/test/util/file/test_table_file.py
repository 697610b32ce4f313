import os
import tempfile
import unittest

import numpy as np

from cliffcz.model.group import build_lc2, closure
from cliffcz.model.matrix import gates
from cliffcz.util.exception import CorruptTableError
from cliffcz.util.file import TableFileUtil, table_path


class TestTableFile(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.c1 = closure(gates.C1_GENERATORS, name='c1')

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = table_path(self.tmp.name, 'c1')

    def tearDown(self):
        self.tmp.cleanup()

    def test_header(self):
        lines = TableFileUtil.to_text(self.c1).splitlines()
        self.assertEqual('CLIFFORD-TABLE v1 c1 192', lines[0])
        self.assertEqual('ALPHABET H P', lines[1])
        self.assertEqual('WORD', lines[2 + 4 * self.c1.identity_id()])
        self.assertEqual(2 + 192 * 4, len(lines))

    def test_round_trip(self):
        TableFileUtil.write(self.c1, self.path)
        loaded = TableFileUtil.read(self.path)
        self.assertEqual(self.c1.name, loaded.name)
        self.assertEqual(self.c1.words, loaded.words)
        self.assertEqual(self.c1.alphabet, loaded.alphabet)
        self.assertTrue(np.array_equal(self.c1.data, loaded.data))

    def test_lc2_round_trip(self):
        lc2 = build_lc2(self.c1)
        loaded = TableFileUtil.parse(TableFileUtil.to_text(lc2).splitlines())
        self.assertEqual(lc2.words, loaded.words)
        self.assertTrue(np.array_equal(lc2.data, loaded.data))

    def test_rewrite_is_byte_identical(self):
        TableFileUtil.write(self.c1, self.path)
        with open(self.path, 'rb') as f:
            first = f.read()
        TableFileUtil.write(TableFileUtil.read(self.path), self.path)
        with open(self.path, 'rb') as f:
            self.assertEqual(first, f.read())
        self.assertFalse(os.path.exists(self.path + '.tmp'))

    def _corrupt(self, lines):
        with open(self.path, 'w') as f:
            f.write('\n'.join(lines) + '\n')
        with self.assertRaises(CorruptTableError) as context:
            TableFileUtil.read(self.path)
        return context.exception

    def test_truncated(self):
        lines = TableFileUtil.to_text(self.c1).splitlines()
        error = self._corrupt(lines[:-2])
        self.assertEqual(self.path, error.path)
        self._corrupt(lines[:-4])

    def test_bad_header(self):
        lines = TableFileUtil.to_text(self.c1).splitlines()
        error = self._corrupt(['CLIFFORD-TABLE v2 c1 192'] + lines[1:])
        self.assertEqual(1, error.line_no)
        self._corrupt(lines[:1] + ['ALPHABET H X'] + lines[2:])

    def test_count_mismatch(self):
        lines = TableFileUtil.to_text(self.c1).splitlines()
        self._corrupt(['CLIFFORD-TABLE v1 c1 191'] + lines[1:])

    def test_bad_entry(self):
        lines = TableFileUtil.to_text(self.c1).splitlines()
        lines[4] = lines[4].replace('/', '|', 1)
        self._corrupt(lines)

    def test_unreduced_entry(self):
        lines = TableFileUtil.to_text(self.c1).splitlines()
        identity_row = 2 + 4 * self.c1.identity_id() + 2
        lines[identity_row] = lines[identity_row].replace('1,0,0,0/0', '2,0,0,0/2', 1)
        self._corrupt(lines)

    def test_missing_file(self):
        with self.assertRaises(CorruptTableError):
            TableFileUtil.read(os.path.join(self.tmp.name, 'absent.tbl'))
