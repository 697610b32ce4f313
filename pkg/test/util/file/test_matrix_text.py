import io
import os
import tempfile
import unittest
from unittest import mock

from cliffcz.model.matrix import gates
from cliffcz.util.exception import DimensionError, MatrixFormatError, NotUnitaryError
from cliffcz.util.file import MatrixTextUtil

CZ_TEXT = """4
1,0,0,0/0 0,0,0,0/0 0,0,0,0/0 0,0,0,0/0
0,0,0,0/0 1,0,0,0/0 0,0,0,0/0 0,0,0,0/0
0,0,0,0/0 0,0,0,0/0 1,0,0,0/0 0,0,0,0/0
0,0,0,0/0 0,0,0,0/0 0,0,0,0/0 -1,0,0,0/0
"""


class TestMatrixText(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(gates.CZ, MatrixTextUtil.parse(CZ_TEXT))
        self.assertEqual(CZ_TEXT, MatrixTextUtil.format(gates.CZ))

    def test_unreduced_entries(self):
        self.assertEqual(gates.H, MatrixTextUtil.parse('2\n2,0,0,0/3 2,0,0,0/3\n1,0,0,0/1 -2,0,0,0/3\n'))

    def test_format_errors(self):
        with self.assertRaises(MatrixFormatError):
            MatrixTextUtil.parse('4\n1,0,0,0/0 0,0,0,0/0 0,0,0,0/0 i^(1/2)\n')
        with self.assertRaises(MatrixFormatError):
            MatrixTextUtil.parse('two\n')
        with self.assertRaises(MatrixFormatError):
            MatrixTextUtil.parse(CZ_TEXT + 'extra\n')
        with self.assertRaises(MatrixFormatError):
            MatrixTextUtil.parse('')

    def test_dimension_errors(self):
        with self.assertRaises(DimensionError):
            MatrixTextUtil.parse('3\n1,0,0,0/0 0,0,0,0/0 0,0,0,0/0\n')
        with self.assertRaises(DimensionError):
            MatrixTextUtil.parse('2\n1,0,0,0/0\n1,0,0,0/0\n')

    def test_not_unitary(self):
        text = '2\n1,0,0,0/0 1,0,0,0/0\n0,0,0,0/0 1,0,0,0/0\n'
        with self.assertRaises(NotUnitaryError):
            MatrixTextUtil.parse(text)
        self.assertEqual(2, MatrixTextUtil.parse(text, require_unitary=False).dim)

    def test_read_file_and_stdin(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'cz.txt')
            with open(path, 'w') as f:
                f.write(CZ_TEXT)
            self.assertEqual(gates.CZ, MatrixTextUtil.read(path))
        with mock.patch('sys.stdin', io.StringIO(CZ_TEXT)):
            self.assertEqual(gates.CZ, MatrixTextUtil.read('-'))

    def test_out_of_range_entries(self):
        with self.assertRaises(MatrixFormatError):
            MatrixTextUtil.parse('2\n3000000000,0,0,0/0 0,0,0,0/0\n0,0,0,0/0 1,0,0,0/0\n')
        with self.assertRaises(MatrixFormatError):
            MatrixTextUtil.parse('2\n1,0,0,0/99999999999999999999 0,0,0,0/0\n0,0,0,0/0 1,0,0,0/0\n')
        with self.assertRaises(MatrixFormatError):
            MatrixTextUtil.parse('2\n1,0,0,0/0 1,0,0,0/200\n0,0,0,0/0 1,0,0,0/0\n')
