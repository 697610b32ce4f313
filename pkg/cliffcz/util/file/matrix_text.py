"""
    Matrix text format: a line with the dimension followed by one line per row, entries separated by
    spaces and written as "a,b,c,d/k" for (a + b w + c w^2 + d w^3) / sqrt(2)^k.
"""

import sys

import numpy as np

from cliffcz.model.matrix.gate_matrix import GateMatrix
from cliffcz.model.ring.cyclo_num import CycloNum
from cliffcz.util.exception import DimensionError, MatrixFormatError, NotUnitaryError, RingOverflowError

STDIN = '-'


class MatrixTextUtil:
    @staticmethod
    def format(m):
        return m.to_text()

    @staticmethod
    def parse_lines(lines, start=0):
        """
        :param list lines: Text lines
        :param int start: Index of the dimension line
        :return: tuple (GateMatrix, index of the first line after the matrix)
        """
        if start >= len(lines):
            raise MatrixFormatError('Missing dimension line')
        try:
            dim = int(lines[start].strip())
        except ValueError:
            raise MatrixFormatError('Dimension line must be an integer while "{}" is passed'.format(lines[start]))
        if dim not in GateMatrix.DIMS:
            raise DimensionError('Dimension must be one of {} while {} is passed'.format(GateMatrix.DIMS, dim))
        if start + 1 + dim > len(lines):
            raise MatrixFormatError('Expected {} rows after the dimension line'.format(dim))

        rows = []
        for line in lines[start + 1:start + 1 + dim]:
            entries = line.split()
            if len(entries) != dim:
                raise DimensionError('Row "{}" has {} entries instead of {}'.format(line, len(entries), dim))
            try:
                rows.append([CycloNum.parse(e).coef for e in entries])
            except RingOverflowError as e:
                raise MatrixFormatError('Row "{}" is out of range: {}'.format(line, e))
        try:
            data = np.array(rows, dtype=np.int64)
        except OverflowError as e:
            raise MatrixFormatError('Matrix is out of range: {}'.format(e))
        return GateMatrix(data), start + 1 + dim

    @staticmethod
    def _is_unitary(m):
        try:
            return m.is_unitary()
        except RingOverflowError as e:
            raise MatrixFormatError('Matrix is out of range: {}'.format(e))

    @staticmethod
    def parse(text, require_unitary=True):
        lines = [line for line in text.splitlines() if line.strip()]
        m, end = MatrixTextUtil.parse_lines(lines)
        if end != len(lines):
            raise MatrixFormatError('Unexpected text after the matrix: "{}"'.format(lines[end]))
        if require_unitary and not MatrixTextUtil._is_unitary(m):
            raise NotUnitaryError('Matrix is not unitary')
        return m

    @staticmethod
    def read(path, require_unitary=True):
        """
        :param str path: File path, or "-" for standard input
        """
        if path == STDIN:
            text = sys.stdin.read()
        else:
            with open(path, encoding='utf8') as f:
                text = f.read()
        return MatrixTextUtil.parse(text, require_unitary=require_unitary)
