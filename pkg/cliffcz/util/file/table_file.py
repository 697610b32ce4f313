"""
    Group table files.

    CLIFFORD-TABLE v1 <name> <count>
    ALPHABET <letters>
    then per element, in canonical order, a line "WORD <letters>" followed by the matrix text.
"""

import os
import re

import numpy as np

from cliffcz.model.group.group_table import GroupTable
from cliffcz.model.matrix import gates
from cliffcz.model.ring import cyclo_array
from cliffcz.util.exception import CliffordError, CorruptTableError, RingOverflowError

MAGIC = 'CLIFFORD-TABLE'
VERSION = 'v1'
EXTENSION = '.tbl'
HEADER_REGEX = re.compile(r'^CLIFFORD-TABLE (\S+) (\S+) (\d+)$')
ENTRY_REGEX = re.compile(r'^([+-]?\d+),([+-]?\d+),([+-]?\d+),([+-]?\d+)/(\d+)$')


def table_path(directory, name):
    return os.path.join(directory, name + EXTENSION)


class TableFileUtil:
    @staticmethod
    def to_text(table):
        lines = ['{} {} {} {}'.format(MAGIC, VERSION, table.name, len(table)),
                 ' '.join(['ALPHABET'] + table.alphabet)]
        for word, element in zip(table.words, table.data.tolist()):
            lines.append(' '.join(('WORD',) + word))
            lines.append(str(table.dim))
            for row in element:
                lines.append(' '.join('{},{},{},{}/{}'.format(*entry) for entry in row))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def write(table, path):
        """
        Write atomically through a temporary file next to path.
        """
        tmp_path = path + '.tmp'
        with open(tmp_path, 'w', encoding='utf8', newline='\n') as f:
            f.write(TableFileUtil.to_text(table))
        os.replace(tmp_path, path)
        return path

    @staticmethod
    def read(path):
        """
        :return: GroupTable
        :raises CorruptTableError: On a missing file, bad header, bad record or count mismatch
        """
        try:
            with open(path, encoding='utf8') as f:
                lines = f.read().splitlines()
        except OSError as e:
            raise CorruptTableError(path, e.strerror or str(e))
        return TableFileUtil.parse(lines, path)

    @staticmethod
    def parse(lines, path='<text>'):
        if len(lines) < 2:
            raise CorruptTableError(path, 'file is too short', len(lines))
        header = HEADER_REGEX.match(lines[0])
        if header is None or header.group(1) != VERSION:
            raise CorruptTableError(path, 'bad header "{}"'.format(lines[0]), 1)
        name, count = header.group(2), int(header.group(3))

        alphabet = lines[1].split()
        if not alphabet or alphabet[0] != 'ALPHABET':
            raise CorruptTableError(path, 'missing ALPHABET line', 2)
        unknown = [l for l in alphabet[1:] if l not in gates.GENERATORS]
        if unknown:
            raise CorruptTableError(path, 'unknown letters {}'.format(unknown), 2)
        generators = {l: gates.GENERATORS[l] for l in alphabet[1:]}

        words = []
        data = []
        pos = 2
        while pos < len(lines):
            parts = lines[pos].split()
            if not parts or parts[0] != 'WORD':
                raise CorruptTableError(path, 'expected WORD line', pos + 1)
            if any(l not in generators for l in parts[1:]):
                raise CorruptTableError(path, 'word uses letters outside the alphabet', pos + 1)
            words.append(tuple(parts[1:]))
            data.append(TableFileUtil._parse_matrix(lines, pos + 1, path))
            pos += 2 + len(data[-1])

        if len(data) != count:
            raise CorruptTableError(path, 'header announces {} records, found {}'.format(count, len(data)))
        if not data:
            raise CorruptTableError(path, 'table has no records')
        if len({len(m) for m in data}) != 1:
            raise CorruptTableError(path, 'records have different dimensions')
        try:
            data = np.array(data, dtype=np.int64)
            reduced = (cyclo_array.reduce(data) == data).all()
        except (OverflowError, RingOverflowError) as e:
            raise CorruptTableError(path, 'entries are out of range: {}'.format(e))
        if not reduced:
            raise CorruptTableError(path, 'entries are not in reduced form')

        try:
            return GroupTable(name, generators, data, words)
        except CliffordError as e:
            raise CorruptTableError(path, str(e))

    @staticmethod
    def _parse_matrix(lines, start, path):
        try:
            dim = int(lines[start])
        except (IndexError, ValueError):
            raise CorruptTableError(path, 'expected a dimension line', start + 1)
        if start + 1 + dim > len(lines):
            raise CorruptTableError(path, 'truncated record', len(lines))

        rows = []
        for offset in range(1, dim + 1):
            entries = lines[start + offset].split()
            parsed = [ENTRY_REGEX.match(e) for e in entries]
            if len(entries) != dim or not all(parsed):
                raise CorruptTableError(path, 'bad matrix row', start + offset + 1)
            rows.append([[int(g) for g in match.groups()] for match in parsed])
        return rows
