"""
    Orbit map ("element_id orbit_id" per line) and orbit summary
    ("orbit_id layer size representative_encoding" per line, encoding in hex).
"""

import os

import numpy as np

from cliffcz.util.exception import CorruptTableError

MAP_FILE = 'orbits.map'
SUMMARY_FILE = 'orbits.summary'


class OrbitFileUtil:
    @staticmethod
    def map_text(atlas):
        return ''.join('{} {}\n'.format(i, o) for i, o in enumerate(atlas.orbit_of.tolist()))

    @staticmethod
    def summary_lines(atlas):
        sizes = atlas.sizes()
        return ['{} {} {} {}'.format(o, atlas.layer(o), sizes[o - 1], atlas.representative_encoding(o).hex())
                for o in atlas.orbit_ids()]

    @staticmethod
    def summary_text(atlas):
        return '\n'.join(OrbitFileUtil.summary_lines(atlas)) + '\n'

    @staticmethod
    def write(atlas, directory):
        """
        :return: tuple Paths of the map and summary files
        """
        paths = (os.path.join(directory, MAP_FILE), os.path.join(directory, SUMMARY_FILE))
        for path, text in zip(paths, (OrbitFileUtil.map_text(atlas), OrbitFileUtil.summary_text(atlas))):
            with open(path, 'w', encoding='utf8', newline='\n') as f:
                f.write(text)
        return paths

    @staticmethod
    def read_map(path):
        """
        :return: numpy Orbit id of every element id
        """
        try:
            rows = np.loadtxt(path, dtype=np.int64, ndmin=2)
        except (OSError, ValueError) as e:
            raise CorruptTableError(path, str(e))
        if rows.shape[1] != 2 or not (rows[:, 0] == np.arange(len(rows))).all():
            raise CorruptTableError(path, 'element ids must run from 0 without gaps')
        return rows[:, 1]

    @staticmethod
    def read_summary(path):
        """
        :return: list of (orbit_id, layer, size, representative encoding bytes)
        """
        records = []
        try:
            with open(path, encoding='utf8') as f:
                for line_no, line in enumerate(f, start=1):
                    parts = line.split()
                    if len(parts) != 4:
                        raise CorruptTableError(path, 'expected 4 fields', line_no)
                    records.append((int(parts[0]), int(parts[1]), int(parts[2]), bytes.fromhex(parts[3])))
        except OSError as e:
            raise CorruptTableError(path, e.strerror or str(e))
        except ValueError as e:
            raise CorruptTableError(path, str(e))
        return records
