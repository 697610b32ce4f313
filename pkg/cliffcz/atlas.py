"""
    Built or loaded Clifford tables together with the layered orbit atlas and the CZ graph.
"""

import logging
import os
from functools import lru_cache

from cliffcz.model.group.closure import build_c1, build_c2, build_lc2
from cliffcz.model.orbit.cz_graph import build_graph, check_isomorphic, default_anchors
from cliffcz.model.orbit.orbit_atlas import assign_layers_and_labels, orbit_of_matrix, partition, relabel_mapping
from cliffcz.model.orbit.reference_graph import reference_graph
from cliffcz.synth.synthesizer import Synthesizer
from cliffcz.util.action import TableName
from cliffcz.util.exception import CorruptTableError, WarningCode, WarningException, WarningMessage, WarningName
from cliffcz.util.file.table_file import TableFileUtil, table_path

logger = logging.getLogger(__name__)


class CliffordAtlas:
    """
    :param GroupTable c1: Single qubit Clifford table
    :param GroupTable lc2: Local two qubit Clifford table
    :param GroupTable c2: Two qubit Clifford table
    :param int verbose: Show progress bars if larger than 0

    >>> atlas = CliffordAtlas.load_or_build(get_atlas_dir())
    >>> atlas.lookup(gates.CNOT12)['layer']
    1
    """

    def __init__(self, c1, lc2, c2, verbose=0):
        self.c1 = c1
        self.lc2 = lc2
        self.c2 = c2
        self.verbose = verbose

        unlabelled = partition(c2, lc2, verbose=verbose)
        graph = build_graph(unlabelled)
        self.orbits = assign_layers_and_labels(unlabelled, graph)
        self.graph = graph.relabel(relabel_mapping(unlabelled, self.orbits))

        self._synthesizer = None
        self._figure_labels = None

    @property
    def tables(self):
        return {TableName.C1: self.c1, TableName.LC2: self.lc2, TableName.C2: self.c2}

    @classmethod
    def build(cls, verbose=0):
        c1 = build_c1(verbose=verbose)
        lc2 = build_lc2(c1, verbose=verbose)
        c2 = build_c2(verbose=verbose)
        return cls(c1, lc2, c2, verbose=verbose)

    @classmethod
    @lru_cache(maxsize=1)
    def shared(cls):
        """
        Process wide instance, built once.
        """
        return cls.build()

    @classmethod
    def load(cls, directory, verbose=0):
        tables = [TableFileUtil.read(table_path(directory, name)) for name in TableName.getall()]
        for name, table in zip(TableName.getall(), tables):
            if table.name != name:
                raise CorruptTableError(table_path(directory, name), 'table is named {}'.format(table.name), 1)
        return cls(*tables, verbose=verbose)

    @staticmethod
    def tables_exist(directory):
        return all(os.path.isfile(table_path(directory, name)) for name in TableName.getall())

    @classmethod
    def load_or_build(cls, directory, regen=True, verbose=0):
        """
        :param str directory: Table directory
        :param bool regen: Build (and try to save) the tables when they are missing
        """
        if cls.tables_exist(directory):
            return cls.load(directory, verbose=verbose)
        if not regen:
            missing = [table_path(directory, n) for n in TableName.getall()
                       if not os.path.isfile(table_path(directory, n))]
            raise CorruptTableError(missing[0], 'table file is missing')

        WarningException(name=WarningName.TABLE_VALIDATION_WARNING, code=WarningCode.WARNING_CODE_001,
                         msg=WarningMessage.TABLES_MISSING.format(directory)).output()
        atlas = cls.build(verbose=verbose)
        try:
            atlas.save(directory)
        except OSError as e:
            WarningException(name=WarningName.STORAGE_WARNING, code=WarningCode.WARNING_CODE_003,
                             msg=WarningMessage.NOT_WRITABLE.format(directory, e.strerror or e)).output()
        return atlas

    def save(self, directory):
        """
        :return: list Written file paths
        """
        os.makedirs(directory, exist_ok=True)
        paths = [TableFileUtil.write(table, table_path(directory, name)) for name, table in self.tables.items()]
        logger.info('tables written to %s', directory)
        return paths

    @property
    def synthesizer(self):
        if self._synthesizer is None:
            self._synthesizer = Synthesizer(self.lc2, self.orbits, verbose=self.verbose)
        return self._synthesizer

    def figure_labels(self):
        """
        :return: dict Orbit id to reference figure label, or None when the graph does not match
        """
        if self._figure_labels is None:
            self._figure_labels = check_isomorphic(self.graph, reference_graph(), default_anchors(
                self.graph, self.orbits.identity_orbit())) or {}
        return self._figure_labels or None

    def synthesize(self, m):
        return self.synthesizer.synthesize(m)

    def lookup(self, m):
        """
        :param GateMatrix m: 4x4 matrix
        :return: dict element id, orbit, figure label and layer
        :raises NotCliffordError: If m is not in C2
        """
        orbit = orbit_of_matrix(self.orbits, m)
        labels = self.figure_labels() or {}
        return {
            'element_id': self.c2.contains(m),
            'orbit': orbit,
            'paper_label': labels.get(orbit),
            'layer': self.orbits.layer(orbit),
        }
