import logging

import numpy as np
from tqdm import tqdm

from cliffcz.model.group.closure import split_local_word
from cliffcz.model.matrix import gates
from cliffcz.model.ring import cyclo_array
from cliffcz.synth.circuit import Circuit, Local
from cliffcz.util.config import BATCH_SIZE
from cliffcz.util.exception import NotCliffordError, VerificationError
from cliffcz.util.method import Entangler

logger = logging.getLogger(__name__)


class Synthesizer:
    """
    Minimal CZ count synthesis by layer descent. For every orbit o above the identity layer a
    witness X in LC2 is fixed such that CZ @ X @ rep(o) sits one layer lower. An element
    V @ rep(o) then factors as (V @ X^-1) @ CZ @ (CZ @ X @ rep(o)) and the right factor is
    synthesised the same way.

    :param GroupTable lc2: Local Clifford table
    :param OrbitAtlas atlas: Layered partition of the C2 table
    :param int verbose: Show progress if larger than 0

    >>> synthesizer = Synthesizer(lc2, atlas)
    >>> synthesizer.synthesize(gates.SWAP).cz_count
    3
    """

    def __init__(self, lc2, atlas, batch_size=BATCH_SIZE, verbose=0):
        if atlas.layers is None:
            raise ValueError('Synthesizer needs a layered atlas')
        self.lc2 = lc2
        self.atlas = atlas
        self.c2 = atlas.table
        self.batch_size = batch_size
        self.verbose = verbose

        self.witness = {}
        self.next_element = {}
        self.local_steps = {}
        self._tails = {}
        self._element_layers = atlas.element_layers()
        self._find_witnesses()

    def _find_witnesses(self):
        orbits = [o for o in self.atlas.orbit_ids() if self.atlas.layer(o) > 0]
        if self.verbose > 0:
            orbits = tqdm(orbits, desc='witnesses', leave=False)

        for orbit in orbits:
            rep = self.c2.data[self.atlas.representative(orbit)]
            moved = cyclo_array.batched_matmul(self.lc2.data, rep, self.batch_size)
            images = self.c2.lookup_batch(cyclo_array.batched_matmul(gates.CZ.data, moved, self.batch_size))
            if (images < 0).any():
                raise VerificationError('CZ . LC2 . rep leaves C2 for orbit {}'.format(orbit))

            lower = np.flatnonzero(self._element_layers[images] == self.atlas.layer(orbit) - 1)
            if not lower.size:
                raise VerificationError('Orbit {} has no neighbour one layer down'.format(orbit))
            x = int(lower[0])
            self.witness[orbit] = x
            self.next_element[orbit] = int(images[x])

            x_inv = cyclo_array.dagger(self.lc2.data[x])
            steps = self.lc2.lookup_batch(cyclo_array.batched_matmul(self.lc2.data, x_inv, self.batch_size))
            if (steps < 0).any():
                raise VerificationError('LC2 . X^-1 leaves LC2 for orbit {}'.format(orbit))
            self.local_steps[orbit] = steps
            logger.debug('orbit %d: witness %d, next element %d', orbit, x, images[x])

    def local_layer(self, lc2_id):
        a, b = split_local_word(self.lc2.word_of(lc2_id))
        return Local(a, b)

    def _tail(self, orbit):
        if orbit not in self._tails:
            self._tails[orbit] = self.circuit_of(self.next_element[orbit])
        return self._tails[orbit]

    def local_id(self, element_id):
        """
        :return: int LC2 id of the local factor in front of the first CZ
        """
        orbit = self.atlas.orbit_of_element(element_id)
        if self.atlas.layer(orbit) == 0:
            return self.lc2.index_of[self.c2.encoding(element_id)]
        return int(self.local_steps[orbit][self.atlas.coset_factor[element_id]])

    def circuit_of(self, element_id):
        orbit = self.atlas.orbit_of_element(element_id)
        circuit = Circuit([self.local_layer(self.local_id(element_id))])
        if self.atlas.layer(orbit) > 0:
            circuit.append(Entangler.CZ).extend(self._tail(orbit).ops)
        return circuit

    def synthesize(self, m):
        """
        :param GateMatrix m: 4x4 Clifford matrix
        :return: Circuit with the least possible number of CZ gates
        """
        element_id = self.c2.contains(m)
        if element_id is None:
            raise NotCliffordError('Matrix is not in {}'.format(self.c2.name))
        return self.circuit_of(element_id)

    def tail_orbit_costs(self):
        """
        :return: dict Orbit to (layer, CZ count of the circuit of its next element)
        """
        return {o: (self.atlas.layer(o), self._tail(o).cz_count) for o in self.witness}

    def verify_all(self):
        """
        Check every element's circuit exactly without building 92160 circuits: each circuit is the
        LC2 word of its local factor, a CZ and the cached circuit of its orbit. Tails are evaluated
        directly and every LC2 word is evaluated once.

        :return: int Number of elements whose circuit does not reproduce them
        """
        failures = 0
        word_matrices = np.stack([self.lc2.evaluate_word(w).data for w in self.lc2.words])
        word_ok = (word_matrices == self.lc2.data).reshape(len(self.lc2), -1).all(axis=1)

        orbits = self.atlas.orbit_ids()
        if self.verbose > 0:
            orbits = tqdm(orbits, desc='synthesis sweep', leave=False)
        for orbit in orbits:
            members = self.atlas.members(orbit)
            if self.atlas.layer(orbit) == 0:
                local_ids = self.lc2.lookup_batch(self.c2.data[members])
                ok = local_ids >= 0
                ok[ok] &= word_ok[local_ids[ok]]
                failures += int((~ok).sum())
                continue

            tail = self._tail(orbit)
            if tail.evaluate() != self.c2.element(self.next_element[orbit]):
                failures += len(members)
                continue
            right = (gates.CZ @ tail.evaluate()).data
            local_ids = self.local_steps[orbit][self.atlas.coset_factor[members]]
            rebuilt = cyclo_array.batched_matmul(self.lc2.data[local_ids], right, self.batch_size)
            ok = (rebuilt == self.c2.data[members]).reshape(len(members), -1).all(axis=1) & word_ok[local_ids]
            failures += int((~ok).sum())

        logger.info('synthesis sweep: %d of %d elements fail', failures, len(self.c2))
        return failures


def synthesize(m, synthesizer):
    return synthesizer.synthesize(m)


def cz_cost_histogram(atlas):
    """
    :return: dict CZ cost to number of C2 elements
    """
    counts = np.bincount(atlas.element_layers(), minlength=atlas.max_layer() + 1)
    return {layer: int(count) for layer, count in enumerate(counts)}
