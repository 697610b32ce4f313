import logging

import numpy as np
from tqdm import tqdm

from cliffcz.model.ring import cyclo_array
from cliffcz.util.claim import Claim
from cliffcz.util.config import BATCH_SIZE
from cliffcz.util.exception import NotCliffordError, VerificationError

logger = logging.getLogger(__name__)


class OrbitAtlas:
    """
    Partition of C2 into left cosets LC2 . U. Orbits are numbered from 1.

    :param GroupTable table: The C2 table the atlas partitions
    :param numpy orbit_of: Orbit id of every element id
    :param numpy coset_factor: LC2 id V of every element, with element = V @ representative
    :param list representatives: Element id of the canonical representative of orbit 1, 2, ...
    :param list layers: CZ distance of orbit 1, 2, ... from the identity orbit. None before layering.
    """

    def __init__(self, table, orbit_of, coset_factor, representatives, layers=None):
        self.table = table
        self.orbit_of = np.asarray(orbit_of, dtype=np.int64)
        self.coset_factor = np.asarray(coset_factor, dtype=np.int64)
        self.representatives = [int(r) for r in representatives]
        self.layers = None if layers is None else [int(l) for l in layers]
        self.orbit_of.flags.writeable = False
        self.coset_factor.flags.writeable = False

    @property
    def orbit_count(self):
        return len(self.representatives)

    def orbit_ids(self):
        return list(range(1, self.orbit_count + 1))

    def _check_orbit(self, orbit):
        if not 1 <= orbit <= self.orbit_count:
            raise IndexError('Orbit id must be between 1 and {} while {} is passed'.format(self.orbit_count, orbit))

    def members(self, orbit):
        self._check_orbit(orbit)
        return np.flatnonzero(self.orbit_of == orbit)

    def size(self, orbit):
        return len(self.members(orbit))

    def sizes(self):
        return np.bincount(self.orbit_of, minlength=self.orbit_count + 1)[1:].tolist()

    def representative(self, orbit):
        self._check_orbit(orbit)
        return self.representatives[orbit - 1]

    def representative_encoding(self, orbit):
        return self.table.encoding(self.representative(orbit))

    def orbit_of_element(self, element_id):
        return int(self.orbit_of[element_id])

    def identity_orbit(self):
        return self.orbit_of_element(self.table.identity_id())

    def layer(self, orbit):
        if self.layers is None:
            raise ValueError('Layers are not assigned yet. Call assign_layers_and_labels first')
        self._check_orbit(orbit)
        return self.layers[orbit - 1]

    def layer_of_element(self, element_id):
        return self.layer(self.orbit_of_element(element_id))

    def orbits_at(self, layer):
        return [o for o in self.orbit_ids() if self.layer(o) == layer]

    def max_layer(self):
        return max(self.layers)

    def layer_profile(self):
        """
        :return: list Number of orbits at layer 0, 1, ...
        """
        return [len(self.orbits_at(d)) for d in range(self.max_layer() + 1)]

    def layer_elements(self):
        sizes = self.sizes()
        return [sum(sizes[o - 1] for o in self.orbits_at(d)) for d in range(self.max_layer() + 1)]

    def element_layers(self):
        """
        :return: numpy Layer of every element id
        """
        return np.asarray([0] + self.layers, dtype=np.int64)[self.orbit_of]

    def discovery_trace(self, graph):
        """
        Walk the layers from the identity orbit. For every orbit, in label order, list the orbits of
        the next layer that are reached from it for the first time.

        :param CzGraph graph: Graph labelled like this atlas
        :return: list of (layer, orbit, newly reached orbits)
        """
        reached = {self.identity_orbit()}
        trace = []
        for layer in range(self.max_layer() + 1):
            for orbit in self.orbits_at(layer):
                fresh = [o for o in graph.neighbors(orbit) if o not in reached and self.layer(o) == layer + 1]
                reached.update(fresh)
                trace.append((layer, orbit, fresh))
        return trace

    def __repr__(self):
        return 'OrbitAtlas(orbits={}, elements={})'.format(self.orbit_count, len(self.orbit_of))


def partition(c2, lc2, expected_count=Claim.ORBIT_COUNT, batch_size=BATCH_SIZE, verbose=0):
    """
    Split c2 into the left cosets of lc2. Orbits are numbered in the order their smallest element
    appears, and that element is the representative.

    :param GroupTable c2: Full group
    :param GroupTable lc2: Subgroup acting from the left
    :param int expected_count: Orbit count to enforce. None skips the check.
    :return: OrbitAtlas without layers
    """
    n = len(c2)
    orbit_of = np.zeros(n, dtype=np.int64)
    coset_factor = np.full(n, -1, dtype=np.int64)
    representatives = []
    progress = tqdm(total=n, desc='orbits', leave=False) if verbose > 0 else None

    unassigned = np.flatnonzero(orbit_of == 0)
    while unassigned.size:
        seed = int(unassigned[0])
        ids = c2.lookup_batch(cyclo_array.batched_matmul(lc2.data, c2.data[seed], batch_size))
        if (ids < 0).any():
            raise VerificationError('LC2 . U leaves C2 for element {}'.format(seed))
        if len(np.unique(ids)) != len(lc2):
            raise VerificationError('Orbit of element {} has {} elements instead of {}'.format(
                seed, len(np.unique(ids)), len(lc2)))
        if orbit_of[ids].any():
            raise VerificationError('Orbit of element {} overlaps an earlier orbit'.format(seed))

        orbit_of[ids] = len(representatives) + 1
        coset_factor[ids] = np.arange(len(lc2))
        representatives.append(seed)
        logger.debug('orbit %d: representative %d', len(representatives), seed)
        if progress is not None:
            progress.update(len(ids))
        unassigned = np.flatnonzero(orbit_of == 0)

    if progress is not None:
        progress.close()
    if expected_count is not None and len(representatives) != expected_count:
        raise VerificationError('Found {} orbits instead of {}'.format(len(representatives), expected_count))

    logger.info('partition: %d orbits of %d elements', len(representatives), len(lc2))
    return OrbitAtlas(c2, orbit_of, coset_factor, representatives)


def assign_layers_and_labels(atlas, graph):
    """
    Layer every orbit by its graph distance from the identity orbit and renumber orbits layer by
    layer, ascending by representative inside a layer.

    :param OrbitAtlas atlas: Partition from partition()
    :param CzGraph graph: Graph labelled like atlas
    :return: OrbitAtlas with new labels and layers. Relabel the graph with relabel_mapping().
    """
    distances = graph.bfs_distances(atlas.identity_orbit())
    if len(distances) != atlas.orbit_count:
        raise VerificationError('CZ graph is disconnected: {} of {} orbits reachable'.format(
            len(distances), atlas.orbit_count))

    order = sorted(atlas.orbit_ids(), key=lambda o: (distances[o], atlas.representative(o)))
    new_label = {old: new for new, old in enumerate(order, start=1)}

    lookup = np.zeros(atlas.orbit_count + 1, dtype=np.int64)
    for old, new in new_label.items():
        lookup[old] = new

    layered = OrbitAtlas(
        atlas.table, lookup[atlas.orbit_of], atlas.coset_factor,
        [atlas.representative(o) for o in order], [distances[o] for o in order])
    logger.info('layers: profile %s', layered.layer_profile())
    return layered


def relabel_mapping(old, new):
    """
    :return: dict Orbit id in old to orbit id in new, matched through representatives
    """
    return {o: new.orbit_of_element(old.representative(o)) for o in old.orbit_ids()}


def orbit_of_matrix(atlas, m):
    """
    :param GateMatrix m: 4x4 matrix
    :return: int Orbit id of m
    """
    element_id = atlas.table.contains(m)
    if element_id is None:
        raise NotCliffordError('Matrix is not in {}'.format(atlas.table.name))
    return atlas.orbit_of_element(element_id)
