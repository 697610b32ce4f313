import logging

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism

from cliffcz.model.matrix import gates
from cliffcz.util.claim import Claim
from cliffcz.util.config import BATCH_SIZE
from cliffcz.util.exception import VerificationError
from cliffcz.util.method import Entangler

logger = logging.getLogger(__name__)


class CzGraph:
    """
    Orbit connectivity graph. weight[i - 1][j - 1] counts the elements U of orbit i for which
    gate @ U lies in orbit j. Nodes are orbit ids starting at 1.

    :param numpy weight: Square matrix of intersection counts
    :param str gate_name: Entangler the weights were computed with
    """

    def __init__(self, weight, gate_name=Entangler.CZ):
        weight = np.array(weight, dtype=np.int64)
        if weight.ndim != 2 or weight.shape[0] != weight.shape[1]:
            raise ValueError('Expected a square weight matrix while {} is passed'.format(weight.shape))
        weight.flags.writeable = False
        self.weight = weight
        self.gate_name = gate_name

    @classmethod
    def from_edges(cls, n, edges, weight=Claim.INTERSECTION_SIZE):
        matrix = np.zeros((n, n), dtype=np.int64)
        for a, b in edges:
            matrix[a - 1, b - 1] = weight
            matrix[b - 1, a - 1] = weight
        return cls(matrix)

    @property
    def n(self):
        return len(self.weight)

    def nodes(self):
        return list(range(1, self.n + 1))

    def weight_of(self, i, j):
        return int(self.weight[i - 1, j - 1])

    def edges(self):
        """
        :return: list of (i, j, weight) with i < j and a non zero weight in either direction
        """
        linked = (self.weight > 0) | (self.weight.T > 0)
        rows, cols = np.nonzero(np.triu(linked, k=1))
        return [(int(i) + 1, int(j) + 1, int(self.weight[i, j])) for i, j in zip(rows, cols)]

    def neighbors(self, node):
        return [int(j) + 1 for j in np.flatnonzero(self.weight[node - 1] > 0)]

    def degree(self, node):
        return len(self.neighbors(node))

    def degrees(self):
        return [self.degree(node) for node in self.nodes()]

    def row_sums(self):
        return self.weight.sum(axis=1).tolist()

    def weight_values(self):
        return sorted(set(self.weight.reshape(-1).tolist()))

    def is_symmetric(self):
        return bool((self.weight == self.weight.T).all())

    def diagonal(self):
        return np.diag(self.weight).tolist()

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.nodes())
        g.add_weighted_edges_from(self.edges())
        return g

    def is_connected(self):
        return nx.is_connected(self.to_networkx())

    def bfs_distances(self, source=1):
        """
        :return: dict Node to hop distance from source, reachable nodes only
        """
        return dict(sorted(nx.single_source_shortest_path_length(self.to_networkx(), source).items()))

    def eccentricity(self, source=1):
        return max(self.bfs_distances(source).values())

    def relabel(self, mapping):
        """
        :param dict mapping: Old node to new node, a bijection over 1..n
        """
        order = np.zeros(self.n, dtype=np.int64)
        for old, new in mapping.items():
            order[new - 1] = old - 1
        return CzGraph(self.weight[np.ix_(order, order)], gate_name=self.gate_name)

    def __eq__(self, other):
        return isinstance(other, CzGraph) and np.array_equal(self.weight, other.weight)

    def __repr__(self):
        return 'CzGraph(gate={}, nodes={}, edges={})'.format(self.gate_name, self.n, len(self.edges()))


def build_graph(atlas, gate=gates.CZ, gate_name=Entangler.CZ, strict=True, batch_size=BATCH_SIZE):
    """
    Push every element of C2 through gate and count where it lands.

    :param OrbitAtlas atlas: Partition of the C2 table
    :param GateMatrix gate: Matrix multiplied from the left
    :param bool strict: Raise VerificationError unless the weights are symmetric and every non zero
        weight equals the published intersection size
    :return: CzGraph labelled like atlas
    """
    images = atlas.table.left_multiply(gate, batch_size)
    if (images < 0).any():
        raise VerificationError('{} maps {} elements outside {}'.format(
            gate_name, int((images < 0).sum()), atlas.table.name))

    n = atlas.orbit_count
    weight = np.zeros((n, n), dtype=np.int64)
    np.add.at(weight, (atlas.orbit_of - 1, atlas.orbit_of[images] - 1), 1)
    graph = CzGraph(weight, gate_name=gate_name)

    if strict:
        if not graph.is_symmetric():
            raise VerificationError('{} graph weights are not symmetric'.format(gate_name))
        unexpected = [w for w in graph.weight_values() if w not in (0, Claim.INTERSECTION_SIZE)]
        if unexpected:
            raise VerificationError('{} graph has intersection sizes {}'.format(gate_name, unexpected))

    logger.info('%s graph: %d nodes, %d edges', gate_name, graph.n, len(graph.edges()))
    return graph


class OrderedGraphMatcher(isomorphism.GraphMatcher):
    """
    GraphMatcher that tries candidate nodes in ascending order, so the first isomorphism found is
    deterministic and matching a graph with itself yields the identity.
    """

    def candidate_pairs_iter(self):
        pending_1 = sorted(node for node in self.inout_1 if node not in self.core_1)
        pending_2 = sorted(node for node in self.inout_2 if node not in self.core_2)
        if pending_1 and pending_2:
            for node_1 in pending_1:
                yield node_1, pending_2[0]
        else:
            node_2 = min(node for node in self.G2 if node not in self.core_2)
            for node_1 in sorted(self.G1):
                if node_1 not in self.core_1:
                    yield node_1, node_2


def default_anchors(graph, source=1):
    """
    Pin the source orbit to the reference identity orbit and, when it is unique, the farthest orbit
    to the reference last layer orbit.
    """
    from cliffcz.model.orbit.reference_graph import IDENTITY_LABEL, LAST_LAYER_LABEL

    anchors = {source: IDENTITY_LABEL}
    distances = graph.bfs_distances(source)
    farthest = [node for node, d in distances.items() if d == max(distances.values())]
    if len(farthest) == 1 and farthest[0] != source:
        anchors[farthest[0]] = LAST_LAYER_LABEL
    return anchors


def check_isomorphic(g, ref, anchors=None):
    """
    :param CzGraph g: Computed graph
    :param CzGraph ref: Reference graph
    :param dict anchors: Node of g to the node of ref it must map to
    :return: dict Node of g to node of ref, or None if no isomorphism respects the anchors

    >>> from cliffcz.model.orbit.reference_graph import reference_graph
    >>> check_isomorphic(reference_graph(), reference_graph())[2]
    2
    """
    anchors = anchors or {}
    g_nx = g.to_networkx()
    ref_nx = ref.to_networkx()
    nx.set_node_attributes(g_nx, {node: anchors.get(node) for node in g_nx}, 'anchor')
    pinned = set(anchors.values())
    nx.set_node_attributes(ref_nx, {node: node if node in pinned else None for node in ref_nx}, 'anchor')

    matcher = OrderedGraphMatcher(g_nx, ref_nx, node_match=lambda a, b: a['anchor'] == b['anchor'])
    if not matcher.is_isomorphic():
        return None
    return dict(sorted(matcher.mapping.items()))


def cnot_graph_equivalence(atlas, graph=None, entanglers=(Entangler.CNOT12, Entangler.CNOT21)):
    """
    :return: bool True if rebuilding the graph with each CNOT gives the CZ weights exactly
    """
    if graph is None:
        graph = build_graph(atlas)
    for name in entanglers:
        rebuilt = build_graph(atlas, gate=gates.ENTANGLERS[name], gate_name=name, strict=False)
        if rebuilt != graph:
            logger.info('%s graph differs from %s graph', name, graph.gate_name)
            return False
    return True
