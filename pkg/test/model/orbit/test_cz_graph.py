import unittest

import numpy as np

from cliffcz import CliffordAtlas
from cliffcz.model.matrix import gates
from cliffcz.model.orbit import (CzGraph, REFERENCE_EDGES, build_graph, check_isomorphic, cnot_graph_equivalence,
                                 default_anchors, reference_graph)
from cliffcz.util.exception import VerificationError
from cliffcz.util.method import Entangler


class TestReferenceGraph(unittest.TestCase):
    def test_shape(self):
        ref = reference_graph()
        self.assertEqual(20, ref.n)
        self.assertEqual(90, len(ref.edges()))
        self.assertEqual(90, len(set(REFERENCE_EDGES)))
        self.assertEqual([9] * 20, ref.degrees())
        self.assertTrue(ref.is_symmetric())

    def test_layers(self):
        distances = reference_graph().bfs_distances(1)
        self.assertEqual([0] + [1] * 9 + [2] * 9 + [3], list(distances.values()))
        self.assertEqual({1: 1, 20: 20}, default_anchors(reference_graph()))

    def test_self_isomorphism_is_identity(self):
        ref = reference_graph()
        self.assertEqual({i: i for i in range(1, 21)}, check_isomorphic(ref, ref))
        self.assertEqual({i: i for i in range(1, 21)}, check_isomorphic(ref, ref, default_anchors(ref)))

    def test_broken_degree_has_no_isomorphism(self):
        edges = [e for e in REFERENCE_EDGES if e != (1, 2)] + [(1, 11)]
        broken = CzGraph.from_edges(20, edges)
        self.assertIsNone(check_isomorphic(broken, reference_graph()))

    def test_anchors_must_keep_adjacency(self):
        ref = reference_graph()
        self.assertIsNone(check_isomorphic(ref, ref, {1: 1, 2: 11}))

    def test_relabel(self):
        graph = CzGraph.from_edges(3, [(1, 2)], weight=5)
        relabelled = graph.relabel({1: 3, 2: 1, 3: 2})
        self.assertEqual([(1, 3, 5)], relabelled.edges())
        self.assertEqual(0, relabelled.weight_of(1, 2))


class TestCzGraph(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.atlas = CliffordAtlas.shared()
        cls.graph = cls.atlas.graph

    def test_weights(self):
        self.assertEqual([0, 512], self.graph.weight_values())
        self.assertEqual([0] * 20, self.graph.diagonal())
        self.assertTrue(self.graph.is_symmetric())

    def test_degrees_and_edges(self):
        self.assertEqual([9] * 20, self.graph.degrees())
        self.assertEqual(90, len(self.graph.edges()))
        self.assertEqual([4608] * 20, self.graph.row_sums())
        self.assertEqual(list(range(2, 11)), self.graph.neighbors(1))

    def test_connectivity(self):
        self.assertTrue(self.graph.is_connected())
        self.assertEqual(3, self.graph.eccentricity(1))

    def test_rebuild_is_deterministic(self):
        self.assertEqual(self.graph, build_graph(self.atlas.orbits))

    def test_isomorphic_to_reference(self):
        mapping = check_isomorphic(self.graph, reference_graph(), default_anchors(self.graph))
        self.assertIsNotNone(mapping)
        self.assertEqual(1, mapping[1])
        self.assertEqual(20, mapping[20])
        self.assertEqual(list(range(1, 21)), sorted(mapping.values()))
        ref = reference_graph()
        for a, b, _ in self.graph.edges():
            self.assertGreater(ref.weight_of(mapping[a], mapping[b]), 0)
        self.assertEqual(mapping, self.atlas.figure_labels())

    def test_cnot_equivalence(self):
        self.assertTrue(cnot_graph_equivalence(self.atlas.orbits, self.graph, entanglers=(Entangler.CNOT12,)))
        self.assertTrue(cnot_graph_equivalence(self.atlas.orbits, self.graph, entanglers=(Entangler.CNOT21,)))

    def test_local_gate_graph(self):
        local_graph = build_graph(self.atlas.orbits, gate=gates.H1, gate_name='h1', strict=False)
        self.assertEqual([4608] * 20, local_graph.diagonal())
        with self.assertRaises(VerificationError):
            build_graph(self.atlas.orbits, gate=gates.H1, gate_name='h1')

    def test_networkx_view(self):
        g = self.graph.to_networkx()
        self.assertEqual(20, g.number_of_nodes())
        self.assertEqual(90, g.number_of_edges())
        self.assertTrue(all(d['weight'] == 512 for _, _, d in g.edges(data=True)))
        self.assertTrue(np.array_equal(self.graph.weight, self.graph.weight.T))
