"""
    The full acceptance suite run by `cliffcz verify`. Every sampled check draws from its own
    RandomState(SAMPLE_SEED), so results do not depend on check order.
"""

import operator

import numpy as np

from cliffcz.flow.check import Check
from cliffcz.flow.pipeline import Pipeline
from cliffcz.model.group.closure import build_c1, build_lc2
from cliffcz.model.matrix import gates
from cliffcz.model.orbit.cz_graph import build_graph, cnot_graph_equivalence
from cliffcz.model.ring import cyclo_array
from cliffcz.model.ring.cyclo_num import CycloNum, SQRT2
from cliffcz.synth.synthesizer import cz_cost_histogram
from cliffcz.util.claim import Claim
from cliffcz.util.config import SAMPLE_SEED, SAMPLE_SIZE
from cliffcz.util.file.graph_export import GraphExportUtil
from cliffcz.util.file.orbit_file import OrbitFileUtil
from cliffcz.util.file.table_file import TableFileUtil
from cliffcz.util.math.numeric import UNITARITY_TOLERANCE, max_unitarity_error
from cliffcz.util.method import Entangler

FOUND = 'found'
ABSENT = 'absent'
RING_RANGE = 50


def _rng():
    return np.random.RandomState(SAMPLE_SEED)


def _sample(table, rng, size=SAMPLE_SIZE):
    return rng.randint(len(table), size=size)


def dedup_ratio(atlas):
    total = len(atlas.c1) ** 2
    return total // len(atlas.lc2) if total % len(atlas.lc2) == 0 else total / len(atlas.lc2)


def unitarity_failures(atlas):
    return sum(table.unitary_failures() for table in atlas.tables.values())


def numeric_unitarity(atlas):
    return max(max_unitarity_error(table.data) for table in atlas.tables.values())


def word_failures(table, ids):
    return sum(1 for i in ids if table.evaluate_word(table.word_of(i)) != table.element(i))


def group_axiom_failures(atlas):
    c2 = atlas.c2
    rng = _rng()
    x = _sample(c2, rng)
    y = _sample(c2, rng)
    products = c2.lookup_batch(cyclo_array.matmul(c2.data[x], c2.data[y]))
    inverses = c2.lookup_batch(cyclo_array.dagger(c2.data[x]))
    return int(((products < 0) | (inverses < 0)).sum())


def lc2_missing_from_c2(atlas):
    return int((atlas.c2.lookup_batch(atlas.lc2.data) < 0).sum())


def identity_orbit_is_lc2(atlas):
    members = atlas.orbits.members(atlas.orbits.identity_orbit())
    lc2_ids = np.sort(atlas.c2.lookup_batch(atlas.lc2.data))
    return atlas.orbits.identity_orbit() == 1 and np.array_equal(members, lc2_ids)


def coset_failures(atlas):
    c2, orbits = atlas.c2, atlas.orbits
    rng = _rng()
    v = _sample(atlas.lc2, rng)
    u = _sample(c2, rng)
    moved = c2.lookup_batch(cyclo_array.matmul(atlas.lc2.data[v], c2.data[u]))
    return int(((moved < 0) | (orbits.orbit_of[np.maximum(moved, 0)] != orbits.orbit_of[u])).sum())


def well_defined_failures(atlas):
    c2, orbits = atlas.c2, atlas.orbits
    rng = _rng()
    first = _sample(c2, rng)
    second = np.array([rng.choice(orbits.members(orbits.orbit_of_element(i))) for i in first])
    quotients = cyclo_array.matmul(c2.data[first], cyclo_array.dagger(c2.data[second]))
    return int((atlas.lc2.lookup_batch(quotients) < 0).sum())


def representatives_minimal(atlas):
    orbits = atlas.orbits
    return all(orbits.representative(o) == orbits.members(o).min() for o in orbits.orbit_ids())


def layers_consistent(atlas):
    orbits, graph = atlas.orbits, atlas.graph
    for orbit in orbits.orbit_ids():
        if orbits.layer(orbit) == 0:
            if orbit != orbits.identity_orbit():
                return False
        elif orbits.layer(orbit) != 1 + min(orbits.layer(n) for n in graph.neighbors(orbit)):
            return False
    return orbits.layer(orbits.orbit_of_element(atlas.c2.contains(gates.CZ))) == 1


def figure_isomorphism(atlas):
    return FOUND if atlas.figure_labels() is not None else ABSENT


def local_gate_self_weights(atlas):
    return build_graph(atlas.orbits, gate=gates.H1, gate_name='h1', strict=False).weight_of(1, 1)


def synthesis_minimal(atlas):
    return all(cost == layer - 1 for layer, cost in atlas.synthesizer.tail_orbit_costs().values())


def synthesis_sample_failures(atlas):
    c2 = atlas.c2
    ids = _sample(c2, _rng())
    failures = 0
    for i in ids:
        circuit = atlas.synthesizer.circuit_of(int(i))
        if circuit.evaluate() != c2.element(int(i)) or circuit.cz_count != atlas.orbits.layer_of_element(int(i)):
            failures += 1
    return failures


def ring_failures(size=SAMPLE_SIZE):
    """
    Commutativity, associativity, distributivity, conjugation and reduction uniqueness on random
    reduced numbers.
    """
    rng = _rng()
    failures = 0
    for _ in range(size):
        x, y, z = [CycloNum(*rng.randint(-RING_RANGE, RING_RANGE + 1, size=4), k=rng.randint(0, 4))
                   for _ in range(3)]
        checks = [
            x + y == y + x,
            x * y == y * x,
            (x + y) + z == x + (y + z),
            (x * y) * z == x * (y * z),
            x * (y + z) == x * y + x * z,
            (x * y).conj() == x.conj() * y.conj(),
            CycloNum.reduce(*x.coef) == x,
            CycloNum(*(x * SQRT2).coef[:4], k=(x * SQRT2).k + 1) == x,
        ]
        failures += not all(checks)
    return failures


def table_round_trips(atlas):
    matching = 0
    for table in atlas.tables.values():
        loaded = TableFileUtil.parse(TableFileUtil.to_text(table).splitlines())
        if loaded.name == table.name and loaded.words == table.words and np.array_equal(loaded.data, table.data):
            matching += 1
    return matching


def artifact_texts(atlas):
    """
    :return: dict Output name to the exact text written for it
    """
    texts = {'{}.tbl'.format(name): TableFileUtil.to_text(table) for name, table in atlas.tables.items()}
    texts['orbits.map'] = OrbitFileUtil.map_text(atlas.orbits)
    texts['orbits.summary'] = OrbitFileUtil.summary_text(atlas.orbits)
    texts['graph.dot'] = GraphExportUtil.to_dot(atlas.graph, atlas.orbits)
    texts['graph.json'] = GraphExportUtil.to_json(atlas.graph, atlas.orbits, atlas.figure_labels())
    return texts


def rebuild_differences(atlas):
    """
    Rebuild C1 and LC2 from the generators, partition C2 again and list the outputs whose text
    differs from the ones of atlas.
    """
    c1 = build_c1()
    fresh = type(atlas)(c1, build_lc2(c1), atlas.c2)
    expected = artifact_texts(atlas)
    return [name for name, text in artifact_texts(fresh).items() if text != expected[name]]


def trace_covers(atlas):
    trace = atlas.orbits.discovery_trace(atlas.graph)
    reached = {atlas.orbits.identity_orbit()}
    for _, _, fresh in trace:
        reached.update(fresh)
    return reached == set(atlas.orbits.orbit_ids())


def acceptance_checks():
    return [
        Check('c1-order', Claim.C1_ORDER, lambda a: len(a.c1)),
        Check('lc2-order', Claim.LC2_ORDER, lambda a: len(a.lc2)),
        Check('c2-order', Claim.C2_ORDER, lambda a: len(a.c2)),
        Check('lc2-dedup-ratio', Claim.PHASE_ORDER, dedup_ratio),
        Check('c1-phase-subgroup', Claim.PHASE_ORDER, lambda a: len(a.c1.scalar_ids())),
        Check('exact-unitarity-failures', 0, unitarity_failures),
        Check('numeric-unitarity-max-error', '<{}'.format(UNITARITY_TOLERANCE), numeric_unitarity,
              compare=lambda observed, _: observed < UNITARITY_TOLERANCE),
        Check('tables-closed', True, lambda a: all(t.is_closed() for t in a.tables.values())),
        Check('c1-word-round-trip-failures', 0, lambda a: word_failures(a.c1, range(len(a.c1)))),
        Check('lc2-word-round-trip-failures', 0, lambda a: word_failures(a.lc2, _sample(a.lc2, _rng()))),
        Check('c2-word-round-trip-failures', 0, lambda a: word_failures(a.c2, _sample(a.c2, _rng()))),
        Check('group-axiom-failures', 0, group_axiom_failures),
        Check('lc2-missing-from-c2', 0, lc2_missing_from_c2),
        Check('c2-contains-cz', True, lambda a: a.c2.contains(gates.CZ) is not None),
        Check('lc2-excludes-cz', True, lambda a: a.lc2.contains(gates.CZ) is None),
        Check('orbit-count', Claim.ORBIT_COUNT, lambda a: a.orbits.orbit_count),
        Check('orbit-sizes', [Claim.ORBIT_SIZE], lambda a: sorted(set(a.orbits.sizes()))),
        Check('orbit-total', Claim.C2_ORDER, lambda a: int((a.orbits.orbit_of > 0).sum())),
        Check('identity-orbit-is-lc2', True, identity_orbit_is_lc2),
        Check('coset-property-failures', 0, coset_failures),
        Check('coset-well-defined-failures', 0, well_defined_failures),
        Check('representatives-minimal', True, representatives_minimal),
        Check('graph-weights', [0, Claim.INTERSECTION_SIZE], lambda a: a.graph.weight_values()),
        Check('graph-diagonal-max', 0, lambda a: max(a.graph.diagonal())),
        Check('graph-degrees', [Claim.ORBIT_DEGREE], lambda a: sorted(set(a.graph.degrees()))),
        Check('graph-edge-count', Claim.EDGE_COUNT, lambda a: len(a.graph.edges())),
        Check('graph-row-sums', [Claim.ORBIT_SIZE], lambda a: sorted(set(a.graph.row_sums()))),
        Check('graph-symmetric', True, lambda a: a.graph.is_symmetric()),
        Check('graph-connected', True, lambda a: a.graph.is_connected()),
        Check('graph-eccentricity', Claim.MAX_CZ, lambda a: a.graph.eccentricity(a.orbits.identity_orbit())),
        Check('layer-profile', Claim.LAYER_PROFILE, lambda a: a.orbits.layer_profile()),
        Check('layer-elements', Claim.LAYER_ELEMENTS, lambda a: a.orbits.layer_elements()),
        Check('layers-consistent', True, layers_consistent),
        Check('discovery-trace-covers', True, trace_covers),
        Check('figure-isomorphism', FOUND, figure_isomorphism),
        Check('cnot12-equivalence', True,
              lambda a: cnot_graph_equivalence(a.orbits, a.graph, entanglers=(Entangler.CNOT12,))),
        Check('cnot21-equivalence', True,
              lambda a: cnot_graph_equivalence(a.orbits, a.graph, entanglers=(Entangler.CNOT21,))),
        Check('local-gate-self-weight', Claim.ORBIT_SIZE, local_gate_self_weights),
        Check('synthesis-exact-failures', 0, lambda a: a.synthesizer.verify_all()),
        Check('synthesis-minimal', True, synthesis_minimal),
        Check('synthesis-max-cz', Claim.MAX_CZ, lambda a: a.orbits.max_layer(), compare=operator.le),
        Check('synthesis-sample-failures', 0, synthesis_sample_failures),
        Check('swap-cz-count', Claim.MAX_CZ, lambda a: a.synthesize(gates.SWAP).cz_count),
        Check('cz-cost-histogram', dict(enumerate(Claim.LAYER_ELEMENTS)), lambda a: cz_cost_histogram(a.orbits)),
        Check('ring-axiom-failures', 0, lambda a: ring_failures()),
        Check('table-round-trips', 3, table_round_trips),
        Check('rebuild-differences', [], rebuild_differences),
        Check('c1-word-lengths', None, lambda a: a.c1.word_length_histogram(), informational=True),
        Check('c2-word-lengths', None, lambda a: a.c2.word_length_histogram(), informational=True),
    ]


class AcceptanceSuite(Pipeline):
    """
    >>> report = AcceptanceSuite().run(CliffordAtlas.shared())
    >>> report.overall
    True
    """

    def __init__(self, name='Acceptance_Suite', verbose=0):
        Pipeline.__init__(self, checks=acceptance_checks(), name=name, verbose=verbose)
