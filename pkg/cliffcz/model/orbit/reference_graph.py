"""
    Published orbit connectivity diagram, transcribed as an edge list over orbit labels 1..20.
    Every edge stands for an intersection of 512 matrices.
"""

from cliffcz.util.claim import Claim

REFERENCE_NODE_COUNT = 20
IDENTITY_LABEL = 1
LAST_LAYER_LABEL = 20

_ADJACENCY = {
    1: [2, 3, 4, 5, 6, 7, 8, 9, 10],
    2: [7, 8, 9, 10, 11, 12, 13, 14],
    3: [4, 5, 7, 9, 14, 15, 16, 17],
    4: [6, 7, 10, 13, 15, 16, 18],
    5: [6, 8, 9, 12, 15, 17, 19],
    6: [8, 10, 11, 15, 18, 19],
    7: [8, 13, 14, 17, 18],
    8: [11, 12, 17, 18],
    9: [10, 12, 14, 16, 19],
    10: [11, 13, 16, 19],
    11: [12, 13, 18, 19],
    12: [14, 17, 19],
    13: [14, 16, 18],
    14: [16, 17],
    15: [16, 17, 18, 19],
    16: [19],
    17: [18],
    20: [11, 12, 13, 14, 15, 16, 17, 18, 19],
}

REFERENCE_EDGES = sorted((min(a, b), max(a, b)) for a, targets in _ADJACENCY.items() for b in targets)


def reference_graph():
    """
    >>> len(reference_graph().edges())
    90
    """
    from cliffcz.model.orbit.cz_graph import CzGraph
    return CzGraph.from_edges(REFERENCE_NODE_COUNT, REFERENCE_EDGES, weight=Claim.INTERSECTION_SIZE)
