class Claim:
    """
    Published figures every build is checked against.
    """
    C1_ORDER = 192
    LC2_ORDER = 4608
    C2_ORDER = 92160
    PHASE_ORDER = 8
    ORBIT_COUNT = 20
    ORBIT_SIZE = 4608
    INTERSECTION_SIZE = 512
    ORBIT_DEGREE = 9
    EDGE_COUNT = 90
    LAYER_PROFILE = [1, 9, 9, 1]
    LAYER_ELEMENTS = [4608, 41472, 41472, 4608]
    MAX_CZ = 3
