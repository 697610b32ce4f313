"""
    Generator constants. Basis order is |q1 q2> with wire 1 as the most significant bit, so
    tensor(A, B) acts with A on wire 1 and B on wire 2.
"""

from cliffcz.model.matrix.gate_matrix import GateMatrix, tensor
from cliffcz.model.ring.cyclo_num import CycloNum, I_NUM, INV_SQRT2
from cliffcz.util.method import Entangler, Letter


def diagonal(entries):
    dim = len(entries)
    return GateMatrix.from_entries([[entries[r] if r == c else 0 for c in range(dim)] for r in range(dim)])


def permutation(perm):
    """
    :param list perm: perm[col] is the row holding the 1 of column col
    """
    dim = len(perm)
    return GateMatrix.from_entries([[1 if perm[c] == r else 0 for c in range(dim)] for r in range(dim)])


I2 = GateMatrix.identity(2)
I4 = GateMatrix.identity(4)

H = GateMatrix.from_entries([[INV_SQRT2, INV_SQRT2], [INV_SQRT2, -INV_SQRT2]])
P = diagonal([1, I_NUM])
OMEGA_I2 = diagonal([CycloNum(0, 1), CycloNum(0, 1)])

CZ = diagonal([1, 1, 1, -1])
CNOT12 = permutation([0, 1, 3, 2])
CNOT21 = permutation([0, 3, 2, 1])
SWAP = permutation([0, 2, 1, 3])

H1 = tensor(H, I2)
H2 = tensor(I2, H)
P1 = tensor(P, I2)
P2 = tensor(I2, P)

C1_GENERATORS = {Letter.H: H, Letter.P: P}
LOCAL_GENERATORS = {Letter.H1: H1, Letter.H2: H2, Letter.P1: P1, Letter.P2: P2}
C2_GENERATORS = dict(LOCAL_GENERATORS, **{Letter.CZ: CZ})

ENTANGLERS = {Entangler.CZ: CZ, Entangler.CNOT12: CNOT12, Entangler.CNOT21: CNOT21}

GENERATORS = dict(C1_GENERATORS, **C2_GENERATORS)
