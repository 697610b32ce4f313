"""
    Two qubit circuits made of local layers and entangling gates, read as a left to right matrix
    product. Time order is the reverse.
"""

import re
from collections import namedtuple
from functools import lru_cache

from cliffcz.model.matrix import gates
from cliffcz.model.matrix.gate_matrix import GateMatrix
from cliffcz.util.exception import WordError
from cliffcz.util.method import Entangler, Letter

EMPTY_WORD = '-'
HEADER_REGEX = re.compile(r'^(CZ|CNOT)-COUNT (\d+)$')
LOCAL_REGEX = re.compile(r'^LOCAL a=(\S+) b=(\S+)$')


class Local(namedtuple('Local', ['a', 'b'])):
    """
    Local layer tensor(A, B) where a and b are words over {H, P} for wire 1 and wire 2.
    """

    def is_empty(self):
        return not self.a and not self.b

    def reversed(self):
        return Local(self.a[::-1], self.b[::-1])

    def to_text(self):
        return 'LOCAL a={} b={}'.format(format_word(self.a), format_word(self.b))


def format_word(word):
    return ''.join(word) if word else EMPTY_WORD


def parse_word(text):
    if text == EMPTY_WORD:
        return ()
    for letter in text:
        if letter not in Letter.single_qubit():
            raise WordError('Letter {} is not one of {}'.format(letter, Letter.single_qubit()))
    return tuple(text)


@lru_cache(maxsize=None)
def single_qubit_matrix(word):
    result = gates.I2
    for letter in word:
        if letter not in gates.C1_GENERATORS:
            raise WordError('Letter {} is not one of {}'.format(letter, Letter.single_qubit()))
        result = result @ gates.C1_GENERATORS[letter]
    return result


@lru_cache(maxsize=None)
def local_matrix(a, b):
    return single_qubit_matrix(tuple(a)).tensor(single_qubit_matrix(tuple(b)))


class Circuit:
    """
    :param list ops: Local layers and entangler names (Entangler.CZ, Entangler.CNOT12, Entangler.CNOT21).
        Adjacent local layers are merged and empty ones dropped.

    >>> circuit = Circuit([Local(('H',), ()), Entangler.CZ, Local(('H',), ())])
    >>> circuit.evaluate() == gates.CNOT21
    True
    """

    def __init__(self, ops=None):
        self._ops = []
        for op in ops or []:
            self.append(op)

    def append(self, op):
        if isinstance(op, Local):
            op = Local(tuple(op.a), tuple(op.b))
            if self._ops and isinstance(self._ops[-1], Local):
                last = self._ops.pop()
                op = Local(last.a + op.a, last.b + op.b)
            if not op.is_empty():
                self._ops.append(op)
        elif op in Entangler.getall():
            self._ops.append(op)
        else:
            raise WordError('Unknown circuit item {}'.format(op))
        return self

    def extend(self, ops):
        for op in ops:
            self.append(op)
        return self

    @property
    def ops(self):
        return list(self._ops)

    @property
    def entangler_count(self):
        return sum(1 for op in self._ops if not isinstance(op, Local))

    @property
    def cz_count(self):
        return sum(1 for op in self._ops if op == Entangler.CZ)

    def header_label(self):
        names = {op for op in self._ops if not isinstance(op, Local)}
        return 'CZ' if names <= {Entangler.CZ} else 'CNOT'

    def evaluate(self):
        return evaluate(self)

    def with_entangler(self, name):
        """
        Rewrite every CZ through a CNOT conjugated by Hadamards on the target wire.

        :param str name: One of Entangler.getall()
        """
        if name == Entangler.CZ:
            return Circuit(self._ops)
        if name == Entangler.CNOT12:
            patch = [Local((), (Letter.H,)), Entangler.CNOT12, Local((), (Letter.H,))]
        elif name == Entangler.CNOT21:
            patch = [Local((Letter.H,), ()), Entangler.CNOT21, Local((Letter.H,), ())]
        else:
            raise ValueError('Entangler must be one of {} while {} is passed'.format(Entangler.getall(), name))

        rewritten = Circuit()
        for op in self._ops:
            rewritten.extend(patch if op == Entangler.CZ else [op])
        return rewritten

    def to_text(self, time_order=False):
        ops = self._ops[::-1] if time_order else self._ops
        lines = ['{}-COUNT {}'.format(self.header_label(), self.entangler_count)]
        for op in ops:
            if isinstance(op, Local):
                lines.append((op.reversed() if time_order else op).to_text())
            else:
                lines.append(op)
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_text(cls, text, time_order=False):
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines:
            raise WordError('Circuit text is empty')
        header = HEADER_REGEX.match(lines[0])
        if header is None:
            raise WordError('Circuit header must look like "CZ-COUNT d" while "{}" is passed'.format(lines[0]))

        ops = []
        for line in lines[1:]:
            local = LOCAL_REGEX.match(line)
            if local is not None:
                op = Local(parse_word(local.group(1)), parse_word(local.group(2)))
                ops.append(op.reversed() if time_order else op)
            elif line in Entangler.getall():
                ops.append(line)
            else:
                raise WordError('Cannot parse circuit line "{}"'.format(line))

        circuit = cls(ops[::-1] if time_order else ops)
        if circuit.entangler_count != int(header.group(2)):
            raise WordError('Header announces {} entanglers while the circuit has {}'.format(
                header.group(2), circuit.entangler_count))
        return circuit

    def __len__(self):
        return len(self._ops)

    def __eq__(self, other):
        return isinstance(other, Circuit) and self._ops == other._ops

    def __repr__(self):
        return 'Circuit({})'.format(self._ops)


def evaluate(circuit):
    """
    :param Circuit circuit: Circuit to multiply out
    :return: GateMatrix Exact product of the items from left to right
    """
    result = GateMatrix.identity(4)
    for op in circuit.ops:
        if isinstance(op, Local):
            result = result @ local_matrix(op.a, op.b)
        else:
            result = result @ gates.ENTANGLERS[op]
    return result
