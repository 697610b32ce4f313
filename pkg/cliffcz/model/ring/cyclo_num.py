from __future__ import annotations

import cmath
import math
import re
from functools import total_ordering

import numpy as np

from cliffcz.model.ring.cyclo_array import COEFF_LIMIT
from cliffcz.util.exception import MatrixFormatError, RingOverflowError

OMEGA = cmath.exp(1j * math.pi / 4)
TEXT_REGEX = re.compile(r'^\s*([+-]?\d+),([+-]?\d+),([+-]?\d+),([+-]?\d+)/(\d+)\s*$')


@total_ordering
class CycloNum:
    """
    Exact number (a + b w + c w^2 + d w^3) / sqrt(2)^k in Z[w, 1/sqrt(2)], w = exp(i pi/4).

    Instances are always reduced: either k = 0 or the numerator is not divisible by sqrt(2).
    Two instances denote the same complex number iff their five fields are equal.

    :param int a: Coefficient of 1
    :param int b: Coefficient of w
    :param int c: Coefficient of w^2 = i
    :param int d: Coefficient of w^3
    :param int k: Exponent of the sqrt(2) denominator

    >>> CycloNum(1, k=1) + CycloNum(1, k=1)
    CycloNum(0, 1, 0, -1, k=0)
    """

    __slots__ = ('_a', '_b', '_c', '_d', '_k')

    def __init__(self, a=0, b=0, c=0, d=0, k=0):
        if k < 0:
            raise ValueError('Denominator exponent must be non-negative while {} is passed'.format(k))
        self._a, self._b, self._c, self._d, self._k = self._reduce(int(a), int(b), int(c), int(d), int(k))

    @staticmethod
    def _reduce(a, b, c, d, k):
        while k > 0 and (a - c) % 2 == 0 and (b - d) % 2 == 0:
            a, b, c, d = (b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2
            k -= 1
        if a == b == c == d == 0:
            k = 0
        if max(abs(a), abs(b), abs(c), abs(d)) > COEFF_LIMIT:
            raise RingOverflowError('Ring coefficient exceeds {}'.format(COEFF_LIMIT))
        return a, b, c, d, k

    @classmethod
    def reduce(cls, a, b, c, d, k) -> CycloNum:
        return cls(a, b, c, d, k)

    @classmethod
    def from_array(cls, values) -> CycloNum:
        return cls(*[int(v) for v in values])

    @classmethod
    def parse(cls, text: str) -> CycloNum:
        match = TEXT_REGEX.match(text)
        if match is None:
            raise MatrixFormatError('Entry must look like "a,b,c,d/k" while "{}" is passed'.format(text))
        return cls(*[int(g) for g in match.groups()])

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def c(self) -> int:
        return self._c

    @property
    def d(self) -> int:
        return self._d

    @property
    def k(self) -> int:
        return self._k

    @property
    def coef(self) -> tuple:
        return self._a, self._b, self._c, self._d, self._k

    def _scaled(self, k):
        a, b, c, d = self._a, self._b, self._c, self._d
        for _ in range(k - self._k):
            a, b, c, d = b - d, a + c, b + d, c - a
        return a, b, c, d

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, np.integer)):
            return cls(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        k = max(self._k, other.k)
        x = self._scaled(k)
        y = other._scaled(k)
        return self.__class__(x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3], k)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return self.__class__(-self._a, -self._b, -self._c, -self._d, self._k)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        x = (self._a, self._b, self._c, self._d)
        y = (other.a, other.b, other.c, other.d)
        out = [0, 0, 0, 0]
        for i in range(4):
            for j in range(4):
                if i + j < 4:
                    out[i + j] += x[i] * y[j]
                else:
                    # w^4 = -1
                    out[i + j - 4] -= x[i] * y[j]
        return self.__class__(*out, k=self._k + other.k)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError('Only non-negative powers are supported while {} is passed'.format(n))
        result = self.__class__(1)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> CycloNum:
        return self.__class__(self._a, -self._d, -self._c, -self._b, self._k)

    def to_complex(self) -> complex:
        num = self._a + self._b * OMEGA + self._c * OMEGA ** 2 + self._d * OMEGA ** 3
        return num / math.sqrt(2) ** self._k

    def __complex__(self):
        return self.to_complex()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return False
        return self.coef == other.coef

    def __lt__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coef < other.coef

    def __hash__(self):
        return hash(self.coef)

    def __repr__(self):
        return 'CycloNum({}, {}, {}, {}, k={})'.format(*self.coef)

    def __str__(self):
        return '{},{},{},{}/{}'.format(*self.coef)


ZERO = CycloNum()
ONE = CycloNum(1)
OMEGA_NUM = CycloNum(0, 1)
I_NUM = CycloNum(0, 0, 1)
SQRT2 = CycloNum(0, 1, 0, -1)
INV_SQRT2 = CycloNum(1, k=1)


def add(x: CycloNum, y: CycloNum) -> CycloNum:
    return x + y


def mul(x: CycloNum, y: CycloNum) -> CycloNum:
    return x * y


def conj(x: CycloNum) -> CycloNum:
    return x.conj()


def reduce(a, b, c, d, k) -> CycloNum:
    return CycloNum.reduce(a, b, c, d, k)


def to_complex(x: CycloNum) -> complex:
    return x.to_complex()
