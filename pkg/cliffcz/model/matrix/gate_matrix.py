import numpy as np

from cliffcz.model.ring import cyclo_array
from cliffcz.model.ring.cyclo_num import CycloNum
from cliffcz.util.exception import DimensionError


class GateMatrix:
    """
    Exact 2x2 or 4x4 matrix over Z[w, 1/sqrt(2)].

    Entries are kept reduced in an immutable int64 array of shape (dim, dim, 5), row-major. Equality,
    hashing and ordering are those of the canonical encoding.

    :param numpy data: Packed entries of shape (dim, dim, 5)
    :param bool reduced: Skip reduction when the caller guarantees reduced entries

    >>> from cliffcz.model.matrix import gates
    >>> gates.H @ gates.H == gates.I2
    True
    """

    DIMS = (2, 4)

    def __init__(self, data, reduced=False):
        data = np.asarray(data, dtype=np.int64)
        if data.ndim != 3 or data.shape[0] != data.shape[1] or data.shape[2] != cyclo_array.WIDTH:
            raise DimensionError(
                'Expected entries of shape (dim, dim, {}) while {} is passed'.format(cyclo_array.WIDTH, data.shape))
        if data.shape[0] not in self.DIMS:
            raise DimensionError('Dimension must be one of {} while {} is passed'.format(self.DIMS, data.shape[0]))

        data = data.view() if reduced else cyclo_array.reduce(data)
        data.flags.writeable = False
        self._data = data
        self._encoding = None

    @classmethod
    def from_entries(cls, rows):
        """
        :param list rows: Rows of CycloNum (or int) entries

        >>> GateMatrix.from_entries([[1, 0], [0, CycloNum(0, 0, 1)]])
        """
        data = [[CycloNum._coerce(e).coef for e in row] for row in rows]
        return cls(np.array(data, dtype=np.int64))

    @classmethod
    def identity(cls, dim):
        return cls(cyclo_array.identity(dim), reduced=True)

    @property
    def data(self):
        return self._data

    @property
    def dim(self):
        return self._data.shape[0]

    def entry(self, row, col):
        return CycloNum.from_array(self._data[row, col])

    def rows(self):
        return [[self.entry(r, c) for c in range(self.dim)] for r in range(self.dim)]

    def encoding(self):
        if self._encoding is None:
            self._encoding = cyclo_array.encoding(self._data)
        return self._encoding

    def __matmul__(self, other):
        if not isinstance(other, GateMatrix):
            return NotImplemented
        return matmul(self, other)

    def tensor(self, other):
        return tensor(self, other)

    def dagger(self):
        return dagger(self)

    def power(self, n):
        result = GateMatrix.identity(self.dim)
        for _ in range(n):
            result = result @ self
        return result

    def is_identity(self):
        return self == GateMatrix.identity(self.dim)

    def is_unitary(self):
        return (self @ self.dagger()).is_identity()

    def scalar(self):
        """
        :return: CycloNum s if the matrix equals s times identity, otherwise None
        """
        diagonal = self._data[np.arange(self.dim), np.arange(self.dim)]
        off_diagonal = self._data[~np.eye(self.dim, dtype=bool)]
        if off_diagonal[:, :4].any() or not (diagonal == diagonal[0]).all():
            return None
        return CycloNum.from_array(diagonal[0])

    def to_complex(self):
        return cyclo_array.to_complex(self._data)

    def to_text(self):
        lines = [str(self.dim)]
        for row in self.rows():
            lines.append(' '.join(str(e) for e in row))
        return '\n'.join(lines) + '\n'

    def __eq__(self, other):
        if not isinstance(other, GateMatrix):
            return False
        return self.encoding() == other.encoding()

    def __lt__(self, other):
        if not isinstance(other, GateMatrix):
            return NotImplemented
        return self.encoding() < other.encoding()

    def __hash__(self):
        return hash(self.encoding())

    def __repr__(self):
        return 'GateMatrix(dim={}, [{}])'.format(
            self.dim, '; '.join(' '.join(str(e) for e in row) for row in self.rows()))


def matmul(x, y):
    if x.dim != y.dim:
        raise DimensionError('Cannot multiply {0}x{0} by {1}x{1} matrix'.format(x.dim, y.dim))
    return GateMatrix(cyclo_array.matmul(x.data, y.data), reduced=True)


def tensor(a, b):
    if a.dim != 2 or b.dim != 2:
        raise DimensionError('Tensor product needs two 2x2 matrices while {} and {} are passed'.format(a.dim, b.dim))
    return GateMatrix(cyclo_array.kron(a.data, b.data), reduced=True)


def dagger(x):
    return GateMatrix(cyclo_array.dagger(x.data), reduced=True)


def canonical_encoding(x):
    return x.encoding()
