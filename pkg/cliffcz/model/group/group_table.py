from collections import Counter

import numpy as np

from cliffcz.model.matrix.gate_matrix import GateMatrix
from cliffcz.model.ring import cyclo_array
from cliffcz.util.config import BATCH_SIZE
from cliffcz.util.exception import VerificationError, WordError


class GroupTable:
    """
    Deduplicated finite matrix group. Element ids follow the canonical encoding order and every
    element keeps one generating word over the table's alphabet.

    :param str name: Table name, also used in table file headers
    :param dict generators: Letter to GateMatrix. A word (l1, l2, ...) stands for the product l1 @ l2 @ ...
    :param numpy data: Packed elements of shape (n, dim, dim, 5) in canonical order
    :param list words: words[i] is a tuple of letters evaluating to element i

    >>> from cliffcz.model.group import closure
    >>> from cliffcz.model.matrix import gates
    >>> c1 = closure(gates.C1_GENERATORS, name='c1')
    >>> len(c1)
    192
    """

    def __init__(self, name, generators, data, words):
        data = np.array(data, dtype=np.int64)
        if data.ndim != 4:
            raise ValueError('Expected elements of shape (n, dim, dim, 5) while {} is passed'.format(data.shape))
        if len(words) != len(data):
            raise ValueError('Got {} words for {} elements'.format(len(words), len(data)))
        data.flags.writeable = False

        self.name = name
        self.generators = dict(generators)
        self._data = data
        self._words = [tuple(w) for w in words]
        self._encodings = cyclo_array.encodings(data)
        if any(a >= b for a, b in zip(self._encodings, self._encodings[1:])):
            raise VerificationError('Elements of table {} are not in strict canonical order'.format(name))
        self.index_of = {e: i for i, e in enumerate(self._encodings)}

    @classmethod
    def from_unsorted(cls, name, generators, data, words):
        data = np.asarray(data, dtype=np.int64)
        keys = cyclo_array.encodings(data)
        order = sorted(range(len(keys)), key=keys.__getitem__)
        return cls(name, generators, data[order], [words[i] for i in order])

    def __len__(self):
        return len(self._data)

    @property
    def dim(self):
        return self._data.shape[1]

    @property
    def data(self):
        return self._data

    @property
    def alphabet(self):
        return list(self.generators)

    @property
    def words(self):
        return self._words

    def _check_id(self, element_id):
        if not 0 <= element_id < len(self):
            raise IndexError('Element id must be between 0 and {} while {} is passed'.format(
                len(self) - 1, element_id))

    def element(self, element_id):
        self._check_id(element_id)
        return GateMatrix(self._data[element_id], reduced=True)

    def encoding(self, element_id):
        self._check_id(element_id)
        return self._encodings[element_id]

    def contains(self, m):
        """
        :param GateMatrix m: Matrix with reduced entries
        :return: int Element id, or None when m is not in the table
        """
        if m.dim != self.dim:
            return None
        return self.index_of.get(m.encoding())

    def lookup_batch(self, batch):
        """
        :return: numpy Element ids of every matrix in batch, -1 for matrices outside the table
        """
        return np.array([self.index_of.get(key, -1) for key in cyclo_array.encodings(batch)], dtype=np.int64)

    def word_of(self, element_id):
        self._check_id(element_id)
        return self._words[element_id]

    def evaluate_word(self, word):
        result = GateMatrix.identity(self.dim)
        for letter in word:
            if letter not in self.generators:
                raise WordError('Letter {} is not in alphabet {}'.format(letter, self.alphabet))
            result = result @ self.generators[letter]
        return result

    def identity_id(self):
        return self.contains(GateMatrix.identity(self.dim))

    def scalar_ids(self):
        """
        :return: list Ids of the elements that are a scalar times identity (the phase subgroup)
        """
        return sorted(self.index_of[key] for key in self._scalar_keys() if key in self.index_of)

    def _scalar_keys(self):
        # w^j I for j = 0..7
        keys = []
        for j in range(8):
            power = cyclo_array.zeros((self.dim, self.dim))
            power[np.arange(self.dim), np.arange(self.dim), j % 4] = 1 if j < 4 else -1
            keys.append(cyclo_array.encoding(power))
        return keys

    def word_length_histogram(self):
        return dict(sorted(Counter(len(w) for w in self._words).items()))

    def right_multiply(self, m, batch_size=BATCH_SIZE):
        """
        :return: numpy Ids of element @ m for every element, -1 when the product leaves the table
        """
        return self.lookup_batch(cyclo_array.batched_matmul(self._data, m.data, batch_size))

    def left_multiply(self, m, batch_size=BATCH_SIZE):
        """
        :return: numpy Ids of m @ element for every element, -1 when the product leaves the table
        """
        return self.lookup_batch(cyclo_array.batched_matmul(m.data, self._data, batch_size))

    def is_closed(self):
        return all((self.right_multiply(g) >= 0).all() for g in self.generators.values())

    def unitary_failures(self, batch_size=BATCH_SIZE):
        """
        :return: int Number of elements U with U @ dagger(U) different from identity
        """
        products = cyclo_array.batched_matmul(self._data, cyclo_array.dagger(self._data), batch_size)
        identity = cyclo_array.identity(self.dim)
        return int((products != identity).reshape(len(self), -1).any(axis=1).sum())

    def __repr__(self):
        return 'GroupTable(name={}, size={}, alphabet={})'.format(self.name, len(self), self.alphabet)


def contains(table, m):
    return table.contains(m)


def word_of(table, element_id):
    return table.word_of(element_id)
