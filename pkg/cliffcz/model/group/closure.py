"""
    Builders for the Clifford tables. Words are read left to right as a matrix product, so the
    element of word (g1, g2, ..., gn) is g1 @ g2 @ ... @ gn.
"""

import logging

import numpy as np
from tqdm import tqdm

from cliffcz.model.group.group_table import GroupTable
from cliffcz.model.matrix import gates
from cliffcz.model.ring import cyclo_array
from cliffcz.util.action import TableName
from cliffcz.util.config import BATCH_SIZE, MAX_GROUP_ORDER
from cliffcz.util.exception import ClosureOverflowError, DimensionError, NotUnitaryError, WordError
from cliffcz.util.method import Letter

logger = logging.getLogger(__name__)

LC2_BLOCK = 16


def closure(generators, name='group', cap=MAX_GROUP_ORDER, batch_size=BATCH_SIZE, verbose=0):
    """
    Breadth first closure from the identity. Each frontier element is right multiplied by every
    generator and new products are kept in discovery order, so every stored word is a shortest one.

    :param dict generators: Letter to GateMatrix
    :param str name: Table name
    :param int cap: Maximum group order before giving up
    :param int batch_size: Number of frontier elements multiplied per vectorised call
    :param int verbose: Show a progress bar per layer if larger than 0
    :return: GroupTable in canonical order

    >>> closure({'H': gates.H, 'P': gates.P}, name='c1')
    """
    if not generators:
        raise ValueError('At least one generator is required')
    letters = list(generators)
    dims = {generators[l].dim for l in letters}
    if len(dims) != 1:
        raise DimensionError('Generators must share one dimension while {} are passed'.format(sorted(dims)))
    for letter in letters:
        if not generators[letter].is_unitary():
            raise NotUnitaryError('Generator {} is not unitary'.format(letter))

    dim = dims.pop()
    gens = np.stack([generators[l].data for l in letters])
    n_gens = len(letters)

    start = cyclo_array.identity(dim)
    elements = [start]
    parents = [-1]
    last_letters = [None]
    seen = {cyclo_array.encoding(start): 0}

    frontier = np.array([0])
    depth = 0
    while frontier.size:
        found = []
        blocks = range(0, len(frontier), batch_size)
        if verbose > 0:
            blocks = tqdm(blocks, desc='{} layer {}'.format(name, depth), leave=False)
        for begin in blocks:
            ids = frontier[begin:begin + batch_size]
            block = np.stack([elements[i] for i in ids])
            products = cyclo_array.matmul(block[:, None], gens[None]).reshape(-1, dim, dim, cyclo_array.WIDTH)

            for pos, key in enumerate(cyclo_array.encodings(products)):
                if key in seen:
                    continue
                new_id = len(elements)
                seen[key] = new_id
                elements.append(products[pos])
                parents.append(int(ids[pos // n_gens]))
                last_letters.append(letters[pos % n_gens])
                found.append(new_id)

            if len(elements) > cap:
                raise ClosureOverflowError(
                    'Closure of {} exceeds {} elements at depth {}'.format(name, cap, depth + 1))

        depth += 1
        logger.debug('%s: depth %d adds %d elements', name, depth, len(found))
        frontier = np.array(found, dtype=np.int64)

    words = [()]
    for i in range(1, len(elements)):
        words.append(words[parents[i]] + (last_letters[i],))

    logger.info('%s: closure has %d elements, longest word %d', name, len(elements), depth - 1)
    return GroupTable.from_unsorted(name, generators, np.stack(elements), words)


def lift_word(word, wire):
    return tuple(Letter.on_wire(letter, wire) for letter in word)


def split_local_word(word):
    """
    Split a word over {h1, h2, p1, p2} into its single qubit words. Letters on different wires
    commute, so the product of the word equals tensor(A, B).

    :return: tuple (wire 1 word, wire 2 word) over {H, P}
    """
    wires = {1: [], 2: []}
    for letter in word:
        if letter not in Letter.local():
            raise WordError('Letter {} is not a local letter'.format(letter))
        wires[Letter.wire_of(letter)].append(Letter.base(letter))
    return tuple(wires[1]), tuple(wires[2])


def build_lc2(c1, name=TableName.LC2, verbose=0):
    """
    All tensor products A x B of single qubit Cliffords, deduplicated. Among the phase equivalent
    factor pairs of an element the one with the shortest total word is kept, ties broken by ids.

    :param GroupTable c1: Single qubit table
    :return: GroupTable over the alphabet {h1, h2, p1, p2}
    """
    if c1.dim != 2:
        raise DimensionError('LC2 is built from a 2x2 table while dim {} is passed'.format(c1.dim))

    n = len(c1)
    blocks = range(0, n, LC2_BLOCK)
    if verbose > 0:
        blocks = tqdm(blocks, desc=name, leave=False)
    products = np.concatenate([
        cyclo_array.kron(c1.data[begin:begin + LC2_BLOCK, None], c1.data[None]).reshape(-1, 4, 4, cyclo_array.WIDTH)
        for begin in blocks])
    keys = cyclo_array.encodings(products)

    lengths = np.array([len(w) for w in c1.words])
    total = (lengths[:, None] + lengths[None, :]).reshape(-1)
    # stable sort keeps (i, j) order among equal lengths
    order = np.argsort(total, kind='stable')

    kept = {}
    for pos in order:
        if keys[pos] not in kept:
            kept[keys[pos]] = pos

    chosen = sorted(kept.values())
    words = [lift_word(c1.words[pos // n], 1) + lift_word(c1.words[pos % n], 2) for pos in chosen]
    logger.info('%s: %d products, %d distinct', name, n * n, len(chosen))
    return GroupTable.from_unsorted(name, gates.LOCAL_GENERATORS, products[chosen], words)


def build_c1(verbose=0):
    return closure(gates.C1_GENERATORS, name=TableName.C1, verbose=verbose)


def build_c2(verbose=0):
    return closure(gates.C2_GENERATORS, name=TableName.C2, verbose=verbose)
