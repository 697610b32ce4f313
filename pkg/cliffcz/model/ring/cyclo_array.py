"""
    Vectorised arithmetic in Z[w, 1/sqrt(2)] with w = exp(i pi/4).

    A value is packed in the last axis of an int64 array as [a, b, c, d, k] and stands for
    (a + b w + c w^2 + d w^3) / sqrt(2)^k, using w^4 = -1. Functions broadcast over the leading
    axes, so a 4x4 matrix is an array of shape (4, 4, 5) and a batch of them is (n, 4, 4, 5).
"""

import numpy as np

from cliffcz.util.exception import DimensionError, RingOverflowError

WIDTH = 5
COEFF_LIMIT = 2 ** 31 - 1
ENCODING_OFFSET = 2 ** 31
PRODUCT_LIMIT = 2 ** 63 - 1

OMEGA_POWERS = np.exp(1j * np.pi / 4 * np.arange(4))


def pack(a, b, c, d, k=0):
    parts = np.broadcast_arrays(*[np.asarray(v, dtype=np.int64) for v in (a, b, c, d, k)])
    return reduce(np.stack(parts, axis=-1))


def zeros(shape):
    return np.zeros(tuple(shape) + (WIDTH,), dtype=np.int64)


def identity(dim):
    out = zeros((dim, dim))
    out[np.arange(dim), np.arange(dim), 0] = 1
    return out


def times_sqrt2(num):
    # sqrt(2) = w - w^3
    a, b, c, d = num[..., 0], num[..., 1], num[..., 2], num[..., 3]
    return np.stack([b - d, a + c, b + d, c - a], axis=-1)


def _halve_sqrt2(num):
    a, b, c, d = num[..., 0], num[..., 1], num[..., 2], num[..., 3]
    return np.stack([(b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2], axis=-1)


def check_range(values):
    if values.size and np.abs(values[..., :4]).max() > COEFF_LIMIT:
        raise RingOverflowError('Ring coefficient exceeds {}'.format(COEFF_LIMIT))
    return values


def reduce(values):
    """
    :param numpy values: Packed values, not necessarily reduced
    :return: numpy Copy in reduced form. The numerator is divided by sqrt(2) while k > 0 and
        a = c, b = d (mod 2). Zero always ends with k = 0.
    """
    out = np.array(values, dtype=np.int64, order='C')
    flat = out.reshape(-1, WIDTH)
    num = flat[:, :4]
    k = flat[:, 4]

    pending = np.flatnonzero(k > 0)
    while pending.size:
        sub = num[pending]
        divisible = ((sub[:, 0] - sub[:, 2]) % 2 == 0) & ((sub[:, 1] - sub[:, 3]) % 2 == 0)
        pending = pending[divisible]
        if not pending.size:
            break
        num[pending] = _halve_sqrt2(num[pending])
        k[pending] -= 1
        pending = pending[k[pending] > 0]

    k[~num.any(axis=1)] = 0
    return check_range(out)


def rescale(values, k):
    """
    Rewrite values over the denominator sqrt(2)^k. The result is not reduced.

    :param numpy values: Packed values
    :param numpy k: Target exponents, broadcastable to the leading axes and not below current exponents
    """
    values = np.asarray(values, dtype=np.int64)
    shape = np.broadcast_shapes(values.shape[:-1], np.shape(k))
    target = np.broadcast_to(np.asarray(k, dtype=np.int64), shape).reshape(-1)
    out = np.array(np.broadcast_to(values, shape + (WIDTH,)), dtype=np.int64, order='C')
    flat = out.reshape(-1, WIDTH)

    pending = np.flatnonzero(flat[:, 4] < target)
    while pending.size:
        flat[pending, :4] = check_range(times_sqrt2(flat[pending, :4]))
        flat[pending, 4] += 1
        pending = pending[flat[pending, 4] < target[pending]]
    return out


def add(x, y):
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    k = np.maximum(x[..., 4], y[..., 4])
    total = rescale(x, k)
    total[..., :4] += rescale(y, k)[..., :4]
    return reduce(total)


def neg(x):
    out = np.array(x, dtype=np.int64)
    out[..., :4] *= -1
    return out


def mul(x, y):
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    check_range(x)
    check_range(y)
    # four products of at most COEFF_LIMIT^2 each are summed per coefficient
    if x.size and y.size and 4 * int(np.abs(x[..., :4]).max()) * int(np.abs(y[..., :4]).max()) > PRODUCT_LIMIT:
        raise RingOverflowError('Ring product exceeds {}'.format(PRODUCT_LIMIT))
    shape = np.broadcast_shapes(x.shape[:-1], y.shape[:-1])
    out = zeros(shape)
    for i in range(4):
        xi = x[..., i]
        for j in range(4):
            term = xi * y[..., j]
            if i + j < 4:
                out[..., i + j] += term
            else:
                out[..., i + j - 4] -= term
    out[..., 4] = x[..., 4] + y[..., 4]
    return reduce(out)


def conj(x):
    x = np.asarray(x, dtype=np.int64)
    return np.stack([x[..., 0], -x[..., 3], -x[..., 2], -x[..., 1], x[..., 4]], axis=-1)


def sum_along(values, axis):
    """
    :param numpy values: Packed values
    :param int axis: Axis among the leading (non packed) axes
    :return: numpy Exact reduced sum
    """
    values = np.asarray(values, dtype=np.int64)
    axis = axis % (values.ndim - 1)
    k = values[..., 4].max(axis=axis, keepdims=True)
    num = rescale(values, k)[..., :4].sum(axis=axis)
    return reduce(np.concatenate([num, np.squeeze(k, axis=axis)[..., None]], axis=-1))


def matmul(x, y):
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if x.shape[-2] != y.shape[-3]:
        raise DimensionError('Cannot multiply {} by {} matrices'.format(x.shape[-3:-1], y.shape[-3:-1]))
    products = mul(x[..., :, :, None, :], y[..., None, :, :, :])
    return sum_along(products, axis=-2)


def kron(x, y):
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    products = mul(x[..., :, None, :, None, :], y[..., None, :, None, :, :])
    shape = products.shape
    return products.reshape(shape[:-5] + (shape[-5] * shape[-4], shape[-3] * shape[-2], WIDTH))


def dagger(x):
    return np.swapaxes(conj(x), -3, -2)


def to_complex(values):
    values = np.asarray(values, dtype=np.int64)
    num = values[..., :4].astype(np.float64) @ OMEGA_POWERS
    return num / np.sqrt(2.0) ** values[..., 4]


def encoding(values):
    """
    Canonical bytes. Every integer is stored as big endian uint32 of value + 2^31, so byte order
    equals the lexicographic order of the integer sequence.
    """
    flat = np.asarray(values, dtype=np.int64).reshape(-1)
    return (flat + ENCODING_OFFSET).astype('>u4').tobytes()


def encodings(batch):
    batch = np.asarray(batch, dtype=np.int64)
    rows = (batch.reshape(len(batch), -1) + ENCODING_OFFSET).astype('>u4')
    return [row.tobytes() for row in rows]


def decode(data, shape):
    flat = np.frombuffer(data, dtype='>u4').astype(np.int64) - ENCODING_OFFSET
    return flat.reshape(tuple(shape) + (WIDTH,))


def batched_matmul(x, y, batch_size):
    """
    Product of a batch with a single matrix (or of two equally long batches), computed in chunks
    of batch_size along the batch axis.
    """
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    size = len(x) if x.ndim == 4 else len(y)
    if size == 0:
        dim = x.shape[-3]
        return zeros((0, dim, dim))

    blocks = []
    for start in range(0, size, batch_size):
        stop = start + batch_size
        blocks.append(matmul(x[start:stop] if x.ndim == 4 else x, y[start:stop] if y.ndim == 4 else y))
    return np.concatenate(blocks)
