import numpy as np

from cliffcz.model.ring import cyclo_array

UNITARITY_TOLERANCE = 1e-12


def to_complex(data):
    """
    :param numpy data: Packed matrices of shape (..., dim, dim, 5)
    :return: numpy complex128 lift
    """
    return cyclo_array.to_complex(data)


def unitarity_errors(data):
    """
    :return: numpy Frobenius norm of U U^H - I for every matrix in the batch
    """
    u = to_complex(data)
    product = u @ np.conj(np.swapaxes(u, -1, -2))
    return np.linalg.norm(product - np.eye(u.shape[-1]), ord='fro', axis=(-2, -1))


def max_unitarity_error(data):
    errors = unitarity_errors(data)
    return float(errors.max()) if errors.size else 0.0
