"""NumPy reference implementations of the hot numerical kernels.

These mirror the compiled versions in ``_kernels_cy`` exactly; the active
backend is chosen once, in :mod:`grasscut.kernels`.
"""

from itertools import combinations

import numpy as np

BACKEND = "python"


def det(a):
    """Determinant of a small square complex matrix."""
    return complex(np.linalg.det(np.asarray(a, dtype=np.complex128)))


def minor_vector(a):
    """All n-by-n minors of an n-by-N matrix, in lexicographic column order.

    For a frame matrix this is the Pluecker coordinate vector of its row
    span, of length C(N, n).
    """
    a = np.asarray(a, dtype=np.complex128)
    n, big_n = a.shape
    combos = np.array(list(combinations(range(big_n), n)), dtype=np.intp)
    # a[:, combos] has shape (n, K, n); move the subset axis to the front.
    stack = np.moveaxis(a[:, combos], 1, 0)
    return np.linalg.det(stack)


def gram_det(a, b):
    """det(a b^H): Gram determinant of two n-by-N frames.

    Linear in the rows of ``a``, conjugate-linear in the rows of ``b``.
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    return complex(np.linalg.det(a @ b.conj().T))


def frame_norm(a):
    """sqrt(det(a a^H)): the norm of the top exterior power of the rows."""
    a = np.asarray(a, dtype=np.complex128)
    g = np.linalg.det(a @ a.conj().T).real
    return float(np.sqrt(g if g > 0.0 else 0.0))
