"""Dense complex matrix helpers and the metrics the rest of the package verifies against.

Matrices are plain ``numpy`` arrays of ``complex128``. Every function returns a
new array and never mutates its inputs.
"""

import numpy as np
from scipy.stats import unitary_group

from .errors import DimensionError, NonUnitaryError

#: unitarity tolerance for matrices built by gate constructors
CONSTRUCTION_TOL = 1e-12
#: tolerance for end-to-end pipeline verification
VERIFY_TOL = 1e-9
#: largest dense matrix dimension the package will build
MAX_DIM = 2**12

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
P0 = np.array([[1, 0], [0, 0]], dtype=complex)
P1 = np.array([[0, 0], [0, 1]], dtype=complex)


def as_matrix(m):
    """Coerce to a square, finite complex128 array."""
    a = np.array(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def negator(theta):
    """N(theta) = (I + X)/2 + e^{i theta} (I - X)/2."""
    e = np.exp(1j * theta)
    return 0.5 * np.array([[1 + e, 1 - e], [1 - e, 1 + e]], dtype=complex)


SQRT_NOT = negator(np.pi / 2)


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def kron(a, b):
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(mats):
    out = np.eye(1, dtype=complex)
    for m in mats:
        out = np.kron(out, m)
    return out


def dagger(a):
    return np.conj(np.asarray(a)).T


def unitarity_error(m):
    """max |M^dag M - I| entrywise."""
    m = np.asarray(m)
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


def is_unitary(m, tol=CONSTRUCTION_TOL):
    return unitarity_error(m) <= tol


def check_unitary(m, tol=1e-10):
    """Return ``m`` as an array, raising :class:`NonUnitaryError` when it is not unitary."""
    m = as_matrix(m)
    err = unitarity_error(m)
    if err > tol:
        raise NonUnitaryError(err)
    return m


def num_qubits(dim):
    """log2(dim), raising DimensionError when dim is not a power of two."""
    k = int(dim).bit_length() - 1
    if dim < 1 or 1 << k != dim:
        raise DimensionError(f"dimension {dim} is not a power of two")
    return k


def phase_invariant_distance(a, b):
    """Frobenius distance between ``a`` and ``b`` after optimally re-phasing ``b``.

    For unitaries this equals ``sqrt(2 dim - 2 |tr(a^dag b)|)``; it is evaluated as
    ``|| a - e^{i phi} b ||_F`` with ``phi = arg tr(b^dag a)``, which keeps full
    precision near zero where the trace form loses half the digits.
    """
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    tr = np.vdot(b, a)  # tr(b^dag a)
    phase = tr / abs(tr) if abs(tr) > 0 else 1.0
    return float(np.linalg.norm(a - phase * b))


def line_sum_error(m):
    """Largest deviation of any row or column sum from 1."""
    m = np.asarray(m)
    return float(max(np.max(np.abs(m.sum(axis=0) - 1)), np.max(np.abs(m.sum(axis=1) - 1))))


def is_xu(m, tol=VERIFY_TOL):
    """True iff every row sum and every column sum of ``m`` is 1 within ``tol``."""
    return line_sum_error(m) <= tol


def random_unitary(dim, rng=None):
    """Haar-random unitary."""
    return unitary_group.rvs(dim, random_state=rng) if dim > 1 else np.exp(
        2j * np.pi * np.random.default_rng(rng).random()) * np.eye(1, dtype=complex)


def random_state(dim, rng=None):
    rng = np.random.default_rng(rng)
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)
