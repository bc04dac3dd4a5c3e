"""Z-Y-Z Euler factorisation of single-qubit unitaries.

Conventions (fixed so that ``H = e^{i pi/2} Rz(pi) Ry(pi/2)`` and
``NOT = e^{i pi/2} Rz(pi) Ry(pi)`` hold literally)::

    Rz(t) = diag(e^{-it/2}, e^{it/2})
    Ry(t) = [[cos t/2, sin t/2], [-sin t/2, cos t/2]]

Note that ``Ry`` here rotates in the opposite sense to the common textbook
``exp(-i t Y / 2)``.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import check_unitary

TWO_PI = 2 * np.pi

# below this, cos(beta/2) or sin(beta/2) is treated as exactly zero
_DEGENERATE = 1e-14


def rz(theta):
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def ry(theta):
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, s], [-s, c]], dtype=complex)


@dataclass(frozen=True)
class ZyzAngles:
    """``u = e^{i phi0} Rz(gamma) Ry(beta) Rz(alpha)``."""

    phi0: float
    alpha: float
    beta: float
    gamma: float

    def matrix(self):
        return np.exp(1j * self.phi0) * (rz(self.gamma) @ ry(self.beta) @ rz(self.alpha))

    def __iter__(self):
        return iter((self.phi0, self.alpha, self.beta, self.gamma))


def _wrap(theta):
    """Reduce ``theta`` into [0, 2pi); also return the number of 2pi turns removed."""
    turns = np.floor(theta / TWO_PI)
    t = theta - turns * TWO_PI
    if t >= TWO_PI:  # floating edge case
        t -= TWO_PI
        turns += 1
    return float(t), int(turns)


def zyz_decompose(u, tol=1e-10):
    """Factor a 2x2 unitary into global phase and Z-Y-Z Euler angles.

    Returns angles in the canonical ranges ``beta in [0, pi]`` and
    ``phi0, alpha, gamma in [0, 2pi)``. When ``beta`` is 0 or pi the
    alpha/gamma split is not unique; ``alpha = 0`` is chosen.
    """
    u = check_unitary(u, tol)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got {u.shape}")
    phi0 = 0.5 * np.angle(np.linalg.det(u))
    v = np.exp(-1j * phi0) * u  # special unitary
    c, s = abs(v[0, 0]), abs(v[1, 0])
    beta = 2 * np.arctan2(s, c)
    a = np.angle(v[0, 0])  # -(alpha + gamma)/2
    b = np.angle(-v[1, 0])  # (gamma - alpha)/2
    if s < _DEGENERATE:
        alpha, gamma = 0.0, -2 * a
    elif c < _DEGENERATE:
        alpha, gamma = 0.0, 2 * b
    else:
        alpha, gamma = -a - b, b - a
    # Rz(t + 2pi) = -Rz(t): every removed turn flips the sign, absorbed into phi0
    alpha, ta = _wrap(alpha)
    gamma, tg = _wrap(gamma)
    phi0, _ = _wrap(phi0 + np.pi * ((ta + tg) % 2))
    return ZyzAngles(phi0, alpha, float(beta), gamma)
