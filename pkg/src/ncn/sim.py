"""Statevector simulation, ancilla extension/removal and computational-basis measurement.

States are 1-D complex arrays of length 2^n, or 2-D arrays whose columns are
independent states (batched simulation). Qubit 0 is the most significant bit.
"""

from dataclasses import dataclass

import numba
import numpy as np

from .errors import DimensionError, EntangledAncillaError

MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)

#: a product ancilla has reduced purity >= 1 - PURITY_TOL
PURITY_TOL = 1e-9


@numba.njit(cache=True)
def _run(state, n, tgt, c1, c2, mats):
    dim, m = state.shape
    for g in range(tgt.shape[0]):
        tb = 1 << (n - 1 - tgt[g])
        mask = 0
        if c1[g] >= 0:
            mask |= 1 << (n - 1 - c1[g])
        if c2[g] >= 0:
            mask |= 1 << (n - 1 - c2[g])
        u00 = mats[g, 0, 0]
        u01 = mats[g, 0, 1]
        u10 = mats[g, 1, 0]
        u11 = mats[g, 1, 1]
        for i in range(dim):
            if (i & tb) or (i & mask) != mask:
                continue
            j = i | tb
            for k in range(m):
                a = state[i, k]
                b = state[j, k]
                state[i, k] = u00 * a + u01 * b
                state[j, k] = u10 * a + u11 * b


def apply(circuit, state):
    """Return the state after running ``circuit``; the input is not modified."""
    s = np.array(state, dtype=complex)
    if s.shape[0] != 2**circuit.width:
        raise DimensionError(f"state dimension {s.shape[0]} does not match width {circuit.width}")
    batch = s.reshape(s.shape[0], -1).copy()
    if circuit.gates:
        _run(batch, circuit.width, *circuit.compiled)
    return batch.reshape(s.shape)


def unitary(circuit):
    """Full unitary of ``circuit`` obtained by simulating every basis state."""
    return apply(circuit, np.eye(2**circuit.width, dtype=complex))


def basis_state(index, width):
    s = np.zeros(2**width, dtype=complex)
    s[index] = 1
    return s


def phi_extend(state):
    """|-> (x) state, the new qubit becoming qubit 0."""
    s = np.asarray(state, dtype=complex)
    return np.concatenate([MINUS[0] * s, MINUS[1] * s])


def ancilla_density(state):
    """Reduced 2x2 density matrix of qubit 0."""
    s = np.asarray(state, dtype=complex)
    m = s.reshape(2, -1)
    return m @ m.conj().T


def ancilla_trace_distance(state, target=MINUS):
    """Trace distance between the reduced state of qubit 0 and the pure ``target``."""
    diff = ancilla_density(state) - np.outer(target, target.conj())
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(diff))))


def psi_reduce(state, tol=PURITY_TOL):
    """Drop a product-state ancilla (qubit 0) and return the normalised remainder.

    Raises EntangledAncillaError when the ancilla is not in a product state;
    the returned vector is defined up to a global phase.
    """
    s = np.asarray(state, dtype=complex)
    rho = ancilla_density(s)
    tr = np.trace(rho).real
    purity = float(np.trace(rho @ rho).real / tr**2)
    if purity < 1 - tol:
        raise EntangledAncillaError(purity)
    m = s.reshape(2, -1)
    row = m[np.argmax(np.linalg.norm(m, axis=1))]
    return row / np.linalg.norm(row)


@dataclass(frozen=True)
class MeasurementResult:
    outcome: int
    probability: float
    post_state: np.ndarray


@dataclass(frozen=True)
class Histogram:
    qubits: tuple
    counts: np.ndarray  # counts[outcome]
    probabilities: np.ndarray  # exact Born probabilities

    @property
    def shots(self):
        return int(self.counts.sum())

    def label(self, outcome):
        return format(outcome, f"0{len(self.qubits)}b")

    def lines(self):
        """Two-column text: outcome bit string (first listed qubit leftmost), probability."""
        return [f"{self.label(i)}  {p:.12f}" for i, p in enumerate(self.probabilities)]


def _width(state):
    n = int(np.asarray(state).shape[0]).bit_length() - 1
    if 1 << n != np.asarray(state).shape[0]:
        raise DimensionError("state length is not a power of two")
    return n


def probabilities(state, qubits):
    """Born probabilities of the outcomes on ``qubits`` (first qubit = most significant bit)."""
    n = _width(state)
    qubits = tuple(qubits)
    if any(not 0 <= q < n for q in qubits) or len(set(qubits)) != len(qubits):
        raise DimensionError(f"invalid measured qubits {qubits} for width {n}")
    p = np.abs(np.asarray(state).reshape((2,) * n)) ** 2
    rest = tuple(q for q in range(n) if q not in qubits)
    p = p.sum(axis=rest) if rest else p
    # summed tensor keeps the measured axes in ascending order; reorder to ``qubits``
    order = sorted(qubits)
    p = np.transpose(p, [order.index(q) for q in qubits])
    return p.reshape(-1)


def collapse(state, qubits, outcome):
    """Project onto ``outcome`` of ``qubits`` and renormalise."""
    n = _width(state)
    qubits = tuple(qubits)
    s = np.array(state, dtype=complex)
    bits = [(outcome >> (len(qubits) - 1 - i)) & 1 for i in range(len(qubits))]
    idx = np.arange(2**n)
    keep = np.ones(2**n, dtype=bool)
    for q, b in zip(qubits, bits):
        keep &= ((idx >> (n - 1 - q)) & 1) == b
    s[~keep] = 0
    p = float(np.vdot(s, s).real)
    if p > 0:
        s /= np.sqrt(p)
    return MeasurementResult(outcome, p, s)


def measure(state, qubits, shots, seed=None):
    """Sample ``shots`` computational-basis measurements of ``qubits``."""
    p = probabilities(state, qubits)
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, p / p.sum()) if shots else np.zeros(len(p), dtype=np.int64)
    return Histogram(tuple(qubits), counts, p)
