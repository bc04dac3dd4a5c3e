"""Check the ancilla contract N (|-> (x) psi) = e^{i phi} |-> (x) U psi by simulation."""

from dataclasses import dataclass

import numpy as np

from . import sim
from .errors import DimensionError
from .linalg import VERIFY_TOL, random_state

N_RANDOM = 20


@dataclass(frozen=True)
class VerifyReport:
    worst_deficit: float  # max over probes of 1 - |<U psi | Psi(N Phi(psi))>|
    worst_ancilla: float  # max trace distance of the ancilla from |-><-|
    n_states: int
    tol: float

    @property
    def ok(self):
        return self.worst_deficit <= self.tol and self.worst_ancilla <= self.tol


def probe_states(dim, n_random=N_RANDOM, seed=0):
    """Columns: every basis state, then ``n_random`` Haar-random states."""
    rng = np.random.default_rng(seed)
    rand = [random_state(dim, rng) for _ in range(n_random)]
    return np.column_stack([np.eye(dim, dtype=complex)] + [r[:, None] for r in rand])


def verify_contract(u, circuit, tol=VERIFY_TOL, n_random=N_RANDOM, seed=0):
    """Simulate ``circuit`` on |-> (x) psi for the probe states and compare with ``u psi``.

    The ancilla is expected at ``circuit.ancilla`` (qubit 0).
    """
    u = np.asarray(u, dtype=complex)
    if circuit.ancilla != 0:
        raise DimensionError("circuit declares no ancilla at qubit 0")
    if 2 * u.shape[0] != 2**circuit.width:
        raise DimensionError(f"unitary of dimension {u.shape[0]} does not match "
                             f"circuit width {circuit.width} (expected 2^(width-1))")
    psi = probe_states(u.shape[0], n_random, seed)
    out = sim.apply(circuit, np.vstack([sim.MINUS[0] * psi, sim.MINUS[1] * psi]))
    want = u @ psi
    # the |-> component of the output, projected column by column
    minus_part = sim.MINUS[0].conjugate() * out[: len(psi)] + sim.MINUS[1].conjugate() * out[len(psi):]
    overlap = np.abs(np.sum(want.conj() * minus_part, axis=0))
    deficit = float(np.max(1 - overlap))
    anc = max(sim.ancilla_trace_distance(out[:, i]) for i in range(out.shape[1]))
    return VerifyReport(max(deficit, 0.0), anc, psi.shape[1], tol)
