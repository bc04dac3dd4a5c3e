"""Two-qubit Grover search compiled to NCN gates.

Register: q0, q1 search qubits (q0 is the high bit of omega), q2 the oracle
qubit prepared in |1>. One Grover iteration finds omega with certainty.
"""

from dataclasses import dataclass

import numpy as np

from . import sim
from .circuit import Circuit, Dialect, cnot, hadamard, rz_gate, u1q
from .linalg import X
from .synth import toffoli_gates
from .transform import transform

SEARCH = (0, 1)
ORACLE = 2
INPUT = 0b001  # |q0 q1 q2> = |001>


def oracle_gates(omega):
    """U_omega: flip q2 iff (q0, q1) spells omega, a Toffoli with X on the 0-bits."""
    if not 0 <= omega < 4:
        raise ValueError(f"omega must be in 0..3, got {omega}")
    flips = [u1q(q, X) for i, q in enumerate(SEARCH) if not (omega >> (1 - i)) & 1]
    return flips + toffoli_gates(SEARCH[0], SEARCH[1], ORACLE) + flips


def diffusion_gates():
    """2|s><s| - I on the search qubits, up to global phase.

    The inner block H X (CZ) X H realises the reflection; CZ is built as
    CNOT . Rz(-pi/2)(q1) . CNOT . Rz(pi/2)(q1) . Rz(pi/2)(q0), the last rotation
    supplying the phase diag(1, i) on q0 that a bare CNOT-Rz-CNOT-Rz pair leaves out.
    """
    a, b = SEARCH
    hh = [hadamard(a), hadamard(b)]
    xx = [u1q(a, X), u1q(b, X)]
    return (hh + xx
            + [cnot(a, b), rz_gate(b, -np.pi / 2), cnot(a, b), rz_gate(b, np.pi / 2),
               rz_gate(a, np.pi / 2)]
            + xx + hh)


def grover_circuit(omega):
    """GENERAL-dialect circuit on three qubits: H layer, U_omega, diffusion."""
    gates = [hadamard(q) for q in range(3)] + oracle_gates(omega) + diffusion_gates()
    return Circuit(3, gates, Dialect.GENERAL)


@dataclass(frozen=True)
class GroverRun:
    omega: int
    source: Circuit
    ncn: Circuit
    histogram: sim.Histogram

    @property
    def p_omega(self):
        return float(self.histogram.probabilities[self.omega])


def run_grover(omega, shots=1000, seed=None):
    """Compile, simulate with the |-> ancilla, drop it, and sample the search qubits."""
    src = grover_circuit(omega)
    ncn = transform(src)
    out = sim.apply(ncn, sim.phi_extend(sim.basis_state(INPUT, 3)))
    psi = sim.psi_reduce(out)
    return GroverRun(omega, src, ncn, sim.measure(psi, SEARCH, shots, seed))
