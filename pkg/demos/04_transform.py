"""
Compiling to negators and controlled-sqrt(NOT)
==============================================

Each source gate V is lifted to H . controlled-V . H on an extra qubit. The
lifted blocks are rewritten into negators and controlled-sqrt(NOT) gates. With
that qubit prepared in |->, the big circuit acts as the original on the rest.
"""

# %%
import numpy as np

from ncn import sim
from ncn.circuit import Circuit, cnot, circuit_matrix
from ncn.formats import serialize_circuit
from ncn.linalg import is_xu, random_state, random_unitary
from ncn.synth import synthesize
from ncn.transform import transform

out = transform(Circuit(2, [cnot(0, 1)]))
print(out.counts())
print(serialize_circuit(out)[:200], "...")

# %%
# a random 3-qubit unitary, end to end
rng = np.random.default_rng(3)
u = random_unitary(8, rng)
ncn = transform(synthesize(u))
print("gates:", len(ncn), "xu:", is_xu(circuit_matrix(ncn), 1e-8))

psi = random_state(8, rng)
result = sim.apply(ncn, sim.phi_extend(psi))
print("ancilla trace distance from |->:", sim.ancilla_trace_distance(result))
print("overlap with U psi:", abs(np.vdot(u @ psi, sim.psi_reduce(result))))

# %%
# the ancilla must start in |->; from |+> the data register comes out untouched
plus = np.concatenate([psi, psi]) / np.sqrt(2)
print("overlap with psi from |+>:", abs(np.vdot(psi, sim.psi_reduce(sim.apply(ncn, plus)))))
