"""
Grover search on two qubits
===========================

Two search qubits plus an oracle qubit in |1>. One iteration of the oracle and
the diffusion finds the marked item with certainty, here after compilation to
negators and controlled-sqrt(NOT) gates.
"""

# %%
from ncn.grover import run_grover

for omega in range(4):
    run = run_grover(omega, shots=10_000, seed=omega)
    print(f"omega={omega:02b} p={run.p_omega:.12f} ncn gates={len(run.ncn)}")

# %%
run = run_grover(2, shots=1000, seed=0)
print("\n".join(run.histogram.lines()))
print(run.histogram.counts)
