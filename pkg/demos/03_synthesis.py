"""
From a matrix to CNOT and single-qubit gates
============================================

The default synthesizer splits a matrix by the cosine-sine decomposition and
demultiplexes the halves. A slower Givens-style method is kept for comparison.
"""

# %%
import time

import numpy as np

from ncn.circuit import Kind, circuit_matrix
from ncn.linalg import phase_invariant_distance, random_unitary
from ncn.synth import synthesize

rng = np.random.default_rng(7)
for k in range(1, 5):
    u = random_unitary(2**k, rng)
    for method in ("shannon", "two_level"):
        t = time.perf_counter()
        c = synthesize(u, method)
        dt = time.perf_counter() - t
        n = c.counts()
        d = phase_invariant_distance(circuit_matrix(c), u)
        print(f"k={k} {method:9s} cnot={n[Kind.CNOT]:5d} 1q={n[Kind.GENERIC_1Q]:5d} "
              f"dist={d:.1e} {dt:.2f}s")

# %%
# simple inputs are recognised and stay small
cnot = np.eye(4)[[0, 1, 3, 2]]
print([str(g) for g in synthesize(cnot).gates])
