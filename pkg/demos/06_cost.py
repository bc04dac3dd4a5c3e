"""
Gate counts
===========

Per lifted CNOT the rewrite uses 16 controlled-sqrt(NOT) and 11 negators, per
lifted single-qubit gate at most 64 and 34. The totals grow about fourfold per
added qubit, following the CNOT count of the synthesizer.
"""

# %%
import numpy as np

from ncn.cost import count, format_scaling, measured_constants, scaling_table
from ncn.linalg import random_unitary
from ncn.synth import synthesize
from ncn.transform import transform

print("measured (csqn/CNOT, neg/CNOT, csqn/1q, neg/1q):", measured_constants())

# %%
src = synthesize(random_unitary(8, np.random.default_rng(0)))
print(count(src, transform(src)).as_text())

# %%
print(format_scaling(scaling_table(range(1, 6), samples=10)))
