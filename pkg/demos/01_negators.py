"""
Negators and line sums
======================

A negator interpolates between the identity and NOT. Its rows and columns
always sum to one, and products of such matrices keep that property.
"""

# %%
import numpy as np

from ncn.linalg import is_xu, line_sum_error, negator

np.set_printoptions(precision=3, suppress=True)
print(negator(np.pi / 2))  # the square root of NOT

# %%
# the angle adds under multiplication
a, b = 0.4, 2.9
print(np.abs(negator(a) @ negator(b) - negator(a + b)).max())

# %%
# a controlled-sqrt(NOT) sandwiched between negators still has unit line sums
csqn = np.eye(4, dtype=complex)
csqn[2:, 2:] = negator(np.pi / 2)
m = np.kron(negator(1.0), negator(2.0)) @ csqn @ np.kron(negator(0.3), np.eye(2))
print("line-sum error:", line_sum_error(m), "xu:", is_xu(m))

# %%
# the Hadamard gate is not in the group
h = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
print("H row sums:", h.sum(axis=1))
