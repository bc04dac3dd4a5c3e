"""
Euler angles of a single-qubit gate
===================================

Every 2x2 unitary is a global phase times Rz(gamma) Ry(beta) Rz(alpha).
"""

# %%
import numpy as np

from ncn.linalg import H, X, random_unitary
from ncn.zyz import ry, rz, zyz_decompose

for name, u in [("H", H), ("X", X)]:
    a = zyz_decompose(u)
    print(name, "phi0=%.4f alpha=%.4f beta=%.4f gamma=%.4f" % tuple(a))

# %%
# reconstruction is literal, phase included
rng = np.random.default_rng(1)
errs = []
for _ in range(1000):
    u = random_unitary(2, rng)
    p, al, be, ga = zyz_decompose(u)
    errs.append(np.abs(np.exp(1j * p) * rz(ga) @ ry(be) @ rz(al) - u).max())
print("worst error over 1000 samples:", max(errs))
