"""Decompose a 2^k x 2^k unitary into CNOT and single-qubit gates.

Two constructions are provided:

``"shannon"`` (default)
    Cosine-sine split of the matrix into two multiplexed (k-1)-qubit blocks and a
    uniformly controlled Ry; each multiplexor is demultiplexed into two
    (k-1)-qubit unitaries around a uniformly controlled Rz. Uniformly controlled
    rotations use the Gray-code CNOT ladder. CNOT count is
    ``3/4 4^k - 3/2 2^k``.

``"two_level"``
    Givens-style elimination into two-level unitaries on basis states that
    differ in one bit, each realised as a multi-controlled single-qubit gate
    expanded through the V / V^dag / V ladder into CNOT and single-qubit gates.

Before either runs, :func:`synthesize` recognises two easy shapes exactly: a
tensor product of single-qubit gates (no CNOT) and a single controlled gate on
one qubit pair (at most two CNOTs). Both finish with
:func:`merge_single_qubit_gates`, so the single-qubit count never exceeds
``2 * n_cnot + k``.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cossin, polar, schur

from . import linalg
from .circuit import Circuit, Dialect, Kind, cnot, cu1q, gate_matrix, u1q
from .errors import DimensionError
from .linalg import X, check_unitary
from .zyz import ry, rz, zyz_decompose

#: entries below this magnitude count as already eliminated
ZERO_TOL = 1e-12
#: max-entry tolerance for recognising product and single-controlled inputs
SHAPE_TOL = 1e-11

_T = np.diag([1, np.exp(0.25j * np.pi)])


def _is_phase_identity(u, tol=ZERO_TOL):
    return abs(u[0, 1]) < tol and abs(u[1, 0]) < tol and abs(u[0, 0] - u[1, 1]) < tol


def _close(a, b, tol=ZERO_TOL):
    return np.max(np.abs(np.asarray(a) - np.asarray(b))) < tol


def merge_single_qubit_gates(circuit):
    """Fuse runs of single-qubit gates on each wire; drop runs that multiply to a phase.

    The result equals the input up to a global phase.
    """
    pending = {}
    out = []

    def flush(q):
        u = pending.pop(q, None)
        if u is not None and not _is_phase_identity(u):
            out.append(u1q(q, u))

    for g in circuit.gates:
        if len(g.qubits) == 1:
            q = g.target
            pending[q] = g.local_matrix @ pending.get(q, np.eye(2))
        else:
            for q in g.qubits:
                flush(q)
            out.append(g)
    for q in sorted(pending):
        flush(q)
    return Circuit(circuit.width, out, Dialect.GENERAL, circuit.ancilla)


# controlled gates -----------------------------------------------------------

def controlled_1q_gates(u, control, target):
    """Controlled-u from two CNOTs and single-qubit gates.

    With ``u = e^{i p} Rz(g) Ry(b) Rz(a)``: ``A = Rz(g) Ry(b/2)``,
    ``B = Ry(-b/2) Rz(-(a+g)/2)``, ``C = Rz((a-g)/2)``; ``ABC = I`` and
    ``A X B X C = Rz(g) Ry(b) Rz(a)``.
    """
    u = np.asarray(u, dtype=complex)
    if _close(u, X):
        return [cnot(control, target)]
    p, a, b, g = zyz_decompose(u)
    mats_c = rz((a - g) / 2)
    mats_b = ry(-b / 2) @ rz(-(a + g) / 2)
    mats_a = rz(g) @ ry(b / 2)
    gates = []
    if not _close(mats_c, np.eye(2)):
        gates.append(u1q(target, mats_c))
    gates += [cnot(control, target), u1q(target, mats_b), cnot(control, target)]
    if not _close(mats_a, np.eye(2)):
        gates.append(u1q(target, mats_a))
    if not _close(p, 0.0) and not _close(p, 2 * np.pi):
        gates.append(u1q(control, np.diag([1, np.exp(1j * p)])))
    return gates


def toffoli_gates(c1, c2, target):
    """Six-CNOT Toffoli."""
    h = linalg.H
    tdg = _T.conj().T
    return [
        u1q(target, h), cnot(c2, target), u1q(target, tdg), cnot(c1, target),
        u1q(target, _T), cnot(c2, target), u1q(target, tdg), cnot(c1, target),
        u1q(c2, _T), u1q(target, h @ _T), cnot(c1, c2), u1q(c1, _T), u1q(c2, tdg),
        cnot(c1, c2),
    ]


def _sqrt_unitary(u):
    t, z = schur(u, output="complex")
    return z @ np.diag(np.sqrt(np.diag(t))) @ z.conj().T


def multi_controlled_gates(u, controls, target):
    """u on ``target`` when every qubit in ``controls`` is |1>; CNOT + single-qubit only.

    Uses C^n(U) = C(V) . C^{n-1}X . C(V^dag) . C^{n-1}X . C^{n-1}(V) with V^2 = U.
    """
    u = np.asarray(u, dtype=complex)
    controls = list(controls)
    if not controls:
        return [] if _close(u, np.eye(2)) else [u1q(target, u)]
    if len(controls) == 1:
        return controlled_1q_gates(u, controls[0], target)
    if len(controls) == 2 and _close(u, X):
        return toffoli_gates(controls[0], controls[1], target)
    v = _sqrt_unitary(u)
    last, rest = controls[-1], controls[:-1]
    mcx = multi_controlled_gates(X, rest, last)
    return (controlled_1q_gates(v, last, target) + mcx
            + controlled_1q_gates(v.conj().T, last, target) + mcx
            + multi_controlled_gates(v, rest, target))


def _pattern_controlled(u, pattern, target, k):
    """u on ``target`` conditioned on the other qubits matching ``pattern`` (a basis index)."""
    zeros = [q for q in range(k) if q != target and not (pattern >> (k - 1 - q)) & 1]
    flips = [u1q(q, X) for q in zeros]
    controls = [q for q in range(k) if q != target]
    return flips + multi_controlled_gates(u, controls, target) + flips


# two-level factorisation ----------------------------------------------------

@dataclass(frozen=True)
class TwoLevelFactor:
    """Unitary acting as ``core`` on span{|i>, |j>} (i < j) and as identity elsewhere."""

    i: int
    j: int
    core: np.ndarray

    def __post_init__(self):
        if not 0 <= self.i < self.j:
            raise ValueError(f"need 0 <= i < j, got ({self.i}, {self.j})")
        object.__setattr__(self, "core", check_unitary(self.core, linalg.CONSTRUCTION_TOL))

    def embed(self, dim):
        m = np.eye(dim, dtype=complex)
        idx = [self.i, self.j]
        m[np.ix_(idx, idx)] = self.core
        return m


def _gray(t):
    return t ^ (t >> 1)


def _factor(i, j, core):
    if i > j:
        return TwoLevelFactor(j, i, X @ core @ X)
    return TwoLevelFactor(i, j, core)


def two_level_factorize(u):
    """Factor ``u`` into two-level unitaries, returned in application order.

    Columns are processed in Gray-code order of the basis, and each
    subdiagonal entry is eliminated against its Gray-code predecessor, so every
    factor couples two basis states that differ in exactly one bit.
    """
    w = check_unitary(u)
    d = w.shape[0]
    linalg.num_qubits(d)
    w = w.copy()
    order = [_gray(t) for t in range(d)]
    elim = []  # u = elim[0] @ elim[1] @ ... @ diag
    for t in range(d - 1):
        col = order[t]
        for s in range(d - 1, t, -1):
            i, j = order[s - 1], order[s]
            a, b = w[i, col], w[j, col]
            if abs(b) < ZERO_TOL:
                continue
            r = np.hypot(abs(a), abs(b))
            core = np.array([[a, -np.conj(b)], [b, np.conj(a)]]) / r
            rows = [i, j]
            w[rows] = core.conj().T @ w[rows]
            elim.append([i, j, core])
    # the remainder is diagonal; move each phase left into the nearest factor touching it
    extra = {}
    for idx in range(d):
        p = w[idx, idx] / abs(w[idx, idx])
        if abs(p - 1) < ZERO_TOL:
            continue
        for f in reversed(elim):
            if idx in f[:2]:
                pos = f.index(idx)
                f[2] = f[2] @ np.diag([p, 1] if pos == 0 else [1, p])
                break
        else:
            pair = (idx & ~1, idx | 1)
            core = extra.get(pair, np.eye(2, dtype=complex))
            extra[pair] = core @ np.diag([p, 1] if idx == pair[0] else [1, p])
    factors = [_factor(i, j, core) for (i, j), core in extra.items()]
    factors += [_factor(i, j, core) for i, j, core in reversed(elim)]
    return factors


def two_level_to_gates(factor, k):
    """Circuit over ``k`` qubits realising the embedded factor.

    Basis states are walked along a Gray path from ``i`` towards ``j`` with
    multi-controlled NOTs, the core is applied as a multi-controlled gate on the
    last differing bit, and the walk is undone.
    """
    i, j = factor.i, factor.j
    if j >= 2**k:
        raise DimensionError(f"factor indices ({i}, {j}) exceed {k} qubits")
    diff = i ^ j
    bits = [q for q in range(k) if (diff >> (k - 1 - q)) & 1]
    path = [i]
    for q in bits[:-1]:
        path.append(path[-1] ^ (1 << (k - 1 - q)))
    # each step is an involution as a block, though not gate by gate (T gates)
    steps = [_pattern_controlled(X, a, q, k) for a, q in zip(path[:-1], bits[:-1])]
    walk = [g for step in steps for g in step]
    unwalk = [g for step in reversed(steps) for g in step]
    q = bits[-1]
    last = path[-1]
    # core row 0 belongs to |i>, now sitting at ``last``
    core = factor.core if not (last >> (k - 1 - q)) & 1 else X @ factor.core @ X
    gates = walk + _pattern_controlled(core, j, q, k) + unwalk
    return Circuit(k, gates, Dialect.GENERAL)


# Shannon decomposition ------------------------------------------------------

def uniformly_controlled_rotation(axis, angles, controls, target):
    """Apply R_axis(angles[x]) to ``target`` when ``controls`` read x (controls[0] = MSB).

    Gray-code ladder: 2^m rotations and 2^m CNOTs for m controls.
    """
    rot = {"y": ry, "z": rz}[axis]
    angles = np.asarray(angles, dtype=float)
    m = len(controls)
    if m == 0:
        return [u1q(target, rot(angles[0]))]
    n = 2**m
    gray = [_gray(j) for j in range(n)]
    x = np.arange(n)
    sign = np.array([[(-1) ** bin(xx & g).count("1") for g in gray] for xx in x])
    phis = sign.T @ angles / n
    gates = []
    for jdx in range(n):
        gates.append(u1q(target, rot(phis[jdx])))
        flip = gray[jdx] ^ gray[(jdx + 1) % n]
        bit = flip.bit_length() - 1
        gates.append(cnot(controls[m - 1 - bit], target))
    return gates


def _demultiplex(a, b, qubits):
    """Gates for diag(a, b) selected by qubits[0], acting on qubits[1:]."""
    t, v = schur(a @ b.conj().T, output="complex")
    d = np.sqrt(np.diag(t))
    w = np.diag(d) @ v.conj().T @ b
    return (_shannon(w, qubits[1:])
            + uniformly_controlled_rotation("z", -2 * np.angle(d), qubits[1:], qubits[0])
            + _shannon(v, qubits[1:]))


def _shannon(u, qubits):
    if len(qubits) == 1:
        return [u1q(qubits[0], u)]
    h = u.shape[0] // 2
    (u1, u2), theta, (v1, v2) = cossin(u, p=h, q=h, separate=True)
    return (_demultiplex(v1, v2, qubits)
            + uniformly_controlled_rotation("y", -2 * theta, qubits[1:], qubits[0])
            + _demultiplex(u1, u2, qubits))


def shannon_cnot_count(k):
    """CNOTs emitted by the Shannon construction before single-qubit merging."""
    return 0 if k < 2 else 3 * 4**k // 4 - 3 * 2**k // 2


# exact shortcuts -------------------------------------------------------------

def local_factors(u):
    """[u_0, ..., u_{k-1}] with u = u_0 (x) ... (x) u_{k-1}, or None if u is entangling."""
    u = np.asarray(u, dtype=complex)
    if u.shape[0] == 2:
        return [u]
    d = u.shape[0] // 2
    r = u.reshape(2, d, 2, d).transpose(0, 2, 1, 3).reshape(4, d * d)
    left, sv, _ = np.linalg.svd(r)
    if sv[1] > SHAPE_TOL * sv[0]:
        return None
    a = polar(left[:, 0].reshape(2, 2))[0]
    rest = (np.kron(a.conj().T, np.eye(d)) @ u)[:d, :d]
    if not _close(np.kron(a, rest), u, SHAPE_TOL):
        return None
    tail = local_factors(rest)
    return None if tail is None else [a] + tail


def single_controlled(u):
    """(phase, control, target, v) with u = phase * controlled-v on one pair, or None."""
    u = np.asarray(u, dtype=complex)
    k = linalg.num_qubits(u.shape[0])
    phase = u[0, 0]
    if k < 2 or abs(abs(phase) - 1) > SHAPE_TOL:
        return None
    for c in range(k):
        for t in range(k):
            if c == t:
                continue
            i0 = 1 << (k - 1 - c)
            idx = [i0, i0 | 1 << (k - 1 - t)]
            v = u[np.ix_(idx, idx)] / phase
            if not linalg.is_unitary(v, SHAPE_TOL):
                continue
            if _close(phase * gate_matrix(cu1q(c, t, v), k), u, SHAPE_TOL):
                return phase, c, t, v
    return None


def _shortcut(u, k):
    """Gates for product or single-controlled ``u``; None when neither shape fits."""
    factors = local_factors(u)
    if factors is not None:
        return [u1q(q, f) for q, f in enumerate(factors)]
    if k <= 6:  # the pair scan builds dense 2^k matrices
        found = single_controlled(u)
        if found is not None:
            _, c, t, v = found
            return controlled_1q_gates(v, c, t)
    return None


METHODS = ("shannon", "two_level")


def synthesize(u, method="shannon"):
    """CNOT + GENERIC_1Q circuit equal to ``u`` up to global phase."""
    u = linalg.as_matrix(u)
    k = linalg.num_qubits(u.shape[0])
    if k < 1:
        raise DimensionError("need at least one qubit")
    u = check_unitary(u)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    gates = _shortcut(u, k)
    if gates is None and method == "shannon":
        gates = _shannon(u, list(range(k)))
    elif gates is None:
        gates = []
        for f in two_level_factorize(u):
            gates += two_level_to_gates(f, k).gates
    c = merge_single_qubit_gates(Circuit(k, gates, Dialect.GENERAL))
    assert all(g.kind in (Kind.CNOT, Kind.GENERIC_1Q) for g in c.gates)
    return c
