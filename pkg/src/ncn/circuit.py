"""Gate and circuit representation.

Basis ordering is fixed package-wide: qubit 0 is the most significant bit of a
basis-state index. Controlled gates list their control(s) before the target.
"""

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from .errors import ArityError, DialectError, DimensionError, NonUnitaryError
from .linalg import H, I2, P1, SQRT_NOT, X, negator
from .zyz import TWO_PI, ry, rz


class Kind(enum.Enum):
    # values double as the ncnv1 mnemonics
    NEGATOR = "NEG"
    C_SQRT_NOT = "CSQN"
    C_SQRT_NOT_DAG = "CSQND"
    CNOT = "CNOT"
    TOFFOLI = "TOF"
    HADAMARD = "H"
    RY = "RY"
    RZ = "RZ"
    GENERIC_1Q = "U1Q"
    CONTROLLED_1Q = "CU1Q"
    C_NEGATOR = "CNEG"


class Dialect(enum.Enum):
    GENERAL = "GENERAL"
    NCN = "NCN"


ARITY = {
    Kind.NEGATOR: 1, Kind.HADAMARD: 1, Kind.RY: 1, Kind.RZ: 1, Kind.GENERIC_1Q: 1,
    Kind.C_SQRT_NOT: 2, Kind.C_SQRT_NOT_DAG: 2, Kind.CNOT: 2, Kind.CONTROLLED_1Q: 2,
    Kind.C_NEGATOR: 2, Kind.TOFFOLI: 3,
}
ANGLED = frozenset({Kind.NEGATOR, Kind.RY, Kind.RZ, Kind.C_NEGATOR})
PAYLOAD = frozenset({Kind.GENERIC_1Q, Kind.CONTROLLED_1Q})
SINGLE_QUBIT = frozenset(k for k, n in ARITY.items() if n == 1)
NCN_KINDS = frozenset({Kind.NEGATOR, Kind.C_SQRT_NOT})

_SQRT_NOT_DAG = SQRT_NOT.conj().T


def normalize_angle(theta):
    t = float(theta) % TWO_PI
    return 0.0 if t >= TWO_PI else t


def circular_distance(a, b):
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


@dataclass(frozen=True)
class Gate:
    """One circuit element.

    ``angle`` is stored reduced to [0, 2pi). For NEGATOR and C_NEGATOR this is
    exact; for RY and RZ a reduction by 2pi flips the matrix sign, so the stored
    angle defines the gate.
    ``payload`` holds a 2x2 unitary as four row-major complex numbers.
    """

    kind: Kind
    qubits: tuple
    angle: float | None = None
    payload: tuple | None = field(default=None, repr=False)

    def __post_init__(self):
        qubits = tuple(int(q) for q in self.qubits)
        object.__setattr__(self, "qubits", qubits)
        if len(qubits) != ARITY[self.kind]:
            raise ArityError(f"{self.kind.value} takes {ARITY[self.kind]} qubit(s), got {len(qubits)}")
        if len(set(qubits)) != len(qubits):
            raise ArityError(f"{self.kind.value} has repeated qubit indices {qubits}")
        if min(qubits) < 0:
            raise ArityError(f"negative qubit index in {qubits}")
        if self.kind in ANGLED:
            if self.angle is None or not np.isfinite(self.angle):
                raise ValueError(f"{self.kind.value} needs a finite angle")
            object.__setattr__(self, "angle", normalize_angle(self.angle))
        elif self.angle is not None:
            raise ValueError(f"{self.kind.value} takes no angle")
        if self.kind in PAYLOAD:
            if self.payload is None:
                raise ValueError(f"{self.kind.value} needs a 2x2 matrix payload")
            m = np.array(self.payload, dtype=complex).reshape(2, 2)
            err = linalg.unitarity_error(m)
            if err > linalg.CONSTRUCTION_TOL:
                raise NonUnitaryError(err)
            object.__setattr__(self, "payload", tuple(complex(z) for z in m.ravel()))
        elif self.payload is not None:
            raise ValueError(f"{self.kind.value} takes no matrix payload")

    @property
    def controls(self):
        return self.qubits[:-1]

    @property
    def target(self):
        return self.qubits[-1]

    @property
    def local_matrix(self):
        """2x2 unitary applied to the target (when all controls are |1>)."""
        k = self.kind
        if k in (Kind.NEGATOR, Kind.C_NEGATOR):
            return negator(self.angle)
        if k in (Kind.CNOT, Kind.TOFFOLI):
            return X.copy()
        if k is Kind.C_SQRT_NOT:
            return SQRT_NOT.copy()
        if k is Kind.C_SQRT_NOT_DAG:
            return _SQRT_NOT_DAG.copy()
        if k is Kind.HADAMARD:
            return H.copy()
        if k is Kind.RY:
            return ry(self.angle)
        if k is Kind.RZ:
            return rz(self.angle)
        return np.array(self.payload, dtype=complex).reshape(2, 2)

    def shifted(self, offset):
        return Gate(self.kind, tuple(q + offset for q in self.qubits), self.angle, self.payload)

    def __str__(self):
        s = f"{self.kind.value} " + " ".join(map(str, self.qubits))
        if self.angle is not None:
            s += f" {self.angle:.6g}"
        return s


# constructors -------------------------------------------------------------

def neg(q, theta):
    return Gate(Kind.NEGATOR, (q,), theta)


def csqn(c, t):
    return Gate(Kind.C_SQRT_NOT, (c, t))


def csqnd(c, t):
    return Gate(Kind.C_SQRT_NOT_DAG, (c, t))


def cnot(c, t):
    return Gate(Kind.CNOT, (c, t))


def toffoli(c1, c2, t):
    return Gate(Kind.TOFFOLI, (c1, c2, t))


def hadamard(q):
    return Gate(Kind.HADAMARD, (q,))


def ry_gate(q, theta):
    return Gate(Kind.RY, (q,), theta)


def rz_gate(q, theta):
    return Gate(Kind.RZ, (q,), theta)


def u1q(q, m):
    return Gate(Kind.GENERIC_1Q, (q,), payload=tuple(np.asarray(m, dtype=complex).ravel()))


def cu1q(c, t, m):
    return Gate(Kind.CONTROLLED_1Q, (c, t), payload=tuple(np.asarray(m, dtype=complex).ravel()))


def cneg(c, t, theta):
    return Gate(Kind.C_NEGATOR, (c, t), theta)


# circuits -----------------------------------------------------------------

@dataclass(frozen=True)
class Circuit:
    """Ordered gate list; ``gates[0]`` is applied first."""

    width: int
    gates: tuple = ()
    dialect: Dialect = Dialect.GENERAL
    ancilla: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.width < 1:
            raise DimensionError("circuit width must be at least 1")
        for g in self.gates:
            if max(g.qubits) >= self.width:
                raise ArityError(f"gate {g} addresses a qubit outside width {self.width}")
        if self.dialect is Dialect.NCN:
            for g in self.gates:
                if g.kind not in NCN_KINDS:
                    raise DialectError(f"gate {g.kind.value} not allowed in an NCN circuit")
        if self.ancilla is not None and not 0 <= self.ancilla < self.width:
            raise ArityError(f"ancilla index {self.ancilla} outside width {self.width}")

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def then(self, other):
        """Concatenate: ``self`` first, then ``other``."""
        if other.width != self.width:
            raise DimensionError("cannot concatenate circuits of different width")
        dialect = Dialect.NCN if self.dialect is other.dialect is Dialect.NCN else Dialect.GENERAL
        return Circuit(self.width, self.gates + other.gates, dialect, self.ancilla)

    def counts(self):
        return Counter(g.kind for g in self.gates)

    @cached_property
    def compiled(self):
        """Arrays (targets, control1, control2, matrices) consumed by the simulator."""
        n = len(self.gates)
        tgt = np.empty(n, dtype=np.int64)
        c1 = np.full(n, -1, dtype=np.int64)
        c2 = np.full(n, -1, dtype=np.int64)
        mats = np.empty((n, 2, 2), dtype=complex)
        for i, g in enumerate(self.gates):
            tgt[i] = g.target
            ctl = g.controls
            if ctl:
                c1[i] = ctl[0]
            if len(ctl) > 1:
                c2[i] = ctl[1]
            mats[i] = g.local_matrix
        return tgt, c1, c2, mats


def gate_matrix(g, width):
    """Dense 2^width unitary of ``g`` embedded on its qubits."""
    if max(g.qubits) >= width:
        raise ArityError(f"gate {g} addresses a qubit outside width {width}")
    if 2**width > linalg.MAX_DIM:
        raise DimensionError(f"width {width} exceeds the dense limit of {linalg.MAX_DIM} rows")
    u = g.local_matrix
    if not g.controls:
        return linalg.kron_all([u if q == g.target else I2 for q in range(width)])
    proj = [P1 if q in g.controls else I2 for q in range(width)]
    act = [P1 if q in g.controls else (u if q == g.target else I2) for q in range(width)]
    return np.eye(2**width, dtype=complex) - linalg.kron_all(proj) + linalg.kron_all(act)


def _apply_dense(g, m, width):
    """gate_matrix(g, width) @ m, contracting the 2x2 block on the target axis."""
    t = m.reshape((2,) * width + (-1,))
    sel = [slice(None)] * width
    for q in g.controls:
        sel[q] = 1
    sel = tuple(sel)
    axis = g.target - sum(1 for q in g.controls if q < g.target)
    block = np.moveaxis(t[sel], axis, 0)
    t[sel] = np.moveaxis(np.tensordot(g.local_matrix, block, axes=1), 0, axis)
    return t.reshape(m.shape)


def circuit_matrix(c):
    """Product gate_matrix(g_m) ... gate_matrix(g_1) (last gate leftmost)."""
    if 2**c.width > linalg.MAX_DIM:
        raise DimensionError(f"width {c.width} exceeds the dense limit of {linalg.MAX_DIM} rows")
    m = np.eye(2**c.width, dtype=complex)
    for g in c.gates:
        m = _apply_dense(g, m, c.width)
    return m


def to_ncn(c, ancilla=None):
    """Re-tag a circuit as NCN dialect (validating every gate)."""
    return Circuit(c.width, c.gates, Dialect.NCN, c.ancilla if ancilla is None else ancilla)
