"""Gate counts of the NCN output against the per-gate ceilings.

Per lifted CNOT the ceilings are 17 controlled-sqrt(NOT) and 11 negators, per
lifted single-qubit gate 64 and 34. They apply when the source has at most
``2 c_cnot + k`` single-qubit gates, which merged synthesizer output always has.
"""

from dataclasses import asdict, dataclass

import numpy as np

from .circuit import SINGLE_QUBIT, Circuit, Dialect, Kind, cnot, u1q
from .errors import DialectError
from .linalg import random_unitary
from .synth import synthesize
from .transform import transform

CSQN_PER_CNOT, CSQN_PER_1Q = 17, 64
NEG_PER_CNOT, NEG_PER_1Q = 11, 34


@dataclass(frozen=True)
class CostReport:
    k: int
    c_cnot: int
    c_s: int
    n_csqn: int
    n_neg: int

    @property
    def bound_csqn(self):
        return CSQN_PER_CNOT * self.c_cnot + CSQN_PER_1Q * self.c_s

    @property
    def bound_neg(self):
        return NEG_PER_CNOT * self.c_cnot + NEG_PER_1Q * self.c_s

    @property
    def bound_csqn_total(self):
        """Ceiling after substituting c_s <= 2 c_cnot + k."""
        return 145 * self.c_cnot + 64 * self.k

    @property
    def premise(self):
        return self.c_s <= 2 * self.c_cnot + self.k

    @property
    def csqn_ok(self):
        return self.n_csqn <= self.bound_csqn

    @property
    def neg_ok(self):
        return self.n_neg <= self.bound_neg

    @property
    def ok(self):
        """Bounds hold, or they are not claimed because the premise fails."""
        return not self.premise or (self.csqn_ok and self.neg_ok
                                    and self.n_csqn <= self.bound_csqn_total)

    def fields(self):
        d = asdict(self)
        d.update(bound_csqn=self.bound_csqn, bound_neg=self.bound_neg,
                 bound_csqn_total=self.bound_csqn_total, premise=self.premise,
                 csqn_ok=self.csqn_ok, neg_ok=self.neg_ok, ok=self.ok)
        return d

    def as_keyvalue(self):
        return "\n".join(f"{key}={_fmt(v)}" for key, v in self.fields().items()) + "\n"

    def as_text(self):
        rows = [
            ("qubits (k)", self.k, ""),
            ("source CNOT", self.c_cnot, ""),
            ("source 1q", self.c_s, f"premise c_s <= 2c+k: {_fmt(self.premise)}"),
            ("controlled-sqrt(NOT)", self.n_csqn, f"<= {self.bound_csqn}  {_mark(self.csqn_ok)}"),
            ("negators", self.n_neg, f"<= {self.bound_neg}  {_mark(self.neg_ok)}"),
            ("csqn vs 145c+64k", self.n_csqn, f"<= {self.bound_csqn_total}"),
        ]
        w = max(len(r[0]) for r in rows)
        v = max(len(str(r[1])) for r in rows)
        return "\n".join(f"{a:<{w}}  {b:>{v}}  {c}".rstrip() for a, b, c in rows) + "\n"


def _fmt(v):
    return str(v).lower() if isinstance(v, bool) else str(v)


def _mark(ok):
    return "ok" if ok else "EXCEEDED"


def count(source, output):
    """CostReport for ``output = transform(source)``."""
    if source.dialect is not Dialect.GENERAL:
        raise DialectError("source circuit must be in the GENERAL dialect")
    if output.dialect is not Dialect.NCN:
        raise DialectError("output circuit must be in the NCN dialect")
    if output.width != source.width + 1:
        raise DialectError(f"output width {output.width} is not source width + 1")
    src, out = source.counts(), output.counts()
    c_s = sum(n for kind, n in src.items() if kind in SINGLE_QUBIT)
    return CostReport(source.width, src[Kind.CNOT], c_s, out[Kind.C_SQRT_NOT], out[Kind.NEGATOR])


def measured_constants():
    """(csqn per CNOT, neg per CNOT, csqn per 1q, neg per 1q) from single-gate probes.

    The 1q probe is a generic unitary, so all three rotations and the phase are
    nonzero; other gates can only come out cheaper.
    """
    probe_cnot = Circuit(2, [cnot(0, 1)])
    rng = np.random.default_rng(0)
    probe_1q = Circuit(1, [u1q(0, random_unitary(2, rng))])
    a, b = count(probe_cnot, transform(probe_cnot)), count(probe_1q, transform(probe_1q))
    return a.n_csqn, a.n_neg, b.n_csqn, b.n_neg


@dataclass(frozen=True)
class ScalingRow:
    k: int
    c_cnot: float
    c_s: float
    n_csqn: float
    n_neg: float
    bound_csqn: float


def scaling_table(k_range=range(1, 6), samples=10, seed=0, method="shannon"):
    """Mean counts of the full pipeline over ``samples`` Haar-random unitaries per k."""
    rng = np.random.default_rng(seed)
    rows = []
    for k in k_range:
        reps = []
        for _ in range(samples):
            src = synthesize(random_unitary(2**k, rng), method)
            reps.append(count(src, transform(src)))
        means = [float(np.mean([getattr(r, a) for r in reps]))
                 for a in ("c_cnot", "c_s", "n_csqn", "n_neg", "bound_csqn")]
        rows.append(ScalingRow(k, *means))
    return rows


def format_scaling(rows):
    head = f"{'k':>2} {'c_cnot':>9} {'c_s':>9} {'n_csqn':>10} {'n_neg':>10} {'bound':>10} {'ratio':>6}"
    lines = [head]
    prev = None
    for r in rows:
        ratio = f"{r.n_csqn / prev:6.2f}" if prev else f"{'-':>6}"
        lines.append(f"{r.k:>2} {r.c_cnot:9.1f} {r.c_s:9.1f} {r.n_csqn:10.1f} {r.n_neg:10.1f} "
                     f"{r.bound_csqn:10.1f} {ratio}")
        prev = r.n_csqn
    return "\n".join(lines) + "\n"
