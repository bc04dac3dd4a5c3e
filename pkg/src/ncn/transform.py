"""Compile a CNOT + single-qubit circuit into negators and controlled-sqrt(NOT) gates.

The source circuit on k qubits becomes a (k+1)-qubit NCN circuit whose qubit 0
is an ancilla that must be prepared in |->. Source qubit q moves to q + 1.
Each source gate V is lifted to H(a) . controlled-V(a -> ...) . H(a); the lifted
block is rewritten with the rule table of :mod:`ncn.rules`.

The matrix of the output equals ``g(U)`` exactly (no stray phase), where ``U``
is the matrix of the source and ``g(U) = (H (x) I)(|0><0| (x) I + |1><1| (x) U)(H (x) I)``.
"""

import numpy as np

from .circuit import (NCN_KINDS, SINGLE_QUBIT, Circuit, Dialect, Kind, circular_distance,
                      cu1q, hadamard, neg, toffoli)
from .errors import ArityError, DialectError
from .rules import RULES, lifted
from .zyz import zyz_decompose

ANCILLA = 0

# rotation angles this close to 0 (mod 2pi) are dropped: g(Rz(eps)) = I + O(eps)
SKIP_ANGLE = 1e-14

_EXPANSIONS = {
    Kind.CNOT: "cnot",
    Kind.C_SQRT_NOT_DAG: "csqnd",
    Kind.C_NEGATOR: "cneg",
}


def g_lift(gate, ancilla):
    """[H(a), controlled-gate from the ancilla, H(a)] for a CNOT or single-qubit gate.

    ``gate`` must already address the widened register (see :meth:`Gate.shifted`).
    """
    if ancilla in gate.qubits:
        raise ArityError(f"gate {gate} acts on the ancilla qubit {ancilla}")
    if gate.kind is Kind.CNOT:
        mid = toffoli(ancilla, *gate.qubits)
    elif gate.kind in SINGLE_QUBIT:
        mid = cu1q(ancilla, gate.target, gate.local_matrix)
    else:
        raise DialectError(f"cannot lift {gate.kind.value}; expected CNOT or a single-qubit gate")
    return [hadamard(ancilla), mid, hadamard(ancilla)]


def lift(circuit):
    """GENERAL circuit of back-to-back lifted blocks on width + 1 qubits."""
    gates = []
    for g in circuit.gates:
        gates += g_lift(g.shifted(1), ANCILLA)
    return Circuit(circuit.width + 1, gates, Dialect.GENERAL, ANCILLA)


def cancel_hadamard_pairs(circuit):
    """Remove adjacent H . H pairs on the same wire (no gate touching that wire between them)."""
    out = []
    last = {}  # qubit -> index in ``out`` of the latest gate touching it
    for g in circuit.gates:
        if g.kind is Kind.HADAMARD:
            q = g.target
            i = last.get(q)
            if i is not None and out[i] is not None and out[i].kind is Kind.HADAMARD:
                out[i] = None
                del last[q]
                continue
        for q in g.qubits:
            last[q] = len(out)
        out.append(g)
    return Circuit(circuit.width, [g for g in out if g is not None], circuit.dialect,
                   circuit.ancilla)


def expand_helpers(seq):
    """Expand CNOT, C-sqrt(NOT)^dag and controlled-negator gates into controlled-sqrt(NOT)."""
    out = []
    for g in seq:
        if g.kind in NCN_KINDS:
            out.append(g)
        elif g.kind in _EXPANSIONS:
            rule = RULES[_EXPANSIONS[g.kind]]
            params = (g.angle,) if rule.n_params else ()
            out += expand_helpers(rule.build(params, g.qubits))
        else:
            raise DialectError(f"cannot expand {g.kind.value} into NCN gates")
    return out


def _absorb_ancilla_phase(seq, ancilla, phi):
    """Prepend N(phi) on the ancilla, folding it into the first ancilla negator if possible."""
    if circular_distance(phi, 0.0) < SKIP_ANGLE:
        return seq
    for i, g in enumerate(seq):
        if ancilla in g.qubits:
            if g.kind is Kind.NEGATOR:
                return seq[:i] + [neg(ancilla, g.angle + phi)] + seq[i + 1:]
            break
    return [neg(ancilla, phi)] + seq


def rewrite_lifted_1q(u, ancilla, target):
    """NCN gates equal to H(a) . controlled-u(a -> target) . H(a).

    ``u = e^{i p} Rz(c) Ry(b) Rz(a)`` is rewritten rotation by rotation; the
    phase ``p`` becomes the negator N(p) on the ancilla.
    """
    if ancilla == target:
        raise ArityError("ancilla and target must differ")
    p, alpha, beta, gamma = zyz_decompose(u)
    seq = []
    for name, theta in (("lifted_rz", alpha), ("lifted_ry", beta), ("lifted_rz", gamma)):
        if circular_distance(theta, 0.0) >= SKIP_ANGLE:
            seq += RULES[name].build((theta,), (ancilla, target))
    return _absorb_ancilla_phase(expand_helpers(seq), ancilla, p)


def rewrite_lifted_toffoli(ancilla, control, target):
    """NCN gates equal to H(a) . TOFFOLI(a, control -> target) . H(a)."""
    wires = (ancilla, control, target)
    if len(set(wires)) != 3:
        raise ArityError(f"lifted Toffoli needs three distinct qubits, got {wires}")
    return expand_helpers(RULES["lifted_toffoli"].build((), wires))


def _helper_level(gate, ancilla):
    """Lifted block after the Fig.-style rules but before helper expansion (for tracing)."""
    if gate.kind is Kind.CNOT:
        return RULES["lifted_toffoli"].build((), (ancilla, *gate.qubits))
    p, alpha, beta, gamma = zyz_decompose(gate.local_matrix)
    seq = [neg(ancilla, p)] if circular_distance(p, 0.0) >= SKIP_ANGLE else []
    for name, theta in (("lifted_rz", alpha), ("lifted_ry", beta), ("lifted_rz", gamma)):
        if circular_distance(theta, 0.0) >= SKIP_ANGLE:
            seq += RULES[name].build((theta,), (ancilla, gate.target))
    return seq


def _check_source(circuit):
    for g in circuit.gates:
        if g.kind is not Kind.CNOT and g.kind not in SINGLE_QUBIT:
            raise DialectError(f"transform input may contain only CNOT and single-qubit gates, "
                               f"found {g.kind.value}")


def transform(circuit, trace=None):
    """NCN circuit on ``circuit.width + 1`` qubits with the |-> ancilla at qubit 0.

    For every state psi: ``N (|-> (x) psi) = |-> (x) U psi``.
    ``trace``, when given, is called as ``trace(step_name, circuit)`` with the
    intermediate circuits of the pipeline.
    """
    _check_source(circuit)
    gates = []
    for g in circuit.gates:
        g = g.shifted(1)
        if g.kind is Kind.CNOT:
            gates += rewrite_lifted_toffoli(ANCILLA, *g.qubits)
        else:
            gates += rewrite_lifted_1q(g.local_matrix, ANCILLA, g.target)
    out = Circuit(circuit.width + 1, gates, Dialect.NCN, ANCILLA)
    if trace is not None:
        width = circuit.width + 1
        lifted = lift(circuit)
        helpers = []
        for g in circuit.gates:
            helpers += _helper_level(g.shifted(1), ANCILLA)
        trace("source", circuit)
        trace("lifted", lifted)
        trace("lifted_hh_cancelled", cancel_hadamard_pairs(lifted))
        trace("rules_applied", Circuit(width, helpers, Dialect.GENERAL, ANCILLA))
        trace("ncn", out)
    return out


def g_matrix(u):
    """g(U) with the ancilla as qubit 0; the exact matrix ``transform`` realises."""
    return lifted(np.asarray(u, dtype=complex))
