"""Rewrite rules turning Hadamard-sandwiched controlled gates into negator circuits.

Every rule carries a builder (parameters, wires) -> gate list and an
independent reference matrix. The whole table is checked at import time on
random parameters; a rule whose replacement does not reproduce its pattern
stops the import with :class:`RuleCheckError`.

Wire conventions: for the lifted rules wire 0 is the ancilla; for the helper
expansions wire 0 is the control.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .circuit import Circuit, circuit_matrix, cneg, cnot, csqn, csqnd, neg
from .errors import RuleCheckError
from .linalg import H, I2, P0, P1, SQRT_NOT, X, kron_all, negator, phase_invariant_distance
from .zyz import ry, rz

PI = np.pi
RULE_TOL = 1e-10
SELF_CHECK_SAMPLES = 50


def lifted(u):
    """(H (x) I) (|0><0| (x) I + |1><1| (x) u) (H (x) I) with the ancilla as wire 0."""
    u = np.asarray(u, dtype=complex)
    dim = u.shape[0]
    hh = np.kron(H, np.eye(dim))
    return hh @ (np.kron(P0, np.eye(dim)) + np.kron(P1, u)) @ hh


def controlled(u):
    return np.kron(P0, I2) + np.kron(P1, np.asarray(u, dtype=complex))


@dataclass(frozen=True)
class RewriteRule:
    name: str
    pattern: str
    n_params: int
    n_wires: int
    build: Callable
    reference: Callable

    def replacement_matrix(self, params):
        gates = self.build(params, tuple(range(self.n_wires)))
        return circuit_matrix(Circuit(self.n_wires, gates))

    def self_check(self, rng, samples=SELF_CHECK_SAMPLES):
        """Largest phase-invariant distance over random parameter draws."""
        worst = 0.0
        for _ in range(samples if self.n_params else 1):
            params = tuple(rng.uniform(0, 2 * PI, self.n_params))
            d = phase_invariant_distance(self.replacement_matrix(params), self.reference(params))
            worst = max(worst, d)
        return worst


# lifted single-qubit rotations: H . controlled-R(theta) . H on (ancilla, target)

def _lifted_rz(params, wires):
    (theta,), (a, t) = params, wires
    return [cneg(t, a, theta / 2), neg(t, PI), cneg(t, a, -theta / 2), neg(t, PI)]


def _lifted_ry(params, wires):
    (theta,), (a, t) = params, wires
    return [
        cnot(a, t), cnot(t, a), csqnd(a, t), neg(a, theta / 2), cnot(a, t),
        neg(a, -theta / 2), csqnd(a, t), cnot(t, a), cnot(a, t),
    ]


def _lifted_toffoli(params, wires):
    a, c, t = wires
    return [
        csqn(c, t),
        neg(a, -PI / 2), neg(c, -PI / 2), cnot(a, c), neg(a, PI / 2), cnot(a, c),
        csqnd(c, t),
        neg(a, -PI / 2), neg(c, -PI / 2), cnot(a, c), neg(a, PI / 2), cnot(a, c),
        neg(a, -PI / 4), neg(t, -PI / 4), cnot(a, t), neg(a, -PI / 4), cnot(a, t),
        neg(a, PI / 2), neg(t, PI / 2),
    ]


def _toffoli_reference(params):
    tof = np.eye(8, dtype=complex)
    tof[6:, 6:] = X
    h = kron_all([H, I2, I2])
    return h @ tof @ h


# controlled-sqrt(NOT) expansions of the helper gates

def _cnot_as_csqn(params, wires):
    c, t = wires
    return [csqn(c, t), csqn(c, t)]


def _csqnd_as_csqn(params, wires):
    c, t = wires
    return [csqn(c, t)] * 3


def _cneg_as_helpers(params, wires):
    (theta,), (c, t) = params, wires
    return [
        neg(c, PI / 4), neg(t, theta / 2), cnot(c, t), neg(c, -PI / 4), csqnd(c, t),
        neg(c, theta / 2), cnot(c, t), neg(c, -theta / 2), csqnd(c, t),
        neg(c, PI / 4), cnot(c, t), neg(c, -PI / 4),
    ]


RULES = {
    r.name: r
    for r in [
        RewriteRule("lifted_rz", "H(a) . C-Rz(theta)(a->t) . H(a)", 1, 2,
                    _lifted_rz, lambda p: lifted(rz(p[0]))),
        RewriteRule("lifted_ry", "H(a) . C-Ry(theta)(a->t) . H(a)", 1, 2,
                    _lifted_ry, lambda p: lifted(ry(p[0]))),
        RewriteRule("lifted_toffoli", "H(a) . TOF(a, c->t) . H(a)", 0, 3,
                    _lifted_toffoli, _toffoli_reference),
        RewriteRule("cnot", "CNOT(c->t)", 0, 2, _cnot_as_csqn, lambda p: controlled(X)),
        RewriteRule("csqnd", "C-sqrt(NOT)^dag(c->t)", 0, 2, _csqnd_as_csqn,
                    lambda p: controlled(SQRT_NOT.conj().T)),
        RewriteRule("cneg", "C-N(theta)(c->t)", 1, 2, _cneg_as_helpers,
                    lambda p: controlled(negator(p[0]))),
    ]
}


def check_rules(seed=0, tol=RULE_TOL, samples=SELF_CHECK_SAMPLES):
    """Run every rule's self-check; return {name: worst distance}. Raises on failure."""
    rng = np.random.default_rng(seed)
    report = {}
    for name, rule in RULES.items():
        worst = rule.self_check(rng, samples)
        if not worst <= tol:
            raise RuleCheckError(f"rewrite rule {name!r} ({rule.pattern}) fails its matrix "
                                 f"self-check: phase distance {worst:.3e} > {tol:.0e}")
        report[name] = worst
    return report


SELF_CHECK = check_rules()
