"""Compile any k-qubit unitary into a (k+1)-qubit circuit of negators and
controlled-sqrt(NOT) gates acting on an ancilla prepared in |->.

Typical use::

    import ncn
    src = ncn.synthesize(u)          # CNOT + single-qubit gates
    out = ncn.transform(src)         # negators + controlled-sqrt(NOT), ancilla = qubit 0
    ncn.verify_contract(u, out).ok   # simulate |-> (x) psi for probe states
"""

from .circuit import Circuit, Dialect, Gate, Kind, circuit_matrix, gate_matrix
from .cost import CostReport, count, measured_constants, scaling_table
from .errors import (ArityError, DialectError, DimensionError, EntangledAncillaError, NCNError,
                     NonUnitaryError, ParseError, RuleCheckError)
from .formats import (parse_circuit, parse_matrix, parse_state, serialize_circuit,
                      serialize_matrix, serialize_state)
from .grover import run_grover
from .linalg import is_xu, kron, matmul, negator, phase_invariant_distance
from .rules import RULES, check_rules
from .sim import apply, measure, phi_extend, psi_reduce
from .synth import synthesize, two_level_factorize, two_level_to_gates
from .transform import expand_helpers, g_lift, rewrite_lifted_1q, rewrite_lifted_toffoli, transform
from .verify import verify_contract
from .zyz import ZyzAngles, ry, rz, zyz_decompose

__version__ = "0.1.0"

__all__ = [
    "ArityError", "Circuit", "CostReport", "Dialect", "DialectError", "DimensionError",
    "EntangledAncillaError", "Gate", "Kind", "NCNError", "NonUnitaryError", "ParseError", "RULES",
    "RuleCheckError", "ZyzAngles", "apply", "check_rules", "circuit_matrix", "count",
    "expand_helpers", "g_lift", "gate_matrix", "is_xu", "kron", "matmul", "measure",
    "measured_constants", "negator", "parse_circuit", "parse_matrix", "parse_state",
    "phase_invariant_distance", "phi_extend", "psi_reduce", "rewrite_lifted_1q",
    "rewrite_lifted_toffoli", "run_grover", "ry", "rz", "scaling_table", "serialize_circuit",
    "serialize_matrix", "serialize_state", "synthesize", "transform", "two_level_factorize",
    "two_level_to_gates", "verify_contract", "zyz_decompose",
]
