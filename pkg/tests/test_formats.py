import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncn import circuit as ir
from ncn import formats
from ncn.errors import ArityError, DialectError, NonUnitaryError, ParseError
from ncn.grover import run_grover
from ncn.linalg import random_unitary


def test_parse_small_ncn():
    c = formats.parse_circuit("ncnv1 2 NCN\nNEG 0 3.141592653589793\nCSQN 0 1\n")
    assert c.width == 2 and c.dialect is ir.Dialect.NCN and len(c) == 2
    assert c.gates[0] == ir.neg(0, np.pi)
    assert c.gates[1] == ir.csqn(0, 1)


def test_comments_blank_lines_and_ancilla():
    text = "# header comment\nncnv1 3 GENERAL ancilla=0\n\nH 1   # trailing\nTOF 0 1 2\n"
    c = formats.parse_circuit(text)
    assert c.ancilla == 0 and [g.kind for g in c.gates] == [ir.Kind.HADAMARD, ir.Kind.TOFFOLI]


def test_every_kind_round_trips(rng):
    gates = []
    for kind, n in ir.ARITY.items():
        qubits = tuple(rng.choice(3, n, replace=False))
        angle = rng.uniform(0, 7) if kind in ir.ANGLED else None
        payload = tuple(random_unitary(2, rng).ravel()) if kind in ir.PAYLOAD else None
        gates.append(ir.Gate(kind, qubits, angle, payload))
    c = ir.Circuit(3, gates, ancilla=1)
    back = formats.parse_circuit(formats.serialize_circuit(c))
    assert back == c  # bit-exact: repr() floats round-trip


@settings(max_examples=50)
@given(st.lists(st.tuples(st.booleans(), st.integers(0, 3), st.integers(0, 3),
                          st.floats(-1e3, 1e3, allow_nan=False)), max_size=30))
def test_ncn_round_trip_property(items):
    gates = [ir.neg(a, t) if n else ir.csqn(a, b) for n, a, b, t in items if n or a != b]
    c = ir.Circuit(4, gates, ir.Dialect.NCN, 0)
    back = formats.parse_circuit(formats.serialize_circuit(c))
    assert back.gates == c.gates
    for g, h in zip(c.gates, back.gates):
        if g.angle is not None:
            assert abs(g.angle - h.angle) <= 1e-15


def test_grover_output_round_trips():
    c = run_grover(3, 0).ncn
    assert formats.parse_circuit(formats.serialize_circuit(c)) == c


def test_angles_printed_with_full_precision():
    line = formats.serialize_circuit(ir.Circuit(1, [ir.neg(0, 1 / 3)])).splitlines()[1]
    assert len(line.split()[-1].replace(".", "").lstrip("0")) >= 15


@pytest.mark.parametrize("text,err,line", [
    ("ncnv1 2 NCN\nCSQN 0 0\n", ArityError, 2),
    ("ncnv1 2 NCN\nCNOT 0 1\n", DialectError, 2),
    ("ncnv1 2 GENERAL\nNEG 0\n", ParseError, 2),
    ("ncnv1 2 GENERAL\nNEG 0 abc\n", ParseError, 2),
    ("ncnv1 2 GENERAL\n\n# c\nFOO 1\n", ParseError, 4),
    ("ncnv1 2 GENERAL\nH 2\n", ArityError, 2),
    ("ncnv1 2 WEIRD\n", ParseError, 1),
    ("ncnv1 2 NCN ancilla=x\n", ParseError, 1),
    ("ncnv1 2 NCN ancilla=5\n", ArityError, 1),
    ("matv1 2\n", ParseError, 1),
    ("", ParseError, 1),
    ("ncnv1 2 GENERAL\nNEG 0 inf\n", ParseError, 2),
])
def test_parse_errors_carry_line_numbers(text, err, line):
    with pytest.raises(err) as e:
        formats.parse_circuit(text)
    assert e.value.line == line
    assert str(e.value).startswith(f"line {line}:")


def test_non_unitary_payload():
    with pytest.raises(NonUnitaryError) as e:
        formats.parse_circuit("ncnv1 1 GENERAL\nU1Q 0 1 0 1 0 0 0 1 0\n")
    assert e.value.deviation == pytest.approx(1.0)


def test_matrix_round_trip(rng):
    u = random_unitary(8, rng)
    text = formats.serialize_matrix(u)
    assert text.startswith("matv1 8\n")
    assert np.array_equal(formats.parse_matrix(text), u)


def test_matrix_entry_syntax():
    m = formats.parse_matrix("matv1 2\n0.5-0.5j 0.5+0.5j\n0.5+0.5j 0.5-0.5j\n")
    assert m[0, 0] == 0.5 - 0.5j
    m = formats.parse_matrix("matv1 1\n1\n")
    assert m[0, 0] == 1


@pytest.mark.parametrize("text", [
    "matv1 2\n1 0\n",
    "matv1 2\n1 0\n0 1 0\n",
    "matv1 2\n1 0\n0 zz\n",
    "matv1 0\n",
    "svec1 2\n1 0\n",
])
def test_matrix_errors(text):
    with pytest.raises(ParseError):
        formats.parse_matrix(text)


def test_state_round_trip(rng):
    s = rng.normal(size=8) + 1j * rng.normal(size=8)
    assert np.array_equal(formats.parse_state(formats.serialize_state(s)), s)


@pytest.mark.parametrize("text", ["svec1 3\n1 0\n0 0\n0 0\n", "svec1 2\n1 0\n", "svec1 2\n1\n0 0\n"])
def test_state_errors(text):
    with pytest.raises(ParseError):
        formats.parse_state(text)
