"""Text formats: ``matv1`` matrices, ``ncnv1`` circuits and ``svec1`` state vectors.

All three use qubit 0 as the most significant bit of a basis index.

matv1::

    matv1 <dim>
    <dim lines of dim entries like 0.5-0.5j>

ncnv1::

    ncnv1 <width> <GENERAL|NCN> [ancilla=<idx>]
    NEG 0 3.141592653589793
    CSQN 0 1          # control first
    U1Q 1 <8 floats: row-major re,im>

svec1::

    svec1 <dim>
    <dim lines: re im>
"""

import numpy as np

from .circuit import ANGLED, ARITY, NCN_KINDS, PAYLOAD, Circuit, Dialect, Gate, Kind
from .errors import ArityError, DialectError, NCNError, NonUnitaryError, ParseError
from .linalg import num_qubits

_KINDS = {k.value: k for k in Kind}


def _num(x):
    return repr(float(x))  # shortest round-trip form, 17 significant digits at most


def _complex(z):
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}j"


def _strip(line):
    return line.split("#", 1)[0].strip()


def _lines(text):
    """(line number, content) for non-blank, comment-stripped lines."""
    return [(i, s) for i, s in ((i, _strip(raw)) for i, raw in enumerate(text.splitlines(), 1)) if s]


def _header(lines, magic):
    if not lines:
        raise ParseError(f"empty input, expected a '{magic}' header", 1)
    no, head = lines[0]
    words = head.split()
    if words[0] != magic:
        raise ParseError(f"expected header '{magic}', got {words[0]!r}", no)
    return no, words[1:]


def _int(word, no, what):
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {word!r}", no) from None


def _float(word, no):
    try:
        v = float(word)
    except ValueError:
        raise ParseError(f"expected a number, got {word!r}", no) from None
    if not np.isfinite(v):
        raise ParseError(f"non-finite number {word!r}", no)
    return v


# matv1 --------------------------------------------------------------------

def serialize_matrix(m):
    m = np.asarray(m, dtype=complex)
    rows = [" ".join(_complex(z) for z in row) for row in m]
    return f"matv1 {m.shape[0]}\n" + "\n".join(rows) + "\n"


def parse_matrix(text):
    lines = _lines(text)
    no, args = _header(lines, "matv1")
    if len(args) != 1:
        raise ParseError("header must be 'matv1 <dim>'", no)
    dim = _int(args[0], no, "dimension")
    if dim < 1:
        raise ParseError("dimension must be positive", no)
    body = lines[1:]
    if len(body) != dim:
        raise ParseError(f"expected {dim} matrix rows, found {len(body)}",
                         body[-1][0] if body else no)
    m = np.empty((dim, dim), dtype=complex)
    for r, (no, line) in enumerate(body):
        words = line.split()
        if len(words) != dim:
            raise ParseError(f"row has {len(words)} entries, expected {dim}", no)
        for c, w in enumerate(words):
            try:
                m[r, c] = complex(w)
            except ValueError:
                raise ParseError(f"bad complex entry {w!r}", no) from None
        if not np.all(np.isfinite(m[r])):
            raise ParseError("non-finite matrix entry", no)
    return m


# ncnv1 --------------------------------------------------------------------

def _gate_line(g):
    words = [g.kind.value, *map(str, g.qubits)]
    if g.angle is not None:
        words.append(_num(g.angle))
    if g.payload is not None:
        for z in g.payload:
            words += [_num(z.real), _num(z.imag)]
    return " ".join(words)


def serialize_circuit(c):
    head = f"ncnv1 {c.width} {c.dialect.value}"
    if c.ancilla is not None:
        head += f" ancilla={c.ancilla}"
    return "\n".join([head] + [_gate_line(g) for g in c.gates]) + "\n"


def _parse_gate(words, no):
    kind = _KINDS.get(words[0].upper())
    if kind is None:
        raise ParseError(f"unknown gate {words[0]!r}", no)
    n = ARITY[kind]
    extra = 1 if kind in ANGLED else 8 if kind in PAYLOAD else 0
    if len(words) - 1 != n + extra:
        raise ParseError(f"{kind.value} expects {n} qubit(s) and {extra} number(s), "
                         f"got {len(words) - 1} field(s)", no)
    qubits = tuple(_int(w, no, "qubit index") for w in words[1:n + 1])
    nums = [_float(w, no) for w in words[n + 1:]]
    angle = nums[0] if kind in ANGLED else None
    payload = tuple(complex(nums[i], nums[i + 1]) for i in range(0, 8, 2)) if kind in PAYLOAD else None
    try:
        return Gate(kind, qubits, angle, payload)
    except NonUnitaryError as e:
        raise NonUnitaryError(e.deviation, f"line {no}: {e}") from None
    except NCNError as e:
        raise type(e)(str(e), line=no) from None


def parse_circuit(text):
    lines = _lines(text)
    no, args = _header(lines, "ncnv1")
    if len(args) not in (2, 3):
        raise ParseError("header must be 'ncnv1 <width> <GENERAL|NCN> [ancilla=<idx>]'", no)
    width = _int(args[0], no, "width")
    try:
        dialect = Dialect(args[1].upper())
    except ValueError:
        raise ParseError(f"unknown dialect {args[1]!r}", no) from None
    ancilla = None
    if len(args) == 3:
        key, _, val = args[2].partition("=")
        if key != "ancilla" or not val:
            raise ParseError(f"expected 'ancilla=<idx>', got {args[2]!r}", no)
        ancilla = _int(val, no, "ancilla index")
    gates = []
    for no, line in lines[1:]:
        g = _parse_gate(line.split(), no)
        if max(g.qubits) >= width:
            raise ArityError(f"gate {g} addresses a qubit outside width {width}", no)
        if dialect is Dialect.NCN and g.kind not in NCN_KINDS:
            raise DialectError(f"gate {g.kind.value} not allowed in an NCN circuit", no)
        gates.append(g)
    try:
        return Circuit(width, gates, dialect, ancilla)
    except NCNError as e:
        raise type(e)(str(e), line=lines[0][0]) from None


# svec1 --------------------------------------------------------------------

def serialize_state(s):
    s = np.asarray(s, dtype=complex)
    return f"svec1 {len(s)}\n" + "".join(f"{_num(z.real)} {_num(z.imag)}\n" for z in s)


def parse_state(text):
    lines = _lines(text)
    no, args = _header(lines, "svec1")
    if len(args) != 1:
        raise ParseError("header must be 'svec1 <dim>'", no)
    dim = _int(args[0], no, "dimension")
    try:
        num_qubits(dim)
    except NCNError:
        raise ParseError(f"dimension {dim} is not a power of two", no) from None
    body = lines[1:]
    if len(body) != dim:
        raise ParseError(f"expected {dim} amplitude lines, found {len(body)}",
                         body[-1][0] if body else no)
    s = np.empty(dim, dtype=complex)
    for i, (no, line) in enumerate(body):
        words = line.split()
        if len(words) != 2:
            raise ParseError("amplitude line must be 're im'", no)
        s[i] = complex(_float(words[0], no), _float(words[1], no))
    return s
