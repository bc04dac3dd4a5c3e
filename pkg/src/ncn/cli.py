"""Command-line entry point: ``ncn transpile | verify | grover``.

Exit codes: 0 success, 2 unreadable/malformed input or dimension mismatch,
3 non-unitary input, 4 internal verification failure, 5 verify contract failure.
"""

import argparse
import sys
from pathlib import Path

from . import formats, sim
from .circuit import SINGLE_QUBIT, Dialect, Kind
from .cost import count
from .errors import NCNError, NonUnitaryError
from .grover import run_grover
from .linalg import VERIFY_TOL, check_unitary
from .synth import METHODS, synthesize
from .transform import transform
from .verify import N_RANDOM, verify_contract

EXIT_OK, EXIT_PARSE, EXIT_NONUNITARY, EXIT_INTERNAL, EXIT_CONTRACT = 0, 2, 3, 4, 5


def _err(msg):
    print(f"error: {msg}", file=sys.stderr)


def _read(path):
    return Path(path).read_text()


def _load_source(text, method):
    """(unitary, GENERAL source circuit) from matv1 or ncnv1 text."""
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if head == "matv1":
        u = check_unitary(formats.parse_matrix(text))
        return u, synthesize(u, method)
    if head == "ncnv1":
        c = formats.parse_circuit(text)
        if c.dialect is Dialect.NCN:
            raise NCNError("input circuit is already NCN; transpile expects a GENERAL circuit")
        u = sim.unitary(c)
        if all(g.kind is Kind.CNOT or g.kind in SINGLE_QUBIT for g in c.gates):
            return u, c
        return u, synthesize(u, method)
    raise NCNError(f"unrecognised input format {head!r}; expected matv1 or ncnv1", 1)


def cmd_transpile(args):
    try:
        u, source = _load_source(_read(args.input), args.method)
    except NonUnitaryError as e:
        _err(f"{e}")
        print(f"max deviation {e.deviation:.6e}")
        return EXIT_NONUNITARY
    except (NCNError, OSError) as e:
        _err(e)
        return EXIT_PARSE

    steps = []
    out = transform(source, trace=(lambda name, c: steps.append((name, c))) if args.trace else None)
    report = verify_contract(u, out, args.tol)
    if not report.ok:
        _err(f"internal verification failed: deficit {report.worst_deficit:.3e}, "
             f"ancilla distance {report.worst_ancilla:.3e}; no output written")
        return EXIT_INTERNAL

    Path(args.out).write_text(formats.serialize_circuit(out))
    if args.trace:
        tdir = Path(f"{args.out}.trace")
        tdir.mkdir(parents=True, exist_ok=True)
        for i, (name, c) in enumerate(steps):
            (tdir / f"{i:02d}_{name}.ncnv1").write_text(formats.serialize_circuit(c))
    cost = count(source, out)
    print(cost.as_keyvalue() if args.keyvalue else cost.as_text(), end="")
    print(f"verification: worst deficit {report.worst_deficit:.3e} over {report.n_states} states, "
          f"ancilla distance {report.worst_ancilla:.3e}")
    return EXIT_OK


def cmd_verify(args):
    try:
        u = formats.parse_matrix(_read(args.unitary))
        c = formats.parse_circuit(_read(args.circuit))
        report = verify_contract(u, c, args.tol, args.random, args.seed)
    except (NCNError, OSError) as e:
        _err(e)
        return EXIT_PARSE
    print(f"worst fidelity deficit {report.worst_deficit:.6e} over {report.n_states} states")
    print(f"worst ancilla trace distance {report.worst_ancilla:.6e}")
    print("PASS" if report.ok else f"FAIL (tol {args.tol:g})")
    return EXIT_OK if report.ok else EXIT_CONTRACT


def cmd_grover(args):
    if not 0 <= args.omega <= 3:
        _err("--omega must be 0, 1, 2 or 3")
        return EXIT_PARSE
    run = run_grover(args.omega, args.shots, args.seed)
    hist = run.histogram
    n = run.ncn.counts()
    print(f"# omega={args.omega} shots={args.shots} seed={args.seed} "
          f"csqn={n[Kind.C_SQRT_NOT]} neg={n[Kind.NEGATOR]}")
    print("# outcome  exact probability")
    print("\n".join(hist.lines()))
    print("# outcome  sampled count")
    print("\n".join(f"{hist.label(i)}  {c}" for i, c in enumerate(hist.counts)))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="ncn", description="Compile unitaries to negator + "
                                "controlled-sqrt(NOT) circuits and check them by simulation.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transpile", help="matv1 matrix or ncnv1 GENERAL circuit -> ncnv1 NCN circuit")
    t.add_argument("--input", required=True)
    t.add_argument("--out", required=True)
    t.add_argument("--trace", action="store_true", help="write snapshots to <out>.trace/")
    t.add_argument("--method", choices=METHODS, default="shannon")
    t.add_argument("--tol", type=float, default=VERIFY_TOL)
    t.add_argument("--keyvalue", action="store_true", help="print the cost report as key=value")
    t.set_defaults(func=cmd_transpile)

    v = sub.add_parser("verify", help="check an NCN circuit against a unitary")
    v.add_argument("--unitary", required=True)
    v.add_argument("--circuit", required=True)
    v.add_argument("--tol", type=float, default=VERIFY_TOL)
    v.add_argument("--random", type=int, default=N_RANDOM, help="number of random probe states")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("grover", help="two-qubit Grover search through the NCN pipeline")
    g.add_argument("--omega", type=int, required=True)
    g.add_argument("--shots", type=int, default=1000)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_grover)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
