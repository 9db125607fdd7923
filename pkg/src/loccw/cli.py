"""``loccw`` command-line tool.

Exit codes: 0 success / certified, 1 error or failed check, 2 inconclusive
(a nontrivial orthogonality-preserving measurement exists), 3 unsupported
dimensions. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .errors import LoccwError, MalformedInput, UnsupportedDimensions
from .families import build_general, build_odd_square, complete_to_basis
from .fileio import (
    dumps_json,
    format_rational,
    parse_states,
    parse_tiles,
    serialize_states,
    serialize_tiles,
    verdict_to_json,
)
from .locc import CERTIFIED, assemble_constraints, solution_space, verdict
from .oracle import brute_force_orthogonality, float_nullity
from .render import render_ascii, render_svg
from .sep import distinguish, projective_measurement
from .states import validate_orthogonality

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


def _color(text: str, code: str) -> str:
    if os.environ.get("LOCCW_COLOR", "1") == "0" or not sys.stdout.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise LoccwError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: str | None, data: bytes | str) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if path is None or path == "-":
        sys.stdout.flush()
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise LoccwError(f"cannot write {path}: {exc.strerror}") from exc


def cmd_construct(args) -> int:
    if args.family == "odd-square":
        if args.d is None:
            raise MalformedInput("--family odd-square needs --d")
        diagram, states = build_odd_square(args.d)
    else:
        if args.m is None or args.n is None:
            raise MalformedInput("--family general needs --m and --n")
        diagram, states = build_general(args.m, args.n)
    if args.out is None and not args.json:
        _write(None, serialize_states(states))
    elif args.out is not None:
        _write(args.out, serialize_states(states))
    if args.tiles_out:
        _write(args.tiles_out, serialize_tiles(diagram))
    if args.json:
        _write(None, dumps_json({
            "family": args.family,
            "dims": {"a": states.m, "b": states.n},
            "stateCount": len(states),
            "tileCount": len(diagram.tiles),
            "out": args.out,
            "tilesOut": args.tiles_out,
        }))
    elif args.out is not None:
        print(f"wrote {len(states)} states ({states.m}x{states.n}) to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_check_locc(args) -> int:
    states = parse_states(_read(args.states))
    v = verdict(states, args.party)
    if args.json:
        _write(None, dumps_json(verdict_to_json(v)))
    else:
        dims = " ".join(
            f"dim{p}={d}" for p, d in (("A", v.dim_a), ("B", v.dim_b)) if d is not None
        )
        ok = v.status == CERTIFIED
        print(f"{v.m}x{v.n}, {v.state_count} states: {dims}")
        print(_color(v.status, "32" if ok else "33"))
        if v.witness is not None:
            w = v.witness
            print(f"witness on party {w.party}, epsilon = {format_rational(w.epsilon)}")
            for k, e in enumerate(w.effects, 1):
                print(f"E{k} =")
                for row in e:
                    print("  " + " ".join(str(z) for z in row))
    return EXIT_OK if v.status == CERTIFIED else EXIT_INCONCLUSIVE


def cmd_complete(args) -> int:
    states = parse_states(_read(args.states))
    diagram = parse_tiles(_read(args.tiles))
    basis = complete_to_basis(diagram, states)
    _write(args.out, serialize_states(basis))
    if args.json:
        _write(None, dumps_json({
            "dims": {"a": basis.m, "b": basis.n},
            "inputCount": len(states),
            "added": len(basis) - len(states),
            "stateCount": len(basis),
            "out": args.out,
        }))
    elif args.out not in (None, "-"):
        print(f"added {len(basis) - len(states)} states; basis of {len(basis)} written to {args.out}",
              file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    states = parse_states(_read(args.states))
    report = validate_orthogonality(states)
    result = {
        "dims": {"a": states.m, "b": states.n},
        "stateCount": len(states),
        "orthogonal": report.ok,
        "offending": [[a, b, str(v)] for a, b, v in report.offending],
    }
    ok = report.ok
    if args.paranoid:
        brute = brute_force_orthogonality(states)
        checks = {"bruteForceOrthogonal": brute, "agree": brute == report.ok}
        ok = ok and brute
        if report.ok:
            for party in ("A", "B"):
                exact = solution_space(states, party).dimension
                approx = float_nullity(assemble_constraints(states, party))
                checks[f"nullity{party}"] = {"exact": exact, "float": approx}
                ok = ok and exact == approx
        result["paranoid"] = checks
    result["ok"] = ok
    if args.json:
        _write(None, dumps_json(result))
    else:
        print(f"{states.m}x{states.n}, {len(states)} states: "
              + (_color("orthogonal", "32") if report.ok else _color("NOT orthogonal", "31")))
        for a, b, v in report.offending:
            print(f"  <{a}|{b}> = {v}")
        if args.paranoid:
            for key, val in result["paranoid"].items():
                print(f"  {key}: {val}")
        print("ok" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_ERROR


def cmd_distinguish(args) -> int:
    basis = parse_states(_read(args.basis))
    meas = projective_measurement(basis)
    if args.probe_index is not None:
        if not 1 <= args.probe_index <= len(basis):
            raise MalformedInput(f"--probe-index must lie in 1..{len(basis)}, got {args.probe_index}")
        probe = basis[args.probe_index - 1]
    else:
        probes = parse_states(_read(args.probe_file))
        if len(probes) != 1:
            raise MalformedInput(f"probe file must hold exactly one state, found {len(probes)}")
        probe = probes[0]
    dist = distinguish(meas, probe)
    k = dist.argmax
    p = dist.probabilities[k]
    if args.json:
        _write(None, dumps_json({
            "probe": probe.label,
            "distribution": [
                {"outcome": i, "label": lab, "p": format_rational(q)}
                for i, (lab, q) in enumerate(zip(dist.labels, dist.probabilities), 1)
            ],
            "argmax": {"outcome": k + 1, "label": dist.labels[k], "p": format_rational(p)},
        }))
    else:
        for i, (lab, q) in enumerate(zip(dist.labels, dist.probabilities), 1):
            print(f"{i} {lab} {format_rational(q)}")
        print(f"outcome {k + 1}, p = {format_rational(p)} ({dist.labels[k]})")
    return EXIT_OK


def cmd_render(args) -> int:
    diagram = parse_tiles(_read(args.tiles))
    text = render_ascii(diagram) if args.format == "ascii" else render_svg(diagram)
    if not args.json:
        _write(args.out, text)
        return EXIT_OK
    out = {"format": args.format, "tileCount": len(diagram.tiles), "out": args.out}
    if args.out in (None, "-"):
        out["content"] = text
    else:
        _write(args.out, text)
    _write(None, dumps_json(out))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors must not collide with exit code 2 (inconclusive)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="loccw", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="generate a family as a states file (+ tile sidecar)")
    p.add_argument("--family", choices=["odd-square", "general"], required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--out")
    p.add_argument("--tiles-out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check-locc", help="certify first-round triviality for one or both parties")
    p.add_argument("--states", required=True)
    p.add_argument("--party", choices=["a", "b", "both"], default="both")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_locc)

    p = sub.add_parser("complete", help="extend a family to a full orthogonal product basis")
    p.add_argument("--states", required=True)
    p.add_argument("--tiles", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("verify", help="check orthogonality (and oracles with --paranoid)")
    p.add_argument("--states", required=True)
    p.add_argument("--paranoid", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distinguish", help="simulate the separable measurement of a basis")
    p.add_argument("--basis", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--probe-index", type=int, help="1-based index of a basis state")
    g.add_argument("--probe-file", help="states file holding one probe state")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("render", help="draw a tile diagram")
    p.add_argument("--tiles", required=True)
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedDimensions as exc:
        print(f"loccw: unsupported-dimensions: {exc}", file=sys.stderr)
        return exc.exit_code
    except LoccwError as exc:
        print(f"loccw: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
