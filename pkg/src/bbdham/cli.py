"""Command-line interface.

Exit codes: 0 success / hypotheses hold / Hamiltonian, 1 negative verdict,
2 usage, I/O or parse error, 3 undecided at scale.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .digraph import (
    BipartiteDigraph,
    check_condition_a,
    degree,
    is_strongly_connected,
)
from .fileformat import ParseError, read_file, write, write_file
from .hamilton import Verdict, find_hamiltonian
from .matching import HallViolator, cycle_factor
from .verify import (
    ExtremalParams,
    ParameterError,
    enumerate_universe,
    gen_extremal,
    parse_density,
    random_digraph,
    sample_universe,
)

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_UNDECIDED = 0, 1, 2, 3


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(D: BipartiteDigraph, path: Optional[str]) -> None:
    if path:
        write_file(path, D)
    else:
        sys.stdout.write(write(D))


def cmd_check(args) -> int:
    D = read_file(args.file)
    print(f"a: {D.a}")
    for v in range(D.order):
        d = degree(D, v)
        print(f"{D.name(v)}: out {d.d_out} in {d.d_in} degree {d.d}")
    sc = is_strongly_connected(D)
    report = check_condition_a(D)
    print(f"strongly_connected: {_yes(sc)}")
    print(report.describe(D.a))
    return EXIT_OK if sc and report.holds else EXIT_NO


def cmd_hamilton(args) -> int:
    D = read_file(args.file)
    if D.a < 2:
        raise ParameterError("hamilton needs a >= 2")
    res = find_hamiltonian(D)
    print(f"strongly_connected: {_yes(res.strongly_connected)}")
    print(f"condition_a: {_yes(res.condition_a.holds)}")
    print(f"verdict: {res.verdict.value}")
    if res.cycle is not None:
        print("cycle: " + " ".join(D.name(v) for v in res.cycle))
    cert = res.certificate
    if isinstance(cert, HallViolator):
        print(f"certificate: {cert.describe(D.a)}")
    elif cert is not None:
        print(f"certificate: {cert.label}")
    print(f"moves: {len(res.move_log)}")
    print(f"fallback: {_yes(res.fallback_used)}")
    if res.verdict is Verdict.HAMILTONIAN:
        return EXIT_OK
    if res.verdict is Verdict.UNDECIDED:
        return EXIT_UNDECIDED
    return EXIT_NO


def cmd_factor(args) -> int:
    D = read_file(args.file)
    F = cycle_factor(D)
    if isinstance(F, HallViolator):
        print(F.describe(D.a))
        return EXIT_NO
    print(F.describe(D.a))
    return EXIT_OK


def cmd_extremal(args) -> int:
    _emit(gen_extremal(ExtremalParams(args.a, args.l)), args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    if args.a < 1 or args.seed < 0:
        raise ParameterError("need a >= 1 and seed >= 0")
    _emit(random_digraph(args.a, parse_density(args.density), args.seed, 0), args.output)
    return EXIT_OK


def _report_exit(report) -> int:
    clean = not (
        report.counterexamples
        or report.oracle_disagreements
        or report.invalid_cycles
        or report.arc_bound_violations
        or report.structure_violations
    )
    return EXIT_OK if clean else EXIT_NO


def cmd_enumerate(args) -> int:
    report = enumerate_universe(args.a, jobs=args.jobs)
    sys.stdout.write(report.render())
    return _report_exit(report)


def cmd_verify(args) -> int:
    report = sample_universe(args.a, args.samples, args.seed, args.density, jobs=args.jobs)
    sys.stdout.write(report.render())
    return _report_exit(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bbdham",
        description="Hamiltonicity tools for balanced bipartite digraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, text in (
        ("check", cmd_check, "degrees, strong connectivity and condition A"),
        ("hamilton", cmd_hamilton, "find a Hamiltonian cycle or a certificate"),
        ("factor", cmd_factor, "cycle factor or Hall violator"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("extremal", help="write the extremal digraph D(a, l)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("random", help="write a random digraph")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--density", required=True, help="arc probability, e.g. 0.75 or 3/4")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("enumerate", help="exhaustive sweep for a <= 3")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="randomized sweep for 4 <= a <= 12")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--density", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ParseError, ParameterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
