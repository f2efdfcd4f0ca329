"""Command-line front end.

Exit status: 0 on success, 1 when counterexamples were found, 2 on usage,
parse or hypothesis errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .campaign import CampaignConfig, CampaignError, run_campaign
from .cycles import find_t_cycle, hamiltonian_cycle, longest_cycle_length, t_vertices
from .digraph import DigraphError, is_k_strong, is_strong
from .families import L2Options, gen_d5, gen_d7, gen_l1, gen_l2, gen_remark3, gen_sandwich
from .iso import is_isomorphic
from .textformat import FormatError, read_digraph, write_digraph
from .theorems import classify_theorem2

__all__ = ["cli_dispatch", "main"]

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cyclab", description="Cycles through high-semidegree vertices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="write a named exceptional digraph")
    gen.add_argument("--family", required=True,
                     help="d5, d7, l1:1, l1:2, l1:3, l2, sandwich or remark3")
    gen.add_argument("--m", type=int, default=2, help="half-order for l2 and sandwich")
    gen.add_argument("--opts", help="JSON file with optional arcs for l2 / sandwich")
    gen.add_argument("--out", required=True)

    check = sub.add_parser("check", help="summarize a digraph file")
    check.add_argument("file")

    classify = sub.add_parser("classify", help="which outcomes of the semidegree theorem hold")
    classify.add_argument("file")

    verify = sub.add_parser("verify", help="run a verification campaign")
    verify.add_argument("--theorem", required=True, choices=["1", "2", "c", "C"])
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--mode", required=True, choices=["exhaustive", "random"])
    verify.add_argument("--samples", type=int, default=0)
    verify.add_argument("--p", default="1/2", help="arc probability as NUM/DEN")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--report", required=True)

    iso = sub.add_parser("iso", help="isomorphism test")
    iso.add_argument("file1")
    iso.add_argument("file2")
    return parser


def _load_opts(path):
    if path is None:
        return {}
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise DigraphError("options file must hold a JSON object")
    return data


def _arcs(data, key):
    return frozenset((int(u), int(v)) for u, v in data.get(key, []))


def _cmd_gen(args, out) -> int:
    family = args.family.lower()
    opts = _load_opts(args.opts)
    if family == "d5":
        D = gen_d5()
    elif family == "d7":
        D = gen_d7()
    elif family.startswith("l1:"):
        try:
            variant = int(family[3:])
        except ValueError:
            raise DigraphError(f"bad L1 variant in {args.family!r}") from None
        D = gen_l1(variant)
    elif family == "l2":
        D = gen_l2(L2Options(args.m, _arcs(opts, "inner_first"), _arcs(opts, "inner_second"),
                             _arcs(opts, "back_arcs")))
    elif family == "sandwich":
        D = gen_sandwich(args.m, _arcs(opts, "inner_arcs"))
    elif family == "remark3":
        D = gen_remark3()
    else:
        raise _UsageError(f"unknown family {args.family!r}")
    write_digraph(D, args.out)
    print(f"wrote {args.out}: n={D.n}, arcs={D.arc_count()}", file=out)
    return EXIT_OK


def _yes(flag) -> str:
    return "yes" if flag else "no"


def _cmd_check(args, out) -> int:
    D = read_digraph(args.file)
    print(f"n: {D.n}", file=out)
    print(f"arcs: {D.arc_count()}", file=out)
    print(f"strong: {_yes(is_strong(D))}", file=out)
    print(f"2-strong: {_yes(is_k_strong(D, 2))}", file=out)
    if D.n >= 3 and D.n % 2 == 1:
        T = sorted(t_vertices(D))
        print(f"T-vertices: {' '.join(map(str, T))}", file=out)
    else:
        print("T-vertices: n/a (even order)", file=out)
    longest = longest_cycle_length(D)
    print(f"longest cycle: {longest if longest is not None else 'none'}", file=out)
    if D.n >= 2:
        print(f"hamiltonian: {_yes(hamiltonian_cycle(D) is not None)}", file=out)
    if D.n >= 3 and D.n % 2 == 1:
        cyc = find_t_cycle(D)
        print(f"T-cycle: {'present ' + str(list(cyc.vertices)) if cyc else 'absent'}", file=out)
    return EXIT_OK


def _cmd_classify(args, out) -> int:
    D = read_digraph(args.file)
    outcome = classify_theorem2(D)
    rows = [
        ("i", outcome.holds_i and list(outcome.holds_i.vertices)),
        ("ii", outcome.holds_ii),
        ("iii", outcome.holds_iii and (sorted(outcome.holds_iii.side_a),
                                       sorted(outcome.holds_iii.side_b))),
        ("iv", outcome.holds_iv),
    ]
    for name, witness in rows:
        status = "holds" if witness is not None else "no"
        suffix = f"  {witness}" if witness is not None else ""
        print(f"outcome {name}: {status}{suffix}", file=out)
    if not outcome.satisfied:
        print("COUNTEREXAMPLE: no outcome holds", file=out)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    config = CampaignConfig(
        theorem=args.theorem.upper(),
        n=args.n,
        mode=args.mode,
        sample_count=args.samples,
        arc_probability=args.p,
        seed=args.seed,
        parallelism=args.jobs,
    )
    report = run_campaign(config)
    with open(args.report, "w", encoding="ascii", newline="") as fh:
        fh.write(report.to_json())
    print(
        f"{report.instances_generated} generated, {report.instances_passing_hypothesis} "
        f"satisfy the hypothesis, {len(report.counterexamples)} counterexamples",
        file=out,
    )
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def _cmd_iso(args, out) -> int:
    D1, D2 = read_digraph(args.file1), read_digraph(args.file2)
    print("isomorphic" if is_isomorphic(D1, D2) else "not isomorphic", file=out)
    return EXIT_OK


_COMMANDS = {"gen": _cmd_gen, "check": _cmd_check, "classify": _cmd_classify,
             "verify": _cmd_verify, "iso": _cmd_iso}


def cli_dispatch(argv: Sequence[str], out=None) -> int:
    """Run one command and return its exit status."""
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        return _COMMANDS[args.command](args, out)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (FormatError, DigraphError, CampaignError, OSError, UnicodeDecodeError,
            json.JSONDecodeError, ValueError, TypeError) as exc:
        print(f"cyclab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    logging.basicConfig(level=logging.WARNING)
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
