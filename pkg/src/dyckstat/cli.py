"""``dyckstat`` command line.

Exit status is 0 on success, 1 when a verification check fails and 2 for
usage errors or inputs outside an operation's domain.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence, TextIO

from . import perm321, verify
from .involution import PhiError, big_phi, big_phi_trace, phi, phi_inverse
from .words import (
    ALPHABETS,
    DyckError,
    compute_stats,
    detect_alphabet,
    enumerate_dyck,
    parse_word,
    render_ascii,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _word(args, text: str):
    fmt = args.format
    try:
        if fmt == "auto":
            fmt = detect_alphabet(text)
        return parse_word(text, fmt)
    except DyckError as exc:
        raise UsageError(f"invalid word {text!r}: {exc}") from None


def _fmt_set(values) -> str:
    return "[" + ", ".join(str(v) for v in sorted(values)) + "]"


def cmd_stats(args, out):
    st = compute_stats(_word(args, args.word))
    print(f"semilength: {st.semilength}", file=out)
    print(f"returns: {st.returns}", file=out)
    print(f"ldr: {st.ldr}", file=out)
    print(f"fdf: {st.fdf}", file=out)
    print(f"rises: {_fmt_set(st.rises)}", file=out)
    print(f"rise_composition: {list(st.rise_composition)}", file=out)
    return 0


def _cmd_phi(fn, args, out):
    try:
        image, case = fn(_word(args, args.word))
    except PhiError as exc:
        raise UsageError(f"{args.command}: {exc.reason.value}: word {exc.word} is outside the domain") from None
    print(image, file=out)
    print(f"case: {case.value}", file=out)
    return 0


def cmd_involution(args, out):
    word = _word(args, args.word)
    if args.trace:
        for w, label in big_phi_trace(word):
            print(f"{w}\t{label}", file=out)
    else:
        print(big_phi(word), file=out)
    return 0


def cmd_perm_to_path(args, out):
    try:
        p = perm321.parse_permutation(args.perm)
        print(perm321.to_dyck(p), file=out)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_path_to_perm(args, out):
    print(perm321.from_dyck(_word(args, args.word)), file=out)
    return 0


def cmd_enumerate(args, out):
    for w in enumerate_dyck(args.n):
        if args.stats:
            st = compute_stats(w)
            rises = ",".join(str(r) for r in sorted(st.rises))
            print(f"{w}\t{st.returns}\t{st.ldr}\t{st.fdf}\t{rises}", file=out)
        else:
            print(w, file=out)
    return 0


def cmd_table(args, out):
    dist = verify.joint_distribution(args.n)
    print(json.dumps(dist.to_json(), sort_keys=True, indent=2), file=out)
    return 0


def cmd_verify(args, out):
    names = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else None
    try:
        reports = verify.run_checks(names, args.max_n, jobs=args.jobs,
                                    max_counterexamples=args.max_counterexamples)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(json.dumps([r.to_dict() for r in reports], indent=2), file=out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_render(args, out):
    print(render_ascii(_word(args, args.word)), file=out)
    return 0


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dyckstat", description="Dyck path statistics and the returns/ldr involution.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def word_cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("word")
        p.add_argument("--format", choices=["auto"] + list(ALPHABETS), default="auto",
                       help="alphabet of the word (default: detect from its characters)")
        p.set_defaults(func=func)
        return p

    word_cmd("stats", cmd_stats, "print all statistics of a word")
    word_cmd("phi", lambda a, o: _cmd_phi(phi, a, o), "apply phi once")
    word_cmd("phi-inv", lambda a, o: _cmd_phi(phi_inverse, a, o), "apply the inverse of phi once")
    p = word_cmd("involution", cmd_involution, "apply the involution Phi")
    p.add_argument("--trace", action="store_true", help="print every intermediate word")
    p = sub.add_parser("perm-to-path", help="321-avoiding permutation to Dyck word")
    p.add_argument("perm")
    p.set_defaults(func=cmd_perm_to_path)
    word_cmd("path-to-perm", cmd_path_to_perm, "Dyck word to 321-avoiding permutation")
    p = sub.add_parser("enumerate", help="list all words of a semilength")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--stats", action="store_true",
                   help="append returns, ldr, fdf, rises as tab-separated columns")
    p.set_defaults(func=cmd_enumerate)
    p = sub.add_parser("table", help="joint distribution of (rises, returns, n-ldr) as JSON")
    p.add_argument("n", type=_nonnegative)
    p.set_defaults(func=cmd_table)
    p = sub.add_parser("verify", help="run exhaustive checks")
    p.add_argument("--max-n", type=_nonnegative, default=verify.DEFAULT_MAX_N)
    p.add_argument("--checks", default=None,
                   help="comma-separated subset of: " + ", ".join(verify.CHECKS))
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--max-counterexamples", type=_nonnegative,
                   default=verify.DEFAULT_MAX_COUNTEREXAMPLES)
    p.set_defaults(func=cmd_verify)
    word_cmd("render", cmd_render, "draw a word as ASCII art")
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        return args.func(args, out)
    except UsageError as exc:
        print(exc, file=err)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
