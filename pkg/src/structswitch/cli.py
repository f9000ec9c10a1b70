"""Command-line front end.

Results go to standard output as a single JSON object with sorted keys
(``export-dot`` prints DOT instead); diagnostics go to standard error.

Exit codes: 0 success/pass, 1 infeasible/fail, 2 input or usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exceptions import InfeasibleError, ParseError, ResourceLimitError
from .graphs import to_dot
from .modes import min_modes_exact, min_modes_greedy
from .patterns import Pattern, parse_system
from .placement import (
    ModeInputAssignment,
    dedicated_b,
    dedicated_placement,
    distribute,
    minimal_b,
    non_dedicated_b,
    solution_to_dict,
)
from .verification import (
    brute_force_min_dedicated,
    check_structural_controllability,
    numeric_controllable,
    realize,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _pairs(text: str, what: str) -> list[tuple[int, int]]:
    """Parse ``"a=b,c=d"`` into integer pairs."""
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        try:
            if not sep:
                raise ValueError
            out.append((int(key), int(value)))
        except ValueError:
            raise UsageError(f"bad {what} item {item!r}; expected INT=INT") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="structswitch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("place", help="sparsest input placement")
    p.add_argument("input")
    p.add_argument("--solution", choices=["dedicated", "minimal", "non-dedicated"], default="dedicated")
    p.add_argument("--choose", default="", help='non-dedicated column choices, "state=col,..."')
    p.add_argument("--out")

    p = sub.add_parser("distribute", help="spread input columns over modes")
    p.add_argument("input")
    p.add_argument("--assign", required=True, help='"col=mode,..." (1-based)')
    p.add_argument("--base", choices=["dedicated", "minimal"], default="dedicated")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="structural controllability check")
    p.add_argument("input")
    p.add_argument("--out")

    p = sub.add_parser("check-numeric", help="randomized numeric controllability check")
    p.add_argument("input")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out")

    p = sub.add_parser("min-modes", help="fewest modes keeping structural controllability")
    p.add_argument("input")
    p.add_argument("--method", choices=["exact", "greedy"], default="exact")
    p.add_argument("--out")

    p = sub.add_parser("oracle-min", help="exhaustive minimum dedicated input set")
    p.add_argument("input")
    p.add_argument("--out")

    p = sub.add_parser("export-dot", help="system digraph in DOT")
    p.add_argument("input")
    p.add_argument("--which", default="union", help='"union" or "mode=K"')
    p.add_argument("--out")
    return parser


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_system(text)


def _emit(args, payload):
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _place(args):
    system = _load(args.input)
    sol = dedicated_placement(system)
    if args.solution == "dedicated":
        inputs = dedicated_b(sol)
    else:
        if args.solution == "minimal":
            first = minimal_b(sol)
        else:
            choice = {s: s for s in sol.j_tprime}
            for state, col in _pairs(args.choose, "--choose"):
                if state not in sol.j_tprime:
                    raise UsageError(f"state {state} is not in j_tprime {sorted(sol.j_tprime)}")
                choice[state] = col
            first = non_dedicated_b(sol, choice)
        inputs = ModeInputAssignment((first,) + tuple(Pattern.zeros(system.n) for _ in range(system.m - 1)))
    _emit(args, solution_to_dict(sol, inputs))
    return EXIT_OK


def _distribute(args):
    system = _load(args.input)
    sol = dedicated_placement(system)
    base = dedicated_b(sol)[0] if args.base == "dedicated" else minimal_b(sol)
    inputs = distribute(sol, base, _pairs(args.assign, "--assign"))
    _emit(args, solution_to_dict(sol, inputs))
    return EXIT_OK


def _verify(args):
    report = check_structural_controllability(_load(args.input))
    _emit(args, report.to_dict())
    return EXIT_OK if report.overall else EXIT_FAIL


def _check_numeric(args):
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    system = _load(args.input)
    passed = sum(
        numeric_controllable(realize(system, args.seed + t), tol=args.tol)
        for t in range(args.trials)
    )
    ratio = passed / args.trials
    _emit(args, {"passed": passed, "ratio": ratio, "seed": args.seed, "tol": args.tol, "trials": args.trials})
    return EXIT_OK if ratio >= 0.98 else EXIT_FAIL


def _min_modes(args):
    system = _load(args.input)
    solver = min_modes_exact if args.method == "exact" else min_modes_greedy
    _emit(args, solver(system).to_dict())
    return EXIT_OK


def _oracle_min(args):
    k, witness = brute_force_min_dedicated(_load(args.input))
    _emit(args, {"cardinality": k, "witness": sorted(witness)})
    return EXIT_OK


def _export_dot(args):
    system = _load(args.input)
    if args.which == "union":
        a, b = system.a_union(), system.b_union() if system.has_inputs else None
    else:
        key, _, value = args.which.partition("=")
        try:
            k = int(value)
        except ValueError:
            k = 0
        if key != "mode" or not 1 <= k <= system.m:
            raise UsageError(f'--which must be "union" or "mode=K" with 1<=K<={system.m}')
        a = system.a_modes[k - 1]
        b = system.b_modes[k - 1] if system.has_inputs else None
    _emit(args, to_dot(a, b))
    return EXIT_OK


_COMMANDS = {
    "place": _place,
    "distribute": _distribute,
    "verify": _verify,
    "check-numeric": _check_numeric,
    "min-modes": _min_modes,
    "oracle-min": _oracle_min,
    "export-dot": _export_dot,
}


def run(argv) -> int:
    try:
        args = build_parser().parse_args(list(argv))
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def main():
    sys.exit(run(sys.argv[1:]))
