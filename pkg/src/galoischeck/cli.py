"""Command line front end.

Subcommands map one-to-one onto the library's check entry points.  Output is
deterministic for a given query: JSON reports never include timing (the
elapsed_ms field is always null) so identical runs produce identical bytes
regardless of worker count or machine speed.

Exit status: 0 when the check passes or is not applicable, 1 when a
counterexample is found or the oracle cannot determine a result, 2 for usage
errors, unknown targets, exhausted search spaces, and blown budgets.
"""

from __future__ import annotations

import argparse
import json
import sys

from .connections import (
    GC_TARGETS,
    LAW_NAMES,
    PAIR_NAMES,
    SPEC_NAMES,
    WitnessNotFoundError,
    check_canonical_gc,
    check_easy_hard,
    check_law,
    find_non_gc_counterexample,
    order_laws_report,
)
from .core import (
    DEFAULT_BUDGET,
    CheckReport,
    Pred,
    Universe,
    UniverseTooLargeError,
)
from .oracle import NoGreatestError, OracleError, oracle_spec
from .orders import ORDERS

TOOL_VERSION = "0.1.0"

_PRED_TARGETS = ("takeWhile", "filter", "dropWhile")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galois",
        description="Exhaustive checking of split specifications and "
                    "adjoint-pair laws for sequence combinators over small "
                    "finite universes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, target_help: str,
               target_required: bool = True) -> None:
        p.add_argument("--target", required=target_required,
                       help=target_help)
        p.add_argument("--alphabet", type=int, default=2,
                       help="alphabet size (default 2)")
        p.add_argument("--max-len", type=int, default=5,
                       help="maximum sequence length (default 5)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="maximum evaluations before refusing to run")
        p.add_argument("--workers", type=int, default=1,
                       help="worker threads for the scan (default 1)")

    p = sub.add_parser("check-order",
                       help="partial order laws for a named ordering")
    common(p, "ordering name (see list-targets)")

    p = sub.add_parser("check-spec",
                       help="easy/hard split specification of a combinator")
    common(p, "combinator name (see list-targets)")
    p.add_argument("--pred", help="restrict to one predicate bitmask")
    p.add_argument("--n", type=int, help="restrict take to one count")

    p = sub.add_parser("check-gc",
                       help="defining equivalence of the adjoint pair")
    common(p, "combinator or splitter/joiner pair name")
    p.add_argument("--pred", help="restrict to one predicate bitmask")

    p = sub.add_parser("check-laws",
                       help="one named law across all applicable targets")
    common(p, "law name (see list-targets)")

    p = sub.add_parser("find-counterexample",
                       help="search for a round-trip failure refuting a "
                            "claimed adjunction")
    common(p, "splitter/joiner pair name")

    p = sub.add_parser("oracle",
                       help="compute one combinator application from its "
                            "split specification alone")
    common(p, "combinator name")
    p.add_argument("--pred", help="predicate bitmask")
    p.add_argument("--n", type=int, help="count for take")
    p.add_argument("--input", action="append", default=[],
                   help="comma separated sequence; repeat for zip")

    p = sub.add_parser("list-targets",
                       help="everything the check commands accept")
    common(p, "ignored", target_required=False)

    return parser


def encode_value(v):
    """JSON encoding of witness and oracle values: predicates by bitmask,
    sequences as nested arrays."""
    if isinstance(v, Pred):
        return v.mask
    if isinstance(v, tuple):
        return [encode_value(x) for x in v]
    return v


def render_value(v) -> str:
    if isinstance(v, Pred):
        return v.bits()
    return repr(v)


def report_payload(command: str, target: str, u: Universe,
                   rep: CheckReport) -> dict:
    cx = None
    if rep.counterexample is not None:
        cx = {name: encode_value(val) for name, val in rep.counterexample}
    return {
        "command": command,
        "target": target,
        "universe": {"alphabet_size": u.alphabet_size,
                     "max_len": u.max_len},
        "cases_checked": rep.cases_checked,
        "verdict": rep.verdict,
        "counterexample": cx,
        "elapsed_ms": None,
        "tool_version": TOOL_VERSION,
    }


def emit_report(command: str, target: str, u: Universe, rep: CheckReport,
                fmt: str, extra_text: list[str] | None = None) -> int:
    if fmt == "json":
        print(json.dumps(report_payload(command, target, u, rep), indent=2))
    else:
        print(f"law: {rep.law_name}")
        print(f"universe: alphabet={u.alphabet_size} max_len={u.max_len}")
        print(f"cases: {rep.cases_checked}")
        print(f"verdict: {rep.verdict}")
        if rep.counterexample is not None:
            print("counterexample:")
            for name, val in rep.counterexample:
                print(f"  {name} = {render_value(val)}")
        for line in extra_text or []:
            print(line)
    return 0 if rep.verdict in ("pass", "not-applicable") else 1


def _parse_pred(text: str | None, u: Universe) -> Pred | None:
    if text is None:
        return None
    try:
        mask = int(text, 0)
    except ValueError:
        raise SystemExit(_usage(f"invalid predicate bitmask {text!r}"))
    if not 0 <= mask < (1 << u.alphabet_size):
        raise SystemExit(_usage(
            f"predicate bitmask {text} out of range for alphabet size "
            f"{u.alphabet_size}"))
    return Pred(mask, u.alphabet_size)


def _parse_seq(text: str, u: Universe) -> tuple[int, ...]:
    if text.strip() == "":
        return ()
    try:
        xs = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise SystemExit(_usage(f"invalid sequence {text!r}"))
    for e in xs:
        if not 0 <= e < u.alphabet_size:
            raise SystemExit(_usage(
                f"element {e} out of range for alphabet size "
                f"{u.alphabet_size}"))
    if len(xs) > u.max_len:
        raise SystemExit(_usage(
            f"sequence {text!r} longer than max_len {u.max_len}"))
    return xs


def _usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _list_targets(fmt: str) -> int:
    groups = {
        "orders": sorted(ORDERS),
        "specs": sorted(SPEC_NAMES),
        "pairs": sorted(PAIR_NAMES),
        "laws": sorted(LAW_NAMES),
    }
    if fmt == "json":
        print(json.dumps(groups, indent=2))
    else:
        for key, names in groups.items():
            print(f"{key}: {' '.join(names)}")
    return 0


def _oracle_payload(args, u: Universe, inputs: dict, **outcome) -> dict:
    payload = {
        "command": "oracle",
        "target": args.target,
        "universe": {"alphabet_size": u.alphabet_size,
                     "max_len": u.max_len},
        "inputs": {k: encode_value(v) for k, v in inputs.items()},
    }
    payload.update(outcome)
    payload["tool_version"] = TOOL_VERSION
    return payload


def _run_oracle(args, u: Universe) -> int:
    pred = _parse_pred(args.pred, u)
    if pred is not None and args.target not in _PRED_TARGETS:
        return _usage(f"--pred does not apply to {args.target}")
    if args.n is not None and args.target != "take":
        return _usage("--n only applies to take")
    seqs = [_parse_seq(text, u) for text in args.input]
    want = 2 if args.target == "zip" else 1
    if len(seqs) != want:
        return _usage(f"{args.target} oracle takes exactly {want} --input")
    inputs: dict = {"xs": seqs[0]}
    kwargs: dict = {"xs": seqs[0]}
    if args.target == "zip":
        inputs["ys"] = kwargs["ys"] = seqs[1]
    if args.target == "take":
        if args.n is None:
            return _usage("take oracle needs --n")
        if args.n < 0:
            return _usage("take count must be non-negative")
        inputs["n"] = kwargs["n"] = args.n
    elif args.target in _PRED_TARGETS:
        if pred is None:
            return _usage(f"{args.target} oracle needs --pred")
        inputs["pred"] = kwargs["pred"] = pred

    try:
        result = oracle_spec(args.target, u, **kwargs)
    except OracleError as exc:
        if args.format == "json":
            outcome = {"error": str(exc)}
            if isinstance(exc, NoGreatestError):
                outcome["maxima"] = [encode_value(m) for m in exc.maxima]
            print(json.dumps(_oracle_payload(args, u, inputs, **outcome),
                             indent=2))
        else:
            print(f"target: {args.target}")
            print(f"error: {exc}")
            if isinstance(exc, NoGreatestError):
                for m in exc.maxima:
                    print(f"  maximal: {render_value(m)}")
        return 1
    if args.format == "json":
        payload = _oracle_payload(args, u, inputs,
                                  result=encode_value(result))
        print(json.dumps(payload, indent=2))
    else:
        print(f"target: {args.target}")
        print(f"universe: alphabet={u.alphabet_size} max_len={u.max_len}")
        for k, v in inputs.items():
            print(f"{k}: {render_value(v)}")
        print(f"result: {render_value(result)}")
    return 0


def run(args: argparse.Namespace) -> int:
    u = Universe(args.alphabet, args.max_len)
    fmt = args.format
    kw = {"budget": args.budget, "workers": args.workers}

    if args.command == "list-targets":
        return _list_targets(fmt)

    if args.command == "check-order":
        if args.target not in ORDERS:
            return _usage(f"unknown ordering {args.target!r}")
        rep, least = order_laws_report(args.target, u, **kw)
        extra = None
        if fmt == "text":
            shown = render_value(least) if least is not None else "none"
            extra = [f"least: {shown}"]
        return emit_report(args.command, args.target, u, rep, fmt, extra)

    if args.command == "check-spec":
        if args.target not in SPEC_NAMES:
            return _usage(f"unknown combinator {args.target!r}")
        pred = _parse_pred(args.pred, u)
        if pred is not None and args.target not in _PRED_TARGETS:
            return _usage(f"--pred does not apply to {args.target}")
        if args.n is not None and args.target != "take":
            return _usage("--n only applies to take")
        if args.n is not None and args.n < 0:
            return _usage("take count must be non-negative")
        rep = check_easy_hard(args.target, u, pred=pred, n=args.n, **kw)
        return emit_report(args.command, args.target, u, rep, fmt)

    if args.command == "check-gc":
        if args.target not in GC_TARGETS:
            return _usage(f"unknown adjoint pair target {args.target!r}")
        pred = _parse_pred(args.pred, u)
        if pred is not None and args.target not in _PRED_TARGETS:
            return _usage(f"--pred does not apply to {args.target}")
        rep = check_canonical_gc(args.target, u, pred=pred, **kw)
        return emit_report(args.command, args.target, u, rep, fmt)

    if args.command == "check-laws":
        if args.target not in LAW_NAMES:
            return _usage(f"unknown law {args.target!r}")
        rep = check_law(args.target, u, **kw)
        return emit_report(args.command, args.target, u, rep, fmt)

    if args.command == "find-counterexample":
        if args.target not in PAIR_NAMES:
            return _usage(f"unknown splitter/joiner pair {args.target!r}")
        rep = find_non_gc_counterexample(args.target, u)
        return emit_report(args.command, args.target, u, rep, fmt)

    if args.command == "oracle":
        if args.target not in SPEC_NAMES:
            return _usage(f"unknown combinator {args.target!r}")
        return _run_oracle(args, u)

    return _usage(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    except UniverseTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WitnessNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
