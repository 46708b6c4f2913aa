"""Command-line front end.

Subcommands cover one-off expression evaluation, the individual
certificate queries, and the two batch modes: ``verify-paper`` (the full
certificate pipeline plus every property suite) and ``random-check``
(the property suites alone).  Exit codes are a contract: 0 all good,
1 a mathematical check failed, 2 usage or input error.  Reports are
deterministic functions of the configuration; rerunning with equal flags
reproduces them byte for byte.
"""

from __future__ import annotations

import argparse
import sys

from . import certificates as certs
from . import checks, lang
from . import operators as ops
from .render import render, to_jsonable
from .checks import DEFAULT_CONFIG, RunConfig

__all__ = ["main", "console_main", "build_parser"]

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_CONFIG.seed, metavar="N")
    common.add_argument(
        "--samples", type=int, default=DEFAULT_CONFIG.sample_count, metavar="N"
    )
    common.add_argument(
        "--max-support", type=int, default=DEFAULT_CONFIG.max_support, metavar="N"
    )
    common.add_argument(
        "--max-magnitude", type=int, default=DEFAULT_CONFIG.max_magnitude, metavar="N"
    )
    common.add_argument("--format", choices=("text", "machine"), default="text")

    parser = argparse.ArgumentParser(
        prog="gossez",
        description="Exact certificates for the Gossez operator family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate an expression")
    p.add_argument("expr")
    p = sub.add_parser(
        "verify-paper",
        parents=[common],
        help="run the certificate pipeline and every property suite",
    )
    p = sub.add_parser(
        "random-check", parents=[common], help="run the seeded property suites"
    )
    p = sub.add_parser("solve", parents=[common], help="invert the centered operator")
    p.add_argument("finseq")
    p = sub.add_parser("gap", parents=[common], help="type (D) gap criterion")
    p.add_argument("finseq")
    p.add_argument("evconst")
    p = sub.add_parser("member", parents=[common], help="monotone-closure membership")
    p.add_argument("evconst")
    p.add_argument("finseq")
    p = sub.add_parser("invcert", parents=[common], help="inverse-extension certificate")
    p.add_argument("evconst")
    p.add_argument("limfunc")
    return parser


def _parse_value(text: str, required: lang.Space):
    """Parse one CLI argument into a value of the required space.

    A finitely supported sequence widens into a convergent-sequence slot
    (tail-0 embedding); every other mismatch is an input error.
    """
    expr = lang.parse(text)
    space = lang.check_spaces(expr)
    if space is required:
        return lang.evaluate(expr)
    if required is lang.Space.EVCONST and space is lang.Space.FINSEQ:
        return lang.evaluate(expr).as_evconst()
    raise lang.SpaceError(f"expected {required.value}, got {space.value}", 1, 1)


def _config_from(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        seed=args.seed,
        sample_count=args.samples,
        max_support=args.max_support,
        max_magnitude=args.max_magnitude,
        output_format=args.format,
    )
    cfg.validate()
    return cfg


def _config_echo(cfg: RunConfig) -> dict:
    return {
        "seed": cfg.seed,
        "samples": cfg.sample_count,
        "max_support": cfg.max_support,
        "max_magnitude": cfg.max_magnitude,
    }


def _print_results(results, report, cfg: RunConfig, include_report: bool) -> int:
    ok = all(r.passed for r in results)
    if cfg.output_format == "machine":
        doc = {
            "config": _config_echo(cfg),
            "checks": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    **({"counterexample": r.counterexample} if r.counterexample else {}),
                }
                for r in results
            ],
            "ok": ok,
        }
        if include_report:
            doc["report"] = to_jsonable(report) if report is not None else None
        print(render_machine(doc))
    else:
        echo = _config_echo(cfg)
        print(" ".join(f"{k}={v}" for k, v in echo.items()))
        width = max(len(r.name) for r in results)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name.ljust(width)}  {r.detail}"
            print(line)
            if r.counterexample:
                print(f"      counterexample: {r.counterexample}")
        if include_report and report is not None:
            print("--- certificate report ---")
            print(render(report, "text"))
        passed = sum(1 for r in results if r.passed)
        print(f"result: {'PASS' if ok else 'FAIL'} ({passed}/{len(results)} checks)")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def render_machine(doc) -> str:
    import json

    return json.dumps(doc, indent=2)


def _dispatch(args: argparse.Namespace, cfg: RunConfig) -> int:
    fmt = cfg.output_format
    if args.command == "eval":
        value = lang.evaluate(lang.parse(args.expr))
        print(render(value, fmt))
        return EXIT_OK
    if args.command == "solve":
        x = _parse_value(args.finseq, lang.Space.FINSEQ)
        print(render(ops.solve_centered_gossez(x), fmt))
        return EXIT_OK
    if args.command == "gap":
        xstar = _parse_value(args.finseq, lang.Space.FINSEQ)
        xss = _parse_value(args.evconst, lang.Space.EVCONST)
        print(render(certs.type_d_gap(xstar, xss), fmt))
        return EXIT_OK
    if args.command == "member":
        xss = _parse_value(args.evconst, lang.Space.EVCONST)
        xstar = _parse_value(args.finseq, lang.Space.FINSEQ)
        print(render(certs.closure_membership(xss, xstar), fmt))
        return EXIT_OK
    if args.command == "invcert":
        xss0 = _parse_value(args.evconst, lang.Space.EVCONST)
        phi = _parse_value(args.limfunc, lang.Space.LIMFUNC)
        print(render(certs.inverse_type_d_certificate(xss0, phi), fmt))
        return EXIT_OK
    if args.command == "verify-paper":
        results, report = checks.verify_all(cfg)
        return _print_results(results, report, cfg, include_report=True)
    if args.command == "random-check":
        results = checks.run_all(cfg)
        return _print_results(results, None, cfg, include_report=False)
    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (2)
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _config_from(args)
    except ValueError as err:
        print(f"configuration error: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _dispatch(args, cfg)
    except lang.LangError as err:
        print(f"{err.code} error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (certs.CheckFailed, ArithmeticError) as err:
        print(f"check failed: {err}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (ValueError, TypeError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
