"""Command line front end.

Three subcommands:

  search     scan a range for pseudoprimes, with checkpoint/resume
  verify     run one test against one number and print the evidence
  construct  run the Carmichael constructor from a preset or params file

construct exits 0 when at least one certificate was emitted, 2 when the
pipeline ran dry, and 1 on malformed input.  Params files are flat
key=value lines; integer lists (poly) are comma-separated decimals.
"""

from __future__ import annotations

import argparse
import json
import sys

from .carmichael import korselt
from .constructor import PRESETS, ConstructionParams, construct
from .frobenius import frobenius_test
from .modarith import jacobi
from .perrin import RecurrenceParams, perrin_test, signature
from .polymod import discriminant
from .search import DEFAULT_BLOCK_SIZE, SearchSpec, run_range_search

__all__ = ["main", "verify_number", "run_construct_job", "parse_params_file"]


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _spec_from_args(args) -> SearchSpec:
    if args.test in ("perrin-weak", "perrin-full"):
        r, s = (0, -1)
        if args.rs:
            parsed = _parse_int_list(args.rs)
            if len(parsed) != 2:
                raise ValueError(f"--rs wants two integers, got {args.rs!r}")
            r, s = parsed
        return SearchSpec(args.test, r=r, s=s)
    poly = (-1, -1, 0, 1)
    if args.poly:
        poly = _parse_int_list(args.poly)
    return SearchSpec(args.test, poly=poly)


def _cmd_search(args) -> int:
    spec = _spec_from_args(args)
    summary = run_range_search(
        args.start, args.stop, spec,
        workers=args.workers,
        out_path=args.out,
        checkpoint_path=args.checkpoint,
        resume=args.resume,
        block_size=args.block_size,
    )
    print(f"scanned={summary['scanned']} flagged={summary['flagged']} "
          f"duration={summary['duration']:.2f}s blocks={summary['blocks_done']}"
          f"/{summary['blocks_total']}")
    return 0


def verify_number(n: int, test: str, *, rs: tuple[int, int] = (0, -1),
                  poly: tuple[int, ...] = (-1, -1, 0, 1), out=None) -> dict:
    """Run one test against n, print human-readable evidence plus the
    machine record, and return the record."""
    out = out if out is not None else sys.stdout
    if test == "korselt":
        cert = korselt(n)
        factors = " * ".join(
            f"{p}^{e}" if e > 1 else str(p) for p, e in cert.factorization.factors)
        print(f"n = {n} = {factors}", file=out)
        print(f"squarefree: {cert.squarefree}", file=out)
        for p, ok in cert.checks:
            print(f"  p = {p}: p-1 | n-1 {'holds' if ok else 'FAILS'}", file=out)
        verdict = "validates" if cert.validates else f"fails ({cert.failure_reason})"
        print(f"korselt certificate {verdict}", file=out)
        record = {
            "n": str(n),
            "test": "korselt",
            "factors": ",".join(f"{p}:{e}" for p, e in cert.factorization.factors),
            "squarefree": str(cert.squarefree).lower(),
            "verdict": "pass" if cert.validates else "fail",
        }
    elif test in ("perrin-weak", "perrin-full"):
        params = RecurrenceParams(*rs)
        res = perrin_test(params, n, mode=test.split("-")[1])
        record = {
            "n": str(n),
            "test": test,
            "rs": f"{params.r},{params.s}",
            "verdict": "pass" if res.passes else "fail",
        }
        print(f"n = {n}, sequence parameters (r, s) = ({params.r}, {params.s}), "
              f"discriminant {params.delta}", file=out)
        if test == "perrin-full":
            sig = signature(params, n, n)
            print(f"signature {sig.values}", file=out)
            print(f"class {res.signature_class}, jacobi {res.jacobi_symbol}", file=out)
            record["class"] = str(res.signature_class)
        if res.jacobi_symbol is not None:
            record["jacobi"] = str(res.jacobi_symbol)
        print(f"{test}: {'pass' if res.passes else 'fail'}", file=out)
    elif test == "frobenius":
        report = frobenius_test(n, poly)
        print(f"n = {n}, poly {','.join(map(str, poly))}", file=out)
        print(f"degrees {list(report.degrees)}", file=out)
        if report.factor_found:
            print(f"factor found: {report.factor_found}", file=out)
        if report.jacobi_s is not None:
            print(f"jacobi stage sum S = {report.jacobi_s}, "
                  f"(delta/n) = {jacobi_of(poly, n)}", file=out)
        stage = f" at stage {report.stage}" if report.stage else ""
        print(f"frobenius: {report.verdict}{stage}", file=out)
        record = {
            "n": str(n),
            "test": test,
            "poly": ",".join(map(str, poly)),
            "verdict": report.verdict,
            "degrees": ",".join(map(str, report.degrees)),
            "jacobi": str(jacobi_of(poly, n)),
        }
        if report.factor_found:
            record["factor_found"] = str(report.factor_found)
    else:
        raise ValueError(f"unknown test {test!r}")
    print("record: " + json.dumps(record, separators=(",", ":")), file=out)
    return record


def jacobi_of(poly, n: int) -> int:
    return jacobi(discriminant(poly), n)


def _cmd_verify(args) -> int:
    rs = (0, -1)
    if args.rs:
        parsed = _parse_int_list(args.rs)
        if len(parsed) != 2:
            raise ValueError(f"--rs wants two integers, got {args.rs!r}")
        rs = parsed
    poly = (-1, -1, 0, 1)
    if args.poly:
        poly = _parse_int_list(args.poly)
    verify_number(args.n, args.test, rs=rs, poly=poly)
    return 0


_PARAM_KEYS = {"y", "q_min", "q_max", "k_min", "k_max", "x_bound", "t_max",
               "poly", "budget"}


def parse_params_file(path: str) -> ConstructionParams:
    """Flat key=value lines; # starts a comment, blank lines are skipped."""
    values: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _PARAM_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value.strip()
    required = {"y", "q_min", "q_max", "k_min", "k_max", "x_bound", "t_max"}
    missing = sorted(required - values.keys())
    if missing:
        raise ValueError(f"{path}: missing keys: {', '.join(missing)}")
    poly = _parse_int_list(values.get("poly", "-1,1"))
    return ConstructionParams(
        y=int(values["y"]),
        q_range=(int(values["q_min"]), int(values["q_max"])),
        k_min=int(values["k_min"]),
        k_max=int(values["k_max"]),
        x_bound=int(values["x_bound"]),
        t_max=int(values["t_max"]),
        poly=poly,
        budget=int(values.get("budget", "1000000")),
    )


def run_construct_job(params: ConstructionParams, out=None, err=None) -> int:
    """Run the constructor, write certificate records to out, diagnostics
    to err.  Exit code 0 with certificates, 2 without."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    result = construct(params)
    if result.harvested:
        print(f"construct: harvested {list(result.harvested)} -> L = {result.modulus}",
              file=err)
    if result.k is not None:
        print(f"construct: k = {result.k}, pool {list(result.pool)}", file=err)
    for note in result.diagnostics:
        print(f"construct: {note}", file=err)
    for cert in result.certificates:
        print(json.dumps(cert.to_record(), separators=(",", ":")), file=out)
    print(f"construct: {len(result.certificates)} certificate(s)", file=err)
    return 0 if result.certificates else 2


def _cmd_construct(args) -> int:
    if bool(args.preset) == bool(args.params):
        print("construct: exactly one of --preset / --params is required",
              file=sys.stderr)
        return 1
    if args.preset:
        if args.preset not in PRESETS:
            print(f"construct: unknown preset {args.preset!r}; "
                  f"available: {', '.join(sorted(PRESETS))}", file=sys.stderr)
            return 1
        params = PRESETS[args.preset]
    else:
        params = parse_params_file(args.params)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            return run_construct_job(params, out=fh)
    return run_construct_job(params)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primesig",
        description="Signature and Frobenius pseudoprime searches, Korselt "
                    "verification, and a desk-scale Carmichael constructor.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_search = sub.add_parser("search", help="scan a range for pseudoprimes")
    p_search.add_argument("--from", dest="start", type=int, required=True,
                          metavar="N", help="first number of the range")
    p_search.add_argument("--to", dest="stop", type=int, required=True,
                          metavar="N", help="last number of the range (inclusive)")
    p_search.add_argument("--test", required=True,
                          choices=["perrin-weak", "perrin-full", "frobenius"])
    p_search.add_argument("--rs", metavar="R,S",
                          help="sequence parameters (default 0,-1)")
    p_search.add_argument("--poly", metavar="C0,C1,...,1",
                          help="monic polynomial, lowest degree first "
                               "(default -1,-1,0,1)")
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--out", required=True, help="output records file")
    p_search.add_argument("--checkpoint", help="checkpoint file path")
    p_search.add_argument("--resume", action="store_true",
                          help="continue from the checkpoint")
    p_search.add_argument("--block-size", type=int, default=DEFAULT_BLOCK_SIZE)
    p_search.set_defaults(func=_cmd_search)

    p_verify = sub.add_parser("verify", help="run one test against one number")
    p_verify.add_argument("n", type=int)
    p_verify.add_argument("--test", required=True,
                          choices=["perrin-weak", "perrin-full", "frobenius",
                                   "korselt"])
    p_verify.add_argument("--rs", metavar="R,S")
    p_verify.add_argument("--poly", metavar="C0,C1,...,1")
    p_verify.set_defaults(func=_cmd_verify)

    p_construct = sub.add_parser("construct", help="run the Carmichael constructor")
    p_construct.add_argument("--preset", help=f"one of: {', '.join(sorted(PRESETS))}")
    p_construct.add_argument("--params", help="key=value parameter file")
    p_construct.add_argument("--out", help="certificate records file (default stdout)")
    p_construct.set_defaults(func=_cmd_construct)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
