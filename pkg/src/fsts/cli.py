"""Command-line front door.

Thin client over the service handlers: parse arguments, build a request
model, call the handler, print a JSON run report to stdout (human
summaries go to stderr), and map the outcome onto stable exit codes:

    0  success / feasible / verdict true
    1  input error (bad file, bad arguments)
    2  precondition error (e.g. codegree too low for the weighting)
    3  infeasible / verdict false
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from .api import handlers, schemas
from .errors import InputError, PreconditionError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PRECONDITION = 2
EXIT_NEGATIVE = 3


def _read_hg_model(path: str) -> tuple[schemas.HypergraphIn, str]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return schemas.HypergraphIn(hg_text=text), text


def _digest(text: str | None) -> str | None:
    if text is None:
        return None
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()


def _emit(args, command: str, result, input_text: str | None, started: float) -> None:
    report = {
        "command": command,
        "input_digest": _digest(input_text),
        "version": __version__,
        "elapsed_seconds": round(time.time() - started, 6),
        "result": result.model_dump() if hasattr(result, "model_dump") else result,
    }
    payload = json.dumps(report, indent=2)
    print(payload)
    if getattr(args, "json_out", None):
        Path(args.json_out).write_text(payload + "\n")


def _parse_parts(text: str) -> list[int]:
    try:
        return [int(p) for p in text.replace(",", " ").split()]
    except ValueError as exc:
        raise InputError(f"malformed part sizes {text!r}") from exc


def cmd_gen(args) -> int:
    started = time.time()
    req = schemas.GenRequest(
        kind=args.kind,
        r=args.r,
        n=args.n,
        parts=_parse_parts(args.parts) if args.parts else None,
        floor=args.floor,
        seed=args.seed,
    )
    resp = handlers.handle_gen(req)
    if args.output:
        Path(args.output).write_text(resp.hg_text)
        print(f"wrote {args.output}", file=sys.stderr)
    _emit(args, f"gen {args.kind}", resp, None, started)
    s = resp.summary
    print(
        f"{args.kind}: r={s.r} n={s.n} m={s.num_edges} delta={s.min_codegree}",
        file=sys.stderr,
    )
    return EXIT_OK


def cmd_weight(args) -> int:
    started = time.time()
    model, text = _read_hg_model(args.file)
    resp = handlers.handle_weight(schemas.WeightRequest(hypergraph=model))
    _emit(args, "weight", resp, text, started)
    rep = resp.nonnegativity
    print(
        f"pair degrees one: {resp.report.all_degrees_one}; "
        f"min ordered weight: {rep.min_ordered_weight}; "
        f"fractional design: {resp.verdict}",
        file=sys.stderr,
    )
    return EXIT_OK if resp.verdict else EXIT_NEGATIVE


def cmd_lp(args) -> int:
    started = time.time()
    model, text = _read_hg_model(args.file)
    resp = handlers.handle_lp_solve(
        schemas.LpSolveRequest(hypergraph=model, all_tuples=args.all_tuples)
    )
    _emit(args, "lp solve", resp, text, started)
    print(
        f"{resp.status} ({resp.num_vars} vars, {resp.num_rows} rows), "
        f"verified: {resp.verified}",
        file=sys.stderr,
    )
    return EXIT_OK if resp.status == "feasible" else EXIT_NEGATIVE


def cmd_optimize(args) -> int:
    started = time.time()
    resp = handlers.handle_optimize(
        schemas.OptimizeRequest(
            program=args.program, d=args.d, seed=args.seed, threads=args.threads
        )
    )
    _emit(args, f"optimize {args.program}", resp, None, started)
    print(f"{args.program} at d={args.d}: value {resp.value}", file=sys.stderr)
    return EXIT_OK


def cmd_root(args) -> int:
    started = time.time()
    resp = handlers.handle_root(schemas.RootRequest(tol=args.tol))
    _emit(args, "root", resp, None, started)
    print(f"xstar = {resp.xstar}, threshold = {resp.threshold}", file=sys.stderr)
    return EXIT_OK


def cmd_verify_chain(args) -> int:
    started = time.time()
    resp = handlers.handle_verify_chain(
        schemas.VerifyChainRequest(d=args.d, tol=args.tol, seed=args.seed)
    )
    _emit(args, "verify-chain", resp, None, started)
    print(
        f"p3={resp.p3_value} p4={resp.p4_value} p5={resp.p5_value} ok={resp.ok}",
        file=sys.stderr,
    )
    return EXIT_OK if resp.ok else EXIT_NEGATIVE


def cmd_certify(args) -> int:
    started = time.time()
    model, text = _read_hg_model(args.file)
    resp = handlers.handle_certify_parity(
        schemas.CertifyParityRequest(hypergraph=model, parts=_parse_parts(args.parts))
    )
    _emit(args, "certify parity", resp, text, started)
    print(
        f"M = {resp.transversal_product} (odd: {resp.product_is_odd}), "
        f"verdict: {resp.verdict}",
        file=sys.stderr,
    )
    return EXIT_OK if resp.verdict else EXIT_NEGATIVE


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("fsts.api.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fsts",
        description="Fractional Steiner triple system toolkit",
    )
    parser.add_argument("--version", action="version", version=f"fsts {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json-out", help="also write the JSON report to this path")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
        p.add_argument("--threads", type=int, default=1, help="worker threads")

    p_gen = sub.add_parser("gen", help="generate a hypergraph and write .hg")
    p_gen.add_argument(
        "kind", choices=["complete", "space-barrier", "parity-blocker", "random"]
    )
    p_gen.add_argument("--r", type=int, default=3)
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--parts", help="comma-separated part sizes")
    p_gen.add_argument("--floor", type=int, help="codegree floor for 'random'")
    p_gen.add_argument("-o", "--output", help="write the .hg file here")
    common(p_gen)
    p_gen.set_defaults(func=cmd_gen)

    p_weight = sub.add_parser("weight", help="pair-exact weighting and verdict")
    p_weight.add_argument("file", help=".hg input file")
    common(p_weight)
    p_weight.set_defaults(func=cmd_weight)

    p_lp = sub.add_parser("lp", help="exact LP feasibility")
    lp_sub = p_lp.add_subparsers(dest="lp_command", required=True)
    p_lp_solve = lp_sub.add_parser("solve", help="decide fractional design feasibility")
    p_lp_solve.add_argument("file", help=".hg input file")
    p_lp_solve.add_argument(
        "--all-tuples",
        action="store_true",
        help="constrain every (r-1)-set, not only the shadow",
    )
    common(p_lp_solve)
    p_lp_solve.set_defaults(func=cmd_lp)

    p_opt = sub.add_parser("optimize", help="maximize one of the programs p3, p4, p5")
    p_opt.add_argument("program", choices=["p3", "p4", "p5"])
    p_opt.add_argument("--d", type=float, required=True, help="codegree defect in [0, 1/6)")
    common(p_opt)
    p_opt.set_defaults(func=cmd_optimize)

    p_root = sub.add_parser("root", help="root of the threshold cubic")
    p_root.add_argument("--tol", type=float, default=1e-10)
    common(p_root)
    p_root.set_defaults(func=cmd_root)

    p_chain = sub.add_parser("verify-chain", help="agreement of the three programs")
    p_chain.add_argument("--d", type=float, required=True)
    p_chain.add_argument("--tol", type=float, default=1e-4)
    common(p_chain)
    p_chain.set_defaults(func=cmd_verify_chain)

    p_cert = sub.add_parser("certify", help="certificates for constructions")
    cert_sub = p_cert.add_subparsers(dest="certify_command", required=True)
    p_parity = cert_sub.add_parser("parity", help="odd/even counting certificate")
    p_parity.add_argument("file", help=".hg input file")
    p_parity.add_argument("--parts", required=True, help="comma-separated part sizes")
    common(p_parity)
    p_parity.set_defaults(func=cmd_certify)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
