"""Request handlers shared by the HTTP endpoints and the CLI.

Each handler maps a request model to a response model and raises
package exceptions (InputError / PreconditionError) for the callers to
translate into HTTP codes or process exit codes.
"""

from __future__ import annotations

from .. import __version__
from ..constructions import (
    PartitionedHypergraph,
    complete_hypergraph,
    parity_blocker,
    parity_certificate,
    random_min_codegree,
    space_barrier_tripartite,
)
from ..errors import InputError
from ..hypergraph import Hypergraph, build_hypergraph, codegree_stats, shadow
from ..lp import build_fsts_lp, solve_feasibility, verify_certificate
from ..optimizer import (
    maximize_p3,
    maximize_p4,
    maximize_p5,
    root_xstar,
    verify_chain,
)
from ..serialize import dumps_hg, loads_hg
from ..weighting import nonnegativity_check, weighting_w_H, verify_fractional_sts
from . import schemas


def hypergraph_from_model(model: schemas.HypergraphIn) -> Hypergraph:
    if model.hg_text is not None:
        return loads_hg(model.hg_text)
    return build_hypergraph(model.r, model.n, [tuple(e) for e in model.edges])


def summarize(h: Hypergraph) -> schemas.HypergraphSummary:
    stats = codegree_stats(h)
    shadow_size = len(shadow(h))
    total = 1
    for i in range(h.r - 1):
        total = total * (h.n - i) // (i + 1)
    return schemas.HypergraphSummary(
        r=h.r,
        n=h.n,
        num_edges=h.num_edges,
        min_codegree=stats.min_codegree,
        essential_min_codegree=stats.essential_min_codegree,
        shadow_min_degree=stats.shadow_min_degree,
        shadow_size=shadow_size,
        shadow_complete=h.n >= h.r - 1 and shadow_size == total,
    )


def handle_weight(req: schemas.WeightRequest) -> schemas.WeightResponse:
    h = hypergraph_from_model(req.hypergraph)
    w = weighting_w_H(h)
    report = verify_fractional_sts(h, w)
    nonneg = nonnegativity_check(h)
    return schemas.WeightResponse(
        summary=summarize(h),
        weighting=schemas.WeightingJson(**w.to_json_dict()),
        report=schemas.PairDegreeReportJson(**report.to_json_dict()),
        nonnegativity=schemas.NonnegativityJson(**nonneg.to_json_dict()),
        verdict=nonneg.is_fractional_sts,
    )


def handle_lp_solve(req: schemas.LpSolveRequest) -> schemas.LpSolveResponse:
    h = hypergraph_from_model(req.hypergraph)
    problem = build_fsts_lp(h, all_tuples=req.all_tuples)
    outcome = solve_feasibility(problem)
    verified = verify_certificate(problem, outcome)
    return schemas.LpSolveResponse(
        status=outcome.status,
        num_vars=problem.num_vars,
        num_rows=problem.num_rows,
        mode=problem.mode,
        witness=None
        if outcome.witness is None
        else schemas.WeightingJson(**outcome.witness.to_json_dict()),
        certificate=None
        if outcome.certificate is None
        else schemas.CertificateJson(**outcome.certificate.to_json_dict()),
        verified=verified,
    )


def handle_optimize(req: schemas.OptimizeRequest) -> schemas.OptimizeResponse:
    if req.program == "p5":
        result = maximize_p5(req.d)
    elif req.program == "p4":
        result = maximize_p4(req.d)
    else:
        result = maximize_p3(req.d, seed=req.seed, threads=req.threads)
    return schemas.OptimizeResponse(
        program=req.program,
        d=req.d,
        value=result.value,
        point=result.point,
        iterations=result.evaluations,
    )


def handle_root(req: schemas.RootRequest) -> schemas.RootResponse:
    report = root_xstar(req.tol)
    return schemas.RootResponse(**report.to_json_dict())


def handle_verify_chain(req: schemas.VerifyChainRequest) -> schemas.VerifyChainResponse:
    report = verify_chain(req.d, tol=req.tol, seed=req.seed)
    return schemas.VerifyChainResponse(**report.to_json_dict())


def handle_gen(req: schemas.GenRequest) -> schemas.GenResponse:
    parts = None
    if req.kind == "complete":
        if req.n is None:
            raise InputError("gen complete needs n")
        h = complete_hypergraph(req.r, req.n)
    elif req.kind == "space-barrier":
        if req.n is None:
            raise InputError("gen space-barrier needs n")
        ph = space_barrier_tripartite(req.n)
        h, parts = ph.hypergraph, list(ph.part_sizes)
    elif req.kind == "parity-blocker":
        if not req.parts:
            raise InputError("gen parity-blocker needs part sizes")
        ph = parity_blocker(req.r, tuple(req.parts))
        h, parts = ph.hypergraph, list(ph.part_sizes)
    else:
        if req.n is None or req.floor is None:
            raise InputError("gen random needs n and floor")
        h = random_min_codegree(req.n, req.floor, req.seed)
    return schemas.GenResponse(
        hg_text=dumps_hg(h), summary=summarize(h), parts=parts
    )


def handle_certify_parity(req: schemas.CertifyParityRequest) -> schemas.CertifyParityResponse:
    h = hypergraph_from_model(req.hypergraph)
    sizes = tuple(req.parts)
    if sum(sizes) != h.n:
        raise InputError(
            f"part sizes {sizes} sum to {sum(sizes)}, host has {h.n} vertices"
        )
    start = 0
    parts = []
    for size in sizes:
        parts.append(tuple(range(start, start + size)))
        start += size
    ph = PartitionedHypergraph(h, tuple(parts))
    cert = parity_certificate(ph)
    return schemas.CertifyParityResponse(**cert.to_json_dict())


def handle_version() -> schemas.VersionResponse:
    return schemas.VersionResponse(name="fsts", version=__version__)
