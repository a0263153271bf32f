"""HTTP service exposing every query and verification as an endpoint.

All computation is exact and stateless apart from memo tables, so a single
long-lived process serves concurrent clients and only gets faster as its
character caches warm up.  Domain errors surface as HTTP 400 with the
originating message; malformed payloads are rejected by the schema layer
as 422.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, HTTPException

from .. import characters, euler, localcoh, orbits, quiver, simples, verify
from ..errors import (
    InternalInconsistencyError,
    PathSpaceError,
    StabilizationError,
    TableDomainError,
)
from ..weights import TripleWeight
from . import schemas

_DOMAIN_ERRORS = (
    ValueError,
    KeyError,
    StabilizationError,
    TableDomainError,
    PathSpaceError,
    InternalInconsistencyError,
)

# Widest per-request window the dump endpoint will scan.
MAX_DUMP_SPAN = 24


def _weight(data) -> TripleWeight:
    return TripleWeight.from_lists(data)


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _DOMAIN_ERRORS as exc:
        message = exc.args[0] if exc.args else str(exc)
        raise HTTPException(status_code=400, detail=str(message))


def create_app() -> FastAPI:
    app = FastAPI(
        title="hypermod",
        description=(
            "Exact multiplicities, quiver data, local cohomology and orbit "
            "classification for equivariant modules on 2x2x2 hypermatrices."
        ),
    )

    @app.get("/")
    def root() -> dict:
        return {
            "name": "hypermod",
            "endpoints": [
                "/mult",
                "/simple-mult",
                "/dump",
                "/euler",
                "/witness-table",
                "/quiver/paths",
                "/quiver/check",
                "/lc",
                "/classify",
                "/verify",
                "/verify/targets",
            ],
        }

    @app.post("/mult", response_model=schemas.MultResponse)
    def mult(req: schemas.MultRequest):
        fn = _guard(characters.character_fn, req.module)
        value = _guard(fn, _guard(_weight, req.weight))
        return schemas.MultResponse(module=req.module, weight=req.weight, value=value)

    @app.post("/simple-mult", response_model=schemas.SimpleMultResponse)
    def simple_mult(req: schemas.SimpleMultRequest):
        try:
            sid = simples.SimpleId(req.simple)
        except ValueError:
            raise HTTPException(
                status_code=400,
                detail=f"unknown simple {req.simple!r}; expected one of "
                + ", ".join(s.value for s in simples.SimpleId),
            )
        value = _guard(simples.mult_simple, sid, _guard(_weight, req.weight))
        return schemas.SimpleMultResponse(
            simple=req.simple, weight=req.weight, value=value, known=value is not None
        )

    @app.post("/dump", response_model=schemas.DumpResponse)
    def dump(req: schemas.DumpRequest):
        if req.hi - req.lo > MAX_DUMP_SPAN:
            raise HTTPException(
                status_code=400,
                detail=f"window span {req.hi - req.lo} exceeds the limit {MAX_DUMP_SPAN}",
            )
        entries = _guard(characters.dump_window, req.module, req.lo, req.hi)
        return schemas.DumpResponse(
            module=req.module,
            lo=req.lo,
            hi=req.hi,
            entries={
                json.dumps(w.to_lists(), separators=(",", ":")): v
                for w, v in entries.items()
            },
        )

    @app.post("/euler", response_model=schemas.EulerResponse)
    def euler_endpoint(req: schemas.EulerRequest):
        value = _guard(euler.euler_mult, _guard(_weight, req.weight))
        return schemas.EulerResponse(weight=req.weight, value=value)

    @app.get("/witness-table", response_model=schemas.WitnessTableResponse)
    def witness_table():
        return schemas.WitnessTableResponse(
            rows=[schemas.WitnessRow(**row) for row in simples.witness_table()]
        )

    @app.post("/quiver/paths", response_model=schemas.QuiverPathsResponse)
    def quiver_paths(req: schemas.QuiverPathsRequest):
        q, rels = quiver.module_category_quiver()
        basis = _guard(quiver.path_basis, q, rels, req.source, req.target, req.length_cap)
        return schemas.QuiverPathsResponse(
            source=req.source,
            target=req.target,
            dim=basis.dim,
            dims_by_length={k: v for k, v in basis.dims.items() if v},
            paths=[list(p) for p in basis.representatives()],
        )

    @app.get("/quiver/check", response_model=schemas.QuiverCheckResponse)
    def quiver_check():
        report = _guard(quiver.quiver_consistency_report)
        return schemas.QuiverCheckResponse(**report)

    @app.post("/lc", response_model=schemas.LCResponse)
    def lc_endpoint(req: schemas.LCRequest):
        def run():
            module = localcoh.ModuleId(req.module)
            supports = [localcoh.OrbitId(z) for z in req.supports]
            return localcoh.iterated_lc(module, supports)

        table = _guard(run)
        entries = {
            json.dumps(list(degrees), separators=(",", ":")): sorted(
                m.value for m in mods.elements()
            )
            for degrees, mods in sorted(table.items())
            if mods
        }
        return schemas.LCResponse(module=req.module, supports=req.supports, entries=entries)

    @app.post("/classify", response_model=schemas.ClassifyResponse)
    def classify(req: schemas.ClassifyRequest):
        t = _guard(orbits.Tensor222.from_nested, req.tensor)
        return schemas.ClassifyResponse(
            orbit=orbits.classify_orbit(t).value,
            dim=orbits.orbit_dim(t),
            flattening_ranks=list(orbits.flattening_ranks(t)),
            hyperdet=str(orbits.hyperdet(t)),
        )

    @app.get("/verify/targets", response_model=schemas.TargetsResponse)
    def verify_targets():
        return schemas.TargetsResponse(targets=["all"] + verify.target_names())

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def run_verify(req: schemas.VerifyRequest):
        if req.target == "all":
            results = _guard(verify.run_all, dmax=req.dmax, seed=req.seed)
        else:
            results = [_guard(verify.run_target, req.target, dmax=req.dmax, seed=req.seed)]
        return schemas.VerifyResponse(
            target=req.target,
            passed=all(r.passed for r in results),
            results=[r.as_dict() for r in results],
        )

    return app


app = create_app()
