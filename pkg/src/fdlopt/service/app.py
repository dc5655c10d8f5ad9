"""HTTP front end over the core package.

Domain errors (bad (m, k), malformed profiles, brute-force cap hits) map to
400 responses; request-shape violations get FastAPI's usual 422.
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__
from ..construction import build_construction
from ..errors import DomainError
from ..optimizer import design
from ..oracle import lemma_suites, verify_design
from ..profiles import design_profile
from ..serialize import design_payload, tables_payload, value_payload, verify_payload
from ..tables import table_rows, tables_csv
from . import schemas

_MAX_REPORTED_FAILURES = 20


def create_app() -> FastAPI:
    app = FastAPI(
        title="fdlopt",
        version=__version__,
        description=(
            "Optimal fiber-delay-line allocation for optical queues with a "
            "bounded number of recirculations"
        ),
    )

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/design", response_model=schemas.DesignResponse)
    def design_endpoint(req: schemas.DesignRequest):
        return design_payload(design(req.m, req.k))

    @app.post("/value", response_model=schemas.ValueResponse)
    def value_endpoint(req: schemas.ValueRequest):
        profile = design_profile(req.profile, req.m, req.k)
        return value_payload(build_construction(profile))

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify_endpoint(req: schemas.VerifyRequest):
        result, optimum, agree = verify_design(req.m, req.k, cap=req.brute_cap)
        return verify_payload(result, optimum, agree)

    @app.get("/tables", response_model=schemas.TablesResponse)
    def tables_endpoint():
        return tables_payload(table_rows())

    @app.get("/tables.csv", response_class=PlainTextResponse)
    def tables_csv_endpoint() -> str:
        return tables_csv()

    @app.post("/lemmas", response_model=schemas.LemmasResponse)
    def lemmas_endpoint(req: schemas.LemmasRequest):
        suites = []
        failures: list[str] = []
        for name, records in lemma_suites(
            max_m=req.max_m, seed=req.seed, samples=req.samples
        ):
            cases = violations = 0
            for record in records:
                cases += 1
                if not record.ok:
                    violations += 1
                    if len(failures) < _MAX_REPORTED_FAILURES:
                        failures.append(record.line())
            suites.append(
                schemas.SuiteSummary(suite=name, cases=cases, violations=violations)
            )
        return schemas.LemmasResponse(
            ok=not any(s.violations for s in suites),
            seed=req.seed,
            samples=req.samples,
            max_m=req.max_m,
            suites=suites,
            failures=failures,
        )

    return app


app = create_app()
