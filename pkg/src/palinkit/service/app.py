"""FastAPI service wrapping the toolkit.

Errors map to status codes the CLI translates into exit codes: 400 carries
``kind: usage``, 413 carries ``kind: resource``; a failed verification suite
is a normal 200 response with ``passed: false``.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, verify
from ..delta import delta_conditions
from ..errors import (
    AlphabetError,
    PreconditionError,
    ResourceLimitError,
    WordRangeError,
)
from ..omega import hunt_periodic_palindromes, scan_omega
from ..palen import mpf_enumerate, pl_profile_fast, pl_oracle
from ..wordgen import parse_family
from ..words import Word
from .models import (
    DeltaCheckRequest,
    DeltaCheckResponse,
    GenerateRequest,
    GenerateResponse,
    HealthResponse,
    HuntRequest,
    HuntResponse,
    OmegaMemberModel,
    OmegaScanRequest,
    OmegaScanResponse,
    PLRequest,
    PLResponse,
    ProfileRequest,
    ProfileResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="palinkit",
    version=__version__,
    description="Palindromic-length toolkit service",
)


def _usage(message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"kind": "usage", "message": message})


def _resource(message: str) -> HTTPException:
    return HTTPException(status_code=413, detail={"kind": "resource", "message": message})


def _resolve(payload) -> Word:
    try:
        return payload.resolve()
    except ResourceLimitError as exc:
        raise _resource(str(exc)) from exc
    except (AlphabetError, PreconditionError, WordRangeError, ValueError) as exc:
        raise _usage(str(exc)) from exc


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/pl", response_model=PLResponse)
def pl_endpoint(req: PLRequest) -> PLResponse:
    w = _resolve(req)
    value = pl_profile_fast(w).final
    factorizations = None
    if req.factorize or req.all_mpf:
        if len(w) == 0:
            factorizations = []
        else:
            limit = req.limit if req.all_mpf else 1
            try:
                facts = mpf_enumerate(w, limit=limit)
            except ResourceLimitError as exc:
                raise _resource(str(exc)) from exc
            factorizations = [[p.text() for p in f.parts] for f in facts]
    return PLResponse(word=w.text(), pl=value, factorizations=factorizations)


@app.post("/profile", response_model=ProfileResponse)
def profile_endpoint(req: ProfileRequest) -> ProfileResponse:
    w = _resolve(req)
    pl = pl_profile_fast(w).pl
    running = []
    top = 0
    for value in pl:
        if value > top:
            top = value
        running.append(top)
    return ProfileResponse(length=len(w), pl=pl, running_max=running)


@app.post("/generate", response_model=GenerateResponse)
def generate_endpoint(req: GenerateRequest) -> GenerateResponse:
    try:
        fam = parse_family(req.family)
        w = fam.generate(req.length)
    except ResourceLimitError as exc:
        raise _resource(str(exc)) from exc
    except (PreconditionError, AlphabetError) as exc:
        raise _usage(str(exc)) from exc
    return GenerateResponse(word=w.text(), length=len(w))


@app.post("/omega/scan", response_model=OmegaScanResponse)
def omega_scan_endpoint(req: OmegaScanRequest) -> OmegaScanResponse:
    w = _resolve(req)
    try:
        report = scan_omega(w, req.k, strict=req.strict, max_length=req.max_scan_length)
    except ResourceLimitError as exc:
        raise _resource(str(exc)) from exc
    return OmegaScanResponse(
        k=report.k,
        scanned_prefix_length=report.scanned_prefix_length,
        strict=report.strict,
        member_count=report.member_count,
        max_count_with_eps=report.max_count_with_eps,
        k_covers_factor_pl=report.k_covers_factor_pl,
        members=[OmegaMemberModel(**m.as_dict()) for m in report.members],
    )


@app.post("/omega/hunt", response_model=HuntResponse)
def omega_hunt_endpoint(req: HuntRequest) -> HuntResponse:
    w = _resolve(req)
    try:
        found = hunt_periodic_palindromes(
            w, req.k, req.j, strict=req.strict, max_length=req.max_scan_length
        )
    except ResourceLimitError as exc:
        raise _resource(str(exc)) from exc
    if found is None:
        return HuntResponse(found=False)
    return HuntResponse(
        found=True,
        a=found.a.text(),
        b=found.b.text(),
        exponent=found.exponent,
        period=found.period,
        host=found.host.text(),
        host_start=found.host_start,
        host_end=found.host_end,
    )


@app.post("/delta/check", response_model=DeltaCheckResponse)
def delta_check_endpoint(req: DeltaCheckRequest) -> DeltaCheckResponse:
    try:
        u = Word.parse(req.u)
        v = Word.parse(req.v)
        d = Word.parse(req.d)
    except AlphabetError as exc:
        raise _usage(str(exc)) from exc
    if len(u) == 0:
        raise _usage("u must be nonempty")
    conditions = delta_conditions(u, v, d, req.n)
    return DeltaCheckResponse(
        ok=all(conditions.values()),
        conditions=conditions,
        pl_u=pl_oracle(u),
    )


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    try:
        result = verify.run_suite(
            req.suite,
            max_len=req.max_len,
            alphabet_size=req.alphabet_size,
            max_d=req.max_d,
            max_v=req.max_v,
            n_slack=req.n_slack,
            random_words=req.random_words,
            random_len=req.random_len,
            seed=req.seed,
        )
    except PreconditionError as exc:
        raise _usage(str(exc)) from exc
    except ResourceLimitError as exc:
        raise _resource(str(exc)) from exc
    return VerifyResponse(
        suite=result.suite,
        cases=result.cases,
        passed=result.passed,
        failures=result.failures,
        records=result.records,
    )
