from dotenv import load_dotenv
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from slowapi import _rate_limit_exceeded_handler
from slowapi.errors import RateLimitExceeded

from app.api.corpus import router as corpus_router
from app.api.fixtures import router as fixtures_router
from app.api.suites import router as suites_router
from app.errors import CapacityExceededError, LabError, LawViolationError, MalformedInputError
from app.infra.logging import configure_logging
from app.infra.rate_limit import limiter
from app.infra.settings import get_settings
from app.reports.models import jsonable

load_dotenv()
settings = get_settings()
configure_logging(settings.log_level)

app = FastAPI(title="relmonad-lab")

# CORS origins - add FRONTEND_URL env var for production
cors_origins = [
    "http://localhost:3000",
    "http://127.0.0.1:3000",
]
if settings.frontend_url:
    cors_origins.append(settings.frontend_url)

app.add_middleware(
    CORSMiddleware,
    allow_origins=cors_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.state.limiter = limiter
app.add_exception_handler(
    RateLimitExceeded, _rate_limit_exceeded_handler
)


@app.exception_handler(MalformedInputError)
async def malformed_input(request: Request, exc: MalformedInputError):
    return JSONResponse(status_code=422, content={"detail": str(exc), "where": jsonable(exc.where or ())})


@app.exception_handler(CapacityExceededError)
async def capacity_exceeded(request: Request, exc: CapacityExceededError):
    return JSONResponse(status_code=413, content={"detail": str(exc), "limit": exc.limit})


@app.exception_handler(LawViolationError)
async def law_violation(request: Request, exc: LawViolationError):
    return JSONResponse(status_code=409, content={"detail": str(exc), "law": exc.law, "witness": jsonable(exc.witness)})


@app.exception_handler(LabError)
async def lab_error(request: Request, exc: LabError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


app.include_router(suites_router, prefix="/api")
app.include_router(fixtures_router, prefix="/api")
app.include_router(corpus_router, prefix="/api")
