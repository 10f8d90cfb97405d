import asyncio

from fastapi import APIRouter, Request

from app.cli import execute_suite
from app.infra.rate_limit import corpus_rate, limiter
from app.schemas.models import SuiteInputs

router = APIRouter()


@router.post("/corpus")
@limiter.limit(corpus_rate)
async def run_corpus(request: Request, payload: SuiteInputs):
    report = await asyncio.to_thread(execute_suite, "corpus", payload)
    return {"exit_code": report.exit_code, "report": report.model_dump(mode="json")}
