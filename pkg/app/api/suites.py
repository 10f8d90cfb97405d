import asyncio

from fastapi import APIRouter, HTTPException

from app.cli import SUITE_NAMES, execute_suite
from app.schemas.models import SuiteInputs

router = APIRouter()


@router.get("/suites")
async def list_suites():
    return {"suites": SUITE_NAMES}


@router.post("/suites/{suite}")
async def run(suite: str, payload: SuiteInputs):
    """Same suites as the command line; the report body is the JSON report."""
    if suite == "corpus":
        raise HTTPException(status_code=404, detail="use POST /api/corpus for corpus sweeps")
    if suite not in SUITE_NAMES:
        raise HTTPException(status_code=404, detail=f"unknown suite {suite!r}")
    report = await asyncio.to_thread(execute_suite, suite, payload)
    return {"exit_code": report.exit_code, "report": report.model_dump(mode="json")}
