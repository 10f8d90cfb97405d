from fastapi import APIRouter

from app.fixtures.catalog import fixture_names, load_fixture

router = APIRouter()


@router.get("/fixtures")
async def list_fixtures():
    return [{"name": name, "description": load_fixture(name).description} for name in fixture_names()]


@router.get("/fixtures/{name}")
async def get_fixture(name: str):
    """The fixture as an input document; unknown names are answered with 422."""
    return load_fixture(name).model_dump(mode="json")
