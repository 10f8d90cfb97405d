#!/usr/bin/env python3
"""Export fixtures - writes every bundled fixture as a JSON input document."""

import sys
sys.path.insert(0, ".")

from pathlib import Path

from dotenv import load_dotenv
load_dotenv()

from app.fixtures.catalog import fixture_names, load_fixture
from app.schemas.parse import dump_json


def export_fixtures(target: Path) -> None:
    """Write ``<name>.json`` for each fixture under ``target``."""
    target.mkdir(parents=True, exist_ok=True)
    names = fixture_names()
    print(f"Writing {len(names)} fixtures to {target}/")
    for name in names:
        path = target / f"{name}.json"
        path.write_text(dump_json(load_fixture(name)) + "\n")
        print(f"  {path.name}")
    print("Done.")


if __name__ == "__main__":
    export_fixtures(Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures"))
