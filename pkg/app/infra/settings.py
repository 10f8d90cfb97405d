import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

from app.errors import CapacityExceededError

load_dotenv()


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@dataclass(frozen=True)
class Settings:
    max_objects: int = 16
    max_morphisms: int = 64
    max_het: int = 8
    search_budget: int = 200_000
    max_presheaves: int = 4096
    chain_bound: int = 2
    workers: int = 1
    log_level: str = "INFO"
    corpus_rate: str = "5/minute"
    frontend_url: str | None = None


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings(
        max_objects=_int_env("RELMONAD_MAX_OBJECTS", 16),
        max_morphisms=_int_env("RELMONAD_MAX_MORPHISMS", 64),
        max_het=_int_env("RELMONAD_MAX_HET", 8),
        search_budget=_int_env("RELMONAD_SEARCH_BUDGET", 200_000),
        max_presheaves=_int_env("RELMONAD_MAX_PRESHEAVES", 4096),
        chain_bound=_int_env("RELMONAD_CHAIN_BOUND", 2),
        workers=_int_env("RELMONAD_WORKERS", 1),
        log_level=os.getenv("RELMONAD_LOG_LEVEL", "INFO"),
        corpus_rate=os.getenv("RELMONAD_CORPUS_RATE", "5/minute"),
        frontend_url=os.getenv("FRONTEND_URL"),
    )


def ensure_within(what: str, size: int, limit: int) -> None:
    if size > limit:
        raise CapacityExceededError(what, size, limit)


def check_category_size(n_objects: int, n_morphisms: int) -> None:
    settings = get_settings()
    ensure_within("objects", n_objects, settings.max_objects)
    ensure_within("morphisms", n_morphisms, settings.max_morphisms)
