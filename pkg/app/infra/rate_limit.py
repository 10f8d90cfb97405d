from slowapi import Limiter
from slowapi.util import get_remote_address

from app.infra.settings import get_settings

limiter = Limiter(key_func=get_remote_address)


def corpus_rate() -> str:
    """Limit for ``POST /api/corpus``; read on each request so ``RELMONAD_CORPUS_RATE`` applies without a restart."""
    return get_settings().corpus_rate
