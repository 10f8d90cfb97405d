from typing import List, Optional, TypedDict

from app.corpus.generate import Instance
from app.corpus.spec import CorpusSpec
from app.relmonad.types import RelativeComonad, RelativeMonad
from app.reports.models import Verdict


class NerveCheckState(TypedDict, total=False):
    """State for the nerve-check pipeline on one monad or comonad."""
    instance: str
    monad: Optional[RelativeMonad]
    comonad: Optional[RelativeComonad]
    dual: bool

    # Validation phase
    valid: bool

    # Results
    verdicts: List[Verdict]


class CorpusState(TypedDict, total=False):
    """State for a seeded corpus sweep."""
    spec: CorpusSpec
    chain_bound: Optional[int]
    workers: int

    # Generation phase
    instances: List[Instance]

    # Checking phase
    verdicts: List[Verdict]

    # Metadata
    summary: dict
