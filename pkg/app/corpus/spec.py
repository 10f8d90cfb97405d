from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from app.errors import MalformedInputError
from app.infra.settings import get_settings


class CorpusSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    seed: int = 0
    count: int = Field(default=20, gt=0)
    max_objects: int = Field(default=3, gt=0)
    max_hom: int = Field(default=3, gt=0)
    density_required: bool = False
    instance: Literal["set", "quantale"] = "set"
    quantale: Literal["2", "chain-3"] = "2"
    # every preorder up to max_objects, one per isomorphism class; count is ignored
    exhaustive: bool = False

    @model_validator(mode="after")
    def _within_caps(self) -> "CorpusSpec":
        settings = get_settings()
        if self.max_objects > settings.max_objects:
            raise ValueError(f"max_objects {self.max_objects} exceeds cap {settings.max_objects}")
        if self.max_hom > settings.max_het:
            raise ValueError(f"max_hom {self.max_hom} exceeds cap {settings.max_het}")
        if self.exhaustive and self.instance != "quantale":
            raise ValueError("exhaustive sweeps enumerate quantale instances only")
        return self


def corpus_spec(**fields) -> CorpusSpec:
    try:
        return CorpusSpec(**fields)
    except ValidationError as exc:
        error = exc.errors()[0]
        raise MalformedInputError(f"corpus spec: {error['msg']}", tuple(error["loc"])) from exc
