"""Wire models for input documents.

Everything is referenced by name. Composition triples are diagrammatic:
``[f, g, h]`` means ``f ⨾ g = h``.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class WireModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class MorphismModel(WireModel):
    id: str
    src: str
    tgt: str


class CategoryModel(WireModel):
    objects: list[str]
    morphisms: list[MorphismModel]
    identities: dict[str, str]
    compose: list[tuple[str, str, str]]


class FunctorModel(WireModel):
    source: str
    target: str
    obj_map: dict[str, str]
    mor_map: dict[str, str]


class NatTransformationModel(WireModel):
    source: str
    target: str
    components: dict[str, str]


class HetEntry(WireModel):
    left: str
    right: str
    elements: list[str]


class DistributorModel(WireModel):
    """``left_action`` rows are ``[u, d, x, u·x]``; ``right_action`` rows are ``[c, x, v, x·v]``."""

    left: str
    right: str
    het: list[HetEntry]
    left_action: list[tuple[str, str, str, str]]
    right_action: list[tuple[str, str, str, str]]


class MonadModel(WireModel):
    root: str
    t_ob: dict[str, str]
    eta: dict[str, str]
    dagger: list[tuple[str, str, str, str]]


class ComonadModel(WireModel):
    root: str
    t_ob: dict[str, str]
    eps: dict[str, str]
    dagger: list[tuple[str, str, str, str]]


class LooseMonadModel(WireModel):
    """``mu`` rows are ``[x, y, z, p, q, p⨾q]``; ``eta`` maps morphisms of the base to elements."""

    carrier: str
    mu: list[tuple[str, str, str, str, str, str]]
    eta: dict[str, str]


class QuantaleModel(WireModel):
    elements: list[str]
    leq: list[tuple[str, str]]
    tensor: list[tuple[str, str, str]]
    unit: str
    residuals: list[tuple[str, str, str, str]] = Field(default_factory=list)
    name: str = ""


class VCatModel(WireModel):
    objects: list[str]
    hom: list[tuple[str, str, str]]


class VFunctorModel(WireModel):
    source: str
    target: str
    obj_map: dict[str, str]


class VMonadModel(WireModel):
    root: str
    t_ob: dict[str, str]


class Document(WireModel):
    """One input file. Suites read the sections they need."""

    schema_version: int = SCHEMA_VERSION
    name: str = ""
    description: str = ""
    categories: dict[str, CategoryModel] = Field(default_factory=dict)
    functors: dict[str, FunctorModel] = Field(default_factory=dict)
    nat_transformations: dict[str, NatTransformationModel] = Field(default_factory=dict)
    distributors: dict[str, DistributorModel] = Field(default_factory=dict)
    monad: MonadModel | None = None
    comonad: ComonadModel | None = None
    loose_monad: LooseMonadModel | None = None
    quantale: QuantaleModel | None = None
    vcats: dict[str, VCatModel] = Field(default_factory=dict)
    vfunctors: dict[str, VFunctorModel] = Field(default_factory=dict)
    v_monad: VMonadModel | None = None


class SuiteInputs(WireModel):
    """What a suite run is given: one document (inline or a bundled fixture) plus flags."""

    document: Document | None = None
    fixture: str | None = None
    seed: int = 0
    count: int = 20
    max_objects: int = 3
    max_hom: int = 3
    dense: bool = False
    dual: bool = False
    chain_bound: int | None = None
    instance: Literal["set", "quantale"] = "set"
    quantale: Literal["2", "chain-3"] = "2"
    exhaustive: bool = False
