"""Turn wire documents into core values."""

import json
from collections.abc import Mapping
from functools import cached_property
from pathlib import Path

from pydantic import ValidationError

from app.errors import MalformedInputError
from app.fincat.ops import make_category
from app.fincat.types import Distributor, FinCat, Functor, NatTransformation
from app.infra.settings import ensure_within, get_settings
from app.loosemonad.types import LooseMonad
from app.quantale.types import Quantale, VCat, VFunctor, VRelMonad
from app.relmonad.types import RelativeComonad, RelativeMonad
from app.schemas.models import SCHEMA_VERSION, Document


def load_document(raw: str | bytes | Mapping) -> Document:
    try:
        if isinstance(raw, Mapping):
            doc = Document.model_validate(raw)
        else:
            doc = Document.model_validate_json(raw)
    except ValidationError as exc:
        raise MalformedInputError(f"schema error: {exc.errors()[0]['msg']}", tuple(exc.errors()[0]["loc"])) from exc
    if doc.schema_version != SCHEMA_VERSION:
        raise MalformedInputError(f"unsupported schema_version {doc.schema_version}")
    return doc


def read_document(path: str | Path) -> Document:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from exc
    return load_document(text)


def _lookup(table: Mapping, key, what: str):
    try:
        return table[key]
    except KeyError:
        raise MalformedInputError(f"unknown {what} {key!r}") from None


def _total(mapping: Mapping[str, str], keys, what: str) -> list[str]:
    missing = [k for k in keys if k not in mapping]
    if missing:
        raise MalformedInputError(f"{what} is not total", tuple(missing))
    return [mapping[k] for k in keys]


class Parsed:
    """Lazy name resolution over one ``Document``."""

    def __init__(self, doc: Document):
        self.doc = doc
        self._categories: dict[str, FinCat] = {}
        self._functors: dict[str, Functor] = {}
        self._vcats: dict[str, VCat] = {}

    def _need(self, value, what: str):
        if value is None:
            raise MalformedInputError(f"document has no {what}")
        return value

    def category(self, name: str) -> FinCat:
        if name not in self._categories:
            m = _lookup(self.doc.categories, name, "category")
            self._categories[name] = make_category(
                m.objects,
                [(x.id, x.src, x.tgt) for x in m.morphisms],
                m.identities,
                m.compose,
            )
        return self._categories[name]

    def functor(self, name: str) -> Functor:
        if name not in self._functors:
            m = _lookup(self.doc.functors, name, "functor")
            A, B = self.category(m.source), self.category(m.target)
            ob = [_lookup({o: i for i, o in enumerate(B.objects)}, o, "object")
                  for o in _total(m.obj_map, A.objects, f"object map of {name}")]
            mor = [_lookup({f: i for i, f in enumerate(B.names)}, f, "morphism")
                   for f in _total(m.mor_map, A.names, f"morphism map of {name}")]
            self._functors[name] = Functor(A, B, tuple(ob), tuple(mor))
        return self._functors[name]

    def nat_transformation(self, name: str) -> NatTransformation:
        m = _lookup(self.doc.nat_transformations, name, "natural transformation")
        F, G = self.functor(m.source), self.functor(m.target)
        names = {f: i for i, f in enumerate(F.target.names)}
        components = [_lookup(names, f, "morphism") for f in _total(m.components, F.source.objects, name)]
        return NatTransformation(F, G, tuple(components))

    def distributor(self, name: str) -> Distributor:
        m = _lookup(self.doc.distributors, name, "distributor")
        C, D = self.category(m.left), self.category(m.right)
        cobj = {o: i for i, o in enumerate(C.objects)}
        dobj = {o: i for i, o in enumerate(D.objects)}
        cmor = {f: i for i, f in enumerate(C.names)}
        dmor = {f: i for i, f in enumerate(D.names)}
        het = {(c, d): () for c in range(C.n_objects) for d in range(D.n_objects)}
        for entry in m.het:
            key = (_lookup(cobj, entry.left, "object"), _lookup(dobj, entry.right, "object"))
            ensure_within("het set", len(entry.elements), get_settings().max_het)
            het[key] = tuple(entry.elements)
        left_action = {
            (_lookup(cmor, u, "morphism"), _lookup(dobj, d, "object"), x): y for u, d, x, y in m.left_action
        }
        right_action = {
            (_lookup(cobj, c, "object"), x, _lookup(dmor, v, "morphism")): y for c, x, v, y in m.right_action
        }
        return Distributor(C, D, het, left_action, right_action)

    def _root_data(self, root: str, t_ob: Mapping[str, str], unit: Mapping[str, str], dagger):
        j = self.functor(root)
        A, E = j.source, j.target
        eobj = {o: i for i, o in enumerate(E.objects)}
        emor = {f: i for i, f in enumerate(E.names)}
        aobj = {o: i for i, o in enumerate(A.objects)}
        t = tuple(_lookup(eobj, e, "object") for e in _total(t_ob, A.objects, "carrier"))
        u = tuple(_lookup(emor, f, "morphism") for f in _total(unit, A.objects, "unit"))
        table = {
            (_lookup(aobj, x, "object"), _lookup(aobj, y, "object"), _lookup(emor, f, "morphism")):
                _lookup(emor, g, "morphism")
            for x, y, f, g in dagger
        }
        return j, t, u, table

    @cached_property
    def monad(self) -> RelativeMonad:
        m = self._need(self.doc.monad, "monad")
        return RelativeMonad(*self._root_data(m.root, m.t_ob, m.eta, m.dagger))

    @cached_property
    def comonad(self) -> RelativeComonad:
        m = self._need(self.doc.comonad, "comonad")
        return RelativeComonad(*self._root_data(m.root, m.t_ob, m.eps, m.dagger))

    @cached_property
    def loose_monad(self) -> LooseMonad:
        m = self._need(self.doc.loose_monad, "loose monad")
        p = self.distributor(m.carrier)
        if p.left != p.right:
            raise MalformedInputError("loose monad carrier must be an endo-distributor")
        A = p.left
        obj = {o: i for i, o in enumerate(A.objects)}
        mu = {
            (_lookup(obj, x, "object"), _lookup(obj, y, "object"), _lookup(obj, z, "object"), s, t): r
            for x, y, z, s, t, r in m.mu
        }
        eta = tuple(_total(m.eta, A.names, "loose unit"))
        return LooseMonad(A, p, mu, eta)

    @cached_property
    def quantale(self) -> Quantale:
        m = self._need(self.doc.quantale, "quantale")
        tensor = {(a, b): c for a, b, c in m.tensor}
        residuals = {(k, x, y): v for k, x, y, v in m.residuals}
        return Quantale.of(m.elements, m.leq, tensor, m.unit, m.name, residuals)

    def vcat(self, name: str) -> VCat:
        if name not in self._vcats:
            m = _lookup(self.doc.vcats, name, "V-category")
            obj = {o: i for i, o in enumerate(m.objects)}
            hom = {(_lookup(obj, x, "object"), _lookup(obj, y, "object")): v for x, y, v in m.hom}
            self._vcats[name] = VCat.of(self.quantale, m.objects, hom)
        return self._vcats[name]

    def vfunctor(self, name: str) -> VFunctor:
        m = _lookup(self.doc.vfunctors, name, "V-functor")
        A, B = self.vcat(m.source), self.vcat(m.target)
        obj = {o: i for i, o in enumerate(B.objects)}
        ob = [_lookup(obj, o, "object") for o in _total(m.obj_map, A.objects, f"object map of {name}")]
        return VFunctor(A, B, tuple(ob))

    @cached_property
    def v_monad(self) -> VRelMonad:
        m = self._need(self.doc.v_monad, "V-monad")
        j = self.vfunctor(m.root)
        obj = {o: i for i, o in enumerate(j.target.objects)}
        t = [_lookup(obj, e, "object") for e in _total(m.t_ob, j.source.objects, "carrier")]
        return VRelMonad(j, tuple(t))


def dump_json(model) -> str:
    return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True)
