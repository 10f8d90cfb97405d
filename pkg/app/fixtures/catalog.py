"""Bundled input documents, kept as plain dicts in the wire format.

``span`` is the freestanding span with its constant monad; the ``broken-*``
entries each break exactly one law.
"""

import copy
from itertools import combinations

from app.errors import MalformedInputError
from app.schemas.models import Document
from app.schemas.parse import load_document


def _cat(objects: list[str], arrows: list[tuple[str, str, str]], compose: list[tuple[str, str, str]] = ()) -> dict:
    """Category with ``id_<obj>`` identities; unit composites are filled in."""
    ids = [(f"id_{o}", o, o) for o in objects]
    table = [(f"id_{o}", f"id_{o}", f"id_{o}") for o in objects]
    for name, s, t in arrows:
        table += [(f"id_{s}", name, name), (name, f"id_{t}", name)]
    return {
        "objects": objects,
        "morphisms": [{"id": i, "src": s, "tgt": t} for i, s, t in ids + arrows],
        "identities": {o: f"id_{o}" for o in objects},
        "compose": table + list(compose),
    }


def _identity_functor(name: str, cat: dict) -> dict:
    return {
        "source": name,
        "target": name,
        "obj_map": {o: o for o in cat["objects"]},
        "mor_map": {m["id"]: m["id"] for m in cat["morphisms"]},
    }


def _identity_monad(root: str, cat: dict) -> dict:
    """``t = 1``, ``η = id``, ``f† = f``."""
    return {
        "root": root,
        "t_ob": {o: o for o in cat["objects"]},
        "eta": {o: f"id_{o}" for o in cat["objects"]},
        "dagger": [[m["src"], m["tgt"], m["id"], m["id"]] for m in cat["morphisms"]],
    }


TERMINAL = _cat(["*"], [])
ARROW = _cat(["0", "1"], [("u", "0", "1")])
SPAN = _cat(["tri", "cotri", "diamond"], [("w", "diamond", "tri"), ("v", "diamond", "cotri")])
COSPAN = _cat(["tri", "cotri", "diamond"], [("w", "tri", "diamond"), ("v", "cotri", "diamond")])

# one object, x ⨾ y = x
LEFT_ZERO = _cat(["*"], [("a", "*", "*"), ("b", "*", "*")], [("a", "a", "a"), ("a", "b", "a"), ("b", "a", "b"), ("b", "b", "b")])
# a ⨾ a = b but a ⨾ (a ⨾ a) = a
MAGMA = _cat(["*"], [("a", "*", "*"), ("b", "*", "*")], [("a", "a", "b"), ("a", "b", "a"), ("b", "a", "b"), ("b", "b", "b")])
Z2 = _cat(["*"], [("s", "*", "*")], [("s", "s", "id_*")])


def _broken_span() -> dict:
    cat = copy.deepcopy(SPAN)
    cat["compose"] = [row if tuple(row) != ("w", "id_tri", "w") else ("w", "id_tri", "id_tri") for row in cat["compose"]]
    return cat


def _constant_at(source: str, obj: str) -> dict:
    return {"source": source, "target": "V", "obj_map": {"*": obj}, "mor_map": {"id_*": f"id_{obj}"}}


SET_FIXTURES: dict[str, dict] = {
    "terminal": {
        "description": "the terminal category with its identity monad",
        "categories": {"1": TERMINAL},
        "functors": {"j": _identity_functor("1", TERMINAL)},
        "monad": _identity_monad("j", TERMINAL),
    },
    "arrow": {
        "description": "the arrow category 0 -> 1 with its identity monad",
        "categories": {"2": ARROW},
        "functors": {"j": _identity_functor("2", ARROW)},
        "monad": _identity_monad("j", ARROW),
    },
    "span": {
        "description": "freestanding span with the constant monad at cotri, relative to the point diamond",
        "categories": {"1": TERMINAL, "V": SPAN},
        "functors": {"j": _constant_at("1", "diamond")},
        "monad": {
            "root": "j",
            "t_ob": {"*": "cotri"},
            "eta": {"*": "v"},
            "dagger": [["*", "*", "v", "id_cotri"]],
        },
    },
    "cospan": {
        "description": "the op-dual of span: a relative comonad on the freestanding cospan",
        "categories": {"1": TERMINAL, "V": COSPAN},
        "functors": {"j": _constant_at("1", "diamond")},
        "comonad": {
            "root": "j",
            "t_ob": {"*": "cotri"},
            "eps": {"*": "v"},
            "dagger": [["*", "*", "v", "id_cotri"]],
        },
    },
    "ff-root": {
        "description": "trivial monad on the fully faithful, dense root picking 1 in the arrow category",
        "categories": {"1": TERMINAL, "2": ARROW},
        "functors": {"j": {"source": "1", "target": "2", "obj_map": {"*": "1"}, "mor_map": {"id_*": "id_1"}}},
        "monad": {"root": "j", "t_ob": {"*": "1"}, "eta": {"*": "id_1"}, "dagger": [["*", "*", "id_1", "id_1"]]},
    },
    "loose-point": {
        "description": "the singleton promonad on the point",
        "categories": {"1": TERMINAL},
        "distributors": {
            "p": {
                "left": "1",
                "right": "1",
                "het": [{"left": "*", "right": "*", "elements": ["v"]}],
                "left_action": [["id_*", "*", "v", "v"]],
                "right_action": [["*", "v", "id_*", "v"]],
            }
        },
        "loose_monad": {"carrier": "p", "mu": [["*", "*", "*", "v", "v", "v"]], "eta": {"id_*": "v"}},
    },
    "broken-unit": {
        "description": "span with w ⨾ id_tri redirected to id_tri",
        "categories": {"V": _broken_span()},
    },
    "broken-associativity": {
        "description": "one-object category whose composition is not associative",
        "categories": {"M": MAGMA},
    },
    "broken-naturality": {
        "description": "constant family at a on the left-zero monoid; naturality fails at b",
        "categories": {"M": LEFT_ZERO},
        "functors": {"id": _identity_functor("M", LEFT_ZERO)},
        "nat_transformations": {"alpha": {"source": "id", "target": "id", "components": {"*": "a"}}},
    },
    "broken-action": {
        "description": "right action of Z/2 on a two-element het set that forgets s ⨾ s = id",
        "categories": {"1": TERMINAL, "Z2": Z2},
        "distributors": {
            "p": {
                "left": "1",
                "right": "Z2",
                "het": [{"left": "*", "right": "*", "elements": ["x", "y"]}],
                "left_action": [["id_*", "*", "x", "x"], ["id_*", "*", "y", "y"]],
                "right_action": [
                    ["*", "x", "id_*", "x"],
                    ["*", "y", "id_*", "y"],
                    ["*", "x", "s", "x"],
                    ["*", "y", "s", "x"],
                ],
            }
        },
    },
    "broken-loose-monad": {
        "description": "unital but non-associative multiplication on a three-element het set over the point",
        "categories": {"1": TERMINAL},
        "distributors": {
            "p": {
                "left": "1",
                "right": "1",
                "het": [{"left": "*", "right": "*", "elements": ["e", "p", "q"]}],
                "left_action": [["id_*", "*", x, x] for x in ("e", "p", "q")],
                "right_action": [["*", x, "id_*", x] for x in ("e", "p", "q")],
            }
        },
        "loose_monad": {
            "carrier": "p",
            "mu": [["*", "*", "*", "e", x, x] for x in ("e", "p", "q")]
            + [["*", "*", "*", x, "e", x] for x in ("p", "q")]
            + [
                ["*", "*", "*", "p", "p", "q"],
                ["*", "*", "*", "p", "q", "p"],
                ["*", "*", "*", "q", "p", "q"],
                ["*", "*", "*", "q", "q", "q"],
            ],
            "eta": {"id_*": "e"},
        },
    },
}


def _quantale(elements: list[str], tensor, unit: str, name: str) -> dict:
    """Chain order on ``elements`` in the listed order."""
    return {
        "name": name,
        "elements": elements,
        "leq": [[a, b] for i, a in enumerate(elements) for b in elements[i:]],
        "tensor": [[a, b, tensor(a, b)] for a in elements for b in elements],
        "unit": unit,
    }


def _chain_min(elements: list[str], unit: str, name: str) -> dict:
    return _quantale(elements, lambda a, b: elements[min(elements.index(a), elements.index(b))], unit, name)


BOOL = _chain_min(["0", "1"], "1", "2")
CHAIN3 = _chain_min(["0", "1/2", "1"], "1", "chain-3")


def _preorder(objects: list[str], leq, top: str = "1", bottom: str = "0") -> dict:
    return {"objects": objects, "hom": [[x, y, top if leq(x, y) else bottom] for x in objects for y in objects]}


def _chain_vcat(n: int, top: str = "1") -> dict:
    return _preorder([str(i) for i in range(n)], lambda x, y: int(x) <= int(y), top)


def _subsets(atoms: list[str]) -> list[str]:
    return ["{" + ",".join(c) + "}" for r in range(len(atoms) + 1) for c in combinations(atoms, r)]


def _powerset_vcat(atoms: list[str]) -> dict:
    def members(s: str) -> set[str]:
        return set(filter(None, s.strip("{}").split(",")))

    return _preorder(_subsets(atoms), lambda x, y: members(x) <= members(y))


def _sub(vcat: dict, objects: list[str]) -> dict:
    return {
        "objects": objects,
        "hom": [row for row in vcat["hom"] if row[0] in objects and row[1] in objects],
    }


def _inclusion(source: str, objects: list[str]) -> dict:
    return {"source": source, "target": "E", "obj_map": {o: o for o in objects}}


POWERSET = _powerset_vcat(["x", "y"])
CHAIN3_E = _chain_vcat(3)

QUANTALE_FIXTURES: dict[str, dict] = {
    "two-chain": {
        "description": "the 2-chain preorder over the boolean quantale",
        "quantale": BOOL,
        "vcats": {"A": _chain_vcat(2)},
    },
    "discrete-two": {
        "description": "two unrelated objects over the boolean quantale",
        "quantale": BOOL,
        "vcats": {"A": _preorder(["0", "1"], lambda x, y: x == y)},
    },
    "chain3-quantale": {
        "description": "the three-element min quantale with its 2-chain",
        "quantale": CHAIN3,
        "vcats": {"A": _chain_vcat(2)},
    },
    "powerset": {
        "description": "subsets of {x,y}, root the singletons, t({x}) = {x,y}, t({y}) = {y}",
        "quantale": BOOL,
        "vcats": {"E": POWERSET, "A": _sub(POWERSET, ["{x}", "{y}"])},
        "vfunctors": {"j": _inclusion("A", ["{x}", "{y}"])},
        "v_monad": {"root": "j", "t_ob": {"{x}": "{x,y}", "{y}": "{y}"}},
    },
    "chain3-nondense": {
        "description": "root {0, 2} in the 3-chain, t(0) = 1, t(2) = 2",
        "quantale": BOOL,
        "vcats": {"E": CHAIN3_E, "A": _sub(CHAIN3_E, ["0", "2"])},
        "vfunctors": {"j": _inclusion("A", ["0", "2"])},
        "v_monad": {"root": "j", "t_ob": {"0": "1", "2": "2"}},
    },
    "chain3-identity": {
        "description": "identity monad on the 3-chain",
        "quantale": BOOL,
        "vcats": {"E": CHAIN3_E},
        "vfunctors": {"j": _inclusion("E", ["0", "1", "2"])},
        "v_monad": {"root": "j", "t_ob": {o: o for o in ["0", "1", "2"]}},
    },
    "broken-quantale-unit": {
        "description": "the boolean lattice with ⊗ = ∧ but unit 0",
        "quantale": _chain_min(["0", "1"], "0", "2-unit-0"),
    },
    "broken-residuation": {
        "description": "the boolean lattice with ⊗ = ∨ and unit 0; the tensor keeps no bottom",
        "quantale": _quantale(["0", "1"], lambda a, b: max(a, b), "0", "2-join"),
    },
}

FIXTURES: dict[str, dict] = {**SET_FIXTURES, **QUANTALE_FIXTURES}


def fixture_names() -> list[str]:
    return sorted(FIXTURES)


def raw_fixture(name: str) -> dict:
    try:
        body = FIXTURES[name]
    except KeyError:
        raise MalformedInputError(f"unknown fixture {name!r}") from None
    return {"name": name, **copy.deepcopy(body)}


def load_fixture(name: str) -> Document:
    return load_document(raw_fixture(name))
