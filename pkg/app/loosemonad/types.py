from collections.abc import Hashable, Mapping
from dataclasses import dataclass

from app.fincat.types import Distributor, FinCat, Functor, LawReport


@dataclass(frozen=True)
class LooseMonad:
    """A monoid in endo-distributors on ``base``.

    ``mu[(x, y, z, p, q)]`` is ``p ⨾ q`` for ``p`` in het(x, y) and ``q`` in
    het(y, z); ``eta[u]`` is the element of het(x, y) for ``u : x -> y``.
    """

    base: FinCat
    carrier: Distributor
    mu: Mapping[tuple[int, int, int, Hashable, Hashable], Hashable]
    eta: tuple[Hashable, ...]

    def mult(self, x: int, y: int, z: int, p: Hashable, q: Hashable) -> Hashable:
        return self.mu[(x, y, z, p, q)]

    def unit(self, a: int) -> Hashable:
        return self.eta[self.base.identity[a]]


@dataclass(frozen=True)
class LooseMonadMorphism:
    source: LooseMonad
    target: LooseMonad
    f: Functor
    phi: Mapping[tuple[int, int, Hashable], Hashable]


@dataclass(frozen=True)
class LooseMonadModule:
    """Carrier ``p`` with ``left=L.base`` and ``right=R.base``.

    ``lam[(c, c2, d, s, x)]`` is ``s · x`` for ``s`` in L(c, c2), ``x`` in p(c2, d);
    ``rho[(c, d, d2, x, s)]`` is ``x · s`` for ``x`` in p(c, d), ``s`` in R(d, d2).
    """

    left: LooseMonad
    right: LooseMonad
    p: Distributor
    lam: Mapping[tuple[int, int, int, Hashable, Hashable], Hashable]
    rho: Mapping[tuple[int, int, int, Hashable, Hashable], Hashable]


@dataclass(frozen=True)
class CollapseResult:
    category: FinCat
    projection: Functor
    elements: tuple[tuple[int, int, Hashable], ...]
    cartesian: bool

    def index_of(self, x: int, y: int, p: Hashable) -> int:
        return self.elements.index((x, y, p))


@dataclass(frozen=True)
class ModuleCollapse:
    distributor: Distributor
    restriction_holds: bool


@dataclass(frozen=True)
class AssociatedLooseMonad:
    loose: LooseMonad
    dagger_morphism: LooseMonadMorphism
    dagger_report: LawReport


@dataclass(frozen=True)
class ModuleCount:
    """Algebras versus module structures on one carrier."""

    carrier: int
    algebras: int
    modules: int
    round_trip: bool
    dense_root: bool

    @property
    def bijective(self) -> bool:
        return self.algebras == self.modules and self.round_trip


@dataclass(frozen=True)
class SemanticiserSquare:
    """``n`` has ``left=A, right=E``; ``k : A -> K``; ``pi1 : D -> E``; ``pi2`` has ``left=K, right=D``."""

    n: Distributor
    k: Functor
    pi1: Functor
    pi2: Distributor


@dataclass(frozen=True)
class Cone:
    """A functor ``e : X -> E`` and a distributor ``p`` with ``left=K, right=X``."""

    e: Functor
    p: Distributor


@dataclass(frozen=True)
class ChainVerdict:
    """Cells ``(pi2, D(1,1)^n ⇒ pi2)`` against cells ``(D(1,1)^n ⇒ D(1,1))``."""

    length: int
    into_hom: int | None
    into_pi2: int | None
    bijective: bool | None

    @property
    def attempted(self) -> bool:
        return self.bijective is not None


@dataclass(frozen=True)
class SemanticiserCertificate:
    square: SemanticiserSquare
    restriction_holds: bool
    dense: bool
    density_witness: tuple | None
    mediator_counts: tuple[int, ...]
    chains: tuple[ChainVerdict, ...]

    @property
    def universal(self) -> bool:
        return all(count == 1 for count in self.mediator_counts)

    @property
    def two_dimensional(self) -> bool:
        return all(c.bijective is not False for c in self.chains)

    @property
    def passed(self) -> bool:
        return self.restriction_holds and self.dense and self.universal and self.two_dimensional
