from collections.abc import Hashable, Mapping, Sequence

from app.fincat.ops import hom_distributor, identity_functor, restrict_distributor, terminal_category
from app.fincat.types import Distributor, FinCat, Functor
from app.loosemonad.laws import check_loose_monad_morphism
from app.loosemonad.types import AssociatedLooseMonad, LooseMonad, LooseMonadMorphism
from app.relmonad.laws import carrier_functor
from app.relmonad.types import RelativeMonad


def _composition_monad(base: FinCat, carrier: Distributor, target: FinCat, eta: Sequence[int]) -> LooseMonad:
    """Carrier restricted from ``target``'s homs, multiplied by composition in ``target``."""
    n = base.n_objects
    mu = {
        (x, y, z, a, b): target.comp(a, b)
        for x in range(n)
        for y in range(n)
        for z in range(n)
        for a in carrier.het[(x, y)]
        for b in carrier.het[(y, z)]
    }
    return LooseMonad(base, carrier, mu, tuple(eta))


def loose_identity(A: FinCat) -> LooseMonad:
    """``A(1, 1)``: homs, composition and identities."""
    return _composition_monad(A, hom_distributor(A), A, range(A.n_morphisms))


def hom_loose_monad(t: Functor) -> LooseMonad:
    """``E(t, t)`` on the domain of ``t``."""
    E = t.target
    carrier = restrict_distributor(hom_distributor(E), t, t)
    return _composition_monad(t.source, carrier, E, t.mor)


def associated_loose_monad(T: RelativeMonad) -> AssociatedLooseMonad:
    """``E(j, T)``: carrier ``E(j, t)``, ``μ(f, g) = f ⨾ g†``, ``η(u) = j u ⨾ η_y``."""
    A, E = T.domain, T.base
    t = carrier_functor(T)
    carrier = restrict_distributor(hom_distributor(E), T.j, t)
    n = A.n_objects
    mu = {
        (x, y, z, f, g): E.comp(f, T.ext(y, z, g))
        for x in range(n)
        for y in range(n)
        for z in range(n)
        for f in carrier.het[(x, y)]
        for g in carrier.het[(y, z)]
    }
    loose = LooseMonad(A, carrier, mu, tuple(T.unit_of(u) for u in range(A.n_morphisms)))
    morphism = LooseMonadMorphism(
        source=loose,
        target=hom_loose_monad(t),
        f=identity_functor(A),
        phi={(x, y, f): T.ext(x, y, f) for x in range(n) for y in range(n) for f in carrier.het[(x, y)]},
    )
    return AssociatedLooseMonad(loose, morphism, check_loose_monad_morphism(morphism))


def promonad_on_point(
    elements: Sequence[Hashable],
    table: Mapping[tuple[Hashable, Hashable], Hashable],
    unit: Hashable,
) -> LooseMonad:
    """A loose monad on the terminal category: a multiplication table on one het set."""
    base = terminal_category()
    identity = base.identity[0]
    carrier = Distributor(
        left=base,
        right=base,
        het={(0, 0): tuple(elements)},
        left_action={(identity, 0, x): x for x in elements},
        right_action={(0, x, identity): x for x in elements},
    )
    mu = {(0, 0, 0, a, b): table[(a, b)] for a in elements for b in elements}
    return LooseMonad(base, carrier, mu, (unit,))


def extension_morphism(T: RelativeMonad) -> LooseMonadMorphism:
    """``E(j, T) -> E(1, 1)`` along ``t``, sending ``f`` to ``f†``; it factors through the collapse as ``v_T``."""
    A, E = T.domain, T.base
    n = A.n_objects
    return LooseMonadMorphism(
        source=associated_loose_monad(T).loose,
        target=loose_identity(E),
        f=carrier_functor(T),
        phi={(x, y, f): T.ext(x, y, f) for x in range(n) for y in range(n) for f in T.kleisli_hom(x, y)},
    )
