"""Verdict producers shared by the CLI suites, the HTTP surface and the pipelines.

Each function takes core values and returns ``Verdict``s; nothing here reads
files or prints.
"""

import logging

from app.constructions.algebras import enumerate_algebras
from app.constructions.comparison import comparison_functor, restriction_comparison
from app.constructions.kleisli import build_kleisli
from app.constructions.opalgebras import (
    carrier_opalgebra,
    check_opalgebra,
    opalgebra_factorization,
    opalgebra_morphism_counts,
    universal_opalgebra,
)
from app.errors import LawViolationError, MalformedInputError
from app.fincat.laws import (
    validate_category,
    validate_distributor,
    validate_functor,
    validate_nat_transformation,
)
from app.fincat.ops import full_subcategory, identity_functor, same_maps
from app.fincat.types import LawReport
from app.loosemonad.build import associated_loose_monad, extension_morphism
from app.loosemonad.collapse import collapse, collapse_module, factor_through_collapse
from app.loosemonad.laws import check_loose_monad
from app.loosemonad.modules import algebra_module, compare_algebras_and_modules
from app.loosemonad.semanticiser import check_em_semanticiser
from app.loosemonad.types import LooseMonad
from app.nervepullback.nerves import is_dense
from app.nervepullback.theorem import check_conerve_theorem, check_nerve_theorem, relabel
from app.quantale.laws import check_v_monad, validate_quantale, validate_vcat, validate_vfunctor
from app.quantale.nerve import v_check_nerve_theorem
from app.quantale.presheaves import (
    classification_counts,
    enumerate_v_distributors,
    v_nerve,
    v_presheaf_object,
    v_restrict_presheaf,
)
from app.quantale.standard import full_sub, identity_vfunctor
from app.quantale.types import VCat, VRelMonad
from app.quantale.yoneda import v_yo_monad_bijection
from app.relmonad.adjunctions import check_relative_adjunction, find_left_relative_adjoint
from app.relmonad.duality import check_relative_comonad, dualize
from app.relmonad.laws import check_carrier, check_relative_monad, has_identity_root, restrict_monad
from app.relmonad.sections import check_section, monad_from_section, section_from_monad, section_mutants
from app.relmonad.types import RelativeComonad, RelativeMonad
from app.reports.models import Verdict, jsonable
from app.schemas.parse import Parsed

logger = logging.getLogger(__name__)


def _with_details(verdict: Verdict, **details) -> Verdict:
    return verdict.model_copy(update={"details": {**verdict.details, **jsonable(details)}})


def _sized(verdict: Verdict, category) -> Verdict:
    return _with_details(verdict, objects=category.n_objects, morphisms=category.n_morphisms)


def associativity_agreement_verdict(report: LawReport, instance: str = "") -> Verdict:
    """Read off a ``check_relative_monad`` report; ``asserted`` is false when the unit law fails."""
    agreement = report.supplement("associativity-agreement")
    verdict = Verdict.of_law_report("associativity-agreement", agreement, instance)
    return _with_details(verdict, asserted="unit" not in report.laws_failed())


def validate_document(parsed: Parsed) -> list[Verdict]:
    doc = parsed.doc
    out = []
    for name in doc.categories:
        out.append(Verdict.of_law_report(f"category:{name}", validate_category(parsed.category(name))))
    for name in doc.functors:
        out.append(Verdict.of_law_report(f"functor:{name}", validate_functor(parsed.functor(name))))
    for name in doc.nat_transformations:
        report = validate_nat_transformation(parsed.nat_transformation(name))
        out.append(Verdict.of_law_report(f"nat-transformation:{name}", report))
    for name in doc.distributors:
        out.append(Verdict.of_law_report(f"distributor:{name}", validate_distributor(parsed.distributor(name))))
    if doc.monad is not None:
        report = check_relative_monad(parsed.monad)
        out.append(Verdict.of_law_report("relative-monad", report))
        out.append(associativity_agreement_verdict(report))
        if report.passed:
            out.append(Verdict.of_law_report("carrier", check_carrier(parsed.monad)))
    if doc.comonad is not None:
        out.append(Verdict.of_law_report("relative-comonad", check_relative_comonad(parsed.comonad)))
    if doc.loose_monad is not None:
        out.append(Verdict.of_law_report("loose-monad", check_loose_monad(parsed.loose_monad)))
    if doc.quantale is not None:
        out.append(Verdict.of_law_report("quantale", validate_quantale(parsed.quantale)))
    for name in doc.vcats:
        out.append(Verdict.of_law_report(f"V-category:{name}", validate_vcat(parsed.vcat(name))))
    for name in doc.vfunctors:
        out.append(Verdict.of_law_report(f"V-functor:{name}", validate_vfunctor(parsed.vfunctor(name))))
    if doc.v_monad is not None:
        out.append(Verdict.of_law_report("V-monad", check_v_monad(parsed.v_monad)))
    return out


# ============================================
# Set-based monads
# ============================================

def kleisli_verdicts(T: RelativeMonad, instance: str = "") -> list[Verdict]:
    kl = build_kleisli(T)
    out = [
        _sized(Verdict.of_law_report("kleisli", kl.report, instance), kl.category),
        resolution_verdict("kleisli-resolution", kl.resolution, instance),
        Verdict.of_law_report("universal-opalgebra", check_opalgebra(T, universal_opalgebra(kl)), instance),
    ]
    factorization = opalgebra_factorization(T, carrier_opalgebra(T), kl)
    count = factorization.uniqueness.count
    out.append(
        Verdict(
            check="opalgebra-factorization",
            passed=count in (1, None),
            instance=instance,
            details={"mediators": count},
        )
    )
    out.append(kleisli_collapse_verdict(T, instance, kl))
    return out


def resolution_verdict(check: str, resolution, instance: str = "") -> Verdict:
    report = check_relative_adjunction(resolution.adjunction)
    verdict = Verdict.of_law_report(check, report, instance)
    verdict = _with_details(verdict, reproduces_monad=resolution.reproduces_monad)
    return verdict.model_copy(update={"passed": report.passed and resolution.reproduces_monad})


def kleisli_collapse_verdict(T: RelativeMonad, instance: str = "", kl=None) -> Verdict:
    kl = kl or build_kleisli(T)
    collapsed = collapse(associated_loose_monad(T).loose)
    same = kl.category == collapsed.category
    return Verdict(
        check="kleisli-collapse",
        passed=same and collapsed.cartesian,
        instance=instance,
        details={"identical_tables": same, "cartesian": collapsed.cartesian},
    )


def algebra_verdicts(T: RelativeMonad, instance: str = "") -> list[Verdict]:
    em = enumerate_algebras(T)
    return [
        _sized(Verdict.of_law_report("algebras", validate_category(em.category), instance), em.category),
        resolution_verdict("em-resolution", em.resolution, instance),
    ]


def comparison_verdict(T: RelativeMonad, instance: str = "") -> Verdict:
    report = comparison_functor(T)
    return Verdict(
        check="comparison",
        passed=report.passed,
        instance=instance,
        details={
            "fully_faithful": report.fully_faithful,
            "k_then_i_is_free": report.k_then_i_is_free,
            "i_then_u_is_v": report.i_then_u_is_v,
            "root_dense": report.root_dense,
            "comparison_dense": report.comparison_dense,
        },
        witness=jsonable(report.fully_faithful_witness),
    )


def _theorem_details(report) -> dict:
    fields = {k: v for k, v in vars(report).items() if k != "witnesses"}
    return jsonable(fields)


def nerve_verdict(T: RelativeMonad, instance: str = "") -> Verdict:
    report = check_nerve_theorem(T)
    return Verdict(
        check="nerve-theorem",
        passed=report.passed,
        instance=instance,
        details=_theorem_details(report),
        witness=jsonable(report.witnesses) or None,
    )


def conerve_verdict(D: RelativeComonad, instance: str = "") -> Verdict:
    report = check_conerve_theorem(D)
    return Verdict(
        check="conerve-theorem",
        passed=report.passed,
        instance=instance,
        details=_theorem_details(report),
        witness=jsonable(report.witnesses) or None,
    )


def duality_verdict(T: RelativeMonad, instance: str = "") -> Verdict:
    """Running the comonad check on the op-dual reproduces the relabelled monad report."""
    direct = relabel(check_nerve_theorem(T))
    dual = check_conerve_theorem(dualize(T))
    return Verdict(check="duality", passed=direct == dual, instance=instance)


# single-entry mutants always run; the rest stop once this many are rejected
MIN_REJECTED_MUTANTS = 20


def section_verdicts(T: RelativeMonad, instance: str = "") -> list[Verdict]:
    sd = section_from_monad(T)
    round_trip = monad_from_section(sd) == T
    rejected = accepted = 0
    false_passes = []
    for key, mutant in section_mutants(sd):
        if key[0] not in ("s", "r") and rejected >= MIN_REJECTED_MUTANTS:
            break
        try:
            report = check_section(mutant)
        except MalformedInputError:
            rejected += 1
            continue
        if not report.passed:
            rejected += 1
            continue
        accepted += 1
        try:
            if not check_relative_monad(monad_from_section(mutant)).passed:
                false_passes.append(key)
        except LawViolationError:
            false_passes.append(key)
    return [
        Verdict.of_law_report("section", check_section(sd), instance),
        Verdict(check="section-roundtrip", passed=round_trip, instance=instance),
        Verdict(
            check="section-mutants",
            passed=not false_passes,
            instance=instance,
            details={"rejected": rejected, "accepted": accepted},
            witness=jsonable(false_passes[0]) if false_passes else None,
        ),
    ]


def semanticiser_verdict(T: RelativeMonad, instance: str = "", chain_bound: int | None = None) -> Verdict:
    """The Eilenberg–Moore square; only asserted when the root is dense."""
    cert = check_em_semanticiser(T, chain_bound=chain_bound)
    dense_root = is_dense(T.j).dense
    return Verdict(
        check="semanticiser",
        passed=cert.passed or not dense_root,
        instance=instance,
        details={
            "dense_root": dense_root,
            "restriction": cert.restriction_holds,
            "density": cert.dense,
            "universal": cert.universal,
            "mediator_counts": list(cert.mediator_counts),
            "two_dimensional": cert.two_dimensional,
            "chains": [[c.length, c.into_hom, c.into_pi2, c.bijective] for c in cert.chains],
        },
        witness=jsonable(cert.density_witness),
    )


def module_verdicts(T: RelativeMonad, instance: str = "") -> list[Verdict]:
    """Algebras against modules of the associated loose monad, carrier by carrier."""
    out = []
    for count in compare_algebras_and_modules(T):
        out.append(
            Verdict(
                check=f"modules:{T.base.objects[count.carrier]}",
                passed=count.round_trip and (count.bijective or not count.dense_root),
                instance=instance,
                details={
                    "algebras": count.algebras,
                    "modules": count.modules,
                    "round_trip": count.round_trip,
                    "dense_root": count.dense_root,
                },
            )
        )
    a = carrier_opalgebra(T).a
    opalgebras, morphisms = opalgebra_morphism_counts(T, a)
    out.append(
        Verdict(
            check="opalgebra-morphisms",
            passed=opalgebras == morphisms,
            instance=instance,
            details={"opalgebras": opalgebras, "morphisms": morphisms},
        )
    )
    return out


def collapse_factorization_verdict(T: RelativeMonad, instance: str = "", kl=None) -> Verdict:
    """The extension morphism into E(1, 1) factors uniquely through the collapse, as v_T."""
    kl = kl or build_kleisli(T)
    factorization = factor_through_collapse(associated_loose_monad(T).loose, extension_morphism(T))
    matches = same_maps(factorization.functor, kl.v)
    count = factorization.uniqueness.count
    return Verdict(
        check="collapse-factorization",
        passed=matches and count in (1, None),
        instance=instance,
        details={"matches_kleisli": matches, "mediators": count},
    )


def module_collapse_verdicts(T: RelativeMonad, instance: str = "") -> list[Verdict]:
    """Each algebra module collapses to a distributor restricting back to E(j, e)."""
    out = []
    for k, alg in enumerate(enumerate_algebras(T).algebras):
        collapsed = collapse_module(algebra_module(T, alg))
        out.append(
            Verdict(
                check=f"module-collapse:{k}",
                passed=collapsed.restriction_holds,
                instance=instance,
                details={"carrier": T.base.objects[alg.carrier]},
            )
        )
    return out


def loose_monad_verdicts(L: LooseMonad, instance: str = "") -> list[Verdict]:
    report = check_loose_monad(L)
    out = [Verdict.of_law_report("loose-monad", report, instance)]
    if report.passed:
        c = collapse(L)
        verdict = _sized(Verdict.of_law_report("collapse", validate_category(c.category), instance), c.category)
        verdict = _with_details(verdict, cartesian=c.cartesian)
        out.append(verdict.model_copy(update={"passed": verdict.passed and c.cartesian}))
    return out


def set_instance_verdicts(T: RelativeMonad, instance: str, chain_bound: int | None = None) -> list[Verdict]:
    """The full sweep for one generated instance."""
    report = check_relative_monad(T)
    out = [
        Verdict.of_law_report("relative-monad", report, instance),
        associativity_agreement_verdict(report, instance),
    ]
    if not report.passed:
        return out
    out.append(nerve_verdict(T, instance))
    out.append(kleisli_collapse_verdict(T, instance))
    out.extend(section_verdicts(T, instance)[1:])
    out.append(duality_verdict(T, instance))
    out.append(comparison_verdict(T, instance))
    if is_dense(T.j).dense:
        out.append(semanticiser_verdict(T, instance, chain_bound))
    if has_identity_root(T):
        out.extend(restriction_verdicts(T, instance))
    return out


# ============================================
# Quantale instance
# ============================================

def presheaf_verdicts(A: VCat, instance: str = "") -> list[Verdict]:
    pa = v_presheaf_object(A)
    out = [
        _with_details(Verdict.of_law_report("presheaf-object", pa.report, instance), presheaves=len(pa.presheaves))
    ]
    distributors, functors = classification_counts(A, A, pa)
    out.append(
        Verdict(
            check="classification",
            passed=distributors == functors,
            instance=instance,
            details={"distributors": distributors, "functors": functors},
        )
    )
    ident = identity_vfunctor(A)
    first = full_sub(A, [0])
    pa_first = v_presheaf_object(first.source)
    failures = []
    for p in enumerate_v_distributors(A, A):
        for f, pf in ((ident, pa), (first, pa_first)):
            report = v_restrict_presheaf(p, f, first, pa, pf)
            if not report.passed:
                failures.append(report.violations[0].witness)
    out.append(Verdict(check="presheaf-restriction", passed=not failures, instance=instance,
                       witness=jsonable(failures[0]) if failures else None))
    return out


def v_nerve_verdicts(T: VRelMonad, instance: str = "") -> list[Verdict]:
    report = check_v_monad(T)
    out = [Verdict.of_law_report("V-monad", report, instance)]
    if not report.passed:
        return out
    out.append(Verdict.of_law_report("V-nerve", v_nerve(T.j).report, instance))
    theorem = v_check_nerve_theorem(T)
    out.append(
        Verdict(
            check="V-nerve-theorem",
            passed=theorem.passed,
            instance=instance,
            details={
                "dense": theorem.dense,
                "comparison_iso": theorem.comparison_iso,
                "algebras": [T.base.objects[e] for e in theorem.algebras],
                "pullback": [T.base.objects[e] for e in theorem.pullback],
                "semanticiser_matches": theorem.semanticiser_matches,
            },
            witness=jsonable(theorem.witnesses) or None,
        )
    )
    return out


def yo_verdict(A: VCat, instance: str = "") -> Verdict:
    report = v_yo_monad_bijection(A)
    return Verdict(
        check="yo-bijection",
        passed=report.passed,
        instance=instance,
        details={
            "loose_monads": report.loose_monads,
            "yo_monads": report.yo_monads,
            "round_trip": report.round_trip,
            "kleisli_is_collapse": report.kleisli_is_collapse,
            "algebras_are_presheaves": report.algebras_are_presheaves,
        },
        witness=jsonable(report.witnesses) or None,
    )


def quantale_instance_verdicts(T: VRelMonad, instance: str) -> list[Verdict]:
    out = v_nerve_verdicts(T, instance)
    pa = v_presheaf_object(T.domain)
    out.append(Verdict.of_law_report("yoneda", pa.report, instance))
    return out


def restriction_verdicts(S: RelativeMonad, instance: str = "") -> list[Verdict]:
    """Each single-object full subcategory root of a monad on E.

    ``Alg(S) ≅ Alg(j ⨾ S)`` is asserted when j is dense and the restricted
    forgetful functor has an ordinary left adjoint; otherwise it is reported only.
    """
    out = []
    E = S.base
    for a in range(E.n_objects):
        _, j = full_subcategory(E, [a])
        rc = restriction_comparison(S, j)
        u = enumerate_algebras(restrict_monad(S, j)).u
        adjoint = find_left_relative_adjoint(u, identity_functor(E)) is not None
        dense = is_dense(j).dense
        asserted = dense and adjoint
        out.append(
            Verdict(
                check=f"restriction:{E.objects[a]}",
                passed=rc.isomorphism or not asserted,
                instance=instance,
                details={"isomorphism": rc.isomorphism, "dense": dense, "adjoint": adjoint, "asserted": asserted},
            )
        )
    return out
