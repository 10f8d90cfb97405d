"""The ``relmonad-lab`` command: one suite per invocation, one report on stdout."""

import argparse
import logging
import sys
import time
from collections.abc import Callable

from app import checks
from app.corpus.spec import corpus_spec
from app.errors import CapacityExceededError, LabError, LawViolationError, MalformedInputError
from app.fixtures.catalog import load_fixture
from app.infra.logging import configure_logging
from app.infra.settings import get_settings
from app.langgraph.workflow import build_corpus_graph, build_nerve_check_graph
from app.loosemonad.build import associated_loose_monad
from app.quantale.laws import validate_quantale, validate_vcat, validate_vfunctor
from app.relmonad.laws import check_relative_monad, has_identity_root
from app.relmonad.types import RelativeMonad
from app.reports.models import RunReport, Verdict, digest
from app.reports.render import render_json, render_text
from app.schemas.models import SuiteInputs
from app.schemas.parse import Parsed, read_document

logger = logging.getLogger(__name__)

Suite = Callable[[Parsed, SuiteInputs], list[Verdict]]


def _monad_suite(body: Callable[[RelativeMonad, SuiteInputs], list[Verdict]]) -> Suite:
    """Check the monad laws first; the body only runs on a lawful monad."""

    def suite(parsed: Parsed, inputs: SuiteInputs) -> list[Verdict]:
        T = parsed.monad
        first = Verdict.of_law_report("relative-monad", check_relative_monad(T))
        if not first.passed:
            return [first]
        return [first, *body(T, inputs)]

    return suite


def _algebras(T: RelativeMonad, inputs: SuiteInputs) -> list[Verdict]:
    out = checks.algebra_verdicts(T)
    if has_identity_root(T):
        out += checks.restriction_verdicts(T)
    return out


def _nerve_check(parsed: Parsed, inputs: SuiteInputs) -> list[Verdict]:
    doc = parsed.doc
    if doc.monad is None and doc.comonad is None:
        raise MalformedInputError("document has no monad or comonad")
    state = {
        "instance": "",
        "monad": parsed.monad if doc.monad is not None else None,
        "comonad": parsed.comonad if doc.monad is None else None,
        "dual": inputs.dual,
    }
    final = build_nerve_check_graph().invoke(state)
    return final["verdicts"]


def _chain_bound(inputs: SuiteInputs) -> int:
    return inputs.chain_bound if inputs.chain_bound is not None else get_settings().chain_bound


def _collapse(parsed: Parsed, inputs: SuiteInputs) -> list[Verdict]:
    if parsed.doc.loose_monad is not None:
        return checks.loose_monad_verdicts(parsed.loose_monad)
    return _monad_suite(
        lambda T, _: [
            checks.kleisli_collapse_verdict(T),
            checks.collapse_factorization_verdict(T),
            *checks.loose_monad_verdicts(associated_loose_monad(T).loose),
            *checks.module_collapse_verdicts(T),
        ]
    )(parsed, inputs)


def _promonad_check(parsed: Parsed, inputs: SuiteInputs) -> list[Verdict]:
    out = []
    if parsed.doc.loose_monad is not None:
        out += checks.loose_monad_verdicts(parsed.loose_monad)
    if parsed.doc.monad is not None:
        out += _monad_suite(lambda T, _: checks.module_verdicts(T))(parsed, inputs)
    if not out:
        raise MalformedInputError("document has no loose monad or monad")
    return out


def _quantale_validate(parsed: Parsed, inputs: SuiteInputs) -> list[Verdict]:
    out = [Verdict.of_law_report("quantale", validate_quantale(parsed.quantale))]
    if not out[0].passed:
        return out
    for name in parsed.doc.vcats:
        out.append(Verdict.of_law_report("V-category", validate_vcat(parsed.vcat(name)), name))
    for name in parsed.doc.vfunctors:
        out.append(Verdict.of_law_report("V-functor", validate_vfunctor(parsed.vfunctor(name)), name))
    return out


def _quantale(parsed: Parsed, inputs: SuiteInputs) -> list[Verdict]:
    out = _quantale_validate(parsed, inputs)
    if not all(v.passed for v in out):
        return out
    for name in parsed.doc.vcats:
        out += checks.presheaf_verdicts(parsed.vcat(name), name)
    if parsed.doc.v_monad is not None:
        out += checks.v_nerve_verdicts(parsed.v_monad)
    return out


def _v_nerve_check(parsed: Parsed, inputs: SuiteInputs) -> list[Verdict]:
    return checks.v_nerve_verdicts(parsed.v_monad)


def _yo_bijection(parsed: Parsed, inputs: SuiteInputs) -> list[Verdict]:
    if not parsed.doc.vcats:
        raise MalformedInputError("document has no V-category")
    return [checks.yo_verdict(parsed.vcat(name), name) for name in parsed.doc.vcats]


SUITES: dict[str, Suite] = {
    "validate": lambda parsed, _: checks.validate_document(parsed),
    "kleisli": _monad_suite(lambda T, _: checks.kleisli_verdicts(T)),
    "algebras": _monad_suite(_algebras),
    "compare": _monad_suite(lambda T, _: [checks.comparison_verdict(T)]),
    "nerve-check": _nerve_check,
    "collapse": _collapse,
    "promonad-check": _promonad_check,
    "section-roundtrip": _monad_suite(lambda T, _: checks.section_verdicts(T)),
    "semanticiser": _monad_suite(lambda T, inputs: [checks.semanticiser_verdict(T, chain_bound=_chain_bound(inputs))]),
    "quantale": _quantale,
    "quantale-validate": _quantale_validate,
    "v-nerve-check": _v_nerve_check,
    "yo-bijection": _yo_bijection,
}
SUITE_NAMES = sorted([*SUITES, "corpus"])


def _run_corpus(inputs: SuiteInputs) -> RunReport:
    spec = corpus_spec(
        seed=inputs.seed,
        count=inputs.count,
        max_objects=inputs.max_objects,
        max_hom=inputs.max_hom,
        density_required=inputs.dense,
        instance=inputs.instance,
        quantale=inputs.quantale,
        exhaustive=inputs.exhaustive,
    )
    settings = get_settings()
    final = build_corpus_graph().invoke(
        {"spec": spec, "chain_bound": _chain_bound(inputs), "workers": settings.workers}
    )
    summary = final["summary"]
    verdicts = [
        *final["verdicts"],
        Verdict(
            check="corpus",
            passed=not summary["failed_instances"] and summary["mutant_floor_met"],
            details=summary,
        ),
    ]
    return RunReport(command="corpus", input_digest=digest(spec.model_dump()), seed=spec.seed, verdicts=verdicts)


def execute_suite(name: str, inputs: SuiteInputs) -> RunReport:
    """Run one suite; raises ``LabError`` on malformed input or exceeded caps."""
    start = time.perf_counter()
    if name == "corpus":
        report = _run_corpus(inputs)
    else:
        try:
            suite = SUITES[name]
        except KeyError:
            raise MalformedInputError(f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}") from None
        if inputs.document is not None and inputs.fixture is not None:
            raise MalformedInputError("give either a document or a fixture, not both")
        if inputs.document is not None:
            doc = inputs.document
        elif inputs.fixture is not None:
            doc = load_fixture(inputs.fixture)
        else:
            raise MalformedInputError(f"suite {name!r} needs an input document")
        flags = inputs.model_dump(mode="json", exclude={"document", "fixture"})
        report = RunReport(
            command=name,
            input_digest=digest({"document": doc.model_dump(mode="json"), "flags": flags}),
            verdicts=suite(Parsed(doc), inputs),
        )
    report = report.sorted().model_copy(update={"wall_time": time.perf_counter() - start})
    passed = sum(v.passed for v in report.verdicts)
    logger.info("suite %s %s: %d/%d checks passed", name, report.input_digest[:19], passed, len(report.verdicts))
    return report


def run_suite(name: str, inputs: SuiteInputs) -> tuple[RunReport, int]:
    """``execute_suite`` with the exit-code contract: 0 pass, 1 violation, 2 input or capacity error."""
    try:
        report = execute_suite(name, inputs)
    except LawViolationError as exc:
        logger.warning("%s", exc)
        verdict = Verdict(check="law", passed=False, details={"error": str(exc)}, witness=[exc.law, *exc.witness])
        return RunReport(command=name, input_digest="", verdicts=[verdict]), 1
    except LabError as exc:
        logger.warning("%s: %s", type(exc).__name__, exc)
        check = "capacity" if isinstance(exc, CapacityExceededError) else "input"
        verdict = Verdict(check=check, passed=False, details={"error": str(exc)})
        return RunReport(command=name, input_digest="", verdicts=[verdict]), 2
    return report, report.exit_code


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relmonad-lab", description="Check relative monads and their nerve theorems.")
    parser.add_argument("suite", choices=SUITE_NAMES)
    parser.add_argument("--input", metavar="FILE", help="JSON document")
    parser.add_argument("--fixture", metavar="NAME", help="bundled fixture instead of --input")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=20)
    parser.add_argument("--max-objects", type=int, default=3)
    parser.add_argument("--max-hom", type=int, default=3)
    parser.add_argument("--dense", action="store_true", help="corpus: keep dense roots only")
    parser.add_argument("--dual", action="store_true", help="nerve-check: also replay on the op-dual")
    parser.add_argument("--chain-bound", type=int, default=None)
    parser.add_argument("--instance", choices=["set", "quantale"], default="set")
    parser.add_argument("--quantale", choices=["2", "chain-3"], default="2")
    parser.add_argument("--exhaustive", action="store_true", help="corpus: every quantale instance, ignoring --count")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    configure_logging(get_settings().log_level)
    try:
        document = read_document(args.input) if args.input else None
    except MalformedInputError as exc:
        logger.warning("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    inputs = SuiteInputs(
        document=document,
        fixture=args.fixture,
        seed=args.seed,
        count=args.count,
        max_objects=args.max_objects,
        max_hom=args.max_hom,
        dense=args.dense,
        dual=args.dual,
        chain_bound=args.chain_bound,
        instance=args.instance,
        quantale=args.quantale,
        exhaustive=args.exhaustive,
    )
    report, code = run_suite(args.suite, inputs)
    sys.stdout.write(render_json(report) if args.format == "json" else render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
