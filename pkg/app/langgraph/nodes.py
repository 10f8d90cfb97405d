import logging
from concurrent.futures import ThreadPoolExecutor

from app.checks import (
    comparison_verdict,
    conerve_verdict,
    duality_verdict,
    nerve_verdict,
    quantale_instance_verdicts,
    set_instance_verdicts,
    yo_verdict,
)
from app.corpus.generate import Instance, generate_corpus
from app.quantale.standard import isomorphism_class
from app.quantale.types import VRelMonad
from app.relmonad.duality import check_relative_comonad, dualize
from app.relmonad.laws import check_relative_monad
from app.reports.models import Verdict

logger = logging.getLogger(__name__)

# rejected section mutants a set corpus run must reach
MUTANT_FLOOR = 20

# ============================================
# Nerve-check nodes
# ============================================


def validate_node(state: dict) -> dict:
    """Check the monad (or comonad) laws before anything is built on top."""
    instance = state.get("instance", "")
    if state.get("monad") is not None:
        verdict = Verdict.of_law_report("relative-monad", check_relative_monad(state["monad"]), instance)
    else:
        verdict = Verdict.of_law_report("relative-comonad", check_relative_comonad(state["comonad"]), instance)
    state["verdicts"] = [verdict]
    state["valid"] = verdict.passed
    return state


def theorem_node(state: dict) -> dict:
    instance = state.get("instance", "")
    T = state.get("monad")
    if T is not None:
        state["verdicts"] += [nerve_verdict(T, instance), comparison_verdict(T, instance)]
    else:
        state["verdicts"].append(conerve_verdict(state["comonad"], instance))
    return state


def duality_node(state: dict) -> dict:
    """Replay the theorem on the op-dual and compare reports."""
    T = state.get("monad") or dualize(state["comonad"])
    state["verdicts"].append(duality_verdict(T, state.get("instance", "")))
    return state


# ============================================
# Corpus nodes
# ============================================


def generate_node(state: dict) -> dict:
    state["instances"] = generate_corpus(state["spec"])
    return state


def _check_instance(instance: Instance, chain_bound: int | None) -> list[Verdict]:
    if isinstance(instance.monad, VRelMonad):
        return quantale_instance_verdicts(instance.monad, instance.id)
    return set_instance_verdicts(instance.monad, instance.id, chain_bound)


def check_node(state: dict) -> dict:
    """Check every instance; results are re-sorted so worker order never shows."""
    instances = state.get("instances", [])
    chain_bound = state.get("chain_bound")
    with ThreadPoolExecutor(max_workers=max(1, state.get("workers", 1))) as pool:
        results = list(pool.map(lambda i: _check_instance(i, chain_bound), instances))
    verdicts = [v for vs in results for v in vs]

    # one bijection check per isomorphism class of quantale base
    bases = {}
    for instance in instances:
        if isinstance(instance.monad, VRelMonad):
            A = instance.monad.domain
            bases.setdefault(isomorphism_class(A), (A, instance.id))
    for A, first in bases.values():
        verdicts.append(yo_verdict(A, f"{first}:base"))

    state["verdicts"] = sorted(verdicts, key=lambda v: (v.instance, v.check))
    return state


def summarize_node(state: dict) -> dict:
    """Roll verdicts up; a set run also needs ``MUTANT_FLOOR`` rejected section mutants."""
    verdicts = state.get("verdicts", [])
    theorems = [v for v in verdicts if v.check in ("nerve-theorem", "V-nerve-theorem")]
    mutants = [v for v in verdicts if v.check == "section-mutants"]
    rejected = sum(v.details.get("rejected", 0) for v in mutants)
    failed = sorted({v.instance for v in verdicts if not v.passed})
    state["summary"] = {
        "instances": len(state.get("instances", [])),
        "checks": len(verdicts),
        "comparison_iso": sum(bool(v.details.get("comparison_iso")) for v in theorems),
        "dense": sum(bool(v.details.get("dense")) for v in theorems),
        "failed_instances": failed,
        "section_mutants_rejected": rejected,
        "mutant_floor_met": not mutants or rejected >= MUTANT_FLOOR,
    }
    logger.info(
        "corpus: %d instances, %d checks, %d failing instances, %d section mutants rejected",
        state["summary"]["instances"],
        len(verdicts),
        len(failed),
        rejected,
    )
    return state
