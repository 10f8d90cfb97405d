from langgraph.graph import END, StateGraph

from app.langgraph.nodes import (
    check_node,
    duality_node,
    generate_node,
    summarize_node,
    theorem_node,
    validate_node,
)
from app.langgraph.state import CorpusState, NerveCheckState


def _after_validate(state: dict) -> str:
    return "theorem" if state.get("valid") else END


def _after_theorem(state: dict) -> str:
    return "duality" if state.get("dual") else END


def build_nerve_check_graph():
    """
    Nerve-check pipeline:

    1. validate: monad (or comonad) laws; stop on failure
    2. theorem: nerve theorem report and comparison functor
    3. duality: op-dual replay, only with ``dual``

    Flow:
    validate → theorem → (duality) → END
    """
    graph = StateGraph(NerveCheckState)

    graph.add_node("validate", validate_node)
    graph.add_node("theorem", theorem_node)
    graph.add_node("duality", duality_node)

    graph.set_entry_point("validate")
    graph.add_conditional_edges("validate", _after_validate, {"theorem": "theorem", END: END})
    graph.add_conditional_edges("theorem", _after_theorem, {"duality": "duality", END: END})
    graph.add_edge("duality", END)

    return graph.compile()


def build_corpus_graph():
    """
    Corpus sweep: generate → check → summarize → END
    """
    graph = StateGraph(CorpusState)

    graph.add_node("generate", generate_node)
    graph.add_node("check", check_node)
    graph.add_node("summarize", summarize_node)

    graph.set_entry_point("generate")
    graph.add_edge("generate", "check")
    graph.add_edge("check", "summarize")
    graph.add_edge("summarize", END)

    return graph.compile()
