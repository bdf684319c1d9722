"""Uniform word-representants of grid-like graphs.

Thin wrapper over the C++ core: graph family generators, the explicit
3-uniform word constructions, alternation checking, and the exhaustive
k-uniform representant search.
"""

from ._core import (  # noqa: F401
    Graph,
    OccurrenceRef,
    PruneRules,
    RepnumResult,
    Report,
    SearchConfig,
    SearchOutcome,
    SearchStatus,
    Word,
    WordrepError,
    __version__,
    alternates,
    check_fact1,
    cyl3_word,
    cyl_word,
    ev_word,
    explore_conjecture,
    find_factor,
    graph_of_word,
    grid_word,
    induced_subgraph,
    is_complete,
    is_k_uniform,
    occurrence_before,
    occurrence_position,
    occurrences,
    od_word,
    parse_graph,
    parse_word,
    path_word,
    represents,
    representation_number,
    restrict_to_letters,
    rotate,
    run_check_suite,
    search_k_word,
    torus_word,
    verify_claim_lemma2,
    word_to_text,
    write_graph,
)
from ._core import _generate


def generate(family, *dims):
    """Build a graph family member, e.g. generate("grid", 3, 5) or
    generate("path", 4)."""
    return _generate(family, list(dims))


__all__ = [name for name in dir() if not name.startswith("_")]
