"""Directed multiway cut parameterized by the cut size."""

from ._core import (
    Digraph,
    Instance,
    PairCheck,
    ParseError,
    Solution,
    SolveStats,
    brute_force_mwc,
    deterministic_sets,
    fixture,
    generate,
    important_collection,
    important_separators,
    is_important,
    is_shadowless,
    is_thin,
    minimum_budget,
    parse_instance,
    random_set,
    serialize,
    serialize_multicut,
    shadow,
    solve,
    solve_edge,
    solve_multicut_k2,
    solve_with_stats,
    torso,
    verify_edge_solution,
    verify_multicut,
    verify_solution,
)

__all__ = [name for name in dir() if not name.startswith("_")]
