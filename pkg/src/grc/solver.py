"""Dispatch pipeline: normalize, screen, eliminate, then pick a solver.

Order of preference: leaf peeling when the possibility graph is a forest,
the matching route when all cut sets have size <= 2, the size-3 rewrite plus
matching when the guard admits it, and pruned exhaustive search otherwise
(also as the fallback when the rewrite refuses).
"""

from __future__ import annotations

from .model import (
    Contradiction,
    GrcInstance,
    SolveOutcome,
    Status,
    normalize,
    verify_realization,
    width,
)
from .ffactor import solve_width2
from .oracle import DEFAULT_NODE_BUDGET, oracle_solve
from .preprocess import eliminate_fixed_edges, possibility_graph, screen_instance
from .reduce3 import UnsafeReduction, lift_realization, reduce_to_width2
from .treesolve import is_forest, solve_tree

METHODS = ("auto", "tree", "ffactor", "reduce3", "oracle")


class MethodNotApplicable(ValueError):
    """A forced method cannot run on this instance."""


def _solve_by_reduction(norm: GrcInstance, elim: GrcInstance, trace0) -> SolveOutcome:
    reduced, trace1 = reduce_to_width2(elim)
    sub = solve_width2(reduced)
    if sub.status is not Status.REALIZABLE:
        return SolveOutcome.infeasible(sub.reason, method="reduce3")
    witness = lift_realization(tuple(trace0) + tuple(trace1), sub.witness)
    report = verify_realization(witness, norm)
    if not report.ok:
        raise RuntimeError(f"lifted witness failed verification: {report.violations}")
    return SolveOutcome.realizable(witness, method="reduce3")


def solve(inst: GrcInstance, *, method: str = "auto",
          node_budget: int = DEFAULT_NODE_BUDGET) -> SolveOutcome:
    """Decide realizability; any witness is verified against ``inst`` before return."""
    if method not in METHODS:
        raise MethodNotApplicable(f"unknown method {method!r}, pick one of {METHODS}")
    try:
        norm = normalize(inst)
        screen_instance(norm)
    except Contradiction as exc:
        return SolveOutcome.infeasible(str(exc), method="screen")

    if method == "oracle":
        outcome = oracle_solve(norm, node_budget)
    elif method == "tree":
        try:
            elim, _ = eliminate_fixed_edges(norm)
        except Contradiction as exc:
            return SolveOutcome.infeasible(str(exc), method="tree")
        if not is_forest(possibility_graph(elim)):
            raise MethodNotApplicable("possibility graph is not a tree or forest")
        outcome = solve_tree(norm)
    elif method == "ffactor":
        if width(norm) > 2:
            raise MethodNotApplicable("instance has cut sets of size 3 or more")
        outcome = solve_width2(norm)
    elif method == "reduce3":
        if width(norm) > 3:
            raise MethodNotApplicable("instance has cut sets of size 4 or more")
        try:
            elim, trace0 = eliminate_fixed_edges(norm)
            outcome = _solve_by_reduction(norm, elim, trace0)
        except UnsafeReduction as exc:
            raise MethodNotApplicable(f"size-3 rewrite is unsafe here: {exc}") from exc
        except Contradiction as exc:
            return SolveOutcome.infeasible(str(exc), method="reduce3")
    else:  # auto
        try:
            elim, trace0 = eliminate_fixed_edges(norm)
        except Contradiction as exc:
            return SolveOutcome.infeasible(str(exc), method="preprocess")
        if is_forest(possibility_graph(elim)):
            outcome = solve_tree(norm)
        elif width(elim) <= 2:
            outcome = solve_width2(norm)
        elif width(elim) == 3:
            try:
                outcome = _solve_by_reduction(norm, elim, trace0)
            except UnsafeReduction:
                outcome = oracle_solve(norm, node_budget)
            except Contradiction as exc:
                return SolveOutcome.infeasible(str(exc), method="reduce3")
        else:
            outcome = oracle_solve(norm, node_budget)

    if outcome.witness is not None:
        report = verify_realization(outcome.witness, inst)
        if not report.ok:
            raise RuntimeError(f"witness failed final verification: {report.violations}")
    return outcome
