"""Solver for instances whose possibility graph is a tree (or forest).

On a tree the degree targets admit at most one spanning subgraph: each leaf
either keeps its unique incident edge or drops it, forced by its target.  The
peeled candidate is then verified against every cut of the instance.  Forests
are handled component-wise; this is a documented extension of the tree case.
"""

from __future__ import annotations

from .model import Contradiction, GrcInstance, SimpleGraph, SolveOutcome, verify_realization
from .preprocess import eliminate_fixed_edges, possibility_graph
from .reduce3 import lift_realization


def _component_count(g: SimpleGraph) -> int:
    parent = list(range(g.vertex_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return sum(1 for v in range(g.vertex_count) if find(v) == v)


def is_tree(g: SimpleGraph) -> bool:
    """True iff connected with exactly n - 1 edges."""
    if g.vertex_count == 0:
        return False
    return len(g.edges) == g.vertex_count - 1 and _component_count(g) == 1


def is_forest(g: SimpleGraph) -> bool:
    return len(g.edges) == g.vertex_count - _component_count(g)


def _peel(host: SimpleGraph, targets) -> set[tuple[int, int]] | None:
    """Unique degree-exact subgraph of a forest, or None when none exists."""
    adj = host.adjacency()
    residual = list(targets)
    alive = set(range(host.vertex_count))
    chosen: set[tuple[int, int]] = set()
    while alive:
        v = min(u for u in alive if len(adj[u]) <= 1)
        if adj[v]:
            if residual[v] > 1:
                return None
            if residual[v] == 1:
                u = next(iter(adj[v]))
                chosen.add((u, v) if u < v else (v, u))
                residual[u] -= 1
                if residual[u] < 0:
                    return None
            u = next(iter(adj[v]))
            adj[u].discard(v)
            adj[v].clear()
        elif residual[v] != 0:
            return None
        alive.discard(v)
    return chosen


def solve_tree(inst: GrcInstance) -> SolveOutcome:
    """Decide an instance whose (forced-edge-eliminated) possibility graph is a
    tree or forest; raises ValueError when it is not."""
    try:
        reduced, trace = eliminate_fixed_edges(inst)
    except Contradiction as exc:
        return SolveOutcome.infeasible(str(exc), method="tree")
    host = possibility_graph(reduced)
    if not is_forest(host):
        raise ValueError("possibility graph is not a tree or forest")
    chosen = _peel(host, reduced.degrees)
    if chosen is None:
        return SolveOutcome.infeasible("leaf peeling cannot meet the degree targets", method="tree")
    candidate = lift_realization(trace, SimpleGraph(host.vertex_count, frozenset(chosen)))
    report = verify_realization(candidate, inst)
    if not report.ok:
        return SolveOutcome.infeasible(
            "the unique degree-exact subgraph violates constraints: "
            + "; ".join(report.violations), method="tree")
    return SolveOutcome.realizable(candidate, method="tree")
