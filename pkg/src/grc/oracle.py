"""Exhaustive reference solvers, the ground truth at desk scale.

Instances are decided by depth-first search over the undecided vertex pairs
of the possibility graph (forbidden pairs are never branched on, forced pairs
are pre-included).  Pruning: (a) a vertex's remaining demand must fit in its
remaining undecided pairs, (b) each cut's remaining demand must fit between 0
and its remaining undecided crossing pairs.  The search is deterministic:
pairs in ascending order, include tried before exclude.

Also here: assignment enumeration for exactly-one-in-a-clause SAT and triple
search for three-dimensional matching, used to cross-check the hardness
instance generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .model import GrcInstance, SimpleGraph, SolveOutcome, verify_realization

DEFAULT_NODE_BUDGET = 50_000_000


@dataclass(frozen=True)
class OneInThreeInstance:
    """CNF formula asked to have exactly one true literal per clause.

    Literals are signed 1-based integers: +3 is variable index 2 positive,
    -3 the same variable negated.  Clauses have two or three literals.
    """

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.variable_count < 0:
            raise ValueError("variable count must be nonnegative")
        canon = tuple(tuple(int(l) for l in clause) for clause in self.clauses)
        object.__setattr__(self, "clauses", canon)
        for clause in canon:
            if len(clause) not in (2, 3):
                raise ValueError(f"clauses must have two or three literals: {clause}")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise ValueError(f"literal {lit} out of range for {self.variable_count} variables")


@dataclass(frozen=True)
class ThreeDMInstance:
    """Triple system over three n-element sets, indices 0-based."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        canon = tuple(tuple(int(v) for v in t) for t in self.triples)
        object.__setattr__(self, "triples", canon)
        for t in canon:
            if len(t) != 3 or any(v < 0 or v >= self.n for v in t):
                raise ValueError(f"triple {t} out of range for n={self.n}")


class _BudgetExhausted(Exception):
    pass


class _EdgeSearch:
    """Shared backtracking engine for oracle_solve and enumerate_realizations."""

    def __init__(self, inst: GrcInstance, prune: bool = True):
        self.prune = prune
        self.blocked: str | None = None
        n = inst.vertex_count
        forced: set[tuple[int, int]] = set()
        forbidden: set[tuple[int, int]] = set()
        for cut in inst.cuts:
            if len(cut.members) != 2:
                continue
            u, v = cut.members
            s = inst.degrees[u] + inst.degrees[v]
            if cut.ell == s:
                forbidden.add((u, v))
            elif cut.ell == s - 2:
                forced.add((u, v))
            else:
                self.blocked = (
                    f"pair cut {cut.members} demands {cut.ell}, but only {s} or {s - 2} are attainable")
                return
        clash = forced & forbidden
        if clash:
            self.blocked = f"pairs demanded both present and absent: {sorted(clash)}"
            return
        quota = list(inst.degrees)
        for u, v in forced:
            quota[u] -= 1
            quota[v] -= 1
        if any(q < 0 for q in quota):
            self.blocked = "forced edges alone exceed a degree target"
            return

        self.n = n
        self.forced = frozenset(forced)
        self.quota = quota
        self.pairs = [p for p in itertools.combinations(range(n), 2)
                      if p not in forbidden and p not in forced]
        self.avail = [0] * n
        for u, v in self.pairs:
            self.avail[u] += 1
            self.avail[v] += 1
        tracked = [c for c in inst.cuts if len(c.members) != 2]
        member_sets = [set(c.members) for c in tracked]
        self.need = []
        for c, m in zip(tracked, member_sets):
            crossings = sum(1 for (u, v) in forced if (u in m) != (v in m))
            self.need.append(c.ell - crossings)
        self.cross_avail = [0] * len(tracked)
        self.pair_cut_ids: list[tuple[int, ...]] = []
        for u, v in self.pairs:
            ids = tuple(i for i, m in enumerate(member_sets) if (u in m) != (v in m))
            self.pair_cut_ids.append(ids)
            for i in ids:
                self.cross_avail[i] += 1
        if prune and (any(self.quota[v] > self.avail[v] for v in range(n))
                      or any(not 0 <= self.need[i] <= self.cross_avail[i]
                             for i in range(len(tracked)))):
            self.blocked = "degree or cut demands exceed the undecided pairs"

    def run(self, stop_after: int, node_budget: int) -> list[frozenset[tuple[int, int]]]:
        """Collect up to ``stop_after`` realizations; raises _BudgetExhausted."""
        if self.blocked is not None or stop_after <= 0:
            return []
        results: list[frozenset[tuple[int, int]]] = []
        picked: list[tuple[int, int]] = []
        quota, avail = self.quota, self.avail
        need, cross_avail = self.need, self.cross_avail
        pairs, pair_cut_ids = self.pairs, self.pair_cut_ids
        prune = self.prune
        total = len(pairs)
        nodes = 0

        def dfs(idx: int) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > node_budget:
                raise _BudgetExhausted
            if idx == total:
                if all(q == 0 for q in quota) and all(x == 0 for x in need):
                    results.append(self.forced | frozenset(picked))
                    return len(results) >= stop_after
                return False
            u, v = pairs[idx]
            ids = pair_cut_ids[idx]
            avail[u] -= 1
            avail[v] -= 1
            for i in ids:
                cross_avail[i] -= 1
            stop = False
            can_include = (not prune
                           or (quota[u] > 0 and quota[v] > 0
                               and all(need[i] > 0 for i in ids)))
            if can_include:
                quota[u] -= 1
                quota[v] -= 1
                for i in ids:
                    need[i] -= 1
                viable = (not prune
                          or (quota[u] <= avail[u] and quota[v] <= avail[v]
                              and all(need[i] <= cross_avail[i] for i in ids)))
                if viable:
                    picked.append((u, v))
                    stop = dfs(idx + 1)
                    picked.pop()
                quota[u] += 1
                quota[v] += 1
                for i in ids:
                    need[i] += 1
            if not stop:
                viable = (not prune
                          or (quota[u] <= avail[u] and quota[v] <= avail[v]
                              and all(need[i] <= cross_avail[i] for i in ids)))
                if viable:
                    stop = dfs(idx + 1)
            avail[u] += 1
            avail[v] += 1
            for i in ids:
                cross_avail[i] += 1
            return stop

        dfs(0)
        return results


def oracle_solve(inst: GrcInstance, node_budget: int = DEFAULT_NODE_BUDGET, *,
                 prune: bool = True) -> SolveOutcome:
    """Exhaustive decision by pruned backtracking; the reference for all solvers.

    Accepts any valid instance, normalized or not; fixed pairs are handled by
    forcing.  Returns ResourceLimit (never a wrong answer) once the search
    visits more than ``node_budget`` nodes.
    """
    search = _EdgeSearch(inst, prune=prune)
    if search.blocked is not None:
        return SolveOutcome.infeasible(search.blocked, method="oracle")
    try:
        results = search.run(1, node_budget)
    except _BudgetExhausted:
        return SolveOutcome.resource_limit(method="oracle")
    if not results:
        return SolveOutcome.infeasible("exhausted the search space", method="oracle")
    witness = SimpleGraph(inst.vertex_count, results[0])
    report = verify_realization(witness, inst)
    if not report.ok:
        raise RuntimeError(f"oracle witness failed verification: {report.violations}")
    return SolveOutcome.realizable(witness, method="oracle")


def enumerate_realizations(inst: GrcInstance, cap: int,
                           node_budget: int = DEFAULT_NODE_BUDGET) -> list[SimpleGraph]:
    """Up to ``cap`` distinct realizations, returned in ascending edge-set order.

    Intended for small instances (documented bound n <= 10); exceeding the
    node budget raises RuntimeError rather than returning a partial answer
    silently.
    """
    search = _EdgeSearch(inst, prune=True)
    if search.blocked is not None:
        return []
    try:
        results = search.run(cap, node_budget)
    except _BudgetExhausted:
        raise RuntimeError("node budget exhausted during enumeration") from None
    results.sort(key=lambda edges: tuple(sorted(edges)))
    return [SimpleGraph(inst.vertex_count, edges) for edges in results]


def sat_brute(f: OneInThreeInstance, k: int | None = None):
    """First assignment (ascending binary order, variable 0 least significant)
    giving every clause exactly one true literal, and exactly ``k`` true
    variables when ``k`` is given; None when there is none.

    Intended for formulas with at most 25 variables.
    """
    nv = f.variable_count
    clauses = f.clauses
    for mask in range(1 << nv):
        if k is not None and bin(mask).count("1") != k:
            continue
        ok = True
        for clause in clauses:
            hits = 0
            for lit in clause:
                value = (mask >> (abs(lit) - 1)) & 1
                if (lit > 0) == bool(value):
                    hits += 1
                    if hits > 1:
                        break
            if hits != 1:
                ok = False
                break
        if ok:
            return tuple(bool((mask >> i) & 1) for i in range(nv))
    return None


def tdm_brute(t: ThreeDMInstance):
    """Set of ``n`` pairwise-disjoint triples covering all three sides, or None.

    Branches on the smallest uncovered first-coordinate element; intended for
    n <= 6.  Returns the chosen triples sorted.
    """
    n = t.n
    by_x: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for triple in t.triples:
        by_x[triple[0]].append(triple)
    used_y = [False] * n
    used_z = [False] * n
    chosen: list[tuple[int, int, int]] = []

    def cover(i: int) -> bool:
        if i == n:
            return True
        for triple in by_x[i]:
            _, y, z = triple
            if used_y[y] or used_z[z]:
                continue
            used_y[y] = used_z[z] = True
            chosen.append(triple)
            if cover(i + 1):
                return True
            chosen.pop()
            used_y[y] = used_z[z] = False
        return False

    if cover(0):
        return tuple(sorted(chosen))
    return None
