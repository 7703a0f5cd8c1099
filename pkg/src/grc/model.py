"""Core data model: labeled instances, simple graphs, cut evaluation, verification.

Vertex identity is the 0-based index.  All values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum


class InvalidInstanceError(ValueError):
    """An instance, graph, or JSON document fails structural validation."""


class Contradiction(Exception):
    """The constraints are provably unsatisfiable by any simple graph."""


@dataclass(frozen=True)
class CutConstraint:
    """Demands that the edge cut of ``members`` contain exactly ``ell`` edges."""

    members: tuple[int, ...]
    ell: int

    def __post_init__(self) -> None:
        canon = tuple(sorted(set(int(v) for v in self.members)))
        object.__setattr__(self, "members", canon)
        if not canon:
            raise InvalidInstanceError("cut set must be nonempty")
        if canon[0] < 0:
            raise InvalidInstanceError(f"cut set holds a negative vertex index: {canon}")
        if not isinstance(self.ell, int) or self.ell < 0:
            raise InvalidInstanceError(f"cut size must be a natural number, got {self.ell!r}")


@dataclass(frozen=True)
class SimpleGraph:
    """Labeled simple graph: vertices ``0..n-1``, no loops, no parallel edges.

    Edge pairs are stored with the smaller endpoint first; any iterable of
    pairs is accepted and canonicalized.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidInstanceError("vertex count must be nonnegative")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInstanceError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.vertex_count:
                raise InvalidInstanceError(f"edge ({u},{v}) out of range for n={self.vertex_count}")
            canon.add((u, v))
        object.__setattr__(self, "edges", frozenset(canon))

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree_sequence(self) -> tuple[int, ...]:
        degs = [0] * self.vertex_count
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(w for e in self.edges if v in e for w in e if w != v))


@dataclass(frozen=True)
class GrcInstance:
    """Problem input: per-vertex degree targets plus a list of cut constraints."""

    degrees: tuple[int, ...]
    cuts: tuple[CutConstraint, ...] = ()

    def __post_init__(self) -> None:
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "cuts", tuple(self.cuts))
        n = len(degrees)
        if n < 1:
            raise InvalidInstanceError("instance needs at least one vertex")
        if any(d < 0 for d in degrees):
            raise InvalidInstanceError("degrees must be nonnegative")
        for cut in self.cuts:
            if cut.members[-1] >= n:
                raise InvalidInstanceError(f"cut {cut.members} references vertices beyond n={n}")
            if len(cut.members) >= n:
                raise InvalidInstanceError(f"cut {cut.members} is not a proper subset of the vertices")

    @property
    def vertex_count(self) -> int:
        return len(self.degrees)


class Status(Enum):
    REALIZABLE = "realizable"
    INFEASIBLE = "infeasible"
    RESOURCE_LIMIT = "resource-limit"


@dataclass(frozen=True)
class SolveOutcome:
    """Decision result; a witness is present exactly when status is REALIZABLE."""

    status: Status
    witness: SimpleGraph | None = None
    method: str | None = None
    reason: str | None = None

    @classmethod
    def realizable(cls, witness: SimpleGraph, method: str | None = None) -> SolveOutcome:
        return cls(Status.REALIZABLE, witness=witness, method=method)

    @classmethod
    def infeasible(cls, reason: str | None = None, method: str | None = None) -> SolveOutcome:
        return cls(Status.INFEASIBLE, reason=reason, method=method)

    @classmethod
    def resource_limit(cls, method: str | None = None) -> SolveOutcome:
        return cls(Status.RESOURCE_LIMIT, method=method, reason="node budget exhausted")

    @property
    def is_realizable(self) -> bool:
        return self.status is Status.REALIZABLE

    def with_method(self, method: str) -> SolveOutcome:
        return SolveOutcome(self.status, self.witness, method, self.reason)


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    violations: tuple[str, ...]


def cut_size(g: SimpleGraph, s) -> int:
    """Number of edges of ``g`` with exactly one endpoint in ``s``."""
    inside = frozenset(s)
    if any(v < 0 or v >= g.vertex_count for v in inside):
        raise ValueError(f"cut set {sorted(inside)} out of range for n={g.vertex_count}")
    if not inside or len(inside) >= g.vertex_count:
        raise ValueError("cut set must be a nonempty proper subset of the vertices")
    return sum(1 for u, v in g.edges if (u in inside) != (v in inside))


def degree_sum(inst: GrcInstance, s) -> int:
    """Total degree demand of the vertex set ``s``."""
    members = set(s)
    if any(v < 0 or v >= inst.vertex_count for v in members):
        raise ValueError(f"vertex set {sorted(members)} out of range for n={inst.vertex_count}")
    return sum(inst.degrees[v] for v in members)


def verify_realization(g: SimpleGraph, inst: GrcInstance) -> VerificationReport:
    """Check every degree target and every cut constraint; list all failures."""
    if g.vertex_count != inst.vertex_count:
        raise ValueError(
            f"graph has {g.vertex_count} vertices but instance has {inst.vertex_count}")
    violations: list[str] = []
    degs = g.degree_sequence()
    for v in range(inst.vertex_count):
        if degs[v] != inst.degrees[v]:
            violations.append(f"vertex {v}: degree {degs[v]} != required {inst.degrees[v]}")
    for cut in inst.cuts:
        actual = cut_size(g, cut.members)
        if actual != cut.ell:
            violations.append(f"cut {cut.members}: size {actual} != required {cut.ell}")
    return VerificationReport(not violations, tuple(violations))


def width(inst: GrcInstance) -> int:
    """Largest cut-set size in the instance as given (0 when there are no cuts).

    The solve pipeline applies this to normalized instances, where sets have
    already been complement-reduced to their smaller side.
    """
    return max((len(c.members) for c in inst.cuts), default=0)


def normalize(inst: GrcInstance) -> GrcInstance:
    """Canonicalize the cut list.

    Each set larger than half the vertices is replaced by its complement (the
    cut is identical); a half-sized set keeps the variant containing vertex 0.
    Single-vertex sets are degree statements: contradicting ones raise
    Contradiction, matching ones are dropped.  Duplicate sets are deduplicated;
    the same set demanded with two different sizes raises Contradiction.
    """
    n = inst.vertex_count
    seen: dict[tuple[int, ...], int] = {}
    order: list[tuple[int, ...]] = []
    for cut in inst.cuts:
        members = cut.members
        size = len(members)
        if size > n - size or (2 * size == n and 0 not in members):
            inside = set(members)
            members = tuple(v for v in range(n) if v not in inside)
        if len(members) == 1:
            v = members[0]
            if cut.ell != inst.degrees[v]:
                raise Contradiction(
                    f"cut on single vertex {v} demands {cut.ell} but its degree is {inst.degrees[v]}")
            continue
        if members in seen:
            if seen[members] != cut.ell:
                raise Contradiction(
                    f"cut set {members} demanded with two different sizes {seen[members]} and {cut.ell}")
            continue
        seen[members] = cut.ell
        order.append(members)
    return GrcInstance(inst.degrees, tuple(CutConstraint(m, seen[m]) for m in order))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, frozenset(itertools.combinations(range(n), 2)))


# ---------------------------------------------------------------------------
# Canonical JSON documents.
#
# Instance: {"version": 1, "degrees": [...], "cuts": [{"set": [...], "ell": k}, ...]}
# Graph:    {"n": int, "edges": [[i, j], ...]} with i < j, sorted lexicographically.
# ---------------------------------------------------------------------------

def instance_to_json(inst: GrcInstance) -> dict:
    return {
        "version": 1,
        "degrees": list(inst.degrees),
        "cuts": [{"set": list(c.members), "ell": c.ell} for c in inst.cuts],
    }


def instance_from_json(doc) -> GrcInstance:
    if not isinstance(doc, dict):
        raise InvalidInstanceError("instance document must be a JSON object")
    if doc.get("version", 1) != 1:
        raise InvalidInstanceError(f"unsupported instance document version {doc.get('version')!r}")
    degrees = doc.get("degrees")
    if not isinstance(degrees, list) or not all(isinstance(d, int) and not isinstance(d, bool) for d in degrees):
        raise InvalidInstanceError('"degrees" must be a list of integers')
    raw_cuts = doc.get("cuts", [])
    if not isinstance(raw_cuts, list):
        raise InvalidInstanceError('"cuts" must be a list')
    cuts = []
    for item in raw_cuts:
        if not isinstance(item, dict) or "set" not in item or "ell" not in item:
            raise InvalidInstanceError(f'cut entries need "set" and "ell": {item!r}')
        members = item["set"]
        if not isinstance(members, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in members):
            raise InvalidInstanceError(f'cut "set" must be a list of integers: {members!r}')
        if not isinstance(item["ell"], int) or isinstance(item["ell"], bool):
            raise InvalidInstanceError(f'cut "ell" must be an integer: {item["ell"]!r}')
        cuts.append(CutConstraint(tuple(members), item["ell"]))
    return GrcInstance(tuple(degrees), tuple(cuts))


def graph_to_json(g: SimpleGraph) -> dict:
    return {"n": g.vertex_count, "edges": [list(e) for e in g.sorted_edges()]}


def graph_from_json(doc) -> SimpleGraph:
    if not isinstance(doc, dict) or "n" not in doc:
        raise InvalidInstanceError('graph document must be an object with "n" and "edges"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InvalidInstanceError(f'"n" must be a nonnegative integer: {n!r}')
    raw = doc.get("edges", [])
    if not isinstance(raw, list):
        raise InvalidInstanceError('"edges" must be a list of pairs')
    edges = []
    for item in raw:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)):
            raise InvalidInstanceError(f"edge entries must be integer pairs: {item!r}")
        edges.append((item[0], item[1]))
    return SimpleGraph(n, frozenset(edges))
