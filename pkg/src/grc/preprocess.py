"""Feasibility screening, pair-constraint distillation, forced-edge elimination.

A size-2 cut is a statement about one vertex pair: demanded size d_u + d_v
forces the edge absent ("forbidden"), d_u + d_v - 2 forces it present
("fixed").  Fixed edges are eliminated by decrementing the endpoint degrees,
after which the same cut reads as forbidden under the new degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .model import Contradiction, CutConstraint, GrcInstance, SimpleGraph, degree_sum


@dataclass(frozen=True)
class PairLedger:
    """Per-pair verdicts distilled from size-2 cuts."""

    fixed: frozenset[tuple[int, int]]
    forbidden: frozenset[tuple[int, int]]

    def status(self, u: int, v: int) -> str:
        pair = (u, v) if u < v else (v, u)
        if pair in self.fixed:
            return "fixed"
        if pair in self.forbidden:
            return "forbidden"
        return "free"


# Rewrite records.  Applied in list order they turn the original instance into
# the reduced one; lift_realization walks them in reverse to map a reduced
# witness back.

@dataclass(frozen=True)
class FixedEdgeEliminated:
    u: int
    v: int


@dataclass(frozen=True)
class Case1Forbid:
    s: tuple[int, int, int]


@dataclass(frozen=True)
class Case2Fix:
    s: tuple[int, int, int]


@dataclass(frozen=True)
class Case3Gadget:
    s: tuple[int, int, int]
    aux_x: int


@dataclass(frozen=True)
class Case4Gadget:
    s: tuple[int, int, int]
    aux_x: int
    aux_y: int


TraceRecord = FixedEdgeEliminated | Case1Forbid | Case2Fix | Case3Gadget | Case4Gadget


def trace_to_json(trace) -> list[dict]:
    out = []
    for rec in trace:
        if isinstance(rec, FixedEdgeEliminated):
            out.append({"kind": "fixed_edge_eliminated", "u": rec.u, "v": rec.v})
        elif isinstance(rec, Case1Forbid):
            out.append({"kind": "case1_forbid", "s": list(rec.s)})
        elif isinstance(rec, Case2Fix):
            out.append({"kind": "case2_fix", "s": list(rec.s)})
        elif isinstance(rec, Case3Gadget):
            out.append({"kind": "case3_gadget", "s": list(rec.s), "x": rec.aux_x})
        elif isinstance(rec, Case4Gadget):
            out.append({"kind": "case4_gadget", "s": list(rec.s), "x": rec.aux_x, "y": rec.aux_y})
        else:
            raise TypeError(f"unknown trace record {rec!r}")
    return out


def trace_from_json(docs) -> tuple[TraceRecord, ...]:
    out: list[TraceRecord] = []
    for doc in docs:
        kind = doc.get("kind")
        if kind == "fixed_edge_eliminated":
            out.append(FixedEdgeEliminated(doc["u"], doc["v"]))
        elif kind == "case1_forbid":
            out.append(Case1Forbid(tuple(doc["s"])))
        elif kind == "case2_fix":
            out.append(Case2Fix(tuple(doc["s"])))
        elif kind == "case3_gadget":
            out.append(Case3Gadget(tuple(doc["s"]), doc["x"]))
        elif kind == "case4_gadget":
            out.append(Case4Gadget(tuple(doc["s"]), doc["x"], doc["y"]))
        else:
            raise ValueError(f"unknown trace record kind {kind!r}")
    return tuple(out)


def feasible_ell_set(inst: GrcInstance, s) -> frozenset[int]:
    """Attainable cut sizes for the set ``s``: d(S) - 2k for k internal edges."""
    members = set(s)
    if not members or len(members) >= inst.vertex_count:
        raise ValueError("cut set must be a nonempty proper subset of the vertices")
    total = degree_sum(inst, members)
    return frozenset(total - 2 * k for k in range(comb(len(members), 2) + 1) if total - 2 * k >= 0)


def screen_instance(inst: GrcInstance) -> None:
    """Necessary realizability checks; raises Contradiction when one fails.

    Passing is necessary but not sufficient.
    """
    n = inst.vertex_count
    for v, d in enumerate(inst.degrees):
        if d > n - 1:
            raise Contradiction(f"vertex {v} demands degree {d} but only {n - 1} partners exist")
    if sum(inst.degrees) % 2:
        raise Contradiction("sum of degrees is odd")
    for cut in inst.cuts:
        if cut.ell not in feasible_ell_set(inst, cut.members):
            raise Contradiction(
                f"cut {cut.members} demands size {cut.ell}, outside the attainable sizes")


def _classify_pairs(degrees, cuts) -> PairLedger:
    fixed: set[tuple[int, int]] = set()
    forbidden: set[tuple[int, int]] = set()
    for cut in cuts:
        if len(cut.members) != 2:
            continue
        u, v = cut.members
        s = degrees[u] + degrees[v]
        if cut.ell == s:
            forbidden.add((u, v))
        elif cut.ell == s - 2:
            fixed.add((u, v))
        else:
            raise Contradiction(
                f"pair cut {cut.members} demands {cut.ell}, but only {s} or {s - 2} are attainable")
    clash = fixed & forbidden
    if clash:
        raise Contradiction(f"pairs demanded both present and absent: {sorted(clash)}")
    return PairLedger(frozenset(fixed), frozenset(forbidden))


def build_pair_ledger(inst: GrcInstance) -> PairLedger:
    """Classify every size-2 cut under the instance's current degrees."""
    return _classify_pairs(inst.degrees, inst.cuts)


def eliminate_fixed_edges(inst: GrcInstance):
    """Strip forced edges one at a time (ascending pair order) until none remain.

    Removing a forced edge decrements both endpoint degrees and the demanded
    size of every cut the edge crosses; cuts it does not cross keep their size.
    The fixing pair cut itself is not crossed, so its unchanged size reads as
    "forbidden" under the new degrees.  Returns the reduced instance plus the
    elimination trace.
    """
    degrees = list(inst.degrees)
    cuts = list(inst.cuts)
    trace: list[FixedEdgeEliminated] = []
    while True:
        ledger = _classify_pairs(degrees, cuts)
        if not ledger.fixed:
            break
        u, v = min(ledger.fixed)
        if degrees[u] == 0 or degrees[v] == 0:
            raise Contradiction(f"forced edge ({u},{v}) would drive a degree below zero")
        degrees[u] -= 1
        degrees[v] -= 1
        adjusted = []
        for cut in cuts:
            crosses = (u in cut.members) != (v in cut.members)
            if crosses:
                if cut.ell == 0:
                    raise Contradiction(
                        f"forced edge ({u},{v}) crosses cut {cut.members} of demanded size 0")
                cut = CutConstraint(cut.members, cut.ell - 1)
            adjusted.append(cut)
        cuts = adjusted
        trace.append(FixedEdgeEliminated(u, v))
    return GrcInstance(tuple(degrees), tuple(cuts)), tuple(trace)


def possibility_graph(inst: GrcInstance) -> SimpleGraph:
    """Complete graph minus all forbidden pairs; supergraph of every realization.

    The instance must carry no fixed pairs (run eliminate_fixed_edges first).
    """
    ledger = build_pair_ledger(inst)
    if ledger.fixed:
        raise ValueError(
            f"fixed pairs remain, run eliminate_fixed_edges first: {sorted(ledger.fixed)}")
    n = inst.vertex_count
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if (u, v) not in ledger.forbidden]
    return SimpleGraph(n, frozenset(edges))
