"""Rewrites size-3 cut constraints into pair constraints plus helper vertices.

A screened size-3 cut (S, ell) falls into one of four cases by d(S) - ell:
0, 2, 4, or 6, i.e. zero to three edges forced inside S.  Cases 0 and 6 are
pure pair constraints (forbid or fix all internal pairs).  The other two are
expressed with fresh helper vertices whose edges simulate the choice of
internal edges; that rewrite is only trusted when a safety guard holds, and a
lifting procedure maps witnesses of the rewritten instance back.
"""

from __future__ import annotations

import itertools
from enum import Enum

from .model import Contradiction, CutConstraint, GrcInstance, SimpleGraph, width
from .preprocess import (
    Case1Forbid,
    Case2Fix,
    Case3Gadget,
    Case4Gadget,
    FixedEdgeEliminated,
    TraceRecord,
    build_pair_ledger,
    eliminate_fixed_edges,
    feasible_ell_set,
)


class Size3Case(Enum):
    """Case label = d(S) - ell = twice the number of forced internal edges."""

    CASE1 = 0
    CASE3 = 2
    CASE4 = 4
    CASE2 = 6


class UnsafeReduction(Exception):
    """The helper-vertex rewrite cannot be trusted here; fall back to search."""

    def __init__(self, offenders):
        self.offenders = tuple(offenders)
        msg = "; ".join(f"cut {o['set']}: {o['reason']}" for o in self.offenders)
        super().__init__(msg or "unsafe reduction")


def classify_case(inst: GrcInstance, cut: CutConstraint) -> Size3Case:
    if len(cut.members) != 3:
        raise ValueError(f"classification applies to size-3 cut sets, got {cut.members}")
    diff = sum(inst.degrees[v] for v in cut.members) - cut.ell
    try:
        return Size3Case(diff)
    except ValueError:
        raise ValueError(
            f"cut {cut.members}: d(S) - ell = {diff} is not in {{0, 2, 4, 6}}; "
            "screen the instance first") from None


def _safety_violations(inst: GrcInstance, cut: CutConstraint) -> list[dict]:
    """Reasons the helper-vertex rewrite of ``cut`` cannot be trusted, if any."""
    out: list[dict] = []
    ledger = build_pair_ledger(inst)
    for u, v in itertools.combinations(cut.members, 2):
        status = ledger.status(u, v)
        if status != "free":
            out.append({"set": list(cut.members),
                        "reason": f"internal pair ({u},{v}) is already {status}"})
    for other in inst.cuts:
        if other == cut or len(other.members) < 3:
            continue
        shared = set(other.members) & set(cut.members)
        if len(shared) >= 2:
            out.append({"set": list(cut.members),
                        "reason": f"shares vertices {sorted(shared)} with cut {list(other.members)}"})
    return out


def gadget_safe(inst: GrcInstance, cut: CutConstraint) -> bool:
    """True iff no internal pair of the cut carries a pair constraint and no
    other cut of size >= 3 shares two or more vertices with it."""
    return not _safety_violations(inst, cut)


def _removed(cuts, cut) -> list[CutConstraint]:
    out = list(cuts)
    out.remove(cut)
    return out


def _add_forbid(cuts: list[CutConstraint], degrees, u: int, v: int) -> None:
    if u > v:
        u, v = v, u
    c = CutConstraint((u, v), degrees[u] + degrees[v])
    if c not in cuts:
        cuts.append(c)


def _add_fix(cuts: list[CutConstraint], degrees, u: int, v: int) -> None:
    if u > v:
        u, v = v, u
    ell = degrees[u] + degrees[v] - 2
    if ell < 0:
        raise Contradiction(f"cannot force edge ({u},{v}): degrees {degrees[u]},{degrees[v]} too small")
    c = CutConstraint((u, v), ell)
    if c not in cuts:
        cuts.append(c)


def apply_case1(inst: GrcInstance, cut: CutConstraint):
    """ell = d(S): every degree unit leaves S, so all internal pairs are forbidden."""
    if classify_case(inst, cut) is not Size3Case.CASE1:
        raise ValueError("apply_case1 expects a cut with ell = d(S)")
    cuts = _removed(inst.cuts, cut)
    for u, v in itertools.combinations(cut.members, 2):
        _add_forbid(cuts, inst.degrees, u, v)
    return GrcInstance(inst.degrees, tuple(cuts)), Case1Forbid(cut.members)


def apply_case2(inst: GrcInstance, cut: CutConstraint):
    """ell = d(S) - 6: all three internal edges are forced."""
    if classify_case(inst, cut) is not Size3Case.CASE2:
        raise ValueError("apply_case2 expects a cut with ell = d(S) - 6")
    cuts = _removed(inst.cuts, cut)
    for u, v in itertools.combinations(cut.members, 2):
        _add_fix(cuts, inst.degrees, u, v)
    return GrcInstance(inst.degrees, tuple(cuts)), Case2Fix(cut.members)


def apply_case3(inst: GrcInstance, cut: CutConstraint, *, force: bool = False):
    """ell = d(S) - 2: exactly one internal edge.

    A helper vertex x of degree 2, wired only into S, picks the two endpoints
    of that edge.  All internal pairs of S are forbidden, and x is forbidden
    from every vertex outside S (including helper vertices of other rewrites).
    """
    if classify_case(inst, cut) is not Size3Case.CASE3:
        raise ValueError("apply_case3 expects a cut with ell = d(S) - 2")
    if not force:
        offenders = _safety_violations(inst, cut)
        if offenders:
            raise UnsafeReduction(offenders)
    n = inst.vertex_count
    x = n
    degrees = (*inst.degrees, 2)
    cuts = _removed(inst.cuts, cut)
    for z in range(n):
        if z not in cut.members:
            _add_forbid(cuts, degrees, z, x)
    for u, v in itertools.combinations(cut.members, 2):
        _add_forbid(cuts, degrees, u, v)
    return GrcInstance(degrees, tuple(cuts)), Case3Gadget(cut.members, x)


def apply_case4(inst: GrcInstance, cut: CutConstraint, *, force: bool = False):
    """ell = d(S) - 4: exactly two internal edges.

    Helper x (degree 3) is forced onto all of S, dropping each internal degree
    by one; helper y (degree 1) picks the vertex whose degree drops twice, the
    common endpoint of the two internal edges.  Internal pairs of S are
    forbidden, and both helpers are forbidden from everything outside S.
    """
    if classify_case(inst, cut) is not Size3Case.CASE4:
        raise ValueError("apply_case4 expects a cut with ell = d(S) - 4")
    if not force:
        offenders = _safety_violations(inst, cut)
        if offenders:
            raise UnsafeReduction(offenders)
    n = inst.vertex_count
    x, y = n, n + 1
    degrees = (*inst.degrees, 3, 1)
    cuts = _removed(inst.cuts, cut)
    for z in range(n):
        if z in cut.members:
            _add_fix(cuts, degrees, z, x)
        else:
            _add_forbid(cuts, degrees, z, x)
            _add_forbid(cuts, degrees, z, y)
    _add_forbid(cuts, degrees, x, y)
    for u, v in itertools.combinations(cut.members, 2):
        _add_forbid(cuts, degrees, u, v)
    return GrcInstance(degrees, tuple(cuts)), Case4Gadget(cut.members, x, y)


def reduce_to_width2(inst: GrcInstance, *, guard: bool = True):
    """Rewrite every size-3 cut, yielding an equivalent instance of width <= 2.

    Expects a normalized, screened instance.  Loops: eliminate forced edges,
    re-derive the case of each remaining size-3 cut from the current degrees,
    apply forbid/fix rewrites first, then helper-vertex rewrites in ascending
    set order.  Raises UnsafeReduction when the guard rejects a remaining cut
    (with guard=False the rewrites are applied regardless, which is unsound in
    general and exists for diagnostics), Contradiction when the rewrites
    surface genuinely conflicting constraints.  Returns the reduced instance
    and the composite trace.
    """
    if width(inst) > 3:
        raise ValueError("reduction handles instances of width <= 3 only")
    work = inst
    trace: list[TraceRecord] = []
    while True:
        work, eliminated = eliminate_fixed_edges(work)
        trace.extend(eliminated)
        size3 = sorted((c for c in work.cuts if len(c.members) == 3), key=lambda c: c.members)
        if not size3:
            break
        for c in size3:
            if c.ell not in feasible_ell_set(work, c.members):
                raise Contradiction(
                    f"after forced-edge elimination, cut {c.members} demands {c.ell}, "
                    "outside the attainable sizes")
        cases = {c: classify_case(work, c) for c in size3}
        easy = [c for c in size3 if cases[c] in (Size3Case.CASE1, Size3Case.CASE2)]
        if easy:
            target = easy[0]
            if cases[target] is Size3Case.CASE1:
                work, record = apply_case1(work, target)
            else:
                work, record = apply_case2(work, target)
            trace.append(record)
            continue
        if guard:
            offenders = [o for c in size3 for o in _safety_violations(work, c)]
            if offenders:
                raise UnsafeReduction(offenders)
        target = size3[0]
        if cases[target] is Size3Case.CASE3:
            work, record = apply_case3(work, target, force=not guard)
        else:
            work, record = apply_case4(work, target, force=not guard)
        trace.append(record)
    return work, tuple(trace)


def _neighbors_in(edges: set[tuple[int, int]], v: int) -> list[int]:
    return sorted(w for e in edges if v in e for w in e if w != v)


def lift_realization(trace, g_reduced: SimpleGraph) -> SimpleGraph:
    """Map a realization of the reduced instance back through the trace.

    Records are undone in reverse order: eliminated forced edges are re-added,
    a degree-2 helper x becomes the internal edge between its two neighbors, a
    helper pair (x, y) becomes the two internal edges at y's neighbor.  Any
    mismatch between trace and graph indicates a reduction bug and raises
    RuntimeError.
    """
    edges = {(u, v) if u < v else (v, u) for u, v in g_reduced.edges}
    n = g_reduced.vertex_count
    for rec in reversed(trace):
        if isinstance(rec, FixedEdgeEliminated):
            pair = (rec.u, rec.v) if rec.u < rec.v else (rec.v, rec.u)
            if pair[1] >= n:
                raise RuntimeError(f"eliminated edge {pair} references a removed vertex")
            if pair in edges:
                raise RuntimeError(f"edge {pair} already present while undoing its elimination")
            edges.add(pair)
        elif isinstance(rec, Case3Gadget):
            x = rec.aux_x
            if x != n - 1:
                raise RuntimeError(f"helper vertex {x} is not the top index {n - 1}")
            picked = _neighbors_in(edges, x)
            if len(picked) != 2 or any(v not in rec.s for v in picked):
                raise RuntimeError(f"helper {x} has neighbors {picked}, expected two inside {rec.s}")
            edges = {e for e in edges if x not in e}
            a, b = picked
            if (a, b) in edges:
                raise RuntimeError(f"internal edge ({a},{b}) already present")
            edges.add((a, b))
            n -= 1
        elif isinstance(rec, Case4Gadget):
            x, y = rec.aux_x, rec.aux_y
            if {x, y} != {n - 2, n - 1}:
                raise RuntimeError(f"helpers {x},{y} are not the top indices of {n} vertices")
            if _neighbors_in(edges, x) != sorted(rec.s):
                raise RuntimeError(f"helper {x} is not matched onto all of {rec.s}")
            y_nbrs = _neighbors_in(edges, y)
            if len(y_nbrs) != 1 or y_nbrs[0] not in rec.s:
                raise RuntimeError(f"helper {y} has neighbors {y_nbrs}, expected one inside {rec.s}")
            t = y_nbrs[0]
            edges = {e for e in edges if x not in e and y not in e}
            for w in rec.s:
                if w == t:
                    continue
                pair = (t, w) if t < w else (w, t)
                if pair in edges:
                    raise RuntimeError(f"internal edge {pair} already present")
                edges.add(pair)
            n -= 2
        else:
            # Case1Forbid / Case2Fix rewrites do not change the graph.
            pass
    return SimpleGraph(n, frozenset(edges))
