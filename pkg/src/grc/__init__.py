"""Realize simple labeled graphs under degree and exact edge-cut-size constraints."""

from .degseq import erdos_gallai, havel_hakimi
from .ffactor import (
    FactorFunction,
    GadgetMatchingGraph,
    max_matching,
    solve_f_factor,
    solve_width2,
    tutte_gadget,
)
from .hardness import (
    SatGadgetMap,
    TdmGadgetMap,
    decode_sat_witness,
    decode_tdm_witness,
    is_two_one,
    monotone_to_21,
    sat_to_grc,
    solve_21_by_k_sweep,
    tdm_to_grc,
    two_one_violations,
)
from .model import (
    Contradiction,
    CutConstraint,
    GrcInstance,
    InvalidInstanceError,
    SimpleGraph,
    SolveOutcome,
    Status,
    VerificationReport,
    complete_graph,
    cut_size,
    degree_sum,
    graph_from_json,
    graph_to_json,
    instance_from_json,
    instance_to_json,
    normalize,
    verify_realization,
    width,
)
from .oracle import (
    DEFAULT_NODE_BUDGET,
    OneInThreeInstance,
    ThreeDMInstance,
    enumerate_realizations,
    oracle_solve,
    sat_brute,
    tdm_brute,
)
from .preprocess import (
    Case1Forbid,
    Case2Fix,
    Case3Gadget,
    Case4Gadget,
    FixedEdgeEliminated,
    PairLedger,
    TraceRecord,
    build_pair_ledger,
    eliminate_fixed_edges,
    feasible_ell_set,
    possibility_graph,
    screen_instance,
    trace_from_json,
    trace_to_json,
)
from .reduce3 import (
    Size3Case,
    UnsafeReduction,
    apply_case1,
    apply_case2,
    apply_case3,
    apply_case4,
    classify_case,
    gadget_safe,
    lift_realization,
    reduce_to_width2,
)
from .solver import METHODS, MethodNotApplicable, solve
from .treesolve import is_forest, is_tree, solve_tree

__all__ = [
    "Contradiction",
    "CutConstraint",
    "DEFAULT_NODE_BUDGET",
    "FactorFunction",
    "GadgetMatchingGraph",
    "GrcInstance",
    "InvalidInstanceError",
    "METHODS",
    "MethodNotApplicable",
    "OneInThreeInstance",
    "PairLedger",
    "SatGadgetMap",
    "SimpleGraph",
    "Size3Case",
    "SolveOutcome",
    "Status",
    "TdmGadgetMap",
    "ThreeDMInstance",
    "TraceRecord",
    "UnsafeReduction",
    "VerificationReport",
    "apply_case1",
    "apply_case2",
    "apply_case3",
    "apply_case4",
    "build_pair_ledger",
    "classify_case",
    "complete_graph",
    "cut_size",
    "decode_sat_witness",
    "decode_tdm_witness",
    "degree_sum",
    "eliminate_fixed_edges",
    "enumerate_realizations",
    "erdos_gallai",
    "feasible_ell_set",
    "gadget_safe",
    "graph_from_json",
    "graph_to_json",
    "havel_hakimi",
    "instance_from_json",
    "instance_to_json",
    "is_forest",
    "is_tree",
    "is_two_one",
    "lift_realization",
    "max_matching",
    "monotone_to_21",
    "normalize",
    "oracle_solve",
    "possibility_graph",
    "reduce_to_width2",
    "sat_brute",
    "sat_to_grc",
    "screen_instance",
    "solve",
    "solve_21_by_k_sweep",
    "solve_f_factor",
    "solve_tree",
    "solve_width2",
    "tdm_brute",
    "tdm_to_grc",
    "trace_from_json",
    "trace_to_json",
    "tutte_gadget",
    "two_one_violations",
    "verify_realization",
    "width",
]
