"""Group Steiner tree to Steiner tree reduction.

Thin re-export of the compiled ``_core`` extension. Library errors surface as
``GstpError`` whose ``args`` are ``(kind, message)``.
"""

from ._core import (
    GenParams,
    Graph,
    GroupSolveResult,
    GstpError,
    GstpInstance,
    ReducedInstance,
    SolveResult,
    SteinerTree,
    StpgInstance,
    TheoremRecord,
    TheoremReport,
    as_group_instance,
    attach_dummy_leaves,
    brute_force_gsmt,
    brute_force_smt,
    extract,
    generate_instance,
    generate_stpg_instance,
    gstp_is_feasible,
    parse_gstp,
    parse_stpg,
    render_gstp,
    render_stpg,
    run_campaign,
    solve_exact_stpg,
    solve_gstp,
    solve_heuristic_stpg,
    stpg_is_feasible,
    transform,
    verify_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
