from ._illusion import (
    IllusionError,
    Network,
    eliminate,
    encode_elimination,
    encode_verification,
    fig1,
    fig10,
    illusion_report,
    is_q_illusion,
    parse_dimacs,
    plurality_report,
    sat,
    solve_one_illusion,
    solve_q_illusion,
    threshold_h_plus,
    threshold_h_sharp,
    threshold_h_star,
    verify_reduction,
)

__all__ = [
    "IllusionError",
    "Network",
    "eliminate",
    "encode_elimination",
    "encode_verification",
    "fig1",
    "fig10",
    "illusion_report",
    "is_q_illusion",
    "parse_dimacs",
    "plurality_report",
    "sat",
    "solve_one_illusion",
    "solve_q_illusion",
    "threshold_h_plus",
    "threshold_h_sharp",
    "threshold_h_star",
    "verify_reduction",
]
