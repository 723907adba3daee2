from .nodes import (
    compute_momentum,
    extract_tails,
    run_properties,
    solve_bound,
    solve_spectrum,
    sweep_alpha,
    tabulate_bound,
    write_outputs,
    write_report,
)

from .workflow import build_boundstate_graph, build_graph, build_ho_graph, build_verify_graph

__all__ = [
    'compute_momentum',
    'extract_tails',
    'run_properties',
    'solve_bound',
    'solve_spectrum',
    'sweep_alpha',
    'tabulate_bound',
    'write_outputs',
    'write_report',
    'build_boundstate_graph',
    'build_graph',
    'build_ho_graph',
    'build_verify_graph',
]
