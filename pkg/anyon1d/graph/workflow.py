from langgraph.graph import StateGraph, END

from ..models.run_config import Command
from ..models.state import PipelineState
from .nodes import (
    compute_momentum,
    extract_tails,
    route_after_tails,
    run_properties,
    solve_bound,
    solve_spectrum,
    sweep_alpha,
    tabulate_bound,
    write_outputs,
    write_report,
)


def build_boundstate_graph():
    """Free-space bound state: closed forms, tables, files"""
    workflow = StateGraph(PipelineState)

    workflow.add_node("solve", solve_bound)
    workflow.add_node("tabulate", tabulate_bound)
    workflow.add_node("write", write_outputs)

    workflow.add_edge("solve", "tabulate")
    workflow.add_edge("tabulate", "write")
    workflow.add_edge("write", END)

    workflow.set_entry_point("solve")
    # state carries DataFrames, so no checkpointer
    return workflow.compile()


def build_ho_graph():
    """Trapped pair: spectrum, numerical n(k), tails, optional alpha sweep"""
    workflow = StateGraph(PipelineState)

    workflow.add_node("spectrum", solve_spectrum)
    workflow.add_node("momentum", compute_momentum)
    workflow.add_node("tails", extract_tails)
    workflow.add_node("sweep", sweep_alpha)
    workflow.add_node("write", write_outputs)

    workflow.add_edge("spectrum", "momentum")
    workflow.add_edge("momentum", "tails")
    workflow.add_conditional_edges("tails", route_after_tails, {"sweep": "sweep", "write": "write"})
    workflow.add_edge("sweep", "write")
    workflow.add_edge("write", END)

    workflow.set_entry_point("spectrum")
    return workflow.compile()


def build_verify_graph():
    workflow = StateGraph(PipelineState)

    workflow.add_node("properties", run_properties)
    workflow.add_node("report", write_report)

    workflow.add_edge("properties", "report")
    workflow.add_edge("report", END)

    workflow.set_entry_point("properties")
    return workflow.compile()


GRAPH_BUILDERS = {
    Command.BOUNDSTATE: build_boundstate_graph,
    Command.HO: build_ho_graph,
    Command.VERIFY: build_verify_graph,
}


def build_graph(command: Command):
    return GRAPH_BUILDERS[Command(command)]()
