from typing import Any

from ..models.run_config import Command, RunConfig
from ..models.state import PipelineState


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def _print_tail(label: str, tail) -> None:
    if not tail:
        return
    flags = ", ".join(str(getattr(flag, "value", flag)) for flag in tail["universal_flags"])
    print(f"\n{label}:")
    for name in ("c2", "c3", "c4"):
        print(f"  {name}: {_fmt(tail[name])}")
    print(f"  flags: {flags}")


def print_results(results: PipelineState) -> None:
    """Pretty print the outcome of a run"""
    config = results["config"]
    summary = results["summary"]
    print(f"\n{'='*60}")

    if config.command is Command.VERIFY:
        print(f"Property verification{' (sign flip injected)' if config.inject_sign_flip else ''}")
        print(f"{'='*60}")
        for report in results["reports"]:
            status = "PASS" if report["passed"] else "FAIL"
            print(f"  {status}  {report['name']:<22} residual {_fmt(report['max_residual'])}"
                  f"  (tol {_fmt(report['tolerance'])}, {report['states_tested']} states)")
            if report["error"]:
                print(f"        error: {report['error']}")
    else:
        print(f"{config.command.value}: {config.kind.label}")
        print(f"{'='*60}")
        skip = {"command", "statistics", "alpha", "tail", "fitted_tail", "extrema"}
        for key, value in summary.items():
            if key not in skip:
                print(f"  {key}: {_fmt(value)}")
        for record in summary.get("extrema", []):
            which = getattr(record["which"], "value", record["which"])
            print(f"  {which}: k = {_fmt(record['location_k'])}, n = {_fmt(record['value'])}")
        _print_tail("Tail", summary.get("tail"))
        _print_tail("Fitted tail", summary.get("fitted_tail"))

    if results["errors"]:
        print(f"\nWarnings: {'; '.join(results['errors'])}")
    if results["outputs"]:
        print(f"\nFiles: {', '.join(results['outputs'])}")
    print(f"\nProcessing Time: {results['processing_time']:.2f}s")


def create_initial_state(config: RunConfig) -> PipelineState:
    """Create an initial state for a run"""
    return PipelineState(
        config=config,
        summary={},
        tables={},
        reports=[],
        exit_code=0,
        outputs=[],
        current_stage="start",
        errors=[],
        processing_time=0.0,
        messages=[],
    )
