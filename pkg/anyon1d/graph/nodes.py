import asyncio
import logging
import math
from typing import Dict

import numpy as np
import pandas as pd

from ..config import SETTINGS, thread_cap
from ..exceptions import IllConditioned
from ..models.run_config import Command
from ..models.state import PipelineState
from ..momentum.distribution import MomentumDistribution, momentum_distribution
from ..momentum.grid import build_grid
from ..momentum.tails import fit_tail, theta_xi_upsilon
from ..physics.freespace import (
    contact_bound,
    extrema_bound,
    momentum_bound,
    normalization_bound,
    obdm_bound,
    tail_bound,
)
from ..physics.harmonic import (
    TrapRelativeState,
    TrapTwoBodyState,
    contact_ho,
    contact_over_asc,
    contact_over_asc_sq,
    epsilon_from_asc,
    k2_coefficient,
    tail_ho,
)
from ..physics.zerorange import ScatteringModel, bound_state
from ..properties.checks import build_checks
from ..properties.corpus import default_corpus
from ..properties.orchestrator import PropertySuiteOrchestrator
from ..utils.writers import write_json, write_table

logger = logging.getLogger(__name__)

OBDM_RANGE = 5.0
OBDM_POINTS = 201
NK_POINTS = 801
TAIL_POINTS = 40
CORE_K = 10.0
SWEEP_ALPHAS = tuple(round(0.1 * i, 1) for i in range(1, 10))
SUMMARY_FILES = {Command.BOUNDSTATE: "summary", Command.HO: "spectrum"}


async def solve_bound(state: PipelineState) -> Dict:
    """Closed-form bound-state observables"""
    config = state["config"]
    kind, a_sc = config.kind, config.a_sc
    bound = bound_state(kind, ScatteringModel(a_sc=a_sc))

    summary = {
        "command": config.command.value,
        "statistics": config.statistics.value,
        "alpha": config.alpha,
        "a_sc": a_sc,
        "energy": bound.energy,
        "kappa": bound.kappa,
        "contact": contact_bound(a_sc),
        "extrema": [record.model_dump() for record in extrema_bound(kind, a_sc)],
        "tail": tail_bound(kind, a_sc).model_dump(),
        "normalization": normalization_bound(kind, a_sc),
    }
    return {
        "summary": summary,
        "current_stage": "tabulate_bound",
        "messages": [f"Bound state {kind.label}: E = {bound.energy:.6g}, C2 = {summary['contact']:.6g}"],
    }


async def tabulate_bound(state: PipelineState) -> Dict:
    """Density matrix along z1' = -z1 and n(k), in units of a_sc"""
    config = state["config"]
    kind, a_sc = config.kind, config.a_sc
    k_max = config.resolved_k_max

    z1 = np.linspace(-OBDM_RANGE, OBDM_RANGE, OBDM_POINTS)
    rho = obdm_bound(kind, a_sc, a_sc * z1, -a_sc * z1)
    obdm = pd.DataFrame({"z1": z1, "re_rho": np.real(rho), "im_rho": np.imag(rho)})

    peaks = [r["location_k"] for r in state["summary"]["extrema"] if abs(r["location_k"]) <= k_max]
    asc_k = np.union1d(np.linspace(-k_max, k_max, NK_POINTS), peaks)
    nk = pd.DataFrame({"asc_k": asc_k, "n_over_asc": momentum_bound(kind, a_sc, asc_k / a_sc) / a_sc})

    return {
        "tables": {**state["tables"], "obdm": obdm, "nk": nk},
        "current_stage": "write_outputs",
        "messages": [f"Tabulated {len(obdm)} density-matrix and {len(nk)} momentum rows"],
    }


async def solve_spectrum(state: PipelineState) -> Dict:
    """Relative energy, scattering length, contacts and analytic tails"""
    config = state["config"]
    kind = config.kind
    if config.epsilon is not None:
        epsilon, branch = config.epsilon, None
    else:
        epsilon, branch = epsilon_from_asc(config.a_sc, config.branch), config.branch

    relative = TrapRelativeState.from_epsilon(epsilon, kind)
    pair = TrapTwoBodyState(relative=relative)
    summary = {
        "command": config.command.value,
        "statistics": config.statistics.value,
        "alpha": config.alpha,
        "branch": branch,
        "epsilon": epsilon,
        "nu_plus": relative.nu_plus,
        "nu_minus": relative.nu_minus,
        "a_sc": relative.a_sc,
        "energy": pair.energy,
        "contact": contact_ho(epsilon),
        "contact_over_asc": contact_over_asc(epsilon),
        "contact_over_asc_sq": contact_over_asc_sq(epsilon),
        "k2_coefficient": k2_coefficient(epsilon),
        "k2_is_ratio": math.isinf(relative.a_sc),
        "tail": tail_ho(kind, epsilon).model_dump(),
        "fitted_tail": None,
        "norm_check": None,
    }
    return {
        "summary": summary,
        "current_stage": "compute_momentum",
        "messages": [f"eps = {epsilon:.12g}, a_sc = {relative.a_sc:.6g}, C2 = {summary['contact']:.6g}"],
    }


def _grid(config):
    grid = config.grid
    return build_grid(
        window=grid.window or SETTINGS["grid_window"],
        n_coarse=grid.n_coarse,
        n_fine=grid.n_fine,
        fine_scale=grid.fine_scale,
    )


def _trap_pair(kind, epsilon: float):
    relative = TrapRelativeState.from_epsilon(epsilon, kind)
    return TrapTwoBodyState(relative=relative).to_two_body()


async def compute_momentum(state: PipelineState) -> Dict:
    """Numerical n(k) of the trapped pair"""
    config = state["config"]
    k_max = config.resolved_k_max
    tail_k = np.geomspace(k_max / 10.0, k_max, TAIL_POINTS)
    core_k = np.linspace(-CORE_K, CORE_K, 8 * int(CORE_K) + 1)
    k = np.union1d(np.concatenate((-tail_k, tail_k)), core_k[np.abs(core_k) <= k_max])

    tail = tail_ho(config.kind, state["summary"]["epsilon"])
    nd = await asyncio.to_thread(momentum_distribution, _trap_pair(config.kind, state["summary"]["epsilon"]),
                                 _grid(config), k, tail=tail)
    nk = pd.DataFrame({"aho_k": nd.k, "n": nd.n})
    return {
        "summary": {**state["summary"], "norm_check": nd.norm_check},
        "tables": {**state["tables"], "nk": nk},
        "current_stage": "extract_tails",
        "messages": [f"Computed n(k) at {len(nk)} momenta up to a_HO k = {k_max:g}"],
    }


async def extract_tails(state: PipelineState) -> Dict:
    """Theta, Xi, Upsilon against their analytic asymptotes, plus a direct fit"""
    config = state["config"]
    summary = dict(state["summary"])
    k_max = config.resolved_k_max
    nk = state["tables"]["nk"]
    kind = config.kind

    nd = MomentumDistribution(k_nodes=tuple(nk["aho_k"]), values=tuple(nk["n"]), kind=kind)
    positive = nk[nk["aho_k"] >= k_max / 10.0]
    nd_tail = MomentumDistribution(k_nodes=tuple(positive["aho_k"]), values=tuple(positive["n"]), kind=kind)
    theta, xi, upsilon = theta_xi_upsilon(nd_tail, summary["contact"], summary["a_sc"])

    tail = summary["tail"]
    k = nd_tail.k
    tails = pd.DataFrame({
        "aho_k": k,
        "theta": theta,
        "xi": xi,
        "upsilon": upsilon,
        "theta_analytic": tail["c2"] + tail["c3"] / k + tail["c4"] / k**2,
        "xi_analytic": tail["c3"] + tail["c4"] / k,
        "upsilon_analytic": np.full_like(k, tail["c4"]),
    })

    errors = list(state["errors"])
    try:
        summary["fitted_tail"] = fit_tail(nd, k_max / 10.0, k_max).coefficients.model_dump()
    except IllConditioned as exc:
        logger.warning("tail fit skipped: %s", exc)
        errors.append(str(exc))

    return {
        "summary": summary,
        "tables": {**state["tables"], "tails": tails},
        "errors": errors,
        "current_stage": "sweep" if config.sweep else "write_outputs",
        "messages": [f"Extracted tails at {len(tails)} momenta"],
    }


def _upsilon_at(config, epsilon: float, alpha: float, k_max: float):
    pair = _trap_pair(config.kind.with_alpha(alpha), epsilon)
    nd = momentum_distribution(pair, _grid(config), [-k_max, k_max])
    positive = MomentumDistribution(k_nodes=(k_max,), values=(nd.at(k_max),), kind=pair.kind)
    relative = TrapRelativeState.from_epsilon(epsilon, pair.kind)
    _, _, upsilon = theta_xi_upsilon(positive, contact_ho(epsilon), relative.a_sc)
    return float(upsilon[0]), tail_ho(pair.kind, epsilon).c4


async def sweep_alpha(state: PipelineState) -> Dict:
    """Upsilon at a_HO k = k_max across alpha"""
    config = state["config"]
    epsilon = state["summary"]["epsilon"]
    k_max = config.resolved_k_max
    semaphore = asyncio.Semaphore(thread_cap())

    async def one(alpha):
        async with semaphore:
            return await asyncio.to_thread(_upsilon_at, config, epsilon, alpha, k_max)

    results = await asyncio.gather(*(one(alpha) for alpha in SWEEP_ALPHAS))
    sweep = pd.DataFrame({
        "alpha": SWEEP_ALPHAS,
        "upsilon": [numeric for numeric, _ in results],
        "upsilon_analytic": [analytic for _, analytic in results],
    })
    return {
        "tables": {**state["tables"], "upsilon_alpha": sweep},
        "current_stage": "write_outputs",
        "messages": [f"Swept {len(SWEEP_ALPHAS)} alpha values at a_HO k = {k_max:g}"],
    }


def route_after_tails(state: PipelineState) -> str:
    return "sweep" if state["config"].sweep else "write"


async def write_outputs(state: PipelineState) -> Dict:
    """Tables in the requested format, summary always as validated JSON"""
    config = state["config"]
    out = config.output_dir
    written = [str(write_table(frame, out, stem, config.output_format)) for stem, frame in state["tables"].items()]
    name = SUMMARY_FILES[config.command]
    written.append(str(write_json(state["summary"], out / f"{name}.json", schema=name)))
    return {
        "outputs": written,
        "exit_code": 0,
        "current_stage": "complete",
        "messages": [f"Wrote {len(written)} files to {out}"],
    }


async def run_properties(state: PipelineState) -> Dict:
    """Property suite over the shipped corpus"""
    config = state["config"]
    orchestrator = PropertySuiteOrchestrator(build_checks(config.suites, sign_flip=config.inject_sign_flip))
    reports = await orchestrator.run_all(default_corpus())
    dumped = [report.model_dump() for report in reports]
    failed = [report.name for report in reports if not report.passed]
    return {
        "reports": dumped,
        "exit_code": 1 if failed else 0,
        "errors": [f"property {name} failed" for name in failed],
        "current_stage": "write_report",
        "messages": [f"{len(reports) - len(failed)}/{len(reports)} properties passed"],
    }


async def write_report(state: PipelineState) -> Dict:
    config = state["config"]
    payload = {
        "passed": state["exit_code"] == 0,
        "inject_sign_flip": config.inject_sign_flip,
        "reports": state["reports"],
    }
    path = write_json(payload, config.output_dir / "report.json", schema="report")
    return {
        "outputs": [str(path)],
        "current_stage": "complete",
        "messages": [f"Wrote {path}"],
    }
