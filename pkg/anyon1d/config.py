import logging
import os

from dotenv import load_dotenv

from .exceptions import ConfigError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(verbose: bool = False) -> None:
    """Configure the root logger once; ANYON1D_LOG_LEVEL overrides the default."""
    level_name = os.environ.get("ANYON1D_LOG_LEVEL", "INFO" if verbose else "WARNING")
    level = getattr(logging, level_name.upper(), None)
    if not isinstance(level, int):
        raise ConfigError(f"ANYON1D_LOG_LEVEL={level_name!r} is not a logging level")
    logging.basicConfig(level=level, format=LOG_FORMAT)


def thread_cap() -> int:
    """Worker cap from ANYON1D_THREADS, defaulting to the CPU count."""
    raw = os.environ.get("ANYON1D_THREADS")
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"ANYON1D_THREADS={raw!r} is not an integer") from exc
    if value < 1:
        raise ConfigError(f"ANYON1D_THREADS must be >= 1, got {value}")
    return value


def setup_environment(verbose: bool = False) -> int:
    """Load .env, configure logging and return the resolved thread cap."""
    load_dotenv()
    setup_logging(verbose)
    cap = thread_cap()
    logger.info("Using up to %d worker threads", cap)
    return cap


# Numerical defaults
SETTINGS = {
    # one-sided limits at z -> 0
    "ladder_levels": 6,
    "ladder_start": 1e-2,
    "ladder_tol": 1e-9,
    "ladder_atol": 1e-11,
    # quadrature
    "gauss_order": 16,
    "oscillatory_order": 8,
    "panels_per_period": 8,
    "quad_doubling_tol": 1e-10,
    # trap relative profile
    "profile_radius": 20.0,
    "profile_degrees": (64, 128, 256, 512),
    "profile_tail_tol": 1e-13,
    "kummer_a_range": (-40.0, 200.0),
    # spectrum
    "max_branch": 30,
    "bracket_shrink": 1e-8,
    "bracket_expansions": 64,
    "root_tol": 1e-13,
    # momentum grids
    "grid_window": 12.0,
    "grid_coarse": 96,
    "grid_fine": 32,
    "grid_fine_scale": 0.1,
    "outer_window": 8.0,
    "outer_panels": 8,
    "outer_order": 16,
    "free_window_factor": 40.0,
    "window_edge_tol": 1e-8,
    "fit_condition_max": 1e10,
    # property suite
    "corpus_asc": (0.5, 1.0, 2.0),
    "corpus_epsilon": (-0.5, 0.5, 1.5),
    "corpus_alpha": (0.0, 0.25, 0.5, 0.75, 1.0),
    "z_samples": 50,
    "z_sample_range": (1e-3, 10.0),
    "k_samples": 64,
    "k_sample_max": 10.0,
    "norm_k_core": 4.0,
    "norm_k_mid": 20.0,
    "norm_k_max": 40.0,
    "norm_k_core_panels": 16,
    "norm_k_mid_panels": 8,
    "norm_k_outer_panels": 4,
    "tolerances": {
        "formal_shift": 1e-12,
        "chiral_mirror": 1e-5,
        "contacts": 1e-9,
        "normalizations": 1e-6,
        "exchange": 1e-12,
        "boundary": 1e-8,
    },
}
