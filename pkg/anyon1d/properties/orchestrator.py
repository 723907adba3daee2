import asyncio
import logging
import math
from typing import List, Optional, Sequence

from ..config import thread_cap
from ..models.observables import PropertyReport
from .checks import PropertyCheck, build_checks
from .corpus import CorpusState

logger = logging.getLogger(__name__)


class PropertySuiteOrchestrator:
    """Runs property checks concurrently in worker threads."""

    def __init__(self, checks: Optional[List[PropertyCheck]] = None, max_workers: Optional[int] = None):
        self.checks = checks if checks is not None else build_checks()
        self.max_workers = max_workers or thread_cap()

    async def _run_check(self, check: PropertyCheck, corpus: Sequence[CorpusState],
                         semaphore: asyncio.Semaphore) -> PropertyReport:
        async with semaphore:
            logger.info("running %s on %d states", check.name, len(corpus))
            try:
                return await asyncio.to_thread(check.run, corpus)
            except Exception as exc:
                logger.exception("%s raised", check.name)
                return PropertyReport(
                    name=check.name,
                    max_residual=math.nan,
                    tolerance=check.tolerance,
                    states_tested=len(corpus),
                    error=f"{type(exc).__name__}: {exc}",
                )

    async def run_all(self, corpus: Sequence[CorpusState]) -> List[PropertyReport]:
        """One report per check, in the order the checks were given."""
        semaphore = asyncio.Semaphore(self.max_workers)
        tasks = [self._run_check(check, corpus, semaphore) for check in self.checks]
        reports = await asyncio.gather(*tasks)
        passed = sum(report.passed for report in reports)
        logger.info("property suite: %d/%d passed", passed, len(reports))
        return list(reports)


def run_suite(corpus: Sequence[CorpusState], suites: Sequence[str] = None,
              sign_flip: bool = False) -> List[PropertyReport]:
    """Blocking entry point around PropertySuiteOrchestrator.run_all."""
    orchestrator = PropertySuiteOrchestrator(build_checks(suites, sign_flip=sign_flip))
    return asyncio.run(orchestrator.run_all(corpus))
