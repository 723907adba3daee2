import operator
from typing import Annotated, Any, Dict, List, TypedDict

from .run_config import RunConfig


class PipelineState(TypedDict):
    """State threaded through the boundstate, ho and verify graphs."""

    config: RunConfig

    summary: Dict[str, Any]
    tables: Dict[str, Any]  # output stem -> pandas.DataFrame
    reports: List[Dict[str, Any]]
    exit_code: int

    outputs: Annotated[List[str], operator.add]

    current_stage: str
    errors: List[str]
    processing_time: float

    messages: Annotated[List[str], operator.add]
