"""Atomic CSV/JSON writers with schema validation for the JSON summaries."""
import json
import logging
import math
import os
import tempfile
from pathlib import Path
from typing import Any

import jsonschema
import numpy as np
import pandas as pd

from ..models.run_config import OutputFormat

logger = logging.getLogger(__name__)

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "schemas"
FLOAT_FORMAT = "%.12g"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    handle = tempfile.NamedTemporaryFile("w", dir=path.parent, prefix=f".{path.name}.", delete=False,
                                         encoding="utf-8", newline="")
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, path)
    except BaseException:
        os.unlink(handle.name)
        raise


def to_jsonable(value: Any) -> Any:
    """Plain JSON types; infinities become the strings "inf" / "-inf"."""
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return None
        return value
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return value


def load_schema(name: str) -> dict:
    with open(SCHEMA_DIR / f"{name}.schema.json", encoding="utf-8") as handle:
        return json.load(handle)


def write_json(payload: dict, path: Path, schema: str) -> Path:
    """Validate against anyon1d/schemas/<schema>.schema.json, then write."""
    document = to_jsonable(payload)
    jsonschema.validate(document, load_schema(schema))
    _atomic_write(Path(path), json.dumps(document, indent=2, sort_keys=True) + "\n")
    logger.info("wrote %s", path)
    return Path(path)


def write_table(frame: pd.DataFrame, directory: Path, stem: str, fmt: OutputFormat) -> Path:
    """CSV with 12 significant digits and '\\n' endings, or JSON records."""
    fmt = OutputFormat(fmt)
    path = Path(directory) / f"{stem}.{fmt.value}"
    if fmt is OutputFormat.CSV:
        text = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    else:
        records = [{key: to_jsonable(value) for key, value in row.items()} for row in frame.to_dict("records")]
        text = json.dumps(records, indent=2) + "\n"
    _atomic_write(path, text)
    logger.info("wrote %s (%d rows)", path, len(frame))
    return path
