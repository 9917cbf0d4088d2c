"""Resolved settings for one `isolate` invocation.

Later sources win: model defaults, then the --config TOML file, then the
ISOLATE_* environment variables, then explicit flags.
"""

import logging
import os
import tomllib
from collections.abc import Mapping
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import ParameterError

logger = logging.getLogger(__name__)

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]

ENV_VARS = {
    "jobs": "ISOLATE_JOBS",
    "log_level": "ISOLATE_LOG_LEVEL",
}


class CliConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    jobs: int = Field(1, ge=1, description="Worker processes for sweeps")
    seed: int | None = Field(None, ge=0, description="Seed for every randomized path; required by them")
    log_level: LogLevel = Field("WARNING", description="Root logging level, records go to stderr")
    out: Path | None = Field(None, description="Output file; stdout when unset")
    exact_aux: bool = Field(False, description="Evaluate bounds that need exact auxiliary solvers")
    strict: bool = Field(False, description="Exit 1 when a sweep finds a violation")
    chunk_bits: int = Field(4, ge=0, le=12, description="Sweep chunks per order = 2^chunk_bits")


def read_config_file(path: Path) -> dict[str, Any]:
    with path.open("rb") as fh:
        try:
            data = tomllib.load(fh)
        except tomllib.TOMLDecodeError as exc:
            raise ParameterError(f"{path}: {exc}") from exc
    unknown = sorted(set(data) - set(CliConfig.model_fields))
    if unknown:
        raise ParameterError(f"{path}: unknown settings {unknown}")
    return data


def read_env(environ: Mapping[str, str] | None = None) -> dict[str, Any]:
    environ = os.environ if environ is None else environ
    out: dict[str, Any] = {}
    for key, var in ENV_VARS.items():
        value = environ.get(var)
        if value:
            out[key] = value.upper() if key == "log_level" else value
    return out


def load_config(
    path: Path | None = None,
    flags: Mapping[str, Any] | None = None,
    environ: Mapping[str, str] | None = None,
) -> CliConfig:
    """Merge the sources; flags set to None count as not given."""
    merged: dict[str, Any] = {}
    if path is not None:
        merged.update(read_config_file(path))
    merged.update(read_env(environ))
    merged.update({k: v for k, v in (flags or {}).items() if v is not None})
    try:
        return CliConfig.model_validate(merged)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ParameterError(f"bad setting {where}: {first['msg']}") from exc
