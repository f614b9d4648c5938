"""Run configuration for the command line, merged from defaults, a JSON file and flags."""

from __future__ import annotations
import dataclasses
import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional
from . import catenoid, exceptions, helicoid

logger = logging.getLogger(__name__)

KINDS = ("helicoid", "catenoid", "graph-S", "plane-limit")
COMMANDS = ("surface", "section", "verify", "period", "invert-period")
DEFAULT_SAMPLES = 64
SECTION_SAMPLES = catenoid.SECTION_SAMPLES
GRAPH_SECTION_RANGE = (-5.0, 5.0)
PARAMETER_ALIASES = ("K", "alpha")


@dataclass(frozen=True)
class RunConfig:
    """Everything one command needs.

    Bounds left as None are filled in per surface kind once the model is built.
    """

    command: str
    kind: str = "helicoid"
    parameter: Optional[float] = None
    u_min: Optional[float] = None
    u_max: Optional[float] = None
    v_min: Optional[float] = None
    v_max: Optional[float] = None
    nu: int = DEFAULT_SAMPLES
    nv: int = DEFAULT_SAMPLES
    level: float = 0.0
    samples: Optional[int] = None
    T: Optional[float] = None
    out: Optional[str] = None
    report: Optional[str] = None
    tol_scale: float = 1.0
    tolerances: Dict[str, float] = field(default_factory=dict)
    normals: bool = False
    quadrature: bool = False
    fd_step: float = 1e-4

    def __post_init__(self):
        """Validate the merged values.

        Raises:
            exceptions.ConfigError: Unknown command or kind, or inconsistent values.
            exceptions.ParameterOutOfRange: The parameter is illegal for the kind.
            exceptions.DegenerateParameter: K = 0 or alpha = 0.
        """
        if self.command not in COMMANDS:
            raise exceptions.ConfigError(f"unknown command {self.command!r}")
        if self.kind not in KINDS:
            raise exceptions.ConfigError(f"kind must be one of {', '.join(KINDS)}; got {self.kind!r}")
        if self.command in ("surface", "section", "verify"):
            self._check_parameter()
        if self.nu < 2 or self.nv < 2:
            raise exceptions.ConfigError(f"sample counts must be at least 2; got {self.nu} x {self.nv}")
        if self.samples is not None and self.samples < 2:
            raise exceptions.ConfigError(f"section samples must be at least 2; got {self.samples}")
        for name in ("u_min", "u_max", "v_min", "v_max"):
            value = getattr(self, name)
            if value is not None and not math.isfinite(value):
                raise exceptions.ConfigError(f"{name} must be finite; got {value}")
        for lower, upper, name in ((self.u_min, self.u_max, "u"), (self.v_min, self.v_max, "v")):
            if lower is not None and upper is not None and not lower < upper:
                raise exceptions.ConfigError(f"{name}_min must be below {name}_max")
        if not self.tol_scale > 0:
            raise exceptions.ConfigError(f"tol_scale must be positive; got {self.tol_scale}")
        if not 1e-6 <= self.fd_step <= 1e-3:
            raise exceptions.ConfigError(f"fd_step must lie in [1e-6, 1e-3]; got {self.fd_step}")

    def _check_parameter(self) -> None:
        if self.kind == "graph-S":
            return
        if self.parameter is None:
            name = "K" if self.kind == "helicoid" else "alpha"
            raise exceptions.ConfigError(f"{self.kind} needs --{name}")
        if self.kind == "helicoid":
            helicoid.check_parameter(self.parameter)
        elif self.kind == "catenoid":
            catenoid.check_parameter(self.parameter)
        elif not 0 < self.parameter <= 0.1:
            raise exceptions.ParameterOutOfRange("alpha", self.parameter, "(0, 0.1]")

    @property
    def section_samples(self) -> int:
        return SECTION_SAMPLES if self.samples is None else self.samples

    @classmethod
    def from_sources(cls, args: Mapping[str, Any],
                     file_values: Optional[Mapping[str, Any]] = None) -> RunConfig:
        """Merge defaults, then file values, then flags that were given.

        Args:
            args (Mapping[str, Any]): Parsed flags; None means not given.
            file_values (Mapping[str, Any], optional): Contents of a config file.

        Raises:
            exceptions.ConfigError: The file names a key RunConfig does not have.
        """
        known = {f.name for f in dataclasses.fields(cls)}
        merged: Dict[str, Any] = {}
        for source in (file_values or {}, args):
            for key, value in source.items():
                if value is None:
                    continue
                if key in PARAMETER_ALIASES:
                    key = "parameter"
                if key not in known:
                    raise exceptions.ConfigError(f"unknown key {key!r}")
                merged[key] = value
        if "command" not in merged:
            raise exceptions.ConfigError("no command given")
        return cls(**merged)


def read_config_file(path) -> Dict[str, Any]:
    """Load a JSON object of RunConfig keys.

    Raises:
        exceptions.ConfigError: The file is unreadable or not a JSON object.
    """
    try:
        with open(path, encoding="utf-8") as f:
            values = json.load(f)
    except (OSError, json.JSONDecodeError) as error:
        raise exceptions.ConfigError(f"cannot read {path}: {error}") from None
    if not isinstance(values, dict):
        raise exceptions.ConfigError(f"{path} must hold a JSON object")
    logger.debug("read %d config keys from %s", len(values), path)
    return values


def resolve_bounds(cfg: RunConfig, period: Optional[float] = None) -> RunConfig:
    """Fill unset bounds with the defaults of the kind.

    Args:
        cfg (RunConfig): Configuration.
        period (float, optional): W of the helicoid or V of the catenoid.
    """
    if cfg.kind == "helicoid":
        defaults = (-2.0, 2.0, -2 * period, 2 * period)
    elif cfg.kind == "catenoid":
        defaults = (-2.0, 2.0, 0.0, 2 * period)
    elif cfg.kind == "plane-limit":
        defaults = (-1.0, 1.0, 0.0, 2 * math.pi)
    elif cfg.command == "section":
        defaults = (-2.0, 2.0) + GRAPH_SECTION_RANGE
    else:
        defaults = (-2.0, 2.0, -2.0, 2.0)
    names = ("u_min", "u_max", "v_min", "v_max")
    values = {name: default if getattr(cfg, name) is None else getattr(cfg, name)
              for name, default in zip(names, defaults)}
    return dataclasses.replace(cfg, **values)

"""
The MIT License (MIT)

Copyright (c) 2021 The solminimal developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""
