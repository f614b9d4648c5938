"""Command line: sample surfaces, write sections, run verification suites, compute periods.

Exit codes are 0 on success, 1 for usage and parameter errors and 2 when a
verification report fails.
"""

from __future__ import annotations
import argparse
import logging
import math
import sys
from typing import List, Optional
import numpy as np
from . import catenoid, exceptions, helicoid, limits, verify
from .config import RunConfig, read_config_file, resolve_bounds
from .mesh import sample_mesh, write_csv
from .report import VerificationReport
from .tessellation import ParameterGrid

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    """Report usage errors as exceptions instead of exiting with status 2."""

    def error(self, message):
        raise exceptions.ConfigError(message)


def _surface_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--kind", choices=("helicoid", "catenoid", "graph-S", "plane-limit"))
    options.add_argument("--K", type=float)
    options.add_argument("--alpha", type=float)
    for bound in ("u-min", "u-max", "v-min", "v-max"):
        options.add_argument(f"--{bound}", type=float)
    options.add_argument("--nu", type=int)
    options.add_argument("--nv", type=int)
    options.add_argument("--level", type=float)
    options.add_argument("--samples", type=int, help="section sample count")
    options.add_argument("--out", help="mesh or CSV output path")
    options.add_argument("--report", help="verification report path")
    options.add_argument("--tol-scale", type=float)
    options.add_argument("--fd-step", type=float)
    options.add_argument("--normals", action="store_true", default=None, help="write vn lines")
    return options


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="solminimal", description="Minimal helicoids and catenoids of Sol3.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--config", help="JSON file of run options; flags take precedence")
    commands = parser.add_subparsers(dest="command")
    shared = _surface_options()
    commands.add_parser("surface", parents=[shared], help="write an OBJ mesh")
    commands.add_parser("section", parents=[shared], help="write a horizontal section as CSV")
    commands.add_parser("verify", parents=[shared], help="run the verification suite")
    period = commands.add_parser("period", help="W, x3(W) and T of a helicoid")
    period.add_argument("--K", type=float, required=True)
    period.add_argument("--quadrature", action="store_true", default=None,
                        help="use quadrature only; allows K = 0")
    invert = commands.add_parser("invert-period", help="K of the helicoid with period T")
    invert.add_argument("--T", type=float, required=True)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbosity, 2)]
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _surface(cfg: RunConfig):
    """The surface object of the configured kind and cfg with its bounds resolved.

    Helicoid and catenoid profiles are integrated again when the v bounds
    reach past the default domain of four periods.
    """
    if cfg.kind == "helicoid":
        model = helicoid.build(cfg.parameter)
        cfg = resolve_bounds(cfg, model.W)
        if _reach(cfg) > model.v_max:
            model = helicoid.build(cfg.parameter, v_max=_reach(cfg))
        return model, cfg
    if cfg.kind == "catenoid":
        model = catenoid.build(cfg.parameter)
        cfg = resolve_bounds(cfg, model.V)
        if _reach(cfg) > model.v_max:
            model = catenoid.build(cfg.parameter, v_max=_reach(cfg))
        return model, cfg
    if cfg.kind == "plane-limit":
        cfg = resolve_bounds(cfg)
        surface = limits.PlaneLimit(cfg.parameter)
        if _reach(cfg) > surface.model.v_max:
            surface = limits.PlaneLimit(cfg.parameter, v_max=_reach(cfg))
        return surface, cfg
    return limits.S, resolve_bounds(cfg)


def _reach(cfg: RunConfig) -> float:
    return max(abs(cfg.v_min), abs(cfg.v_max))


def cmd_surface(cfg: RunConfig) -> int:
    """Sample the parameter rectangle row-major in (u, v) and write an OBJ mesh."""
    if cfg.out is None:
        raise exceptions.ConfigError("surface needs --out")
    surface, cfg = _surface(cfg)
    grid = ParameterGrid(cfg.nu, cfg.nv, (cfg.u_min, cfg.u_max), (cfg.v_min, cfg.v_max))
    normal = (lambda z: surface.jet(z).normal) if cfg.normals else None
    mesh = sample_mesh(grid, surface.immerse, normal)
    mesh.write_obj(cfg.out)
    print(f"{mesh} on {grid}")
    return EXIT_OK


def cmd_section(cfg: RunConfig) -> int:
    """Write the section {x3 = level} as rows t, x1, x2; catenoid sections carry a certificate."""
    if cfg.out is None:
        raise exceptions.ConfigError("section needs --out")
    if cfg.kind == "catenoid":
        model = catenoid.build(cfg.parameter)
        curve = model.section(cfg.level, cfg.section_samples)
        write_csv(cfg.out, ("t", "x1", "x2"),
                  zip(map(float, curve.t), map(float, curve.c1), map(float, curve.c2)))
        return _emit(catenoid.convexity_certificate(curve), cfg)
    if cfg.kind == "graph-S":
        cfg = resolve_bounds(cfg)
        t_values = np.linspace(cfg.v_min, cfg.v_max, cfg.section_samples)
        write_csv(cfg.out, ("t", "x1", "x2"), limits.graph_section(cfg.level, t_values))
        print(f"graph S section at x3={cfg.level:g}: {len(t_values)} rows")
        return EXIT_OK
    raise exceptions.ConfigError(f"section needs kind catenoid or graph-S; got {cfg.kind}")


def cmd_verify(cfg: RunConfig) -> int:
    """Run the suite of the configured kind; fails with exit code 2."""
    if cfg.kind == "helicoid":
        report = verify.helicoid_suite(cfg.parameter, cfg.tolerances, h=cfg.fd_step)
    elif cfg.kind == "catenoid":
        report = verify.catenoid_suite(cfg.parameter, cfg.tolerances, h=cfg.fd_step)
    elif cfg.kind == "plane-limit":
        report = verify.plane_limit_suite(cfg.parameter, cfg.tolerances, h=cfg.fd_step)
    else:
        report = verify.graph_suite(cfg.tolerances)
    return _emit(report.scaled(cfg.tol_scale), cfg)


def _emit(report: VerificationReport, cfg: RunConfig) -> int:
    text = report.to_text()
    if cfg.report is None:
        sys.stdout.write(text)
    else:
        with open(cfg.report, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        print(text.splitlines()[0])
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_period(cfg: RunConfig) -> int:
    """Print W, x3(W) and T = 2 x3(W) at 12 significant digits."""
    K = cfg.parameter
    if cfg.quadrature:
        if not -1 < K < 1:
            raise exceptions.ParameterOutOfRange("K", K, "(-1,1)")
        W, height = helicoid.quadrature_W(K), helicoid.quadrature_x3W(K)
    else:
        model = helicoid.build(K)
        W, height = model.W, model.x3(model.W)
    print(f"W {W:.12g}")
    print(f"x3(W) {height:.12g}")
    print(f"T {2 * height:.12g}")
    return EXIT_OK


def cmd_invert_period(cfg: RunConfig) -> int:
    """Print the K whose helicoid has period T; negative T gives negative K."""
    K = math.copysign(helicoid.invert_period(abs(cfg.T)), cfg.T)
    print(f"K {K:.12g}")
    return EXIT_OK


COMMANDS = {"surface": cmd_surface, "section": cmd_section, "verify": cmd_verify,
            "period": cmd_period, "invert-period": cmd_invert_period}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the solminimal command."""
    try:
        args = vars(build_parser().parse_args(argv))
        _configure_logging(args.pop("verbose"))
        path = args.pop("config")
        file_values = read_config_file(path) if path is not None else None
        cfg = RunConfig.from_sources(args, file_values)
        logger.debug("running %s", cfg)
        return COMMANDS[cfg.command](cfg)
    except exceptions.SolMinimalException as error:
        print(f"solminimal: {error}", file=sys.stderr)
        return EXIT_USAGE

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
