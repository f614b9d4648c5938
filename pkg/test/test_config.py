"""Test run configuration."""

# pylint: disable=import-error
import json
import pytest
import solminimal
from solminimal.config import RunConfig, read_config_file, resolve_bounds


def test_flags_override_file():
    """Flags win over the file and None means not given."""
    cfg = RunConfig.from_sources({"command": "surface", "K": 0.4, "nu": None},
                                 {"K": 0.2, "nu": 8, "kind": "helicoid"})
    assert cfg.parameter == 0.4
    assert cfg.nu == 8
    assert cfg.nv == solminimal.config.DEFAULT_SAMPLES


def test_unknown_key():
    """Misspelt keys are reported."""
    with pytest.raises(solminimal.exceptions.ConfigError, match="unknown key"):
        RunConfig.from_sources({"command": "period", "K": 0.4}, {"smaples": 3})


def test_no_command():
    """A command is always needed."""
    with pytest.raises(solminimal.exceptions.ConfigError, match="no command"):
        RunConfig.from_sources({"command": None})


@pytest.mark.parametrize("values", [
    {"command": "draw"},
    {"command": "surface", "kind": "torus", "parameter": 0.4},
    {"command": "surface", "kind": "catenoid"},
    {"command": "surface", "parameter": 0.4, "nu": 1},
    {"command": "surface", "parameter": 0.4, "u_min": 1.0, "u_max": 0.0},
    {"command": "verify", "parameter": 0.4, "tol_scale": 0.0},
    {"command": "verify", "parameter": 0.4, "fd_step": 0.1},
])
def test_invalid_values(values):
    """Inconsistent configurations are refused."""
    with pytest.raises(solminimal.exceptions.ConfigError):
        RunConfig(**values)


def test_illegal_parameters():
    """The parameter is checked against its family."""
    with pytest.raises(solminimal.exceptions.DegenerateParameter):
        RunConfig("surface", parameter=0.0)
    with pytest.raises(solminimal.exceptions.ParameterOutOfRange):
        RunConfig("verify", kind="catenoid", parameter=1.5)
    with pytest.raises(solminimal.exceptions.ParameterOutOfRange):
        RunConfig("verify", kind="plane-limit", parameter=0.5)
    assert RunConfig("verify", kind="graph-S").parameter is None


def test_read_config_file(tmp_path):
    """JSON objects load; anything else is a configuration error."""
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"K": 0.4, "tolerances": {"harmonic": 1e-8}}))
    assert read_config_file(good)["tolerances"] == {"harmonic": 1e-8}
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2]")
    with pytest.raises(solminimal.exceptions.ConfigError):
        read_config_file(bad)
    with pytest.raises(solminimal.exceptions.ConfigError):
        read_config_file(tmp_path / "missing.json")


def test_resolve_bounds():
    """Default rectangles per kind; given bounds are kept."""
    helicoid_cfg = resolve_bounds(RunConfig("surface", parameter=0.4, u_min=-1.0), 1.5)
    assert (helicoid_cfg.u_min, helicoid_cfg.u_max) == (-1.0, 2.0)
    assert (helicoid_cfg.v_min, helicoid_cfg.v_max) == (-3.0, 3.0)
    catenoid_cfg = resolve_bounds(RunConfig("surface", kind="catenoid", parameter=0.5), 2.0)
    assert (catenoid_cfg.v_min, catenoid_cfg.v_max) == (0.0, 4.0)
    graph_cfg = resolve_bounds(RunConfig("section", kind="graph-S"))
    assert (graph_cfg.v_min, graph_cfg.v_max) == (-5.0, 5.0)
