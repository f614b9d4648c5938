"""Test the command line."""

# pylint: disable=import-error
import json
from solminimal.cli import main


def test_surface(tmp_path, capsys):
    """A 64 x 64 helicoid mesh."""
    out = tmp_path / "h.obj"
    assert main(["surface", "--kind", "helicoid", "--K", "0.4", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert sum(line.startswith("v ") for line in lines) == 4096
    assert sum(line.startswith("f ") for line in lines) == 63 * 63
    assert "Mesh(4096 vertices" in capsys.readouterr().out


def test_surface_reruns_are_identical(tmp_path):
    """The same flags give byte-identical files."""
    first, second = tmp_path / "a.obj", tmp_path / "b.obj"
    for path in (first, second):
        assert main(["surface", "--kind", "catenoid", "--alpha", "-0.6", "--nu", "8",
                     "--nv", "9", "--normals", "--out", str(path)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert "vn " in first.read_text()


def test_surface_wide_v_range(tmp_path):
    """v bounds past four periods integrate a longer profile."""
    out = tmp_path / "h.obj"
    assert main(["surface", "--kind", "helicoid", "--K", "0.4", "--v-min=-30", "--v-max=30",
                 "--nu", "3", "--nv", "5", "--out", str(out)]) == 0
    heights = [float(line.split()[3]) for line in out.read_text().splitlines()
               if line.startswith("v ")]
    assert len(heights) == 15
    assert heights[-1] > 0 > heights[0]
    out = tmp_path / "p.obj"
    assert main(["surface", "--kind", "plane-limit", "--alpha", "0.05", "--v-min=-20",
                 "--v-max=20", "--nu", "3", "--nv", "3", "--out", str(out)]) == 0


def test_surface_infinite_bound(tmp_path, capsys):
    """Non-finite bounds are a usage error."""
    assert main(["surface", "--kind", "catenoid", "--alpha", "0.5", "--v-max", "inf",
                 "--out", str(tmp_path / "c.obj")]) == 1
    assert "v_max must be finite" in capsys.readouterr().err


def test_degenerate_parameter(tmp_path, capsys):
    """K = 0 is a usage error."""
    assert main(["surface", "--K", "0", "--out", str(tmp_path / "x.obj")]) == 1
    assert "degenerate" in capsys.readouterr().err


def test_usage_errors(capsys):
    """Missing commands and bad flags exit with 1."""
    assert main([]) == 1
    assert main(["surface", "--nu", "many"]) == 1
    assert main(["surface", "--K", "0.4"]) == 1
    assert "needs --out" in capsys.readouterr().err


def test_verify_fails_with_tiny_tolerances(tmp_path):
    """Scaling every tolerance to nothing fails the report with exit code 2."""
    report = tmp_path / "report.txt"
    assert main(["verify", "--kind", "graph-S", "--tol-scale", "1e-30",
                 "--report", str(report)]) == 2
    assert report.read_text().startswith("# graph S FAIL")


def test_verify_passes(capsys):
    """The graph S suite passes and prints its report."""
    assert main(["verify", "--kind", "graph-S"]) == 0
    assert capsys.readouterr().out.startswith("# graph S PASS")


def test_period(capsys):
    """At K = 0 the quadrature gives W = pi and T = 0."""
    assert main(["period", "--quadrature", "--K", "0"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "W 3.14159265359"
    assert out[2] == "T 0"
    assert main(["period", "--K", "0"]) == 1


def test_invert_period(capsys):
    """The period of K = 0.4 inverts to 0.4 and the sign carries over."""
    main(["period", "--K", "0.4"])
    T = capsys.readouterr().out.splitlines()[2].split()[1]
    assert main(["invert-period", "--T", T]) == 0
    assert abs(float(capsys.readouterr().out.split()[1]) - 0.4) < 1e-6
    assert main(["invert-period", "--T", "-" + T]) == 0
    assert float(capsys.readouterr().out.split()[1]) < 0


def test_catenoid_section(tmp_path, capsys):
    """A catenoid section is written with its convexity certificate."""
    out = tmp_path / "s.csv"
    assert main(["section", "--kind", "catenoid", "--alpha", "0.6", "--level", "1",
                 "--samples", "128", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "t,x1,x2"
    assert len(lines) == 129
    assert "section.convex" in capsys.readouterr().out


def test_graph_section(tmp_path):
    """Graph sections default to t in [-5, 5]."""
    out = tmp_path / "g.csv"
    assert main(["section", "--kind", "graph-S", "--samples", "11", "--out", str(out)]) == 0
    rows = out.read_text().splitlines()
    assert rows[1].startswith("-5,")
    assert rows[-1].startswith("5,")


def test_config_file(tmp_path):
    """Options can come from a JSON file and flags override them."""
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"kind": "helicoid", "K": 0.9, "nu": 4, "nv": 5}))
    out = tmp_path / "c.obj"
    assert main(["--config", str(config), "surface", "--K", "0.4", "--out", str(out)]) == 0
    assert sum(line.startswith("v ") for line in out.read_text().splitlines()) == 20
    assert main(["--config", str(tmp_path / "missing.json"), "period", "--K", "0.4"]) == 1
