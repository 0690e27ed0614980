import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from nash_toric.cli import RunConfig, main, run

A3_JSON = '{"dim":2,"rays":[[0,1],[4,-3]]}'
QUADRANT = '{"dim":2,"rays":[[1,0],[0,1]]}'


def _run(**kw):
    out, err = io.StringIO(), io.StringIO()
    code = run(RunConfig(**kw), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_nash_on_a3_is_not_isomorphism():
    code, out, _ = _run(command="nash", cone=A3_JSON, n=1)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1 and rep["is_isomorphism"] is False
    assert rep["fan"]["maximal_cones"] == [[[0, 1], [2, -1]], [[2, -1], [4, -3]]]


def test_smooth_check_quadrant():
    code, out, _ = _run(command="smooth-check", cone=QUADRANT)
    assert code == 0 and json.loads(out)["smooth"] is True


def test_toh_yama_n4():
    code, out, _ = _run(command="toh-yama", n=4)
    rep = json.loads(out)
    assert code == 0
    assert (rep["rays"], rep["index"], rep["matches_computed"]) == ([[2, -1], [8, -3]], 2, True)


def test_hilbert_and_dual():
    assert json.loads(_run(command="hilbert", cone=A3_JSON)[1])["hilbert_basis"] == [
        [1, 0], [1, 1], [3, 4]]
    assert json.loads(_run(command="dual", cone=A3_JSON)[1])["dual"]["rays"] == [[1, 0], [3, 4]]


def test_curve_command():
    code, out, _ = _run(command="curve", generators=[2, 5], up_to=5)
    assert code == 0 and json.loads(out)["good_orders"] == [2, 3, 4, 5]


def test_groebner_and_gfan_from_file(tmp_path):
    payload = {"cone": json.loads(A3_JSON),
            "generators": [{"terms": [{"exp": [1, 0], "coeff": 1}, {"exp": [0, 0], "coeff": -1}]},
                           {"terms": [{"exp": [2, 1], "coeff": 1}, {"exp": [0, 0], "coeff": -1}]}],
            "order": [[2, -1], [1, 1]]}
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    code, out, _ = _run(command="groebner", input_path=str(path))
    assert code == 0 and json.loads(out)["reduced"] is True
    code, out, _ = _run(command="gfan", input_path=str(path), field="5")
    assert code == 0 and json.loads(out)["fan"]["dim"] == 2


def test_output_is_deterministic(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"out{i}.json"
        assert _run(command="iterate", cone=A3_JSON, output_path=str(p))[0] == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_svg_has_one_polygon_per_cone(tmp_path):
    svg = tmp_path / "fan.svg"
    code, out, _ = _run(command="nash", cone=A3_JSON, svg_path=str(svg))
    assert code == 0
    root = ET.parse(svg).getroot()
    polys = root.findall("{http://www.w3.org/2000/svg}polygon")
    assert len(polys) == len(json.loads(out)["fan"]["maximal_cones"])
    assert "index 2" in svg.read_text()


def test_malformed_json_reports_position():
    code, _, err = _run(command="nash", cone='{"dim": 2,\n "rays": [[0,1],]}')
    assert code == 1
    assert "line 2" in err and "column" in err


def test_domain_error_exit_status():
    code, _, err = _run(command="nash", cone='{"dim":2,"rays":[[1,0],[-1,0]]}')
    assert code == 2 and "strongly convex" in err
    code, _, err = _run(command="curve", generators=[2, 4])
    assert code == 2 and "not a branch semigroup" in err


@pytest.mark.parametrize("argv", [["bogus"], ["nash"], ["nash", "--n", "x"],
                                  ["smooth-check", "--cone", QUADRANT, "--svg", "a.svg"]])
def test_usage_errors(argv, capsys):
    assert main(argv) == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nash_toric.cli", "smooth-check",
                           "--cone", QUADRANT], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["smooth"] is True
