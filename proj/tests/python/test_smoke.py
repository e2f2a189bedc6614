import json
import os
import subprocess
import xml.etree.ElementTree as ET

import pytest

import kmmtc


def test_geometry_basics():
    assert kmmtc.dist((0, 0), (3, 4)) == 5.0
    pts = kmmtc.circle_circle_intersections((0, 0), (2, 0), 1.0)
    assert len(pts) == 1 and tuple(pts[0]) == (1.0, 0.0)


@pytest.mark.parametrize("seed", range(10))
def test_solve_within_bound(seed):
    inst = kmmtc.gen_uniform(8, 1 + seed % 2, r=1.0, extent=6.0, seed=seed)
    opt = kmmtc.exact_min_cost_cover(inst).cost
    sol = kmmtc.solve(inst, m=4)
    assert opt - 1e-9 <= sol.total_cost <= 2.0 * opt + 1e-9
    assert len(sol.per_round_costs) == 4
    assert kmmtc.shift_average_audit(sol.per_round_costs, opt).passed


def test_epsilon_and_m_are_exclusive():
    inst = kmmtc.Instance([(0, 0)], [(1, 1)], 1.0)
    with pytest.raises(ValueError):
        kmmtc.solve(inst, m=2, epsilon=1.0)
    assert kmmtc.solve(inst, epsilon=1.0).m == 4


def test_fixed_cap_infeasible():
    inst = kmmtc.Instance([(0, 0), (0, 3.5)], [(0, 0)], 1.0)
    with pytest.raises(kmmtc.Infeasible):
        kmmtc.solve(inst, m=2, cap="1")


def test_render_is_valid_svg():
    inst = kmmtc.gen_uniform(5, 1, seed=3)
    root = ET.fromstring(kmmtc.render_svg(inst))
    circles = root.findall(".//{http://www.w3.org/2000/svg}circle")
    assert len(circles) == 5


def test_instance_file_round_trip(tmp_path):
    inst = kmmtc.gen_counterexample(4, alpha=1.0, beta=0.1)
    path = str(tmp_path / "ce.json")
    kmmtc.write_instance(path, inst)
    assert kmmtc.read_instance(path) == inst


@pytest.mark.skipif("KMMTC_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_solve(tmp_path):
    cli = os.environ["KMMTC_CLI"]
    inst = tmp_path / "i.json"
    out = tmp_path / "s.json"
    subprocess.run([cli, "generate", "--family", "uniform", "--n", "6", "--k", "1",
                    "--out", str(inst)], check=True)
    subprocess.run([cli, "solve", "--in", str(inst), "--m", "2", "--out", str(out)], check=True)
    doc = json.loads(out.read_text())
    assert doc["config"]["m"] == 2
    assert len(doc["placements"]) >= 1
