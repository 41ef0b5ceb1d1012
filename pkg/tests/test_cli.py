import csv
import io
import json
import math
import subprocess
import sys

import pytest

from hardcore.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_k3(capsys):
    code, out, _ = run(capsys, "poly", "--graph6", "Bw")
    assert code == 0 and json.loads(out) == {"profile": ["1", "3"]}
    assert out.endswith("\n")


def test_poly_clique(capsys):
    _, out, _ = run(capsys, "poly", "--graph6", "Bw", "--clique")
    assert json.loads(out) == {"profile": ["1", "3", "3", "1"]}


def test_occupancy_family(capsys):
    code, out, _ = run(capsys, "occupancy", "--family", "Z:5,2", "--lambda", "1/1")
    assert code == 0 and out == "17/60\n"


def test_json_and_csv_agree(capsys):
    _, js, _ = run(capsys, "variance", "--family", "path:3", "--lambda", "1", "--json")
    _, cs, _ = run(capsys, "variance", "--family", "path:3", "--lambda", "1", "--csv")
    rows = list(csv.DictReader(io.StringIO(cs)))
    assert json.loads(js) == rows[0] == {"variance": "2/15"}


def test_file_input_tags_graphs(tmp_path, capsys):
    f = tmp_path / "g.g6"
    f.write_text("Bw\nBg\n")
    _, out, _ = run(capsys, "occupancy", "--file", str(f), "--lambda", "1")
    assert out == "Bw 1/4\nBg 1/3\n"
    _, out, _ = run(capsys, "poly", "--file", str(f), "--json")
    assert json.loads(out) == [{"graph6": "Bw", "profile": ["1", "3"]},
                               {"graph6": "Bg", "profile": ["1", "3", "1"]}]


def test_free_energy_prints_12_digits(capsys):
    _, out, _ = run(capsys, "free-energy", "--family", "kdd:2", "--lambda", "1")
    assert out == f"{math.log(7) / 4:.12g}\n"


def test_family_closed_forms(capsys):
    _, out, _ = run(capsys, "family", "Z:5,2", "--lambda", "1")
    data = json.loads(out)
    assert data["occupancy"] == data["closed_form_E"] == "17/60"
    assert data["closed_form_P"] == "12/1"
    code, _, _ = run(capsys, "family", "--family", "G1:5,2")
    assert code == 0


def test_symmetrize(capsys):
    _, out, _ = run(capsys, "symmetrize", "--family", "path:4", "--lambda", "1")
    data = json.loads(out)
    assert data["final_parts"] == [2, 2]
    assert [s["beta_after"] for s in data["steps"]] == ["4/3"]
    _, out, _ = run(capsys, "symmetrize", "--family", "path:4", "--lambda", "1", "--pair", "0,2")
    assert json.loads(out)["weights"] == ["7/1", "9/1"]


def test_mixture_and_phi(capsys):
    _, out, _ = run(capsys, "mixture", "--family", "path:3", "--lambda", "1")
    assert json.loads(out)["reconstruction_exact"] is True
    _, out, _ = run(capsys, "phi", "--family", "path:3", "--lambda", "1")
    assert json.loads(out)["extension_ratio"] == ["3/1", "2/3", "0/1"]


def test_sample_seeded(capsys):
    args = ("sample", "--family", "path:3", "--lambda", "1", "--samples", "2000", "--seed", "4")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b and json.loads(a)["exact_mean"] == "1/1"
    _, c, _ = run(capsys, *args, "--chains", "2")
    assert json.loads(c)["n_samples"] == 4000


def test_verify_small(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n_max": 3, "lambdas": ["1/2", "1"], "free_energy": [[2, 6]]}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--no-timing")
    data = json.loads(out)
    assert code == 0 and all(r["verdict"] == "pass" for r in data)
    assert all("runtime_ms" not in r for r in data)
    code, out, _ = run(capsys, "verify", "--n-max", "2", "--check", "theorem1", "--csv")
    assert code == 0 and out.splitlines()[1].startswith("theorem1,")


def test_verify_failure_exit_code(capsys, tmp_path):
    f = tmp_path / "four.g6"
    f.write_text("Cr\n")
    code, out, _ = run(capsys, "verify", "--n-max", "4", "--check", "theorem4", "--file", str(f))
    assert code == 1 and json.loads(out)[0]["counterexamples"]


@pytest.mark.parametrize("argv, needle", [
    (["occupancy", "--family", "Z:5,2", "--lambda", "0.5"], "--lambda"),
    (["occupancy", "--family", "Z:5,2"], "--lambda"),
    (["poly", "--graph6", "Bw", "--family", "K:3"], "--family"),
    (["poly"], "--graph6"),
    (["occupancy", "--family", "Z:5,2", "--lambda", "-1/2"], "--lambda"),
])
def test_usage_errors_exit_2(argv, needle, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert needle in capsys.readouterr().err


def test_input_errors_exit_2(capsys):
    code, _, err = run(capsys, "poly", "--graph6", "B~x")
    assert code == 2 and "byte offset 2" in err
    code, _, err = run(capsys, "poly", "--family", "Z:3,4")
    assert code == 2 and "Z:3,4" in err
    code, _, err = run(capsys, "sample", "--file", "/nonexistent.g6", "--lambda", "1")
    assert code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "hardcore", "poly", "--graph6", "Bg"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"profile": ["1", "3", "1"]}
