import json
import subprocess
import sys

import pytest

from hadring.cli import main
from hadring.hadamard import HadamardRing
from hadring.matrix import RingMatrix, mat_identity
from hadring.rings import ring_make, trial_rng


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


# -- verify ------------------------------------------------------------------

@pytest.mark.parametrize(
    "argv",
    [
        ["--ring", "gf2:8:0x11b", "--k", "2", "--s", "3", "--trials", "50", "--seed", "1"],
        ["--ring", "quot:0b10000", "--k", "1", "--s", "2", "--trials", "50", "--seed", "7"],
    ],
)
def test_verify_examples(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["violations"] == []
    checks = dict(report["checks"])
    assert checks.pop("ideal_canonical") == {"passed": 1, "failed": 0}
    assert all(c == {"passed": 50, "failed": 0} for c in checks.values())


def test_verify_bad_ring(capsys):
    code, out, err = run(capsys, "verify", "--ring", "gf3:1", "--k", "1", "--s", "1", "--trials", "1", "--seed", "0")
    assert code == 2 and out == "" and "gf3" in err


@pytest.mark.parametrize("bad", [["--trials", "0"], ["--k", "-1"], ["--s", "0"]])
def test_verify_bad_config(capsys, bad):
    argv = dict(zip(["--ring", "--k", "--s", "--trials", "--seed"], ["gf2:1", "1", "1", "1", "0"]))
    argv.update(dict([bad]))
    code, out, _ = run(capsys, "verify", *[x for kv in argv.items() for x in kv])
    assert code == 2 and out == ""


def test_verify_deterministic_across_runs_and_jobs(capsys, tmp_path):
    base = ["verify", "--ring", "gf2:8:0x11b", "--k", "2", "--s", "2", "--trials", "12", "--seed", "5"]
    outs = []
    for jobs in ("1", "1", "3"):
        code, out, _ = run(capsys, *base, "--jobs", jobs)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]
    path = tmp_path / "r.json"
    run(capsys, *base, "--out", str(path))
    assert path.read_text() == outs[0]


def test_verify_seed_changes_evidence(capsys):
    base = ["verify", "--ring", "gf2:8:0x11b", "--k", "1", "--s", "2", "--trials", "5"]
    _, a, _ = run(capsys, *base, "--seed", "1")
    _, b, _ = run(capsys, *base, "--seed", "2")
    assert json.loads(a)["seed"] == 1 and json.loads(b)["seed"] == 2


def test_missing_seed_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--ring", "gf2:1", "--k", "1", "--s", "1", "--trials", "1"])
    assert info.value.code == 2


# -- charpoly ---------------------------------------------------------------------

def test_charpoly_identity(capsys, tmp_path):
    path = write(tmp_path, "id.json", mat_identity(ring_make("gf2:1:0x3"), 2).dump())
    code, out, _ = run(capsys, "charpoly", "--in", path)
    assert code == 0 and json.loads(out) == ["1", "0", "1"]


def test_charpoly_algorithms_agree(capsys, tmp_path):
    M = RingMatrix.random(HadamardRing(ring_make("gf2:8:0x11b"), 1), 2, 2, trial_rng(3))
    from hadring.serialize import dump_block_matrix

    for name, doc in [("m.json", RingMatrix.random(ring_make("gf2:8"), 5, 5, trial_rng(1)).dump()), ("b.json", dump_block_matrix(M))]:
        path = write(tmp_path, name, doc)
        _, a, _ = run(capsys, "charpoly", "--in", path, "--algo", "berkowitz")
        _, b, _ = run(capsys, "charpoly", "--in", path, "--algo", "minors")
        assert a == b


def test_charpoly_oversize_minors(capsys, tmp_path):
    path = write(tmp_path, "big.json", mat_identity(ring_make("gf2:1"), 8).dump())
    code, out, err = run(capsys, "charpoly", "--in", path, "--algo", "minors")
    assert code == 2 and out == "" and err
    code, _, _ = run(capsys, "charpoly", "--in", path, "--algo", "minors", "--limit", "8")
    assert code == 0


@pytest.mark.parametrize("content", ["not json", '{"ring": "gf2:1"}', '{"ring": "gf2:1", "rows": 1, "cols": 1, "entries": ["2"]}'])
def test_charpoly_bad_input(capsys, tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, out, _ = run(capsys, "charpoly", "--in", str(path))
    assert code == 2 and out == ""


def test_charpoly_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "charpoly", "--in", str(tmp_path / "nope.json"))
    assert code == 2


# -- analyze ---------------------------------------------------------------------------

def test_analyze_starkad_like(capsys):
    code, out, _ = run(capsys, "analyze", "--starkad-like", "--ring", "gf2:8:0x11b", "--t", "16", "--k", "2")
    report = json.loads(out)
    assert code == 0
    assert report["l"] <= 8 and report["bound_new"] == 8 and report["bound_old"] == 12 and report["s"] == 4


def test_analyze_identity_file(capsys, tmp_path):
    path = write(tmp_path, "id16.json", mat_identity(ring_make("gf2:8"), 16).dump())
    code, out, _ = run(capsys, "analyze", "--in", path, "--k", "1")
    assert code == 0 and json.loads(out)["l"] == 1


def test_analyze_not_block(capsys, tmp_path):
    M = mat_identity(ring_make("gf2:8"), 8)
    doc = M.dump()
    doc["entries"][1] = "5"
    code, out, err = run(capsys, "analyze", "--in", write(tmp_path, "notblock.json", doc), "--k", "2")
    assert code == 1
    assert json.loads(out)["block"] == [0, 0] and err


def test_analyze_usage_errors(capsys, tmp_path):
    assert run(capsys, "analyze", "--k", "1")[0] == 2
    assert run(capsys, "analyze", "--starkad-like", "--k", "1")[0] == 2
    path = write(tmp_path, "q.json", mat_identity(ring_make("quot:0x10"), 4).dump())
    assert run(capsys, "analyze", "--in", path, "--k", "1")[0] == 2


# -- nilpotency / cauchy ---------------------------------------------------------------

@pytest.mark.parametrize("ring", ["gf2:1:0x3", "quot:0b100"])
def test_nilpotency(capsys, ring):
    code, out, _ = run(capsys, "nilpotency", "--ring", ring, "--k", "3", "--samples", "30", "--seed", "4")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    again = run(capsys, "nilpotency", "--ring", ring, "--k", "3", "--samples", "30", "--seed", "4")[1]
    assert again == out


def test_cauchy(capsys, tmp_path):
    code, out, _ = run(capsys, "cauchy", "--ring", "gf2:2:0x7", "--x", "1", "--y", "2")
    assert code == 0 and json.loads(out)["entries"] == ["2"]
    dest = tmp_path / "c.json"
    code, out, _ = run(capsys, "cauchy", "--ring", "gf2:8:0x11b", "--t", "16", "--k", "2", "--out", str(dest))
    doc = json.loads(out)
    assert code == 0 and doc["detect"] == {"k": 2, "ok": True, "s": 4}
    assert dest.read_text() == out


def test_cauchy_errors(capsys):
    assert run(capsys, "cauchy", "--ring", "gf2:2:0x7", "--x", "1", "--y", "1")[0] == 2
    assert run(capsys, "cauchy", "--ring", "gf2:2:0x7", "--x", "1")[0] == 2
    assert run(capsys, "cauchy", "--ring", "gf2:2:0x7", "--t", "4")[0] == 2
    code, out, _ = run(capsys, "cauchy", "--ring", "gf2:3", "--x", "1,2,4", "--y", "3,5,7", "--k", "1")
    assert code == 2
    code, out, _ = run(capsys, "cauchy", "--ring", "gf2:4", "--x", "1,2", "--y", "4,8", "--k", "1")
    assert code == 1 and json.loads(out)["detect"]["ok"] is False


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hadring", "analyze", "--starkad-like", "--ring", "gf2:8:0x11b", "--t", "4", "--k", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["t"] == 4
