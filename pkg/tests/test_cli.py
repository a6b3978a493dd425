"""Command line wiring: exit codes, JSON shapes, determinism."""

import hashlib
import json
import subprocess
import sys

import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from delrank import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def write_json(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc) + "\n")
    return str(path)


@pytest.fixture
def square_file(tmp_path):
    return write_json(
        tmp_path,
        "square.json",
        {"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]},
    )


def test_rank_both_methods(square_file, capsys):
    code, out, err = run(["rank", square_file], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "rank"
    assert doc["rank_bspace"] == 2
    assert doc["rank_hypermetric"] == 2
    assert doc["methods_agree"] is True


def test_rank_single_method(square_file, capsys):
    code, out, err = run(["rank", square_file, "--method", "bspace"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["rank_bspace"] == 2
    assert "rank_hypermetric" not in doc
    assert "methods_agree" not in doc


def test_digest_echo(square_file, capsys):
    raw = open(square_file, "rb").read()
    expected = "sha256:" + hashlib.sha256(raw).hexdigest()
    code, out, err = run(["deps", square_file], capsys)
    assert code == 0
    assert json.loads(out)["input"] == expected


def test_deps_square(square_file, capsys):
    code, out, err = run(["deps", square_file], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 1
    assert doc["vectors"] == [["1", "-1", "-1", "1"]]


def test_family_to_file_then_rank(tmp_path, capsys):
    target = str(tmp_path / "hc4.json")
    code, out, err = run(["family", "halfcube", "4", "--output", target], capsys)
    assert code == 0
    assert out == ""
    doc = json.loads(open(target).read())
    assert doc["dim"] == 4
    assert len(doc["vertices"]) == 8
    assert doc["gram"] == [["1" if i == j else "0" for j in range(4)] for i in range(4)]
    code, out, err = run(["rank", target], capsys)
    assert code == 0
    assert json.loads(out)["rank_bspace"] == 7


def test_family_p0_is_distances_only(capsys):
    code, out, err = run(["family", "p0"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 12
    assert "vertices" not in doc
    assert len(doc["distances"]) == 14
    assert doc["distances"][0][1] == "7"


@pytest.mark.parametrize(
    "argv",
    [
        ["family", "simplex"],          # size missing
        ["family", "p0", "3"],          # size not allowed
        ["family", "halfcube", "2"],    # below minimum
        ["basicity", "x.json", "--budget", "0"],
        ["verify", "x.json", "--window", "-1"],
        ["report", "x.json", "--budget", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 1
    assert err


def test_argparse_errors_exit_one(capsys):
    for argv in [[], ["family", "orthoplex", "3"], ["rank"]]:
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 1
        capsys.readouterr()


BAD_FILES = [
    {"dim": 2},
    {"dim": 2, "vertices": [["0", "0"]], "distances": [["0"]]},
    {"dim": 2, "distances": [["0", "1"], ["1", "0"]], "gram": [["1"]]},
    {"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"]], "extra": 1},
    {"dim": 0, "vertices": [["0"], ["1"]]},
    {"dim": True, "vertices": [["0"], ["1"]]},
    {"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1]]},
    {"dim": 2, "vertices": [["0.5", "0"], ["1", "0"], ["0", "1"]]},
    {"dim": 2, "vertices": [["1/0", "0"], ["1", "0"], ["0", "1"]]},
    {
        "dim": 2,
        "vertices": [["0", "0"], ["1", "0"], ["0", "1"]],
        "gram": [["1", "2"], ["3", "1"]],
    },
    {
        "dim": 2,
        "vertices": [["0", "0"], ["1", "0"], ["0", "1"]],
        "gram": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    },
    {"dim": 3, "distances": [["0", "1", "1", "2"], ["1", "0", "2", "1"], ["1", "2", "0", "1"], ["2", "1", "1", "0"]]},
    [1, 2, 3],
]


@pytest.mark.parametrize("doc", BAD_FILES)
def test_invalid_files_exit_two(doc, tmp_path, capsys):
    path = write_json(tmp_path, "bad.json", doc)
    code, out, err = run(["rank", path], capsys)
    assert code == 2
    assert err.startswith("invalid input:")


def test_missing_and_unparsable_files(tmp_path, capsys):
    code, out, err = run(["rank", str(tmp_path / "no_such.json")], capsys)
    assert code == 2
    bad = tmp_path / "syntax.json"
    bad.write_text("{not json")
    code, out, err = run(["rank", str(bad)], capsys)
    assert code == 2


def test_verify_square(tmp_path, capsys):
    path = write_json(
        tmp_path,
        "sq.json",
        {
            "dim": 2,
            "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]],
            "gram": [["1", "0"], ["0", "1"]],
        },
    )
    code, out, err = run(["verify", path, "--window", "2"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["center"] == ["1/2", "1/2"]
    assert doc["radius_sq"] == "1/2"
    assert doc["cospherical"] is True
    assert doc["centrally_symmetric"] is True
    es = doc["empty_sphere"]
    assert set(es) == {
        "heuristic",
        "note",
        "window",
        "box",
        "points_checked",
        "strict_violations",
        "on_sphere_nonvertices",
        "caveats",
        "ok",
    }
    assert es["heuristic"] is True
    assert es["ok"] is True
    assert es["strict_violations"] == []


def test_verify_needs_gram(square_file, capsys):
    # vertices without gram: no form to check against
    code, out, err = run(["verify", square_file], capsys)
    assert code == 2


def test_verify_not_cospherical_exits_three(tmp_path, capsys):
    path = write_json(
        tmp_path,
        "off.json",
        {
            "dim": 2,
            "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["3", "3"]],
            "gram": [["1", "0"], ["0", "1"]],
        },
    )
    code, out, err = run(["verify", path], capsys)
    assert code == 3
    assert err.startswith("inconsistency:")


def test_basicity_square(square_file, capsys):
    code, out, err = run(["basicity", square_file], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "Z_BASIC"
    assert doc["witness"] == [0, 1, 2]
    assert doc["budget"] == 2000


def test_nrd_two_files(tmp_path, square_file, capsys):
    other = write_json(
        tmp_path,
        "tri.json",
        {"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]},
    )
    code, out, err = run(["nrd", square_file, other], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 2
    assert doc["nrd"] == 2
    assert len(doc["inputs"]) == 2


def test_nrd_dimension_mismatch(tmp_path, square_file, capsys):
    seg = write_json(tmp_path, "seg.json", {"dim": 1, "vertices": [["0"], ["1"]]})
    code, out, err = run(["nrd", square_file, seg], capsys)
    assert code == 2


def test_report_square(tmp_path, capsys):
    path = write_json(
        tmp_path,
        "sq.json",
        {
            "dim": 2,
            "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]],
            "gram": [["1", "0"], ["0", "1"]],
        },
    )
    code, out, err = run(["report", path], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["rank"] == 2
    assert doc["face_dimension"] == 2
    assert doc["methods_agree"] is True
    assert doc["extreme"] is False
    assert doc["centrally_symmetric"] is True
    assert doc["dependencies"] == {"count": 1, "vectors": [["1", "-1", "-1", "1"]]}
    assert doc["basicity"]["kind"] == "Z_BASIC"
    assert doc["verify"]["empty_sphere"]["ok"] is True
    assert doc["warnings"]


def test_report_without_gram_skips_verify(square_file, capsys):
    code, out, err = run(["report", square_file], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["verify"] is None
    assert doc["centrally_symmetric"] is None
    assert any("skipped" in w for w in doc["warnings"])


def test_determinism_double_run(square_file, capsys):
    _, first, _ = run(["report", square_file], capsys)
    _, second, _ = run(["report", square_file], capsys)
    assert first == second
    assert first.endswith("\n")


@given(
    st.fractions(
        min_value=Fraction(-(10**9)),
        max_value=Fraction(10**9),
        max_denominator=10**9,
    )
)
def test_rational_text_round_trip(q):
    text = cli._rat(q)
    assert cli._RATIONAL.match(text)
    assert cli._parse_rational(text) == q


def test_rational_rejections():
    from delrank.errors import InputError

    for bad in ["1.5", "1/0", "2/-3", "", "+1", " 1", "1/", None, 3]:
        with pytest.raises(InputError):
            cli._parse_rational(bad)


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "delrank.cli", "family", "simplex", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["dim"] == 2
    assert len(doc["vertices"]) == 3
