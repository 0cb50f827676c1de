"""Command-line interface tests.

Exit code contract: 0 success, 2 malformed invocation (argparse level),
3 well-formed input outside the mathematical domain.  All error text
goes to stderr as a single "error: ..." line; stdout stays machine
readable.
"""

import json
import xml.etree.ElementTree as ET

import pytest

from modlink.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- success


def test_word(capsys):
    code, out, err = run(capsys, "word", "1/7")
    assert (code, out, err) == (0, "LLRRLRLRLRLRLR\n", "")


def test_word_routes_negative_slope_with_notice(capsys):
    code, out, err = run(capsys, "word", "-2/1")
    assert code == 0
    assert out == "LLRRLR\n"
    assert err == "notice: -2/1 routed via v-orbit representative 1/3\n"


def test_slope_info(capsys):
    code, out, err = run(capsys, "slope-info", "3/2")
    assert code == 0
    assert out.splitlines() == [
        "slope: 3/2",
        "continued-fraction: [1, 2]",
        "farey-path-length: 3",
        "v-orbit: -2/1 1/3 3/2",
    ]


def test_slope_info_json_handles_infinity(capsys):
    code, out, _ = run(capsys, "slope-info", "1/0", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["slope"] == "1/0"
    assert data["continued_fraction"] is None
    assert data["v_orbit"] == ["0/1", "1/1", "1/0"]


def test_cutting_with_oracle_check(capsys):
    code, out, err = run(capsys, "cutting", "3/2", "--check")
    assert code == 0
    assert out.splitlines() == [
        "slope: 3/2",
        "ab-word: ABABB",
        "lr-word: LLRRLR",
        "oracle-ab: match",
        "oracle-lr: match",
    ]


def test_length(capsys):
    code, out, err = run(capsys, "length", "LLRR")
    assert code == 0
    assert out.splitlines() == [
        "word: LLRR",
        "trace: 6",
        "length: 3.52549434808",
        "discriminant: 2",
    ]


def test_family_json(capsys):
    code, out, err = run(capsys, "family", "3/2", "--json", "-")
    assert code == 0
    data = json.loads(out)
    assert data["target"] == "3/2"
    assert data["x"] == 3
    assert data["counts"] == {"modular": 3, "ut_single": 9, "ut_both": 18}
    assert data["volume_modular"] == 10.9915871301


def test_family_text(capsys):
    code, out, err = run(capsys, "family", "3/2")
    assert code == 0
    assert "target: 3/2" in out
    assert "ratio: 3.33576633705" in out


def test_census_jsonl(capsys):
    code, out, err = run(capsys, "census", "--max-x", "3")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["target"] for r in rows] == [
        "1/1", "1/2", "2/1", "1/3", "2/3", "3/2", "3/1",
    ]
    code, out, err = run(capsys, "census", "--max-x", "3", "--dedupe-mirror")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["target"] for r in rows] == ["1/1", "1/2", "1/3", "2/3"]


def test_table_csv(capsys):
    code, out, err = run(capsys, "table", "--n", "2", "--csv", "-")
    assert code == 0
    assert out.splitlines() == [
        "n,word,trace,length,cumulative_length,octahedra,"
        "volume,volume_paper_formula,ratio",
        "1,LR,3,1.92484730024,1.92484730024,1,"
        "3.66386237671,1.83193118835,2.64083344221",
        "2,LLRR,6,3.52549434808,5.45034164832,2,"
        "7.32772475342,3.66386237671,3.13875403957",
    ]


def test_svg_outputs(tmp_path, capsys):
    disk = tmp_path / "disk.svg"
    line = tmp_path / "line.svg"
    assert run(capsys, "svg-path", "3/2", "--out", str(disk))[0] == 0
    assert run(capsys, "svg-line", "3/2", "--out", str(line))[0] == 0
    ET.parse(disk)
    ET.parse(line)


def test_outputs_are_deterministic(capsys):
    first = run(capsys, "family", "3/2", "--json", "-")
    second = run(capsys, "family", "3/2", "--json", "-")
    assert first == second
    assert run(capsys, "svg-line", "2/3", "--out", "-") == run(
        capsys, "svg-line", "2/3", "--out", "-"
    )


def test_cutting_output_slopes_reparse(capsys):
    _, out, _ = run(capsys, "cutting", "5/3")
    slope_line = out.splitlines()[0]
    assert slope_line.removeprefix("slope: ") == "5/3"


# ----------------------------------------------------- malformed, exit 2


@pytest.mark.parametrize(
    "argv",
    [
        ("word", "3"),
        ("word", "3/"),
        ("word", "a/b"),
        ("length", "LRX"),
        ("length", ""),
        ("census", "--max-x", "0"),
        ("census", "--max-x", "two"),
        ("table", "--n", "-1"),
        ("table",),
        ("svg-path", "3/2"),
        ("nonsense",),
        (),
    ],
)
def test_malformed_invocations_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error: ")
    assert len(err.rstrip("\n").splitlines()) == 1


# -------------------------------------------------- domain errors, exit 3


@pytest.mark.parametrize(
    "argv, slug",
    [
        (("slope-info", "0/0"), "undefined-slope"),
        (("word", "0/0"), "undefined-slope"),
        (("length", "LL"), "parabolic"),
        (("length", "RRR"), "parabolic"),
        (("family", "-2/1"), "negative-slope"),
        (("svg-line", "1/0", "--out", "-"), "unsupported-slope"),
        (("cutting", "1/0"), "unsupported-slope"),
    ],
)
def test_domain_errors_exit_3(capsys, argv, slug):
    code, out, err = run(capsys, *argv)
    assert code == 3
    assert out == ""
    assert err.startswith("error: ")
    assert slug in err
    assert len(err.rstrip("\n").splitlines()) == 1
