import json

import pytest

from special_scrolls.cli import main, parse_points, UsageError
from special_scrolls.report import Report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def structured(capsys, *argv):
    code, out, err = run(capsys, "--format", "structured", *argv)
    assert code == 0, err
    return json.loads(out), out


def test_classify_by_N(capsys):
    doc, _ = structured(capsys, "classify", "--g", "3", "--N", "6")
    (res,) = doc["results"]
    assert res["case_id"] == 1 and res["d"] == 10 and res["rr_check"] == "pass"
    assert doc["schema_version"] == 1 and doc["provenance"]


def test_classify_by_degree(capsys):
    doc, _ = structured(capsys, "classify", "--g", "3", "--d", "7", "--i", "1")
    (res,) = doc["results"]
    assert (res["N"], res["case_id"], res["e"]) == (3, 2, -1)


def test_classify_degree_nine_genus_two_is_case_one(capsys):
    doc, _ = structured(capsys, "classify", "--g", "2", "--d", "9", "--i", "1")
    assert (doc["results"][0]["N"], doc["results"][0]["case_id"]) == (7, 1)


def test_classify_exit_codes(capsys):
    assert run(capsys, "classify", "--g", "3", "--N", "2")[0] == 1
    assert run(capsys, "classify", "--g", "1", "--N", "5")[0] == 1
    assert run(capsys, "classify", "--g", "3", "--d", "9", "--i", "0")[0] == 1
    assert run(capsys, "classify", "--g", "3", "--d", "7", "--i", "1", "--N", "4")[0] == 2
    assert run(capsys, "classify", "--g", "3", "--d", "7")[0] == 2
    assert run(capsys, "classify", "--N", "3")[0] == 2


def test_table_counts(capsys):
    doc, _ = structured(capsys, "table", "--g", "2")
    assert len(doc["results"]) == 3
    doc, _ = structured(capsys, "table", "--g", "3", "--hyperelliptic")
    assert len(doc["results"]) == 5
    assert len(doc["warnings"]) == 1
    doc, _ = structured(capsys, "table", "--g", "3")
    assert [r["hyperelliptic"] for r in doc["results"]] == [False] * 8 + [True] * 5
    assert run(capsys, "table", "--g", "4")[0] == 1


def test_table_text(capsys):
    code, out, _ = run(capsys, "table", "--g", "2")
    assert code == 0
    assert "b ~ K+P+Q" in out and "C4 in P2 (oo^3)" in out and "warning:" in out


def test_project_examples(capsys):
    doc, _ = structured(capsys, "project", "--g", "3", "--deg-b", "6", "--points", "X0,X1,X1")
    res = doc["results"][0]
    assert (res["kind"], res["d"], res["decomposable"], res["e"]) == ("scroll", 7, True, 1)
    doc, _ = structured(capsys, "project", "--g", "2", "--deg-b", "4", "--points", "X0")
    assert (doc["results"][0]["d"], doc["results"][0]["e"]) == (4, 4)
    doc, _ = structured(capsys, "project", "--g", "3", "--deg-b", "6", "--points", "X0,X0,generic")
    assert doc["results"][0]["kind"] == "rejected"
    doc, _ = structured(capsys, "project", "--g", "2", "--deg-b", "4", "--points", "singular:X1")
    assert doc["results"][0]["kind"] == "degenerate" and doc["warnings"]


def test_project_engine_path(capsys):
    doc, _ = structured(capsys, "project", "--g", "3", "--deg-b", "6", "--points", "Yc:2,generic,fiber:A")
    res = doc["results"][0]
    assert (res["d"], res["N"], res["e"]) == (7, 3, -1)
    assert res["rr_check"] == "pass"


def test_project_errors(capsys):
    assert run(capsys, "project", "--g", "3", "--deg-b", "6", "--points", "X0,X1,Z")[0] == 2
    assert run(capsys, "project", "--g", "3", "--deg-b", "6", "--points", "Yc:0")[0] == 2
    assert run(capsys, "project", "--g", "3", "--deg-b", "6", "--points",
               "X0,generic,generic", "--hyperelliptic")[0] == 1
    assert run(capsys, "project", "--g", "3", "--deg-b", "6", "--points",
               "fiber:A,fiber:A,generic")[0] == 1


def test_parse_points():
    assert parse_points("X0, Yc:3 ,fiber:A1") == ["X0", "Yc:3", "fiber:A1"]
    with pytest.raises(UsageError):
        parse_points("")


@pytest.mark.parametrize("suite,extra", [
    ("rr-closure", ["--g-max", "12"]),
    ("generica-boundaries", ["--g-max", "20"]),
    ("transform-oracle", ["--g-max", "3", "--k-max", "5"]),
    ("projection-crosscheck", []),
    ("grassmannian-enumeration", []),
    ("stability-bound", []),
    ("reduction-identities", []),
])
def test_verify_suites_pass(capsys, suite, extra):
    doc, _ = structured(capsys, "verify", "--suite", suite, *extra)
    assert doc["results"] and all(r["passed"] for r in doc["results"])


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_structured_output_round_trips_and_is_deterministic(capsys):
    for argv in (["table", "--g", "3"], ["classify", "--g", "5", "--N", "3"],
                 ["project", "--g", "3", "--deg-b", "6", "--points", "generic,X1,X0"]):
        _, first = structured(capsys, *argv)
        _, second = structured(capsys, *argv)
        assert first == second
        assert Report.from_json(first).to_json() == first
