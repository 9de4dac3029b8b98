import json
import logging
import os
from fractions import Fraction

import pytest
from click.testing import CliRunner

from ipgeom.closure import _logging, latfree, poly
from ipgeom.closure._io import parse_poly
from ipgeom.closure.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USER_ERROR, cli
from ipgeom.closure.latfree import IntegerHullCheck
from ipgeom.closure.poly import HPoly

EXAMPLE1 = {
    "dim": 2,
    "halfspaces": [{"a": ["-2", "1"], "b": "1/2"}, {"a": ["2", "1"], "b": "5/2"}],
}
EXAMPLE1_CLOSURE = {
    "dim": 2,
    "halfspaces": [
        {"a": ["0", "1"], "b": "0"},
        {"a": ["-2", "1"], "b": "0"},
        {"a": ["2", "1"], "b": "2"},
    ],
}
QUADRILATERAL = {
    "dim": 2,
    "halfspaces": [
        {"a": ["1", "-1"], "b": "1"},
        {"a": ["1", "1"], "b": "19/10"},
        {"a": ["-1", "1"], "b": "9/10"},
        {"a": ["-1", "-1"], "b": "-1/10"},
    ],
}


@pytest.fixture(autouse=True)
def quiet_logger():
    yield
    _logging.set_log_to_null(logging.getLogger(_logging.PACKAGE_LOGGER))


@pytest.fixture
def write_json(tmpdir):
    def write(name, document):
        path = tmpdir.join(name)
        path.write(json.dumps(document))
        return str(path)

    return write


def run(*args):
    return CliRunner().invoke(cli, [str(a) for a in args], catch_exceptions=False)


def error_of(result):
    return json.loads(result.output.strip().splitlines()[-1])


def same_poly_document(a, b):
    return poly.same_set(parse_poly(a), parse_poly(b))


def test_verify_example():
    result = run("verify-example")
    assert result.exit_code == EXIT_OK
    document = json.loads(result.output)
    assert document["kind"] == "example"
    assert document["passed"] is True


def test_facet_pair_closure(write_json):
    result = run("facet-pair-closure", "--input", write_json("p.json", EXAMPLE1))
    assert result.exit_code == EXIT_OK
    assert same_poly_document(json.loads(result.output), EXAMPLE1_CLOSURE)


def test_two_halfspace(write_json):
    result = run("two-halfspace", "--input", write_json("p.json", EXAMPLE1))
    assert result.exit_code == EXIT_OK
    assert same_poly_document(json.loads(result.output), EXAMPLE1_CLOSURE)


def test_two_halfspace_needs_two(write_json):
    result = run("two-halfspace", "--input", write_json("p.json", EXAMPLE1_CLOSURE))
    assert result.exit_code == EXIT_USER_ERROR
    assert error_of(result)["field"] == "halfspaces"


def test_hull2d_csv(write_json):
    result = run("hull2d", "--input", write_json("p.json", EXAMPLE1), "--format", "csv")
    assert result.exit_code == EXIT_OK
    lines = result.output.splitlines()
    assert lines[0] == "a1,a2,b"
    assert len(lines) == 4


def test_hull2d_vertices(write_json):
    result = run("hull2d", "--input", write_json("p.json", EXAMPLE1), "--vertices")
    document = json.loads(result.output)
    assert sorted(document["vertices"]) == [["0", "0"], ["1", "0"]]


def test_split_hull(write_json):
    path = write_json("p.json", EXAMPLE1)
    result = run("split-hull", "--input", path, "--split-a", "1,0", "--split-k", "0")
    assert result.exit_code == EXIT_OK
    hull = parse_poly(json.loads(result.output))
    assert poly.contains_point(hull, (Fraction(1, 2), Fraction(1, 99)))


def test_split_hull_rejects_non_primitive_split(write_json):
    path = write_json("p.json", EXAMPLE1)
    result = run("split-hull", "--input", path, "--split-a", "2,0", "--split-k", "0")
    assert result.exit_code == EXIT_USER_ERROR
    assert error_of(result)["field"] == "split.a"


def test_split_closure_family_and_box_are_exclusive(write_json):
    path = write_json("p.json", EXAMPLE1)
    family = write_json("f.json", {"dim": 2, "splits": [{"a": ["1", "0"], "K": 0}]})
    result = run("split-closure", "--input", path, "--family", family, "--box", "2")
    assert result.exit_code == EXIT_USER_ERROR
    result = run("split-closure", "--input", path, "--family", family)
    assert result.exit_code == EXIT_OK


def test_split_closure_with_box_family_document(write_json):
    path = write_json("p.json", EXAMPLE1)
    family = write_json("f.json", {"box": 2})
    from_document = run("split-closure", "--input", path, "--family", family)
    from_option = run("split-closure", "--input", path, "--box", "2")
    assert from_document.exit_code == EXIT_OK
    assert from_document.output == from_option.output


def test_cg_cut(write_json):
    result = run("cg-cut", "--input", write_json("p.json", EXAMPLE1), "--direction", "0,1")
    assert json.loads(result.output) == {"cut": {"a": ["0", "1"], "b": "1"}}
    result = run("cg-cut", "--input", write_json("p.json", EXAMPLE1), "--direction", "0,-1")
    assert json.loads(result.output) == {"cut": None}


def test_rank_ih(write_json):
    cone = {"apex": ["1/2", "3/2"], "rays": [["-1", "-2"], ["1", "-2"]]}
    result = run("rank-ih", "--input", write_json("c.json", cone))
    document = json.loads(result.output)
    assert document["kind"] == "rank-ih"
    assert document["passed"] is True


def test_classify(write_json):
    triangle = {"dim": 2, "vertices": [["0", "0"], ["2", "0"], ["0", "2"]]}
    result = run("classify", "--input", write_json("t.json", triangle))
    assert json.loads(result.output)["tag"] == "Triangle"


def test_push_out(write_json):
    result = run("push-out", "--input", write_json("q.json", QUADRILATERAL))
    document = json.loads(result.output)
    assert document["outcome"] == "maximal"
    assert [s["label"] for s in document["steps"]] == ["H3", "H2", "H4"]


def test_push_out_unbounded(write_json):
    rows = [((0, -1), "0"), ((-1, -1), "4/9"), ((3, -1), "3/4"), ((0, 1), "3/4")]
    P = {"dim": 2, "halfspaces": [{"a": [str(c) for c in a], "b": b} for a, b in rows]}
    result = run("push-out", "--input", write_json("u.json", P))
    assert result.exit_code == EXIT_OK
    document = json.loads(result.output)
    assert document["outcome"] == "unbounded"
    assert document["steps"][-1]["new_rhs"] is None
    assert document["conclusion_holds"] is True
    assert "quadrilateral" not in document


def test_push_out_hypothesis_error(write_json):
    result = run("push-out", "--input", write_json("p.json", EXAMPLE1))
    assert result.exit_code == EXIT_USER_ERROR
    error = error_of(result)
    assert error["error"] == "HypothesisError"
    assert error["condition"] == "quadrilateral has four irredundant facets"


def test_helly(write_json):
    strip = {
        "dim": 2,
        "halfspaces": [
            {"a": ["0", "1"], "b": "5"},
            {"a": ["1", "0"], "b": "1/3"},
            {"a": ["-1", "0"], "b": "-1/4"},
        ],
    }
    result = run("helly", "--input", write_json("s.json", strip))
    assert json.loads(result.output)["indices"] == [1, 2]


def test_verify_2dih(write_json):
    result = run("verify-2dih", "--input", write_json("p.json", EXAMPLE1))
    assert result.exit_code == EXIT_OK
    assert json.loads(result.output)["passed"] is True


def test_verify_2dih_failure_exit_code(write_json, monkeypatch):
    monkeypatch.setattr(
        latfree, "check_2dih", lambda P: IntegerHullCheck(P, P, HPoly.empty_set(2), False)
    )
    result = run("verify-2dih", "--input", write_json("p.json", EXAMPLE1))
    assert result.exit_code == EXIT_CHECK_FAILED


def test_verify_split_projection(write_json):
    document = {
        "polyhedron": {
            "dim": 3,
            "halfspaces": [
                {"a": ["-2", "1", "0"], "b": "1/2"},
                {"a": ["2", "1", "0"], "b": "5/2"},
                {"a": ["0", "0", "1"], "b": "1"},
                {"a": ["0", "0", "-1"], "b": "0"},
            ],
        },
        "split": {"a": ["1", "0", "0"], "K": 0},
        "cut": {"a": ["0", "1", "0"], "b": "1/2"},
        "subspace": {"basis": [["1", "0", "0"], ["0", "1", "0"]]},
    }
    result = run("verify-split-projection", "--input", write_json("s.json", document))
    assert result.exit_code == EXIT_OK
    del document["subspace"]
    result = run("verify-split-projection", "--input", write_json("s.json", document))
    assert result.exit_code == EXIT_USER_ERROR
    assert error_of(result)["field"] == "subspace"


def test_containment_and_rank(write_json):
    path = write_json("p.json", EXAMPLE1)
    document = json.loads(run("containment", "--input", path, "--box", "2").output)
    assert document["pair_in_split"] is True
    document = json.loads(run("rank", "--input", path, "--round", "pair").output)
    assert document == {
        "kind": "closure-rank",
        "rounds": 1,
        "reached_integer_hull": True,
        "stabilized": False,
        "sizes": [3],
    }


def test_plot_csv(write_json):
    path = write_json("p.json", EXAMPLE1)
    result = run("plot", "--input", path, "--format", "csv", "--viewport", "-2,3,-3,2")
    assert result.exit_code == EXIT_OK
    lines = result.output.splitlines()
    assert lines[0] == "x1,x2,clipped"
    assert "1/2,3/2,false" in lines


def test_plot_svg(write_json, tmpdir):
    output = str(tmpdir.join("p.svg"))
    result = run("plot", "--input", write_json("p.json", EXAMPLE1), "--output", output)
    assert result.exit_code == EXIT_OK
    with open(output) as f:
        assert "<svg" in f.read()


def test_bad_viewport(write_json):
    path = write_json("p.json", EXAMPLE1)
    result = run("plot", "--input", path, "--viewport", "1,0,0,1")
    assert result.exit_code == EXIT_USER_ERROR
    assert error_of(result)["field"] == "viewport"


def test_zero_normal_is_a_user_error(write_json):
    bad = {"dim": 2, "halfspaces": [{"a": ["0", "0"], "b": "1"}]}
    result = run("facet-pair-closure", "--input", write_json("bad.json", bad))
    assert result.exit_code == EXIT_USER_ERROR
    error = error_of(result)
    assert error["error"] == "InputError"
    assert error["field"] == "halfspaces[0].a"


def test_invalid_json_is_a_user_error(tmpdir):
    path = tmpdir.join("bad.json")
    path.write("{")
    result = run("facet-pair-closure", "--input", str(path))
    assert result.exit_code == EXIT_USER_ERROR


def test_output_file(write_json, tmpdir):
    output = str(tmpdir.join("closure.json"))
    result = run("facet-pair-closure", "--input", write_json("p.json", EXAMPLE1), "--output", output)
    assert result.exit_code == EXIT_OK
    assert result.output == ""
    with open(output) as f:
        assert same_poly_document(json.load(f), EXAMPLE1_CLOSURE)


def test_config_file(write_json, tmpdir):
    config = tmpdir.join("config.yml")
    config.write("viewport: [[0, 1], [0, 2]]\n")
    path = write_json("p.json", EXAMPLE1)
    result = run("--config", str(config), "plot", "--input", path, "--format", "csv")
    assert result.exit_code == EXIT_OK
    vertices = [line.split(",")[:2] for line in result.output.splitlines()[1:]]
    assert all(0 <= Fraction(x) <= 1 for x, _ in vertices)


def test_log_file(write_json, tmpdir):
    log_path = str(tmpdir.join("closure.log"))
    path = write_json("p.json", EXAMPLE1)
    result = run("--log-file", log_path, "--log-level", "debug", "split-closure", "--input", path)
    assert result.exit_code == EXIT_OK
    with open(log_path) as f:
        records = f.read()
    assert "DEBUG ipgeom.closure.closures: box family with bound" in records


def test_gen_corpus(tmpdir):
    output = str(tmpdir.join("corpus"))
    result = run("gen-corpus", "--kind", "polygon", "--seed", 3, "--count", 3, "--output", output)
    assert result.exit_code == EXIT_OK
    names = sorted(os.listdir(output))
    assert names == ["polygon-0000.json", "polygon-0001.json", "polygon-0002.json"]
    with open(os.path.join(output, names[0])) as f:
        assert parse_poly(json.load(f)).dim == 2


def test_gen_corpus_is_reproducible(tmpdir):
    first, second = str(tmpdir.join("a")), str(tmpdir.join("b"))
    run("gen-corpus", "--kind", "cone", "--seed", 9, "--count", 2, "--output", first)
    run("gen-corpus", "--kind", "cone", "--seed", 9, "--count", 2, "--output", second)
    for name in os.listdir(first):
        with open(os.path.join(first, name)) as f, open(os.path.join(second, name)) as g:
            assert f.read() == g.read()
