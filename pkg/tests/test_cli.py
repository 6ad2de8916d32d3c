import io
import json

import pytest

from crushtacean import parse_graph, serialize_graph
from crushtacean.cli import main
from crushtacean.families import gamma_borromean, gamma_pretzel, wheel


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_graph(tmp_path, name, g, rot=None):
    p = tmp_path / name
    p.write_text(serialize_graph(g, rot))
    return str(p)


def test_validate_ok(tmp_path, capsys):
    path = write_graph(tmp_path, "b.json", gamma_borromean())
    code, out, _ = run(capsys, "validate", path)
    assert code == 0
    assert json.loads(out) == {"valid": True, "reasons": []}


def test_validate_invalid_exit_code(tmp_path, capsys):
    from crushtacean import painted_graph

    g = painted_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], [(0, 1)])
    path = write_graph(tmp_path, "bad_matching.json", g)
    code, out, _ = run(capsys, "validate", path)
    assert code == 1
    assert json.loads(out)["reasons"] == ["painted_not_perfect_matching"]


def test_validate_parse_error_exit_code(tmp_path, capsys):
    p = tmp_path / "junk.json"
    p.write_text("{ not json")
    code, out, err = run(capsys, "validate", str(p))
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_missing_file_exit_code(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/nope.json")
    assert code == 2
    assert "error:" in err


def test_aut_reports_group(tmp_path, capsys):
    path = write_graph(tmp_path, "b.json", gamma_borromean())
    code, out, _ = run(capsys, "aut", path, "--painted")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 8
    assert doc["group_id"] == "D4"
    assert doc["painted"] is True
    assert len(doc["generators"]) >= 1


def test_aut_cap_exit_code(tmp_path, capsys):
    path = write_graph(tmp_path, "p3.json", gamma_pretzel(3))
    code, _, err = run(capsys, "aut", path, "--cap", "5")
    assert code == 3
    assert "cap" in err


def test_classify_single_file(tmp_path, capsys):
    path = write_graph(tmp_path, "p5.json", gamma_pretzel(5))
    code, out, _ = run(capsys, "classify", path)
    assert code == 0
    doc = json.loads(out)
    assert doc["group_id"] == "D10"
    assert doc["sym_plus_link"]["order"] == 40


def test_classify_invalid_exits_one(tmp_path, capsys):
    from crushtacean import painted_graph

    g = painted_graph(6, [(i, j + 3) for i in range(3) for j in range(3)],
                      [(0, 3), (1, 4), (2, 5)])
    path = write_graph(tmp_path, "k33.json", g)
    code, out, _ = run(capsys, "classify", path)
    assert code == 1
    assert json.loads(out)["reasons"] == ["nonplanar"]


def test_classify_with_seed(tmp_path, capsys):
    seed_path = write_graph(tmp_path, "w5.json", wheel(5))
    code, out, _ = run(capsys, "expand", seed_path, "-o", str(tmp_path / "ex.json"))
    assert code == 0
    code, out, _ = run(capsys, "classify", str(tmp_path / "ex.json"), "--seed", seed_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["sym_plus_link"] == {
        "status": "exact", "group": "D5", "order": 10, "citation": "Cor 1.2",
    }
    assert "provenance verified" in " ".join(doc["notes"])


def test_classify_directory_deterministic(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    write_graph(corpus, "a_borromean.json", gamma_borromean())
    write_graph(corpus, "b_pretzel3.json", gamma_pretzel(3))
    (corpus / "notes.txt").write_text("ignored")
    code, first, _ = run(capsys, "classify", str(corpus))
    assert code == 0
    code, second, _ = run(capsys, "classify", str(corpus))
    assert first == second
    rows = json.loads(first)
    assert [r["file"] for r in rows] == ["a_borromean.json", "b_pretzel3.json"]
    assert rows[0]["report"]["group_id"] == "D4"


def test_expand_counts(tmp_path, capsys):
    path = write_graph(tmp_path, "w4.json", wheel(4))
    code, out, _ = run(capsys, "expand", path, "-n", "2")
    assert code == 0
    g, rot = parse_graph(out)
    assert g.vertex_count == 2 * (3 * 8)  # W4 has 8 edges; first step has 24
    assert rot is not None


def test_gen_and_parameter_errors(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "ochain", "3")
    assert code == 0
    g, rot = parse_graph(out)
    assert g.vertex_count == 8 and len(g.painted) == 4

    code, _, err = run(capsys, "gen", "pretzel")
    assert code == 2 and "parameter" in err
    code, _, err = run(capsys, "gen", "cube", "4")
    assert code == 2
    code, _, err = run(capsys, "gen", "pretzel", "2")
    assert code == 2


def test_gen_reads_back(capsys):
    for name, param in [("borromean", None), ("wheel", 6), ("dodecahedron", None)]:
        argv = ["gen", name] + ([str(param)] if param else [])
        code, out, _ = run(capsys, *argv)
        assert code == 0
        g, rot = parse_graph(out)
        assert rot is not None


def test_family_writes_members_and_manifest(tmp_path, capsys):
    outdir = tmp_path / "fam"
    code, out, _ = run(capsys, "family", "--group", "D5", "--count", "1",
                       "--out", str(outdir))
    assert code == 0
    manifest = json.loads((outdir / "index.json").read_text())
    assert manifest == json.loads(out)
    assert manifest["seed"] == "wheel5"
    assert manifest["group"] == "D5"
    (row,) = manifest["members"]
    assert row["certified_not_signature"] is True
    g, rot = parse_graph((outdir / row["file"]).read_text())
    assert g.vertex_count == row["vertices"]
    assert rot is not None


def test_family_catalog_miss(tmp_path, capsys):
    code, _, err = run(capsys, "family", "--group", "Z9", "--count", "1",
                       "--out", str(tmp_path / "x"))
    assert code == 2
    assert "no catalog seed" in err


def test_family_from_seed_file(tmp_path, capsys):
    path = write_graph(tmp_path, "prism6.json", gamma_pretzel(6))
    outdir = tmp_path / "fam6"
    code, out, _ = run(capsys, "family", "--seed", path, "--count", "1",
                       "--out", str(outdir))
    assert code == 0
    manifest = json.loads(out)
    assert manifest["group"] == "D6xZ2"
    assert manifest["members"][0]["depth"] == 1


def test_render_svg_and_dot(tmp_path, capsys):
    path = write_graph(tmp_path, "b.json", gamma_borromean())
    svg_path = tmp_path / "b.svg"
    code, _, _ = run(capsys, "render", path, "-o", str(svg_path))
    assert code == 0
    assert svg_path.read_text().startswith("<?xml")
    code, out, _ = run(capsys, "render", path, "--dot")
    assert code == 0
    assert out.startswith("graph crushtacean {")


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(serialize_graph(gamma_borromean())))
    code, out, _ = run(capsys, "validate", "-")
    assert code == 0
    assert json.loads(out)["valid"] is True
