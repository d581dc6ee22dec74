import json

from taxiconics.cli import main

FIG10A = {"A": ["2/3", "1/5", "1"], "a": ["9/10", "9/10", "1"], "kappa": "1"}
FIG8 = {"A": ["1/2", "1/5", "1"], "a": ["3/2", "1", "1"], "kappa": "2"}
DEGENERATE = {"A": ["1", "0", "1"], "a": ["-1", "0", "1"], "kappa": "1"}


def write_spec(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_classify_command(tmp_path, capsys):
    spec = write_spec(tmp_path, "fig10a.json", FIG10A)
    assert main(["classify", spec]) == 0
    assert capsys.readouterr().out.strip() == "ellipse"


def test_classify_rejects_degenerate(tmp_path, capsys):
    spec = write_spec(tmp_path, "degenerate.json", DEGENERATE)
    assert main(["classify", spec]) == 1
    assert "error" in capsys.readouterr().err


def test_classify_rejects_bad_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["classify", str(path)]) == 1


def test_section_deterministic(tmp_path):
    spec = write_spec(tmp_path, "fig8.json", FIG8)
    out1, out2 = tmp_path / "s1.json", tmp_path / "s2.json"
    assert main(["section", spec, "-o", str(out1)]) == 0
    assert main(["section", spec, "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    data = json.loads(out1.read_text())
    assert data["class"] == "hyperbola"
    assert len(data["pieces"]) == 7


def test_render_deterministic(tmp_path):
    spec = write_spec(tmp_path, "fig8.json", FIG8)
    section = tmp_path / "section.json"
    assert main(["section", spec, "-o", str(section)]) == 0
    svg1, svg2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["render", str(section), "-o", str(svg1)]) == 0
    assert main(["render", str(section), "-o", str(svg2)]) == 0
    assert svg1.read_bytes() == svg2.read_bytes()
    text = svg1.read_text()
    assert text.startswith("<svg ") and text.count("<path") >= 7


def test_render_unit_circle_diamond(tmp_path):
    spec = write_spec(tmp_path, "circle.json", {"A": ["0", "0", "1"], "a": ["0", "0", "1"], "kappa": "1"})
    section = tmp_path / "section.json"
    main(["section", spec, "-o", str(section)])
    svg = tmp_path / "c.svg"
    assert main(["render", str(section), "-o", str(svg)]) == 0
    body = svg.read_text()
    # 4 section edges + 2 reference lines
    assert body.count("<path") == 6


def test_render_disjoint_viewport_markers_only(tmp_path):
    spec = write_spec(tmp_path, "circle.json", {"A": ["0", "0", "1"], "a": ["0", "0", "1"], "kappa": "1"})
    section = tmp_path / "section.json"
    main(["section", spec, "-o", str(section)])
    svg = tmp_path / "far.svg"
    assert main(["render", str(section), "-o", str(svg), "--viewport", "50,50,60,60"]) == 0
    body = svg.read_text()
    assert "<path" not in body
    assert body.count("<circle") == 4


def test_verify_command(tmp_path, capsys):
    spec = write_spec(tmp_path, "fig8.json", FIG8)
    out = tmp_path / "report.json"
    assert main(["verify", spec, "--grid", "41", "-o", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["passed"] and report["violations"] == []


def test_verify_failure_exit_code(tmp_path, monkeypatch, capsys):
    import taxiconics.cli as cli

    def broken_verify(cone, cfg):
        return {"violations": ["forced"], "passed": False}

    monkeypatch.setattr(cli, "verify_cone", broken_verify)
    spec = write_spec(tmp_path, "fig8.json", FIG8)
    assert main(["verify", spec, "-o", str(tmp_path / "r.json")]) == 2
    assert "FAIL" in capsys.readouterr().err


def test_atlas_values_and_worker_invariance(tmp_path):
    out1, out2 = tmp_path / "a1.json", tmp_path / "a2.json"
    args = ["atlas", "--plane", "2/3,1/5,1", "--kappa", "1", "--grid", "81"]
    assert main(args + ["-o", str(out1)]) == 0
    assert main(args + ["--workers", "2", "-o", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    rows = json.loads(out1.read_text())["rows"]
    # grid step 1/20 on [-2, 2]: a = (9/10, 9/10) sits at column 58, row 58
    assert rows[58][58] == "E"

    out3 = tmp_path / "a3.json"
    assert main(["atlas", "--plane", "2/3,1/5,1", "--kappa", "3/2", "--grid", "81", "-o", str(out3)]) == 0
    rows = json.loads(out3.read_text())["rows"]
    # a = (3/2, 3/4) sits at column 70, row 55
    assert rows[55][70] == "H"


def test_atlas_marks_degenerate_cells(tmp_path):
    out = tmp_path / "deg.json"
    assert main(["atlas", "--plane", "1,0,1", "--kappa", "1", "--grid", "5", "-o", str(out)]) == 0
    rows = json.loads(out.read_text())["rows"]
    # (-1, y, 1) is on the trace of (1, 0, 1): column 1 of bbox [-2, 2] with step 1
    assert all(row[1] == "D" for row in rows)


def test_ukappa_command(tmp_path):
    out = tmp_path / "uk.json"
    svg = tmp_path / "uk.svg"
    assert main(["ukappa", "--kappa", "1", "--grid", "21", "-o", str(out), "--svg", str(svg)]) == 0
    payload = json.loads(out.read_text())
    assert payload["inconsistencies"] == []
    assert len(payload["rows"]) == 21
    assert svg.read_text().startswith("<svg ")


def test_atlas_svg_output(tmp_path):
    svg = tmp_path / "atlas.svg"
    assert main(["atlas", "--plane", "2/3,1/5,1", "--kappa", "1", "--grid", "11",
                 "-o", str(tmp_path / "x.json"), "--svg", str(svg)]) == 0
    assert "<rect" in svg.read_text()
