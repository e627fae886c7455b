import json


from geomextract import gen_kbox, gen_octant4, parse_coloring, parse_instance, render_svg
from geomextract.cli import main
from geomextract.docio import instance_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    reports = [json.loads(chunk) for chunk in _report_chunks(out)]
    return code, reports[-1] if reports else None, out


def _report_chunks(out):
    # stdout may hold a document followed by the report; reports start at
    # the last top-level '{' line that parses as a report object
    decoder = json.JSONDecoder()
    chunks = []
    idx = 0
    while idx < len(out):
        brace = out.find("{", idx)
        if brace == -1:
            break
        try:
            obj, end = decoder.raw_decode(out[brace:])
        except json.JSONDecodeError:
            idx = brace + 1
            continue
        if isinstance(obj, dict) and "command" in obj:
            chunks.append(out[brace:brace + end])
        idx = brace + end
    return chunks


def test_gen_color_verify_extract_bounds_pipeline(tmp_path, capsys):
    inst_path = tmp_path / "fan.json"
    col_path = tmp_path / "fan-col.json"

    code, report, _ = run(capsys, "gen", "--kind", "rayfan", "--k", "4",
                          "--out", str(inst_path))
    assert code == 0
    assert report["result"]["m"] == 12
    digest = report["instance_digest"]

    code, report, _ = run(capsys, "color", str(inst_path), "--out", str(col_path))
    assert code == 0
    assert report["instance_digest"] == digest
    assert report["result"]["kappa"] == 3

    coloring = parse_coloring(col_path.read_text())
    assert coloring.kappa == 3

    code, report, _ = run(capsys, "verify", str(inst_path),
                          "--coloring", str(col_path))
    assert code == 0
    assert report["result"]["verdict"] == "proper"

    code, report, _ = run(capsys, "bounds", str(inst_path))
    assert code == 0
    assert report["result"]["min_cover_weight"] == 7
    assert report["result"]["extraction_number"] == "12/5"
    assert report["result"]["chromatic"] == 3

    code, report, _ = run(capsys, "extract", str(inst_path),
                          "--coloring", str(col_path))
    assert code == 0
    assert report["result"]["ratio"] == 3


def test_gen_parse_round_trip_digest(tmp_path, capsys):
    p = tmp_path / "kbox.json"
    code, report, _ = run(capsys, "gen", "--kind", "kbox", "--k", "2",
                          "--out", str(p))
    assert code == 0
    assert report["result"]["m"] == 16
    inst = parse_instance(p.read_text())
    assert instance_to_json(inst) == p.read_text()


def test_gen_random_seed_flag(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "gen", "--kind", "random", "--class", "octants", "--n", "6",
        "--seed", "3", "--out", str(a))
    run(capsys, "gen", "--kind", "random", "--class", "octants", "--n", "6",
        "--seed", "3", "--out", str(b))
    assert a.read_text() == b.read_text()


def test_color_class_mismatch_exit_2(tmp_path, capsys):
    p = tmp_path / "fan.json"
    run(capsys, "gen", "--kind", "rayfan", "--k", "2", "--out", str(p))
    code, _, _ = run(capsys, "color", str(p), "--class", "segments")
    assert code == 2


def test_parse_error_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"class": "intervals", "objects": [], "bogus": 1}')
    code, _, _ = run(capsys, "color", str(p))
    assert code == 2
    code, _, _ = run(capsys, "color", str(tmp_path / "missing.json"))
    assert code == 2


def test_size_cap_exit_3(tmp_path, capsys):
    p = tmp_path / "kbox3.json"
    run(capsys, "gen", "--kind", "kbox", "--k", "3", "--out", str(p))
    code, _, _ = run(capsys, "bounds", str(p), "--size-cap", "10")
    assert code == 3


def test_improper_supplied_coloring_exit_4(tmp_path, capsys):
    inst = tmp_path / "pair.json"
    col = tmp_path / "bad-col.json"
    run(capsys, "gen", "--kind", "interval-pair", "--out", str(inst))
    col.write_text('{"kappa": 2, "colors": [1, 1]}')
    code, _, _ = run(capsys, "extract", str(inst), "--coloring", str(col))
    assert code == 4


def test_depth_precondition_exit_5(tmp_path, capsys):
    p = tmp_path / "shallow.json"
    p.write_text(json.dumps({
        "class": "intervals",
        "objects": [{"a": 0, "b": 2}, {"a": 5, "b": 7}],
        "points": [[1]],
    }))
    code, _, _ = run(capsys, "extract", str(p))
    assert code == 5


def test_verify_cover_subcommand(tmp_path, capsys):
    p = tmp_path / "oct.json"
    run(capsys, "gen", "--kind", "octant4", "--out", str(p))
    code, report, _ = run(capsys, "verify", str(p), "--cover", "0,1,2")
    assert code == 0
    assert report["result"]["verdict"] == "covers"
    code, report, _ = run(capsys, "verify", str(p), "--cover", "0,1")
    assert code == 0
    assert report["result"]["verdict"] == "uncovered"


def test_color_and_extract_octant4(tmp_path, capsys):
    p = tmp_path / "oct.json"
    run(capsys, "gen", "--kind", "octant4", "--out", str(p))
    code, report, _ = run(capsys, "color", str(p))
    assert code == 0
    assert report["result"]["kappa"] == 4
    code, report, _ = run(capsys, "extract", str(p))
    assert code == 0
    assert report["result"]["ratio"] == 4


def test_verify_needs_exactly_one_mode(tmp_path, capsys):
    p = tmp_path / "pair.json"
    run(capsys, "gen", "--kind", "interval-pair", "--out", str(p))
    code, _, _ = run(capsys, "verify", str(p))
    assert code == 2


def test_color_interval_pair_kappa(tmp_path, capsys):
    p = tmp_path / "pair.json"
    run(capsys, "gen", "--kind", "interval-pair", "--out", str(p))
    code, report, _ = run(capsys, "color", str(p), "--class", "intervals")
    assert code == 0
    assert report["result"]["kappa"] == 2


def test_color_single_orientation_rays_notes_no_guarantee(tmp_path, capsys):
    p = tmp_path / "mono.json"
    p.write_text(json.dumps({
        "class": "rays",
        "objects": [
            {"orientation": 1, "apex": [0, 0]},
            {"orientation": 1, "apex": [3, 0]},
        ],
    }))
    code, report, _ = run(capsys, "color", str(p))
    assert code == 0
    assert report["result"]["ray_type"] == 1
    assert report["result"]["kappa"] == 2
    assert "no extraction guarantee" in report["result"]["notes"]


def test_empty_ray_instance_exit_2(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text('{"class": "rays", "objects": []}')
    code, _, _ = run(capsys, "color", str(p))
    assert code == 2


def test_unbounded_extraction_reported(tmp_path, capsys):
    p = tmp_path / "solo.json"
    p.write_text(json.dumps({
        "class": "intervals",
        "objects": [{"a": 0, "b": 2}],
        "points": [[1]],
    }))
    code, report, _ = run(capsys, "bounds", str(p))
    assert code == 0
    assert report["result"]["extraction_number"] == "unbounded"


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def test_render_interval_pair_counts(tmp_path, capsys):
    inst = tmp_path / "pair.json"
    svg_path = tmp_path / "pair.svg"
    run(capsys, "gen", "--kind", "interval-pair", "--out", str(inst))
    code, _, _ = run(capsys, "render", str(inst), "--out", str(svg_path))
    assert code == 0
    svg = svg_path.read_text()
    assert svg.count('class="obj"') == 2
    assert svg.count('class="cross"') == 1


def test_render_kbox3_counts():
    inst = gen_kbox(3)
    svg = render_svg(inst)
    assert svg.count('class="obj"') == 36
    assert svg.count('class="cross"') == len(inst.points)


def test_render_octant4_counts_and_colors():
    inst = gen_octant4()
    from geomextract import color_instance

    svg = render_svg(inst, color_instance(inst))
    assert svg.count("<polygon") == 4
    assert svg.count('class="cross"') == 6


def test_render_rays_have_arrows():
    from geomextract import gen_rayfan

    svg = render_svg(gen_rayfan(2))
    assert svg.count('class="obj"') == 6
    assert svg.count('class="arrow"') == 6


def test_render_byte_identical():
    inst = gen_octant4()
    assert render_svg(inst) == render_svg(inst)
    inst2 = gen_kbox(2)
    assert render_svg(inst2) == render_svg(inst2)


def test_render_rejects_wrong_coloring_length(tmp_path, capsys):
    inst = tmp_path / "pair.json"
    col = tmp_path / "col.json"
    run(capsys, "gen", "--kind", "interval-pair", "--out", str(inst))
    col.write_text('{"kappa": 2, "colors": [1]}')
    code, _, _ = run(capsys, "render", str(inst), "--coloring", str(col))
    assert code == 2
