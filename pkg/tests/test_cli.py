"""CLI behavior: outputs, exit codes, determinism."""

import json

import pytest

from colorcode import anyon_tables
from colorcode.cli import main
from colorcode.lattice import build_torus
from colorcode.stabilizer import face_stabilizers


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gsd_line(capsys):
    code, out, _ = run(capsys, "gsd", "--torus", "6x6")
    assert code == 0
    assert out.strip() == "n=72 rank=68 gsd=16"


def test_gsd_json(capsys):
    code, out, _ = run(capsys, "gsd", "--micro", "--json")
    assert code == 0
    assert json.loads(out) == {"n": 12, "rank": 8, "gsd": 16}


def test_gsd_from_lattice_file(tmp_path, capsys):
    from colorcode.lattice import micro_torus
    path = tmp_path / "micro.json"
    path.write_text(json.dumps(micro_torus().to_json()))
    code, out, _ = run(capsys, "gsd", "--lattice", str(path))
    assert code == 0 and out.strip() == "n=12 rank=8 gsd=16"


def test_gsd_bad_size_exits_2(capsys):
    code, _, err = run(capsys, "gsd", "--torus", "5x6")
    assert code == 2
    assert "multiples of 6" in err


def test_omega_on_generator(tmp_path, capsys):
    lat = build_torus(6, 6)
    group = face_stabilizers(lat)
    op_file = tmp_path / "k0.json"
    op_file.write_text(json.dumps(group.generators[0].to_json()))
    code, out, _ = run(capsys, "omega", "--torus", "6x6", "--op", str(op_file))
    assert code == 0 and out.strip() == "omega0 = 1"


def test_omega_requires_operator(capsys):
    code, _, err = run(capsys, "omega", "--torus", "6x6")
    assert code == 2 and "no operator" in err


def test_syndrome_output(tmp_path, capsys):
    lat = build_torus(6, 6)
    n = lat.n_qubits
    text = "+ " + "X" + "I" * (n - 1)
    code, out, _ = run(capsys, "syndrome", "--torus", "6x6", "--op-text", text, "--json")
    assert code == 0
    entries = json.loads(out)["syndrome"]
    # a vertex borders one face of each color, so a single X violates three Js
    assert len(entries) == 3
    assert all(e["violates_J"] and not e["violates_K"] for e in entries)


def test_fuse_lattice_and_category(capsys):
    code, out, _ = run(capsys, "fuse", "--a", "rx", "--b", "ry")
    assert code == 0 and out.strip() == "rz"
    code, out, _ = run(capsys, "fuse", "--a", "f1", "--b", "f2", "--side", "category")
    assert code == 0 and out.strip() == "gy"


def test_fuse_unknown_label(capsys):
    code, _, err = run(capsys, "fuse", "--a", "qq", "--b", "rx")
    assert code == 2 and "unknown sector label" in err


def test_braid_output(capsys):
    code, out, _ = run(capsys, "braid", "--a", "rx", "--b", "bz",
                       "--orientation", "left")
    assert code == 0 and out.strip() == "-1"
    code, out, _ = run(capsys, "braid", "--a", "rx", "--b", "rz",
                       "--orientation", "right", "--json")
    assert code == 0 and json.loads(out) == {"braiding": 1}


def test_tables_category_fusion_csv(capsys):
    code, out, _ = run(capsys, "tables", "--which", "fusion", "--side", "category")
    assert code == 0
    rows = out.strip().split("\n")
    assert len(rows) == 16
    cells = rows[1].split(",")
    assert cells[0] == "rx" and cells[1] == "1"


def test_tables_monodromy_lattice_matches_published(capsys):
    code, out, _ = run(capsys, "tables", "--which", "monodromy", "--side", "lattice",
                       "--torus", "12x12")
    assert code == 0
    rows = [line.split(",") for line in out.strip().split("\n")]
    for r, row_label in enumerate(anyon_tables.LABEL_ORDER):
        for c, col_label in enumerate(anyon_tables.LABEL_ORDER):
            assert int(rows[r][c]) == anyon_tables.MONODROMY[(row_label, col_label)]


def test_tables_smatrix(capsys):
    code, out, _ = run(capsys, "tables", "--which", "smatrix", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["rows"]) == 16
    assert set(v for row in data["rows"] for v in row) == {"1/4", "-1/4"}


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--criteria", "1,10")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("PASS  1")
    assert lines[1].startswith("PASS 10")
    assert lines[-1] == "2/2 criteria passed"


def test_verify_oracle(capsys):
    code, out, _ = run(capsys, "verify", "--oracle")
    assert code == 0
    assert "dense-oracle agreement" in out


def test_render_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.svg"
    out2 = tmp_path / "b.svg"
    assert main(["render", "--torus", "6x6", "--out", str(out1)]) == 0
    assert main(["render", "--torus", "6x6", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_render_face_count(capsys):
    code, out, _ = run(capsys, "render", "--torus", "6x6")
    assert code == 0
    polygons = [line for line in out.split("\n") if line.startswith("<polygon")]
    assert len(polygons) == 36
    assert out.startswith("<?xml")
    assert "</svg>" in out


def test_render_string_overlay(capsys):
    code, out, _ = run(capsys, "render", "--torus", "6x6", "--string", "r:0:8")
    assert code == 0
    lines = [line for line in out.split("\n") if line.startswith("<line")]
    assert len(lines) == 1  # adjacent faces: one support edge


def test_validate_command(capsys):
    code, out, _ = run(capsys, "validate", "--torus", "6x6")
    assert code == 0 and out.strip() == "ok"


def test_config_file_controls_geometry(tmp_path, capsys):
    cfg = tmp_path / "geometry.toml"
    cfg.write_text("[braiding]\ntruncation = 3\n\n[detector]\nradius = 1\nseparation = 1\n")
    code, out, _ = run(capsys, "braid", "--a", "rx", "--b", "bz",
                       "--orientation", "left", "--config", str(cfg))
    assert code == 0 and out.strip() == "-1"
    code, out, _ = run(capsys, "fuse", "--a", "rx", "--b", "ry",
                       "--config", str(cfg))
    assert code == 0 and out.strip() == "rz"


def test_thread_cap_does_not_change_output(capsys, monkeypatch):
    code, seq, _ = run(capsys, "tables", "--which", "monodromy", "--side",
                       "lattice", "--torus", "12x12")
    assert code == 0
    monkeypatch.setenv("COLORCODE_THREADS", "4")
    code, par, _ = run(capsys, "tables", "--which", "monodromy", "--side",
                       "lattice", "--torus", "12x12")
    assert code == 0 and par == seq


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "omega", "--torus", "6x6", "--op", "/nonexistent.json")
    assert code == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["tables"])  # missing required --which
    assert exc.value.code == 2
