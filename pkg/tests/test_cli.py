import json

import pytest

from equiprojective.cli import main


@pytest.fixture
def prism_off(tmp_path):
    path = tmp_path / "p.off"
    assert main(["gen", "prism", "--param", "k=3", "-o", str(path)]) == 0
    return path


def test_gen_reports_counts(tmp_path, capsys):
    path = tmp_path / "p.off"
    assert main(["gen", "prism", "--param", "k=3", "-o", str(path)]) == 0
    assert "V=6 E=9 F=5" in capsys.readouterr().out
    assert path.read_text().startswith("OFF")


@pytest.mark.parametrize("suffix,marker", [(".obj", "\nv "), (".wrl", "#VRML")])
def test_gen_infers_format(tmp_path, suffix, marker):
    path = tmp_path / f"cube{suffix}"
    assert main(["gen", "cube", "-o", str(path)]) == 0
    assert marker in path.read_text()


def test_verify_file_passes(prism_off, capsys):
    assert main(["verify", str(prism_off)]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_json(prism_off, capsys):
    capsys.readouterr()
    assert main(["verify", str(prism_off), "--json", "--samples", "200"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["pass"] and out["shadow"]["k"] == 5 and "certificate" in out


def test_verify_generated_negative(capsys):
    assert main(["verify", "--gen", "tetrahedron", "--json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["expected_k"] == "not-equiprojective" and "refutation" in out
    assert len(out["shadow"]["witness"]) == 2


def test_verify_generated_catalog_entry(capsys):
    assert main(["verify", "--gen", "equitruncated_triangular_cupola", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["name"] == "equitruncated_triangular_cupola" and out["expected_k"] == 11


def test_shadow_count(capsys):
    assert main(["shadow", "--gen", "cube", "--dir", "1,1,1"]) == 0
    assert capsys.readouterr().out.strip() == "6"


def test_shadow_degenerate(capsys):
    assert main(["shadow", "--gen", "cube", "--dir", "0,0,1"]) == 4
    assert "4 face(s)" in capsys.readouterr().out


def test_shadow_bad_vector():
    assert main(["shadow", "--gen", "cube", "--dir", "1,2"]) == 2


def test_certify(capsys):
    assert main(["certify", "--gen", "cube"]) == 0
    assert "12 compensating pairs" in capsys.readouterr().out
    assert main(["certify", "--gen", "square_pyramid", "--json"]) == 1
    assert "refutation" in json.loads(capsys.readouterr().out)


def test_catalog_json(capsys):
    assert main(["catalog", "--json"]) == 0
    rows = {r["name"]: r for r in json.loads(capsys.readouterr().out)}
    assert rows["cube"]["expected_k"] == 6
    assert rows["pentagonal_rotunda"]["expected_k"] == "not-equiprojective"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--gen", "nosuch"],
        ["verify", "--gen", "prism", "--param", "k=2"],
        ["verify", "--gen", "prism", "--param", "k"],
        ["verify"],
        ["verify", "--gen", "cube", "--samples", "0"],
    ],
)
def test_usage_errors(argv):
    assert main(argv) == 2


def test_missing_file(tmp_path):
    assert main(["verify", str(tmp_path / "nope.off")]) == 3


def test_bad_mesh(tmp_path, capsys):
    path = tmp_path / "bad.off"
    path.write_text("OFF\n3 1 0\n0 0 0\n1 0 0\n")
    assert main(["verify", str(path)]) == 3
    assert "line 4" in capsys.readouterr().err


def test_unparseable_command():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
