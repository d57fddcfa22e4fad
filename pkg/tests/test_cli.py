import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from chebyplanes import CanonicalClass, Point, Polyline, Sector, is_geodesic_polyline
from chebyplanes.cli import main
from chebyplanes.planes import SectionPolygon
from chebyplanes.schemas import PAYLOADS, RESULT


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    doc = json.loads(out)
    jsonschema.validate(doc, RESULT)
    if code == 0:
        jsonschema.validate(doc["payload"], PAYLOADS[doc["command"]])
    return code, doc, err


def test_classify_hexagonal(capsys):
    code, doc, _ = run(capsys, "classify", 1, 1, 1, 0)
    assert code == 0
    assert doc["payload"] == {
        "plane": [1, 1, 1, 0],
        "triangle_test": True,
        "canonical_class": {"kind": "triangle", "sides": ["1", "1", "1"]},
        "nu": 6,
        "shape": "hexagon",
    }


def test_classify_flat(capsys):
    _, doc, _ = run(capsys, "classify", 1, 2, 3, 0)
    p = doc["payload"]
    assert (p["triangle_test"], p["canonical_class"], p["nu"], p["shape"]) == (
        False,
        {"kind": "flat"},
        4,
        "tetragon",
    )


def test_classify_zero_normal_is_input_error(capsys):
    code, doc, err = run(capsys, "classify", 0, 0, 0, 1)
    assert code == 2 and doc["status"] == "error" and err


def test_bad_rational_is_input_error(capsys):
    code, doc, _ = run(capsys, "classify", 1, "0.5", 1, 0)
    assert code == 2 and doc["status"] == "error"


@pytest.mark.parametrize(
    "abc, n",
    [((1, 1, 1), 6), ((2, 2, 3), 6), ((1, 1, 2), 4)],
)
def test_section_vertex_counts(capsys, abc, n):
    _, doc, _ = run(capsys, "section", *abc, "--radius", 1)
    assert len(doc["payload"]["vertices"]) == n


def test_section_payload_roundtrip(capsys):
    _, doc, _ = run(capsys, "section", 2, 2, 3, "--radius", "3/2")
    poly = SectionPolygon.from_json(doc["payload"])
    assert SectionPolygon.from_json(poly.to_json()) == poly
    assert poly.vertices[0] == Point(["3/2", "3/4", "-3/2"])


def test_negative_rationals_parse(capsys):
    _, doc, _ = run(capsys, "section", "-1/2", "-1/2", "-3/4")
    assert doc["payload"]["plane"] == [2, 2, 3, 0]


def test_section_svg_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    run(capsys, "section", 2, 2, 3, "--svg", a)
    run(capsys, "section", 2, 2, 3, "--svg", b)
    text = a.read_text()
    assert text == b.read_text()
    assert text.startswith("<svg") and "(1, 1/2, -1)" in text and ">3/2</text>" in text


def test_section_unwritable_svg_is_io_error(capsys, tmp_path):
    code, doc, _ = run(capsys, "section", 1, 1, 1, "--svg", tmp_path / "missing" / "x.svg")
    assert code == 3 and doc["status"] == "error"


@pytest.mark.parametrize("abc, size", [((2, 3, 4), 24), ((2, 2, 3), 12), ((1, 1, 1), 4)])
def test_orbit(capsys, abc, size):
    _, doc, _ = run(capsys, "orbit", *abc)
    assert doc["payload"]["size"] == size == len(doc["payload"]["members"])
    assert size * len(doc["payload"]["stabilizer"]) == 48


@pytest.mark.parametrize(
    "planes, expected",
    [
        ((1, 1, 1, 0, 2, 2, 2, 9), True),
        ((1, 1, 1, 0, 2, 2, 3, 0), False),
        ((1, 2, 3, 0, 5, 0, 0, 1), True),
    ],
)
def test_isometric(capsys, planes, expected):
    _, doc, _ = run(capsys, "isometric", *planes)
    assert doc["payload"]["isometric"] is expected
    for key in ("class1", "class2"):
        CanonicalClass.from_json(doc["payload"][key])


def test_tau(capsys):
    _, doc, _ = run(capsys, "tau", 0, 0, 0, "--", 2, 2, -2)
    assert doc["payload"]["tau"] == "one"
    assert "notes" not in doc
    _, doc, _ = run(capsys, "tau", 0, 0, 0, 0, "--", 1, 1, 1, 1)
    assert doc["payload"]["tau"] == "one" and doc["notes"]


def test_tau_with_probe_and_seed(capsys):
    _, doc, _ = run(capsys, "tau", 0, 0, "--", 2, 1, "--probe", "--seed", 5)
    assert doc["payload"]["tau"] == "infinite"
    assert doc["payload"]["probe_unique"] is False


def test_tau_in_plane(capsys):
    _, doc, _ = run(capsys, "tau", "--plane", 1, 1, 1, 0, 0, 0, 0, "--", 1, 1, -2)
    assert doc["payload"]["tau"] == "infinite"
    code, doc, _ = run(capsys, "tau", "--plane", 1, 1, 1, 0, 0, 0, 0, "--", 1, 1, 1)
    assert code == 2


def test_nu(capsys):
    assert run(capsys, "nu", "--ambient", 3)[1]["payload"]["nu"] == 8
    assert run(capsys, "nu", "--ambient", 2)[1]["payload"]["nu"] == 4
    assert run(capsys, "nu", "--plane", 1, 1, 1, 0)[1]["payload"]["nu"] == 6
    assert run(capsys, "nu", "--plane", 1, 1, 2, 4)[1]["payload"]["nu"] == 4
    assert run(capsys, "nu", "--ambient", 1)[0] == 2


def test_witness_output_passes_geodesic_check(capsys, tmp_path):
    _, doc, _ = run(capsys, "witness", 0, 0, "--", 2, 1)
    paths = [Polyline.from_json(g) for g in doc["payload"]["geodesics"]]
    assert paths[1] == Polyline([(0, 0), (1, 1), (2, 1)])
    for k, path in enumerate(paths):
        f = tmp_path / f"w{k}.json"
        f.write_text(json.dumps(path.to_json()))
        _, check, _ = run(capsys, "geodesic-check", f)
        assert check["payload"]["is_geodesic"] is True
        assert is_geodesic_polyline(path)


def test_witness_unique_pair_is_error(capsys):
    code, doc, _ = run(capsys, "witness", 0, 0, 0, "--", 1, 1, -1)
    assert code == 2 and doc["status"] == "error"


def test_geodesic_check(capsys, tmp_path):
    left = tmp_path / "left.json"
    left.write_text(json.dumps({"vertices": [[0, 0], [1, 1], [2, 0]]}))
    _, doc, _ = run(capsys, "geodesic-check", left)
    assert doc["payload"]["is_geodesic"] is True
    assert Sector.from_json(doc["payload"]["sector"]) == Sector(1, 1)

    right = tmp_path / "right.json"
    right.write_text(json.dumps({"vertices": [[0, 0], [1, 2], [2, 0]]}))
    _, doc, _ = run(capsys, "geodesic-check", right)
    assert doc["payload"]["is_geodesic"] is False
    assert doc["payload"]["violation"] == [[0, 0], [1, 2]]
    assert (doc["payload"]["length"], doc["payload"]["endpoint_distance"]) == (4, 2)

    seg = tmp_path / "seg.json"
    seg.write_text(json.dumps({"vertices": [["1/2", 3], [-2, "7/3"]]}))
    assert run(capsys, "geodesic-check", seg)[1]["payload"]["is_geodesic"] is True


def test_geodesic_check_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "geodesic-check", bad)[0] == 2
    assert run(capsys, "geodesic-check", tmp_path / "nope.json")[0] == 3


def test_json_indent(capsys):
    main(["nu", "--ambient", "3", "--json-indent", "2"])
    out = capsys.readouterr().out
    assert out.startswith("{\n  ")


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chebyplanes.cli", "classify", "2", "2", "3", "0"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["payload"]["canonical_class"]["sides"] == ["2/3", "2/3", "1"]
    assert proc.stderr == ""


def test_published_schemas_match_module():
    published = json.loads((Path(__file__).parent.parent / "docs" / "schemas.json").read_text())
    assert published == {"result": RESULT, "payloads": PAYLOADS}
