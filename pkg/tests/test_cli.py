import json
import xml.etree.ElementTree as ET

import pytest

from affmv import io
from affmv.cli import parse_element, parse_ops, run
from affmv.errors import ParseError
from affmv.mvpoly import LusztigDatum, MVPolytope, Partition, figure_coords, point_polytope, reconstruct_from_path
from affmv.svg import render_svg

from . import figure

EXAMPLE = "f1^3 f0^3 f1^2 f0^2 f1 f0 @ Lambda=[0,0,3]"
SVG = "{http://www.w3.org/2000/svg}"


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def figure_file(tmp_path):
    p = tmp_path / "figure.json"
    p.write_text(io.dumps(io.polytope_to_json(figure.polytope())))
    return str(p)


def test_parse_ops():
    assert parse_ops("f1^3 e0") == [("f", 1, 3), ("e", 0, 1)]
    for bad in ("f2", "g1", "f1^0", "f1^x"):
        with pytest.raises(ParseError):
            parse_ops(bad)


def test_parse_element():
    p = parse_element(EXAMPLE)
    assert reconstruct_from_path(p).left.partition == Partition((3, 2, 1))
    with pytest.raises(ParseError):
        parse_element("f1 f0")
    with pytest.raises(ParseError):
        parse_element("f1 @ Lambda=[0,0]")


def test_decorate_example(capsys):
    code, out, _ = call(capsys, "decorate", "--element", EXAMPLE)
    assert code == 0
    d = json.loads(out)
    assert d["left"] == [3, 2, 1] and d["right"] == [2, 1]
    assert d["zigzags"]


def test_validate_figure(capsys, figure_file):
    code, out, _ = call(capsys, "polytope", "validate", "--datum", figure_file)
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and rep["removed_part"] == 9


def test_validate_failure_exit(capsys, tmp_path):
    P = figure.polytope()
    bad = MVPolytope(P.left, LusztigDatum(P.right.bottom, Partition((10, 2, 1, 1)), P.right.top))
    f = tmp_path / "bad.json"
    f.write_text(io.dumps(io.polytope_to_json(bad)))
    code, out, _ = call(capsys, "polytope", "validate", "--datum", str(f))
    assert code == 2
    assert json.loads(out)["iv"] is False


def test_enumerate_zero(capsys):
    code, out, _ = call(capsys, "polytope", "enumerate", "--weight", "0")
    assert code == 0
    (d,) = json.loads(out)
    assert io.polytope_from_json(d) == point_polytope()


def test_enumerate_delta(capsys):
    code, out, _ = call(capsys, "polytope", "enumerate", "--weight", "1,1")
    assert code == 0 and len(json.loads(out)) == 2


def test_from_path(capsys):
    code, out, _ = call(capsys, "polytope", "from-path", "--element", EXAMPLE)
    assert code == 0
    P = io.polytope_from_json(json.loads(out))
    assert P.right.partition == Partition((2, 1))


def test_path_apply_and_file_input(capsys, tmp_path):
    code, out, _ = call(capsys, "path", "apply", "--element", "f1 @ Lambda=[0,1,4]", "--op", "f0^2")
    assert code == 0
    f = tmp_path / "p.json"
    f.write_text(out)
    code, out2, _ = call(capsys, "path", "apply", "--path", str(f), "--op", "e0^2")
    assert code == 0
    assert io.path_from_json(json.loads(out2)) == parse_element("f1 @ Lambda=[0,1,4]")


def test_undefined_operator(capsys):
    code, _, err = call(capsys, "path", "apply", "--element", "@ Lambda=[0,1,4]", "--op", "e1")
    assert code == 2 and "undefined" in err


def test_crystal_gen(capsys):
    code, out, _ = call(capsys, "crystal", "gen", "--shape", "0,1,4", "--depth", "2")
    assert code == 0
    d = json.loads(out)
    assert [e["depth"] for e in d["elements"]].count(2) == 4


def test_retract_step(capsys):
    code, out, _ = call(capsys, "retract", "step", "--element", EXAMPLE, "--index", "1", "--seed", "3")
    assert code == 0
    d = json.loads(out)
    assert d["generic"] and d["matches_upsilon"]


def test_retract_degenerate(capsys):
    code, out, _ = call(capsys, "retract", "step", "--element", EXAMPLE, "--index", "1", "--coeffs", "0,0")
    assert code == 0
    assert json.loads(out)["generic"] is False


def test_retract_wrong_count(capsys):
    code, _, _ = call(capsys, "retract", "step", "--element", EXAMPLE, "--index", "1", "--coeffs", "1")
    assert code == 2


def test_parse_errors(capsys):
    assert call(capsys, "decorate", "--element", "f7 @ Lambda=[0,0,3]")[0] == 3
    assert call(capsys, "nonsense")[0] == 3
    assert call(capsys, "retract", "step", "--element", EXAMPLE, "--index", "1", "--coeffs", "0.5,1")[0] == 3
    assert call(capsys, "polytope", "validate", "--datum", "/nonexistent.json")[0] == 3


def test_float_in_file_is_parse_error(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text('{"start": [0, 0, 0], "segments": [{"dir": [0, 1, 4], "dur": 1.0}], "shape": [0, 1, 4]}')
    code, _, err = call(capsys, "path", "apply", "--path", str(f), "--op", "f1")
    assert code == 3 and "float" in err


def test_internal_failure_exit(capsys, monkeypatch):
    from affmv import cli
    from affmv.errors import TheoremViolation

    def boom(*a, **k):
        raise TheoremViolation("forced")

    monkeypatch.setattr(cli, "decorate", boom)
    assert call(capsys, "decorate", "--element", EXAMPLE)[0] == 4


def test_out_flag(capsys, tmp_path, figure_file):
    target = tmp_path / "fig.svg"
    code, out, _ = call(capsys, "render", "svg", "--datum", figure_file, "--out", str(target))
    assert code == 0 and out == ""
    ET.fromstring(target.read_text())


# svg


def polygon_points(text):
    root = ET.fromstring(text)
    poly = root.find(f"{SVG}polygon")
    return root, poly


def test_svg_figure_outline():
    text = render_svg(figure.polytope())
    root, poly = polygon_points(text)
    pts = [tuple(float(c) for c in p.split(",")) for p in poly.get("points").split()]
    xs = [x for x, _ in figure.OUTLINE]
    ys = [y for _, y in figure.OUTLINE]
    # undo the screen transform
    from affmv.svg import MARGIN, UNIT

    back = [(round((x - MARGIN) / UNIT + min(xs)), round(max(ys) - (y - MARGIN) / UNIT)) for x, y in pts]
    assert back == figure.OUTLINE
    labels = {t.get("class"): t.text for t in root.iter(f"{SVG}text") if t.get("class")}
    assert labels["right-partition"] == "(9,2,1^2)·δ"
    assert labels["left-partition"] == "(2,1^2)·δ"


def test_svg_point():
    root, poly = polygon_points(render_svg(point_polytope()))
    assert poly is None
    assert len(root.findall(f"{SVG}circle")) == 1


def test_svg_reconstructed_is_closed():
    P = reconstruct_from_path(parse_element(EXAMPLE))
    root, poly = polygon_points(render_svg(P))
    pts = poly.get("points").split()
    assert len(pts) == len(P.outline()) >= 3
    assert [figure_coords(p) for p in P.outline()][0] == (0, 0)


def test_svg_to_file(tmp_path):
    target = tmp_path / "x.svg"
    text = render_svg(figure.polytope(), str(target))
    assert target.read_text() == text
