import json

import pytest

from orthopart import cli
from orthopart.engine import NoGoodCutFound, partition
from orthopart.guards import patrols_for
from orthopart.io import (
    IoError,
    PolygonFormatError,
    ValidationError,
    emit_result,
    parse_polygon,
    pieces_from_json,
    polygon_text,
    replay_cuts,
    result_dict,
    to_json,
)
from orthopart.polygen import fourteen_gon, gallery_52, rectangle, u_shape


def test_parse_unit_square():
    P = parse_polygon("4\n0 0\n1 0\n1 1\n0 1\n")
    assert P.n == 4 and P.area() == 1


def test_parse_crlf_and_comments():
    text = "# a square\r\n4\r\n0 0\r\n1 0 # corner\r\n1 1\r\n\r\n0 1\r\n"
    assert parse_polygon(text) == parse_polygon("4\n0 0\n1 0\n1 1\n0 1\n")


def test_parse_odd_count():
    with pytest.raises(ValidationError):
        parse_polygon("3\n0 0\n1 0\n1 1\n")


def test_parse_bad_line():
    with pytest.raises(PolygonFormatError) as ei:
        parse_polygon("4\n0 0\n1 x\n1 1\n0 1\n")
    assert ei.value.lineno == 3
    assert str(ei.value).endswith("(line 3)")


def test_parse_count_mismatch_and_geometry():
    with pytest.raises(PolygonFormatError):
        parse_polygon("6\n0 0\n1 0\n1 1\n0 1\n")
    with pytest.raises(ValidationError):
        parse_polygon("4\n0 0\n2 1\n2 2\n0 2\n")


def test_round_trip():
    P = gallery_52()
    assert parse_polygon(polygon_text(P)) == P


def test_rectangle_json():
    P = rectangle()
    d = json.loads(to_json(result_dict(P, partition(P))))
    assert (d["count"], d["bound"], d["cuts_applied"]) == (1, 1, [])
    assert len(d["pieces"]) == 1


def test_replay_reproduces_pieces():
    P = gallery_52()
    r = partition(P)
    d = json.loads(to_json(result_dict(P, r)))
    assert sorted(replay_cuts(P, d["cuts_applied"]), key=str) == sorted(r.pieces, key=str)
    assert pieces_from_json(json.dumps(d)) == r.pieces


def test_fourteen_gon_svg():
    P = fourteen_gon()
    r = partition(P)
    svg = emit_result(P, r, patrols_for(r.pieces))["svg"]
    assert svg.count("<polyline") == 1
    assert ">1</text>" in svg and ">2</text>" not in svg


def test_emit_unwritable(tmp_path):
    P = rectangle()
    with pytest.raises(IoError):
        emit_result(P, partition(P), json_path=str(tmp_path / "missing" / "out.json"))


def test_json_stable():
    P = gallery_52()
    r = partition(P)
    a = emit_result(P, r, patrols_for(r.pieces))["json"]
    b = emit_result(P, partition(P), patrols_for(partition(P).pieces))["json"]
    assert a == b


# --- command line ------------------------------------------------------------------


def _write(tmp_path, P, name="p.txt"):
    path = tmp_path / name
    path.write_text(polygon_text(P))
    return str(path)


def test_cli_partition(tmp_path, capsys):
    src = _write(tmp_path, fourteen_gon())
    out = tmp_path / "r.json"
    assert cli.main(["partition", src, "--json", str(out), "--svg", str(tmp_path / "r.svg"), "--trace"]) == 0
    cap = capsys.readouterr()
    assert "pieces = 2" in cap.out
    assert "via L-cut" in cap.err
    assert json.loads(out.read_text())["count"] == 2
    assert (tmp_path / "r.svg").read_text().startswith("<svg")


def test_cli_guards(tmp_path, capsys):
    src = _write(tmp_path, u_shape())
    assert cli.main(["guards", src]) == 0
    assert "patrol" in capsys.readouterr().out


def test_cli_verify(tmp_path, capsys):
    P = gallery_52()
    src = _write(tmp_path, P)
    pieces = tmp_path / "pieces.json"
    pieces.write_text(to_json(result_dict(P, partition(P))))
    assert cli.main(["verify", src, "--pieces", str(pieces)]) == 0
    pieces.write_text(json.dumps({"pieces": [[[0, 0], [1, 0], [1, 1], [0, 1]]]}))
    assert cli.main(["verify", src, "--pieces", str(pieces)]) == 2
    assert "witness" in capsys.readouterr().out


def test_cli_generate(tmp_path):
    out = tmp_path / "g.txt"
    assert cli.main(["generate", "--n", "20", "--seed", "4", "-o", str(out)]) == 0
    assert parse_polygon(out.read_text()).n == 20
    assert cli.main(["generate", "--n", "7"]) == 2


def test_cli_lemma6(capsys):
    assert cli.main(["lemma6-table", "--max-n", "100", "--show", "2"]) == 0
    assert "unsound: 0" in capsys.readouterr().out


def test_cli_invalid_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("4\n0 0\n1 0\n1 1\n")
    assert cli.main(["partition", str(bad)]) == 2
    assert "line" in capsys.readouterr().err
    assert cli.main(["partition", str(tmp_path / "nope.txt")]) == 2


def test_cli_theorem_violation(tmp_path, capsys, monkeypatch):
    def broken(P, trace=None):
        raise NoGoodCutFound(P, ["case1"])

    monkeypatch.setattr(cli, "partition", broken)
    assert cli.main(["partition", _write(tmp_path, fourteen_gon())]) == 3
    err = capsys.readouterr().err
    path = err.strip().rsplit(" ", 1)[-1]
    assert open(path).read().startswith("14\n")
