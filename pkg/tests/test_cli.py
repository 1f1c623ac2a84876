import json
import re

import pytest

from star_torus.cli import main
from star_torus.formats import load_coloring, parse_dimacs_col, write_dimacs_col
from star_torus.errors import ParseError
from star_torus.graph import make_cycle, write_dimacs
from star_torus.tiles import get_tile
from star_torus.verify import ColoringDocument


def svg_fills(path):
    text = path.read_text()
    cells = re.findall(r'<g id="cell-\d+-\d+">.*?fill: (#[0-9a-f]{6})', text, re.S)
    return cells


@pytest.fixture
def c4_files(tmp_path):
    graph = tmp_path / "c4.col"
    graph.write_text(write_dimacs(make_cycle(4)))
    coloring = tmp_path / "c4.json"
    coloring.write_text(ColoringDocument(2, [1, 2, 1, 2]).to_json())
    return graph, coloring


class TestConstruct:
    def test_exceptional(self, tmp_path, capsys):
        out = tmp_path / "c.json"
        assert main(["construct", "3", "5", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["k"] == 6 and doc["m"] == 3 and doc["n"] == 5
        assert capsys.readouterr().out.strip() == "3 5 6 verified plan=Fig1"

    def test_six_by_six(self, tmp_path, capsys):
        out = tmp_path / "c.json"
        assert main(["construct", "6", "6", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["k"] == 5
        m, n, k, status, plan = capsys.readouterr().out.split()
        assert (m, n, k, status) == ("6", "6", "5", "verified") and plan.startswith("plan=stack(")

    def test_bad_args(self, capsys):
        assert main(["construct", "2", "9"]) == 2

    def test_stdout_and_dimacs_col(self, capsys):
        assert main(["construct", "4", "9", "--format", "dimacs-col"]) == 0
        captured = capsys.readouterr()
        doc = parse_dimacs_col(captured.out)
        assert doc.k == 5 and len(doc.colors) == 36
        assert captured.err.startswith("4 9 5 verified")

    def test_deterministic_bytes(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        main(["construct", "13", "17", "--out", str(a), "--render", str(tmp_path / "a.svg")])
        main(["construct", "13", "17", "--out", str(b), "--render", str(tmp_path / "b.svg")])
        assert a.read_bytes() == b.read_bytes()
        assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()


class TestVerify:
    def test_figure_two(self, tmp_path):
        f = tmp_path / "t.json"
        f.write_text(get_tile("Fig2(i)").to_document().to_json())
        assert main(["verify", "--torus", "3", "4", "--coloring", str(f)]) == 0

    def test_square_witness(self, c4_files, capsys):
        graph, coloring = c4_files
        assert main(["verify", "--graph", str(graph), "--coloring", str(coloring)]) == 1
        out = capsys.readouterr().out
        assert "verdict bicolored_p4" in out and "witness path 3 0 1 2" in out

    def test_truncated_json(self, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text('{"m": 3, "n": 4, "k": 5, "colors": [1, 3')
        assert main(["verify", "--torus", "3", "4", "--coloring", str(f)]) == 2

    def test_shape_mismatch(self, tmp_path):
        f = tmp_path / "t.json"
        f.write_text(get_tile("Fig2(i)").to_document().to_json())
        assert main(["verify", "--torus", "3", "5", "--coloring", str(f)]) == 2

    def test_missing_file(self, tmp_path):
        assert main(["verify", "--torus", "3", "4", "--coloring", str(tmp_path / "nope")]) == 2

    def test_dimacs_col_input(self, tmp_path):
        doc = get_tile("Fig3(i)").to_document()
        f = tmp_path / "t.sol"
        f.write_text(write_dimacs_col(doc))
        assert main(["verify", "--torus", "4", "4", "--coloring", str(f)]) == 0

    def test_improper_exit_one(self, tmp_path, capsys):
        f = tmp_path / "t.json"
        f.write_text(ColoringDocument(5, [1] * 9, 3, 3).to_json())
        assert main(["verify", "--coloring", str(f)]) == 1
        assert "witness edge 0 1" in capsys.readouterr().out


class TestChi:
    def test_c3c5(self, capsys):
        assert main(["chi", "--torus", "3", "5", "--kmax", "6"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "6"

    def test_c3c3_unsat(self, capsys):
        assert main(["chi", "--torus", "3", "3", "--kmax", "5"]) == 1
        assert "UNSAT up to kmax=5" in capsys.readouterr().out

    def test_pentagon_file(self, tmp_path, capsys):
        g = tmp_path / "c5.col"
        g.write_text(write_dimacs(make_cycle(5)))
        w = tmp_path / "w.json"
        assert main(["chi", "--graph", str(g), "--kmax", "4", "--witness", str(w)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "4" and out[1] == f"witness {w}"
        assert json.loads(w.read_text())["k"] == 4

    def test_budget_exhausted(self, capsys):
        assert main(["chi", "--torus", "10", "10", "--kmax", "5", "--budget", "20"]) == 3
        assert "budget exhausted" in capsys.readouterr().out

    def test_threads(self, capsys):
        assert main(["chi", "--torus", "3", "4", "--kmax", "6", "--threads", "2"]) == 0
        assert capsys.readouterr().out.splitlines()[0] == "5"

    def test_needs_graph(self):
        assert main(["chi", "--kmax", "3"]) == 2


class TestRender:
    def test_figure_one_six_fills(self, tmp_path):
        src = tmp_path / "f1.json"
        src.write_text(get_tile("Fig1").to_document().to_json())
        svg = tmp_path / "f1.svg"
        assert main(["render", "--coloring", str(src), "--out", str(svg)]) == 0
        fills = svg_fills(svg)
        assert len(fills) == 15 and len(set(fills)) == 6

    def test_five_coloring_fills(self, tmp_path):
        src = tmp_path / "c.json"
        main(["construct", "7", "9", "--out", str(src)])
        svg = tmp_path / "c.svg"
        assert main(["render", "--coloring", str(src), "--out", str(svg)]) == 0
        fills = svg_fills(svg)
        assert len(fills) == 63 and len(set(fills)) <= 5

    def test_non_torus(self, c4_files, tmp_path):
        _, coloring = c4_files
        assert main(["render", "--coloring", str(coloring), "--out", str(tmp_path / "x.svg")]) == 2

    def test_byte_stable(self, tmp_path):
        src = tmp_path / "f.json"
        src.write_text(get_tile("Fig4(v)").to_document().to_json())
        main(["render", "--coloring", str(src), "--out", str(tmp_path / "a.svg")])
        main(["render", "--coloring", str(src), "--out", str(tmp_path / "b.svg")])
        assert (tmp_path / "a.svg").read_bytes() == (tmp_path / "b.svg").read_bytes()


class TestTiles:
    def test_list(self, capsys):
        assert main(["tiles", "list"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) >= 18
        assert "Fig2(i) 3 4 5" in lines

    def test_dump(self, tmp_path):
        out = tmp_path / "t.json"
        assert main(["tiles", "dump", "Fig2(i)", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert (doc["m"], doc["n"], doc["source"]) == (3, 4, "Fig2(i)")

    def test_dump_unknown(self):
        assert main(["tiles", "dump", "Fig9"]) == 2


class TestFormats:
    def test_dimacs_col_round_trip(self):
        doc = ColoringDocument(3, [1, 2, 3, 1])
        back = parse_dimacs_col(write_dimacs_col(doc, comment="x"))
        assert back.colors == [1, 2, 3, 1] and back.k == 3

    @pytest.mark.parametrize("text", ["v 1 2\n", "s 3\nv 1 1\nv 3 1\n", "s 3\nv 1 x\n", "s 3\nq\n", "s 3\nv 1 1\nv 1 2\n"])
    def test_dimacs_col_errors(self, text):
        with pytest.raises(ParseError):
            parse_dimacs_col(text)

    def test_autodetect(self):
        assert load_coloring('{"k": 2, "colors": [1, 2]}').colors == [1, 2]
        assert load_coloring("s 2\nv 1 2\nv 2 1\n").colors == [2, 1]
