from __future__ import annotations

import io as _stdio
import json
from pathlib import Path

import pytest

from tensorgraphs import io
from tensorgraphs.automorphisms import aut_group
from tensorgraphs.boundary import boundary, cone
from tensorgraphs.cli import main, to_dot
from tensorgraphs.enumeration import EnumerationRequest, enumerate_graphs
from tensorgraphs.fixtures import FIXTURES, dipole, k33, necklace, quartic
from tensorgraphs.graphs import DisconnectedGraph, OpenFeynmanGraph, canonical_form
from tensorgraphs.invariants import degree_report
from tensorgraphs.pi1 import GroupPresentation, abelianization
from tensorgraphs.realization import realize
from tensorgraphs.surgery import separatrix
from tensorgraphs.wti import y_expansion
from tensorgraphs.graphs import InteractionModel


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", _stdio.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# documents ---------------------------------------------------------------------


def test_dipole_document():
    g = io.loads('{"colors":3,"white":1,"perms":{"1":[0],"2":[0],"3":[0]}}')
    assert g == dipole(3)
    assert io.dumps(g) == '{"colors":3,"format_version":1,"perms":{"1":[0],"2":[0],"3":[0]},"white":1}\n'


def test_wrong_length_names_color():
    with pytest.raises(io.GraphFormatError, match="color 2"):
        io.loads('{"colors":3,"white":2,"perms":{"1":[0,1],"2":[0],"3":[1,0]}}')


def test_not_a_permutation():
    with pytest.raises(io.GraphFormatError, match="color 3 not a permutation"):
        io.loads('{"colors":3,"white":2,"perms":{"1":[0,1],"2":[1,0],"3":[1,1]}}')


def test_syntax_error_position():
    with pytest.raises(io.GraphFormatError, match=r"line 2, column \d+"):
        io.loads('{"colors":3,\n "white" 1}')


def test_prop0_injective():
    with pytest.raises(io.GraphFormatError, match="prop0"):
        io.loads('{"colors":3,"white":2,"perms":{"1":[0,1],"2":[0,1],"3":[0,1]},'
                 '"prop0":[[0,0],[1,0]]}')


def test_open_and_disconnected_round_trip():
    g = separatrix(3)
    assert io.loads(io.dumps(g)) == g
    a = OpenFeynmanGraph(g.perms, g.prop0, amputated=True)
    assert io.loads(io.dumps(a)) == a
    d = DisconnectedGraph(3, (dipole(3), k33()))
    assert io.loads(io.dumps(d)) == d
    assert io.load_graph_list(io.dump_graph_list([dipole(3), d])) == [dipole(3), d]


def test_presentation_round_trip():
    p = GroupPresentation(2, ((1, 1, -2), (2, 2)))
    assert io.loads_presentation(io.dumps_presentation(p)) == p
    with pytest.raises(io.GraphFormatError):
        io.loads_presentation('{"generators":1,"relators":[[2]]}')


def test_k33_canonical_stable():
    text = io.dumps(k33())
    again = io.dumps(io.loads(text))
    assert text == again
    assert canonical_form(io.loads(again)).encoding == canonical_form(k33()).encoding


@pytest.mark.parametrize("D,p", [(3, 1), (3, 2), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3)])
def test_corpus_round_trip(D, p):
    for g in enumerate_graphs(EnumerationRequest(D, p, connected_only=False)):
        text = io.dumps(g)
        h = io.loads(text)
        assert io.dumps(h) == text
        assert canonical_form(h).encoding == canonical_form(g).encoding


# command line ------------------------------------------------------------------


def test_enumerate_count(capsys):
    assert run(capsys, "enumerate", "--colors", "3", "--vertices", "8", "--connected",
               "--count-only") == (0, "26\n", "")


def test_degree_necklace(capsys):
    assert run(capsys, "degree", "necklace")[:2] == (0, "omega = 1; jackets: 0,0,1\n")


def test_realize_boundary_pipeline(capsys, monkeypatch):
    code, out, _ = run(capsys, "realize", "k33")
    assert code == 0
    code, enc, _ = run(capsys, "boundary", "-", "--encoding", stdin=out, monkeypatch=monkeypatch)
    assert code == 0
    assert enc.strip() == canonical_form(k33()).encoding.decode()


def test_commands_match_library(capsys, tmp_path):
    g = k33()
    assert run(capsys, "realize", "k33")[1] == io.dumps(realize(g))
    assert run(capsys, "cone", "k33")[1] == io.dumps(cone(g))
    assert run(capsys, "separatrix", "--rank", "4")[1] == io.dumps(separatrix(4))
    code, out, _ = run(capsys, "aut", "k33", "--json")
    assert json.loads(out)["order"] == aut_group(g).order == 3
    rec = json.loads(run(capsys, "degree", "necklace", "--json")[1])
    rep = degree_report(necklace())
    assert rec["omega"] == str(rep.omega) and rec["jackets"] == sorted(rep.jacket_genera)
    code, out, _ = run(capsys, "wti-y", "--model", "phi4", "--rank", "3", "--order", "4", "--color", "2")
    assert out == "\n".join(t.record() for t in y_expansion(InteractionModel.phi4(3), 2, 4)) + "\n"
    path = tmp_path / "sep.json"
    path.write_text(io.dumps(separatrix(3)))
    enc = run(capsys, "boundary", str(path), "--encoding")[1].strip()
    assert enc == canonical_form(boundary(separatrix(3)).graph).encoding.decode()


def test_enumerate_out_file(capsys, tmp_path):
    out = tmp_path / "g.json"
    code, text, _ = run(capsys, "enumerate", "--colors", "3", "--vertices", "6", "--out", str(out))
    graphs = io.load_graph_list(out.read_text())
    assert code == 0 and len(graphs) == 11
    assert text.split() == [canonical_form(g).encoding.decode() for g in graphs]


def test_pi1_and_abelianize(capsys, tmp_path):
    code, out, _ = run(capsys, "pi1", "lens31", "--drop-colors", "1,2", "--simplify")
    assert code == 0 and out.splitlines()[-1] == "abelianization: Z/3"
    rec = json.loads(run(capsys, "pi1", "s2xs1", "--json")[1])
    assert rec["free_rank"] == 1 and rec["torsion"] == []
    p = tmp_path / "p.json"
    p.write_text(io.dumps_presentation(GroupPresentation(1, ((1, 1, 1, 1),))))
    assert run(capsys, "abelianize", str(p))[1] == "Z/4\n"
    assert str(abelianization(GroupPresentation(1, ((1, 1, 1, 1),)))) == "Z/4"


def test_text_outputs(capsys):
    assert run(capsys, "faces", "dipole")[1] == "1,2: 1\n1,3: 1\n2,3: 1\ntotal: 3\n"
    assert run(capsys, "aut", "v1")[1] == "order = 2\ngenerators: (0 1)\n"
    assert run(capsys, "validate", "k33")[1] == "valid: closed graph, D=3, p=3, encoding 3:1.2.0/2.0.1\n"
    lines = run(capsys, "jackets", "k33")[1].splitlines()
    assert len(lines) == 1 and lines[0].endswith("genus=1")
    sde = run(capsys, "sde-terms")[1].splitlines()
    assert len(sde) == 16


def test_fe_terms_cli(capsys):
    out = run(capsys, "fe-terms", "--order", "4")[1].splitlines()
    assert len(out) == 5
    assert out[0].split("\t")[:2] == ["1", "2"]


def test_byte_stable(capsys):
    for argv in (["enumerate", "--colors", "4", "--vertices", "4"], ["realize", "necklace"],
                 ["wti-y", "--order", "6", "--color", "1"], ["dot", "k33"]):
        assert run(capsys, *argv) == run(capsys, *argv)


def test_dot(capsys):
    out = run(capsys, "dot", "k33")[1]
    assert out == to_dot(k33())
    assert out.count("shape=circle") == 3 and out.count("shape=box") == 3
    assert out.count(" -- ") == 9 and '[label="2"]' in out
    sep = to_dot(separatrix(3))
    assert "style=dashed" in sep


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "degree")[0] == 2
    assert run(capsys, "pi1", "s3", "--drop-colors", "x")[0] == 2
    code, out, err = run(capsys, "degree", str(tmp_path / "missing.json"))
    assert code == 1 and out == "" and err.startswith("error:")
    bad = tmp_path / "bad.json"
    bad.write_text('{"colors":3,"white":2,"perms":{"1":[0,1],"2":[0],"3":[1,0]}}')
    code, _, err = run(capsys, "degree", str(bad))
    assert code == 1 and "color 2" in err
    assert run(capsys, "validate", str(bad))[0] == 1
    assert run(capsys, "enumerate", "--colors", "4", "--vertices", "20")[0] == 1
    assert run(capsys, "enumerate", "--colors", "3", "--vertices", "3")[0] == 1
    assert run(capsys, "remove-edge", "dipole", "--color", "9", "--white", "0")[0] == 1
    assert run(capsys, "realize", "necklace")[0] == 0
    assert run(capsys, "wti-y", "--order", "4", "--color", "1", "--model", "phi6")[0] == 1
    assert run(capsys, "degree", "k33")[0] == 0


def test_every_fixture_validates(capsys):
    for name in FIXTURES:
        code, out, _ = run(capsys, "validate", name)
        assert code == 0 and out.startswith("valid")
