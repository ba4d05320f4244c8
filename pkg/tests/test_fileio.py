"""Parsing, serialization, and DOT export."""

import pytest

import media_fixtures as mf
from mediakit import axioms, fileio, wgfamily
from mediakit.errors import InputError

EDGE_SYSTEM = wgfamily.representing_token_system(mf.EDGE_FAMILY)


class TestTokenSystemIO:
    def test_parse(self):
        system = fileio.parse_token_system(
            '{"states":["A","B"],"tokens":{"t":{"A":"B"},"t~":{"B":"A"}}}'
        )
        assert system.states == ("A", "B")
        assert system.tokens == ("t", "t~")
        assert system.act("A", "t") == "B"

    def test_roundtrip(self):
        for system in (EDGE_SYSTEM, mf.TRI, mf.SWAP, mf.MISALIGNED):
            assert fileio.parse_token_system(fileio.serialize_token_system(system)) == system

    def test_errors(self):
        with pytest.raises(InputError, match="malformed JSON"):
            fileio.parse_token_system("not json")
        with pytest.raises(InputError, match="top-level"):
            fileio.parse_token_system("[1]")
        with pytest.raises(InputError, match='"states"'):
            fileio.parse_token_system('{"states": "AB", "tokens": {}}')
        with pytest.raises(InputError, match='"tokens"'):
            fileio.parse_token_system('{"states": ["A","B"], "tokens": []}')
        with pytest.raises(InputError, match="unknown state 'X'"):
            fileio.parse_token_system('{"states":["A","B"],"tokens":{"t":{"X":"B"}}}')
        with pytest.raises(InputError, match="identity"):
            fileio.parse_token_system('{"states":["A","B"],"tokens":{"t":{}}}')


class TestFamilyIO:
    def test_parse(self):
        family = fileio.parse_family(
            '{"ground":["x","y"],"sets":[[],["x"],["y"],["x","y"]]}'
        )
        assert family == mf.C4_FAMILY

    def test_roundtrip(self):
        for family in (mf.EDGE_FAMILY, mf.C6_FAMILY, mf.NWG_FAMILY, mf.DISC_FAMILY):
            assert fileio.parse_family(fileio.serialize_family(family)) == family

    def test_errors(self):
        with pytest.raises(InputError, match="duplicate member"):
            fileio.parse_family('{"ground":["x"],"sets":[["x"],["x"]]}')
        with pytest.raises(InputError, match="outside the ground"):
            fileio.parse_family('{"ground":["x"],"sets":[[],["y"]]}')
        with pytest.raises(InputError, match='"sets"'):
            fileio.parse_family('{"ground":["x"],"sets":"no"}')


class TestGraphIO:
    def test_parse_with_comments(self):
        graph = fileio.parse_graph("# a square\nA B\nB C\nC D # last\nD A\n")
        assert graph.edges == (("A", "B"), ("A", "D"), ("B", "C"), ("C", "D"))

    def test_roundtrip(self):
        k23 = mf.k23_graph()
        again = fileio.parse_graph(fileio.serialize_graph(k23))
        assert set(again.edges) == set(k23.edges)

    def test_errors(self):
        with pytest.raises(InputError, match="empty graph"):
            fileio.parse_graph("# nothing\n")
        with pytest.raises(InputError, match="line 1"):
            fileio.parse_graph("A B C\n")
        with pytest.raises(InputError, match="duplicate edge"):
            fileio.parse_graph("A B\nB A\n")


class TestDotExport:
    def test_edge_dot(self):
        pairing = axioms.find_reverse_pairing(EDGE_SYSTEM)
        graph = axioms.build_graph(EDGE_SYSTEM, pairing)
        assert fileio.export_dot(graph) == (
            'graph {\n  "{x}";\n  "{}";\n  "{x}" -- "{}" [label="+x/-x"];\n}\n'
        )

    def test_unlabeled_k23(self):
        dot = fileio.export_dot(mf.k23_graph())
        assert dot.count("--") == 6
        assert "label" not in dot

    def test_byte_stable(self, c4_medium):
        assert fileio.export_dot(c4_medium.graph) == fileio.export_dot(c4_medium.graph)

    def test_c4_labels(self, c4_medium):
        dot = fileio.export_dot(c4_medium.graph)
        assert dot.count("label=") == 4
        assert dot.count("+x/-x") == 2 and dot.count("+y/-y") == 2
