"""The medium decision procedure and the brute-force axiom oracles."""

import pytest
from hypothesis import given, settings, strategies as st

import media_fixtures as mf
from mediakit import axioms, wgfamily
from mediakit.axioms import (
    Disconnected,
    DuplicateArcToken,
    Misaligned,
    MissingReverse,
    NotPartialCube,
    SelfReverse,
)
from mediakit.core import TokenSystem
from mediakit.errors import InputError

# Two tokens sharing the arc A->B; t3 is the reverse of both.
DUPARC = TokenSystem(
    ("A", "B"), {"t1": {"A": "B"}, "t2": {"A": "B"}, "t3": {"B": "A"}}
)


class TestFindReversePairing:
    def test_tri_missing_reverse(self):
        assert axioms.find_reverse_pairing(mf.TRI) == MissingReverse("t1")

    def test_norev_missing_reverse(self):
        assert axioms.find_reverse_pairing(mf.NOREV) == MissingReverse("t")

    def test_swap_self_reverse(self):
        assert axioms.find_reverse_pairing(mf.SWAP) == SelfReverse("t")

    def test_c4_pairing(self, c4_medium):
        pairing = axioms.find_reverse_pairing(c4_medium.system)
        assert pairing == {"+x": "-x", "-x": "+x", "+y": "-y", "-y": "+y"}


class TestBuildGraph:
    def test_edge_graph(self):
        system = wgfamily.representing_token_system(mf.EDGE_FAMILY)
        pairing = axioms.find_reverse_pairing(system)
        graph = axioms.build_graph(system, pairing)
        assert graph.edges == (("{x}", "{}"),)
        assert graph.labels[("{x}", "{}")] == frozenset({"+x", "-x"})

    def test_duplicate_arc(self):
        pairing = axioms.find_reverse_pairing(DUPARC)
        assert isinstance(pairing, dict)
        witness = axioms.build_graph(DUPARC, pairing)
        assert witness == DuplicateArcToken("A", "B", "t1", "t2")


class TestIsMedium:
    def test_tri_rejected(self):
        assert axioms.is_medium(mf.TRI).witness == MissingReverse("t1")

    def test_swap_rejected(self):
        assert axioms.is_medium(mf.SWAP).witness == SelfReverse("t")

    def test_duparc_rejected(self):
        assert axioms.is_medium(DUPARC).witness == DuplicateArcToken("A", "B", "t1", "t2")

    def test_disc_rejected(self):
        with pytest.warns(UserWarning, match="not connected"):
            system = wgfamily.representing_token_system(mf.DISC_FAMILY)
        witness = axioms.is_medium(system).witness
        assert isinstance(witness, Disconnected)

    def test_nwg_rejected(self):
        system = wgfamily.representing_token_system(mf.NWG_FAMILY)
        verdict = axioms.is_medium(system)
        assert not verdict.accepted
        assert isinstance(verdict.witness, (NotPartialCube, Misaligned))

    def test_misaligned_partial_cube_rejected(self):
        # The state graph is a 4-cycle (a partial cube), yet token 'a'
        # crosses its Theta class in opposite directions.
        verdict = axioms.is_medium(mf.MISALIGNED)
        assert isinstance(verdict.witness, Misaligned)
        assert verdict.witness.token == "a"

    def test_c4_accepted(self, c4_medium):
        assert c4_medium.embedding.dimension == 2
        assert set(c4_medium.token_classes) == set(c4_medium.tokens)
        assert c4_medium.token_classes["+x"] == c4_medium.token_classes["-x"]
        assert c4_medium.token_classes["+x"] != c4_medium.token_classes["+y"]

    def test_q3_accepted(self, q3_medium):
        assert q3_medium.embedding.dimension == 3
        assert len(q3_medium.states) == 8

    def test_c6_accepted(self, c6_medium):
        assert c6_medium.embedding.dimension == 3
        assert len(c6_medium.graph.edges) == 6


class TestMediumAccessors:
    def test_reverse(self, c4_medium):
        assert c4_medium.reverse("+x") == "-x"
        with pytest.raises(InputError):
            c4_medium.reverse("nope")

    def test_delta(self, c4_medium):
        assert c4_medium.delta("{}", "{x,y}") == 2
        with pytest.raises(InputError):
            c4_medium.delta("{}", "nope")

    def test_effective_domain(self, c4_medium):
        assert c4_medium.effective_domain("+x") == frozenset({"{}", "{y}"})


class TestOracleM1:
    def test_tri_holds(self):
        assert axioms.oracle_m1(mf.TRI, {}) == (True, None)

    def test_norev_fails(self):
        assert axioms.oracle_m1(mf.NOREV, {}) == (False, ("B", "A"))

    def test_c4_holds(self, c4_medium):
        assert axioms.oracle_m1(c4_medium.system, dict(c4_medium.pairing)) == (True, None)


class TestOracleM2:
    def test_tri_violation(self):
        assert axioms.oracle_m2(mf.TRI, {}, 4) == (("t1", "t2", "t3"), "S")

    def test_edge_no_violation(self):
        system = wgfamily.representing_token_system(mf.EDGE_FAMILY)
        pairing = axioms.find_reverse_pairing(system)
        assert axioms.oracle_m2(system, pairing, 4) is None

    def test_misaligned_violation(self):
        pairing = axioms.find_reverse_pairing(mf.MISALIGNED)
        assert isinstance(pairing, dict)
        hit = axioms.oracle_m2(mf.MISALIGNED, pairing, 8)
        assert hit is not None
        message, start = hit
        assert len(message) == 4

    def test_bound_too_small(self):
        with pytest.raises(InputError):
            axioms.oracle_m2(mf.TRI, {}, 1)

    def test_q3_no_violation(self, q3_medium):
        hit = axioms.oracle_m2(q3_medium.system, dict(q3_medium.pairing), 16)
        assert hit is None


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4), st.integers(2, 6), st.randoms(use_true_random=False))
def test_decision_agrees_with_oracles_on_random_families(ground, size, rng):
    if size > 2**ground:
        return
    family = wgfamily.random_family(rng, ground, size)
    wg, _ = wgfamily.is_well_graded(family)
    try:
        with pytest.warns() if not wgfamily.is_connected_family(family) else _nullcontext():
            system = wgfamily.representing_token_system(family)
    except InputError:
        assert not wg
        return
    verdict = axioms.is_medium(system)
    assert verdict.accepted == wg
    pairing = axioms.find_reverse_pairing(system)
    if isinstance(pairing, dict):
        m1_ok, _ = axioms.oracle_m1(system, pairing)
        m2_hit = axioms.oracle_m2(system, pairing, 2 * len(system.states))
        assert verdict.accepted == (m1_ok and m2_hit is None)
    else:
        assert not verdict.accepted


class _nullcontext:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False
