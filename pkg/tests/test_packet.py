import pytest
from hypothesis import given, settings, strategies as st

from apacket.errors import NonIntegralExponent, ParameterError
from apacket.packet import (
    ComponentGroup,
    Range,
    Status,
    build_packet,
    component_group,
    count_decompositions,
    decomposition_prefixes,
    enumerate_decompositions,
    epsilon_char,
    epsilon_factors,
    eta_decomposition,
    good_range_check,
    iter_decompositions,
    iter_entries,
    lambda_char,
    lambda_exponents,
    nonvanishing_screen,
)
from apacket.params import GoodParityParam
from apacket.rootdata import degree_and_dim

from conftest import good_param_from, params_with_signature
from oracles import brute_decompositions, brute_epsilon, brute_factors

G = GoodParityParam.from_pairs


def pvectors(ds):
    return [tuple(p for p, _ in d.blocks) for d in ds]


def test_enumerate_examples():
    assert len(enumerate_decompositions(G([(2, 1), (0, 1), (-2, 1)]), 2, 1)) == 3
    assert [d.blocks for d in enumerate_decompositions(G([(0, 2)]), 1, 1)] == [((1, 1),)]
    assert pvectors(enumerate_decompositions(G([(4, 2), (2, 2)]), 2, 2)) == [(0, 2), (1, 1), (2, 0)]


def test_signature_checked():
    with pytest.raises(ParameterError):
        enumerate_decompositions(G([(0, 2)]), 2, 1)


def test_lambda_examples():
    assert lambda_char(G([(2, 1), (1, 2)]), ((1, 0), (1, 1))).exponents == (0, -1)
    assert lambda_exponents(G([(2, 1), (0, 1), (-2, 1)])) == (0, -2, -4)
    assert lambda_exponents(G([(2, 3)])) == (1,)


def test_dlambda_example():
    assert lambda_char(G([(2, 1), (1, 2)]), ((1, 0), (1, 1))).dlambda == (0, -1, 1)


def test_lambda_rejects_bad_parity():
    bad = GoodParityParam.__new__(GoodParityParam)
    object.__setattr__(bad, "pairs", ((1, 1),))
    object.__setattr__(bad, "N", 1)
    with pytest.raises(NonIntegralExponent):
        lambda_exponents(bad)


def test_epsilon_examples():
    assert epsilon_char(G([(0, 4)]), ((2, 2),)) == (1,)  # exponent 2 + 6
    assert epsilon_char(G([(0, 4)]), ((1, 3),)) == (-1,)  # exponent 3 + 6
    assert epsilon_char(G([(2, 1), (1, 2)]), ((1, 0), (1, 1))) == (1, 1)
    # direct evaluation gives -1 in both slots
    assert epsilon_char(G([(1, 1), (-1, 1)]), ((0, 1), (1, 0))) == (-1, -1)


@given(st.integers(0, 6), st.integers(0, 6))
def test_epsilon_single_block(p, q):
    a = p + q
    if a == 0:
        return
    expected = 1 if (q + a * (a - 1) // 2) % 2 == 0 else -1
    assert epsilon_char(good_param_from([(0, a)]), ((p, q),)) == (expected,)


def test_good_range_examples():
    assert good_range_check([(4, 2), (0, 2)])
    assert not good_range_check([(2, 2), (0, 2)])
    assert good_range_check([(5, 3)])


def test_screen_examples():
    pairs = [(0, 1), (0, 1)]
    assert not nonvanishing_screen(pairs, ((1, 0), (1, 0)))
    assert nonvanishing_screen(pairs, ((1, 0), (0, 1)))
    assert nonvanishing_screen(G([(3, 1), (1, 1)]), ((1, 0), (1, 0)))


def test_component_group_examples():
    assert component_group(G([(3, 1), (1, 1)])).classes == ((0,), (1,))
    cg = component_group([(1, 2), (1, 2), (1, 1)])
    assert cg.classes == ((0, 1), (2,))
    assert cg.order == 4 and len(cg.characters()) == 4
    assert cg.lift((1, -1)) == (1, 1, -1)


def test_epsilon_factors_examples():
    single = ComponentGroup(2, ((0,), (1,)))
    assert epsilon_factors(single, (1, -1)) == (1, -1)
    merged = ComponentGroup(2, ((0, 1),))
    assert epsilon_factors(merged, (1, -1)) is None
    assert epsilon_factors(merged, (-1, -1)) == (-1,)


def test_build_packet_good_range():
    pkt = build_packet(G([(3, 1), (1, 1)]), 1, 1)
    assert pkt.range is Range.GOOD_RANGE
    assert len(pkt.entries) == 2
    assert all(e.status is Status.NONZERO_GOOD_RANGE for e in pkt.entries)


def test_build_packet_screened():
    # (1,1),(1,1) is the good-parity version of two equal blocks of size one
    pkt = build_packet(G([(1, 1), (1, 1)]), 2, 0)
    assert [e.status for e in pkt.entries] == [Status.ZERO_BY_SCREEN]
    assert pkt.entries[0].character is None
    pkt = build_packet(G([(1, 1), (1, 1)]), 1, 1)
    assert [e.status for e in pkt.entries] == [Status.CANDIDATE_WEAKLY_FAIR] * 2
    assert all(e.character is not None for e in pkt.entries)


def test_build_packet_literal_pairs_in_larger_group():
    # the literal pairs (0,1),(0,1) are good for an odd ambient rank
    pkt = build_packet(G([(0, 1), (0, 1)], 3), 2, 0)
    assert [e.status for e in pkt.entries] == [Status.ZERO_BY_SCREEN]


def test_eta_decomposition():
    pkt = build_packet(G([(4, 1), (2, 1), (0, 1)]), 2, 1)
    groups = eta_decomposition(pkt)
    assert len(groups) == 8
    assert sum(len(v) for v in groups.values()) == 3
    assert all(len(v) <= 1 for v in groups.values())
    empty = eta_decomposition(build_packet(G([(1, 1), (1, 1)]), 2, 0))
    assert all(v == [] for v in empty.values())
    single = eta_decomposition(build_packet(G([(2, 3)]), 1, 2))
    assert len(single) == 2 and sum(len(v) for v in single.values()) == 1


def test_entry_levi_matches():
    e = build_packet(G([(2, 1), (1, 2)], 3), 2, 1).entries[0]
    assert e.levi.S == e.S and e.levi.d == e.d


@given(params_with_signature(max_ell=5, max_a=3, max_t=8))
def test_decompositions_count_and_order(args):
    psi, p, q = args
    got = list(iter_decompositions(psi, p, q))
    assert got == brute_decompositions(psi.a, p)
    assert len(got) == count_decompositions(psi.a, p)
    assert all(x < y for x, y in zip(got, got[1:]))


@given(params_with_signature(max_ell=5, max_a=3, max_t=8), st.integers(0, 3))
def test_prefix_chunks_concatenate(args, depth):
    psi, p, q = args
    chunks = [pv for pre in decomposition_prefixes(psi, p, depth) for pv in iter_decompositions(psi, p, q, pre)]
    assert chunks == list(iter_decompositions(psi, p, q))


@settings(max_examples=60)
@given(params_with_signature(max_ell=5, max_a=3, max_t=8))
def test_entries_match_reference(args):
    psi, p, q = args
    lam = lambda_exponents(psi)
    cg = component_group(psi)
    for e in iter_entries(psi, p, q):
        pv = tuple(b[0] for b in e.d.blocks)
        assert e.epsilon == brute_epsilon(psi.a, pv) == epsilon_char(psi, e.d)
        assert e.lambda_ == lambda_char(psi, e.d)
        assert e.lambda_.exponents == lam
        assert e.S == degree_and_dim(e.d)[0]
        screen = nonvanishing_screen(psi, e.d)
        assert (e.status is Status.ZERO_BY_SCREEN) == (not screen)
        if e.status is not Status.ZERO_BY_SCREEN:
            assert e.character == brute_factors(psi.pairs, e.epsilon) == epsilon_factors(cg, e.epsilon)


def test_count_generating_function():
    assert count_decompositions([1, 1, 1], 2) == 3
    assert count_decompositions([2, 2], 2) == 3
    assert count_decompositions([2], 5) == 0
