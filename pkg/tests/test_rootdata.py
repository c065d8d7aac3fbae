from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from apacket.errors import SignatureMismatch
from apacket.rootdata import (
    Root,
    SignatureDecomposition,
    delta_l_d,
    delta_l_pq,
    degree_and_dim,
    levi_data,
    roots_of_l,
    roots_sp,
    t_vector,
)

from oracles import brute_degree_and_dim, brute_delta_l_d, brute_delta_l_pq

SD = SignatureDecomposition


def test_roots_sp_small():
    r1 = roots_sp(1)
    assert {r.coeffs for r in r1} == {(2,), (-2,)}
    assert not any(r.compact for r in r1)
    for N in (2, 3):
        roots = roots_sp(N)
        assert len(roots) == 2 * N * N
        assert sum(r.compact for r in roots) == N * (N - 1)


def test_root_validation():
    with pytest.raises(ValueError):
        Root((1, 1, 1), False)
    with pytest.raises(ValueError):
        Root((1, -1), False)
    with pytest.raises(ValueError):
        Root((2, 0), True)


@pytest.mark.parametrize(
    "p, q, expected, compact",
    [
        (1, 1, {(1, 1), (-1, -1)}, 0),
        (2, 1, {(1, -1, 0), (-1, 1, 0), (1, 0, 1), (-1, 0, -1), (0, 1, 1), (0, -1, -1)}, 2),
        (2, 0, {(1, -1), (-1, 1)}, 2),
    ],
)
def test_roots_of_l(p, q, expected, compact):
    roots = roots_of_l(p, q)
    assert {r.coeffs for r in roots} == expected
    assert sum(r.compact for r in roots) == compact


@given(st.integers(0, 6), st.integers(0, 6))
def test_roots_of_l_count(p, q):
    if p + q == 0:
        return
    assert len(roots_of_l(p, q)) == p * (p - 1) + q * (q - 1) + 2 * p * q


@pytest.mark.parametrize(
    "d, expected",
    [(((1, 0), (0, 1)), (2, -1)), (((1, 0), (1, 1)), (2, 1, -1)), (((1, 1),), (1, -1))],
)
def test_t_vector(d, expected):
    assert t_vector(d) == expected


@pytest.mark.parametrize(
    "pq, expected",
    [((2, 1), (1, 0, 1)), ((1, 1), (F(1, 2), F(1, 2))), ((2, 0), (F(1, 2), F(-1, 2)))],
)
def test_delta_l_pq(pq, expected):
    assert delta_l_pq(*pq) == expected


@pytest.mark.parametrize(
    "d, expected",
    [
        (((1, 0), (1, 1)), (0, F(1, 2), F(1, 2))),
        (((1, 1),), (F(1, 2), F(1, 2))),
        (((2, 0),), (F(1, 2), F(-1, 2))),
    ],
)
def test_delta_l_d(d, expected):
    assert delta_l_d(d) == expected


@pytest.mark.parametrize(
    "d, pq, dim_v, S",
    [
        (((1, 0), (1, 1)), (2, 1), 2, 1),
        (((1, 0), (0, 1)), (1, 1), 1, 0),
        (((1, 0), (1, 0)), (2, 0), 1, 1),
    ],
)
def test_levi_data(d, pq, dim_v, S):
    ld = levi_data(d, *pq)
    assert (ld.dim_v, ld.S) == (dim_v, S)


def test_levi_data_delta_v():
    assert levi_data(((1, 0), (1, 1)), 2, 1).delta_v_d == (1, F(-1, 2), F(1, 2))


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        levi_data(((1, 0),), 0, 1)


def test_decomposition_rejects_empty_block():
    with pytest.raises(ValueError):
        SD(((0, 0),))
    with pytest.raises(ValueError):
        SD(((1, -1),))


def test_parse_and_str():
    d = SD.parse("1,0;1,1")
    assert d.blocks == ((1, 0), (1, 1))
    assert str(d) == "1,0;1,1"
    assert (d.p, d.q, d.N, d.a) == (2, 1, 3, (1, 2))


decompositions = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(lambda b: sum(b) > 0), min_size=1, max_size=4
).filter(lambda bs: sum(map(sum, bs)) <= 8)


@given(decompositions)
def test_levi_invariants(blocks):
    d = SD(tuple(blocks))
    ld = levi_data(d, d.p, d.q)
    assert ld.delta_v_d == tuple(x - y for x, y in zip(ld.delta_l_pq, ld.delta_l_d))
    assert 0 <= ld.S <= ld.dim_v
    t = ld.t_d
    zero = sum(1 for r in roots_of_l(d.p, d.q) if r.pair(t) == 0)
    assert 2 * ld.dim_v == len(roots_of_l(d.p, d.q)) - zero


@given(decompositions)
def test_closed_forms_match_enumeration(blocks):
    d = SD(tuple(blocks))
    assert delta_l_pq(d.p, d.q) == brute_delta_l_pq(d.p, d.q)
    assert delta_l_d(d) == brute_delta_l_d(d, d.p, d.q)
    assert degree_and_dim(d) == brute_degree_and_dim(d, d.p, d.q)


@given(st.integers(0, 5), st.integers(0, 5))
def test_single_block_degenerate(p, q):
    if p + q == 0:
        return
    ld = levi_data(((p, q),), p, q)
    assert all(x > 0 for x in ld.t_d[:p]) and all(x < 0 for x in ld.t_d[p:])
    assert ld.delta_l_d == ld.delta_l_pq
    assert all(x == 0 for x in ld.delta_v_d)
    assert ld.S == ld.dim_v == 0
