"""Slow reference implementations used only to check the production code."""

import itertools
from fractions import Fraction

from apacket.rootdata import positive_roots_of_l, roots_of_l, t_vector


def brute_delta_l_pq(p, q):
    N = p + q
    acc = [0] * N
    for r in positive_roots_of_l(p, q):
        for i, c in enumerate(r.coeffs):
            acc[i] += c
    return tuple(Fraction(x, 2) for x in acc)


def _pair(coeffs, v):
    return sum(c * x for c, x in zip(coeffs, v))


def brute_delta_l_d(d, p, q):
    """Half-sum of the positive roots of U(p, q) orthogonal to t_d."""
    t = t_vector(d)
    acc = [0] * (p + q)
    for r in positive_roots_of_l(p, q):
        if _pair(r.coeffs, t) == 0:
            for i, c in enumerate(r.coeffs):
                acc[i] += c
    return tuple(Fraction(x, 2) for x in acc)


def brute_degree_and_dim(d, p, q):
    """(S, dim v): roots of U(p, q) with positive value on t_d, compact ones and all."""
    t = t_vector(d)
    v = [r for r in roots_of_l(p, q) if _pair(r.coeffs, t) > 0]
    return sum(r.compact for r in v), len(v)


def brute_decompositions(a, p):
    return [pv for pv in itertools.product(*(range(x + 1) for x in a)) if sum(pv) == p]


def brute_epsilon(a, pv):
    """Sign vector from the defining exponent, expanded term by term."""
    out = []
    for i, (ai, pi) in enumerate(zip(a, pv)):
        qi = ai - pi
        before = sum(a[:i])
        e = pi * before + qi * (before + 1) + ai * (ai - 1) // 2
        out.append((-1) ** e)
    return tuple(out)


def brute_factors(pairs, eps):
    """Per-class sign if eps is constant on runs of equal pairs, else None."""
    out = []
    for _, grp in itertools.groupby(range(len(pairs)), key=lambda i: pairs[i]):
        signs = {eps[i] for i in grp}
        if len(signs) > 1:
            return None
        out.append(signs.pop())
    return tuple(out)
