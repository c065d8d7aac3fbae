"""Roots of sp(2N, C) and the theta-stable parabolic data of U(p, q) inside it.

Coordinates: a weight is a length-N vector in the basis e_1..e_N of t^*.
U(p, q) sits in Sp(2N, R) as the centralizer of t_{p,q} = (1^p, -1^q); its
roots are e_i - e_j inside each of the two coordinate blocks (compact) and
e_i + e_j across them (noncompact). A decomposition d = ((p_1, q_1), ...)
picks the c-Levi U(p_1, q_1) x ... cut out by the vector :func:`t_vector`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Tuple

from .errors import SignatureMismatch

HalfIntVector = Tuple[Fraction, ...]


def _choose2(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class Root:
    coeffs: Tuple[int, ...]
    compact: bool

    def __post_init__(self):
        nz = [c for c in self.coeffs if c]
        long_root = len(nz) == 1 and abs(nz[0]) == 2
        short_root = len(nz) == 2 and all(abs(c) == 1 for c in nz)
        if not (long_root or short_root):
            raise ValueError(f"{self.coeffs} is not a root of type C")
        if self.compact != (short_root and sum(nz) == 0):
            raise ValueError(f"compactness tag of {self.coeffs} is wrong")

    def pair(self, v) -> int:
        return sum(c * x for c, x in zip(self.coeffs, v))

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs), self.compact)


def _basis_root(N: int, entries: dict, compact: bool) -> Root:
    v = [0] * N
    for i, c in entries.items():
        v[i] = c
    return Root(tuple(v), compact)


def roots_sp(N: int) -> List[Root]:
    """All 2N^2 roots of sp(2N, C); compact iff of the form +-(e_i - e_j)."""
    if N < 1:
        raise ValueError("N must be positive")
    out = []
    for i in range(N):
        for j in range(i + 1, N):
            r = _basis_root(N, {i: 1, j: -1}, True)
            s = _basis_root(N, {i: 1, j: 1}, False)
            out += [r, -r, s, -s]
        r = _basis_root(N, {i: 2}, False)
        out += [r, -r]
    return out


def positive_roots_of_l(p: int, q: int) -> List[Root]:
    """The chosen positive system of U(p, q) in the symplectic coordinates."""
    N = p + q
    out = []
    for i in range(p):
        for j in range(i + 1, p):
            out.append(_basis_root(N, {i: 1, j: -1}, True))
    for i in range(p, N):
        for j in range(i + 1, N):
            out.append(_basis_root(N, {i: -1, j: 1}, True))
    for i in range(p):
        for j in range(p, N):
            out.append(_basis_root(N, {i: 1, j: 1}, False))
    return out


def roots_of_l(p: int, q: int) -> List[Root]:
    """All roots of U(p, q) = L_{p,q}: the positive system and its negative."""
    pos = positive_roots_of_l(p, q)
    return pos + [-r for r in pos]


@dataclass(frozen=True, order=True)
class SignatureDecomposition:
    """Blocks ``(p_i, q_i)``; the c-Levi U(p_1, q_1) x ... x U(p_l, q_l)."""

    blocks: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        blocks = tuple((int(p), int(q)) for p, q in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        for p, q in blocks:
            if p < 0 or q < 0 or p + q < 1:
                raise ValueError(f"invalid block ({p}, {q})")

    @classmethod
    def _trusted(cls, blocks: Tuple[Tuple[int, int], ...]) -> "SignatureDecomposition":
        # skips validation; callers guarantee well-formed integer blocks
        obj = object.__new__(cls)
        object.__setattr__(obj, "blocks", blocks)
        return obj

    @classmethod
    def parse(cls, text: str) -> "SignatureDecomposition":
        """Parse ``"p1,q1;p2,q2;..."``."""
        blocks = []
        for chunk in text.split(";"):
            p, q = chunk.split(",")
            blocks.append((int(p), int(q)))
        return cls(tuple(blocks))

    @property
    def ell(self) -> int:
        return len(self.blocks)

    @property
    def p(self) -> int:
        return sum(b[0] for b in self.blocks)

    @property
    def q(self) -> int:
        return sum(b[1] for b in self.blocks)

    @property
    def N(self) -> int:
        return self.p + self.q

    @property
    def a(self) -> Tuple[int, ...]:
        return tuple(p + q for p, q in self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        return ";".join(f"{p},{q}" for p, q in self.blocks)


def _as_decomposition(d) -> SignatureDecomposition:
    return d if isinstance(d, SignatureDecomposition) else SignatureDecomposition(tuple(d))


def t_vector(d) -> Tuple[int, ...]:
    d = _as_decomposition(d)
    ell = d.ell
    out: List[int] = []
    for i, (p_i, _) in enumerate(d.blocks):
        out += [ell - i] * p_i
    for i in reversed(range(ell)):
        out += [-(ell - i)] * d.blocks[i][1]
    return tuple(out)


def delta_l_pq(p: int, q: int) -> HalfIntVector:
    """Half-sum of the positive roots of U(p, q), in closed form."""
    N = p + q
    first = [Fraction(N - 1 - 2 * k, 2) for k in range(p)]
    second = [Fraction(p - q + 1 + 2 * k, 2) for k in range(q)]
    return tuple(first + second)


def delta_l_d(d) -> HalfIntVector:
    """Half-sum of the positive roots of the c-Levi L_d, in closed form."""
    d = _as_decomposition(d)
    out: List[Fraction] = []
    for p_i, q_i in d.blocks:
        a_i = p_i + q_i
        out += [Fraction(a_i - 1 - 2 * k, 2) for k in range(p_i)]
    for p_i, q_i in reversed(d.blocks):
        out += [Fraction(p_i - q_i + 1 + 2 * k, 2) for k in range(q_i)]
    return tuple(out)


def degree_and_dim(d) -> Tuple[int, int]:
    """``(S, dim_v)``: compact and total root counts of the nilradical v_d.

    A root of U(p, q) pairs nonzero with t_d exactly when its two coordinates
    lie in different blocks of d, and one of each +- pair is then positive.
    """
    d = _as_decomposition(d)
    p, q = d.p, d.q
    S = _choose2(p) + _choose2(q) - sum(_choose2(pi) + _choose2(qi) for pi, qi in d.blocks)
    noncompact = p * q - sum(pi * qi for pi, qi in d.blocks)
    return S, S + noncompact


@dataclass(frozen=True)
class LeviData:
    d: SignatureDecomposition
    p: int
    q: int
    t_d: Tuple[int, ...]
    delta_l_pq: HalfIntVector
    delta_l_d: HalfIntVector
    delta_v_d: HalfIntVector
    S: int
    dim_v: int


def check_signature(d, p: int, q: int) -> SignatureDecomposition:
    d = _as_decomposition(d)
    if d.p != p or d.q != q:
        raise SignatureMismatch(d.blocks, p, q)
    return d


def levi_data(d, p: int, q: int) -> LeviData:
    d = check_signature(d, p, q)
    dl_pq = delta_l_pq(p, q)
    dl_d = delta_l_d(d)
    S, dim_v = degree_and_dim(d)
    return LeviData(
        d=d,
        p=p,
        q=q,
        t_d=t_vector(d),
        delta_l_pq=dl_pq,
        delta_l_d=dl_d,
        delta_v_d=tuple(x - y for x, y in zip(dl_pq, dl_d)),
        S=S,
        dim_v=dim_v,
    )


def half_sum(roots: Iterable[Root], N: int) -> HalfIntVector:
    """Half the sum of ``roots`` as a length-N vector."""
    acc = [0] * N
    for r in roots:
        for i, c in enumerate(r.coeffs):
            acc[i] += c
    return tuple(Fraction(x, 2) for x in acc)
