"""Arthur packets of U(p, q) for good-parity parameters.

For canonically ordered pairs ``(t_i, a_i)`` the packet is indexed by the
decompositions ``a_i = p_i + q_i`` with ``sum p_i = p``. Each decomposition
carries a character of its c-Levi (exponents ``lambda_i``), the cohomological
degree ``S``, a sign vector, and a status. The sign vector is the one for the
Whittaker normalization whose generic discrete series has d = ((1,0), (0,1),
(1,0), ...); another choice twists every sign vector by a fixed character.

Nonvanishing of a member is decided only in the good range. Outside it the
adjacency screen (:func:`nonvanishing_screen`) is a necessary condition and
members that pass it are reported as candidates, never as nonzero.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import NonIntegralExponent, ParameterError
from .params import GoodParityParam
from .rootdata import LeviData, SignatureDecomposition, levi_data

SignVector = Tuple[int, ...]
Character = Tuple[int, ...]


class Status(enum.Enum):
    NONZERO_GOOD_RANGE = "NonzeroGoodRange"
    CANDIDATE_WEAKLY_FAIR = "CandidateWeaklyFair"
    ZERO_BY_SCREEN = "ZeroByScreen"


class Range(enum.Enum):
    GOOD_RANGE = "GoodRange"
    WEAKLY_FAIR_ONLY = "WeaklyFairOnly"


# --- decompositions -----------------------------------------------------------


def _check_signature(psi: GoodParityParam, p: int, q: int) -> None:
    if p < 0 or q < 0 or p + q != psi.size:
        raise ParameterError(f"signature ({p}, {q}) does not match sum of a_i = {psi.size}")


def iter_decompositions(psi: GoodParityParam, p: int, q: int, prefix: Sequence[int] = ()) -> Iterator[Tuple[int, ...]]:
    """Yield p-vectors ``(p_1, ..., p_l)`` in lexicographic order.

    Only vectors starting with ``prefix`` are produced.
    """
    _check_signature(psi, p, q)
    a = psi.a
    ell = len(a)
    tail = [0] * (ell + 1)
    for i in reversed(range(ell)):
        tail[i] = tail[i + 1] + a[i]
    k = len(prefix)
    rest = p - sum(prefix)
    if k > ell or any(not 0 <= x <= a[i] for i, x in enumerate(prefix)) or not 0 <= rest <= tail[k]:
        return
    cur = list(prefix) + [0] * (ell - k)

    def fill(i: int, r: int) -> None:
        # lexicographically smallest completion of positions i.. with sum r
        for j in range(i, ell):
            x = r - tail[j + 1]
            x = x if x > 0 else 0
            cur[j] = x
            r -= x

    fill(k, rest)
    while True:
        yield tuple(cur)
        # rightmost free position that can grow while the suffix still fits
        s = 0
        i = ell - 1
        while i >= k:
            if s > 0 and cur[i] < a[i]:
                break
            s += cur[i]
            i -= 1
        if i < k:
            return
        cur[i] += 1
        fill(i + 1, s - 1)


def decomposition_from_pvector(psi: GoodParityParam, pv: Sequence[int]) -> SignatureDecomposition:
    return SignatureDecomposition(tuple((x, a - x) for x, a in zip(pv, psi.a)))


def enumerate_decompositions(psi: GoodParityParam, p: int, q: int) -> List[SignatureDecomposition]:
    """All d with p_i + q_i = a_i and sum p_i = p, lexicographic in the p-vector."""
    out = [decomposition_from_pvector(psi, pv) for pv in iter_decompositions(psi, p, q)]
    assert out, "the set of decompositions is never empty for a valid signature"
    return out


def count_decompositions(a: Sequence[int], p: int) -> int:
    """Coefficient of x^p in prod_i (1 + x + ... + x^{a_i})."""
    poly = [1]
    for ai in a:
        new = [0] * (len(poly) + ai)
        for k, c in enumerate(poly):
            if c:
                for j in range(ai + 1):
                    new[k + j] += c
        poly = new
    return poly[p] if 0 <= p < len(poly) else 0


def decomposition_prefixes(psi: GoodParityParam, p: int, depth: int) -> List[Tuple[int, ...]]:
    """Feasible p-vector prefixes of length ``depth``, in lexicographic order."""
    a = psi.a
    depth = min(depth, len(a))
    tail_total = sum(a[depth:])
    out = []
    for pre in itertools.product(*(range(x + 1) for x in a[:depth])):
        s = sum(pre)
        if s <= p <= s + tail_total:
            out.append(pre)
    return out


# --- characters and signs -------------------------------------------------------


@dataclass(frozen=True)
class LambdaChar:
    exponents: Tuple[int, ...]
    dlambda: Tuple[int, ...]


def lambda_exponents(psi: GoodParityParam) -> Tuple[int, ...]:
    """``lambda_i = (t_i + a_i - N)/2 - a_{<i}``; independent of the decomposition."""
    out = []
    before = 0
    for t, a in psi.pairs:
        num = t + a - psi.N
        if num % 2:
            raise NonIntegralExponent(f"t + a - N = {num} is odd for block ({t}, {a})")
        out.append(num // 2 - before)
        before += a
    return tuple(out)


def _dlambda(exponents: Sequence[int], d: SignatureDecomposition) -> Tuple[int, ...]:
    out: List[int] = []
    for lam, (p_i, _) in zip(exponents, d.blocks):
        out += [lam] * p_i
    for lam, (_, q_i) in zip(reversed(exponents), reversed(d.blocks)):
        out += [-lam] * q_i
    return tuple(out)


def lambda_char(psi: GoodParityParam, d) -> LambdaChar:
    """The character of L_d: exponent per block and its differential in t^*.

    The differential carries ``lambda_i`` on the p-coordinates of block i and
    ``-lambda_i`` on all of its q-coordinates.
    """
    d = d if isinstance(d, SignatureDecomposition) else SignatureDecomposition(tuple(d))
    lam = lambda_exponents(psi)
    return LambdaChar(lam, _dlambda(lam, d))


def _epsilon_exponent(p_i: int, q_i: int, before: int) -> int:
    a_i = p_i + q_i
    return p_i * before + q_i * (before + 1) + a_i * (a_i - 1) // 2


def epsilon_char(psi: GoodParityParam, d) -> SignVector:
    d = d if isinstance(d, SignatureDecomposition) else SignatureDecomposition(tuple(d))
    out = []
    before = 0
    for p_i, q_i in d.blocks:
        out.append(-1 if _epsilon_exponent(p_i, q_i, before) % 2 else 1)
        before += p_i + q_i
    return tuple(out)


def _pairs(psi) -> Tuple[Tuple[int, int], ...]:
    # these checks are structural, so bare canonically ordered pairs are accepted too
    return psi.pairs if isinstance(psi, GoodParityParam) else tuple(tuple(x) for x in psi)


def good_range_check(psi) -> bool:
    pr = _pairs(psi)
    return all(t1 - (a1 - 1) > t2 + (a2 - 1) for (t1, a1), (t2, a2) in zip(pr, pr[1:]))


def nonvanishing_screen(psi, d) -> bool:
    """Necessary condition for A_d(psi) != 0.

    Wherever t_{i+1} = t_i it requires p_i >= q_{i+1} and q_i >= p_{i+1}.
    Only meaningful for canonically ordered pairs.
    """
    blocks = d.blocks if isinstance(d, SignatureDecomposition) else tuple(d)
    t = [x for x, _ in _pairs(psi)]
    for i in range(len(t) - 1):
        if t[i] == t[i + 1]:
            (p1, q1), (p2, q2) = blocks[i], blocks[i + 1]
            if p1 < q2 or q1 < p2:
                return False
    return True


# --- component group ------------------------------------------------------------


@dataclass(frozen=True)
class ComponentGroup:
    """A(psi) as the quotient of {+-1}^l identifying blocks with equal (t, a).

    ``classes`` are maximal runs of equal pairs, as 0-based index tuples.
    A character is a tuple with one sign per class.
    """

    ell: int
    classes: Tuple[Tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return 2 ** len(self.classes)

    def characters(self) -> List[Character]:
        return list(itertools.product((1, -1), repeat=len(self.classes)))

    def lift(self, character: Character) -> SignVector:
        """The sign vector on {1..l} pulled back from a character."""
        out = [0] * self.ell
        for sign, cls in zip(character, self.classes):
            for i in cls:
                out[i] = sign
        return tuple(out)


def component_group(psi) -> ComponentGroup:
    pairs = _pairs(psi)
    classes = []
    for i, pair in enumerate(pairs):
        if classes and pairs[classes[-1][-1]] == pair:
            classes[-1].append(i)
        else:
            classes.append([i])
    return ComponentGroup(len(pairs), tuple(tuple(c) for c in classes))


def epsilon_factors(cg: ComponentGroup, eps: SignVector) -> Optional[Character]:
    """Per-class signs if ``eps`` is constant on every class, else None."""
    out = []
    for cls in cg.classes:
        signs = {eps[i] for i in cls}
        if len(signs) != 1:
            return None
        out.append(signs.pop())
    return tuple(out)


# --- packets ----------------------------------------------------------------------


@dataclass(frozen=True)
class PacketEntry:
    """One member A_d(psi) of the packet together with its sign character."""

    d: SignatureDecomposition
    p: int
    q: int
    lambda_: LambdaChar
    S: int
    epsilon: SignVector
    status: Status
    character: Optional[Character]

    @cached_property
    def levi(self) -> LeviData:
        return levi_data(self.d, self.p, self.q)


@dataclass(frozen=True)
class Packet:
    psi: GoodParityParam
    p: int
    q: int
    entries: Tuple[PacketEntry, ...]
    range: Range

    @cached_property
    def component_group(self) -> ComponentGroup:
        return component_group(self.psi)

    def nonzero_entries(self) -> List[PacketEntry]:
        return [e for e in self.entries if e.status is not Status.ZERO_BY_SCREEN]


class EntryFactory:
    """Per-block lookup tables so that each decomposition costs O(N).

    Every table is indexed ``[i][p_i]``.
    """

    def __init__(self, psi: GoodParityParam, p: int, q: int):
        _check_signature(psi, p, q)
        self.psi, self.p, self.q = psi, p, q
        self.exponents = lambda_exponents(psi)
        self.cg = component_group(psi)
        self.singleton_classes = len(self.cg.classes) == psi.ell
        self.good_range = good_range_check(psi)
        t = psi.t
        self.equal_t = [i for i in range(psi.ell - 1) if t[i] == t[i + 1]]
        self.S_base = (p * (p - 1) + q * (q - 1)) // 2
        self.blocks, self.eps, self.S_loss, self.dl_p, self.dl_q = [], [], [], [], []
        before = 0
        for lam, a in zip(self.exponents, psi.a):
            xs = range(a + 1)
            self.blocks.append([(x, a - x) for x in xs])
            self.eps.append([-1 if _epsilon_exponent(x, a - x, before) % 2 else 1 for x in xs])
            self.S_loss.append([(x * (x - 1) + (a - x) * (a - x - 1)) // 2 for x in xs])
            self.dl_p.append([(lam,) * x for x in xs])
            self.dl_q.append([(-lam,) * (a - x) for x in xs])
            before += a

    def status(self, blocks) -> Status:
        if self.good_range:
            return Status.NONZERO_GOOD_RANGE
        for i in self.equal_t:
            (p1, q1), (p2, q2) = blocks[i], blocks[i + 1]
            if p1 < q2 or q1 < p2:
                return Status.ZERO_BY_SCREEN
        return Status.CANDIDATE_WEAKLY_FAIR

    def entry(self, pv: Tuple[int, ...]) -> PacketEntry:
        idx = list(enumerate(pv))
        blocks = tuple([self.blocks[i][x] for i, x in idx])
        d = SignatureDecomposition._trusted(blocks)
        eps = tuple([self.eps[i][x] for i, x in idx])
        S = self.S_base - sum([self.S_loss[i][x] for i, x in idx])
        dl = [v for i, x in idx for v in self.dl_p[i][x]]
        for i, x in reversed(idx):
            dl.extend(self.dl_q[i][x])
        status = self.status(blocks)
        if status is Status.ZERO_BY_SCREEN:
            character = None
        elif self.singleton_classes:
            character = eps
        else:
            character = epsilon_factors(self.cg, eps)
        lam = LambdaChar(self.exponents, tuple(dl))
        return PacketEntry(d, self.p, self.q, lam, S, eps, status, character)


def iter_entries(psi: GoodParityParam, p: int, q: int, prefix: Sequence[int] = ()) -> Iterator[PacketEntry]:
    """Packet entries in lexicographic order of d, optionally restricted to a p-vector prefix.

    Entries for distinct prefixes are independent, so a caller may evaluate
    prefixes concurrently and concatenate the results in prefix order.
    """
    factory = EntryFactory(psi, p, q)
    for pv in iter_decompositions(psi, p, q, prefix):
        yield factory.entry(pv)


def build_packet(psi: GoodParityParam, p: int, q: int) -> Packet:
    entries = tuple(iter_entries(psi, p, q))
    rng = Range.GOOD_RANGE if good_range_check(psi) else Range.WEAKLY_FAIR_ONLY
    return Packet(psi, p, q, entries, rng)


def eta_decomposition(pkt: Packet) -> Dict[Character, List[PacketEntry]]:
    """Group the surviving entries by their character of A(psi)."""
    cg = component_group(pkt.psi)
    out: Dict[Character, List[PacketEntry]] = {c: [] for c in cg.characters()}
    for e in pkt.entries:
        if e.status is not Status.ZERO_BY_SCREEN and e.character is not None:
            out[e.character].append(e)
    return out
