"""Arthur parameters for real unitary and classical groups.

A unitary parameter is a multiset of triples ``(t, nu, a)`` standing for the
summand ``chi_{t, i nu} (x) R[a]``: ``t`` indexes the unitary character
``z -> (z / zbar)^{t/2}``, ``i nu`` is its purely imaginary exponent, and ``a``
is the dimension of the SL2 representation. All arithmetic is exact; ``nu`` is
a :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

from .errors import DimensionMismatch, ParameterError, UnpairedBadFactor

Pair = Tuple[int, int]


class Parity(enum.Enum):
    GOOD = "Good"
    BAD = "Bad"


def as_half_int(x) -> Fraction:
    """Coerce ``x`` to a Fraction, checking that twice it is an integer."""
    v = Fraction(x)
    if (2 * v).denominator != 1:
        raise ValueError(f"{x!r} is not a half-integer")
    return v


@dataclass(frozen=True)
class UnitaryFactor:
    t: int
    nu: Fraction
    a: int

    def __post_init__(self):
        object.__setattr__(self, "nu", Fraction(self.nu))
        if not isinstance(self.t, int) or not isinstance(self.a, int):
            raise TypeError("t and a must be integers")
        if self.a < 1:
            raise ValueError(f"a must be positive, got {self.a}")

    def conjugate(self) -> "UnitaryFactor":
        return UnitaryFactor(self.t, -self.nu, self.a)

    def sort_key(self):
        return (-self.t, -self.a, -self.nu)

    def __str__(self):
        return f"({self.t}, {self.nu}, {self.a})"


def _canonical_factors(factors: Iterable[UnitaryFactor]) -> Tuple[UnitaryFactor, ...]:
    return tuple(sorted(factors, key=UnitaryFactor.sort_key))


@dataclass(frozen=True)
class UnitaryParameter:
    """A validated parameter for U(p, q); build it with :func:`validate_parameter`."""

    p: int
    q: int
    factors: Tuple[UnitaryFactor, ...]

    @property
    def N(self) -> int:
        return self.p + self.q

    def conjugate(self) -> "UnitaryParameter":
        """The parameter with every imaginary exponent negated."""
        return UnitaryParameter(self.p, self.q, _canonical_factors(f.conjugate() for f in self.factors))


def sort_canonical(pairs: Iterable[Pair]) -> list:
    """Sort ``(t, a)`` pairs by t descending, then a descending (stable)."""
    return sorted(pairs, key=lambda ta: (-ta[0], -ta[1]))


@dataclass(frozen=True)
class GoodParityParam:
    """Canonically ordered good-parity pairs ``(t_i, a_i)`` for ambient rank ``N``."""

    pairs: Tuple[Pair, ...]
    N: int

    def __post_init__(self):
        pairs = tuple((int(t), int(a)) for t, a in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if self.N < 0:
            raise ParameterError(f"N must be nonnegative, got {self.N}")
        for t, a in pairs:
            if a < 1:
                raise ParameterError(f"block ({t}, {a}) has nonpositive a")
            if (t + a - self.N) % 2:
                raise ParameterError(f"block ({t}, {a}) is not of good parity for N={self.N}")
        if list(pairs) != sort_canonical(pairs):
            raise ParameterError(f"pairs {list(pairs)} are not in canonical order")

    @classmethod
    def from_pairs(cls, pairs: Iterable[Pair], N: Optional[int] = None) -> "GoodParityParam":
        """Sort ``pairs`` canonically; ``N`` defaults to the sum of the a_i."""
        pairs = sort_canonical(pairs)
        if N is None:
            N = sum(a for _, a in pairs)
        return cls(tuple(pairs), N)

    @property
    def ell(self) -> int:
        return len(self.pairs)

    @property
    def t(self) -> Tuple[int, ...]:
        return tuple(t for t, _ in self.pairs)

    @property
    def a(self) -> Tuple[int, ...]:
        return tuple(a for _, a in self.pairs)

    @property
    def size(self) -> int:
        """Sum of the a_i (the rank of the group the pairs parametrize)."""
        return sum(self.a)

    def rebased(self, N: int) -> "GoodParityParam":
        """Same pairs, ambient rank replaced by ``N`` (parity re-checked)."""
        return GoodParityParam(self.pairs, N)


def classify_parity_unitary(f: UnitaryFactor, N: int) -> Parity:
    if f.nu == 0 and (f.t + f.a - N) % 2 == 0:
        return Parity.GOOD
    return Parity.BAD


def validate_parameter(factors: Iterable[UnitaryFactor], p: int, q: int) -> UnitaryParameter:
    """Check dimension and conjugate-dual pairing of the bad part.

    Raises :class:`DimensionMismatch` or :class:`UnpairedBadFactor`.
    """
    if p < 0 or q < 0:
        raise ParameterError(f"signature ({p}, {q}) has a negative entry")
    factors = _canonical_factors(factors)
    N = p + q
    total = sum(f.a for f in factors)
    if total != N:
        raise DimensionMismatch(total, N)
    mult = Counter(factors)
    for f in factors:
        if classify_parity_unitary(f, N) is Parity.GOOD:
            continue
        if f.nu == 0:
            if mult[f] % 2:
                raise UnpairedBadFactor(f, f"multiplicity {mult[f]} is odd")
        elif mult[f] != mult[f.conjugate()]:
            raise UnpairedBadFactor(
                f, f"multiplicity {mult[f]} but {f.conjugate()} has multiplicity {mult[f.conjugate()]}"
            )
    return UnitaryParameter(p, q, factors)


class ParitySplit(NamedTuple):
    good: GoodParityParam
    eprime: Tuple[UnitaryFactor, ...]
    edoubleprime: Tuple[UnitaryFactor, ...]
    N_bp: int
    a_mp: int


def split_parity(psi: UnitaryParameter) -> ParitySplit:
    """Separate good-parity pairs from the bad part and halve the bad part.

    Bad factors with nu > 0 go to ``eprime``, nu < 0 to ``edoubleprime``; the
    2m copies of a bad factor with nu = 0 are shared m and m.
    """
    N = psi.N
    good, ep, epp = [], [], []
    zero_bad = Counter()
    for f in psi.factors:
        if classify_parity_unitary(f, N) is Parity.GOOD:
            good.append((f.t, f.a))
        elif f.nu > 0:
            ep.append(f)
        elif f.nu < 0:
            epp.append(f)
        else:
            zero_bad[f] += 1
    for f, m in zero_bad.items():
        ep.extend([f] * (m // 2))
        epp.extend([f] * (m // 2))
    N_bp = sum(a for _, a in good)
    a_mp = sum(f.a for f in ep)
    return ParitySplit(
        GoodParityParam.from_pairs(good, N),
        _canonical_factors(ep),
        _canonical_factors(epp),
        N_bp,
        a_mp,
    )


# --- classical groups -------------------------------------------------------


class FactorKind(enum.Enum):
    DELTA = "delta"
    ETA = "eta"


@dataclass(frozen=True)
class ClassicalFactor:
    """``delta_{t, i nu} (x) R[a]`` (kind DELTA) or ``eta_{eps, i nu} (x) R[a]`` (kind ETA)."""

    kind: FactorKind
    nu: Fraction
    a: int
    t: Optional[int] = None
    eps: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "nu", Fraction(self.nu))
        if self.a < 1:
            raise ValueError(f"a must be positive, got {self.a}")
        if self.kind is FactorKind.DELTA:
            if self.t is None or self.t < 0 or self.eps is not None:
                raise ValueError("delta factor needs t >= 0 and no eps")
        elif self.kind is FactorKind.ETA:
            if self.eps not in (1, -1) or self.t is not None:
                raise ValueError("eta factor needs eps = +1 or -1 and no t")
        else:
            raise ValueError(f"unknown factor kind {self.kind!r}")

    @classmethod
    def delta(cls, t: int, nu, a: int) -> "ClassicalFactor":
        return cls(FactorKind.DELTA, nu, a, t=t)

    @classmethod
    def eta(cls, eps: int, nu, a: int) -> "ClassicalFactor":
        return cls(FactorKind.ETA, nu, a, eps=eps)

    @property
    def dim(self) -> int:
        """Dimension as a representation of W_R x SL2."""
        return 2 * self.a if self.kind is FactorKind.DELTA else self.a

    @property
    def b(self) -> int:
        return (self.t + self.a - 1) if self.kind is FactorKind.DELTA else self.a - 1

    def dual(self) -> "ClassicalFactor":
        return ClassicalFactor(self.kind, -self.nu, self.a, t=self.t, eps=self.eps)

    def sort_key(self):
        if self.kind is FactorKind.DELTA:
            return (0, -self.t, -self.a, -self.nu)
        return (1, -self.eps, -self.a, -self.nu)

    def __str__(self):
        if self.kind is FactorKind.DELTA:
            return f"delta(t={self.t}, nu={self.nu}, a={self.a})"
        return f"eta(eps={self.eps:+d}, nu={self.nu}, a={self.a})"


@dataclass(frozen=True)
class ClassicalGroupKind:
    """Sp(2n, R) when ``family == 'symplectic'``, else SO(p, q)."""

    family: str
    n: int = 0
    p: int = 0
    q: int = 0

    def __post_init__(self):
        if self.family not in ("symplectic", "special_orthogonal"):
            raise ValueError(f"unknown family {self.family!r}")
        if min(self.n, self.p, self.q) < 0:
            raise ValueError("ranks must be nonnegative")

    @classmethod
    def symplectic(cls, n: int) -> "ClassicalGroupKind":
        return cls("symplectic", n=n)

    @classmethod
    def special_orthogonal(cls, p: int, q: int) -> "ClassicalGroupKind":
        return cls("special_orthogonal", p=p, q=q)

    @property
    def is_symplectic(self) -> bool:
        return self.family == "symplectic"

    @property
    def epsG(self) -> Fraction:
        if self.is_symplectic:
            return Fraction(1)
        return Fraction(0) if (self.p + self.q) % 2 == 0 else Fraction(1, 2)

    @property
    def dual_is_symplectic(self) -> bool:
        return not self.is_symplectic and (self.p + self.q) % 2 == 1

    @property
    def bad_parity(self) -> int:
        """Residue mod 2 of ``b`` that makes a nu = 0 factor bad."""
        return 0 if self.dual_is_symplectic else 1

    @property
    def rank(self) -> int:
        return self.n if self.is_symplectic else (self.p + self.q) // 2

    @property
    def std_dim(self) -> int:
        """Dimension of the standard representation of the dual group."""
        if self.is_symplectic:
            return 2 * self.n + 1
        m = self.p + self.q
        return m if m % 2 == 0 else m - 1

    def shrink(self, k: int) -> "ClassicalGroupKind":
        """Group of the same type after removing a GL_k Levi factor."""
        if self.is_symplectic:
            return ClassicalGroupKind.symplectic(self.n - k)
        return ClassicalGroupKind.special_orthogonal(self.p - k, self.q - k)

    def __str__(self):
        if self.is_symplectic:
            return f"Sp({2 * self.n}, R)"
        return f"SO({self.p}, {self.q})"


def classify_parity_classical(f: ClassicalFactor, g: ClassicalGroupKind) -> Parity:
    if f.nu != 0 or f.b % 2 == g.bad_parity:
        return Parity.BAD
    return Parity.GOOD


def sort_classical(factors: Iterable[ClassicalFactor]) -> Tuple[ClassicalFactor, ...]:
    return tuple(sorted(factors, key=ClassicalFactor.sort_key))


def pair_bad_part(
    factors: Sequence[ClassicalFactor], g: ClassicalGroupKind
) -> Tuple[Tuple[ClassicalFactor, ...], Tuple[ClassicalFactor, ...]]:
    """Return ``(rho, good)`` where the bad part equals rho + dual(rho).

    rho keeps nu > 0 factors and half the copies of each nu = 0 bad factor.
    """
    mult = Counter(factors)
    rho, good = [], []
    for f, m in mult.items():
        if classify_parity_classical(f, g) is Parity.GOOD:
            good.extend([f] * m)
        elif f.nu == 0:
            if m % 2:
                raise UnpairedBadFactor(f, f"multiplicity {m} is odd")
            rho.extend([f] * (m // 2))
        elif m != mult[f.dual()]:
            raise UnpairedBadFactor(f, f"dual {f.dual()} has multiplicity {mult[f.dual()]}")
        elif f.nu > 0:
            rho.extend([f] * m)
    return sort_classical(rho), sort_classical(good)
