"""Reduction of a general parameter to its good-parity part.

The bad part of a parameter is rho + rho^* and contributes a character (or a
Speh block) of a general linear Levi factor; the packet is the parabolic
induction of that GL representation tensored with the good-parity packet of
a smaller group of the same type. The induction is irreducible member by
member, which :attr:`InductionDatum.irreducible_claim` records.

Nothing here constructs representations: the outputs are the labels that
describe the induction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Tuple, Union

from .packet import ComponentGroup, Packet, build_packet, component_group
from .params import (
    ClassicalFactor,
    ClassicalGroupKind,
    FactorKind,
    GoodParityParam,
    Pair,
    UnitaryParameter,
    pair_bad_part,
    split_parity,
)
from .errors import DimensionMismatch


@dataclass(frozen=True)
class GLBlockU:
    """The character chi_{t, i nu} o det of GL(a, C)."""

    t: int
    nu: Fraction
    a: int

    @property
    def gl_rank(self) -> int:
        return self.a


class GLKind(enum.Enum):
    SPEH = "speh"
    CHARACTER_DET = "character_det"


@dataclass(frozen=True)
class GLBlockClassical:
    """Speh(delta_{t, i nu}, a) on GL_{2a}(R), or eta_{eps, i nu} o det on GL_a(R)."""

    kind: GLKind
    nu: Fraction
    a: int
    t: Optional[int] = None
    eps: Optional[int] = None

    @property
    def gl_rank(self) -> int:
        return 2 * self.a if self.kind is GLKind.SPEH else self.a


@dataclass(frozen=True)
class ZeroPacket:
    """The packet is empty; ``reason`` says which existence condition failed."""

    reason: str


@dataclass(frozen=True)
class InductionDatum:
    """Parabolic induction from ``gl_blocks`` and a good-parity packet of ``inner_group``.

    For unitary groups ``inner_group`` is a signature ``(p_bp, q_bp)`` and
    ``inner_param`` a :class:`GoodParityParam`; for classical groups it is a
    :class:`ClassicalGroupKind` and ``inner_param`` the good-parity factors.
    """

    gl_blocks: Tuple[Union[GLBlockU, GLBlockClassical], ...]
    inner_group: Union[Tuple[int, int], ClassicalGroupKind]
    inner_param: Union[GoodParityParam, Tuple[ClassicalFactor, ...]]
    irreducible_claim: bool = True

    @cached_property
    def inner_packet(self) -> Packet:
        if not isinstance(self.inner_param, GoodParityParam):
            raise TypeError("only the unitary reduction carries a computable inner packet")
        p_bp, q_bp = self.inner_group
        return build_packet(self.inner_param, p_bp, q_bp)

    @property
    def gl_rank(self) -> int:
        return sum(b.gl_rank for b in self.gl_blocks)


def reduce_unitary(psi: UnitaryParameter) -> Union[ZeroPacket, InductionDatum]:
    split = split_parity(psi)
    if min(psi.p, psi.q) < split.a_mp:
        return ZeroPacket(f"min(p, q) = {min(psi.p, psi.q)} < a_mp = {split.a_mp}")
    blocks = tuple(GLBlockU(f.t, f.nu, f.a) for f in split.eprime)
    inner = split.good.rebased(split.N_bp)
    return InductionDatum(blocks, (psi.p - split.a_mp, psi.q - split.a_mp), inner)


def component_group_transfer(psi: UnitaryParameter) -> ComponentGroup:
    """A(psi), read off the good-parity part alone."""
    return component_group(split_parity(psi).good)


def _gl_block(f: ClassicalFactor) -> GLBlockClassical:
    if f.kind is FactorKind.DELTA:
        return GLBlockClassical(GLKind.SPEH, f.nu, f.a, t=f.t)
    return GLBlockClassical(GLKind.CHARACTER_DET, f.nu, f.a, eps=f.eps)


def reduce_classical(
    factors: Sequence[ClassicalFactor], g: ClassicalGroupKind
) -> Union[ZeroPacket, InductionDatum]:
    """Reduce a parameter of Sp(2n, R) or SO(p, q) to its good-parity part.

    Raises :class:`UnpairedBadFactor` when the bad part is not rho + rho^*.
    """
    total = sum(f.dim for f in factors)
    if total != g.std_dim:
        raise DimensionMismatch(total, g.std_dim)
    rho, good = pair_bad_part(factors, g)
    blocks = tuple(_gl_block(f) for f in rho)
    n_rho = sum(b.gl_rank for b in blocks)
    if not g.is_symplectic and min(g.p, g.q) < n_rho:
        return ZeroPacket(f"min(p, q) = {min(g.p, g.q)} < N_rho = {n_rho}")
    return InductionDatum(blocks, g.shrink(n_rho), good)


def rho_sharp(rho: Sequence[ClassicalFactor]) -> Tuple[ClassicalFactor, ...]:
    """Replace each eta factor by delta_{0, i nu} (x) R[a], the sum eta_eps + eta_{-eps}."""
    out = []
    for f in rho:
        if f.kind is FactorKind.ETA:
            out.append(ClassicalFactor.delta(0, f.nu, f.a))
        else:
            out.append(f)
    return tuple(out)


def delta_u_twist(N: int, N_rho_prime: int, N0: int, g: ClassicalGroupKind) -> Tuple[Fraction, ...]:
    """Half-sum twist: N - N'_rho - 1/2 + eps_G on the first 2 N'_rho coordinates, then N0 zeros."""
    if N != N0 + 2 * N_rho_prime:
        raise ValueError(f"N = {N} differs from N0 + 2 N'_rho = {N0 + 2 * N_rho_prime}")
    value = N - N_rho_prime - Fraction(1, 2) + g.epsG
    return (value,) * (2 * N_rho_prime) + (Fraction(0),) * N0


def parity_shift_check(f: ClassicalFactor, N: int, N_rho_prime: int, g: ClassicalGroupKind) -> bool:
    """Whether the shifted delta block is of bad parity for U(N'_rho, N'_rho).

    Evaluates (t + a - 1)/2 + N - N'_rho - 1/2 + eps_G + (2 N'_rho - 1)/2 and
    tests membership in (1/2)Z minus Z. True for every bad-parity input.
    """
    if f.kind is not FactorKind.DELTA or f.nu != 0:
        raise ValueError("parity shift applies to delta factors with nu = 0")
    x = (
        Fraction(f.t + f.a - 1, 2)
        + N
        - N_rho_prime
        - Fraction(1, 2)
        + g.epsG
        + Fraction(2 * N_rho_prime - 1, 2)
    )
    return x.denominator == 2


def inf_char_blocks(pairs: Sequence[Pair]) -> Tuple[Fraction, ...]:
    """Multiset of (t + a - 1 - 2k)/2, k < a, over all pairs; sorted descending."""
    out = []
    for t, a in pairs:
        out += [Fraction(t + a - 1 - 2 * k, 2) for k in range(a)]
    return tuple(sorted(out, reverse=True))
