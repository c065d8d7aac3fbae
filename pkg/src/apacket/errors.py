"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class ParameterError(ValueError):
    """An Arthur parameter failed validation."""


class DimensionMismatch(ParameterError):
    def __init__(self, total: int, expected: int):
        self.total = total
        self.expected = expected
        super().__init__(f"factor dimensions sum to {total}, expected {expected}")


class UnpairedBadFactor(ParameterError):
    """A bad-parity factor has no conjugate-dual partner of equal multiplicity."""

    def __init__(self, factor, detail: str = ""):
        self.factor = factor
        msg = f"unpaired bad-parity factor {factor}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class SignatureMismatch(ValueError):
    def __init__(self, blocks, p: int, q: int):
        self.blocks = blocks
        self.p = p
        self.q = q
        super().__init__(f"blocks {list(blocks)} do not sum to signature ({p}, {q})")


class NonIntegralExponent(ValueError):
    """t + a - N is odd for some block, so the inducing character is undefined."""
