"""Regenerate the round-trip corpus: ``python tests/data/make_corpus.py``.

Documents are random but seeded, and always written in canonical form.
"""

import pathlib
import random
from fractions import Fraction

from apacket.document import InputDocument, UnitaryGroup, emit_document
from apacket.params import ClassicalFactor, ClassicalGroupKind, UnitaryFactor

OUT = pathlib.Path(__file__).parent / "corpus"
NUS = [Fraction(0)] * 4 + [Fraction(1), Fraction(1, 2), Fraction(3, 4), Fraction(2, 3)]


def unitary(rng):
    factors = []
    for _ in range(rng.randint(1, 4)):
        factors.append(UnitaryFactor(rng.randint(-5, 5), Fraction(0), rng.randint(1, 3)))
    for _ in range(rng.randint(0, 2)):
        f = UnitaryFactor(rng.randint(-3, 3), rng.choice(NUS), rng.randint(1, 2))
        factors += [f, f.conjugate()]
    N = sum(f.a for f in factors)
    # make the nu = 0 factors good parity so the document is a valid parameter
    factors = [f if f.nu or (f.t + f.a - N) % 2 == 0 else UnitaryFactor(f.t + 1, f.nu, f.a) for f in factors]
    p = rng.randint(0, N)
    return InputDocument(UnitaryGroup(p, N - p), tuple(factors))


def classical(rng):
    factors = []
    for _ in range(rng.randint(1, 4)):
        if rng.random() < 0.5:
            factors.append(ClassicalFactor.delta(rng.randint(0, 5), rng.choice(NUS), rng.randint(1, 3)))
        else:
            factors.append(ClassicalFactor.eta(rng.choice((1, -1)), rng.choice(NUS), rng.randint(1, 3)))
    dim = sum(f.dim for f in factors)
    if rng.random() < 0.5:
        if dim % 2 == 0:
            factors.append(ClassicalFactor.eta(1, 0, 1))
            dim += 1
        group = ClassicalGroupKind.symplectic((dim - 1) // 2)
    else:
        p = rng.randint(0, dim)
        group = ClassicalGroupKind.special_orthogonal(p, dim - p)
    return InputDocument(group, tuple(factors))


def main():
    rng = random.Random(20240)
    OUT.mkdir(exist_ok=True)
    for k in range(50):
        doc = unitary(rng) if k < 30 else classical(rng)
        (OUT / f"doc_{k:02d}.json").write_text(emit_document(doc), encoding="utf-8")


if __name__ == "__main__":
    main()
