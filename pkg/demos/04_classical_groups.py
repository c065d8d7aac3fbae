"""
Reduction for symplectic and orthogonal groups
==============================================

Factors are delta_{t, nu} (x) R[a] and eta_{eps, nu} (x) R[a]. Which ones
are bad depends on the dual group: b = t + a - 1 (or a - 1) is bad when odd
for a dual SO and when even for a dual Sp.
"""

from fractions import Fraction

from apacket import ClassicalFactor, ClassicalGroupKind, classify_parity_classical, reduce_classical, rho_sharp
from apacket.reduce import delta_u_twist, parity_shift_check

g = ClassicalGroupKind.symplectic(4)
rho = ClassicalFactor.delta(2, 0, 2)
factors = [rho, rho, ClassicalFactor.eta(1, 0, 1)]
for f in factors:
    print(f, classify_parity_classical(f, g).value)

# the doubled delta becomes a Speh block of GL(4, R); Sp(8, R) shrinks to Sp(0, R)
datum = reduce_classical(factors, g)
print([(b.kind.value, b.gl_rank) for b in datum.gl_blocks], datum.inner_group)

# eta factors in the bad part become delta_{0, nu}, still of bad parity
print([str(f) for f in rho_sharp([ClassicalFactor.eta(1, 0, 3)])])

# the twist by delta(u) and the shifted parity test of the unitary reduction
print([str(x) for x in delta_u_twist(3, 1, 1, ClassicalGroupKind.symplectic(3))])
print(parity_shift_check(rho, 3, 1, ClassicalGroupKind.symplectic(3)))

# an orthogonal group with a compact side cannot host a GL factor
so = ClassicalGroupKind.special_orthogonal(3, 0)
pair = [ClassicalFactor.eta(1, Fraction(1, 2), 1), ClassicalFactor.eta(1, Fraction(-1, 2), 1)]
print(reduce_classical(pair, so))
