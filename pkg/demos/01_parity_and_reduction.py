"""
Good parity, bad parity and the reduction step
==============================================

A parameter for U(p, q) is a list of factors (t, nu, a). Factors with
nu = 0 and t + a - N even are of good parity; everything else has to come
in conjugate-dual pairs and peels off as a character of a GL Levi factor.
"""

from fractions import Fraction

from apacket import UnitaryFactor, classify_parity_unitary, reduce_unitary, split_parity, validate_parameter

# a parameter for U(2, 2): two good factors and one pair with nu = +-1
factors = [
    UnitaryFactor(1, Fraction(0), 1),
    UnitaryFactor(-1, Fraction(0), 1),
    UnitaryFactor(0, Fraction(1), 1),
    UnitaryFactor(0, Fraction(-1), 1),
]
psi = validate_parameter(factors, 2, 2)

for f in psi.factors:
    print(f, classify_parity_unitary(f, psi.N).value)

# the bad part halves into E' and E''; a_mp is the size of one half
split = split_parity(psi)
print("good pairs:", split.good.pairs, " N_bp =", split.N_bp, " a_mp =", split.a_mp)

# reduction: GL(1, C) character times the packet of U(1, 1)
datum = reduce_unitary(psi)
print("GL blocks:", datum.gl_blocks)
print("inner group U%s with %d packet members" % (datum.inner_group, len(datum.inner_packet.entries)))

# the same bad pair does not fit inside the compact group U(2, 0)
two = [UnitaryFactor(0, Fraction(0), 1)] * 2
print(reduce_unitary(validate_parameter(two, 2, 0)))
