"""
Packets of good-parity parameters
=================================

For canonically ordered pairs (t_i, a_i) the packet is indexed by the ways
to split each a_i as p_i + q_i with sum p_i = p. Each member carries the
exponents lambda_i, the degree S and a sign character of the component group.
"""

from apacket import GoodParityParam, build_packet, eta_decomposition

# good range: every member is nonzero and every sign vector is a character
psi = GoodParityParam.from_pairs([(4, 1), (2, 1), (0, 1)])
pkt = build_packet(psi, 2, 1)
print(pkt.range.value)
for e in pkt.entries:
    print(e.d, e.lambda_.exponents, e.S, e.epsilon, e.status.value)

# members grouped by character; here each character has at most one
for char, members in eta_decomposition(pkt).items():
    print(char, [str(e.d) for e in members])

# two equal blocks: the component group shrinks, and the screen removes
# the member of U(2, 0) while U(1, 1) keeps two candidates
psi = GoodParityParam.from_pairs([(1, 1), (1, 1)])
print(pkt.component_group.classes, "->", build_packet(psi, 1, 1).component_group.classes)
for p, q in ((2, 0), (1, 1)):
    print((p, q), [(str(e.d), e.status.value, e.character) for e in build_packet(psi, p, q).entries])
