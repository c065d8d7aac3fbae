"""
Theta-stable parabolics of U(p, q)
==================================

A decomposition d = ((p_1, q_1), ...) of the signature picks a c-Levi
subgroup U(p_1, q_1) x ... . The nilradical v_d is spanned by the roots that
are positive on the vector t_d; S counts its compact roots.
"""

from apacket import levi_data, roots_of_l, t_vector
from apacket.rootdata import degree_and_dim

d = ((1, 0), (1, 1))
print("t_d =", t_vector(d))

# the roots of U(2, 1), and their values on t_d
for r in roots_of_l(2, 1):
    print(r.coeffs, "compact" if r.compact else "noncompact", r.pair(t_vector(d)))

ld = levi_data(d, 2, 1)
print("delta(l_pq) =", [str(x) for x in ld.delta_l_pq])
print("delta(l_d)  =", [str(x) for x in ld.delta_l_d])
print("delta(v_d)  =", [str(x) for x in ld.delta_v_d])
print("S =", ld.S, " dim v =", ld.dim_v)

# for longer decompositions, S and dim v come from closed forms
print(degree_and_dim(((2, 1), (0, 2), (1, 1))))
