"""
Spin tensor of a moving fermion
===============================

The rest-frame spin axis becomes an antisymmetric tensor once the particle
moves. Its vector part ``s1`` and pseudovector part ``s2`` behave like the
electric and magnetic parts of a field tensor.
"""

import numpy as np

import spingroup as sg

p = sg.FourMomentum([1.0, 0.5, 0.0], m=1.0)
axis = [0.0, 0.0, 1.0]
s = sg.boost_spin_axis(p, axis)
print("s1 =", s.s1)
print("s2 =", s.s2)
print("s1.s2 =", s.orthogonality(), " s2^2 - s1^2 =", s.invariant())

###############################################################################
# The same operator follows from conjugating the rest operator by the boost.

diff = sg.spin_operator(s) - sg.spin_tensor_by_conjugation(p, axis)
print("formula vs conjugation:", np.abs(diff).max())

###############################################################################
# The tensor is transverse to its own momentum, but not to another one.

print("p^a s_ab gamma^b:", np.abs(sg.momentum_spin_contraction(p, s)).max())
q = sg.FourMomentum([0.0, 2.0, 0.0])
print("with a different momentum:", np.abs(sg.momentum_spin_contraction(q, s)).max())

lam = sg.pauli_lubanski(p, s)
print("Pauli-Lubanski:", np.round(lam, 6), " p.lambda =", p.four_vector() @ sg.basis().metric @ lam)

###############################################################################
# The boosted bispinor solves the Dirac equation and is a +1 eigenvector of
# the spin operator.

psi = sg.boost_bispinor(sg.rest_bispinor(axis), p)
print("Dirac residual:", sg.dirac_residual(psi, p))
print("spin eigen residual:", sg.spin_eigen_residual(psi, s))
