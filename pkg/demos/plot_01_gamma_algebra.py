"""
Gamma matrices and the Lorentz group
====================================

Build the Dirac matrices, check the Clifford algebra, and turn spinor
boosts and rotations into ordinary 4x4 Lorentz matrices.
"""

import numpy as np

import spingroup as sg

gb = sg.basis()
g = gb.metric

# {gamma^a, gamma^b} = 2 g^{ab}
worst = max(
    np.abs(gb.gamma[a] @ gb.gamma[b] + gb.gamma[b] @ gb.gamma[a] - 2 * g[a, b] * np.eye(4)).max()
    for a in range(4)
    for b in range(4)
)
print("anticommutator residual:", worst)

###############################################################################
# sigma^{ab} carries no factor of i here, so the boost generators sigma^{0k}
# are Hermitian and the rotation generators sigma^{kl} are anti-Hermitian.

print("sigma^01 Hermitian:", np.allclose(gb.sigma[0, 1], gb.sigma[0, 1].conj().T))
print("sigma^12 anti-Hermitian:", np.allclose(gb.sigma[1, 2], -gb.sigma[1, 2].conj().T))

###############################################################################
# A spinor boost with half-rapidity b moves a particle at speed tanh(2b).

beta = 0.6
b = sg.half_rapidity_from_beta(beta)
s = sg.exp_boost_closed([1.0, 0.0, 0.0], b)
lam = sg.vector_rep(s)
print(np.round(lam, 6))
print("rest momentum goes to", lam @ np.array([1.0, 0, 0, 0]))

# the closed form agrees with the power series
print("series vs closed:", np.abs(sg.exp_series(b * gb.sigma[0, 1]) - s).max())

###############################################################################
# A rotation by 2 pi is -1 on spinors but the identity on vectors.

r = sg.exp_rotation_closed([0, 0, 1.0], 2 * np.pi)
print("spinor:", np.round(np.diag(r).real, 12))
print("vector:", np.round(np.diag(sg.vector_rep(r)), 12))
