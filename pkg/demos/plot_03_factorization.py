"""
Splitting a spin-group element into a boost and a rotation
==========================================================

Every element of the spin group keeps the momentum fixed. Written as a boost
times a rotation, the boost is non-trivial as soon as the particle moves.
"""

import numpy as np

import spingroup as sg

p = sg.FourMomentum([1.0, 0.0, 0.0])
axis = [0.0, 0.0, 1.0]
phi = np.pi / 2

el = sg.spin_group_element(p, axis, phi)
print("momentum kept:", np.allclose(sg.vector_rep(el.W) @ p.four_vector(), p.four_vector()))

f = sg.factor(el, order="br")
print("rotation angle 2r =", f.rotation_angle_2r, "expected", 2 * np.arctan(np.sqrt(2)))
print("|u| =", f.boost_param, " beta =", f.beta)
print("boost direction:", f.boost_direction)

###############################################################################
# The closed-form factors coincide with a numerical polar decomposition.

g = sg.polar_factor(el, order="br")
print("boost vs polar:", np.abs(f.boost_factor - g.boost_factor).max())
print("rotation vs polar:", np.abs(f.rotation_factor - g.rotation_factor).max())

###############################################################################
# In the other order the rotation is the same, the boost changes direction
# but not speed.

f2 = sg.factor(el, order="rb")
print("same rotation:", np.abs(f.rotation_factor - f2.rotation_factor).max())
print("speeds:", f.beta, f2.beta, " directions:", f.boost_direction, f2.boost_direction)

###############################################################################
# The bispinor of the particle only picks up a phase.

psi = sg.boost_bispinor(sg.rest_bispinor(axis), p)
c, r = sg.extract_phase(el.W, psi)
print("phase", c, "expected", np.exp(-0.5j * phi), "eigen residual", r)
