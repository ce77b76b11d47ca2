"""
Sweeping the group parameter
============================

Boost speed repeats every 2 pi. The unwrapped rotation angle gains 2 pi over
the same stretch, and the phase of the bispinor needs 4 pi to come back.
"""

import numpy as np

import spingroup as sg

p = sg.FourMomentum([1.0, 0.5, 0.0])
axis = [0.0, 0.6, 0.8]
t = sg.axis_tensor(p, axis)
psi = sg.boost_bispinor(sg.rest_bispinor(axis), p)

print(f"{'phi/pi':>7} {'2r':>9} {'beta':>9} {'phase':>18}")
for phi in np.linspace(0, 4 * np.pi, 17):
    f = sg.factor(sg.element(t, phi))
    c, _ = sg.extract_phase(f.product(), psi)
    print(f"{phi / np.pi:7.2f} {f.rotation_angle_2r:9.5f} {f.beta:9.5f} {c.real:+8.5f}{c.imag:+8.5f}j")

###############################################################################
# The same table as CSV comes from the command line::
#
#     spingroup sweep --p=1,0.5,0 --spin=0,0.6,0.8 --steps 17
