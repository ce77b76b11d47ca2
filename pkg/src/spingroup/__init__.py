"""Numerical Dirac algebra for the spin group of a moving spin-1/2 fermion.

The spin group is the one-parameter subgroup of the Wigner little group of a
massive momentum that is generated by the fermion's own spin tensor. Its
elements keep both the 4-momentum and the spin projection operator fixed and
split into a rotation about the boosted spin axis plus a boost perpendicular
to it.
"""

__version__ = "0.1.0"

from .clifford import (
    ConvergenceError,
    GammaBasis,
    basis,
    beta_from_half_rapidity,
    build_gamma_basis,
    exp_boost_closed,
    exp_rotation_closed,
    exp_series,
    half_rapidity_from_beta,
    max_abs,
    slash,
    vector_rep,
)
from .spin_tensor import (
    FourMomentum,
    RestSpinAxis,
    SpinTensor,
    boost_spin_axis,
    generator,
    momentum_boost,
    momentum_spin_contraction,
    pauli_lubanski,
    slash_spin_commutator,
    spin_operator,
    spin_tensor_by_conjugation,
)
from .bispinor import (
    boost_bispinor,
    dirac_residual,
    extract_phase,
    rest_bispinor,
    spin_eigen_residual,
)
from .little_group import (
    AxisTensor,
    Factorization,
    FactorizationError,
    LittleGroupElement,
    angle_from_rotation_factor,
    axis_tensor,
    boost_factor_closed,
    boost_speed,
    boost_speed_variants,
    boost_vector,
    closure_check,
    element,
    factor,
    momentum_residual,
    p_perp,
    polar_factor,
    rotation_angle,
    rotation_factor_closed,
    spin_conjugation_residual,
    spin_group_element,
)
