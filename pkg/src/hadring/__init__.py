"""Hadamard matrices over characteristic-2 rings.

Block matrices over the Hadamard ring H_k(R), machine checks of
q(M)^2 = 0, the group-algebra picture of H_k(R), and invariant-subspace
diagnostics for Cauchy linear layers.
"""
from hadring._core import BACKEND
from hadring.conjecture import (
    block_matrix,
    diagram_check,
    flatten,
    kernel_power_nilpotency,
    lambda_projection,
    det_projection,
    tensor_decompose,
    verify_conjecture,
)
from hadring.group_algebra import (
    GroupAlgebraElement,
    MultilinearPoly,
    ga_augmentation,
    ga_from_hadamard,
    ga_ideal_product,
    ga_mul,
    ga_to_hadamard,
    ga_to_polyrep,
    ga_from_polyrep,
)
from hadring.hadamard import (
    HadamardMatrix,
    HadamardRing,
    had_add,
    had_decompose,
    had_det,
    had_eigenvalue,
    had_expand,
    had_from_full,
    had_kron_basis,
    had_mul,
)
from hadring.matrix import (
    RingMatrix,
    RingPolynomial,
    cayley_hamilton_check,
    charpoly_berkowitz,
    charpoly_minors_oracle,
    frobenius_eval_check,
    mat_det,
    poly_eval_at_matrix,
)
from hadring.rings import GF, RingElement, RingSpec, ring_add, ring_inverse, ring_make, ring_mul, ring_sample, trial_rng
from hadring.starkad import (
    CauchySpec,
    InvariantReport,
    analyze,
    block_hadamard_detect,
    cauchy_build,
    minimal_poly_field,
    power_dependency_degree,
    starkad_like_spec,
)

__version__ = "0.1.0"
