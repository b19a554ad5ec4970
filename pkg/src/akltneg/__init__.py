"""Exact entanglement negativity of two blocks in the spin-1 AKLT chain.

The reduced state of two blocks cut from the valence-bond-solid ground
state lives, exactly, in a 16-dimensional edge space spanned by pairs
of boundary-capped block states.  This package builds that operator
for open chains (blocks deep in the bulk or covering a capped finite
chain) and for rings, partially transposes it, and diagonalizes it;
a dense small-chain oracle provides an independent cross-check.
"""

__version__ = "0.1.0"

from .edge_algebra import lambda_weights, z_of
from .edge_rdm import (
    BlockGeometry,
    BoundaryWeights,
    EdgeOperator,
    build_half_boundary,
    build_pbc,
    build_spin1_boundary,
    from_geometry,
    orthonormalize,
    partial_transpose_A,
)
from .spectrum import (
    NegativityResult,
    Spectrum,
    closed_form,
    hermitian_eigenvalues,
    negativity_of,
)

__all__ = [
    "__version__",
    "z_of",
    "lambda_weights",
    "BlockGeometry",
    "BoundaryWeights",
    "EdgeOperator",
    "build_half_boundary",
    "build_spin1_boundary",
    "build_pbc",
    "from_geometry",
    "partial_transpose_A",
    "orthonormalize",
    "Spectrum",
    "NegativityResult",
    "hermitian_eigenvalues",
    "negativity_of",
    "closed_form",
]
