"""Eigenvalue spectra, negativity, and closed-form reference values."""

import math
from dataclasses import dataclass

import numpy as np

from . import edge_algebra as ea
from . import edge_rdm
from ._kernel import BACKEND, jacobi_eigh

__all__ = [
    "BACKEND",
    "NEGATIVE_EIGENVALUE_THRESHOLD",
    "Spectrum",
    "NegativityResult",
    "hermitian_eigenvalues",
    "negativity_from_eigenvalues",
    "negativity_of",
    "closed_form",
]

# Eigenvalues above this are treated as solver noise around zero; sized
# for double-precision rotations on trace-1 matrices of dimension <= 1024.
NEGATIVE_EIGENVALUE_THRESHOLD = -1e-12

_MAX_DIM = 1024


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues in ascending order."""

    eigenvalues: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.eigenvalues, dtype=float).reshape(-1)
        w.flags.writeable = False
        object.__setattr__(self, "eigenvalues", w)

    @property
    def trace(self):
        return float(self.eigenvalues.sum())

    @property
    def minimum(self):
        return float(self.eigenvalues[0])


@dataclass(frozen=True)
class NegativityResult:
    """Negativity of a partially transposed two-block state.

    negativity is the magnitude of the summed negative part of the
    spectrum, sum |min(e, 0)|.
    """

    negativity: float
    spectrum: Spectrum
    geometry: edge_rdm.BlockGeometry | None = None
    weights_label: str | None = None


def hermitian_eigenvalues(matrix, tol=1e-10):
    """Full spectrum of a Hermitian matrix via cyclic plane rotations.

    Rejects non-Hermitian input; the error reports the largest
    asymmetry |H - H*|.  Dimension is capped at 1024.
    """
    h = np.asarray(matrix, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    n = h.shape[0]
    if n > _MAX_DIM:
        raise ValueError(f"matrix dimension {n} exceeds the cap of {_MAX_DIM}")
    asym = float(np.max(np.abs(h - h.conj().T)))
    scale = max(1.0, float(np.max(np.abs(h))))
    if asym > tol * scale:
        raise ValueError(f"matrix is not Hermitian: max asymmetry {asym:.3e}")
    w, _ = jacobi_eigh(h)
    return Spectrum(w)


def negativity_from_eigenvalues(eigenvalues):
    """Magnitude of the summed negative spectrum."""
    w = np.asarray(eigenvalues, dtype=float)
    return float(-w[w < NEGATIVE_EIGENVALUE_THRESHOLD].sum() + 0.0)


def negativity_of(geometry, weights=None):
    """Negativity of blocks A and B: build, partially transpose A,
    apply Gram weights, diagonalize, sum the negative part."""
    op = edge_rdm.from_geometry(geometry, weights)
    h = edge_rdm.orthonormalize(edge_rdm.partial_transpose_A(op))
    spec = hermitian_eigenvalues(h)
    label = weights.label if isinstance(weights, edge_rdm.BoundaryWeights) else None
    return NegativityResult(
        negativity=negativity_from_eigenvalues(spec.eigenvalues),
        spectrum=spec,
        geometry=geometry,
        weights_label=label,
    )


def _kind_key(kind):
    return str(kind).replace("_", "").replace("-", "").lower()


def closed_form(kind, **params):
    """Reference negativity values in closed form.

    Kinds (lengths in sites; decay factors computed internally):

    * "half_adjacent"(l_a, l_b): adjacent blocks deep in an open chain,
      leading large-block behavior 1/2 - (3/4)(z_A^2 + z_B^2).
    * "spin1_limit"(l): two big blocks covering a capped chain,
      3/2 for a touching pair (l = 0), 1/2 once separated.
    * "semi_infinite"(l): one infinite block against a single site at
      separation l, (1/24)(3 sqrt(9 - 10z + 17z^2) + 5z - 1).
    * "separable_adjacent"(l_a, l_b, c, d): adjacent blocks on a chain
      capped with the product weights labeled by (c, d),
      sqrt(1 + z_A^2 z_B^2 - z_A^2 - z_B^2) / (2 - 2 phi z_A z_B) with
      phi = +1 if c = d else -1.
    """
    key = _kind_key(kind)
    if key == "halfadjacent":
        z_a = ea.z_of(params.pop("l_a"))
        z_b = ea.z_of(params.pop("l_b"))
        value = 0.5 - 0.75 * (z_a * z_a + z_b * z_b)
    elif key == "spin1limit":
        l = params.pop("l")
        _check = ea.z_of(l)
        value = 1.5 if l == 0 else 0.5
    elif key == "semiinfinite":
        z = ea.z_of(params.pop("l"))
        value = (3.0 * math.sqrt(9.0 - 10.0 * z + 17.0 * z * z) + 5.0 * z - 1.0) / 24.0
    elif key == "separableadjacent":
        z_a = ea.z_of(params.pop("l_a"))
        z_b = ea.z_of(params.pop("l_b"))
        phi = 1.0 if params.pop("c") == params.pop("d") else -1.0
        num = math.sqrt(1.0 + z_a * z_a * z_b * z_b - z_a * z_a - z_b * z_b)
        value = num / (2.0 - 2.0 * phi * z_a * z_b)
    else:
        raise ValueError(f"unknown closed form kind {kind!r}")
    if params:
        raise TypeError(f"unexpected parameters for {kind!r}: {sorted(params)}")
    return float(value)
