"""Dense small-chain ground truth for the edge-basis pipeline.

Builds the valence-bond-solid state explicitly in the full physical
Hilbert space (two virtual spin-1/2 per site, per-bond singlets,
on-site symmetrization), takes literal partial traces and partial
transposes, and diagonalizes with LAPACK.  Everything here is
independent of the edge-cap algebra, so agreement between the two
routes validates both.

Basis conventions (fixtures depend on them): site-major ordering,
spin-1 states ordered (+1, 0, -1), spin-1/2 states ordered (up, down).
"""

from dataclasses import dataclass

import numpy as np

from . import edge_algebra as ea
from .edge_rdm import BlockGeometry, BoundaryWeights

MAX_SITES = 10
MAX_HAMILTONIAN_SITES = 6
MAX_GRAM_SITES = 8

# Symmetrizer P[m, l, r]: spin-1 state m from two virtual qubits l, r.
_P3 = np.zeros((3, 2, 2), dtype=complex)
_P3[0, 0, 0] = 1.0
_P3[1, 0, 1] = _P3[1, 1, 0] = 2**-0.5
_P3[2, 1, 1] = 1.0


@dataclass(frozen=True)
class VbsState:
    """Normalized dense state vector with per-site dimensions."""

    amplitudes: np.ndarray
    site_dims: tuple

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        dims = tuple(int(d) for d in self.site_dims)
        if amps.size != int(np.prod(dims)):
            raise ValueError("amplitude count does not match site dimensions")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "site_dims", dims)


@dataclass(frozen=True)
class DenseOperator:
    """Dense two-block operator with its (d_A, d_B) factorization."""

    matrix: np.ndarray
    dims: tuple

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        d_a, d_b = (int(d) for d in self.dims)
        if m.shape != (d_a * d_b, d_a * d_b):
            raise ValueError(f"matrix shape {m.shape} does not match dims {self.dims}")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", (d_a, d_b))


def _chain_tensor(n):
    """Open-chain transfer tensor W[l, phys, r] over n spin-1 sites."""
    w = np.zeros((2, 1, 2), dtype=complex)
    w[0, 0, 0] = w[1, 0, 1] = 1.0
    for k in range(n):
        if k > 0:
            w = np.einsum("xpa,ab->xpb", w, ea.BOND)
        w = np.einsum("xpa,mab->xpmb", w, _P3).reshape(2, -1, 2)
    return w


def _check_cap(n_sites):
    if n_sites > MAX_SITES:
        raise ValueError(
            f"{n_sites} spin-1 sites exceed the dense-state cap of {MAX_SITES}"
        )


def build_vbs(mode, n_sites, weights=None):
    """Dense valence-bond-solid state over n_sites spin-1 sites.

    * "half": the chain keeps its two virtual end spins as physical
      spin-1/2 sites, giving site dimensions (2, 3, ..., 3, 2).
    * "spin1": the two end virtual spins are contracted with the cap
      sum_mu w_mu tau_mu (weights required).
    * "pbc": the ends are closed into a ring by one more singlet bond.
    """
    n = int(n_sites)
    if n < 1:
        raise ValueError("need at least one spin-1 site")
    _check_cap(n)
    w_tensor = _chain_tensor(n)
    if mode == "half":
        if weights is not None:
            raise ValueError("boundary weights only apply to spin1 mode")
        psi = np.einsum("xa,apb,by->xpy", ea.BOND, w_tensor, ea.BOND).reshape(-1)
        dims = (2,) + (3,) * n + (2,)
    elif mode == "spin1":
        if weights is None:
            raise ValueError("spin1 mode requires boundary weights")
        if not isinstance(weights, BoundaryWeights):
            weights = BoundaryWeights(np.asarray(weights, dtype=complex))
        cap = np.einsum("m,mab->ab", weights.vec, ea.CAP)
        psi = np.einsum("xy,xpy->p", cap, w_tensor)
        dims = (3,) * n
    elif mode == "pbc":
        if weights is not None:
            raise ValueError("boundary weights only apply to spin1 mode")
        psi = np.einsum("xpy,yx->p", w_tensor, ea.BOND)
        dims = (3,) * n
    else:
        raise ValueError(f"unknown mode {mode!r}")
    norm = np.linalg.norm(psi)
    if norm < 1e-12:
        raise ValueError("degenerate boundary closure produced the zero state")
    return VbsState(psi / norm, dims)


def total_sz_support(state, tol=1e-12):
    """Distinct values of 2*S^z_total carried by nonzero amplitudes."""
    two_sz = {2: np.array([1, -1]), 3: np.array([2, 0, -2])}
    total = np.zeros(1, dtype=int)
    for d in state.site_dims:
        total = (total[:, None] + two_sz[d][None, :]).reshape(-1)
    mask = np.abs(state.amplitudes) > tol
    return tuple(sorted(set(total[mask].tolist())))


def reduce(state, sites_a, sites_b):
    """Reduced density operator of two disjoint site sets, trace 1."""
    sites_a = list(sites_a)
    sites_b = list(sites_b)
    if set(sites_a) & set(sites_b):
        raise ValueError("blocks A and B must be disjoint site sets")
    dims = state.site_dims
    n = len(dims)
    for i in sites_a + sites_b:
        if not 0 <= i < n:
            raise ValueError(f"site index {i} out of range for {n} sites")
    rest = [i for i in range(n) if i not in sites_a and i not in sites_b]
    t = state.amplitudes.reshape(dims).transpose(sites_a + sites_b + rest)
    d_a = int(np.prod([dims[i] for i in sites_a], dtype=int))
    d_b = int(np.prod([dims[i] for i in sites_b], dtype=int))
    m = t.reshape(d_a * d_b, -1)
    rho = m @ m.conj().T
    return DenseOperator(rho / np.trace(rho).real, (d_a, d_b))


def dense_partial_transpose(op):
    """Transpose the A factor: rho[a b, a' b'] -> rho[a' b, a b']."""
    d_a, d_b = op.dims
    m = (
        op.matrix.reshape(d_a, d_b, d_a, d_b)
        .transpose(2, 1, 0, 3)
        .reshape(d_a * d_b, d_a * d_b)
    )
    return DenseOperator(m, op.dims)


def dense_spectrum(op):
    """Ascending eigenvalues, LAPACK route (independent of the edge
    pipeline's rotation solver)."""
    return np.linalg.eigvalsh(op.matrix)


def _geometry_sites(geometry):
    """(mode, n_sites, indices of A, indices of B) for a BlockGeometry;
    half-mode indices are offset by the leading spin-1/2 site."""
    g = geometry
    if g.mode == "half":
        n = g.l_left + g.l_a + g.l_gap + g.l_b + g.l_right
        a0 = 1 + g.l_left
        b0 = a0 + g.l_a + g.l_gap
    elif g.mode == "spin1":
        n = g.l_a + g.l_gap + g.l_b
        a0 = 0
        b0 = g.l_a + g.l_gap
    elif g.mode == "pbc":
        n = g.l_gap + g.l_a + g.l_sep2 + g.l_b
        a0 = g.l_gap
        b0 = g.l_gap + g.l_a + g.l_sep2
    else:
        raise ValueError(f"unknown mode {geometry.mode!r}")
    sites_a = list(range(a0, a0 + g.l_a))
    sites_b = list(range(b0, b0 + g.l_b))
    return g.mode, n, sites_a, sites_b


def oracle_negativity(geometry, weights=None):
    """Dense-route negativity and partial-transpose spectrum of a
    geometry; returns (negativity, ascending eigenvalues)."""
    mode, n, sites_a, sites_b = _geometry_sites(geometry)
    state = build_vbs(mode, n, weights if mode == "spin1" else None)
    rho = reduce(state, sites_a, sites_b)
    ev = dense_spectrum(dense_partial_transpose(rho))
    neg = float(-ev[ev < -1e-12].sum() + 0.0)
    return neg, ev


def padded_spectrum_gap(ev_a, ev_b):
    """Largest elementwise gap between two ascending spectra after
    zero-padding the shorter one (inert channels carry eigenvalue 0)."""
    a = np.asarray(ev_a, dtype=float)
    b = np.asarray(ev_b, dtype=float)
    n = max(a.size, b.size)
    a = np.sort(np.concatenate([a, np.zeros(n - a.size)]))
    b = np.sort(np.concatenate([b, np.zeros(n - b.size)]))
    return float(np.abs(a - b).max())


@dataclass(frozen=True)
class GramReport:
    """Measured overlaps of the four cap states of an n-site block."""

    n_sites: int
    weights: np.ndarray
    max_abs_dev: float
    passed: bool


def gram_check(n_block, tol=1e-12):
    """Overlap matrix of the tau-capped block states.

    Must be diagonal with entries proportional to lambda_mu(z(L));
    the report carries the normalized weights and the largest deviation
    from that model.
    """
    n = int(n_block)
    if not 1 <= n <= MAX_GRAM_SITES:
        raise ValueError(f"block length must be 1..{MAX_GRAM_SITES}, got {n}")
    w_tensor = _chain_tensor(n)
    capped = np.einsum("mab,apb->mp", ea.CAP, w_tensor)
    gram = capped @ capped.conj().T
    scale = np.trace(gram).real
    model = np.diag(ea.lambda_weights(ea.z_of(n))) * scale
    dev = float(np.max(np.abs(gram - model)))
    return GramReport(
        n_sites=n,
        weights=np.diag(gram).real / scale,
        max_abs_dev=dev,
        passed=dev <= tol * scale,
    )


_S1Z = np.diag([1.0, 0.0, -1.0]).astype(complex)
_S1P = np.sqrt(2.0) * np.diag([1.0, 1.0], k=1).astype(complex)
_SPIN1 = (
    (_S1P + _S1P.conj().T) / 2.0,
    (_S1P - _S1P.conj().T) / 2.0j,
    _S1Z,
)
_SPIN_HALF = tuple(p / 2.0 for p in ea.PAULI[1:])


def _pair_projector_spin2():
    """Projector onto total spin 2 of two spin-1 sites."""
    ss = sum(np.kron(a, a) for a in _SPIN1)
    return (3.0 * ss + ss @ ss + 2.0 * np.eye(9)) / 6.0


def _boundary_projector(qubit_first):
    """Projector onto total spin 3/2 of a (spin-1/2, spin-1) pair."""
    if qubit_first:
        ss = sum(np.kron(a, b) for a, b in zip(_SPIN_HALF, _SPIN1))
    else:
        ss = sum(np.kron(b, a) for a, b in zip(_SPIN_HALF, _SPIN1))
    return (2.0 / 3.0) * (np.eye(6) + ss)


def _embed_pair(op, dims, i, j):
    """Two-site operator on sites (i, j) embedded in the full space."""
    n = len(dims)
    rest = [k for k in range(n) if k not in (i, j)]
    d_rest = int(np.prod([dims[k] for k in rest], dtype=int)) if rest else 1
    big = np.kron(op, np.eye(d_rest))
    order = [i, j] + rest
    inv = list(np.argsort(order))
    shape = [dims[k] for k in order]
    t = big.reshape(shape + shape)
    perm = inv + [n + k for k in inv]
    d_tot = int(np.prod(dims, dtype=int))
    return t.transpose(perm).reshape(d_tot, d_tot)


@dataclass(frozen=True)
class HamiltonianReport:
    """Annihilation and ground-space data for one chain Hamiltonian."""

    mode: str
    n_sites: int
    residual: float
    min_eigenvalue: float
    null_dim: int
    expected_null_dim: int
    passed: bool


def hamiltonian_check(mode, n_sites, weights=None):
    """Verify the dense state against its parent Hamiltonian.

    H sums spin-2 projectors on nearest-neighbor spin-1 pairs, plus
    spin-3/2 projectors on the (end spin-1/2, spin-1) pairs in half
    mode, plus the wrap-around pair in pbc mode.  Asserted: H psi = 0,
    H is positive semidefinite, and the null-space dimension is 4 in
    spin1 mode (one state per cap channel) and 1 otherwise.
    """
    n = int(n_sites)
    if n > MAX_HAMILTONIAN_SITES:
        raise ValueError(
            f"{n} sites exceed the Hamiltonian-check cap of {MAX_HAMILTONIAN_SITES}"
        )
    if mode == "spin1" and weights is None:
        weights = BoundaryWeights.basis_state(0)
    state = build_vbs(mode, n, weights if mode == "spin1" else None)
    dims = list(state.site_dims)
    d_tot = int(np.prod(dims, dtype=int))
    h = np.zeros((d_tot, d_tot), dtype=complex)
    p2 = _pair_projector_spin2()
    if mode == "half":
        h += _embed_pair(_boundary_projector(qubit_first=True), dims, 0, 1)
        h += _embed_pair(_boundary_projector(qubit_first=False), dims, n, n + 1)
        for i in range(1, n):
            h += _embed_pair(p2, dims, i, i + 1)
    elif mode == "spin1":
        for i in range(n - 1):
            h += _embed_pair(p2, dims, i, i + 1)
    elif mode == "pbc":
        if n < 3:
            raise ValueError("a ring needs at least 3 sites")
        for i in range(n):
            h += _embed_pair(p2, dims, i, (i + 1) % n)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    residual = float(np.linalg.norm(h @ state.amplitudes))
    ev = np.linalg.eigvalsh(h)
    null_dim = int(np.sum(ev < 1e-8))
    expected = 4 if mode == "spin1" else 1
    passed = residual <= 1e-10 and ev[0] >= -1e-10 and null_dim == expected
    return HamiltonianReport(
        mode=mode,
        n_sites=n,
        residual=residual,
        min_eigenvalue=float(ev[0]),
        null_dim=null_dim,
        expected_null_dim=expected,
        passed=passed,
    )
