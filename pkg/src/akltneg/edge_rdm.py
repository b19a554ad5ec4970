"""Reduced density operators of two blocks in the AKLT chain, in the
edge-cap basis.

Tracing out everything but two blocks A and B leaves a mixed state that
acts on the 4x4-dimensional space spanned by tau-capped block states
|mu>_A x |rho>_B.  Its coefficient tensor C[mu, rho, alpha, beta] is a
16x16 matrix over the (cap of A, cap of B) pairs; together with the
Gram weights of the non-orthonormal cap basis it reproduces the exact
spectrum of the reduced density matrix and of its partial transpose.

Three geometries are supported:

* "half":  ... C | A | gap | B | E ...  on an open chain, the blocks
           separated by a gap of L sites and flanked by environments.
* "spin1": A | gap | B is the whole open chain, its two physical ends
           closed by a boundary cap with complex weights w_mu.
* "pbc":   a ring C1 | A | C2 | B with both separating arcs traced.
"""

from dataclasses import dataclass

import numpy as np

from . import edge_algebra as ea

_M = ea.m_tensor()
_GV = ea.METRIC_SIGNS

MODES = ("half", "spin1", "pbc")

_WEIGHT_LABELS = {
    "beta0": (1.0, 0.0, 0.0, 0.0),
    "beta1": (0.0, 1.0, 0.0, 0.0),
    "beta2": (0.0, 0.0, 1.0, 0.0),
    "beta3": (0.0, 0.0, 0.0, 1.0),
    "cc": (2**-0.5, 0.0, 0.0, 2**-0.5),
    "dd": (2**-0.5, 0.0, 0.0, -(2**-0.5)),
    "cd": (0.0, 2**-0.5, -1j * 2**-0.5, 0.0),
    "dc": (0.0, 2**-0.5, 1j * 2**-0.5, 0.0),
}


def _check_length(name, value, minimum=0):
    if value != int(value) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


@dataclass(frozen=True)
class BlockGeometry:
    """Placement of the two kept blocks; lengths count spin-1 sites.

    l_left / l_right are the open-chain environments (half mode only),
    l_gap the separation between A and B (half and spin1 modes), l_sep2
    the second separating arc of a ring (pbc mode, where l_gap is the
    first arc).
    """

    mode: str
    l_a: int
    l_b: int
    l_gap: int = 0
    l_left: int = 0
    l_right: int = 0
    l_sep2: int = 0

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        for name in ("l_a", "l_b", "l_gap", "l_left", "l_right", "l_sep2"):
            object.__setattr__(self, name, _check_length(name, getattr(self, name)))
        if self.l_a < 1 or self.l_b < 1:
            raise ValueError("blocks A and B must contain at least one site")
        if self.mode != "half" and (self.l_left or self.l_right):
            raise ValueError("environment lengths only apply to half mode")
        if self.mode != "pbc" and self.l_sep2:
            raise ValueError("second separating arc only applies to pbc mode")

    @classmethod
    def half_boundary(cls, l_left, l_a, l_gap, l_b, l_right):
        return cls("half", l_a=l_a, l_b=l_b, l_gap=l_gap,
                   l_left=l_left, l_right=l_right)

    @classmethod
    def spin1_boundary(cls, l_a, l_gap, l_b):
        return cls("spin1", l_a=l_a, l_b=l_b, l_gap=l_gap)

    @classmethod
    def periodic(cls, l_1, l_a, l_2, l_b):
        return cls("pbc", l_a=l_a, l_b=l_b, l_gap=l_1, l_sep2=l_2)

    @property
    def total_sites(self):
        return (self.l_left + self.l_a + self.l_gap + self.l_b
                + self.l_right + self.l_sep2)

    @property
    def z_a(self):
        return ea.z_of(self.l_a)

    @property
    def z_b(self):
        return ea.z_of(self.l_b)

    @property
    def flags(self):
        """Caveats about the geometry, echoed into CLI metadata."""
        out = []
        if self.mode == "half" and (self.l_left == 0 or self.l_right == 0):
            out.append("empty-environment")
        return tuple(out)


@dataclass(frozen=True)
class BoundaryWeights:
    """Complex weights w_mu of the cap closing a finite open chain.

    Stored unit-normalized; construction from an (effectively) zero
    vector is rejected.
    """

    vec: np.ndarray
    label: str = "custom"

    def __post_init__(self):
        v = np.asarray(self.vec, dtype=complex).reshape(-1)
        if v.shape != (4,):
            raise ValueError(f"weights must have 4 components, got shape {v.shape}")
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise ValueError("boundary weights must not be the zero vector")
        v = v / norm
        v.flags.writeable = False
        object.__setattr__(self, "vec", v)

    @classmethod
    def basis_state(cls, beta):
        """Single cap channel e_beta."""
        ea._check_index(beta)
        v = np.zeros(4)
        v[beta] = 1.0
        return cls(v, label=f"beta{beta}")

    @classmethod
    def from_label(cls, label):
        """Named weights (beta0..beta3, cc, cd, dc, dd) or a literal
        comma-separated complex 4-vector."""
        if label in _WEIGHT_LABELS:
            return cls(np.array(_WEIGHT_LABELS[label], dtype=complex), label=label)
        parts = label.split(",")
        if len(parts) == 4:
            try:
                return cls(np.array([complex(p) for p in parts]), label=label)
            except ValueError:
                pass
        raise ValueError(
            f"unknown weights label {label!r}; expected one of "
            f"{sorted(_WEIGHT_LABELS)} or four comma-separated complex numbers"
        )


@dataclass(frozen=True)
class EdgeOperator:
    """Coefficient matrix of a two-block operator over cap-state pairs.

    coeff is 16x16 Hermitian with row index (cap of A, cap of B) and is
    scaled so that the Gram-weighted matrix has unit trace; z_a, z_b
    are the decay factors that fix those Gram weights.  transposed
    marks whether block A has been partially transposed.
    """

    coeff: np.ndarray
    z_a: float
    z_b: float
    geometry: BlockGeometry | None = None
    transposed: bool = False

    def __post_init__(self):
        c = np.asarray(self.coeff, dtype=complex)
        if c.shape != (16, 16):
            raise ValueError(f"coefficient matrix must be 16x16, got {c.shape}")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeff", c)

    def tensor(self):
        """coeff viewed as C[mu, rho, alpha, beta]."""
        return self.coeff.reshape(4, 4, 4, 4)


def _finish(tensor, z_a, z_b, geometry, transposed=False):
    """Normalize a raw coefficient tensor and wrap it."""
    c = tensor.reshape(16, 16)
    d = np.sqrt(np.outer(ea.lambda_weights(z_a), ea.lambda_weights(z_b))).reshape(16)
    tr = float(np.sum(d * d * np.diag(c).real))
    if tr <= 1e-300:
        raise ValueError("coefficient tensor has zero weighted trace")
    return EdgeOperator(c / tr, float(z_a), float(z_b), geometry, transposed)


def build_half_boundary(z_a, z_b, z, geometry=None):
    """Two blocks inside an effectively infinite open chain.

    z is the decay factor of the gap between them; the environments
    beyond A and B drop out exactly.  The coefficient tensor is the
    gap-channel average of the block-splitting tensor,

        C[mu, rho, alpha, beta] = sum_nu lambda_nu(z) M_mu,nu,rho,s
                                                      conj(M)_alpha,nu,beta,s.
    """
    ea._check_z(z_a, z_b, z)
    lam_gap = ea.lambda_weights(z)
    c = np.einsum("n,mnrs,anbs->mrab", lam_gap, _M, _M.conj())
    return _finish(c, z_a, z_b, geometry)


def half_coeff_closed(z):
    """Algebraically reduced half-boundary tensor, before Gram weighting.

    Independent of build_half_boundary's contraction route:

        C = d_mu,alpha d_rho,beta
            + z S_mu,alpha (d_rho,alpha d_mu,beta
                            - g_mu g_alpha d_mu,rho d_alpha,beta)
            + (i z / 2) g_alpha g_beta e_mu,rho,alpha,beta
                        (S_rho,beta - S_mu,alpha)

    normalized like the builder output for direct comparison.
    """
    ea._check_z(z)
    c = np.zeros((4, 4, 4, 4), dtype=complex)
    for mu in range(4):
        for rho in range(4):
            for al in range(4):
                for be in range(4):
                    v = 0.0 + 0.0j
                    if mu == al and rho == be:
                        v += 1.0
                    pair = ea.s_pair(mu, al)
                    if rho == al and mu == be:
                        v += z * pair
                    if mu == rho and al == be:
                        v -= z * pair * _GV[mu] * _GV[al]
                    v += (0.5j * z * _GV[al] * _GV[be] * ea.LEVI[mu, rho, al, be]
                          * (ea.s_pair(rho, be) - pair))
                    c[mu, rho, al, be] = v
    return c


def build_spin1_boundary(z_a, z_b, z_gap, weights):
    """Two blocks covering a finite open chain closed by a weighted cap.

    The chain is A | gap | B with nothing beyond the blocks; its two
    dangling spin-1/2 ends are contracted with sum_mu w_mu tau_mu.  The
    per-channel splitting amplitudes are

        K[mu, nu, rho] = (1/8) sum_xy (tau_w)_xy
                         (conj(tau_mu) B conj(tau_nu) B conj(tau_rho))_xy

    and the coefficient tensor is their gap-channel average.
    """
    ea._check_z(z_a, z_b, z_gap)
    if not isinstance(weights, BoundaryWeights):
        weights = BoundaryWeights(np.asarray(weights, dtype=complex))
    tw = np.einsum("m,mab->ab", weights.vec, ea.CAP)
    k = np.zeros((4, 4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            left = ea.CAP[mu].conj() @ ea.BOND @ ea.CAP[nu].conj() @ ea.BOND
            for rho in range(4):
                k[mu, nu, rho] = np.sum(tw * (left @ ea.CAP[rho].conj())) / 8.0
    c = np.einsum("n,mnr,anb->mrab", ea.lambda_weights(z_gap), k, k.conj())
    return _finish(c, z_a, z_b, None)


def build_pbc(z_a, z_b, z_1, z_2, z_tot, geometry=None):
    """Two blocks on a ring, both separating arcs traced out.

    Assembled from the ring-splitting tensors; Gamma enters once at
    (z_1, z_2) and once at (-z_1, -z_2).
    """
    ea._check_z(z_a, z_b, z_1, z_2, z_tot)
    lam_t, gam_p, t_t = ea.pbc_tensors(z_1, z_2, z_tot)
    _, gam_m, _ = ea.pbc_tensors(-z_1, -z_2, z_tot)
    c = np.zeros((4, 4, 4, 4), dtype=complex)
    for al in range(4):
        for be in range(4):
            for alp in range(4):
                for bep in range(4):
                    v = 0.0 + 0.0j
                    if al == alp and be == bep:
                        v += lam_t[al, be]
                    if al == be and alp == bep:
                        v -= _GV[al] * _GV[alp] * gam_m[al, alp]
                    v += (1j * _GV[bep] * _GV[alp] * ea.LEVI[be, bep, al, alp]
                          * t_t[al, be, alp, bep])
                    if al == bep and be == alp:
                        v -= gam_p[al, alp]
                    c[al, be, alp, bep] = v
    return _finish(c, z_a, z_b, geometry)


def from_geometry(geometry, weights=None):
    """Build the EdgeOperator described by a BlockGeometry."""
    g = geometry
    if g.mode == "half":
        return build_half_boundary(g.z_a, g.z_b, ea.z_of(g.l_gap), geometry=g)
    if g.mode == "spin1":
        if weights is None:
            raise ValueError("spin1 mode requires boundary weights")
        op = build_spin1_boundary(g.z_a, g.z_b, ea.z_of(g.l_gap), weights)
        return EdgeOperator(op.coeff, op.z_a, op.z_b, g, op.transposed)
    if g.mode == "pbc":
        z_tot = ea.z_of(g.l_gap + g.l_a + g.l_sep2 + g.l_b)
        return build_pbc(g.z_a, g.z_b, ea.z_of(g.l_gap), ea.z_of(g.l_sep2),
                         z_tot, geometry=g)
    raise ValueError(f"unknown mode {g.mode!r}")


def partial_transpose_A(op):
    """Transpose block A's cap indices: C[mu,rho,alpha,beta] -> C[alpha,rho,mu,beta].

    An involution that preserves the Gram-weighted trace.
    """
    c = op.tensor().transpose(2, 1, 0, 3).reshape(16, 16)
    return EdgeOperator(c, op.z_a, op.z_b, op.geometry, not op.transposed)


def orthonormalize(op):
    """Gram-weighted matrix H = D C D with D = sqrt(lambda x lambda).

    H is Hermitian with unit trace and carries the physical spectrum;
    cap channels with vanishing Gram weight stay as explicit zero rows.
    """
    d = np.sqrt(np.outer(ea.lambda_weights(op.z_a),
                         ea.lambda_weights(op.z_b))).reshape(16)
    return d[:, None] * op.coeff * d[None, :]
