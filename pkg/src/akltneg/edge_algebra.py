"""Boundary-operator algebra of the spin-1 AKLT chain.

A block of L sites cut out of the valence-bond-solid ground state is
spanned, up to corrections decaying as z(L) = (-1/3)^L, by four states
obtained by capping the virtual spin-1/2 edges with the matrices
tau_0..tau_3 (identity and rotated Pauli matrices).  This module holds
that four-dimensional index algebra: the decay factor, the Gram weights
lambda_mu(z), the sign vector s_mu, the metric, the Levi-Civita symbol,
traces of ordered Pauli products, and the coefficient tensors that
appear when the chain is split across two or more cuts.

Everything here is a pure function of its arguments.
"""

import numpy as np

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)

# Edge-cap matrices tau_mu contracting a block's two dangling spin-1/2
# indices; tau_2 carries the opposite sign of sigma_y so that all four
# singlet/triplet cap channels come out with a uniform phase.
CAP = np.stack([PAULI[0], PAULI[1], -PAULI[2], PAULI[3]])

# Antisymmetric bond matrix: the virtual singlet between adjacent sites.
BOND = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)

# Channel signs: s_mu = -1 on the three "triplet-like" channels and +3
# on the channel singled out by the cap normalization.
S_VEC = np.array([-1.0, -1.0, 3.0, -1.0])

# Minkowski-like metric on the cap index, g = diag(-1, +1, +1, +1).
METRIC_SIGNS = np.array([-1.0, 1.0, 1.0, 1.0])


def _check_index(*indices):
    for mu in indices:
        if mu not in (0, 1, 2, 3):
            raise ValueError(f"edge index must be 0..3, got {mu!r}")


def z_of(length):
    """Decay factor z(L) = (-1/3)^L of an L-site block."""
    if length != int(length) or length < 0:
        raise ValueError(f"block length must be a non-negative integer, got {length!r}")
    z = 1.0
    for _ in range(int(length)):
        z /= -3.0
    return z


def _check_z(*zs):
    for z in zs:
        z = float(z)
        if not np.isfinite(z) or abs(z) > 1.0 + 1e-12:
            raise ValueError(f"decay factor must satisfy |z| <= 1, got {z!r}")


def lambda_weights(z):
    """Gram weights lambda_mu(z) = (1 + z*s_mu)/4 of the four cap states.

    The tau-capped block states are orthogonal with squared norms
    proportional to these weights; they sum to 1 for every z because
    the channel signs sum to zero.
    """
    _check_z(z)
    return (1.0 + float(z) * S_VEC) / 4.0


def s_pair(mu, alpha):
    """Pair weight S_{mu,alpha} = (s_mu + s_alpha)/2."""
    _check_index(mu, alpha)
    return (S_VEC[mu] + S_VEC[alpha]) / 2.0


def metric(mu, alpha):
    """Metric component g_{mu,alpha}; diagonal with signs (-1,+1,+1,+1)."""
    _check_index(mu, alpha)
    return METRIC_SIGNS[mu] if mu == alpha else 0.0


def levi_civita(mu, nu, rho, sigma):
    """Totally antisymmetric symbol on four indices, +1 on (0,1,2,3)."""
    _check_index(mu, nu, rho, sigma)
    seq = (mu, nu, rho, sigma)
    if len(set(seq)) < 4:
        return 0
    sign = 1
    for i in range(4):
        for j in range(i + 1, 4):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


LEVI = np.zeros((4, 4, 4, 4))
for _i in range(4):
    for _j in range(4):
        for _k in range(4):
            for _l in range(4):
                _seq = (_i, _j, _k, _l)
                if len(set(_seq)) == 4:
                    _sgn = 1
                    for _a in range(4):
                        for _b in range(_a + 1, 4):
                            if _seq[_a] > _seq[_b]:
                                _sgn = -_sgn
                    LEVI[_i, _j, _k, _l] = _sgn
del _i, _j, _k, _l, _seq, _sgn, _a, _b


def pauli_bracket(lam, alpha, mu, beta):
    """Trace of the ordered product sigma_lam sigma_alpha sigma_mu sigma_beta.

    sigma_0 is the identity and sigma_1..3 the standard Pauli matrices;
    the product is evaluated by explicit 2x2 multiplication.
    """
    _check_index(lam, alpha, mu, beta)
    prod = PAULI[lam] @ PAULI[alpha] @ PAULI[mu] @ PAULI[beta]
    return complex(np.trace(prod))


def m_coeff(mu, nu, rho, sigma):
    """Splitting coefficient M_{mu,nu,rho,sigma} of one block into two.

    Cutting a tau_nu-capped block into left and right halves capped by
    tau_mu, tau_rho expands onto this tensor (the fourth index is the
    internal channel summed against the complex conjugate):

        M = (-1)^nu (d_mu^nu g_rho,sigma + d_rho^nu g_mu,sigma
                     - d_sigma^nu g_mu,rho + i g^nu,nu e_mu,nu,rho,sigma)
    """
    _check_index(mu, nu, rho, sigma)
    val = 0.0 + 0.0j
    if mu == nu:
        val += metric(rho, sigma)
    if rho == nu:
        val += metric(mu, sigma)
    if sigma == nu:
        val -= metric(mu, rho)
    val += 1j * METRIC_SIGNS[nu] * levi_civita(mu, nu, rho, sigma)
    return (-1.0 if nu % 2 else 1.0) * val


def m_tensor():
    """m_coeff assembled into a (4,4,4,4) array, indices (mu,nu,rho,sigma)."""
    m = np.zeros((4, 4, 4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            for rho in range(4):
                for sigma in range(4):
                    m[mu, nu, rho, sigma] = m_coeff(mu, nu, rho, sigma)
    return m


def pbc_tensors(z1, z2, z_tot):
    """Ring-splitting tensors (Lambda, Gamma, T) for periodic geometry.

    A ring with two kept arcs (decay factors of the separating arcs z1,
    z2; whole ring z_tot) decomposes onto the cap basis through

        Lambda_ab   = (1 + (s_a s_b + s_a + s_b) z1 z2) / (1 + 3 z_tot)
        Gamma_aa'   = (s_a + s_a') (z1 z2 - (z1 + z2)/2) / (1 + 3 z_tot)
        T_aba'b'    = (s_a - s_b + s_a' - s_b') (z1 - z2) / (4 + 12 z_tot)

    evaluated at the (z1, z2) given; the density-matrix assembly also
    needs Gamma at (-z1, -z2), obtained by calling this again with the
    signs flipped.
    """
    _check_z(z1, z2, z_tot)
    den = 1.0 + 3.0 * float(z_tot)
    if abs(den) < 1e-12:
        raise ValueError("degenerate ring normalization 1 + 3*z_tot = 0")
    s = S_VEC
    lam_t = (1.0 + (np.outer(s, s) + s[:, None] + s[None, :]) * z1 * z2) / den
    gam_t = (s[:, None] + s[None, :]) / den * (z1 * z2 - (z1 + z2) / 2.0)
    t_t = (
        s[:, None, None, None]
        - s[None, :, None, None]
        + s[None, None, :, None]
        - s[None, None, None, :]
    ) / (4.0 * den) * (z1 - z2)
    return lam_t, gam_t, t_t
