"""Tests for geometry/weights types and the edge-basis builders."""

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from akltneg import edge_algebra as ea
from akltneg import edge_rdm as er


def weighted_spectrum(op):
    return np.sort(np.linalg.eigvalsh(er.orthonormalize(op)))


# ---------------------------------------------------------------- types

def test_geometry_constructors_and_totals():
    g = er.BlockGeometry.half_boundary(1, 2, 3, 4, 5)
    assert (g.l_left, g.l_a, g.l_gap, g.l_b, g.l_right) == (1, 2, 3, 4, 5)
    assert g.total_sites == 15
    assert er.BlockGeometry.spin1_boundary(2, 0, 2).total_sites == 4
    p = er.BlockGeometry.periodic(1, 2, 3, 4)
    assert (p.l_gap, p.l_sep2) == (1, 3)
    assert p.total_sites == 10


@pytest.mark.parametrize("bad", [
    dict(mode="half", l_a=0, l_b=1),
    dict(mode="half", l_a=1, l_b=-1),
    dict(mode="weird", l_a=1, l_b=1),
    dict(mode="spin1", l_a=1, l_b=1, l_left=1),
    dict(mode="half", l_a=1, l_b=1, l_sep2=1),
    dict(mode="half", l_a=1.5, l_b=1),
])
def test_geometry_rejects_invalid(bad):
    with pytest.raises(ValueError):
        er.BlockGeometry(**bad)


def test_geometry_flags_empty_environment():
    assert er.BlockGeometry.half_boundary(0, 1, 1, 1, 1).flags == ("empty-environment",)
    assert er.BlockGeometry.half_boundary(1, 1, 1, 1, 1).flags == ()
    assert er.BlockGeometry.periodic(0, 1, 0, 1).flags == ()


def test_weights_normalized_and_zero_rejected():
    w = er.BoundaryWeights(np.array([3.0, 0.0, 0.0, 4.0]))
    assert abs(np.linalg.norm(w.vec) - 1.0) < 1e-14
    with pytest.raises(ValueError):
        er.BoundaryWeights(np.zeros(4))
    with pytest.raises(ValueError):
        er.BoundaryWeights(np.ones(3))


def test_weights_labels():
    for beta in range(4):
        w = er.BoundaryWeights.basis_state(beta)
        assert w.label == f"beta{beta}"
        assert w.vec[beta] == 1.0
    for label in ("cc", "cd", "dc", "dd"):
        w = er.BoundaryWeights.from_label(label)
        assert abs(np.linalg.norm(w.vec) - 1.0) < 1e-14
    lit = er.BoundaryWeights.from_label("1,0,0,1j")
    assert abs(lit.vec[3] - 1j * 2**-0.5) < 1e-14
    with pytest.raises(ValueError):
        er.BoundaryWeights.from_label("nope")


def test_edge_operator_immutable_and_shape_checked():
    op = er.build_half_boundary(ea.z_of(1), ea.z_of(1), ea.z_of(1))
    with pytest.raises(ValueError):
        op.coeff[0, 0] = 5.0
    with pytest.raises(ValueError):
        er.EdgeOperator(np.eye(4), 0.0, 0.0)


# ---------------------------------------------------------------- builders

Z_GRID = [1.0, -1.0 / 3.0, 1.0 / 9.0, 0.0, -1.0 / 27.0]


@pytest.mark.parametrize("z", Z_GRID)
def test_half_builder_hermitian_unit_trace_psd(z):
    op = er.build_half_boundary(ea.z_of(2), ea.z_of(3), z)
    h = er.orthonormalize(op)
    assert np.abs(h - h.conj().T).max() < 1e-12
    assert abs(np.trace(h).real - 1.0) < 1e-12
    assert np.linalg.eigvalsh(h).min() > -1e-12


def test_half_builder_matches_closed_form_elementwise():
    for z in Z_GRID + [0.37, -0.8]:
        op = er.build_half_boundary(ea.z_of(2), ea.z_of(3), z)
        closed = er.half_coeff_closed(z).reshape(16, 16)
        d = np.sqrt(np.outer(ea.lambda_weights(op.z_a),
                             ea.lambda_weights(op.z_b))).reshape(16)
        tr = float(np.sum(d * d * np.diag(closed).real))
        assert np.abs(op.coeff - closed / tr).max() < 1e-14


def test_half_builder_z_zero_is_diagonal():
    op = er.build_half_boundary(ea.z_of(2), ea.z_of(2), 0.0)
    off = op.coeff - np.diag(np.diag(op.coeff))
    assert np.abs(off).max() < 1e-14
    # and the partial transpose leaves it unchanged
    assert np.abs(er.partial_transpose_A(op).coeff - op.coeff).max() < 1e-14


def test_half_builder_rejects_large_z():
    with pytest.raises(ValueError):
        er.build_half_boundary(0.0, 0.0, 1.2)


def test_single_site_block_kills_channel_two():
    # lambda_2(z(1)) = 0: every row and column touching channel 2 of a
    # one-site block must vanish in the weighted matrix.
    op = er.build_half_boundary(ea.z_of(1), ea.z_of(3), ea.z_of(2))
    h = er.orthonormalize(op).reshape(4, 4, 4, 4)
    assert np.abs(h[2]).max() < 1e-14
    assert np.abs(h[:, :, 2]).max() < 1e-14


def test_partial_transpose_involution_and_trace():
    op = er.build_half_boundary(ea.z_of(2), ea.z_of(1), ea.z_of(1))
    pt = er.partial_transpose_A(op)
    assert pt.transposed and not op.transposed
    back = er.partial_transpose_A(pt)
    assert np.abs(back.coeff - op.coeff).max() == 0.0
    assert abs(np.trace(er.orthonormalize(pt)).real - 1.0) < 1e-12


def test_z_reflection_half():
    # spectrum of the partial transpose at gap factor z equals the
    # spectrum of the untransposed operator at -z
    z_a, z_b = ea.z_of(2), ea.z_of(3)
    for z in (ea.z_of(1), ea.z_of(2), 0.37):
        e1 = weighted_spectrum(er.partial_transpose_A(
            er.build_half_boundary(z_a, z_b, z)))
        e2 = weighted_spectrum(er.build_half_boundary(z_a, z_b, -z))
        assert np.abs(e1 - e2).max() < 1e-12


def test_half_tensor_convex_decomposition():
    # the raw coefficient tensor at -z is the (1-3z)/4 mixture of the
    # z = 1 and z = -1/3 endpoints
    for length in (1, 2, 3):
        z = ea.z_of(length)
        mix = (1.0 - 3.0 * z) / 4.0
        lhs = er.half_coeff_closed(-z)
        rhs = mix * er.half_coeff_closed(1.0) + (1.0 - mix) * er.half_coeff_closed(-1.0 / 3.0)
        assert np.abs(lhs - rhs).max() < 1e-14


@settings(max_examples=25, deadline=None)
@given(st.floats(min_value=-1.0, max_value=1.0),
       st.integers(min_value=1, max_value=6),
       st.integers(min_value=1, max_value=6))
def test_half_builder_properties_random_z(z, la, lb):
    op = er.build_half_boundary(ea.z_of(la), ea.z_of(lb), z)
    h = er.orthonormalize(op)
    assert np.abs(h - h.conj().T).max() < 1e-12
    assert abs(np.trace(h).real - 1.0) < 1e-12


# ---------------------------------------------------------------- spin1

def _k_tensor(weights):
    tw = np.einsum("m,mab->ab", weights.vec, ea.CAP)
    k = np.zeros((4, 4, 4), dtype=complex)
    for mu, nu, rho in product(range(4), repeat=3):
        q = (ea.CAP[mu].conj() @ ea.BOND @ ea.CAP[nu].conj() @ ea.BOND
             @ ea.CAP[rho].conj())
        k[mu, nu, rho] = np.sum(tw * q) / 8.0
    return k


@pytest.mark.parametrize("label", ["beta0", "beta2", "cc", "cd"])
def test_spin1_builder_hermitian_unit_trace_psd(label):
    w = er.BoundaryWeights.from_label(label)
    op = er.build_spin1_boundary(ea.z_of(1), ea.z_of(2), ea.z_of(1), w)
    h = er.orthonormalize(op)
    assert np.abs(h - h.conj().T).max() < 1e-12
    assert abs(np.trace(h).real - 1.0) < 1e-12
    assert np.linalg.eigvalsh(h).min() > -1e-12


def test_spin1_basis_cap_matches_pauli_bracket_magnitudes():
    # for w = e_beta the splitting amplitudes reduce to ordered Pauli
    # traces, up to spectrally inert signs
    for beta in range(4):
        k = _k_tensor(er.BoundaryWeights.basis_state(beta))
        for mu, nu, rho in product(range(4), repeat=3):
            bracket = ea.pauli_bracket(mu, nu, rho, beta) / 8.0
            assert abs(abs(k[mu, nu, rho]) - abs(bracket)) < 1e-14


def test_spin1_separable_u_weight_transpose_identity():
    # partial transposition of a separable-cap state is spectrally
    # equivalent to replacing the gap weights lambda_nu(z) by
    # u_nu(z) = lambda_nu(z) - (z/2) * (+1,-1,+1,-1)
    alt = np.array([1.0, -1.0, 1.0, -1.0])
    z_a, z_b = ea.z_of(2), ea.z_of(3)
    d = np.sqrt(np.outer(ea.lambda_weights(z_a), ea.lambda_weights(z_b))).reshape(16)
    for label in ("cc", "dd", "cd", "dc"):
        w = er.BoundaryWeights.from_label(label)
        k = _k_tensor(w)
        for length in (1, 2, 3):
            z = ea.z_of(length)
            h1 = er.orthonormalize(er.partial_transpose_A(
                er.build_spin1_boundary(z_a, z_b, z, w)))
            u = ea.lambda_weights(z) - 0.5 * z * alt
            c2 = np.einsum("n,mnr,anb->mrab", u, k, k.conj()).reshape(16, 16)
            h2 = d[:, None] * c2 * d[None, :]
            h2 = h2 / np.trace(h2).real
            gap = np.abs(np.sort(np.linalg.eigvalsh(h1))
                         - np.sort(np.linalg.eigvalsh(h2))).max()
            assert gap < 1e-12


def test_spin1_requires_weights_via_geometry():
    g = er.BlockGeometry.spin1_boundary(1, 1, 1)
    with pytest.raises(ValueError):
        er.from_geometry(g)


# ---------------------------------------------------------------- pbc

def _ring_tensor():
    r = np.zeros((4, 4, 4, 4), dtype=complex)
    for al, nu, be, ka in product(range(4), repeat=4):
        r[al, nu, be, ka] = np.trace(
            ea.CAP[al].conj() @ ea.BOND @ ea.CAP[nu].conj() @ ea.BOND
            @ ea.CAP[be].conj() @ ea.BOND @ ea.CAP[ka].conj() @ ea.BOND
        ) / 16.0
    return r


def test_pbc_builder_matches_ring_trace_route():
    # independent construction: contract the four-cap ring traces with
    # the arc weights; weighted spectra must agree (the raw tensors
    # differ by a basis gauge on zero-weight channels)
    ring = _ring_tensor()
    for l1, la, l2, lb in [(1, 1, 1, 1), (0, 1, 1, 1), (2, 1, 0, 2),
                           (1, 2, 2, 1), (0, 2, 0, 2), (0, 1, 0, 1)]:
        z1, z2 = ea.z_of(l1), ea.z_of(l2)
        z_tot = ea.z_of(l1 + la + l2 + lb)
        z_a, z_b = ea.z_of(la), ea.z_of(lb)
        op = er.build_pbc(z_a, z_b, z1, z2, z_tot)
        raw = np.einsum("a,b,anbk,ambl->nkml", ea.lambda_weights(z1),
                        ea.lambda_weights(z2), ring, ring.conj())
        d = np.sqrt(np.outer(ea.lambda_weights(z_a),
                             ea.lambda_weights(z_b))).reshape(16)
        for transposed in (False, True):
            h1 = er.orthonormalize(
                er.partial_transpose_A(op) if transposed else op)
            c2 = (raw.transpose(2, 1, 0, 3) if transposed else raw).reshape(16, 16)
            h2 = d[:, None] * c2 * d[None, :]
            h2 = h2 / np.trace(h2).real
            gap = np.abs(np.sort(np.linalg.eigvalsh(h1))
                         - np.sort(np.linalg.eigvalsh(h2))).max()
            assert gap < 1e-12


def test_pbc_decoupled_point_is_product_diagonal():
    z_a, z_b = ea.z_of(2), ea.z_of(3)
    op = er.build_pbc(z_a, z_b, 0.0, 0.0, 0.0)
    h = er.orthonormalize(op)
    model = np.diag(np.outer(ea.lambda_weights(z_a),
                             ea.lambda_weights(z_b)).reshape(16))
    assert np.abs(h - model).max() < 1e-14


def test_z_reflection_pbc():
    z_a = z_b = ea.z_of(2)
    z1, z2 = ea.z_of(1), ea.z_of(2)
    z_tot = ea.z_of(7)
    e1 = weighted_spectrum(er.partial_transpose_A(
        er.build_pbc(z_a, z_b, z1, z2, z_tot)))
    e2 = weighted_spectrum(er.build_pbc(z_a, z_b, -z1, -z2, z_tot))
    assert np.abs(e1 - e2).max() < 1e-12


def test_from_geometry_dispatch():
    g = er.BlockGeometry.half_boundary(1, 1, 2, 1, 1)
    assert er.from_geometry(g).geometry is g
    g = er.BlockGeometry.periodic(1, 1, 1, 1)
    assert er.from_geometry(g).geometry is g
    g = er.BlockGeometry.spin1_boundary(1, 1, 1)
    op = er.from_geometry(g, er.BoundaryWeights.basis_state(0))
    assert op.geometry is g
