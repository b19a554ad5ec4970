"""Unit tests for the edge-cap index algebra."""

from itertools import permutations, product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from akltneg import edge_algebra as ea


def test_z_of_values():
    assert ea.z_of(0) == 1.0
    assert ea.z_of(1) == -1.0 / 3.0
    assert abs(ea.z_of(2) - 1.0 / 9.0) < 1e-16
    assert abs(ea.z_of(20)) < 1e-9


@pytest.mark.parametrize("bad", [-1, 0.5, "x"])
def test_z_of_rejects_bad_lengths(bad):
    with pytest.raises((ValueError, TypeError)):
        ea.z_of(bad)


def test_lambda_weights_sum_to_one():
    for length in range(0, 12):
        w = ea.lambda_weights(ea.z_of(length))
        assert abs(w.sum() - 1.0) < 1e-14


def test_lambda_weights_special_points():
    assert np.allclose(ea.lambda_weights(1.0), [0.0, 0.0, 1.0, 0.0])
    assert np.allclose(ea.lambda_weights(-1.0 / 3.0), [1 / 3, 1 / 3, 0.0, 1 / 3])
    assert np.allclose(ea.lambda_weights(0.0), [0.25] * 4)


def test_lambda_weights_rejects_large_z():
    with pytest.raises(ValueError):
        ea.lambda_weights(1.5)


@given(st.floats(min_value=-1.0, max_value=1.0))
def test_lambda_weights_sum_property(z):
    assert abs(ea.lambda_weights(z).sum() - 1.0) < 1e-14


def test_s_pair_examples():
    assert ea.s_pair(0, 0) == -1.0
    assert ea.s_pair(2, 2) == 3.0
    assert ea.s_pair(0, 2) == 1.0
    with pytest.raises(ValueError):
        ea.s_pair(0, 4)


def test_levi_civita_examples():
    assert ea.levi_civita(0, 1, 2, 3) == 1
    assert ea.levi_civita(1, 0, 2, 3) == -1
    assert ea.levi_civita(0, 0, 2, 3) == 0


def test_levi_civita_antisymmetry_exhaustive():
    for quad in product(range(4), repeat=4):
        base = ea.levi_civita(*quad)
        assert ea.LEVI[quad] == base
        for i, j in ((0, 1), (1, 2), (2, 3), (0, 3)):
            swapped = list(quad)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            assert ea.levi_civita(*swapped) == -base


def test_levi_civita_matches_permutation_parity():
    for perm in permutations(range(4)):
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j]
        )
        assert ea.levi_civita(*perm) == (-1) ** inversions


def test_pauli_bracket_examples():
    assert ea.pauli_bracket(0, 0, 0, 0) == pytest.approx(2)
    assert ea.pauli_bracket(1, 1, 1, 1) == pytest.approx(2)
    assert ea.pauli_bracket(1, 2, 1, 2) == pytest.approx(-2)
    assert ea.pauli_bracket(0, 1, 2, 3) == pytest.approx(2j)


def test_pauli_bracket_cyclic_and_reversal():
    for quad in product(range(4), repeat=4):
        base = ea.pauli_bracket(*quad)
        cycled = ea.pauli_bracket(quad[1], quad[2], quad[3], quad[0])
        reversed_ = ea.pauli_bracket(*quad[::-1])
        assert cycled == pytest.approx(base, abs=1e-14)
        assert reversed_ == pytest.approx(np.conj(base), abs=1e-14)


def test_m_coeff_examples():
    assert ea.m_coeff(0, 0, 0, 0) == pytest.approx(-1)
    assert ea.m_coeff(0, 1, 2, 3) == pytest.approx(-1j)


def test_m_tensor_matches_cap_trace_route():
    # Independent construction: close the split block into a loop of
    # cap and bond matrices and take the trace.
    m = ea.m_tensor()
    for quad in product(range(4), repeat=4):
        mu, nu, rho, sigma = quad
        loop = (
            ea.CAP[sigma].conj().T @ ea.BOND @ ea.CAP[mu].conj() @ ea.BOND
            @ ea.CAP[nu].conj() @ ea.BOND @ ea.CAP[rho].conj() @ ea.BOND
        )
        assert m[quad] == pytest.approx(-np.trace(loop) / 2.0, abs=1e-14)


def test_pbc_tensors_decoupled_limit():
    lam_t, gam_t, t_t = ea.pbc_tensors(0.0, 0.0, 0.0)
    assert np.allclose(lam_t, np.ones((4, 4)))
    assert np.allclose(gam_t, 0.0)
    assert np.allclose(t_t, 0.0)


def test_pbc_tensors_equal_arcs_kill_t():
    for z in (0.3, -1 / 3, 1 / 9):
        _, _, t_t = ea.pbc_tensors(z, z, 0.1)
        assert np.allclose(t_t, 0.0)


def test_pbc_tensors_symmetry():
    lam_t, gam_t, _ = ea.pbc_tensors(ea.z_of(1), ea.z_of(2), ea.z_of(6))
    assert np.allclose(lam_t, lam_t.T)
    assert np.allclose(gam_t, gam_t.T)


def test_pbc_tensors_degenerate_ring_rejected():
    with pytest.raises(ValueError):
        ea.pbc_tensors(0.0, 0.0, -1.0 / 3.0)


def test_cap_matrices_are_unitary_and_hermitian_pattern():
    for mu in range(4):
        c = ea.CAP[mu]
        assert np.allclose(c @ c.conj().T, np.eye(2))
    # the bond matrix squares to minus the identity
    assert np.allclose(ea.BOND @ ea.BOND, -np.eye(2))
