"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import quditphase as qp


def test_operators_round_trip():
    x = qp.pauli_x(6)
    z = qp.pauli_z(6)
    omega = qp.root_of_unity(6)
    assert x.shape == (6, 6)
    assert np.allclose(z @ x, omega * (x @ z), atol=1e-13)
    h = qp.fourier_matrix(6)
    assert np.allclose(h @ h.conj().T, np.eye(6), atol=1e-13)


def test_codewords():
    plus, minus = qp.phase_codewords(1)
    assert plus.shape == (6,)
    assert abs(np.vdot(plus, minus)) < 1e-13
    zero, one = qp.amplitude_codewords(1)
    assert zero[0] == 1.0 and one[3] == 1.0
    z0, z1 = qp.rotated_codewords(1)
    assert np.allclose(z0, (plus + minus) / math.sqrt(2), atol=1e-13)


def test_channel_and_recovery():
    psi = qp.encode_logical(1, 0.0, 0.0)
    rho = np.outer(psi, psi.conj())
    damped = qp.apply_channel("conventional", 0.5, rho)
    assert abs(np.trace(damped) - 1.0) < 1e-12
    recovered = qp.recovery_map_phase(damped, 1)
    assert abs(np.trace(recovered) - 1.0) < 1e-12

    # A correctable phase error is removed exactly.
    z = qp.pauli_z(6)
    hit = z @ rho @ z.conj().T
    fixed = qp.recovery_map_phase(hit, 1)
    assert np.allclose(fixed, rho, atol=1e-12)


def test_kraus_families():
    ops = qp.weyl_kraus_operators(0.4, 6)
    total = sum(e.conj().T @ e for e in ops)
    assert np.allclose(total, np.eye(6), atol=1e-12)
    assert qp.conventional_kraus_tail_bound(0.9, 2, 60) < 1e-20


def test_fidelities():
    assert qp.f_damp_avg(2, "conventional", 0.5) == pytest.approx(2.5 / 3.0, abs=1e-12)
    assert qp.f_rec_avg(2, "weyl", 0.5) == pytest.approx(2.5 / 3.0, abs=1e-12)
    assert qp.f_rec_state(1, "weyl", 0.3, math.pi / 2, 0.0) == pytest.approx(1.0, abs=1e-11)
    assert qp.repetition_fidelity(1, 0.25) == pytest.approx(2.25 / 3.0, abs=1e-12)
    assert qp.repetition_n_for_dim(30) == 5
    assert qp.recovery_kernel(1, 6) == pytest.approx(2.0, abs=1e-13)


def test_sweep_records():
    records = qp.run_sweep(["conventional"], [6], [0.0, 0.5, 1.0], True)
    codes = {r.code for r in records}
    assert codes == {"qudit-D6", "rep-n3"}
    by_eta = {r.eta: r for r in records if r.code == "qudit-D6"}
    assert by_eta[1.0].f_rec == pytest.approx(1.0, abs=1e-12)
    assert by_eta[0.5].f_rec >= by_eta[0.5].f_damp


def test_verification_suite():
    result = qp.run_verification_suite("kernel")
    assert result["passed"]
