import json
import math

import numpy as np
import pytest

import ecsim


def test_coherent_state_moments():
    psi = ecsim.coherent_state(1.5 + 0.5j, 40)
    n = np.arange(40)
    assert abs(np.linalg.norm(psi) - 1) < 1e-14
    assert np.sum(n * abs(psi) ** 2) == pytest.approx(2.5, abs=1e-9)


def test_truncation_error_carries_code():
    with pytest.raises(ecsim.EcsimError) as info:
        ecsim.coherent_state(5.0, 20)
    assert info.value.code == "DimTooSmall"


def test_rotation_and_factorization():
    rot = ecsim.rotation_params(1.0, 1.0)
    assert rot.theta == pytest.approx(math.pi / 4)
    assert rot.g == pytest.approx(math.sqrt(2))
    mu, nu = ecsim.to_quasi_amplitudes(1.0, 1.0, 1.0, 1.0)
    assert mu == pytest.approx(math.sqrt(2))
    assert abs(nu) < 1e-15
    d = 20
    r = ecsim.beam_splitter(rot.theta, d, d)
    phys = np.kron(ecsim.coherent_state(1.0, d), ecsim.coherent_state(1.0, d))
    quasi = np.kron(ecsim.coherent_state(mu, d), ecsim.coherent_state(0.0, d))
    assert abs(np.vdot(quasi, r @ phys)) ** 2 > 1 - 1e-8


def test_squeeze_composition_equal_pair():
    sc = ecsim.squeeze_composition(1.0, 0.5, 0.3j, 0.3j)
    assert sc["p"] == 0
    assert sc["q"] == 0.3j


def test_oracle_matches_exact_jc_in_quasi_basis():
    d1, d2 = 8, 3
    rng = np.random.default_rng(4)
    psi = np.zeros(d1 * d2 * 2, complex)
    for n in range(d1 - 1):
        for m in range(d2):
            for s in range(2):
                psi[(n * d2 + m) * 2 + s] = rng.normal() + 1j * rng.normal()
    psi /= np.linalg.norm(psi)
    # quasi JC with g2 = 0 is the interaction Hamiltonian with theta = 0
    h = ecsim.interaction_hamiltonian(0.4, 1.3, 0.0, d1, d2)
    a = ecsim.evolve_oracle(h, psi, 2.7)
    b = ecsim.evolve_exact_jc(psi, d1, d2, 2.7, 1.3, 0.4)
    assert abs(np.vdot(a, b)) ** 2 > 1 - 1e-10


def test_cat_preparation():
    res = ecsim.prepare_cat(math.sqrt(5.0), math.sqrt(5.0), 1.0, 1.0)
    assert res["nbar"] == pytest.approx(10.0)
    assert res["atom_purity"] > 0.9
    # which sign wins depends on the parity of nbar
    assert max(res["fidelity_minus"], res["fidelity_plus"]) > 0.68


def test_reduced_density_and_entropy():
    psi = np.zeros(2 * 1 * 2, complex)
    psi[0 * 2 + 1] = psi[1 * 2 + 0] = 1 / math.sqrt(2)
    rho = ecsim.reduced_density_matrix(psi, 2, 1, True, ["atom"])
    assert ecsim.purity(rho) == pytest.approx(0.5)
    assert ecsim.entropy(rho) == pytest.approx(math.log(2))


def test_husimi_of_vacuum():
    q = ecsim.husimi_q(ecsim.coherent_state(0.0, 10), -3, 3, 61, -3, 3, 61)
    assert q.shape == (61, 61)
    assert q[30, 30] == pytest.approx(1 / math.pi)


def test_elimination_scaling():
    r1 = ecsim.adiabatic_residual(1.0, 50.0, 20, 10)
    r2 = ecsim.adiabatic_residual(1.0, 100.0, 20, 10)
    assert 3.0 < r1 / r2 < 5.0


def test_run_scenario_and_determinism():
    a = ecsim.run_scenario("validate", cases=3, seed=5)
    b = ecsim.run_scenario("validate", cases=3, seed=5)
    assert a["passed"]
    assert a["summary_json"] == b["summary_json"]
    assert json.loads(a["summary_json"])["schema"] == "ecsim.report/1"
    assert len(a["rows"]) >= 3


def test_sweep_and_qfunc(tmp_path):
    sweep = ecsim.run_scenario("adiabatic-sweep", n_max=4, sweep_deltas=[20, 40])
    assert sweep["columns"][0] == "delta"
    assert len(sweep["rows"]) == 2
    assert ecsim.write_outputs("qfunc", tmp_path, alpha_re=1.5, beta_re=1.5, grid_count=31)
    assert (tmp_path / "qgrid.csv").exists()
    assert (tmp_path / "summary.json").exists()


def test_config_errors():
    with pytest.raises(ecsim.EcsimError) as info:
        ecsim.run_scenario("zero-detuning", delta=1.0)
    assert info.value.code == "ConfigInvalid"
    with pytest.raises(ecsim.EcsimError):
        ecsim.run_scenario("validate", not_a_key=1)
