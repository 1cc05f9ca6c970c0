import math

import numpy as np
import pytest

import itsdeal


def test_kappa_and_t_hat():
    assert itsdeal.kappa(2.0) == 1.0
    assert itsdeal.kappa(1.1) == pytest.approx((2 + math.sqrt(3)) * 0.1 / 16, rel=1e-14)
    assert abs(itsdeal.solve_t_hat() - 1.3214) <= 5e-4
    with pytest.raises(ValueError):
        itsdeal.kappa(2.5)


def test_smoothness_constants():
    b = itsdeal.smoothness_constants(2.0, 0.5, 0.0, 1.0, 2.0)
    assert b["L_p"] == pytest.approx(math.sqrt(14.0))
    with pytest.raises(itsdeal.AdmissibilityError):
        itsdeal.smoothness_constants(2.0, 1.0, 1.0, 1.0, 2.0)


def test_instance_round_trip():
    inst = itsdeal.generate_instance(n=30, m=15, k1=3, k2=2, seed=4)
    assert inst.A.shape == (15, 30)
    assert np.count_nonzero(inst.x_true) == 3
    np.testing.assert_allclose(inst.A @ inst.x_true + inst.e, inst.y, rtol=0, atol=1e-12)
    back = itsdeal.instance_from_text(inst.to_text())
    assert np.array_equal(back.A, inst.A)
    assert itsdeal.rsr_value(inst, np.zeros(30)) == pytest.approx(np.abs(inst.y).sum())
    assert itsdeal.rsr_subgrad(inst, np.ones(30)).shape == (30,)


def test_inexact_oracle_exact_quadratic():
    o = itsdeal.inexact_oracle("quadratic", np.array([1.0]), p=2.0, gamma=1.0, inner="exact")
    assert o["grad_eps"][0] == pytest.approx(0.5)
    assert o["certified"]


def test_solve_and_trace(tmp_path):
    r = itsdeal.solve({"problem": "quadratic", "dim": 3, "p": 1.5, "stop.max_iters": 20,
                       "budget_s": 0, "trace.clock": False})
    assert r["status"] in ("converged", "budget")
    cols = r["columns"]
    assert len(cols["iter"]) == len(cols["value_eps"])
    assert cols["value_eps"][-1] < cols["value_eps"][0]
    assert r["header"]["alg"] == "ideals"
    path = tmp_path / "trace.csv"
    path.write_text(r["csv"])
    back = itsdeal.read_trace(str(path))
    np.testing.assert_array_equal(back["columns"]["value_eps"], cols["value_eps"])


def test_solve_rejects_bad_config():
    with pytest.raises(itsdeal.ConfigError):
        itsdeal.solve({"no.such.key": 1})
    with pytest.raises(itsdeal.ConfigError):
        itsdeal.solve({"alg": "higda", "problem": "quadratic"})


def test_verify_report():
    assert itsdeal.verify()["passed"]
    rep = itsdeal.verify("delta-violation")
    assert not rep["passed"]
    assert [g["name"] for g in rep["groups"] if not g["passed"]] == ["absolute_gradient_error"]


def test_config_defaults():
    d = itsdeal.config_defaults()
    assert d["alg"] == "ideals"
    assert d["instance.lambda_bar"] == "0.5"
