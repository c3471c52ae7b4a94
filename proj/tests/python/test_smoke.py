import math

import pytest

import qsusy


def test_susy_checks_pass():
    for kind in ("undeformed", "spiridonov", "td"):
        results = qsusy.susy_checks(kind, "x^3-x", q=["3/5"])
        assert results
        assert all(r["status"] == "pass" for r in results)


def test_heisenberg():
    results = qsusy.heisenberg_checks("1/2", m_max=10)
    assert all(r["status"] != "fail" for r in results)
    with pytest.raises(ValueError):
        qsusy.heisenberg_checks("1")


def test_zero_mode_gaussian_at_one():
    coeffs = qsusy.zero_mode_at("f", 8, "1")
    assert coeffs == ["1", "0", "-1/2", "0", "1/8", "0", "-1/48", "0", "1/384"]
    assert qsusy.zero_mode("f", 2)[2] == "-1/2*q^-1"


def test_normalizability():
    kind, trend, _ = qsusy.classify_normalizability("f", 60, "3/2")
    assert kind == "super_gaussian_decay"
    assert trend == pytest.approx(-math.log(1.5), rel=1e-9)
    with pytest.raises(qsusy.DomainError):
        qsusy.classify_normalizability("f", 10, "3/2")


def test_degeneracy():
    r = qsusy.find_degeneracy(1, 3)
    assert r["q_root"] == "0.640388203202"
    assert r["residual"] < 1e-10
    assert qsusy.find_degeneracy(0, 1) is None
    assert qsusy.scan_degeneracies(5)


def test_special_functions():
    assert qsusy.td_exp_value(0.3, 1.0) == pytest.approx(math.exp(0.3), rel=1e-14)
    value, _, converged = qsusy.pq_exp(0.1, 2.0, 1.0)
    assert converged and value > 1.1


def test_cli_round_trip():
    code, doc, _ = qsusy.cli("verify-susy", "--kind", "td", "--q", "3/5")
    assert code == 0
    assert doc["schema"] == "1"
    assert doc["summary"]["failed"] == 0
    code, doc, err = qsusy.cli("verify-susy", "--q", "0.5")
    assert code == 2 and doc is None and err
