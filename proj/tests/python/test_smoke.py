import cmath
import math

import pytest

import schro


def test_faddeeva_at_i():
    assert schro.faddeeva(1j) == pytest.approx(0.42758357615580700442, rel=1e-14)


def test_hestenes_pair():
    assert schro.hestenes_coeffs([1.0, 0.5], 1) == pytest.approx([-3.0, 4.0])


def test_mori_rule():
    got = schro.integrate_0_to_t(lambda s: cmath.exp(1j * s), 2.0)
    assert abs(got - complex(math.sin(2.0), 1.0 - math.cos(2.0))) < 1e-13


def test_table3_cell():
    u = schro.table3_field(1, 1 / 40, [0.2])
    exact = schro.exact_gaussian_box(0.32612, [0.2], 1.0)
    assert abs(u - exact) == pytest.approx(3.0693624658768e-3, rel=1e-9)


def test_convergence_rows():
    rows = schro.run_convergence({"n": "1", "M": "2", "h_levels": "1/40,1/80"})
    assert [r["M"] for r in rows] == [2, 2]
    assert rows[0]["rate"] is None
    assert rows[1]["rate"] == pytest.approx(3.99, abs=0.05)


def test_csv_header():
    text = schro.convergence_csv({"n": "1", "M": "1", "h_levels": "1/40"})
    assert text.startswith("# problem=table3\n")
    assert "n,M,h,tau,abs_error,rate\n" in text


def test_config_error():
    with pytest.raises(schro.ConfigError):
        schro.run_convergence({"problem": "custom"})
    with pytest.raises(schro.ConfigError):
        schro.run_convergence({"bogus": "1"})


def test_selftest():
    assert all(r["pass"] for r in schro.selftest())
