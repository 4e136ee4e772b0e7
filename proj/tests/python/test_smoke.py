import math

import pytest

import zmoment as zm


def test_special_values():
    assert abs(zm.riemann_zeta(2) - math.pi**2 / 6) < 1e-13
    assert abs(zm.hurwitz_zeta(0, 0.3) - 0.2) < 1e-13
    assert abs(zm.alt_hurwitz_zeta(1, 1.0) - math.log(2)) < 1e-12
    assert abs(zm.digamma(1.0) + 0.5772156649015329) < 1e-15
    assert abs(zm.lerch_phi(0.5, 1, 1.0) - 2 * math.log(2)) < 1e-12
    assert abs(zm.dirichlet_L(2, 4, 1) - 0.915965594177219) < 1e-12 or abs(
        zm.dirichlet_L(2, 4, 0) - 0.915965594177219
    ) < 1e-12


def test_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    for s, a in [(2 + 3j, 0.3), (0.5 + 40j, 0.7), (-1.5, 2.5)]:
        ref = complex(mpmath.zeta(s, a))
        assert abs(zm.hurwitz_zeta(s, a) - ref) <= 1e-12 * abs(ref)
    assert abs(zm.cosine_integral(1.0) - float(mpmath.ci(1))) < 1e-14


def test_errors():
    with pytest.raises(ValueError):
        zm.riemann_zeta(1)
    with pytest.raises(ValueError):
        zm.digamma(0.0)
    with pytest.raises(KeyError):
        zm.run_check("NOPE")


def test_fractional_part_tools():
    g = 0.5772156649015329
    assert abs(zm.phi_n(2, 1.0) - 2 * (1 - g)) < 1e-9
    assert abs(zm.phi2_closed(4) - (8 * (1 - g) - 2 * math.log(3))) < 1e-14
    assert abs(zm.moment_frac(2, 0.5) - (math.log(2 * math.pi) - g)) < 1e-10


def test_moment_integral():
    r = zm.moment_integral("riemann", 1.5)
    exact = math.pi / 1.5 * (2 * zm.riemann_zeta(2).real - zm.riemann_zeta(3).real)
    assert abs(r["value"] - exact) < 1e-6 * exact
    assert r["tail_estimate"] >= 0


def test_suite_from_python():
    ids = zm.check_ids()
    assert len(ids) >= 34 and "C2" in ids
    res = zm.run_check("E257", k=3)
    assert len(res) == 1 and res[0]["pass"]
    appendix = {r["id"] for r in zm.run_all(tags=["appendix"])}
    assert appendix == {"Kernel", "PF", "A-routes", "A1"}
