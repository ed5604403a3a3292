"""Smoke tests for the compiled bindings."""

import math

import pytest

import fragdist as fd


def test_poisson_pmf():
    law = fd.poisson_pmf(1.0)
    assert law.offset == 0
    assert law.probs[0] == pytest.approx(math.exp(-1.0), rel=1e-12)
    assert abs(law.sum() + law.tail_mass - 1.0) < 1e-11


def test_cp_pmf_matches_poisson_for_unit_clusters():
    cp = fd.cp_pmf([1.0])
    pn = fd.poisson_pmf(1.0)
    for k in range(min(len(cp.probs), len(pn.probs))):
        assert cp.probs[k] == pytest.approx(pn.probs[k], abs=1e-12)


def test_fd_limit_uniform_clusters():
    result = fd.fd_limit([0.5, 0.5], 3)
    assert result.I_m == 2
    assert result.law.offset == 3
    assert result.law.probs[0] == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert result.law.probs[1] == pytest.approx(1.0 / 3.0, rel=1e-12)


def test_conditional_cp_law_converges():
    table = fd.fd_convergence_table([0.5, 0.5], 3, [1e-2, 1e-3, 1e-4])
    tvs = [tv for _, tv in table]
    assert tvs == sorted(tvs, reverse=True)
    assert tvs[-1] < 1e-3


def test_stein_closed_forms():
    assert fd.G_m2_poisson_exact(1.0, 0) == pytest.approx(1.0 - math.exp(-1.0), rel=1e-12)
    factors = fd.stein_factors_numeric("poisson", {"lambda": 1.0}, 0)
    assert factors["G2"] == pytest.approx(fd.G_m2_poisson_exact(1.0, 0), abs=1e-7)
    assert factors["G1"] <= fd.G_m1_poisson_bound(1.0)
    nb = fd.stein_factors_numeric("negbin", {"r": 2.0, "p": 0.3}, 1)
    assert nb["G2"] == pytest.approx(fd.G_m2_nb_exact(2.0, 0.3, 1), abs=1e-7)


def test_models_and_bounds():
    law = fd.tworuns_pmf(3, 0.5)
    assert law.at(3) == pytest.approx(0.125, rel=1e-12)
    assert law.at(2) == 0.0

    zi = fd.zeroinflated_pmf(2, 0.5, 0.5)
    assert zi.at(0) == pytest.approx(0.625, rel=1e-12)

    bound = fd.example1_bound([1e-4] * 10)
    assert bound / (1e-4 / 2.0) == pytest.approx(1.0, rel=0.02)


def test_sampling_is_deterministic():
    a = fd.sample_tworuns(8, 0.4, 1234, 100)
    b = fd.sample_tworuns(8, 0.4, 1234, 100)
    assert a == b
    emp = fd.empirical_pmf(a)
    assert abs(emp.sum() - 1.0) < 1e-12


def test_tv_and_counterexamples():
    a = fd.poisson_pmf(1.0)
    report = fd.tv_distance(a, a)
    assert report.tv == 0.0

    osc = fd.oscillation_report("r1", 40)
    assert osc.gap == pytest.approx(1.0 / 3.0, abs=1e-12)
    assert fd.ratio_r1(1.0 - 2.0**-10) == pytest.approx(1.0, abs=1e-14)


def test_errors_are_typed():
    with pytest.raises(fd.FragdistError):
        fd.poisson_pmf(-1.0)
    with pytest.raises(fd.FragdistError):
        fd.conditional_truncate(fd.poisson_pmf(0.0), 1)
