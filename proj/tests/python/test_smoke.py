from fractions import Fraction

import pytest

import primezeta as pz


def test_arith():
    assert pz.primes_up_to(10) == [2, 3, 5, 7]
    assert pz.factorize(12) == [(2, 2), (3, 1)]
    assert pz.mobius(30) == -1
    assert pz.bernoulli(12) == Fraction(-691, 2730)
    with pytest.raises(ValueError):
        pz.bernoulli(3)


def test_series_mismatch():
    lhs, rhs = pz.prime_zeta_claim_series(100)
    assert pz.first_mismatch(lhs, rhs) == (30, Fraction(-2), Fraction(0))
    mu = pz.invert(pz.zeta_series(30))
    assert mu[30] == -1
    a = pz.DirichletSeries([1, Fraction(1, 2), "3/4", 0, 5])
    assert pz.convolve(a, pz.invert(a)) == pz.DirichletSeries([1, 0, 0, 0, 0])
    with pytest.raises(ZeroDivisionError):
        pz.invert(pz.DirichletSeries([0, 1]))


def test_zeta_values():
    assert abs(pz.claim_lhs(2.0).value - 1.2158542) < 5e-8
    assert abs(pz.claim_rhs(2.0).value - 1.2230397) < 5e-8
    p = pz.prime_zeta(2.0)
    assert round(p.value, 4) == 0.4522
    assert p.error_bound <= 1e-12
    with pytest.raises(ValueError):
        pz.zeta_real(1.0)
    with pytest.raises(ArithmeticError):
        pz.zeta_real(2.0, 1e-16)


def test_radical():
    trace = pz.eval_nested(2.0, 12, pz.TailMode.ONE_TAIL)
    assert len(trace.levels) == 13
    assert round(1 - trace.value, 4) == 0.4588
    assert abs(pz.tail_fixed_point() - 1.0) < 1e-12
    with pytest.raises(pz.RadicandError) as info:
        pz.eval_nested(1.5, 4, pz.TailMode.ONE_TAIL)
    assert info.value.level == 0


def test_cyclotomic():
    phi = pz.cyclotomic(105)
    assert phi[7] == -2 and phi[41] == -2
    assert pz.cyclotomic(12) == [1, 0, -1, 0, 1]
    assert pz.cyclotomic_height(105) == 2


def test_run_check():
    report = pz.run_check("claim2_3", max_n=100)
    assert report["verdict"] == "REFUTED"
    facts = {f["name"]: f for f in report["evidence"]}
    assert facts["first_mismatch_index"]["value"] == 30
    with pytest.raises(ValueError):
        pz.run_check("claim4", mode="symbolic")
