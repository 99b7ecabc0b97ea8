"""Theta functions: route agreement, shorthand identities, the main series."""

import pytest

from qident.series import GaussianRational, QSeries, series_eq
from qident.theta import (I_UNIT, J, Jbar, Jm, Monomial, NegativeQPower,
                          jtheta, mono, product_side_pochhammer,
                          product_side_series, product_side_theta,
                          rep_count_product_series, theta_j, theta_j_shifted,
                          theta_j_sum, verify_theta_suite)


def ints(series, upto):
    out = []
    for n in range(upto):
        c = series.coeff(n)
        assert c.is_integer, (n, c)
        out.append(int(c.re))
    return out


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial(GaussianRational(2), 1)
    m = mono(I_UNIT, 3)
    assert m.power(2).unit == -1 and m.power(2).exponent == 6
    assert (m * m.inverse()).exponent == 0


def test_j_q_q2_sum_of_signed_squares():
    s = theta_j(jtheta(1, 1, 2), 10)
    assert ints(s, 10) == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]


def test_j_minus_one_constant_term():
    assert Jbar(0, 1, 6).coeff(0) == 2


def test_product_and_sum_routes_agree():
    for zeta, a, m in [(1, 1, 2), (I_UNIT, 1, 2), (-1, 0, 1), (1, 2, 5)]:
        spec = jtheta(zeta, a, m)
        assert series_eq(theta_j(spec, 200), theta_j_sum(spec, 200), 200) is None


def test_sum_route_support_mod_4():
    s = theta_j_sum(jtheta(-1, 4, 8), 80)
    for n in range(80):
        if n % 4:
            assert not s.coeff(n)


def test_normalization_at_exponent_equal_modulus():
    # j(zeta*q^m; q^m) = -zeta^{-1} j(zeta; q^m), net power zero
    lhs = theta_j(jtheta(I_UNIT, 2, 2), 50)
    rhs = theta_j(jtheta(I_UNIT, 0, 2), 50) * GaussianRational(0, 1)
    assert series_eq(lhs, rhs, 50) is None


def test_laurent_arguments_are_hard_errors():
    with pytest.raises(NegativeQPower):
        theta_j(jtheta(1, 3, 2), 20)
    with pytest.raises(NegativeQPower):
        theta_j(jtheta(-1, -1, 2), 20)
    # but an absorbing prefactor makes them legal
    s = theta_j_shifted(jtheta(1, 3, 2), 20, pre_unit=1, pre_exponent=1)
    assert series_eq(s, -theta_j(jtheta(1, 1, 2), 20), 20) is None


def test_zero_theta():
    assert theta_j(jtheta(1, 0, 3), 10).is_zero()
    assert theta_j(jtheta(1, 6, 3), 10).is_zero()


def test_shorthand_preconditions():
    with pytest.raises(ValueError):
        J(0, 2, 10)
    with pytest.raises(ValueError):
        Jbar(4, 4, 10)
    assert Jm(3, 10).coeff(0) == 1


def test_invert_j_i_q2_constant_term():
    from fractions import Fraction

    ji = theta_j(jtheta(I_UNIT, 0, 2), 30)
    assert ji.coeff(0) == GaussianRational(1, -1)
    inv = ji.invert()
    assert inv.coeff(0) == GaussianRational(Fraction(1, 2), Fraction(1, 2))


def test_lemma_identity_j_iq_q2():
    lhs = theta_j(jtheta(I_UNIT, 1, 2), 120)
    rhs = Jm(4, 120) ** 2 * Jm(8, 120).invert()
    assert series_eq(lhs, rhs, 120) is None


def test_product_side_spot_values():
    ps = product_side_series(12)
    assert ints(ps, 12)[:6] == [1, -2, -4, 8, 6, -8]
    assert ints(ps, 12)[7] == 0
    from qident.counting import rep_squares
    assert ints(ps, 12)[4] == rep_squares(3, 4) == 6


def test_product_side_routes_cross_check():
    a = product_side_pochhammer(150)
    b = product_side_theta(150)
    assert series_eq(a, b, 150) is None


def test_rep_count_series_matches_enumeration():
    from qident.counting import rep_count
    rc = rep_count_product_series(60)
    assert ints(rc, 60) == [rep_count(n) for n in range(60)]


def test_q4m_residue_extraction():
    order = 201
    ps = product_side_series(order)
    A, C, D = Jbar(4, 8, order), Jbar(8, 16, order), Jbar(0, 16, order)
    residue0 = A * C * C + (A * D * D).shift(4).truncate(order)
    for n in range(0, order, 4):
        assert ps.coeff(n) == residue0.coeff(n)
        assert ps.coeff(n).re >= 0


def test_full_suite_at_200():
    report = verify_theta_suite(200)
    assert report.passed, [c for c in report.checks if not c.passed]


def test_route_disagreement_raises(monkeypatch):
    import qident.theta as T
    from qident.theta import InternalCrossCheckFailure

    real = T.product_side_theta

    def skewed(order):
        return real(order) + QSeries.monomial(1, 3, order)

    monkeypatch.setattr(T, "product_side_theta", skewed)
    with pytest.raises(InternalCrossCheckFailure):
        T.product_side_series(20)


def test_corrupted_series_is_reported_with_locus():
    from qident.report import series_check

    good = theta_j(jtheta(1, 1, 2), 40)
    bad = good + QSeries.monomial(1, 9, 40)
    check = series_check("jq_q2_corrupted", good, bad, 40)
    assert not check.passed
    assert check.locus == 9
    assert check.name == "jq_q2_corrupted"
