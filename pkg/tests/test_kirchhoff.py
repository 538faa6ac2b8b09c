from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qnk.group_core import EnhancedParams, ParameterError
from qnk.kirchhoff import (
    CertificateError,
    DomainError,
    MonotonicityCertificate,
    asymptotic_sequences,
    bounds,
    delta_k,
    delta_unified,
    even_binomial_identity_sides,
    f_double_sum,
    f_integral,
    kf_closed_form,
    kf_folded,
    kf_from_laplacian,
    kf_k_max,
    limit_ratio,
    monotonicity_certificate,
)
from qnk.spectrum import ADJACENCY, LAPLACIAN, Spectrum, laplacian_spectrum

P = EnhancedParams


def lap(entries, n):
    return Spectrum(tuple(sorted(entries.items(), reverse=True)), n, LAPLACIAN)


def test_kf_from_laplacian_examples():
    assert kf_from_laplacian(lap({0: 1, 4: 3}, 2)) == 3
    assert kf_from_laplacian(lap({0: 1, 4: 6, 8: 1}, 3)) == 13
    assert kf_from_laplacian(lap({0: 1, 2: 1, 4: 3, 6: 3}, 3)) == 14


def test_kf_from_laplacian_rejects_disconnected_and_adjacency():
    with pytest.raises(DomainError):
        kf_from_laplacian(lap({0: 2, 4: 2}, 2))
    with pytest.raises(DomainError):
        kf_from_laplacian(Spectrum(((3, 1), (-1, 3)), 2, ADJACENCY))


def test_kf_closed_form_examples():
    assert kf_closed_form(P(4, 2)) == Fraction(258, 5)
    assert kf_closed_form(P(4, 3)) == 54
    assert kf_closed_form(P(5, 1)) == Fraction(548, 3)  # 182.67, printed as 182.7


@pytest.mark.parametrize("n", range(2, 31))
def test_closed_form_equals_spectral_formula(n):
    for k in range(1, n):
        assert kf_closed_form(P(n, k)) == kf_from_laplacian(laplacian_spectrum(P(n, k)))


def test_binomial_identity_examples():
    assert even_binomial_identity_sides(1) == (Fraction(1, 2), Fraction(1, 2))
    assert even_binomial_identity_sides(2) == (Fraction(3, 2), Fraction(3, 2))
    # both sides evaluated by hand: 15/2 + 15/4 + 1/6 and 1/2 + 1 + 7/4 + 3 + 31/6
    assert even_binomial_identity_sides(5) == (Fraction(137, 12), Fraction(137, 12))
    with pytest.raises(ParameterError):
        even_binomial_identity_sides(0)


def test_kf_folded_examples():
    assert kf_folded(2) == 3
    assert kf_folded(3) == 13
    assert kf_folded(8) == 8272


def test_kf_k_max_examples():
    assert kf_k_max(2) == 3
    assert kf_k_max(3) == 14
    assert kf_k_max(4) == 54


@pytest.mark.parametrize("n", range(2, 31))
def test_special_cases_collapse(n):
    assert kf_folded(n) == kf_closed_form(P(n, 1))
    assert kf_k_max(n) == kf_closed_form(P(n, n - 1))


def test_delta_examples():
    assert delta_k(3, 1) == 1
    assert delta_k(4, 1) == Fraction(8, 5)
    with pytest.raises(ParameterError):
        delta_k(4, 3)


@pytest.mark.parametrize("n", range(3, 21))
def test_delta_positive_and_first_increment(n):
    assert delta_k(n, 1) == Fraction(2 ** (n - 1), n + 1)
    for k in range(1, n - 1):
        d = delta_k(n, k)
        assert d > 0
        assert d == delta_unified(n, k)


def test_certificate_examples():
    assert f_integral(2, 1) == Fraction(1, 6)
    assert f_integral(3, 2) == Fraction(1, 4)
    cert = monotonicity_certificate(5, 3)
    assert cert.f_sum == cert.f_integral >= 0
    assert cert.delta == delta_k(5, 3)
    assert monotonicity_certificate(5, 4).delta is None


def test_certificate_rejects_inconsistent_values():
    with pytest.raises(CertificateError):
        MonotonicityCertificate(3, 1, Fraction(1), Fraction(2), None)
    with pytest.raises(CertificateError):
        MonotonicityCertificate(3, 1, Fraction(-1), Fraction(-1), None)
    with pytest.raises(CertificateError):
        MonotonicityCertificate(4, 1, Fraction(1), Fraction(1), Fraction(0))


def _simpson_integral(n, k, steps=2000):
    h = 1 / steps
    f = lambda u: u * (1 - u) ** (n - k) * (1 + u) ** (k - 1)
    s = f(0) + f(1) + sum((4 if i % 2 else 2) * f(i * h) for i in range(1, steps))
    return s * h / 3


@pytest.mark.parametrize("n,k", [(4, 2), (7, 3), (10, 9), (12, 1)])
def test_integral_against_quadrature(n, k):
    assert float(f_integral(n, k)) == pytest.approx(_simpson_integral(n, k), rel=1e-9)


@settings(max_examples=60)
@given(st.integers(4, 20), st.data())
def test_increment_recurrence(n, data):
    k = data.draw(st.integers(1, n - 3))
    assert delta_k(n, k + 1) - delta_k(n, k) == 2**n * f_double_sum(n, k)


def test_bounds_examples():
    assert bounds(3) == (13, 14)
    assert bounds(2) == (3, 3)
    lo, hi = bounds(10)
    assert round(lo, -1) == 106870 and round(hi, -1) == 108480


def test_limit_ratio_examples():
    assert limit_ratio(2, 1) == Fraction(9, 16)
    assert limit_ratio(10, 1) == Fraction(534336, 5) * 11 / 2**20
    assert float(limit_ratio(10, 1)) == pytest.approx(1.12108, abs=1e-5)


def test_asymptotic_sequences_examples():
    assert asymptotic_sequences(3) == (Fraction(13, 16), Fraction(7, 8))
    a, b = asymptotic_sequences(100)
    assert abs(a - 1) < Fraction(1, 10) and abs(b - 1) < Fraction(1, 10)
    with pytest.raises(ParameterError):
        asymptotic_sequences(2)


@pytest.mark.parametrize("n", range(3, 31))
def test_sandwich(n):
    a, b = asymptotic_sequences(n)
    assert a <= b
    for k in range(1, n):
        assert a <= limit_ratio(n, k) <= b
