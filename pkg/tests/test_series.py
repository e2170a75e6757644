import math

import pytest

from altzeta import alt_series_sum
from altzeta.errors import InvalidConfig, NonConvergence
from altzeta.result import AccelConfig

LOG2 = math.log(2.0)


@pytest.mark.parametrize("scheme", ["cvz", "euler_transform"])
def test_alternating_harmonic(scheme):
    r = alt_series_sum(lambda n: 1.0 / (n + 1), AccelConfig(scheme=scheme))
    assert abs(r.value - LOG2) < 1e-12


def test_direct_scheme_geometric():
    r = alt_series_sum(lambda n: 0.5 ** n, AccelConfig(scheme="direct", max_terms=200,
                                                       target_abs_tol=1e-12))
    assert abs(r.value - 2.0 / 3.0) < 1e-11


def test_known_closed_forms_within_200_terms_cvz():
    # the three reference series all hit 1e-12 inside the 200-term budget
    cases = [
        (lambda n: 1.0 / (n + 1), LOG2),
        (lambda n: 1.0 / (n + 1) ** 2, math.pi ** 2 / 12),
        (lambda n: 0.5 ** n, 2.0 / 3.0),
    ]
    for term, target in cases:
        r = alt_series_sum(term, AccelConfig(max_terms=200))
        assert abs(r.value - target) <= 1e-12
        assert r.terms_used <= 200


def test_schemes_agree_within_combined_err():
    series = [lambda n: 1.0 / (n + 1), lambda n: 1.0 / (n + 1.5) ** 1.2,
              lambda n: math.log(n + 2.0) / (n + 2.0), lambda n: 0.8 ** n]
    for term in series:
        a = alt_series_sum(term, AccelConfig(scheme="cvz"))
        b = alt_series_sum(term, AccelConfig(scheme="euler_transform"))
        assert abs(a.value - b.value) <= a.err_est + b.err_est + 1e-15


def test_skip_head_handling():
    q = 0.3
    full = alt_series_sum(lambda n: math.log(n + q) / (n + q), skip=1)
    frozen = -4.03880274576432122142884055292  # 40-digit alternating-sum oracle
    assert abs(full.value - frozen) < 5e-13


def test_complex_terms():
    z = 2 + 1j
    r = alt_series_sum(lambda n: (n + 1) ** (-z))
    frozen = 0.84768916483741347452 + 0.098268389570016172467j  # 30-digit oracle
    assert abs(r.value - frozen) < 1e-13


def test_invalid_config():
    with pytest.raises(InvalidConfig):
        AccelConfig(target_abs_tol=0.0)
    with pytest.raises(InvalidConfig):
        AccelConfig(max_terms=0)
    with pytest.raises(InvalidConfig):
        AccelConfig(scheme="nope")


def test_nonconvergence_carries_best_estimate():
    # terms decay too slowly for plain summation at this tolerance
    with pytest.raises(NonConvergence) as exc:
        alt_series_sum(lambda n: 1.0 / (n + 1.0), AccelConfig(scheme="direct", max_terms=50))
    best = exc.value.result
    assert best is not None
    assert abs(best.value - LOG2) < 0.05


def test_err_est_below_tol_on_success():
    r = alt_series_sum(lambda n: 1.0 / (n + 1) ** 2, AccelConfig(target_abs_tol=1e-10))
    assert r.err_est <= 1e-10
