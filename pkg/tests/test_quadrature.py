import math

import pytest

from altzeta import integrate_adaptive, integrate_oscillatory_tail
from altzeta.errors import InvalidInterval, NonConvergence


def test_linear():
    r = integrate_adaptive(lambda t: t, 0.0, 1.0)
    assert abs(r.value - 0.5) < 1e-12
    assert r.err_est <= 1e-10


def test_inverse_square_to_infinity():
    r = integrate_adaptive(lambda t: t ** -2, 1.0, math.inf)
    assert abs(r.value - 1.0) < 1e-10


def test_exponential_to_infinity():
    r = integrate_adaptive(lambda t: math.exp(-t), 0.0, math.inf)
    assert abs(r.value - 1.0) < 1e-10


def test_split_invariance():
    f = lambda t: math.exp(-t) * math.sin(3 * t) ** 2 / (1 + t)
    tol = 1e-10
    whole = integrate_adaptive(f, 0.0, 5.0, tol=tol)
    for cut in (0.1, 1.7, 4.9):
        split = (integrate_adaptive(f, 0.0, cut, tol=tol).value
                 + integrate_adaptive(f, cut, 5.0, tol=tol).value)
        assert abs(whole.value - split) <= 2 * tol


def test_invalid_interval():
    with pytest.raises(InvalidInterval):
        integrate_adaptive(lambda t: t, 1.0, 1.0)
    with pytest.raises(InvalidInterval):
        integrate_adaptive(lambda t: t, 2.0, 1.0)


def test_nonconvergence_carries_partial():
    # integrable but nasty endpoint at the requested extreme tolerance
    with pytest.raises(NonConvergence) as exc:
        integrate_adaptive(lambda t: abs(math.sin(1.0 / t)) / math.sqrt(t), 0.0, 1.0, tol=1e-14)
    assert exc.value.result is not None


def test_oscillatory_tail_vs_frozen():
    # int_1^inf sin(pi t)/t^2 dt, 25-digit oracle value
    r = integrate_oscillatory_tail(lambda t: t ** -2, 1.0, math.pi, tol=1e-13)
    assert abs(r.value - (-0.2314345712903493381150981)) < 1e-12


def test_oscillatory_tail_off_grid_start():
    # start point not on a sine zero exercises the head piece
    r = integrate_oscillatory_tail(lambda t: t ** -2, 1.3, math.pi, tol=1e-12)
    full = integrate_oscillatory_tail(lambda t: t ** -2, 1.0, math.pi, tol=1e-12)
    head = integrate_adaptive(lambda t: math.sin(math.pi * t) / t ** 2, 1.0, 1.3, tol=1e-12)
    assert abs(full.value - (head.value + r.value)) < 1e-11
