import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from altzeta import ddreal as dd
from altzeta.ddreal import ExtReal, ext_arith
from altzeta.errors import DomainError


def as_float(x: ExtReal) -> float:
    return x.hi + x.lo


def test_add_keeps_tiny_tail_exactly():
    r = ext_arith("add", 1.0, 2.0 ** -60)
    assert r.hi == 1.0
    assert r.lo == 2.0 ** -60


def test_mul_identity():
    x = ExtReal(1.2345678901234567, 3.1e-17)
    r = ext_arith("mul", x, 1.0)
    assert r.hi == x.hi and r.lo == x.lo


def test_log_exp_inverse_pair():
    r = ext_arith("log", ext_arith("exp", 1.0))
    assert abs(as_float(r) - 1.0) < 1e-25


def test_exp_matches_constant():
    assert abs(as_float(dd.add(dd.exp(ExtReal(1.0)), -dd.DD_E))) < 1e-30


def test_div_reconstructs():
    third = dd.div(dd.DD_ONE, ExtReal(3.0))
    assert abs(as_float(dd.add(dd.mul(third, ExtReal(3.0)), -dd.DD_ONE))) < 1e-31


def test_pow_sqrt_agree():
    a = dd.pow_(ExtReal(2.0), ExtReal(0.5))
    b = dd.sqrt(ExtReal(2.0))
    assert abs(as_float(dd.add(a, -b))) < 1e-30


def test_rel_error_budget_arith():
    # representative mixed computation vs a 50-digit Decimal oracle
    from decimal import Decimal, getcontext

    getcontext().prec = 50
    xs = "1.234567890123456789012345678901"
    ys = "0.987654321098765432109876543210"
    x = ExtReal.from_decimal_str(xs)
    y = ExtReal.from_decimal_str(ys)
    z = dd.div(dd.mul(dd.add(x, y), y), x)
    expected = (Decimal(xs) + Decimal(ys)) * Decimal(ys) / Decimal(xs)
    err = abs(Decimal(z.hi) + Decimal(z.lo) - expected)
    assert err < Decimal("1e-28") * expected


def test_transcendental_budget():
    x = ExtReal.from_decimal_str("2.718281828459045235360287471352")
    r = dd.log(x)
    assert abs(as_float(r) - 1.0) < 1e-25


def test_domain_errors():
    with pytest.raises(DomainError):
        dd.log(ExtReal(-1.0))
    with pytest.raises(DomainError):
        ext_arith("div", 1.0, 0.0)
    with pytest.raises(DomainError):
        ext_arith("nosuch", 1.0, 1.0)


def test_log1p_consistent_with_log():
    for v in (1e-9, 0.01, -0.2, 0.249):
        a = dd.log1p(ExtReal(v))
        b = dd.log(dd.add(dd.DD_ONE, ExtReal(v)))
        assert abs(as_float(dd.add(a, -b))) < 1e-31


def test_comparisons_and_abs():
    assert ExtReal(1.0, 1e-20) > ExtReal(1.0)
    assert abs(ExtReal(-2.0, 1e-17)) == ExtReal(2.0, -1e-17)
    assert ExtReal(0.5) <= 0.5


@settings(max_examples=300, deadline=None)
@given(
    st.floats(min_value=-1e10, max_value=1e10, allow_nan=False),
    st.floats(min_value=-1e10, max_value=1e10, allow_nan=False),
)
def test_add_sub_roundtrip(x, y):
    # (x + y) - y reproduces x to <= 1 ulp of the double-double format
    xd = ExtReal(x)
    r = dd.add(dd.add(xd, ExtReal(y)), ExtReal(-y))
    err = abs(as_float(dd.add(r, -xd)))
    scale = max(abs(x), abs(y), 1e-300)
    assert err <= scale * 2.0 ** -105


@settings(max_examples=150, deadline=None)
@given(st.floats(min_value=1e-8, max_value=1e8, allow_nan=False))
def test_exp_log_roundtrip_property(x):
    r = dd.exp(dd.log(ExtReal(x)))
    assert abs(as_float(r) - x) <= 1e-25 * x


def test_to_decimal_digits():
    s = str(dd.DD_PI.to_decimal(25))
    assert s.startswith("3.141592653589793238462643")
    assert len(s.replace(".", "")) == 25
