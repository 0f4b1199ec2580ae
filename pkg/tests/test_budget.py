import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperfold.budget import (
    Budget,
    BudgetExceeded,
    EvalStats,
    MagnitudeExceeded,
    Meter,
    checked_pow,
    decimal_digits,
    decimal_to_int,
    int_to_decimal,
    magnitude_limit,
)


def test_budget_defaults_and_validation():
    b = Budget()
    assert b.max_steps == 10**7
    assert b.max_digits == 10**5
    with pytest.raises(ValueError):
        Budget(max_steps=0)
    with pytest.raises(ValueError):
        Budget(max_digits=0)


@settings(max_examples=200)
@given(st.integers(0, 10**40))
def test_decimal_digits_matches_str(n):
    assert decimal_digits(n) == len(str(n))


def test_decimal_digits_boundaries():
    for e in (1, 2, 5, 17, 100):
        assert decimal_digits(10**e - 1) == e
        assert decimal_digits(10**e) == e + 1


def test_magnitude_limit_is_first_overflowing_value():
    assert decimal_digits(magnitude_limit(5) - 1) == 5
    assert decimal_digits(magnitude_limit(5)) == 6


def test_meter_spend_clamps_at_limit():
    meter = Meter(Budget(max_steps=10, max_digits=5))
    meter.spend(10)
    with pytest.raises(BudgetExceeded):
        meter.spend()
    assert meter.steps == 10  # never reported above the budget


def test_meter_note_trips_on_magnitude():
    meter = Meter(Budget(max_steps=10, max_digits=3))
    meter.note(999)
    with pytest.raises(MagnitudeExceeded):
        meter.note(1000)


def test_stats_combined():
    a = EvalStats(steps_used=3, peak_digits=2)
    b = EvalStats(steps_used=4, peak_digits=9)
    assert a.combined(b) == EvalStats(steps_used=7, peak_digits=9)


@settings(max_examples=120)
@given(st.integers(2, 50), st.integers(0, 60))
def test_checked_pow_matches_builtin(base, exponent):
    meter = Meter(Budget(max_steps=10**6, max_digits=10**4))
    assert checked_pow(base, exponent, meter) == base**exponent


def test_checked_pow_trivial_bases():
    meter = Meter(Budget(max_steps=100, max_digits=2))
    # exact digit estimates: no false trip however large the exponent
    assert checked_pow(1, 10**9, meter) == 1
    assert checked_pow(0, 10**9, meter) == 0
    assert checked_pow(7, 0, meter) == 1
    assert meter.steps == 0  # no multiplications happened


def test_checked_pow_fails_fast_before_allocating():
    meter = Meter(Budget(max_steps=10**6, max_digits=50))
    with pytest.raises(MagnitudeExceeded):
        checked_pow(10, 10**12, meter)
    assert meter.steps == 0  # tripped on the estimate, not mid-computation


def test_checked_pow_counts_multiplies():
    meter = Meter(Budget(max_steps=10**6, max_digits=100))
    checked_pow(3, 27, meter)
    # square-and-multiply on a 5-bit exponent: a handful of multiplies,
    # never the 26 of naive repeated multiplication
    assert 0 < meter.steps <= 10


def test_decimal_render_and_parse_large():
    value = 10**4999 + 7
    text = int_to_decimal(value)
    assert len(text) == 5000
    assert decimal_to_int(text) == value
