"""The five families: instantiation, filters, enumeration, scans, exceptions."""

import pytest

from stretchlab.classify import parity_condition
from stretchlab.families import (
    FamilyForm,
    enumerate_admissible,
    instantiate,
    monotonicity_scan,
    primitivity_compatible,
    quotient_exact,
    verify_low_degree_exceptions,
)
from stretchlab.poly import InexactDivisionError, IntPolynomial
from stretchlab.roots import compare_power_to_silver_squared

P = IntPolynomial

SILVER_SQ = 5.828427124746190
MU4 = 6.854101966249685


def test_instantiate_examples():
    assert instantiate(FamilyForm("3A1", (1, 3)), 4) == P((-1, -1, 0, -1, 1))
    assert instantiate(FamilyForm("3A1", (2, 2)), 4) == P((-1, 0, -2, 0, 1))
    # the A*2 representative with P(t) = t^4 - 2t^3 + t^2 - 1: weights (1,1,4)
    assert instantiate(FamilyForm("AStar2", (1, 1, 4)), 4) == P((-1, 0, 1, -2, 1))
    # cross-check by exact multiplication: (t^2-t-1)(t^2-t+1)
    assert P((-1, -1, 1)) * P((1, -1, 1)) == P((-1, 0, 1, -2, 1))


def test_instantiate_reciprocal_convention():
    # P(t) = t^n Q(1/t) means reversing P recovers the clique polynomial
    for form, n, q_coeffs in [
        (FamilyForm("2A1", (1,)), 3, (1, -1, 0, -1)),
        (FamilyForm("4A1", (1, 2, 2)), 5, (1, -1, -2, 0, 0, -1)),
        (FamilyForm("AStar2", (1, 2, 5)), 5, (1, -1, -1, 1, 0, -1)),
    ]:
        p = instantiate(form, n)
        assert p.reverse() == P(q_coeffs)


def test_instantiate_errors():
    with pytest.raises(ValueError):
        instantiate(FamilyForm("3A1", (1, 5)), 4)  # exponent above n
    with pytest.raises(ValueError):
        FamilyForm("3A1", (0, 2))  # nonpositive parameter
    with pytest.raises(ValueError):
        FamilyForm("3A1", (1, 2, 3))  # arity
    with pytest.raises(ValueError):
        instantiate(FamilyForm("AStar2", (1, 1, 3)), 4)  # max(c, a+b) != n
    with pytest.raises(ValueError):
        FamilyForm("6A1", (1,))


def test_primitivity_compatible():
    assert not primitivity_compatible(P((-1, 0, -2, 0, 1)))
    assert primitivity_compatible(P((-1, -1, 0, -1, 1)))
    assert not primitivity_compatible(P((-1, 0, 0, -3, 0, 0, 1)))


def test_enumerate_n4_individual_forms():
    only_3a1 = enumerate_admissible(4, forms=("3A1",))
    assert [r.polynomial for r in only_3a1] == [P((-1, -1, 0, -1, 1))]
    assert abs(float(only_3a1[0].normalized) - MU4) < 1e-9

    only_4a1 = enumerate_admissible(4, forms=("4A1",))
    assert [r.polynomial for r in only_4a1] == [P((-1, -2, -1, 0, 1))]
    assert abs(float(only_4a1[0].normalized) - MU4) < 1e-9


def test_enumerate_n4_all_forms():
    reports = enumerate_admissible(4)
    assert reports, "n=4 must have admissible polynomials"
    assert abs(float(reports[0].normalized) - MU4) < 1e-9
    # includes the 5A1 member (t^2+1)(t^2-2t-1) with value sigma^4
    assert any(r.polynomial == P((-1, -2, 0, -2, 1)) for r in reports)
    assert P((1, 0, 1)) * P((-1, -2, 1)) == P((-1, -2, 0, -2, 1))
    # every admissible value stays above the bound
    for r in reports:
        assert compare_power_to_silver_squared(r.root, 4) >= 0
    # filter soundness: parity follows independently
    for r in reports:
        assert parity_condition(r.polynomial)


def test_enumerate_rejects_known_non_candidates():
    polys = {r.polynomial for r in enumerate_admissible(4)}
    assert P((-1, 0, 0, -1, 1)) not in polys  # t^4 - t^3 - 1: parity fails
    assert P((-1, -2, 0, 0, 1)) not in polys  # t^4 - 2t - 1: not skew up to cyclotomic


def test_enumerate_low_degrees_find_the_exceptions():
    # the n = 2 and n = 3 exceptional values come straight out of the engine
    n2 = enumerate_admissible(2)
    assert n2 and n2[0].polynomial == P((-1, -1, 1))
    assert abs(float(n2[0].normalized) - 2.618033988749895) < 1e-9
    n3 = enumerate_admissible(3)
    assert any(r.polynomial == P((-1, -2, 0, 1)) for r in n3)
    assert abs(float(n3[0].normalized) - 4.23606797749979) < 1e-9


def test_enumerate_cap():
    with pytest.raises(ValueError):
        enumerate_admissible(18)
    with pytest.raises(ValueError):
        enumerate_admissible(1)


def test_quotient_exact_examples():
    assert quotient_exact(P((-1, -2, 0, 1)), P((1, 1))) == P((-1, -1, 1))
    assert quotient_exact(P((-1, -2, -1, 0, 1)), P((1, 1, 1))) == P((-1, -1, 1))
    with pytest.raises(InexactDivisionError) as err:
        quotient_exact(P((-1, -1, 0, 0, 0, -1, 1)), P((1, 0, 1)))
    assert not err.value.remainder.is_zero()


def test_monotonicity_scan_3a1():
    result = monotonicity_scan("3A1", 12, range(0, 6))
    assert result.strictly_increasing
    assert abs(float(result.points[0].normalized) - SILVER_SQ) < 1e-9
    # d = 0 instance is t^12 - 2t^6 - 1
    assert result.points[0].polynomial == P((-1,) + (0,) * 5 + (-2,) + (0,) * 5 + (1,))


def test_monotonicity_scan_4a1():
    result = monotonicity_scan("4A1", 12, range(0, 6))
    assert result.strictly_increasing
    # ((3 + sqrt 13)/2)^2
    assert abs(float(result.points[0].normalized) - 10.908326913195984) < 1e-7


def test_monotonicity_scan_5a1():
    result = monotonicity_scan("5A1", 12, range(0, 3))
    assert result.strictly_increasing
    first = result.points[0]
    assert first.params == (0, 0)
    # (2 + sqrt 5)^2
    assert abs(float(first.normalized) - 17.944271909999159) < 1e-7


def test_scan_errors():
    with pytest.raises(ValueError):
        monotonicity_scan("3A1", 11)
    with pytest.raises(ValueError):
        monotonicity_scan("3A1", 12, [6])
    with pytest.raises(ValueError):
        monotonicity_scan("XX", 12)


def test_low_degree_exceptions():
    report = verify_low_degree_exceptions()
    assert report.ok
    assert report.n2_skew_sign == -1
    assert report.n3_skew_up_to_cyclotomic
    assert report.n3_core == P((-1, -1, 1))
    assert abs(float(report.mu_squared) - 2.618033988749895) < 1e-9
    assert abs(float(report.mu_cubed) - 4.23606797749979) < 1e-9
    assert report.below_bound
    reasons = dict((str(p), why) for p, why in report.excluded_at_4)
    assert reasons["t^4 - t^3 - 1"] == "parity"
    assert reasons["t^4 - 2*t - 1"] == "skew_up_to_cyclotomic"
