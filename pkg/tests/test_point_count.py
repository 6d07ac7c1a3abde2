from collections import Counter

import pytest

from maxcurve.budget import ENV_VAR
from maxcurve.curves import make_custom, make_fermat, make_generalized, make_hermitian, make_hurwitz
from maxcurve.errors import BudgetExceeded, CharacteristicDividesQ, NoGenusFormula
from maxcurve.finite_field import field_create
from maxcurve.point_count import (
    count_points,
    count_points_naive,
    criterion_prediction,
    expected_maximal_count,
    verdict,
)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)]


def diagonal_count(F, m):
    """Projective points on X^m + Y^m + Z^m = 0 from the value distribution of x -> x^m."""
    hist = Counter(x**m for x in F.elements())
    cone = sum(na * nb * hist.get(-(a + b), 0) for a, na in hist.items() for b, nb in hist.items())
    return (cone - 1) // (F.order - 1)


def test_expected_maximal_count():
    assert expected_maximal_count(2, 1) == 9
    assert expected_maximal_count(13, 3) == 248
    assert all(expected_maximal_count(q, 0) == q * q + 1 for q in (2, 3, 4, 5))


def test_count_examples():
    F4 = field_create(2, 1)
    assert count_points(make_hermitian(F4)) == 9
    assert count_points(make_hurwitz(2, F4)) == 9
    assert count_points(make_fermat(7, field_create(13, 1))) == 560 == expected_maximal_count(13, 15)


@pytest.mark.parametrize("p,k,m", [(13, 1, 7), (2, 1, 3), (2, 1, 7), (3, 1, 4), (5, 1, 6), (2, 2, 5), (2, 3, 3)])
def test_fermat_and_hermitian_against_histogram_oracle(p, k, m):
    F = field_create(p, k)
    assert count_points(make_fermat(m, F)) == diagonal_count(F, m)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_hermitian_count(p, k):
    q = p**k
    H = make_hermitian(field_create(p, k))
    assert count_points(H) == q**3 + 1 == expected_maximal_count(q, q * (q - 1) // 2)


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_charts_match_naive_enumeration(p, k):
    F = field_create(p, k)
    curves = [make_hermitian(F), make_fermat(3 if p != 3 else 4, F)]
    for n in (2, 3, 4):
        if (n * n - n + 1) % p:
            curves.append(make_hurwitz(n, F))
    for n, l in ((3, 2), (4, 3), (4, 2)):
        if (n * n - n * l + l * l) % p:
            curves.append(make_generalized(n, l, F))
    for C in curves:
        assert count_points(C) == count_points_naive(C), C


def test_cone_count_oracle_small():
    # affine cone over P^2: nonzero solutions / (q^2 - 1)
    F = field_create(2, 2)
    C = make_hurwitz(2, F)
    elems = list(F.elements())
    cone = sum(1 for x in elems for y in elems for z in elems
               if (x, y, z) != (F.zero,) * 3 and not (x * x * y + y * y * z + z * z * x))
    assert cone % (F.order - 1) == 0
    assert count_points(C) == cone // (F.order - 1)


def test_hurwitz3_over_f169_naive():
    C = make_hurwitz(3, field_create(13, 1))
    assert count_points(C) == count_points_naive(C) == 248


def test_workers_deterministic():
    F = field_create(3, 3)
    for C in (make_hermitian(F), make_hurwitz(3, F)):
        assert count_points(C, workers=4) == count_points(C) == count_points(C, workers=1)


def test_budget_enforced(monkeypatch):
    C = make_hermitian(field_create(13, 1))
    with pytest.raises(BudgetExceeded):
        count_points(C, budget=1000)
    monkeypatch.setenv(ENV_VAR, "1000")
    with pytest.raises(BudgetExceeded):
        count_points(C)
    monkeypatch.setenv(ENV_VAR, str(13**4))
    assert count_points(C) == 13**3 + 1


def test_verdict_hurwitz_examples():
    with pytest.raises(CharacteristicDividesQ):
        make_hurwitz(2, field_create(3, 1))
    v = verdict(make_hurwitz(2, field_create(5, 1)))
    assert (v.expected_maximal, v.observed_count, v.criterion_prediction) == (36, 36, True)
    assert v.is_maximal and v.agree and v.plane_equals_model
    v = verdict(make_hurwitz(3, field_create(13, 1)))
    assert (v.genus_used, v.expected_maximal, v.observed_count) == (3, 248, 248)
    assert v.is_maximal and v.criterion_prediction is True


def test_verdict_non_maximal_and_serialization():
    v = verdict(make_hurwitz(3, field_create(5, 1)))
    assert not v.is_maximal and v.criterion_prediction is False and v.agree
    d = v.to_dict()
    for key in ("family", "params", "p", "k", "q", "genus", "observed", "expected", "maximal", "criterion"):
        assert key in d
    assert d["params"] == {"n": 3} and d["q"] == 5


def test_verdict_generalized_flags():
    F = field_create(13, 1)
    v = verdict(make_generalized(3, 2, F))
    assert v.plane_equals_model and v.is_maximal and v.observed_count == 248
    # gcd(n, l) > 1: several branches over the coordinate points
    v = verdict(make_generalized(4, 2, field_create(5, 1)))
    assert not v.plane_equals_model and v.criterion_prediction is None


def test_verdict_custom_rejected():
    F = field_create(3, 1)
    C = make_custom([(2, 0, 0, F.one), (0, 2, 0, F.one), (0, 0, 2, F.one)], F)
    with pytest.raises(NoGenusFormula):
        verdict(C)
    assert count_points(C) == count_points_naive(C)


def test_criterion_prediction_silent_cases():
    F = field_create(2, 1)
    # 5 is not of the form n^2 - nl + l^2 with gcd 1 and l = 1 or prime
    assert criterion_prediction(make_fermat(5, F)) is None
    assert criterion_prediction(make_fermat(7, F)) is False
    assert criterion_prediction(make_fermat(3, F)) is True
    assert criterion_prediction(make_hermitian(F)) is True


@pytest.mark.parametrize("p,k", SMALL_FIELDS + [(2, 3), (11, 1), (13, 1)])
def test_no_contradictions_and_hasse_weil(p, k):
    F = field_create(p, k)
    curves = [make_hermitian(F)]
    for m in range(2, 10):
        if m % p:
            curves.append(make_fermat(m, F))
    for n in range(2, 6):
        if (n * n - n + 1) % p:
            curves.append(make_hurwitz(n, F))
    for n, l in ((3, 2), (5, 2), (5, 3), (4, 3)):
        if (n * n - n * l + l * l) % p:
            curves.append(make_generalized(n, l, F))
    for C in curves:
        v = verdict(C)
        assert v.hasse_weil_ok, C
        assert v.agree, C
