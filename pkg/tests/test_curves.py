import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxcurve.curves import (
    PlaneCurve,
    ProjectivePoint,
    chart_blocks,
    delta_invariant,
    genus_generalized_hurwitz,
    genus_nonsingular_plane,
    make_custom,
    make_curve,
    make_fermat,
    make_generalized,
    make_hermitian,
    make_hurwitz,
    projective_points,
    singular_locus,
)
from maxcurve.errors import (
    BadParameters,
    CharacteristicDividesM,
    CharacteristicDividesQ,
    MixedFields,
    NoGenusFormula,
)
from maxcurve.finite_field import field_create

F4 = field_create(2, 1)
F9 = field_create(3, 1)
F169 = field_create(13, 1)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2)]


def pt(F, *c):
    return ProjectivePoint.normalize(*(F(x) for x in c))


def test_make_hurwitz_terms():
    C = make_hurwitz(2, F4)
    assert C.degree == 3
    assert sorted(t[:3] for t in C.terms) == sorted([(2, 1, 0), (0, 2, 1), (1, 0, 2)])
    assert all(t[3] == F4.one for t in C.terms)


def test_make_hurwitz_characteristic_divides():
    with pytest.raises(CharacteristicDividesQ):
        make_hurwitz(3, field_create(7, 1))
    with pytest.raises(CharacteristicDividesQ):
        make_hurwitz(2, F9)


def test_make_generalized():
    C = make_generalized(3, 2, F169)
    assert C.degree == 5 and C.genus() == 3
    with pytest.raises(CharacteristicDividesQ):
        make_generalized(3, 2, field_create(7, 1))
    with pytest.raises(BadParameters):
        make_generalized(2, 3, F169)
    # l = 1 is the Hurwitz family
    assert make_generalized(3, 1, F169).family == "hurwitz"


def test_make_fermat_and_hermitian():
    assert make_hermitian(F9).degree == 4
    assert make_fermat(7, F169).genus() == 15
    with pytest.raises(BadParameters):
        make_fermat(0, F4)
    with pytest.raises(CharacteristicDividesM):
        make_fermat(4, F4)


@pytest.mark.parametrize("d,g", [(3, 1), (4, 3), (5, 6), (1, 0), (2, 0)])
def test_genus_nonsingular_plane(d, g):
    assert genus_nonsingular_plane(d) == g


def test_hermitian_genus_matches_top_genus():
    for q in (2, 3, 4, 5):
        assert genus_nonsingular_plane(q + 1) == q * (q - 1) // 2


def test_delta_and_genus_examples():
    assert delta_invariant(3, 2) == 1
    assert delta_invariant(5, 2) == 2
    assert all(delta_invariant(n, n) == n * (n - 1) // 2 for n in range(2, 20))
    assert genus_generalized_hurwitz(3, 2) == 3
    assert genus_generalized_hurwitz(5, 2) == 9
    with pytest.raises(BadParameters):
        genus_generalized_hurwitz(3, 1)
    with pytest.raises(BadParameters):
        delta_invariant(3, 1)


def test_genus_identity():
    for n in range(2, 41):
        for l in range(2, n + 1):
            g = genus_generalized_hurwitz(n, l)
            delta = delta_invariant(n, l)
            assert g >= 0 and delta >= 0
            assert genus_nonsingular_plane(n + l) - 3 * delta == g


def test_terms_are_homogeneous():
    F = field_create(11, 1)
    curves = [make_hermitian(F), make_hurwitz(4, F), make_generalized(5, 3, F), make_fermat(6, F)]
    for C in curves:
        assert len(C.terms) == 3
        assert all(i + j + k == C.degree for i, j, k, _ in C.terms)


def test_make_custom_merges_and_checks():
    t = F9.gen
    C = make_custom([(2, 0, 0, F9.one), (0, 2, 0, t), (2, 0, 0, F9.one), (0, 0, 2, F9(1))], F9)
    assert C.degree == 2
    assert (2, 0, 0, F9(2)) in C.terms
    # like terms cancelling to zero disappear
    C2 = make_custom([(1, 0, 0, F9.one), (1, 0, 0, F9(2)), (0, 1, 0, F9.one)], F9)
    assert [tm[:3] for tm in C2.terms] == [(0, 1, 0)]
    with pytest.raises(BadParameters):
        make_custom([(2, 0, 0, F9.one), (0, 1, 0, F9.one)], F9)
    with pytest.raises(NoGenusFormula):
        C.genus()


def test_evaluate_examples():
    t = F4.gen
    assert t**3 == F4.one
    H = make_hermitian(F4)
    assert H.is_on_curve(pt(F4, 0, 1, t))
    assert make_hurwitz(2, F4).evaluate(pt(F4, 1, 0, 0)) == 0
    fermat = make_fermat(3, F4)
    assert fermat.evaluate(pt(F4, 1, 1, 1)) == F4.one
    assert not fermat.is_on_curve(pt(F4, 1, 1, 1))


def test_evaluate_mixed_fields():
    with pytest.raises(MixedFields):
        make_hermitian(F4).evaluate(pt(F9, 1, 1, 1))


def test_projective_point_normalization():
    P = pt(F9, 0, 2, F9.gen)
    assert P.coords[1] == F9.one
    assert P == pt(F9, 0, 1, F9.gen / 2)
    with pytest.raises(ValueError):
        pt(F9, 0, 0, 0)


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_projective_points_enumeration(p, k):
    F = field_create(p, k)
    pts = list(projective_points(F))
    Q = F.order
    assert len(pts) == Q * Q + Q + 1 == len(set(pts))
    # every nonzero triple normalizes onto an enumerated point
    sample = itertools.islice(itertools.product(F.elements(), repeat=3), 1, 400)
    seen = set(pts)
    for c in sample:
        assert ProjectivePoint.normalize(*c) in seen


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_chart_blocks_partition(p, k):
    F = field_create(p, k)
    triples = []
    for block in chart_blocks(F, max_cells=50):
        X, Y, Z = (a.ravel().tolist() for a in np.broadcast_arrays(*block))
        triples.extend(zip(X, Y, Z))
    expected = [tuple(c.index for c in P) for P in projective_points(F)]
    assert triples == expected


def test_singular_locus_examples():
    assert singular_locus(make_hurwitz(2, F4)) == []
    assert singular_locus(make_hermitian(F9)) == []
    sing = singular_locus(make_generalized(3, 2, F169))
    assert set(sing) == {pt(F169, 1, 0, 0), pt(F169, 0, 1, 0), pt(F169, 0, 0, 1)}


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_hurwitz_nonsingular_when_allowed(p, k):
    F = field_create(p, k)
    for n in range(2, 8):
        if (n * n - n + 1) % p == 0:
            continue
        assert singular_locus(make_hurwitz(n, F)) == []


def test_partials_are_formal():
    C = make_hurwitz(2, F4)
    # d/dX (X^2 Y + Y^2 Z + Z^2 X) = 2XY + Z^2 = Z^2 in characteristic 2
    assert [t[:3] for t in C.partial(0).terms] == [(0, 0, 2)]


@pytest.mark.parametrize("C", [
    make_hermitian(F169),
    make_hurwitz(3, F169),
    make_generalized(3, 2, F169),
    make_fermat(7, F169),
])
def test_text_and_json_roundtrip(C):
    assert PlaneCurve.from_text(C.to_text()) == C
    assert PlaneCurve.from_json(C.to_json()) == C


def test_text_forms():
    assert make_generalized(3, 2, F169).to_text() == "generalized:3,2:13:1"
    assert make_hermitian(F169).to_text() == "hermitian::13:1"
    with pytest.raises(BadParameters):
        PlaneCurve.from_text("hurwitz:3:4:1")
    with pytest.raises(BadParameters):
        PlaneCurve.from_text("elliptic:3:13:1")


def test_custom_json_roundtrip():
    C = make_custom([(3, 0, 0, F9.gen), (0, 2, 1, F9.one), (1, 1, 1, F9(2))], F9)
    assert PlaneCurve.from_json(C.to_json()) == C
    with pytest.raises(ValueError):
        C.to_text()


def test_make_curve_dispatch():
    assert make_curve("hurwitz", F169, n=3) == make_hurwitz(3, F169)
    assert make_curve("fermat", F169, m=7) == make_fermat(7, F169)
    with pytest.raises(BadParameters):
        make_curve("nope", F169)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 168), st.integers(0, 168), st.integers(0, 168), st.sampled_from(range(4)))
def test_zero_mask_agrees_with_evaluate(i, j, k, which):
    if i == j == k == 0:
        return
    C = [make_hermitian(F169), make_hurwitz(3, F169), make_generalized(3, 2, F169), make_fermat(7, F169)][which]
    P = ProjectivePoint.from_indices(F169, i, j, k)
    mask = C.zero_mask(*(np.array([c.index]) for c in P))
    assert bool(mask[0]) == C.is_on_curve(P)
