"""Maximal plane curves over F_{q^2}: criteria, brute-force counts, bounds, semigroups, coverings."""

from .curves import (
    PlaneCurve,
    ProjectivePoint,
    make_custom,
    make_fermat,
    make_generalized,
    make_hermitian,
    make_hurwitz,
)
from .finite_field import FieldDescriptor, FieldElement, field_create
from .point_count import MaximalityVerdict, count_points, expected_maximal_count, verdict

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "MaximalityVerdict",
    "PlaneCurve",
    "ProjectivePoint",
    "count_points",
    "expected_maximal_count",
    "field_create",
    "make_custom",
    "make_fermat",
    "make_generalized",
    "make_hermitian",
    "make_hurwitz",
    "verdict",
]

__version__ = "0.1.0"
