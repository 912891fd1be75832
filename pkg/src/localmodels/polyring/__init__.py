"""Exact multivariate polynomial arithmetic and Groebner bases over QQ and GF(p)."""
from .field import GF, QQ, Field, is_prime
from .ideal import (
    INFINITE,
    Ideal,
    groebner_basis,
    ideal_contains,
    ideal_equal,
    ideal_member,
    normal_form,
    quotient_dimension,
    substitute,
)
from .ring import ORDERS, PolyRing, Polynomial, polynomial_ring
from .textio import (
    format_polynomial,
    ideal_from_dict,
    ideal_from_json,
    ideal_to_dict,
    ideal_to_json,
    parse_polynomial,
)

__all__ = [
    "GF", "QQ", "Field", "is_prime", "INFINITE", "Ideal", "groebner_basis",
    "ideal_contains", "ideal_equal", "ideal_member", "normal_form",
    "quotient_dimension", "substitute", "ORDERS", "PolyRing", "Polynomial",
    "polynomial_ring", "format_polynomial", "ideal_from_dict", "ideal_from_json",
    "ideal_to_dict", "ideal_to_json", "parse_polynomial",
]
