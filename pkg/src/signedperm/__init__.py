"""Descent and inverse-descent combinatorics on signed permutations (type B)."""
from .core import (DuplicateMagnitude, Family, OutOfRange, PermClass, SignedPermutation,
                   ValidationError, classify, enumerate_perms, identity, inverse, make,
                   negative_count, parse)
from .statistics import (DescentVector, Order, ResourceLimitError, Triangle, des, descent_set,
                         descent_vector, eulerian_polynomial, ides, two_sided_polynomial,
                         two_sided_triangle)

__version__ = "0.1.0"

__all__ = [
    "DuplicateMagnitude", "Family", "OutOfRange", "PermClass", "SignedPermutation",
    "ValidationError", "classify", "enumerate_perms", "identity", "inverse", "make",
    "negative_count", "parse", "DescentVector", "Order", "ResourceLimitError", "Triangle",
    "des", "descent_set", "descent_vector", "eulerian_polynomial", "ides",
    "two_sided_polynomial", "two_sided_triangle",
]
