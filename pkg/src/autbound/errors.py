"""Exception types raised by table validation, constructors, and searches."""

from __future__ import annotations


class AutboundError(Exception):
    """Base class for all package errors."""


class NotAssociative(AutboundError):
    """Cayley table fails associativity; message names the first bad triple."""


class NoIdentity(AutboundError):
    """Cayley table has no two-sided identity element."""


class NotLatinSquare(AutboundError):
    """A table row or column is not a permutation of the element indices."""


class InvalidPermutation(AutboundError):
    """Image sequence is not a bijection on 0..degree-1."""


class ClosureExceeded(AutboundError):
    """Generated permutation group grew past the requested order cap."""


class OrderTooLarge(AutboundError):
    """Requested computation is beyond the configured order cap."""


class AutEnumerationTooLarge(OrderTooLarge):
    """Automorphism enumeration would exceed the configured element cap."""


class NotAbelian(AutboundError):
    """Operation requires an abelian group."""


class NotPrime(AutboundError):
    """Argument expected to be a prime number."""


class NotSubgroup(AutboundError):
    """Member list is not a subgroup of the parent group."""


class NotNormal(AutboundError):
    """Subgroup is not normal; message names a violating conjugation."""


class NotInvertibleMap(AutboundError):
    """Mapping expected to be a bijection on the group's elements."""


class NotHomomorphism(AutboundError):
    """Mapping violates f(xy) = f(x)f(y); message names the first bad pair."""


class NoPrimitiveRoot(AutboundError):
    """No primitive root exists for the requested modulus (p = 2 factors)."""


class BadFactorOrder(AutboundError):
    """Factor-mixing target order exceeds the source factor's order."""


class CatalogError(AutboundError):
    """Catalog file is malformed; message carries the line number."""


class DuplicateName(CatalogError):
    """Two catalog records share a name."""


class ExpectationMismatch(AutboundError):
    """Realized group contradicts an expect line in its catalog record."""
