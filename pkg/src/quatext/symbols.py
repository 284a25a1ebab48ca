"""Residue symbols and prime-discriminant factorizations.

Every fundamental discriminant factors uniquely into prime discriminants:
-4, 8, -8 and p* = (-1)^((p-1)/2) p for odd primes p.  That factorization
and the quadratic/quartic symbols on it drive everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from ._intmath import is_prime, is_squarefree
from .errors import InternalInvariant, NotFundamental, SymbolDomain

__all__ = [
    "kronecker",
    "quartic_symbol",
    "quartic_symbol_composite",
    "is_fundamental",
    "prime_discriminant",
    "factor_discriminant",
    "DiscriminantFactorization",
    "disc_sort_key",
]


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integers a, n."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # n is now odd and positive; standard Jacobi loop with reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def quartic_symbol(a: int, p: int) -> int:
    """Rational quartic residue symbol (a/p)_4 in {1, -1}.

    For p = 2 it is defined for a = 1 (mod 8) as (-1)^((a-1)/8).
    For odd p it needs p prime, p = 1 (mod 4) and a a nonzero square mod p;
    the value is a^((p-1)/4) mod p, which is then +-1.
    """
    if p == 2:
        if a % 8 != 1:
            raise SymbolDomain(f"(a/2)_4 needs a = 1 (mod 8), got a = {a}")
        return -1 if ((a - 1) // 8) % 2 else 1
    if p < 3 or not is_prime(p):
        raise SymbolDomain(f"quartic symbol modulus must be 2 or an odd prime, got {p}")
    if p % 4 != 1:
        raise SymbolDomain(f"(a/{p})_4 needs p = 1 (mod 4)")
    if a % p == 0:
        raise SymbolDomain(f"(a/{p})_4 needs a nonzero mod {p}")
    if kronecker(a, p) != 1:
        raise SymbolDomain(f"(a/{p})_4 needs a to be a square mod {p}")
    r = pow(a % p, (p - 1) // 4, p)
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise InternalInvariant(f"a^((p-1)/4) = {r} mod {p} is not +-1 for a square a")


def quartic_symbol_composite(a: int, modulus: int) -> int:
    """Product of (a/p)_4 over the distinct primes p of a positive modulus.

    The modulus must be a positive discriminant-like integer: odd with
    squarefree value = 1 (mod 4), or divisible by 8 with odd part squarefree.
    The prime 2 enters the product exactly once when 8 | modulus.  A modulus
    = 4 (mod 8) carries a factor -4 whose quartic character is undefined.
    """
    if modulus <= 0:
        raise SymbolDomain(f"composite quartic modulus must be positive, got {modulus}")
    factors: list[int] = []
    m = modulus
    if m % 2 == 0:
        if m % 8 != 0:
            raise SymbolDomain(f"modulus {modulus} = {modulus % 8} (mod 8) has no quartic symbol")
        factors.append(2)
        while m % 2 == 0:
            m //= 2
    elif m % 4 != 1:
        raise SymbolDomain(f"odd quartic modulus must be 1 (mod 4), got {modulus}")
    if not is_squarefree(m):
        raise SymbolDomain(f"odd part of quartic modulus {modulus} must be squarefree")
    from ._intmath import prime_factors

    factors.extend(prime_factors(m))
    return prod(quartic_symbol(a, p) for p in factors)


def is_fundamental(d: int) -> bool:
    """True iff d is a fundamental discriminant (of a quadratic field)."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def prime_discriminant(p: int) -> int:
    """The prime discriminant attached to the odd prime p: +-p = 1 (mod 4)."""
    if not is_prime(p) or p == 2:
        raise SymbolDomain(f"{p} is not an odd prime")
    return p if p % 4 == 1 else -p


def disc_sort_key(v: int) -> tuple[int, int]:
    """Canonical part order: negatives first, then ascending absolute value."""
    return (0 if v < 0 else 1, abs(v))


@dataclass(frozen=True)
class DiscriminantFactorization:
    """A fundamental discriminant and its prime-discriminant parts."""

    d: int
    parts: tuple[int, ...]

    def __str__(self) -> str:
        return " * ".join(str(p) for p in self.parts)


def factor_discriminant(d: int) -> DiscriminantFactorization:
    """Split a fundamental discriminant into its prime discriminants.

    The parts are pairwise coprime, each is -4, +-8 or +-p, their product
    is d, and they come back in canonical order (negatives first, then by
    absolute value).
    """
    if not is_fundamental(d):
        raise NotFundamental(f"{d} is not a fundamental discriminant")
    from ._intmath import prime_factors

    odd_parts = [prime_discriminant(p) for p in prime_factors(d) if p != 2]
    two_part = d // prod(odd_parts) if odd_parts else d
    parts = list(odd_parts)
    if two_part != 1:
        if two_part not in (-4, 8, -8):
            raise InternalInvariant(f"2-part of {d} came out as {two_part}")
        parts.append(two_part)
    parts.sort(key=disc_sort_key)
    return DiscriminantFactorization(d=d, parts=tuple(parts))
