"""Exact integer arithmetic helpers: primes, totient, bounded big powers.

Bound evaluation never touches floats; comparisons against astronomically
large powers run by clamped square-and-multiply.
"""

from __future__ import annotations

import math
from functools import reduce

from .config import MATERIALIZE_MAX_BITS


def is_prime(n: int) -> bool:
    """Trial-division primality; fine at catalog scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factorization(n: int) -> dict[int, int]:
    """Map prime -> multiplicity for n >= 1."""
    if n < 1:
        raise ValueError(f"expected positive integer, got {n}")
    out: dict[int, int] = {}
    m = n
    f = 2
    while f * f <= m:
        while m % f == 0:
            out[f] = out.get(f, 0) + 1
            m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(sorted(prime_factorization(n)))


def primes_with_multiplicity(n: int) -> tuple[int, ...]:
    """Prime divisors repeated by multiplicity, ascending (Omega-list)."""
    out: list[int] = []
    for p, k in sorted(prime_factorization(n).items()):
        out.extend([p] * k)
    return tuple(out)


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    part = 1
    while n % p == 0:
        part *= p
        n //= p
    return part


def totient(n: int) -> int:
    phi = n
    for p in prime_factorization(n):
        phi -= phi // p
    return phi


def least_primitive_root(p: int) -> int:
    """Least primitive root mod prime p; none exists for p = 2 in our use."""
    order = p - 1
    factors = prime_divisors(order)
    for r in range(2, p):
        if all(pow(r, order // q, p) != 1 for q in factors):
            return r
    raise ValueError(f"no primitive root found mod {p}")


def multiplicative_order(a: int, m: int) -> int:
    """Least k >= 1 with a^k = 1 mod m; a must be a unit mod m."""
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit mod {m}")
    k = 1
    x = a % m
    while x != 1:
        x = x * a % m
        k += 1
    return k


def lcm_all(values) -> int:
    return reduce(math.lcm, values, 1)


def product(values) -> int:
    return reduce(lambda a, b: a * b, values, 1)


def pow_at_least(base: int, exp: int, limit: int) -> bool:
    """Whether base**exp >= limit, never materializing past limit**2."""
    if base < 0 or exp < 0:
        raise ValueError("expected nonnegative base and exponent")
    if base <= 1:
        return (base**min(exp, 1)) >= limit
    if limit <= 1:
        return True
    acc = 1
    b = base
    e = exp
    while e:
        if b >= limit:
            return True  # remaining exponent >= 1, so result >= b
        if e & 1:
            acc *= b
            if acc >= limit:
                return True
        e >>= 1
        if e:
            b *= b
    return acc >= limit


def pow_bits_upper(base: int, exp: int) -> int:
    """Upper bound on bit length of base**exp (exact integer estimate)."""
    if base <= 1 or exp == 0:
        return 1
    return base.bit_length() * exp


def pow_bits_lower(base: int, exp: int) -> int:
    """Certified lower bound on bit length of base**exp: base >= 2^(bits-1)."""
    if base <= 1 or exp == 0:
        return 1
    return (base.bit_length() - 1) * exp


def materialize_pow(base: int, exp: int, max_bits: int = MATERIALIZE_MAX_BITS):
    """base**exp as an int when its size fits max_bits, else None."""
    if pow_bits_upper(base, exp) > max_bits:
        return None
    return base**exp
