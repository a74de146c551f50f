from __future__ import annotations

import random
from dataclasses import dataclass

from sympy import isprime, nextprime

# prime-selection seed for multi-modular characteristic-0 ranks
DEFAULT_PRIME_SEED = 0xC0FFEE
PRIME_BITS = 62


@dataclass(frozen=True)
class FieldSpec:
    """Characteristic selector: 0 for the rationals, otherwise a prime p for GF(p)."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p != 0 and not isprime(p)):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")

    @classmethod
    def of(cls, field: "FieldSpec | int") -> "FieldSpec":
        return field if isinstance(field, FieldSpec) else cls(int(field))

    @property
    def p(self) -> int:
        return self.characteristic

    def reduce(self, value):
        """Map an integer (or a Fraction in characteristic p) into the field."""
        if self.characteristic == 0:
            return value
        p = self.characteristic
        den = getattr(value, "denominator", 1)
        num = getattr(value, "numerator", value)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
        return num * pow(den, -1, p) % p

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


def random_primes(count: int, seed: int = DEFAULT_PRIME_SEED, bits: int = PRIME_BITS) -> list[int]:
    """``count`` distinct primes of ``bits`` bits, reproducible from ``seed``."""
    rng = random.Random(seed)
    primes: list[int] = []
    while len(primes) < count:
        start = rng.getrandbits(bits - 1) | (1 << (bits - 1))
        q = nextprime(start)
        if q.bit_length() == bits and q not in primes:
            primes.append(q)
    return primes
