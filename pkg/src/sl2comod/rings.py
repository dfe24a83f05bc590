"""Base rings: subrings of Q obtained by localizing Z.

Elements are plain ``int`` / ``fractions.Fraction`` values; a ring is only a
membership predicate on reduced denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

Scalar = Union[int, Fraction]


def as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    return Fraction(q)


def clean(q):
    """Return ``q`` as an int when it is integral, else as a reduced Fraction."""
    if isinstance(q, Fraction):
        return q.numerator if q.denominator == 1 else q
    return q


def prime_factors(n: int) -> list[int]:
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def _supported_on(n: int, m: int) -> bool:
    # every prime of n divides m
    n = abs(n)
    g = gcd(n, m)
    while g > 1:
        while n % g == 0:
            n //= g
        g = gcd(n, m)
    return n == 1


@dataclass(frozen=True)
class BaseRing:
    """One of Z, Q, Z_(p) or Z[1/m].

    ``kind`` is ``"Z"``, ``"Q"``, ``"Z_p"`` or ``"Z_inv"``; ``param`` carries p or m.
    """

    kind: str = "Z"
    param: int | None = None

    def __post_init__(self):
        if self.kind in ("Z", "Q"):
            if self.param is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        elif self.kind == "Z_p":
            if self.param is None or not is_prime(self.param):
                raise ValueError(f"Z_p needs a prime, got {self.param!r}")
        elif self.kind == "Z_inv":
            if self.param is None or self.param < 2:
                raise ValueError(f"Z_inv needs m >= 2, got {self.param!r}")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    # constructors -----------------------------------------------------
    @classmethod
    def integers(cls) -> BaseRing:
        return cls("Z")

    @classmethod
    def rationals(cls) -> BaseRing:
        return cls("Q")

    @classmethod
    def localized(cls, p: int) -> BaseRing:
        return cls("Z_p", p)

    @classmethod
    def inverted(cls, m: int) -> BaseRing:
        return cls("Z_inv", m)

    @classmethod
    def parse(cls, text: str) -> BaseRing:
        """Parse the flag syntax ``Z``, ``Q``, ``Z_p:5``, ``Z_inv:6``."""
        text = text.strip()
        if ":" in text:
            kind, _, param = text.partition(":")
            return cls(kind, int(param))
        return cls(text)

    def __str__(self) -> str:
        return self.kind if self.param is None else f"{self.kind}:{self.param}"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "Z_p":
            out["p"] = self.param
        elif self.kind == "Z_inv":
            out["m"] = self.param
        return out

    @classmethod
    def from_json(cls, obj: dict) -> BaseRing:
        kind = obj["kind"]
        if kind == "Z_p":
            return cls(kind, int(obj["p"]))
        if kind == "Z_inv":
            return cls(kind, int(obj["m"]))
        return cls(kind)

    # predicates -------------------------------------------------------
    @property
    def is_field(self) -> bool:
        return self.kind == "Q"

    def contains(self, q) -> bool:
        den = as_fraction(q).denominator
        if self.kind == "Z":
            return den == 1
        if self.kind == "Q":
            return True
        if self.kind == "Z_p":
            return den % self.param != 0
        return _supported_on(den, self.param)

    def is_unit(self, q) -> bool:
        q = as_fraction(q)
        if q == 0:
            return False
        return self.contains(q) and self.contains(1 / q)

    def nonunit_part(self, n: int) -> int:
        """Strip from the integer ``n`` every prime that is a unit here."""
        n = abs(n)
        if n == 0:
            return 0
        out = 1
        for p in prime_factors(n):
            if not self.is_unit(p):
                while n % p == 0:
                    n //= p
                    out *= p
        return out

    def is_subring_of(self, other: BaseRing) -> bool:
        """True when the canonical map ``self -> other`` exists (inclusion in Q)."""
        if other.kind == "Q" or self == other or self.kind == "Z":
            return True
        if self.kind == "Q":
            return False
        if self.kind == "Z_p":
            # Z_(p) inverts all primes but p
            return other.kind == "Z_p" and other.param == self.param
        # self is Z[1/m]
        primes = prime_factors(self.param)
        if other.kind == "Z_p":
            return other.param not in primes
        if other.kind == "Z_inv":
            return all(other.param % p == 0 for p in primes)
        return False


ZZ = BaseRing.integers()
QQ = BaseRing.rationals()


def contains(ring: BaseRing, q) -> bool:
    return ring.contains(q)


def is_unit(ring: BaseRing, q) -> bool:
    return ring.is_unit(q)
