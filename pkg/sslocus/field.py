# sslocus/field.py
"""
The field of p^2 elements, built as F_p adjoined a square root w of the least
quadratic nonresidue.

Elements are encoded as integers a + b*p in range(p*p), standing for a + b*w.
Addition, multiplication and inverses are tabulated once per field.
"""

from dataclasses import dataclass
from functools import cached_property

from .errors import NotAnOddPrime
from .utils import is_odd_prime, least_nonresidue


@dataclass(frozen=True)
class FqSquared:
    p: int
    nonresidue: int

    @property
    def q(self) -> int:
        return self.p * self.p

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    # --- encoding

    def element(self, a: int, b: int = 0) -> int:
        return (a % self.p) + (b % self.p) * self.p

    def parts(self, x: int) -> tuple:
        return x % self.p, x // self.p

    zero = 0
    one = 1

    # --- arithmetic on pairs, used to build the tables

    def _mul_pairs(self, x: int, y: int) -> int:
        a, b = self.parts(x)
        c, d = self.parts(y)
        # (a + bw)(c + dw) = ac + bd*nu + (ad + bc)w
        return self.element(a * c + b * d * self.nonresidue, a * d + b * c)

    @cached_property
    def _mul_table(self) -> list:
        return [[self._mul_pairs(x, y) for y in self.elements()] for x in self.elements()]

    @cached_property
    def _add_table(self) -> list:
        p = self.p
        return [
            [self.element(x % p + y % p, x // p + y // p) for y in self.elements()]
            for x in self.elements()
        ]

    @cached_property
    def _inverse_table(self) -> list:
        table = [0] * self.q
        for x in self.nonzero():
            a, b = self.parts(x)
            # 1/(a + bw) = (a - bw) / (a^2 - nu b^2)
            norm = (a * a - self.nonresidue * b * b) % self.p
            scale = pow(norm, -1, self.p)
            table[x] = self.element(a * scale, -b * scale)
        return table

    def add(self, x: int, y: int) -> int:
        return self._add_table[x][y]

    def neg(self, x: int) -> int:
        a, b = self.parts(x)
        return self.element(-a, -b)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        return self._mul_table[x][y]

    def inverse(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse in GF(p^2)")
        return self._inverse_table[x]

    def power(self, x: int, n: int) -> int:
        """x**n by square and multiply; n >= 0"""
        result, base = self.one, x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def conjugate(self, x: int) -> int:
        a, b = self.parts(x)
        return self.element(a, -b)

    def frobenius(self, x: int) -> int:
        return self.power(x, self.p)

    @cached_property
    def fermat_powers(self) -> list:
        """x**(p+1) for every element, computed by repeated multiplication"""
        return [self.power(x, self.p + 1) for x in self.elements()]

    def in_prime_field(self, x: int) -> bool:
        return x < self.p


def build_field(p: int) -> FqSquared:
    if not is_odd_prime(p):
        raise NotAnOddPrime(p)
    return FqSquared(p, least_nonresidue(p))
