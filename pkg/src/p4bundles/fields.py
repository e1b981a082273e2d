"""Exact arithmetic over prime fields F_p and small extensions F_{p^e}.

Prime-field elements are plain ints in [0, p); the PrimeField object only
carries the modulus and the arithmetic. Extension-field elements are tuples
of ints (coefficients of the residue class modulo a fixed irreducible
polynomial); they exist solely to evaluate matrices at points with enough
room for Schwartz-Zippel style rank sampling.
"""

from __future__ import annotations

import functools


def is_prime(n: int) -> bool:
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


class PrimeField:
    """The field F_p for a small prime p; element values are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def _poly_mod_mul(a: tuple, b: tuple, modpoly: tuple, p: int) -> tuple:
    """Multiply coefficient tuples mod (modpoly, p); modpoly is monic."""
    e = len(modpoly) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by x^e = -(lower part of modpoly)
    for i in range(len(prod) - 1, e - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(e):
                prod[i - e + j] = (prod[i - e + j] - c * modpoly[j]) % p
    return tuple(prod[:e])


@functools.lru_cache(maxsize=None)
def _find_irreducible(p: int, e: int) -> tuple:
    """Monic irreducible of degree e over F_p, as a coefficient tuple c0..c_{e-1},1.

    Brute-force search; a candidate f is irreducible iff x^(p^e) == x mod f
    and gcd-style checks x^(p^(e/q)) != x for prime divisors q of e.
    """
    if e == 1:
        return (0, 1)

    def primes_dividing(n):
        out, f = [], 2
        while f * f <= n:
            if n % f == 0:
                out.append(f)
                while n % f == 0:
                    n //= f
            f += 1
        if n > 1:
            out.append(n)
        return out

    divisors = primes_dividing(e)

    def frob_power(modpoly, k):
        # x^(p^k) mod modpoly by repeated p-th powering
        cur = (0, 1) + (0,) * (e - 2)  # x
        cur = tuple(cur[:e])
        for _ in range(k):
            acc = (1,) + (0,) * (e - 1)
            base = cur
            n = p
            while n:
                if n & 1:
                    acc = _poly_mod_mul(acc, base, modpoly, p)
                base = _poly_mod_mul(base, base, modpoly, p)
                n >>= 1
            cur = acc
        return cur

    x_elt = tuple([0, 1] + [0] * (e - 2))
    for code in range(p**e):
        lower = []
        c = code
        for _ in range(e):
            lower.append(c % p)
            c //= p
        modpoly = tuple(lower) + (1,)
        if frob_power(modpoly, e) != x_elt:
            continue
        if any(frob_power(modpoly, e // q) == x_elt for q in divisors):
            continue
        return modpoly
    raise RuntimeError("no irreducible polynomial found")  # unreachable


class ExtensionField:
    """F_{p^e} as F_p[u]/(irreducible); elements are length-e int tuples."""

    def __init__(self, p: int, e: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.e = e
        self.modpoly = _find_irreducible(p, e)

    @property
    def order(self) -> int:
        return self.p**self.e

    def zero(self) -> tuple:
        return (0,) * self.e

    def one(self) -> tuple:
        return (1,) + (0,) * (self.e - 1)

    def from_int(self, n: int) -> tuple:
        """Element with index n in the base-p enumeration of coefficient tuples."""
        coeffs = []
        n %= self.order
        for _ in range(self.e):
            coeffs.append(n % self.p)
            n //= self.p
        return tuple(coeffs)

    def embed(self, a: int) -> tuple:
        return (a % self.p,) + (0,) * (self.e - 1)

    def add(self, a: tuple, b: tuple) -> tuple:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: tuple, b: tuple) -> tuple:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        return _poly_mod_mul(a, b, self.modpoly, self.p)

    def is_zero(self, a: tuple) -> bool:
        return not any(a)

    def pow(self, a: tuple, n: int) -> tuple:
        acc = self.one()
        base = a
        while n:
            if n & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            n >>= 1
        return acc

    def inv(self, a: tuple) -> tuple:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of 0 in extension field")
        return self.pow(a, self.order - 2)

    def __repr__(self):
        return f"ExtensionField({self.p}^{self.e})"
