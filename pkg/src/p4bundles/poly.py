"""Multivariate polynomials over F_p with dense exponent-tuple monomials.

Monomials are tuples of small non-negative ints, one entry per variable.
Polynomials store a dict {monomial: coefficient} with no zero coefficients,
so equality of dicts is equality of polynomials. The canonical term order
throughout the package is graded reverse lexicographic.
"""

from __future__ import annotations

from typing import Iterable

from .fields import PrimeField


def grevlex_key(mono: tuple) -> tuple:
    """Sort key: larger key = larger monomial in graded reverse lex."""
    return (sum(mono),) + tuple(-e for e in reversed(mono))


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    """True iff monomial a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    """a / b assuming divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(num_vars: int, d: int) -> list[tuple]:
    """All exponent tuples of total degree d, in decreasing grevlex order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    if d < 0:
        return []
    rec((), d, num_vars)
    out.sort(key=grevlex_key, reverse=True)
    return out


class PolyRing:
    """Standard-graded polynomial ring over F_p (every variable has degree 1)."""

    def __init__(self, p: int, names: Iterable[str]):
        self.field = PrimeField(p)
        self.p = p
        self.names = tuple(names)
        self.num_vars = len(self.names)
        if self.num_vars == 0:
            raise ValueError("ring needs at least one variable")
        self._zero_mono = (0,) * self.num_vars

    # -- constructors ------------------------------------------------------

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self._zero_mono: 1})

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {self._zero_mono: c} if c else {})

    def var(self, i: int) -> "Poly":
        mono = tuple(1 if j == i else 0 for j in range(self.num_vars))
        return Poly(self, {mono: 1})

    def gens(self) -> list["Poly"]:
        return [self.var(i) for i in range(self.num_vars)]

    def monomial(self, mono: tuple, coeff: int = 1) -> "Poly":
        coeff %= self.p
        if len(mono) != self.num_vars:
            raise ValueError("exponent tuple has wrong length")
        return Poly(self, {tuple(mono): coeff} if coeff else {})

    def from_terms(self, terms) -> "Poly":
        d = {}
        for mono, c in terms:
            c = (d.get(mono, 0) + c) % self.p
            if c:
                d[mono] = c
            else:
                d.pop(mono, None)
        return Poly(self, d)

    # -- misc ---------------------------------------------------------------

    def extend(self, extra_name: str) -> "PolyRing":
        """Ring with one more degree-1 variable appended."""
        return PolyRing(self.p, self.names + (extra_name,))

    def lift_poly(self, f: "Poly") -> "Poly":
        """Reinterpret a polynomial of a sub-ring (prefix variables) here."""
        if f.ring is self:
            return f
        if f.ring.p != self.p or f.ring.names != self.names[: f.ring.num_vars]:
            raise ValueError("incompatible rings")
        pad = self.num_vars - f.ring.num_vars
        return Poly(self, {mono + (0,) * pad: c for mono, c in f.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.p == self.p
            and other.names == self.names
        )

    def __hash__(self):
        return hash((self.p, self.names))

    def __repr__(self):
        return f"PolyRing(F_{self.p}[{','.join(self.names)}])"


class Poly:
    """Element of a PolyRing; immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def homogeneous_degree(self) -> int:
        """Degree of a homogeneous polynomial; raises if inhomogeneous."""
        if not self.terms:
            return -1
        degs = {sum(m) for m in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop()

    def _require_same_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError("polynomials from different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._require_same_ring(other)
        p = self.ring.p
        d = dict(self.terms)
        for mono, c in other.terms.items():
            nc = (d.get(mono, 0) + c) % p
            if nc:
                d[mono] = nc
            else:
                d.pop(mono, None)
        return Poly(self.ring, d)

    def __neg__(self) -> "Poly":
        p = self.ring.p
        return Poly(self.ring, {m: (-c) % p for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._require_same_ring(other)
        p = self.ring.p
        d = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                nc = (d.get(m, 0) + c1 * c2) % p
                if nc:
                    d[m] = nc
                else:
                    d.pop(m, None)
        return Poly(self.ring, d)

    def scale(self, c: int) -> "Poly":
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero()
        return Poly(self.ring, {m: (c * v) % p for m, v in self.terms.items()})

    def mul_term(self, mono: tuple, coeff: int) -> "Poly":
        p = self.ring.p
        coeff %= p
        if coeff == 0:
            return self.ring.zero()
        return Poly(
            self.ring,
            {mono_mul(m, mono): (coeff * v) % p for m, v in self.terms.items()},
        )

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        acc = self.ring.one()
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def lead_mono(self) -> tuple:
        """Leading monomial in grevlex; raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def lead_coeff(self) -> int:
        return self.terms[self.lead_mono()]

    def coeff(self, mono: tuple) -> int:
        return self.terms.get(tuple(mono), 0)

    def evaluate(self, field, point: tuple):
        """Evaluate at a point with coordinates in `field` (ExtensionField)."""
        total = field.zero()
        for mono, c in self.terms.items():
            val = field.embed(c)
            for i, e in enumerate(mono):
                if e:
                    val = field.mul(val, field.pow(point[i], e))
            total = field.add(total, val)
        return total

    def substitute_last_var(self, value: int) -> "Poly":
        """Set the last variable to a constant, staying in the same ring."""
        p = self.ring.p
        d = {}
        for mono, c in self.terms.items():
            e = mono[-1]
            nc = (c * pow(value % p, e, p)) % p if e else c
            nm = mono[:-1] + (0,)
            nc = (d.get(nm, 0) + nc) % p
            if nc:
                d[nm] = nc
            else:
                d.pop(nm, None)
        return Poly(self.ring, d)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for mono, c in self.sorted_terms():
            factors = []
            if c != 1 or not any(mono):
                factors.append(str(c))
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)
