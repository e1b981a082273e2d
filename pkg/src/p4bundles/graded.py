"""Graded free modules and homogeneous polynomial matrices.

Twist convention, used globally: the free sheaf O(a) is stored as a free
module with generator degree -a, so O(-n) has its generator in degree n and
the degree-d piece of a module with generator degree g is spanned by
monomials of degree d - g.

A GradedMatrix maps source generators to target generators; entry (i, j) is
homogeneous of degree source_deg(j) - target_deg(i) or zero. Degree-raising
maps (twists) are expressed by shifting the source degrees, see
`homology.ModuleMap`.
"""

from __future__ import annotations

from .fields import ExtensionField
from .poly import Poly, PolyRing


class FreeModule:
    """Free graded module over a PolyRing, given by its generator degrees."""

    __slots__ = ("ring", "gen_degrees")

    def __init__(self, ring: PolyRing, gen_degrees):
        self.ring = ring
        self.gen_degrees = tuple(gen_degrees)

    @classmethod
    def from_twists(cls, ring: PolyRing, twists) -> "FreeModule":
        """Build ⊕ O(a_j) from the twist list a_j (gen degrees are -a_j)."""
        return cls(ring, [-a for a in twists])

    @property
    def rank(self) -> int:
        return len(self.gen_degrees)

    def twists(self) -> tuple:
        return tuple(-g for g in self.gen_degrees)

    def shift(self, delta: int) -> "FreeModule":
        """Generator degrees raised by delta (the module twisted by -delta)."""
        return FreeModule(self.ring, [g + delta for g in self.gen_degrees])

    def twist(self, n: int) -> "FreeModule":
        """F(n): degree-d piece becomes the old degree-(d+n) piece."""
        return FreeModule(self.ring, [g - n for g in self.gen_degrees])

    def direct_sum(self, other: "FreeModule") -> "FreeModule":
        if other.ring != self.ring:
            raise ValueError("direct sum over different rings")
        return FreeModule(self.ring, self.gen_degrees + other.gen_degrees)

    def __eq__(self, other):
        return (
            isinstance(other, FreeModule)
            and other.ring == self.ring
            and other.gen_degrees == self.gen_degrees
        )

    def __hash__(self):
        return hash((self.ring, self.gen_degrees))

    def __repr__(self):
        return f"FreeModule(degs={list(self.gen_degrees)})"


class GradedMatrix:
    """Matrix of polynomials mapping source generators to target generators."""

    __slots__ = ("source", "target", "entries")

    def __init__(self, source: FreeModule, target: FreeModule, entries):
        self.source = source
        self.target = target
        self.entries = [list(row) for row in entries]
        if len(self.entries) != target.rank:
            raise ValueError("row count does not match target rank")
        for row in self.entries:
            if len(row) != source.rank:
                raise ValueError("column count does not match source rank")

    @classmethod
    def zero(cls, source: FreeModule, target: FreeModule) -> "GradedMatrix":
        z = source.ring.zero()
        return cls(source, target, [[z] * source.rank for _ in range(target.rank)])

    @classmethod
    def identity(cls, module: FreeModule) -> "GradedMatrix":
        one, zero = module.ring.one(), module.ring.zero()
        n = module.rank
        return cls(
            module, module, [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @property
    def shape(self) -> tuple:
        return (self.target.rank, self.source.rank)

    def entry(self, i: int, j: int) -> Poly:
        return self.entries[i][j]

    def column(self, j: int) -> list:
        return [row[j] for row in self.entries]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_homogeneous(self) -> bool:
        """Every entry homogeneous of degree src_deg(j) - tgt_deg(i), or zero."""
        for i, tdeg in enumerate(self.target.gen_degrees):
            for j, sdeg in enumerate(self.source.gen_degrees):
                e = self.entries[i][j]
                if e.is_zero():
                    continue
                if not e.is_homogeneous() or e.homogeneous_degree() != sdeg - tdeg:
                    return False
        return True

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """self ∘ other (apply other first)."""
        if other.target.gen_degrees != self.source.gen_degrees:
            raise ValueError("composition shape mismatch")
        ring = self.source.ring
        rows, mid, cols = self.target.rank, self.source.rank, other.source.rank
        out = []
        for i in range(rows):
            row = []
            for j in range(cols):
                acc = ring.zero()
                for k in range(mid):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(other.source, self.target, out)

    def add(self, other: "GradedMatrix") -> "GradedMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return GradedMatrix(
            self.source,
            self.target,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def scale(self, c: int) -> "GradedMatrix":
        return GradedMatrix(
            self.source, self.target, [[e.scale(c) for e in row] for row in self.entries]
        )

    def hstack(self, other: "GradedMatrix") -> "GradedMatrix":
        """Concatenate columns (same target)."""
        if other.target.gen_degrees != self.target.gen_degrees:
            raise ValueError("hstack target mismatch")
        return GradedMatrix(
            self.source.direct_sum(other.source),
            self.target,
            [r1 + r2 for r1, r2 in zip(self.entries, other.entries)],
        )

    def vstack(self, other: "GradedMatrix") -> "GradedMatrix":
        """Concatenate rows (same source)."""
        if other.source.gen_degrees != self.source.gen_degrees:
            raise ValueError("vstack source mismatch")
        return GradedMatrix(
            self.source,
            self.target.direct_sum(other.target),
            self.entries + other.entries,
        )

    def shift(self, delta: int) -> "GradedMatrix":
        """Same entries with both generator-degree lists raised by delta."""
        return GradedMatrix(self.source.shift(delta), self.target.shift(delta), self.entries)

    def evaluate_at_point(self, field: ExtensionField, point: tuple) -> list:
        """Numeric matrix of extension-field elements at a (nonzero) point."""
        if len(point) != self.source.ring.num_vars:
            raise ValueError("point has wrong number of coordinates")
        if all(field.is_zero(c) for c in point):
            raise ValueError("evaluation point must be nonzero")
        return [[e.evaluate(field, point) for e in row] for row in self.entries]

    def lift_to(self, ring: PolyRing) -> "GradedMatrix":
        """Reinterpret entries in an extension of the base ring."""
        src = FreeModule(ring, self.source.gen_degrees)
        tgt = FreeModule(ring, self.target.gen_degrees)
        return GradedMatrix(
            src, tgt, [[ring.lift_poly(e) for e in row] for row in self.entries]
        )

    def __eq__(self, other):
        return (
            isinstance(other, GradedMatrix)
            and other.source == self.source
            and other.target == self.target
            and other.entries == self.entries
        )

    def __repr__(self):
        return f"GradedMatrix({self.shape[0]}x{self.shape[1]})"


def numeric_rank(field: ExtensionField, matrix: list) -> int:
    """Rank of a matrix of extension-field elements, by exact row reduction."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(rows)):
            if not field.is_zero(rows[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not field.is_zero(rows[r][col]):
                f = rows[r][col]
                rows[r] = [
                    field.sub(v, field.mul(f, w)) for v, w in zip(rows[r], rows[rank])
                ]
        rank += 1
        if rank == len(rows):
            break
    return rank


def generic_rank(matrix: GradedMatrix) -> int:
    """Rank over the fraction field, by fraction-free Gaussian elimination."""
    rows = [list(r) for r in matrix.entries]
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    ring = matrix.source.ring
    prev_pivot = ring.one()
    for col in range(n):
        pivot = None
        for r in range(rank, m):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, m):
            if rows[r][col].is_zero():
                continue
            fac = rows[r][col]
            for c in range(n):
                # Bareiss one-step update keeps entries polynomial
                val = piv * rows[r][c] - fac * rows[rank][c]
                rows[r][c] = val
        rank += 1
        if rank == m:
            break
    return rank
