"""Finite groups as raw multiplication tables, and scalar-valued 3-cochains.

Kept separate from the generators so that modules which only need the data
types do not import the whole construction layer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Field, Scalar


@dataclass(frozen=True)
class GroupData:
    """A finite group: index-valued multiplication table, identity, inverses."""

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    @classmethod
    def from_table(cls, table) -> "GroupData":
        """Build from a multiplication table, verifying the group axioms."""
        n = len(table)
        rows = tuple(tuple(row) for row in table)
        for g, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {g} has length {len(row)}, expected {n}")
            for h, v in enumerate(row):
                if not 0 <= v < n:
                    raise ValueError(f"table entry ({g},{h}) = {v} out of range")
        identity = None
        for e in range(n):
            if all(rows[e][g] == g == rows[g][e] for g in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no two-sided identity")
        inverse = []
        for g in range(n):
            inv = next((h for h in range(n)
                        if rows[g][h] == identity == rows[h][g]), None)
            if inv is None:
                raise ValueError(f"element {g} has no inverse")
            inverse.append(inv)
        for g in range(n):
            for h in range(n):
                for k in range(n):
                    if rows[rows[g][h]][k] != rows[g][rows[h][k]]:
                        raise ValueError(f"table is not associative at ({g},{h},{k})")
        return cls(n, rows, identity, tuple(inverse))

    @classmethod
    def cyclic(cls, n: int) -> "GroupData":
        """The cyclic group of order n; element a represents the a-th power."""
        if n < 1:
            raise ValueError("order must be positive")
        table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
        return cls(n, table, 0, tuple((-a) % n for a in range(n)))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]


@dataclass(frozen=True)
class Cocycle:
    """A total map G×G×G → nonzero scalars, stored flat (g·N² + h·N + k)."""

    field: Field
    order: int
    values: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.values) != self.order ** 3:
            raise ValueError(
                f"cocycle needs {self.order ** 3} values, got {len(self.values)}")

    @classmethod
    def from_function(cls, group: GroupData, field: Field, fn) -> "Cocycle":
        n = group.order
        values = [fn(g, h, k) for g in range(n) for h in range(n) for k in range(n)]
        return cls(field, n, tuple(values))

    def theta(self, g: int, h: int, k: int) -> Scalar:
        n = self.order
        return self.values[(g * n + h) * n + k]
