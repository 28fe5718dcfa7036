"""Tallies of field operations: multiplications, additions, inversions.

A single OpCounts instance is attached to a counted field view (see
gf2m.Field.counted) and every arithmetic call executed through that view
bumps the matching slot.  Counters are plain mutable records, created per
call tree and never shared between concurrent decodes.
"""

from __future__ import annotations


class OpCounts:
    __slots__ = ("mul", "add", "inv")

    def __init__(self, mul=0, add=0, inv=0):
        self.mul = mul
        self.add = add
        self.inv = inv

    def copy(self):
        return OpCounts(self.mul, self.add, self.inv)

    def as_tuple(self):
        return (self.mul, self.add, self.inv)

    def merge(self, other):
        self.mul += other.mul
        self.add += other.add
        self.inv += other.inv
        return self

    def __add__(self, other):
        return OpCounts(self.mul + other.mul, self.add + other.add,
                        self.inv + other.inv)

    def __iadd__(self, other):
        return self.merge(other)

    def __eq__(self, other):
        if isinstance(other, OpCounts):
            return self.as_tuple() == other.as_tuple()
        if isinstance(other, tuple):
            return self.as_tuple() == other
        return NotImplemented

    def __le__(self, other):
        o = other.as_tuple() if isinstance(other, OpCounts) else tuple(other)
        s = self.as_tuple()
        return all(a <= b for a, b in zip(s, o))

    def weighted(self, m):
        """Overall cost in field-addition units: 2m(mul + inv) + add."""
        return 2 * m * (self.mul + self.inv) + self.add

    def __repr__(self):
        return f"OpCounts(mul={self.mul}, add={self.add}, inv={self.inv})"


def total_of(steps):
    """Sum a per-step breakdown map into one OpCounts."""
    out = OpCounts()
    for c in steps.values():
        out.merge(c)
    return out
