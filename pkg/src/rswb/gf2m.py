"""Arithmetic in GF(2^m), 2 <= m <= 16, via log/antilog tables.

Field elements are plain ints: bit i holds the coefficient of x^i in the
polynomial-basis representation.  The table-backed field keeps one counted
unit per executed multiplication/addition/inversion regardless of operand
values (multiplying by 0 or 1 still counts), which is what makes measured
operation counts line up with worst-case complexity formulas.

Default moduli (fixed so golden vectors are stable across machines):
    m=2 : x^2+x+1              0b111
    m=3 : x^3+x+1              0b1011
    m=4 : x^4+x+1              0b10011
    m=5 : x^5+x^2+1            0b100101
    m=6 : x^6+x+1              0b1000011
    m=7 : x^7+x^3+1            0b10001001
    m=8 : x^8+x^4+x^3+x^2+1    0b100011101
    m=9 : x^9+x^4+1            0b1000010001
    m=10: x^10+x^3+1           0b10000001001
    m=11: x^11+x^2+1           0b100000000101
    m=12: x^12+x^6+x^4+x+1     0b1000001010011
    m=13: x^13+x^4+x^3+x+1     0b10000000011011
    m=14: x^14+x^10+x^6+x+1    0b100010001000011
    m=15: x^15+x+1             0b1000000000000011
    m=16: x^16+x^12+x^3+x+1    0b10001000000001011
"""

from __future__ import annotations

from .counting import OpCounts

DEFAULT_MODULI = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class FieldError(ValueError):
    pass


def gf2_deg(p):
    return p.bit_length() - 1


def gf2_mulmod(a, b, modulus):
    """Carryless multiply of GF(2)[x] ints, reduced mod `modulus`."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> gf2_deg(modulus) & 1:
            a ^= modulus
    return r


def gf2_poly_str(p):
    if p == 0:
        return "0"
    terms = []
    for i in range(gf2_deg(p), -1, -1):
        if (p >> i) & 1:
            terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
    return "+".join(terms)


def check_irreducible(modulus):
    """Trial division by every GF(2)[x] polynomial of degree <= m/2."""
    m = gf2_deg(modulus)
    for d in range(2, 1 << (m // 2 + 1)):
        if gf2_deg(d) < 1:
            continue
        r = modulus
        dd = gf2_deg(d)
        while r and gf2_deg(r) >= dd:
            r ^= d << (gf2_deg(r) - dd)
        if r == 0:
            raise FieldError(f"reducible: divisible by {gf2_poly_str(d)}")


class Field:
    """GF(2^m) context.  Immutable tables; counters live on counted views."""

    def __init__(self, m, modulus="default"):
        if not 2 <= m <= 16:
            raise FieldError(f"m={m} outside supported range [2, 16]")
        if modulus == "default":
            modulus = DEFAULT_MODULI[m]
        if gf2_deg(modulus) != m:
            raise FieldError(f"modulus degree {gf2_deg(modulus)} != m={m}")
        check_irreducible(modulus)
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self.q1 = self.order - 1  # size of the multiplicative group
        self._build_tables()
        self._ht = None  # lazy half-trace solution table
        self.ctr = None

    def _build_tables(self):
        # smallest primitive element: its powers enumerate all nonzeros
        for alpha in range(2, self.order):
            exp = [0] * (2 * self.q1)
            log = [0] * self.order
            x = 1
            ok = True
            for i in range(self.q1):
                if i and x == 1:
                    ok = False  # order of alpha < q-1
                    break
                exp[i] = x
                log[x] = i
                x = gf2_mulmod(x, alpha, self.modulus)
            if ok and x == 1:
                # duplicate so mul/inv can index without reducing mod q-1
                for i in range(self.q1, 2 * self.q1):
                    exp[i] = exp[i - self.q1]
                self.alpha = alpha
                self.exp = exp
                self.log = log
                return
        raise FieldError("no primitive element found (not a field?)")

    def counted(self, counter=None):
        """A view of this field that tallies operations into `counter`."""
        v = Field.__new__(Field)
        v.m = self.m
        v.modulus = self.modulus
        v.order = self.order
        v.q1 = self.q1
        v.alpha = self.alpha
        v.exp = self.exp
        v.log = self.log
        v._ht = self._ht
        v.ctr = counter if counter is not None else OpCounts()
        return v

    def base(self):
        """The uncounted field (tables shared)."""
        return self.counted(None) if self.ctr is not None else self

    # -- arithmetic ---------------------------------------------------

    def add(self, a, b):
        c = self.ctr
        if c is not None:
            c.add += 1
        return a ^ b

    def mul(self, a, b):
        c = self.ctr
        if c is not None:
            c.mul += 1
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.ctr
        if c is not None:
            c.inv += 1
        return self.exp[self.q1 - self.log[a]]

    def div(self, a, b):
        """a / b as one inversion plus one multiplication."""
        return self.mul(a, self.inv(b))

    # -- uncounted utilities (constant generation, construction) ------

    def pow_alpha(self, k):
        """alpha^k for any integer k; a table lookup, never counted."""
        return self.exp[k % self.q1]

    def pow(self, a, e):
        """a^e by index arithmetic (uncounted utility)."""
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % self.q1]

    def trace(self, a):
        t = 0
        x = a
        for _ in range(self.m):
            t ^= x
            x = self.pow(x, 2)
        return t

    def half_trace_solve(self, b):
        """Solve x^2 + x = b; None when Tr(b) = 1 (no solution).

        Returns the lexicographically smaller of the two roots (they
        differ by 1) so constructions depending on it are reproducible.
        """
        if self._ht is None:
            ht = [None] * self.order
            for x in range(self.order):
                y = self.pow(x, 2) ^ x
                if ht[y] is None or x < ht[y]:
                    ht[y] = x
            self._ht = ht
        return self._ht[b]


# -- symbol / word serialization --------------------------------------

def sym_to_text(a):
    return format(a, "x")


def sym_from_text(s):
    v = int(s, 16)
    if v < 0:
        raise ValueError("negative symbol")
    return v


def word_to_text(word):
    """Hex symbols, whitespace-separated; one word per line in files."""
    return " ".join(sym_to_text(a) for a in word)


def word_from_text(line):
    return [sym_from_text(tok) for tok in line.split()]
