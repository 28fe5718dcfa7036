"""Fast polynomial division with remainder via Newton iteration.

In characteristic 2 the classical update g <- g(2 - bg) degenerates, so
each doubling step uses g <- g + g(1 + bg) truncated to the doubled
precision, which squares the error term: b*g' = (bg)^2 = 1 + e^2.

The product routine is pluggable: callers pass the Cantor dispatcher for
large operands, and it falls back to schoolbook below the size threshold.
"""

from __future__ import annotations

from .polyring import norm, poly_mul_school, poly_rev, lc


class DivisionError(ValueError):
    pass


def _trunc(f, k):
    out = f[:k]
    return norm(out) if len(f) > k else out


def inv_mod_xk(F, b, kk, mul=None):
    """g with b*g = 1 mod x^kk; requires b(0) != 0."""
    if kk <= 0:
        return []
    if not b or b[0] == 0:
        raise DivisionError("not invertible mod x^k: constant term is zero")
    if mul is None:
        mul = lambda x, y: poly_mul_school(F, x, y)
    add = F.add
    # reversed monic divisors have b(0) = 1: no inversion to perform
    g = [1] if b[0] == 1 else [F.inv(b[0])]
    t = 1
    while t < kk:
        t2 = min(2 * t, kk)
        bg = _trunc(mul(_trunc(list(b), t2), g), t2)
        # e = 1 + bg vanishes below x^t, so only its top half multiplies
        e = list(bg)
        e[0] = add(e[0], 1)
        e_hi = norm(e[t:])
        if e_hi:
            w = mul(g, e_hi)
            gn = list(g) + [0] * (t2 - len(g))
            for j in range(min(len(w), t2 - t)):
                gn[t + j] = add(gn[t + j], w[j])
            g = norm(gn)
        t = t2
    return _trunc(g, kk)


def _short_mul(F, a, b, L, mul):
    """(a*b) mod x^L with the internal full product kept below size
    2L-1, shaving the top coefficients off full-length operands (their
    only sub-L contribution is against the other constant term)."""
    if L <= 0 or not a or not b:
        return []
    a = norm(a[:L])
    b = norm(b[:L])
    if not a or not b:
        return []
    if L == 1:
        return norm([F.mul(a[0], b[0])])
    if len(a) + len(b) - 1 <= 2 * L - 3:
        return norm(mul(a, b)[:L])
    add = F.add
    at = a[L - 1] if len(a) == L else 0
    bt = b[L - 1] if len(b) == L else 0
    a_lo = norm(a[: L - 1])
    b_lo = norm(b[: L - 1])
    core = mul(a_lo, b_lo) if a_lo and b_lo else []
    out = list(core[:L]) + [0] * max(0, L - len(core))
    if at:
        out[L - 1] = add(out[L - 1], F.mul(at, b[0]))
    if bt:
        out[L - 1] = add(out[L - 1], F.mul(bt, a[0]))
    return norm(out)


def fast_divmod(F, a, b, mul=None):
    """Quotient and remainder equal to long division, via the reversal
    trick: q = rev(rev(a) * rev(b)^(-1) mod x^(deg a - deg b + 1))."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if lc(b) != 1:
        raise DivisionError("fast_divmod needs a monic divisor")
    if not a or len(a) < len(b):
        return [], list(a)
    if mul is None:
        mul = lambda x, y: poly_mul_school(F, x, y)
    d1 = len(b) - 1
    d0 = len(a) - 1 - d1
    ra = poly_rev(a, d0 + d1)
    rb = poly_rev(b, d1)
    rb_inv = inv_mod_xk(F, rb, d0 + 1, mul=mul)
    q_star = _short_mul(F, ra, rb_inv, d0 + 1, mul)
    q = poly_rev(q_star, d0)
    # r = a - q*b survives only below x^d1, so multiply mod x^d1
    add = F.add
    r = []
    if d1:
        p = _trunc(mul(norm(q[:d1]), norm(b[:d1])), d1) \
            if q and b[:d1] != [0] * d1 else []
        r = [add(a[j] if j < len(a) else 0, p[j] if j < len(p) else 0)
             for j in range(d1)]
    return q, norm(r)
