"""Dense polynomial arithmetic over GF(2^m).

A polynomial is a list of symbols, index i = coefficient of x^i, kept in
canonical form: no trailing zeros, and the zero polynomial is the empty
list.  deg() returns None for the zero polynomial; callers branch on
emptiness rather than doing arithmetic on a -1 sentinel.

Every operation takes the field (or a counted view of it) first, so the
same code path serves both plain evaluation and instrumented runs.
"""

from __future__ import annotations


def norm(c):
    """Strip trailing zero coefficients (canonical form)."""
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    del c[n:]
    return c


def deg(f):
    return len(f) - 1 if f else None


def lc(f):
    if not f:
        raise ValueError("leading coefficient of zero polynomial")
    return f[-1]


def poly_eq(a, b):
    return a == b


def poly_add(F, a, b):
    """Coefficient-wise XOR; counts max(len a, len b) additions."""
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    if F.ctr is None:
        for i in range(len(b)):
            out[i] ^= b[i]
        return norm(out)
    add = F.add
    for i in range(len(b)):
        out[i] = add(out[i], b[i])
    for i in range(len(b), len(a)):
        out[i] = add(out[i], 0)
    return norm(out)


def poly_scale(F, f, c):
    """c * f with len(f) multiplications."""
    mul = F.mul
    return norm([mul(c, x) for x in f])


def poly_shift(f, k):
    """f * x^k (no field ops)."""
    if not f:
        return []
    return [0] * k + list(f)


def poly_mul_school(F, a, b):
    """Convolution product; (deg a + 1)(deg b + 1) multiplications and
    (len a)(len b) - (len a + len b - 1) additions when both nonzero."""
    if not a or not b:
        return []
    if F.ctr is None:
        exp, log = F.exp, F.log
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                la = log[ai]
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] ^= exp[la + log[bj]]
        return norm(out)
    out = [None] * (len(a) + len(b) - 1)
    mul = F.mul
    add = F.add
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            p = mul(ai, bj)
            k = i + j
            out[k] = p if out[k] is None else add(out[k], p)
    return norm(out)


def poly_eval_horner(F, f, x0, pad_to=None):
    """Horner evaluation; deg f mul + deg f add for f != 0.

    pad_to treats f as a fixed-length coefficient array (leading zeros
    included), making the count input-independent where a formula
    requires it.
    """
    n = pad_to if pad_to is not None else len(f)
    if n == 0:
        return 0
    if F.ctr is None and x0:
        exp, log = F.exp, F.log
        lx = log[x0]
        m = min(n, len(f))
        acc = f[n - 1] if n - 1 < len(f) else 0
        for i in range(n - 2, -1, -1):
            if acc:
                acc = exp[log[acc] + lx]
            if i < m:
                acc ^= f[i]
        return acc
    mul = F.mul
    add = F.add
    acc = f[n - 1] if n - 1 < len(f) else 0
    for i in range(n - 2, -1, -1):
        acc = add(mul(acc, x0), f[i] if i < len(f) else 0)
    return acc


def poly_dft_naive(F, f, points):
    """Evaluate f (deg < n) at n points by per-point Horner.

    Counts exactly (n(n-1), n(n-1), 0) for |points| = n.
    """
    n = len(points)
    if f and len(f) > n:
        raise ValueError("poly_dft_naive needs deg f < number of points")
    return [poly_eval_horner(F, f, p, pad_to=n) for p in points]


def poly_idft_naive(F, values):
    """Inverse DFT over the full multiplicative group {alpha^i}.

    n = 2^m - 1 is odd, so f_j = sum_i values_i * alpha^(-ij) with no
    scaling.  Counts exactly (n(n-1), n(n-1), 0).
    """
    n = len(values)
    if n != F.q1:
        raise ValueError(
            "IDFT needs values on the full group {alpha^i, i=0..2^m-2}; "
            "use poly_interp_lagrange for other point sets")
    if F.ctr is None:
        exp, log, q1 = F.exp, F.log, F.q1
        out = [0] * n
        for j in range(n):
            acc = values[0]
            step = q1 - j            # exponent decrement of alpha^(-ij)
            idx = 0
            for i in range(1, n):
                idx += step
                if idx >= q1:
                    idx -= q1
                v = values[i]
                if v:
                    acc ^= exp[log[v] + idx]
            out[j] = acc
        return norm(out)
    mul = F.mul
    add = F.add
    pow_alpha = F.pow_alpha
    out = [0] * n
    for j in range(n):
        acc = values[0]  # alpha^0 term needs no multiplication
        for i in range(1, n):
            acc = add(acc, mul(values[i], pow_alpha(-i * j)))
        out[j] = acc
    return norm(out)


def poly_interp_lagrange(F, points, values):
    """Classical Lagrange interpolation through distinct points."""
    n = len(points)
    if n != len(values):
        raise ValueError("points/values length mismatch")
    if len(set(points)) != n:
        raise ValueError("duplicate evaluation points")
    if n == 0:
        return []
    # master polynomial prod (x - p_j), then per-point synthetic division
    master = [1]
    for p in points:
        master = poly_mul_school(F, master, [p, 1])
    out = [0] * n
    add = F.add
    mul = F.mul
    for i, (p, v) in enumerate(zip(points, values)):
        if v == 0:
            continue
        # numerator = master / (x - p) by synthetic division
        num = [0] * (n)
        acc = 0
        for j in range(n, 0, -1):
            acc = add(master[j], mul(acc, p))
            num[j - 1] = acc
        denom = poly_eval_horner(F, num, p)
        w = mul(v, F.inv(denom))
        for j in range(n):
            out[j] = add(out[j], mul(w, num[j]))
    return norm(out)


def poly_divmod_long(F, a, b):
    """Classical long division: a = q*b + r with deg r < deg b."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a or len(a) < len(b):
        return [], list(a)
    r = list(a)
    db = len(b) - 1
    blead = b[-1]
    q = [0] * (len(a) - db)
    if F.ctr is None:
        exp, log = F.exp, F.log
        lbinv = (F.q1 - log[blead]) % F.q1
        for i in range(len(a) - 1, db - 1, -1):
            c = r[i]
            if c and blead != 1:
                c = exp[log[c] + lbinv]
            q[i - db] = c
            if c:
                lcq = log[c]
                for j in range(db):
                    bj = b[j]
                    if bj:
                        r[i - db + j] ^= exp[lcq + log[bj]]
            r[i] = 0
        return norm(q), norm(r)
    binv = 1 if blead == 1 else F.inv(blead)
    mul = F.mul
    add = F.add
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if blead != 1:
            c = mul(c, binv)
        q[i - db] = c
        if c:
            for j in range(db):
                r[i - db + j] = add(r[i - db + j], mul(c, b[j]))
        r[i] = 0
    return norm(q), norm(r)


def poly_rev(f, h):
    """rev_h(f) = x^h * f(1/x); needs h >= deg f."""
    if f and h < len(f) - 1:
        raise ValueError(f"rev_{h} needs h >= deg f = {len(f) - 1}")
    out = [0] * (h + 1)
    for i, c in enumerate(f):
        out[h - i] = c
    return norm(out)


def poly_trunc_top(f, h):
    """Top-coefficient window: f_n x^h + ... + f_(n-h), zero when h < 0.

    For h >= deg f this is f * x^(h - deg f) (pure shift up)."""
    if h < 0 or not f:
        return []
    n = len(f) - 1
    out = [0] * (h + 1)
    for i in range(h + 1):
        j = n - h + i
        if j >= 0:
            out[i] = f[j]
    return norm(out)


def poly_deriv(F, f):
    """Formal derivative; in char 2 the even-power terms vanish."""
    if len(f) < 2:
        return []
    out = [0] * (len(f) - 1)
    for i in range(1, len(f)):
        if i & 1:
            out[i - 1] = f[i]
    return norm(out)


def poly_monic(F, f):
    """(f / lc(f), lc(f)); one inversion + deg f multiplications."""
    l = lc(f)
    if l == 1:
        return list(f), 1
    li = F.inv(l)
    mul = F.mul
    out = [mul(li, c) for c in f[:-1]]
    out.append(1)
    return out, l


# -- text form: coefficients low-to-high as hex symbols ----------------

def poly_to_text(f):
    if not f:
        return "0"
    return " ".join(format(c, "x") for c in f)


def poly_from_text(s):
    s = s.strip()
    if s == "0" or not s:
        return []
    return norm([int(tok, 16) for tok in s.split()])
