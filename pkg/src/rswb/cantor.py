"""Additive-FFT primitives: multipoint evaluation/interpolation over a
Cantor subspace, and fast polynomial multiplication built on them.

The evaluation domain is W_p = span(beta_1..beta_p) where beta_1 = 1 and
beta_(i-1) = beta_i^2 + beta_i.  The chain is grown by solving
x^2 + x = beta_i with the field's half-trace table, taking the smaller
root so the context is reproducible.  For odd m the chain stops at p = 1
(Tr(1) = 1), so callers must check ctx.p before relying on large domains.

All auxiliary data - the subspace polynomials s_i, the values s_i(beta_j)
and the inverses of s_(i-1)(beta_i) - is precomputed at init and never
counted; runtime evaluation/interpolation is counted through the field
view passed in.
"""

from __future__ import annotations

from .polyring import norm, poly_mul_school

class CantorError(ValueError):
    pass


class CantorBasis:
    def __init__(self, field):
        F = field.base() if field.ctr is not None else field
        self.field = F
        self.basis = [1]                     # beta_1 = 1
        while len(self.basis) < F.m:
            nxt = F.half_trace_solve(self.basis[-1])
            if nxt is None:
                break
            self.basis.append(nxt)
        self.p = len(self.basis)
        self._build_s_polys()
        self._build_twiddles()
        self._build_point_maps()

    def _build_s_polys(self):
        """Subspace polynomials as sparse {exponent: coeff} maps.

        s_0 = x and s_(i+1) = s_i * (s_i + s_i(beta_(i+1))); each s_i is
        linearized with at most i+1 terms, so the product identity is
        verified by sparse convolution instead of dense arithmetic."""
        F = self.field
        s = {1: 1}                           # s_0 = x
        self._s_sparse = [dict(s)]
        for i in range(1, self.p + 1):
            c = self._eval_sparse(s, self.basis[i - 1])
            if c == 0:
                raise CantorError("degenerate chain: s_(i-1)(beta_i) = 0")
            # sparse product s * (s + c)
            factor = dict(s)
            factor[0] = factor.get(0, 0) ^ c
            prod = {}
            for e1, c1 in s.items():
                for e2, c2 in factor.items():
                    v = F.mul(c1, c2)
                    if v:
                        prod[e1 + e2] = prod.get(e1 + e2, 0) ^ v
            prod = {e: v for e, v in prod.items() if v}
            # must agree with the linearized recursion s^2 + c*s
            chk = {}
            for e, cv in s.items():
                chk[2 * e] = chk.get(2 * e, 0) ^ F.pow(cv, 2)
                chk[e] = chk.get(e, 0) ^ F.mul(c, cv)
            chk = {e: v for e, v in chk.items() if v}
            if prod != chk:
                raise CantorError("subspace polynomial recursion failed")
            self._s_sparse.append(prod)
            s = prod
        for i, sp in enumerate(self._s_sparse):
            if len(sp) > i + 1:
                raise CantorError(f"s_{i} support exceeds {i + 1} terms")
            if sp[max(sp)] != 1 or max(sp) != 1 << i:
                raise CantorError(f"s_{i} is not monic of degree 2^{i}")

    def _eval_sparse(self, sp, x):
        F = self.field
        out = 0
        for e, c in sp.items():
            out ^= F.mul(c, F.pow(x, e))
        return out

    @property
    def s_polys(self):
        """Dense coefficient lists of the subspace polynomials."""
        out = []
        for sp in self._s_sparse:
            dense = [0] * (max(sp) + 1)
            for e, c in sp.items():
                dense[e] = c
            out.append(dense)
        return out

    def _build_twiddles(self):
        F = self.field
        # tw[i][j] = s_i(beta_j), defined for 0 <= i < j <= p
        self.tw = [dict() for _ in range(self.p)]
        for i in range(self.p):
            for j in range(i + 1, self.p + 1):
                self.tw[i][j] = self._eval_sparse(self._s_sparse[i],
                                                  self.basis[j - 1])
        self.tw_inv = [None] * (self.p + 1)
        for i in range(1, self.p + 1):
            self.tw_inv[i] = F.inv(self.tw[i - 1][i])
        # division/multiply support of s_i: (exponent, coeff) below leading
        self.support = []
        for i, sp in enumerate(self._s_sparse):
            top = max(sp)
            self.support.append(sorted((e, c) for e, c in sp.items()
                                       if e != top))

    def _build_point_maps(self):
        pts = [0]
        for b in self.basis:
            pts = pts + [x ^ b for x in pts]
        self.points = pts                    # index -> element, binary order
        self.index = {x: i for i, x in enumerate(pts)}
        if len(self.index) != 1 << self.p:
            raise CantorError("basis elements not independent")


def cantor_init(field):
    """Build the longest Cantor chain reachable in the field."""
    return CantorBasis(field)


def _div_linearized(F, f, d, support, c):
    """Split f = g*(s + c) + r where s is monic of degree d with the given
    low-order support.  Returns (g, r); costs (support+1) mul/add per
    quotient coefficient."""
    if len(f) <= d:
        return [], list(f)
    r = list(f)
    g = [0] * (len(f) - d)
    if F.ctr is None:
        exp, log = F.exp, F.log
        lc_ = log[c] if c else None
        for k in range(len(f) - 1, d - 1, -1):
            qc = r[k]
            g[k - d] = qc
            if qc:
                base = k - d
                lq = log[qc]
                for e, ce in support:
                    r[base + e] ^= exp[lq + log[ce]]
                if lc_ is not None:
                    r[base] ^= exp[lq + lc_]
            r[k] = 0
        del r[d:]
        return norm(g), norm(r)
    add = F.add
    mul = F.mul
    for k in range(len(f) - 1, d - 1, -1):
        qc = r[k]
        g[k - d] = qc
        base = k - d
        for e, ce in support:
            r[base + e] = add(r[base + e], mul(qc, ce))
        r[base] = add(r[base], mul(qc, c))
        r[k] = 0
    del r[d:]
    return norm(g), norm(r)


def _mul_linearized(F, g, d, support, c, out_len):
    """g*(s + c) where s is monic of degree d with the given support."""
    out = [0] * out_len
    # the monic leading term just places g shifted by d (no arithmetic);
    # every lower support term is a counted multiply-accumulate
    for j, gj in enumerate(g):
        out[j + d] = gj
    if F.ctr is None:
        exp, log = F.exp, F.log
        lc_ = log[c] if c else None
        for j, gj in enumerate(g):
            if gj:
                lg = log[gj]
                for e, ce in support:
                    out[j + e] ^= exp[lg + log[ce]]
                if lc_ is not None:
                    out[j] ^= exp[lg + lc_]
        return out
    add = F.add
    mul = F.mul
    for j, gj in enumerate(g):
        for e, ce in support:
            out[j + e] = add(out[j + e], mul(gj, ce))
        out[j] = add(out[j], mul(gj, c))
    return out


def _mpe(F, ctx, f, i, cs):
    if i == 0:
        return [f[0] if f else 0]
    d = 1 << (i - 1)
    c = cs[i - 1]
    g, r0 = _div_linearized(F, f, d, ctx.support[i - 1], c)
    tw = ctx.tw[i - 1][i]
    r1 = list(r0) + [0] * (len(g) - len(r0))
    if F.ctr is None:
        exp, log = F.exp, F.log
        ltw = log[tw]
        for j, gj in enumerate(g):
            if gj:
                r1[j] ^= exp[ltw + log[gj]]
        norm(r1)
        cs_right = tuple(cs[j] ^ ctx.tw[j][i] for j in range(i - 1))
    else:
        mul = F.mul
        add = F.add
        for j, gj in enumerate(g):
            r1[j] = add(r1[j], mul(tw, gj))
        norm(r1)
        cs_right = tuple(add(cs[j], ctx.tw[j][i]) for j in range(i - 1))
    left = _mpe(F, ctx, r0, i - 1, cs)
    right = _mpe(F, ctx, r1, i - 1, cs_right)
    return left + right


def mpe(F, ctx, f, i):
    """Evaluate f (deg < 2^i) on all 2^i points of W_i, binary order."""
    if i > ctx.p:
        raise CantorError(f"level {i} exceeds subspace dimension {ctx.p}")
    if f and len(f) > 1 << i:
        raise CantorError("polynomial degree too large for level")
    return _mpe(F, ctx, list(f), i, (0,) * i)


def _mpi(F, ctx, vals, i, cs):
    if i == 0:
        v = vals[0]
        return [v] if v else []
    half = 1 << (i - 1)
    r0 = _mpi(F, ctx, vals[:half], i - 1, cs)
    ti = ctx.tw_inv[i]
    if F.ctr is None:
        exp, log = F.exp, F.log
        cs_right = tuple(cs[j] ^ ctx.tw[j][i] for j in range(i - 1))
        r1 = _mpi(F, ctx, vals[half:], i - 1, cs_right)
        n = max(len(r0), len(r1))
        lti = log[ti]
        g = [0] * n
        for j in range(n):
            x = (r0[j] if j < len(r0) else 0) ^ (r1[j] if j < len(r1) else 0)
            if x:
                g[j] = exp[lti + log[x]]
        norm(g)
        out = _mul_linearized(F, g, half, ctx.support[i - 1], cs[i - 1],
                              1 << i)
        for j in range(min(half, len(r0))):
            out[j] ^= r0[j]
        return norm(out)
    add = F.add
    mul = F.mul
    cs_right = tuple(add(cs[j], ctx.tw[j][i]) for j in range(i - 1))
    r1 = _mpi(F, ctx, vals[half:], i - 1, cs_right)
    # g = (r1 - r0) * s_(i-1)(beta_i)^(-1), using the precomputed inverse
    n = max(len(r0), len(r1))
    dcoef = [0] * n
    for j in range(n):
        a = r0[j] if j < len(r0) else 0
        b = r1[j] if j < len(r1) else 0
        dcoef[j] = add(a, b)
    g = norm([mul(ti, x) for x in dcoef])
    out = _mul_linearized(F, g, half, ctx.support[i - 1], cs[i - 1], 1 << i)
    for j in range(half):
        out[j] = add(out[j], r0[j] if j < len(r0) else 0)
    return norm(out)


def mpi(F, ctx, values, i):
    """Interpolate the unique f, deg f < 2^i, from values on W_i."""
    if i > ctx.p:
        raise CantorError(f"level {i} exceeds subspace dimension {ctx.p}")
    if len(values) != 1 << i:
        raise CantorError(f"need exactly 2^{i} values")
    return _mpi(F, ctx, list(values), i, (0,) * i)


def cantor_mul(F, ctx, a, b):
    """Fast product via MPE -> pointwise multiply -> MPI.

    Zero/constant operands short-circuit to schoolbook; bound tests pin
    full-length operands to exercise the whole pipeline."""
    if not a or not b or len(a) == 1 or len(b) == 1:
        from .polyring import poly_mul_school
        return poly_mul_school(F, a, b)
    h = len(a) + len(b) - 1
    if h > 1 << ctx.p:
        raise CantorError("degree exceeds evaluation subspace")
    lev = (h - 1).bit_length()
    ea = mpe(F, ctx, a, lev)
    eb = mpe(F, ctx, b, lev)
    if F.ctr is None:
        exp, log = F.exp, F.log
        pw = [exp[log[x] + log[y]] if x and y else 0
              for x, y in zip(ea, eb)]
    else:
        mul = F.mul
        pw = [mul(x, y) for x, y in zip(ea, eb)]
    return mpi(F, ctx, pw, lev)


def fast_mul(F, ctx, a, b, threshold=16):
    """Product dispatcher: Cantor pipeline for large products when the
    subspace can hold them, schoolbook otherwise."""
    from .polyring import poly_mul_school
    if not a or not b:
        return []
    h = len(a) + len(b) - 1
    if ctx is None or h < threshold or h > 1 << ctx.p:
        return poly_mul_school(F, a, b)
    return cantor_mul(F, ctx, a, b)
