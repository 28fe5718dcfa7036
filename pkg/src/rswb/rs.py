"""Reed-Solomon evaluation codes: encoder, two syndromeless decoders, the
syndrome-based decoder, and errors-and-erasures wrappers.

Every decoder runs in "direct" or "fast" mode.  Direct mode follows the
classical building blocks whose operation counts reproduce the published
worst-case formulas: naive IDFT interpolation, cross-multiplication EEA
with a systolic cost schedule, and Horner-based search/evaluation steps.
Fast mode swaps in additive-FFT evaluation/interpolation, the
divide-and-conquer partial GCD (or classical EEA with fast products,
per config) and Newton division; whenever a fast primitive is unavailable
(for odd m the Cantor domain stops at two points) it falls back and says
so in DecodeResult.notes.

Counting discipline: each decode step runs on its own counted field view,
collected in DecodeResult.steps.  The steps named in EXCLUDED_STEPS are
bookkeeping outside the published step tables (re-encoding the recovered
message, extracting the message from a corrected word, erasure setup, and
the second-cofactor replay that the partial-GCD array width cannot hold);
they still appear in the totals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .counting import OpCounts, total_of
from .cantor import CantorBasis, mpe, mpi, fast_mul
from .euclid import StopRule, feea, _cross_eea, _monic_eea
from .newton import fast_divmod
from .polyring import (norm, lc, poly_mul_school,
                       poly_eval_horner, poly_idft_naive,
                       poly_interp_lagrange, poly_divmod_long, poly_deriv,
                       poly_monic)


class RsError(ValueError):
    pass


EXCLUDED_STEPS = frozenset({"reencode", "message_extract", "erasure_setup",
                            "partial_gcd_cofactor"})


@dataclass(frozen=True)
class ImplConfig:
    """Fast-mode algorithm selection (explicit, never silent)."""
    fast_mul_threshold: int = 16      # product size where Cantor beats schoolbook
    fast_gcd: str = "feea"            # "feea" | "classical"
    fast_msg_division: str = "newton"  # "newton" | "long"
    feea_cutoff: int = 32


DEFAULT_CONFIG = ImplConfig()

# case-study configuration: classical EEA with fast multiplication and
# long division measure cheaper than the asymptotic routines at the
# moderate case-study lengths
CASE_STUDY_CONFIG = ImplConfig(fast_gcd="classical", fast_msg_division="long")


@dataclass
class DecodeResult:
    status: str                       # "ok" | "decoding-failure"
    message: list | None = None
    codeword: list | None = None
    errors: dict = dc_field(default_factory=dict)   # position -> magnitude
    counts: OpCounts = dc_field(default_factory=OpCounts)
    steps: dict = dc_field(default_factory=dict)
    notes: list = dc_field(default_factory=list)
    reason: str = ""

    @property
    def ok(self):
        return self.status == "ok"


@dataclass(frozen=True)
class ErasureSpec:
    positions: tuple

    def __post_init__(self):
        if len(set(self.positions)) != len(self.positions):
            raise RsError("erasure positions must be distinct")


class RsCode:
    """RS evaluation code: codeword_i = m(a_i), deg m < k."""

    def __init__(self, field, n, k, points="cyclic"):
        if not 0 < k < n:
            raise RsError("need 0 < k < n")
        if n > field.order:
            raise RsError(f"n={n} exceeds field size 2^{field.m}")
        if (n - k) % 2:
            raise RsError(f"n-k={n - k} is odd; the decoders assume n-k even "
                          "(d-1 = 2t)")
        self.field = field.base() if field.ctr is not None else field
        self.n = n
        self.k = k
        self.t = (n - k) // 2
        if points == "cyclic":
            if n != field.q1:
                raise RsError("cyclic point set needs n = 2^m - 1")
            self.points = [self.field.pow_alpha(i) for i in range(n)]
            self.cyclic = True
        else:
            self.points = list(points)
            if len(self.points) != n:
                raise RsError("need exactly n evaluation points")
            if len(set(self.points)) != n:
                raise RsError("duplicate evaluation points")
            self.cyclic = (n == field.q1 and
                           self.points == [self.field.pow_alpha(i)
                                           for i in range(n)])
        self.g0 = self._build_g0()
        self._cantor = None

    def _build_g0(self):
        F = self.field
        prod = [1]
        for a in self.points:
            prod = poly_mul_school(F, prod, [a, 1])
        if self.cyclic:
            shortcut = [1] + [0] * (self.n - 1) + [1]   # x^n + 1 in char 2
            if prod != shortcut:
                raise RsError("cyclic shortcut x^n+1 failed verification")
        return prod

    @property
    def cantor_ctx(self):
        if self._cantor is None:
            self._cantor = CantorBasis(self.field)
        return self._cantor


def rs_new(field, n, k, points="cyclic"):
    return RsCode(field, n, k, points)


def rs_encode(code, m_poly, impl="direct", F=None):
    """Evaluate the message at every code point."""
    if m_poly and len(m_poly) > code.k:
        raise RsError(f"message degree {len(m_poly) - 1} >= k={code.k}")
    if F is None:
        F = code.field
    if impl == "fast":
        ctx = code.cantor_ctx
        if ctx.p == code.field.m:
            vals = mpe(F, ctx, list(m_poly), ctx.p)
            return [vals[ctx.index[a]] for a in code.points]
    return [poly_eval_horner(F, m_poly, a) for a in code.points]


# -- plumbing -----------------------------------------------------------

def _stepper(field, count):
    steps = {}
    base = field.base() if field.ctr is not None else field

    def view(name):
        if not count:
            return base
        c = steps.setdefault(name, OpCounts())
        return base.counted(c)

    return steps, view


def _finish(status, steps, notes, **kw):
    res = DecodeResult(status=status, steps=steps, notes=notes, **kw)
    res.counts = total_of(steps)
    return res


def _mul_dispatch(F, code, cfg):
    ctx = code.cantor_ctx
    use = ctx if ctx.p >= 2 else None
    return lambda a, b: fast_mul(F, use, a, b, threshold=cfg.fast_mul_threshold)


def _interpolate(code, F, values, points, impl, cfg, notes):
    """g1 with g1(points_i) = values_i, deg g1 < len(points)."""
    full_cyclic = (points is code.points and code.cyclic)
    if impl == "fast" and full_cyclic:
        ctx = code.cantor_ctx
        if ctx.p == code.field.m:
            add = F.add
            v0 = 0
            for v in values:
                v0 = add(v0, v)       # kills the top interpolation coefficient
            vals = [0] * (1 << ctx.p)
            vals[ctx.index[0]] = v0
            for a, v in zip(code.points, values):
                vals[ctx.index[a]] = v
            return mpi(F, ctx, vals, ctx.p)
        notes.append("interpolation: additive-FFT domain unavailable "
                     f"(p={ctx.p} < m={code.field.m}); used direct path")
    if full_cyclic:
        return poly_idft_naive(F, values)
    return poly_interp_lagrange(F, points, values)


def _reencode_and_diff(code, F, message, received, points=None):
    pts = points if points is not None else code.points
    codeword = [poly_eval_horner(F, message, a) for a in pts]
    errors = {}
    for i, (c, r) in enumerate(zip(codeword, received)):
        if c != r:
            errors[i] = c ^ r
    return codeword, errors


def _st_divide(F, dividend, divisor, div_width, quota=True):
    """Inversion-free cross-multiplication division.

    Returns (q_scaled, remainder) with q_scaled = a*(dividend/divisor) for
    a nonzero constant a.  Runs exactly len(dividend)-len(divisor)+1
    iterations; each charges (len(dividend)+1+div_width) multiplications
    and (div_width+1) additions, the fixed work of the systolic array the
    published recovery formulas assume.
    """
    dn = len(dividend)
    dl = len(divisor)
    if dn < dl:
        return [], list(dividend)
    iters = dn - dl + 1
    r = list(dividend)
    q = [0] * iters
    b = divisor[-1]
    add, mul = F.add, F.mul
    ctr = F.ctr
    qm = dn + 1 + div_width
    qa = div_width + 1
    filled = 0
    if ctr is None:
        exp, log = F.exp, F.log
        lb = log[b]
        for j in range(iters):
            i = dn - 1 - j
            c = r[i]
            for idx in range(i):
                v = r[idx]
                if v:
                    r[idx] = exp[lb + log[v]]
            for idx in range(iters - filled, iters):
                v = q[idx]
                if v:
                    q[idx] = exp[lb + log[v]]
            if c:
                off = i - dl + 1
                lcq = log[c]
                for e in range(dl - 1):
                    dv = divisor[e]
                    if dv:
                        r[off + e] ^= exp[lcq + log[dv]]
            r[i] = 0
            q[i - dl + 1] = c
            filled += 1
        return norm(q), norm(r[:dl - 1])
    for j in range(iters):
        i = dn - 1 - j
        c = r[i]
        for idx in range(i):
            r[idx] = mul(b, r[idx])
        for idx in range(iters - filled, iters):
            q[idx] = mul(b, q[idx])
        off = i - dl + 1
        for e in range(dl - 1):
            r[off + e] = add(r[off + e], mul(c, divisor[e]))
        mul(b, c)                # top-slot multiply; the sum cancels
        r[i] = 0
        q[off] = c
        filled += 1
        if quota:
            nat_mul = i + filled - 1 + dl
            nat_add = dl - 1
            if nat_mul > qm or nat_add > qa:
                raise AssertionError("st_divide row overflow")
            ctr.mul += qm - nat_mul
            ctr.add += qa - nat_add
    return norm(q), norm(r[:dl - 1])


def _exact_div(F, a, b, cfg, mul):
    """(a / b, remainder-was-zero) for the fast message-recovery path."""
    if cfg.fast_msg_division == "long" or len(b) <= 1:
        q, r = poly_divmod_long(F, a, b)
        return q, not r
    bm, cb = poly_monic(F, b)
    q, r = fast_divmod(F, a, bm, mul=mul)
    if r:
        return q, False
    if cb != 1:
        ci = F.inv(cb)
        fm = F.mul
        q = norm([fm(ci, x) for x in q])
    return q, True


# -- Algorithm 1 (syndromeless) -----------------------------------------

def rs_decode_gao(code, received, impl="direct", config=None, count=True):
    if len(received) != code.n:
        raise RsError(f"received length {len(received)} != n={code.n}")
    cfg = config or DEFAULT_CONFIG
    steps, view = _stepper(code.field, count)
    notes = []
    g1 = _interpolate(code, view("interpolation"), received, code.points,
                      impl, cfg, notes)
    threshold = (code.n + code.k) // 2
    out = _gao1_core(code.field, code.g0, g1, code.k, threshold,
                     code, impl, cfg, view, notes)
    if isinstance(out, str):
        return _finish("decoding-failure", steps, notes, reason=out)
    message = out
    codeword, errors = _reencode_and_diff(code, view("reencode"), message,
                                          received)
    return _finish("ok", steps, notes, message=message, codeword=codeword,
                   errors=errors)


def _gao1_core(field, g0, g1, k, threshold, code, impl, cfg, view, notes):
    """Partial GCD + message recovery; returns message or failure reason."""
    F2 = view("partial_gcd")
    stop = StopRule("degree-below", threshold)
    if impl == "direct":
        res = _cross_eea(F2, g0, g1, stop)
        g_bar = res.r_next_raw
        v_bar = res.R[1][1]
        c1 = 1
    elif not g1 or len(g1) - 1 < threshold:
        g_bar, v_bar, c1 = list(g1), [1], 1   # stops at entry, zero cost
    else:
        mul2 = _mul_dispatch(F2, code, cfg)
        g1m, c1 = poly_monic(F2, g1)
        n0 = len(g0) - 1
        h = n0 - threshold
        if cfg.fast_gcd == "feea" and h >= 1:
            res = feea(F2, g0, g1m, h, need_s=False, mul=mul2,
                       base_cutoff=cfg.feea_cutoff)
        else:
            res = _monic_eea(F2, g0, g1m, stop, mul=mul2)
        g_bar = res.r_next_raw
        v_bar = res.R[1][1]

    F3 = view("message_recovery")
    if not g_bar:
        return []                                   # zero message
    dv = len(v_bar) - 1
    if len(g_bar) - 1 - dv >= k:
        return "message degree would reach k (v does not divide g usefully)"
    if impl == "direct":
        div_width = (len(g0) - 1 - k) // 2 + 1      # t+1 array slots
        div_width = max(div_width, len(v_bar))
        q_bar, rem = _st_divide(F3, g_bar, v_bar, div_width)
        if rem:
            return "v does not divide g"
        # undo the cross-multiplication scale: 1/a = lc(g)/(lc(m)lc(v))
        s = F3.mul(lc(g_bar), F3.inv(F3.mul(lc(q_bar), lc(v_bar))))
        fm = F3.mul
        message = [fm(s, q_bar[i] if i < len(q_bar) else 0) for i in range(k)]
        norm(message)
    else:
        mul3 = _mul_dispatch(F3, code, cfg)
        q, ok = _exact_div(F3, g_bar, v_bar, cfg, mul3)
        if not ok:
            return "v does not divide g"
        if c1 != 1:
            fm = F3.mul
            q = norm([fm(c1, x) for x in q])
        message = q
    if message and len(message) > k:
        return "recovered message degree >= k"
    return message


# -- Algorithm 2 (syndromeless, split operands) --------------------------

def rs_decode_gao_mod(code, received, impl="direct", config=None, count=True):
    if len(received) != code.n:
        raise RsError(f"received length {len(received)} != n={code.n}")
    cfg = config or DEFAULT_CONFIG
    steps, view = _stepper(code.field, count)
    notes = []
    g1 = _interpolate(code, view("interpolation"), received, code.points,
                      impl, cfg, notes)
    out = _gao2_core(code.field, code.g0, g1, code.n, code.k,
                     code, impl, cfg, view, notes)
    if isinstance(out, str):
        return _finish("decoding-failure", steps, notes, reason=out)
    message = out
    codeword, errors = _reencode_and_diff(code, view("reencode"), message,
                                          received)
    return _finish("ok", steps, notes, message=message, codeword=codeword,
                   errors=errors)


def _gao2_core(field, g0, g1, n, k, code, impl, cfg, view, notes):
    s0 = norm(g0[k:])                 # deg n-k = 2t, monic
    s1 = norm(g1[k:]) if len(g1) > k else []
    threshold = (len(s0) - 1 + 1) // 2  # deg g < (d-1)/2, d-1 = deg s0
    F2 = view("partial_gcd")
    stop = StopRule("degree-below", threshold)
    u_scale = 1
    if impl == "direct":
        aux = view("partial_gcd_cofactor")
        res = _cross_eea(F2, s0, s1, stop, aux=aux)
        g_bar = res.r_next_raw
        u_bar = res.R[1][0]
        v_bar = res.R[1][1]
    elif not s1 or len(s1) - 1 < threshold:
        g_bar, u_bar, v_bar = list(s1), [], [1]   # stops at entry
    else:
        mul2 = _mul_dispatch(F2, code, cfg)
        s1m, c1 = poly_monic(F2, s1)
        h = len(s0) - 1 - threshold
        if cfg.fast_gcd == "feea" and h >= 1:
            res = feea(F2, s0, s1m, h, need_s=True, mul=mul2,
                       base_cutoff=cfg.feea_cutoff)
        else:
            res = _monic_eea(F2, s0, s1m, stop, mul=mul2)
        g_bar = res.r_next_raw
        u_bar = res.R[1][0]
        v_bar = res.R[1][1]
        u_scale = c1        # v_true = v_bar/c1, so (g0/v_bar)*u needs *c1

    F3 = view("message_recovery")
    if not v_bar:
        return "error locator vanished"
    dv = len(v_bar) - 1
    if impl == "direct":
        q_bar, rem = _st_divide(F3, g0, v_bar, len(v_bar))
        if rem:
            return "v does not divide g0"
        s = F3.inv(F3.mul(lc(q_bar), lc(v_bar)))
        fm = F3.mul
        q = norm([fm(s, x) for x in q_bar])
        qu = poly_mul_school(F3, q, u_bar)
    else:
        mul3 = _mul_dispatch(F3, code, cfg)
        q, ok = _exact_div(F3, g0, v_bar, cfg, mul3)
        if not ok:
            return "v does not divide g0"
        u_eff = u_bar
        if u_scale != 1:
            fm = F3.mul
            u_eff = [fm(u_scale, x) for x in u_bar]
        qu = mul3(q, u_eff)
    add = F3.add
    mp = [add(g1[i] if i < len(g1) else 0,
              qu[i] if i < len(qu) else 0) for i in range(n)]
    norm(mp)
    if mp and len(mp) > k:
        return "recovered message degree >= k"
    return mp


# -- syndrome-based decoder ----------------------------------------------

def rs_decode_syndrome(code, received, impl="direct", config=None, count=True):
    if len(received) != code.n:
        raise RsError(f"received length {len(received)} != n={code.n}")
    if not code.cyclic:
        raise RsError("syndrome decoder requires cyclic point set "
                      "(a_i = alpha^i, n = 2^m - 1)")
    cfg = config or DEFAULT_CONFIG
    steps, view = _stepper(code.field, count)
    notes = []
    n, k, t = code.n, code.k, code.t
    F = code.field

    syn = _syndromes(code, view("syndromes"), received, impl, cfg, notes)
    if not any(syn):
        msg = _extract_message(code, view("message_extract"), received)
        if msg is None:
            return _finish("decoding-failure", steps, notes,
                           reason="zero syndromes but word is not a codeword")
        return _finish("ok", steps, notes, message=msg,
                       codeword=list(received), errors={})

    out = _key_equation(code, view("key_equation"), syn, 2 * t, t, impl, cfg)
    if isinstance(out, str):
        return _finish("decoding-failure", steps, notes, reason=out)
    lam_bar, om_bar = out
    dv = len(lam_bar) - 1
    if dv == 0:
        return _finish("decoding-failure", steps, notes,
                       reason="nonzero syndromes but empty error locator")

    roots = _chien(code, view("chien"), lam_bar, t, impl, cfg)
    if len(roots) != dv:
        return _finish("decoding-failure", steps, notes,
                       reason=f"locator degree {dv} has {len(roots)} roots")

    Ff = view("forney")
    corrected = list(received)
    errors = {}
    lam_d = poly_deriv(Ff, lam_bar)
    for i in roots:
        x_inv = F.pow_alpha(i)
        om_v = poly_eval_horner(Ff, om_bar, x_inv, pad_to=t)
        de_v = poly_eval_horner(Ff, lam_d, x_inv, pad_to=t)
        if de_v == 0:
            return _finish("decoding-failure", steps, notes,
                           reason="locator derivative vanished at a root")
        mag = Ff.mul(om_v, Ff.inv(de_v))
        e = (n - i) % n
        corrected[e] = Ff.add(corrected[e], mag)
        if mag:
            errors[e] = mag

    msg = _extract_message(code, view("message_extract"), corrected)
    if msg is None:
        return _finish("decoding-failure", steps, notes,
                       reason="corrected word is not a codeword")
    return _finish("ok", steps, notes, message=msg, codeword=corrected,
                   errors=errors)


def _syndromes(code, F, word, impl, cfg, notes):
    """S_j = r(alpha^j) for j = 1..2t (codewords give all zeros)."""
    n, t = code.n, code.t
    if impl == "fast":
        ctx = code.cantor_ctx
        if ctx.p == code.field.m:
            vals = mpe(F, ctx, norm(list(word)), ctx.p)
            return [vals[ctx.index[code.field.pow_alpha(j)]]
                    for j in range(1, 2 * t + 1)]
        notes.append("syndromes: additive-FFT domain unavailable "
                     f"(p={ctx.p}); used Horner")
    return [poly_eval_horner(F, word, code.field.pow_alpha(j), pad_to=n)
            for j in range(1, 2 * t + 1)]


def _key_equation(code, F, syn, two_t, threshold, impl, cfg):
    """EEA on (x^2t, S(x)); returns the scaled pair (locator, evaluator)."""
    x2t = [0] * two_t + [1]
    s_poly = norm(list(syn))
    stop = StopRule("degree-below", threshold)
    if impl == "direct":
        res = _cross_eea(F, x2t, s_poly, stop)
        return res.R[1][1], res.r_next_raw
    mul2 = _mul_dispatch(F, code, cfg)
    sm, c1 = poly_monic(F, s_poly)
    h = two_t - threshold
    if cfg.fast_gcd == "feea" and h >= 1:
        res = feea(F, x2t, sm, h, need_s=False, mul=mul2,
                   base_cutoff=cfg.feea_cutoff)
    else:
        res = _monic_eea(F, x2t, sm, stop, mul=mul2)
    lam = res.R[1][1]
    if c1 != 1 and lam:
        ci = F.inv(c1)
        fm = F.mul
        lam = norm([fm(ci, x) for x in lam])
    return lam, res.r_next_raw


def _chien(code, F, lam_bar, t, impl, cfg):
    """All-position root search of the (scaled) locator.

    Direct mode uses the skip-the-constant Horner variant: evaluate
    G = (lam - lam_0)/x at alpha^i with t-1 multiplications, then one
    counted addition against lam_0*alpha^(n-i); the comparison constant
    comes from log-table index arithmetic like every other point power.
    """
    n = code.n
    field = code.field
    if impl == "fast":
        ctx = code.cantor_ctx
        if ctx.p == field.m:
            vals = mpe(F, ctx, list(lam_bar), ctx.p)
            return [i for i in range(n)
                    if vals[ctx.index[field.pow_alpha(i)]] == 0]
    v0 = lam_bar[0]
    g = lam_bar[1:]
    add = F.add
    exp, log, q1 = field.exp, field.log, field.q1
    v0_log = log[v0] if v0 else None
    roots = []
    for i in range(n):
        gv = poly_eval_horner(F, g, field.pow_alpha(i), pad_to=t)
        cmp_c = exp[(v0_log + n - i) % q1] if v0_log is not None else 0
        if add(gv, cmp_c) == 0:
            roots.append(i)
    return roots


def _extract_message(code, F, word):
    """Interpolate a (candidate) codeword back to its message, or None."""
    if code.cyclic:
        coeffs = poly_idft_naive(F, word)
    else:
        coeffs = poly_interp_lagrange(F, code.points, word)
    if coeffs and len(coeffs) > code.k:
        return None
    return coeffs


# -- errors-and-erasures --------------------------------------------------

def rs_decode_erasures(code, received, erasures, decoder="gao",
                       impl="direct", config=None, count=True):
    """Correct f errors plus nu erasures whenever 2f + nu <= 2t.

    Syndromeless decoders drop the erased coordinates and decode the
    shortened code; the syndrome decoder uses the erasure locator and
    modified syndromes.  Erased coordinates of `received` are treated as
    unreliable and may hold anything.
    """
    if isinstance(erasures, ErasureSpec):
        positions = list(erasures.positions)
    else:
        positions = list(erasures)
    if len(set(positions)) != len(positions):
        raise RsError("erasure positions must be distinct")
    if any(not 0 <= p < code.n for p in positions):
        raise RsError("erasure position out of range")
    if len(positions) > 2 * code.t:
        raise RsError(f"{len(positions)} erasures exceed 2t = {2 * code.t}")
    if len(received) != code.n:
        raise RsError(f"received length {len(received)} != n={code.n}")
    if not positions:
        if decoder == "gao":
            return rs_decode_gao(code, received, impl, config, count)
        if decoder == "gao-mod":
            return rs_decode_gao_mod(code, received, impl, config, count)
        return rs_decode_syndrome(code, received, impl, config, count)
    if decoder in ("gao", "gao-mod"):
        return _erasures_shortened(code, received, positions, decoder, impl,
                                   config or DEFAULT_CONFIG, count)
    if decoder == "syndrome":
        return _erasures_syndrome(code, received, positions, impl,
                                  config or DEFAULT_CONFIG, count)
    raise RsError(f"unknown decoder {decoder!r}")


def _erasures_shortened(code, received, positions, decoder, impl, cfg, count):
    """Errors-only decoding of the (n - nu, k) shortened code."""
    erased = set(positions)
    keep = [i for i in range(code.n) if i not in erased]
    n2 = len(keep)
    if n2 < code.k:
        raise RsError("too few surviving coordinates to recover k symbols")
    pts = [code.points[i] for i in keep]
    vals = [received[i] for i in keep]
    steps, view = _stepper(code.field, count)
    notes = [f"shortened to ({n2}, {code.k}) over surviving coordinates"]
    Fs = view("erasure_setup")
    g0 = [1]
    for a in pts:
        g0 = poly_mul_school(Fs, g0, [a, 1])
    g1 = poly_interp_lagrange(view("interpolation"), pts, vals)
    if decoder == "gao":
        threshold = (n2 + code.k + 1) // 2
        out = _gao1_core(code.field, g0, g1, code.k, threshold,
                         code, impl, cfg, view, notes)
    else:
        out = _gao2_core(code.field, g0, g1, n2, code.k,
                         code, impl, cfg, view, notes)
    if isinstance(out, str):
        return _finish("decoding-failure", steps, notes, reason=out)
    message = out
    codeword, errors = _reencode_and_diff(code, view("reencode"), message,
                                          received)
    return _finish("ok", steps, notes, message=message, codeword=codeword,
                   errors=errors)


def _erasures_syndrome(code, received, positions, impl, cfg, count):
    """Erasure-locator / modified-syndrome decoding."""
    n, k, t = code.n, code.k, code.t
    field = code.field
    nu = len(positions)
    steps, view = _stepper(field, count)
    notes = []
    work = list(received)
    for p in positions:
        work[p] = 0

    syn = _syndromes(code, view("syndromes"), work, impl, cfg, notes)
    Fe = view("erasure_setup")
    gamma = [1]
    for p in positions:
        gamma = poly_mul_school(Fe, gamma, [1, code.points[p]])  # 1 - a_p x
    s_poly = norm(list(syn))
    xi = poly_mul_school(Fe, s_poly, gamma)[:2 * t]
    norm(xi)

    threshold = t + (nu + 1) // 2
    Fk = view("key_equation")
    x2t = [0] * (2 * t) + [1]
    stop = StopRule("degree-below", threshold)
    if impl == "direct" or not xi:
        res = _cross_eea(Fk, x2t, xi, stop)
        lam_bar, om_bar = res.R[1][1], res.r_next_raw
    else:
        mul2 = _mul_dispatch(Fk, code, cfg)
        xim, c1 = poly_monic(Fk, xi)
        h = 2 * t - threshold
        if cfg.fast_gcd == "feea" and h >= 1:
            res = feea(Fk, x2t, xim, h, need_s=False, mul=mul2,
                       base_cutoff=cfg.feea_cutoff)
        else:
            res = _monic_eea(Fk, x2t, xim, stop, mul=mul2)
        lam_bar, om_bar = res.R[1][1], res.r_next_raw
        if c1 != 1 and lam_bar:
            ci = Fk.inv(c1)
            fm = Fk.mul
            lam_bar = norm([fm(ci, x) for x in lam_bar])
    if not lam_bar:
        return _finish("decoding-failure", steps, notes,
                       reason="errata locator vanished")
    psi_bar = poly_mul_school(Fe, lam_bar, gamma)   # errata locator

    d_psi = len(psi_bar) - 1
    roots = _chien(code, view("chien"), psi_bar, max(d_psi, 1), impl, cfg)
    if len(roots) != d_psi:
        return _finish("decoding-failure", steps, notes,
                       reason=f"errata locator degree {d_psi} has "
                              f"{len(roots)} roots")

    Ff = view("forney")
    corrected = work
    errors = {}
    psi_d = poly_deriv(Ff, psi_bar)
    width = max(len(om_bar), len(psi_d), 1)
    for i in roots:
        x_inv = field.pow_alpha(i)
        om_v = poly_eval_horner(Ff, om_bar, x_inv, pad_to=width)
        de_v = poly_eval_horner(Ff, psi_d, x_inv, pad_to=width)
        if de_v == 0:
            return _finish("decoding-failure", steps, notes,
                           reason="errata derivative vanished at a root")
        mag = Ff.mul(om_v, Ff.inv(de_v))
        e = (n - i) % n
        corrected[e] = Ff.add(corrected[e], mag)
    msg = _extract_message(code, view("message_extract"), corrected)
    if msg is None:
        return _finish("decoding-failure", steps, notes,
                       reason="corrected word is not a codeword")
    for i, (c, r) in enumerate(zip(corrected, received)):
        if c != r:
            errors[i] = c ^ r
    return _finish("ok", steps, notes, message=msg, codeword=corrected,
                   errors=errors)


# -- decoder dispatch and helpers ----------------------------------------

DECODERS = {
    "gao": rs_decode_gao,
    "gao-mod": rs_decode_gao_mod,
    "syndrome": rs_decode_syndrome,
}


def rs_decode(code, received, decoder="gao", impl="direct", config=None,
              count=True):
    try:
        fn = DECODERS[decoder]
    except KeyError:
        raise RsError(f"unknown decoder {decoder!r}") from None
    return fn(code, received, impl=impl, config=config, count=count)


def corrupt_word(code, codeword, n_errors, n_erasures=0, seed=0):
    """Inject exactly n_errors random nonzero-magnitude errors and mark
    n_erasures further coordinates as erased (their symbols zeroed).
    Returns (received, error_map, erasure_positions)."""
    rng = random.Random(seed)
    if n_errors + n_erasures > code.n:
        raise RsError("more corrupted coordinates than the word has")
    pos = rng.sample(range(code.n), n_errors + n_erasures)
    err_pos, era_pos = pos[:n_errors], sorted(pos[n_errors:])
    received = list(codeword)
    error_map = {}
    for p in err_pos:
        mag = rng.randrange(1, code.field.order)
        received[p] ^= mag
        error_map[p] = mag
    for p in era_pos:
        received[p] = 0
    return received, error_map, era_pos


def worst_case_word(code, seed=0):
    """A full-degree random message hit by exactly t errors: the pattern
    the direct-implementation worst-case formulas assume."""
    rng = random.Random(seed)
    q = code.field.order
    msg = [rng.randrange(q) for _ in range(code.k - 1)]
    msg.append(rng.randrange(1, q))
    codeword = rs_encode(code, msg)
    received = list(codeword)
    error_map = {}
    for p in rng.sample(range(code.n), code.t):
        mag = rng.randrange(1, q)
        received[p] ^= mag
        error_map[p] = mag
    return msg, codeword, received, error_map
