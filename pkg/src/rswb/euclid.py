"""Extended Euclidean machinery for polynomials over GF(2^m).

Three engines share the same result shape:

* eea_classic(variant="monic"): the textbook recursion with every
  remainder normalized monic; this is the oracle every other engine is
  tested against.
* eea_classic(variant="cross-mult"): inversion-free cross-multiplication
  with a systolic cost schedule: every top-coefficient elimination
  executes the fixed per-cycle work of a (delta+2)-slot array, so worst
  case measured counts land exactly on the direct-implementation
  formulas.  Outputs are scaled row-wise; decoders use scale-invariant
  recovery.
* feea: the divide-and-conquer partial GCD on truncated operands.  Its
  output is bit-identical to the monic trace stopped at eta(h).

R matrices are ((s_l, t_l), (s~_(l+1), t~_(l+1))): the top row is the
normalized cofactor pair with s_l*r0 + t_l*r1 = r_l, the bottom row is
the raw pair reproducing the unnormalized next remainder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import (norm, deg, lc, poly_add, poly_mul_school, poly_shift,
                       poly_divmod_long, poly_trunc_top)
from .newton import fast_divmod


class EuclidError(ValueError):
    pass


@dataclass(frozen=True)
class StopRule:
    mode: str                   # "gcd" | "degree-below"
    threshold: int = 0

    def __post_init__(self):
        if self.mode not in ("gcd", "degree-below"):
            raise EuclidError(f"unknown stop mode {self.mode!r}")
        if self.mode == "degree-below" and self.threshold < 0:
            raise EuclidError("degree-below threshold must be >= 0")


@dataclass
class EeaResult:
    l: int                      # completed division steps
    r_last: list                # r_l (monic for the monic variant/FEEA)
    r_next_raw: list            # unnormalized r~_(l+1) (the stopper)
    rho: int                    # lc(r_next_raw), 1 when it is zero
    R: tuple                    # ((s_l, t_l), (s~, t~)); entries may be None
    variant: str = "monic"
    scale: int = 1              # cross-mult: lc(r_last) vs the monic trace


def _below(r, stop):
    if not r:
        return True
    if stop.mode == "gcd":
        return False
    return len(r) - 1 < stop.threshold


def eea_classic(F, r0, r1, stop, variant="monic", mul=None, aux=None):
    """Classical EEA; stops at the first remainder past the stop rule.

    Returns the state after l completed steps: r_l is the last remainder
    on or above the stopping line, r_next_raw the first one past it.
    """
    if r1 and (not r0 or len(r0) <= len(r1)):
        raise EuclidError("need deg r0 > deg r1 (or r1 = 0)")
    if variant == "monic":
        if lc(r0) != 1 or (r1 and lc(r1) != 1):
            raise EuclidError("monic variant requires monic inputs")
        return _monic_eea(F, r0, r1, stop, mul=mul)
    if variant == "cross-mult":
        return _cross_eea(F, r0, r1, stop, aux=aux)
    raise EuclidError(f"unknown variant {variant!r}")


def _monic_eea(F, r0, r1, stop, mul=None, divide=None):
    if mul is None:
        mul = lambda a, b: poly_mul_school(F, a, b)
    if divide is None:
        divide = lambda a, b: poly_divmod_long(F, a, b)
    rp, sp, tp = list(r0), [1], []
    rc, sc, tc = list(r1), [], [1]
    if _below(rc, stop):
        return EeaResult(0, rp, rc, lc(rc) if rc else 1,
                         ((sp, tp), (sc, tc)))
    l = 0
    while True:
        q, raw = divide(rp, rc)
        raws = poly_add(F, sp, mul(q, sc))
        rawt = poly_add(F, tp, mul(q, tc))
        l += 1
        if _below(raw, stop):
            return EeaResult(l, rc, raw, lc(raw) if raw else 1,
                             ((sc, tc), (raws, rawt)))
        rho = lc(raw)
        if rho == 1:
            rn, sn, tn = raw, raws, rawt
        else:
            ri = F.inv(rho)
            fm = F.mul
            rn = [fm(ri, c) for c in raw]
            sn = [fm(ri, c) for c in raws]
            tn = [fm(ri, c) for c in rawt]
        rp, sp, tp = rc, sc, tc
        rc, sc, tc = rn, sn, tn


def eta(F, r0, r1, h):
    """Number of EEA steps j with sum(deg q_i, i<=j) <= h."""
    if not r1:
        return 0
    stop = StopRule("degree-below", max(len(r0) - 1 - h, 0))
    res = _monic_eea(F.base(), _monic_of(F, r0), _monic_of(F, r1), stop)
    return res.l


def _monic_of(F, f):
    if not f or f[-1] == 1:
        return list(f)
    Fb = F.base()
    ri = Fb.inv(f[-1])
    return [Fb.mul(ri, c) for c in f]


# -- inversion-free cross-multiplication (Sugiyama-tower costing) -------

def _cross_eea(F, r0, r1, stop, aux=None, quota=True):
    """Cross-multiplication EEA over (r, t[, s]) rows.

    delta = deg r0; each elimination charges exactly 2(delta+2)
    multiplications and delta+1 additions on F's counter (idle array
    slots clock through zeros like the hardware they model).  The s rows,
    when requested, are tracked through `aux` (a separately counted field
    view) because the published array width only covers (r, t).
    """
    delta = len(r0) - 1
    w = delta + 2
    track_s = aux is not None
    ra, ta, sa = list(r0), [], [1]
    rb, tb, sb = list(r1), [1], []
    fadd, fmul = F.add, F.mul
    ctr = F.ctr
    elims = 0
    l = 0
    if _below(rb, stop):
        return EeaResult(0, ra, rb, lc(rb) if rb else 1,
                         ((sa if track_s else None, ta),
                          (sb if track_s else None, tb)),
                         variant="cross-mult", scale=lc(ra))
    while True:
        # eliminate the top coefficient of the (ra..) row against (rb..)
        a = rb[-1]
        b = ra[-1]
        shift = len(ra) - len(rb)
        if ctr is None:
            exp, log = F.exp, F.log
            la, lb = log[a], log[b]
            nr = [exp[la + log[c]] if c else 0 for c in ra]
            for j in range(len(rb) - 1):
                c = rb[j]
                if c:
                    nr[shift + j] ^= exp[lb + log[c]]
            nr.pop()
            norm(nr)
            nt = [exp[la + log[c]] if c else 0 for c in ta] + \
                [0] * max(0, shift + len(tb) - len(ta))
            for j in range(len(tb)):
                c = tb[j]
                if c:
                    nt[shift + j] ^= exp[lb + log[c]]
            norm(nt)
        else:
            nat_mul = len(ra) + len(ta) + len(rb) + len(tb)
            nat_add = (len(rb) - 1) + len(tb)
            if nat_mul > 2 * w or nat_add > w - 1:
                raise AssertionError("cross-mult row overflow")
            nr = [fmul(a, c) for c in ra]
            for j in range(len(rb) - 1):
                nr[shift + j] = fadd(nr[shift + j], fmul(b, rb[j]))
            fmul(b, rb[-1])  # top slot multiply; the sum cancels structurally
            nr.pop()
            norm(nr)
            nt = [fmul(a, c) for c in ta] + \
                [0] * max(0, shift + len(tb) - len(ta))
            for j in range(len(tb)):
                nt[shift + j] = fadd(nt[shift + j], fmul(b, tb[j]))
            norm(nt)
            if quota:
                ctr.mul += 2 * w - nat_mul
                ctr.add += (w - 1) - nat_add
        if track_s:
            am, aa = aux.mul, aux.add
            ns = [am(a, c) for c in sa] + [0] * max(0, shift + len(sb) - len(sa))
            for j in range(len(sb)):
                ns[shift + j] = aa(ns[shift + j], am(b, sb[j]))
            norm(ns)
        else:
            ns = None
        elims += 1
        ra, ta, sa = nr, nt, ns if track_s else sa
        if not ra or len(ra) < len(rb):
            # division step complete: ra is the next remainder
            l += 1
            if _below(ra, stop):
                return EeaResult(l, rb, ra, lc(ra) if ra else 1,
                                 ((sb if track_s else None, tb),
                                  (sa if track_s else None, ta)),
                                 variant="cross-mult",
                                 scale=lc(rb) if rb else 1)
            ra, ta, sa, rb, tb, sb = rb, tb, sb, ra, ta, sa


# -- divide-and-conquer partial GCD (fast EEA) --------------------------

FEEA_BASE_CUTOFF = 32  # below this the classical trace is cheaper


def feea(F, r0, r1, h, need_s=True, mul=None, base_cutoff=FEEA_BASE_CUTOFF):
    """Partial GCD after eta(h) steps, identical to the monic trace.

    Inputs must be monic with deg r0 > deg r1 and 0 < h <= deg r0.  With
    need_s=False the s column of the output matrix is skipped (the last
    composition does half the work); internal recursion always carries
    full matrices.
    """
    if not r0 or lc(r0) != 1 or (r1 and lc(r1) != 1):
        raise EuclidError("feea requires monic inputs")
    if r1 and len(r0) <= len(r1):
        raise EuclidError("feea requires deg r0 > deg r1")
    n0 = len(r0) - 1
    if not 0 < h <= n0:
        raise EuclidError(f"h={h} outside (0, deg r0]")
    if mul is None:
        mul = lambda a, b: poly_mul_school(F, a, b)
    res = _feea(F, list(r0), list(r1), h, mul, base_cutoff, need_s)
    if not need_s:
        (s0, t0), (s1, t1) = res.R
        res.R = ((None, t0), (None, t1))
    return res


def _identity_result(r0, r1):
    return EeaResult(0, list(r0), list(r1), lc(r1) if r1 else 1,
                     (([1], []), ([], [1])))


def _matvec(F, mul, M, v0, v1):
    """M @ [v0, v1] for a 2x2 polynomial matrix."""
    (a, b), (c, d) = M
    top = poly_add(F, mul(a, v0), mul(b, v1))
    bot = poly_add(F, mul(c, v0), mul(d, v1))
    return top, bot


def _scale_row(F, row, inv_c):
    fm = F.mul
    return tuple([fm(inv_c, x) for x in p] for p in row)


def _feea(F, r0, r1, h, mul, cutoff, top_need_s):
    n0 = len(r0) - 1
    n1 = len(r1) - 1 if r1 else None
    # 3.1: nothing resolvable within h
    if not r1 or h < n0 - n1:
        return _identity_result(r0, r1)
    if n0 <= cutoff:
        return _monic_eea(F, r0, r1,
                          StopRule("degree-below", max(n0 - h, 0)), mul=mul)

    h1 = h // 2
    if 2 * h1 >= n0:
        sub1 = _feea(F, r0, r1, h1, mul, cutoff, True)
        rjm1, rjt = sub1.r_last, sub1.r_next_raw
    else:
        shift = n0 - 2 * h1
        r0s = poly_trunc_top(r0, 2 * h1)
        r1s = poly_trunc_top(r1, 2 * h1 - (n0 - n1))
        sub1 = _feea(F, r0s, r1s, h1, mul, cutoff, True)
        res0 = norm(r0[:shift])
        res1 = norm(r1[:shift])
        top, bot = _matvec(F, mul, sub1.R, res0, res1)
        rjm1 = poly_add(F, top, poly_shift(sub1.r_last, shift))
        rjt = poly_add(F, bot, poly_shift(sub1.r_next_raw, shift))
    j1 = sub1.l                                   # j - 1
    Rjm1 = sub1.R                                 # raw bottom row

    # 3.5: the step reaching r_j may already overshoot the budget
    if not rjt or h < n0 - (len(rjt) - 1):
        return EeaResult(j1, rjm1, rjt, lc(rjt) if rjt else 1, Rjm1)

    rho_j = lc(rjt)
    inv_rho_j = F.inv(rho_j) if rho_j != 1 else 1
    fm = F.mul
    r_j = [fm(inv_rho_j, c) for c in rjt] if rho_j != 1 else list(rjt)
    row_j = (Rjm1[1] if rho_j == 1
             else _scale_row(F, Rjm1[1], inv_rho_j))   # (s_j, t_j)
    n_j = len(r_j) - 1

    # 3.6: one classical division step
    q_j, rjt1 = fast_divmod(F, rjm1, r_j, mul=mul)
    row_j1_raw = (poly_add(F, Rjm1[0][0], mul(q_j, row_j[0])),
                  poly_add(F, Rjm1[0][1], mul(q_j, row_j[1])))
    rho_j1 = lc(rjt1) if rjt1 else 1
    inv_rho_j1 = F.inv(rho_j1) if rjt1 and rho_j1 != 1 else 1
    r_j1 = ([fm(inv_rho_j1, c) for c in rjt1] if rho_j1 != 1 else list(rjt1))
    row_j1 = (row_j1_raw if rho_j1 == 1
              else _scale_row(F, row_j1_raw, inv_rho_j1))

    # 3.7-3.9: recurse on the tail
    h2 = h - (n0 - n_j)
    n_j1 = len(r_j1) - 1 if r_j1 else None
    if not r_j1 or h2 < n_j - n_j1:
        sub2 = _identity_result(r_j, r_j1)
        r_l, rt_l1 = sub2.r_last, sub2.r_next_raw
    elif 2 * h2 >= n_j:
        sub2 = _feea(F, r_j, r_j1, h2, mul, cutoff, True)
        r_l, rt_l1 = sub2.r_last, sub2.r_next_raw
    else:
        shift2 = n_j - 2 * h2
        rjs = poly_trunc_top(r_j, 2 * h2)
        rj1s = poly_trunc_top(r_j1, 2 * h2 - (n_j - n_j1))
        sub2 = _feea(F, rjs, rj1s, h2, mul, cutoff, True)
        res_j = norm(r_j[:shift2])
        res_j1 = norm(r_j1[:shift2])
        top, bot = _matvec(F, mul, sub2.R, res_j, res_j1)
        r_l = poly_add(F, top, poly_shift(sub2.r_last, shift2))
        rt_l1 = poly_add(F, bot, poly_shift(sub2.r_next_raw, shift2))

    if sub2.l == 0:
        # the tail resolves nothing: l = j, and the raw next remainder is
        # the division output itself (not its monic normalization)
        return EeaResult(j1 + 1, r_j, rjt1, rho_j1 if rjt1 else 1,
                         (row_j, row_j1_raw))

    # 3.10: compose S* with the normalized (row_j, row_j1) pair
    (sa, ta), (sb, tb) = sub2.R
    t_top = poly_add(F, mul(sa, row_j[1]), mul(ta, row_j1[1]))
    t_bot = poly_add(F, mul(sb, row_j[1]), mul(tb, row_j1[1]))
    if top_need_s:
        s_top = poly_add(F, mul(sa, row_j[0]), mul(ta, row_j1[0]))
        s_bot = poly_add(F, mul(sb, row_j[0]), mul(tb, row_j1[0]))
    else:
        s_top = s_bot = None
    l = j1 + 1 + sub2.l
    return EeaResult(l, r_l, rt_l1, lc(rt_l1) if rt_l1 else 1,
                     ((s_top, t_top), (s_bot, t_bot)))


# -- complexity ceilings -------------------------------------------------

def _ceil_log2(x):
    return (x - 1).bit_length() if x >= 1 else 0


def bound_feea(n0, h, normal=False, m_of=None):
    """Ceiling on FEEA field operations as an OpCounts.

    For n0 <= 2h this evaluates the tight partial-GCD bound (the
    normal-degree-sequence variant when `normal`); otherwise the general
    bound with its seven polynomial-product terms.  m_of(s) supplies the
    cost of multiplying two polynomials of degree < s; the default is the
    additive-FFT product ceiling at product size 2s-1.  Inversions are
    capped at 3h (interpolation twiddle inverses are precomputed).
    """
    from .counting import OpCounts
    from .complexity import bound_cantor

    if m_of is None:
        def m_of(s):
            if s <= 0:
                return OpCounts()
            return bound_cantor(max(2 * s - 1, 1))

    if h < 1:
        raise EuclidError("bound_feea needs h >= 1")
    out = OpCounts()
    if n0 <= 2 * h:
        L = _ceil_log2(h)
        M = m_of(h)
        if normal:
            out.mul = 10 * M.mul * L + _ceil_frac(55 * h + 12, 2) * L
            out.add = 10 * M.add * L + _ceil_frac(69 * h + 6, 2) * L
        else:
            out.mul = 17 * M.mul * L + (48 * h + 2) * L
            out.add = 17 * M.add * L + (51 * h + 2) * L
        out.inv = 3 * h
        return out
    L2 = _ceil_log2(h // 2) if h // 2 >= 1 else 0
    terms = [(34 * L2, m_of(h // 2)),
             (1, m_of(n0 // 2)),
             (4, m_of(-((h - 2 * n0) // 4))),   # ceil(n0/2 - h/4)
             (2, m_of((n0 - h) // 2)),
             (4, m_of(h)),
             (2, m_of(3 * h // 4)),
             (4, m_of(h // 2))]
    for coef, M in terms:
        out.mul += coef * M.mul
        out.add += coef * M.add
    out.mul += (48 * h + 4) * L2 + 9 * n0 + 22 * h
    out.add += (51 * h + 4) * L2 + 11 * n0 + 17 * h + 2
    out.inv = 3 * h
    return out


def _ceil_frac(a, b):
    return -(-a // b)


def feea_suppression_saving(h, m_of=None):
    """Cost skipped when the caller does not need s_(l+1):
    2 M(floor(h/2)) products plus 3h+1 mul and 4h+1 add."""
    from .counting import OpCounts
    from .complexity import bound_cantor
    if m_of is None:
        def m_of(s):
            return bound_cantor(max(2 * s - 1, 1)) if s > 0 else OpCounts()
    M = m_of(h // 2)
    return OpCounts(2 * M.mul + 3 * h + 1, 2 * M.add + 4 * h + 1, 0)
