"""Closed-form complexity evaluators, the hardware cost model, rate
threshold sweeps, fast-multiplication ceilings, and case-study reports.

Report cells are keyed "algorithm.step.metric"; reports carry the direct
closed-form column next to instrumented counts from actual decodes, plus
an overall cost N = 2m(N_mult + N_inv) + N_add in field-addition units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .counting import OpCounts


class ComplexityError(ValueError):
    pass


def overall_cost(counts, m):
    """Weighted total in field-addition units: 2m(mul + inv) + add."""
    if isinstance(counts, OpCounts):
        return counts.weighted(m)
    mul, add, inv = counts
    return 2 * m * (mul + inv) + add


def _ceil(x):
    return int(math.ceil(x)) if isinstance(x, float) else int(-(-x // 1)) \
        if isinstance(x, Fraction) else int(x)


def formula_direct(algorithm, n, k):
    """Per-step direct-implementation operation counts.

    Returns a dict step name -> OpCounts including a "total" entry.  The
    cells are the published worst-case formulas; decoders are tested to
    stay at or under them, with equality on the input-independent steps.
    """
    if (n - k) % 2:
        raise ComplexityError("n - k must be even")
    if not 0 < k < n:
        raise ComplexityError("need 0 < k < n")
    t = (n - k) // 2
    interp = OpCounts(n * (n - 1), n * (n - 1), 0)
    if algorithm == "gao":
        steps = {
            "interpolation": interp,
            "partial_gcd": OpCounts(4 * t * (n + 2), 2 * t * (n + 1), 0),
            "message_recovery": OpCounts((k + 2) * (k + 1) + 2 * k * t,
                                         k * (t + 2), 1),
        }
    elif algorithm == "gao-mod":
        if 2 * k > n:        # R > 1/2: worst case at d_v = t, d_u = t - 1
            rec = OpCounts(n * n + n * t - 2 * t * t + 5 * n - 2 * t + 5,
                           2 * n * t - 2 * t * t + 2 * n + 2, 1)
        else:                # maximized over real d_u = (n - 6)/4
            rec = OpCounts(
                _ceil(Fraction(9, 8) * n * n + Fraction(9, 2) * n
                      + Fraction(11, 2)),
                _ceil(Fraction(3, 8) * n * n + Fraction(3, 2) * n
                      + Fraction(3, 2)), 1)
        steps = {
            "interpolation": interp,
            "partial_gcd": OpCounts(4 * t * (2 * t + 2),
                                    2 * t * (2 * t + 1), 0),
            "message_recovery": rec,
        }
    elif algorithm == "syndrome":
        steps = {
            "syndromes": OpCounts(2 * t * (n - 1), 2 * t * (n - 1), 0),
            "key_equation": OpCounts(4 * t * (2 * t + 2),
                                     2 * t * (2 * t + 1), 0),
            "chien": OpCounts(n * (t - 1), n * t, 0),
            "forney": OpCounts(2 * t * t, t * (2 * t - 1), t),
        }
    else:
        raise ComplexityError(f"unknown algorithm {algorithm!r}")
    total = OpCounts()
    for c in steps.values():
        total += c
    steps["total"] = total
    return steps


FORMULA_STEPS = {
    "gao": ("interpolation", "partial_gcd", "message_recovery"),
    "gao-mod": ("interpolation", "partial_gcd", "message_recovery"),
    "syndrome": ("syndromes", "key_equation", "chien", "forney"),
}


# -- hardware model -------------------------------------------------------

@dataclass
class HwRow:
    unit: str
    multipliers: int
    adders: int
    inverters: int
    registers: int
    muxes: int
    latency_cycles: int
    cycles_per_word: int
    cpd: str = "T_mult + T_add + T_mux"


def hw_model(algorithm, n, k):
    """Unit rows and totals of the pipelined decoder architectures."""
    if (n - k) % 2:
        raise ComplexityError("n - k must be even")
    t = (n - k) // 2
    if t < 1:
        raise ComplexityError("t = 0 carries no correction capability")
    if algorithm == "syndrome":
        rows = [
            HwRow("syndrome_computation", 2 * t, 2 * t, 0, 10 * t, 2 * t,
                  n + 6 * t, 6 * t),
            HwRow("key_equation_solver", 2 * t + 1, 2 * t + 1, 0,
                  10 * t + 5, 14 * t + 7, 12 * t, 12 * t),
            HwRow("correction", 3 * t + 3, 3 * t + 1, 1, 12 * t + 10,
                  3 * t + 1, 3 * t, 3 * t),
        ]
        extra_registers = n + 21 * t        # Main Street delay line
    elif algorithm == "gao":
        rows = [
            HwRow("interpolation", n, n, 0, 5 * n, n, 4 * n, 3 * n),
            HwRow("partial_gcd", n + 1, n + 1, 0, 5 * n + 5, 7 * n + 7,
                  12 * t, 12 * t),
            HwRow("message_recovery", 2 * k + t + 3, k + t + 1, 1,
                  6 * k + 5 * t + 8, 7 * k + 7 * t + 7, 6 * k + 4, 6 * k),
        ]
        extra_registers = 0
    elif algorithm == "gao-mod":
        rows = [
            HwRow("interpolation", n, n, 0, 5 * n, n, 4 * n, 3 * n),
            HwRow("partial_gcd", 2 * t + 1, 2 * t + 1, 0, 10 * t + 5,
                  14 * t + 7, 12 * t, 12 * t),
            HwRow("message_recovery", 3 * n + 2, 3 * n + 1, 1, 7 * n + 7,
                  7 * n + 7, 6 * n + t - 2, 6 * n),
        ]
        extra_registers = 0
    else:
        raise ComplexityError(f"unknown algorithm {algorithm!r}")
    total = HwRow(
        "total",
        sum(r.multipliers for r in rows),
        sum(r.adders for r in rows),
        sum(r.inverters for r in rows),
        sum(r.registers for r in rows) + extra_registers,
        sum(r.muxes for r in rows),
        sum(r.latency_cycles for r in rows),
        max(r.cycles_per_word for r in rows),
    )
    return rows + [total]


# -- fast-multiplication ceilings ----------------------------------------

def bound_cantor(h):
    """Ceiling on additive-FFT product cost at product size h, evaluated
    at p = ceil(log2 h) with exact rationals rounded up."""
    if h < 1:
        raise ComplexityError("bound_cantor needs h >= 1")
    p = (h - 1).bit_length()
    mul = Fraction(3, 2) * h * p * p + Fraction(7, 2) * h * p - 2 * h + p + 2
    add = (Fraction(3, 2) * h * p * p + Fraction(21, 2) * h * p - 13 * h
           + p + 15)
    return OpCounts(int(-(-mul // 1)), int(-(-add // 1)), 2 * h)


def bound_cantor_loose(h):
    """The looser published product ceiling (multiplications/additions)."""
    if h < 1:
        raise ComplexityError("h >= 1")
    p = (h - 1).bit_length()
    mul = Fraction(3, 2) * h * p * p + Fraction(15, 2) * h * p + 8 * h
    add = Fraction(3, 2) * h * p * p + Fraction(29, 2) * h * p + 4 * h + 9
    return OpCounts(int(-(-mul // 1)), int(-(-add // 1)), 2 * h)


def bound_mpe_mpi(i, p):
    """Addition ceilings (S_E(i), S_I(i)) of the evaluation and
    interpolation recursions at level i within a dimension-p domain."""
    if not 1 <= i <= p:
        raise ComplexityError("need 1 <= i <= p")
    se = i * (i + 3) * (1 << i) // 4 + (p - 3) * ((1 << i) - 1) + i
    si = i * (i + 5) * (1 << i) // 4 + (p - 3) * ((1 << i) - 1) + i
    return se, si


_MEASURED_MUL = {}


def measure_mul_cost(field, ctx, s, threshold=16, pure_cantor=False):
    """Measured cost of multiplying two random dense polynomials of
    degree < s (memoized per field/size).

    With pure_cantor the additive-FFT pipeline is used whenever the
    product fits the evaluation domain, even below the dispatcher
    threshold; this is the M(.) instantiation the fast-division and
    fast-EEA ceilings are stated against.  Products too large for the
    domain fall back to the dispatcher either way.
    """
    from .cantor import fast_mul, cantor_mul
    import random
    if s <= 0:
        return OpCounts()
    key = (field.m, field.modulus, s, threshold, pure_cantor)
    hit = _MEASURED_MUL.get(key)
    if hit is not None:
        return hit
    rng = random.Random(0xC0FFEE + s)
    q = field.order
    a = [rng.randrange(q) for _ in range(s - 1)] + [rng.randrange(1, q)]
    b = [rng.randrange(q) for _ in range(s - 1)] + [rng.randrange(1, q)]
    ctr = OpCounts()
    F = field.counted(ctr)
    if pure_cantor and ctx is not None and 2 * s - 1 <= 1 << ctx.p:
        cantor_mul(F, ctx, a, b)
    else:
        fast_mul(F, ctx, a, b, threshold=threshold)
    _MEASURED_MUL[key] = ctr
    return ctr


# -- rate-threshold sweeps -------------------------------------------------

def _bracket(fn, grid):
    """First sign change of fn over the grid; None when the sign is
    constant.  Returns (lo, hi) with fn(lo)*fn(hi) <= 0."""
    prev_r = None
    prev_v = None
    for r in grid:
        v = fn(r)
        if prev_v is not None and (v == 0 or (prev_v < 0) != (v < 0)):
            return (prev_r, r)
        if v != 0:
            prev_r, prev_v = r, v
        else:
            prev_r, prev_v = r, v if prev_v is None else prev_v
    return None


@dataclass
class ThresholdRow:
    name: str
    stated: float
    bracket: tuple | None
    holds: bool
    detail: str = ""


def rate_thresholds(n=200000, dr=0.01):
    """Sweep code-rate comparisons and bracket each crossover.

    Direct comparisons evaluate the full closed-form multiplication
    counts at a fixed large n.  Fast comparisons evaluate the difference
    of the second-highest-degree terms (coefficient of n log^2 n) since
    the leading partial-GCD terms agree across the algorithms.  Hardware
    comparisons evaluate the architecture-table cells.
    """
    if n % 200:
        raise ComplexityError("sweep n must be a multiple of 200")
    grid = [round(i * dr, 10) for i in range(1, int(1 / dr))]

    def totals(alg, r):
        k = int(round(r * n))
        if (n - k) % 2:
            k += 1
        return formula_direct(alg, n, k)["total"].mul

    rows = []

    def add_row(name, stated, fn, expect_change=True, detail=""):
        br = _bracket(fn, grid)
        if expect_change:
            ok = br is not None and br[0] - dr / 2 <= stated <= br[1] + dr / 2
        else:
            ok = br is None
        rows.append(ThresholdRow(name, stated, br, ok, detail))

    add_row("direct.gao_vs_syndrome", 1 / 5,
            lambda r: totals("gao", r) - totals("syndrome", r),
            detail="direct multiplication totals")
    add_row("direct.gao_vs_gao_mod", 2 / 3,
            lambda r: totals("gao", r) - totals("gao-mod", r),
            detail="direct multiplication totals")
    add_row("fast.gao_vs_gao_mod", 13 / 25,
            lambda r: 0.75 * (25 * r - 13),
            detail="n log^2 n coefficient difference")
    add_row("fast.syndrome_vs_gao", 1 / 31,
            lambda r: 0.75 * (1 - 31 * r),
            detail="n log^2 n coefficient difference")
    add_row("fast.syndrome_vs_gao_mod", float("nan"),
            lambda r: -4.5 * (2 + r), expect_change=False,
            detail="negative for every rate")

    def hw_cell(alg, r, attr, row_name="total"):
        k = int(round(r * n))
        if (n - k) % 2:
            k += 1
        for row in hw_model(alg, n, k):
            if row.unit == row_name:
                return getattr(row, attr)
        raise KeyError(row_name)

    add_row("hw.registers.syndrome_vs_gao_mod", 21 / 43,
            lambda r: hw_cell("syndrome", r, "registers")
            - hw_cell("gao-mod", r, "registers"))
    add_row("hw.registers.gao_vs_gao_mod", 9 / 17,
            lambda r: hw_cell("gao", r, "registers")
            - hw_cell("gao-mod", r, "registers"))
    add_row("hw.latency.syndrome_vs_gao", 1 / 7,
            lambda r: hw_cell("syndrome", r, "latency_cycles")
            - hw_cell("gao", r, "latency_cycles"))
    return rows


# -- case study ------------------------------------------------------------

CASE_STUDY_CODES = ((255, 223, 8), (511, 447, 9))

# Published direct-implementation case-study cells (mul, add, inv, overall)
# for cross-checking; the lone flagged typo is handled via footnote.
TABLE_DIRECT_TOTALS = {
    (255, 223, "gao"): (138754, 76976, 1, 2297056),
    (255, 223, "gao-mod"): (136787, 73986, 1, 2262594),
    (255, 223, "syndrome"): (14641, 13760, 16, 248272),
    (511, 447, "gao"): (556034, 308576, 1, 10317206),
    (511, 447, "gao-mod"): (546979, 296450, 1, 10142090),
    (511, 447, "syndrome"): (58977, 55168, 32, 1117330),
}

TYPO_NOTE = ("the published complexity summary prints the length-255 "
             "algorithm-2 interpolation overall as 11101090; the weighting "
             "2m(mul+inv)+add of its own cell gives 1101090, so the "
             "computed value is reported and the discrepancy flagged")


@dataclass
class ReportCell:
    algorithm: str
    step: str
    formula: OpCounts | None
    measured_direct: OpCounts | None
    measured_fast: OpCounts | None


@dataclass
class CaseStudyReport:
    n: int
    k: int
    m: int
    cells: list
    footnotes: list
    notes: list

    def row_value(self, key, column="formula"):
        alg, step, metric = key.rsplit(".", 2)
        for c in self.cells:
            if c.algorithm == alg and c.step == step:
                counts = getattr(c, "formula" if column == "formula"
                                 else column)
                if counts is None:
                    return None
                if metric == "overall":
                    return counts.weighted(self.m)
                return getattr(counts, metric)
        raise KeyError(key)


def case_study_report(n, k, m, seed=2024, config=None, modulus="default"):
    """Formula vs measured (direct worst-case word, fast mode) per step.

    Fast columns are measured with this build's additive-FFT/Cantor
    pipeline ("measured (Cantor)") and are not comparable to published
    fast cells that assume a different FFT; where the Cantor domain does
    not cover the field (odd m) the fallbacks are listed in the notes.
    """
    from .gf2m import Field
    from . import rs as rsmod

    field = Field(m, modulus)
    code = rsmod.rs_new(field, n, k, "cyclic")
    cfg = config or rsmod.CASE_STUDY_CONFIG
    _, _, received, _ = rsmod.worst_case_word(code, seed)

    cells = []
    notes = []
    for alg in ("gao", "gao-mod", "syndrome"):
        formula = formula_direct(alg, n, k)
        res_d = rsmod.rs_decode(code, received, alg, impl="direct")
        res_f = rsmod.rs_decode(code, received, alg, impl="fast", config=cfg)
        if not (res_d.ok and res_f.ok):
            raise ComplexityError(f"case-study decode failed for {alg}")
        notes.extend(f"{alg}/fast: {x}" for x in res_f.notes)
        step_names = list(FORMULA_STEPS[alg])
        extra = [s for s in (set(res_d.steps) | set(res_f.steps))
                 if s not in step_names]
        for s in step_names + sorted(extra):
            cells.append(ReportCell(
                alg, s, formula.get(s),
                res_d.steps.get(s), res_f.steps.get(s)))
        comparable = lambda steps: sum(
            (steps[s] for s in step_names if s in steps), OpCounts())
        cells.append(ReportCell(alg, "total", formula["total"],
                                comparable(res_d.steps),
                                comparable(res_f.steps)))
    footnotes = [
        TYPO_NOTE,
        "fast columns are measured with the additive-FFT (Cantor) "
        "pipeline of this build and are not comparable to fast cells "
        "derived from cyclotomic-FFT operation counts",
        "direct totals sum the tabulated steps; bookkeeping steps "
        "(re-encode, message extraction, second-cofactor replay) are "
        "reported separately",
        "worst-case degree sequences are assumed for the published fast "
        "partial-GCD cells; measured columns reflect the actual sequence "
        "of the instrumented word",
    ]
    return CaseStudyReport(n, k, m, cells, footnotes, notes)
