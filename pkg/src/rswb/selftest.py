"""Exhaustive desk-scale sweeps: every message of RS(7,3) over GF(8)
against every error pattern of weight <= t and every erasure/error combo
with 2f + nu <= 2t.

These sweeps back both the acceptance suite and the `selftest` CLI
subcommand.  They return a list of failure descriptions (empty = pass)
so callers can decide between asserting and exit codes.
"""

from __future__ import annotations

import itertools

from .gf2m import Field
from .polyring import norm
from .rs import rs_new, rs_encode, rs_decode, rs_decode_erasures

DECODERS = ("gao", "gao-mod", "syndrome")
IMPLS = ("direct", "fast")


def _messages(q, k):
    out = []
    for tup in itertools.product(range(q), repeat=k):
        out.append(norm(list(tup)))
    return out


def _error_patterns(q, n, max_weight):
    """All dicts position -> nonzero magnitude with <= max_weight entries."""
    pats = [{}]
    for w in range(1, max_weight + 1):
        for pos in itertools.combinations(range(n), w):
            for mags in itertools.product(range(1, q), repeat=w):
                pats.append(dict(zip(pos, mags)))
    return pats


def build_code73():
    return rs_new(Field(3), 7, 3, "cyclic")


def sweep_errors(code=None, decoders=DECODERS, impls=IMPLS, progress=None,
                 message_limit=None):
    """Decode every message x every error pattern of weight <= t under
    every decoder/impl combination; checks message, codeword and the
    recovered error map."""
    code = code or build_code73()
    q = code.field.order
    msgs = _messages(q, code.k)
    if message_limit:
        msgs = msgs[:message_limit]
    pats = _error_patterns(q, code.n, code.t)
    failures = []
    checked = 0
    for mi, msg in enumerate(msgs):
        cw = rs_encode(code, msg)
        for pat in pats:
            rec = list(cw)
            for p, mag in pat.items():
                rec[p] ^= mag
            for dec in decoders:
                for impl in impls:
                    checked += 1
                    r = rs_decode(code, rec, dec, impl=impl, count=False)
                    if not (r.ok and r.message == msg and r.codeword == cw
                            and r.errors == pat):
                        failures.append(
                            f"{dec}/{impl}: msg={msg} pattern={pat} -> "
                            f"{r.status} ({r.reason or r.message})")
                        if len(failures) > 20:
                            return failures, checked
        if progress and (mi + 1) % 32 == 0:
            progress(mi + 1, len(msgs), checked)
    return failures, checked


def _erasure_combos(q, n, two_t):
    """(erasure positions, error dict) with 2f + nu <= 2t, nu >= 1."""
    combos = []
    for nu in range(1, two_t + 1):
        fmax = (two_t - nu) // 2
        for eras in itertools.combinations(range(n), nu):
            combos.append((eras, {}))
            if fmax >= 1:
                free = [p for p in range(n) if p not in eras]
                for w in range(1, fmax + 1):
                    for pos in itertools.combinations(free, w):
                        for mags in itertools.product(range(1, q), repeat=w):
                            combos.append((eras, dict(zip(pos, mags))))
    return combos


def sweep_erasures(code=None, decoders=DECODERS, impls=("direct",),
                   fast_message_stride=8, progress=None, message_limit=None):
    """Decode every message x every erasure/error combo with 2f+nu <= 2t.

    Direct mode covers every message; fast mode re-checks every combo on
    every `fast_message_stride`-th message (the fast path shares all
    combo-dependent logic, so the stride only thins identical coverage).
    """
    code = code or build_code73()
    q = code.field.order
    msgs = _messages(q, code.k)
    if message_limit:
        msgs = msgs[:message_limit]
    combos = _erasure_combos(q, code.n, 2 * code.t)
    failures = []
    checked = 0
    for mi, msg in enumerate(msgs):
        cw = rs_encode(code, msg)
        modes = list(impls)
        if "fast" not in modes and mi % fast_message_stride == 0:
            modes = list(impls) + ["fast"]
        for eras, errs in combos:
            rec = list(cw)
            for p in eras:
                rec[p] = 0
            for p, mag in errs.items():
                rec[p] ^= mag
            for dec in decoders:
                for impl in modes:
                    checked += 1
                    r = rs_decode_erasures(code, rec, list(eras), dec,
                                           impl=impl, count=False)
                    if not (r.ok and r.message == msg and r.codeword == cw):
                        failures.append(
                            f"{dec}/{impl}: msg={msg} erasures={eras} "
                            f"errors={errs} -> {r.status} "
                            f"({r.reason or r.message})")
                        if len(failures) > 20:
                            return failures, checked
        if progress and (mi + 1) % 32 == 0:
            progress(mi + 1, len(msgs), checked)
    return failures, checked


def sweep_beyond_capacity(code=None, progress=None):
    """Classify 3-error patterns on a fixed message set: each decode must
    either fail or miscorrect to a valid codeword within distance t of the
    received word; a non-codeword 'ok' output is a defect."""
    code = code or build_code73()
    q = code.field.order
    failures = []
    checked = 0
    msgs = [[], [1], [3, 5], [2, 0, 7], [1, 1, 1]]
    pats = []
    for pos in itertools.combinations(range(code.n), 3):
        pats.append(dict(zip(pos, (1, 1, 1))))
        pats.append(dict(zip(pos, (3, 5, 7))))
    outcomes = {"failure": 0, "miscorrection": 0}
    for msg in msgs:
        cw = rs_encode(code, msg)
        for pat in pats:
            rec = list(cw)
            for p, mag in pat.items():
                rec[p] ^= mag
            for dec in DECODERS:
                checked += 1
                r = rs_decode(code, rec, dec, impl="direct", count=False)
                if not r.ok:
                    outcomes["failure"] += 1
                    continue
                outcomes["miscorrection"] += 1
                reenc = rs_encode(code, r.message)
                if reenc != r.codeword:
                    failures.append(f"{dec}: non-codeword output for "
                                    f"msg={msg} pattern={pat}")
                dist = sum(1 for a, b in zip(r.codeword, rec) if a != b)
                if dist > code.t:
                    failures.append(f"{dec}: miscorrection at distance "
                                    f"{dist} > t for msg={msg} pattern={pat}")
    return failures, checked, outcomes


def run_selftest(progress=None, message_limit=None):
    """Full desk-scale verification; returns (failures, checks)."""
    code = build_code73()
    all_fail = []
    total = 0
    f, c = sweep_errors(code, progress=progress, message_limit=message_limit)
    all_fail += f
    total += c
    f, c = sweep_erasures(code, progress=progress,
                          message_limit=message_limit)
    all_fail += f
    total += c
    f, c, _ = sweep_beyond_capacity(code)
    all_fail += f
    total += c
    return all_fail, total
