"""Command-line front end: encode, corrupt, decode, bench, tables,
hwmodel, thresholds, selftest.

Word files hold one word per line as whitespace-separated lowercase hex
symbols.  Decode results stream as JSON.  Exit codes: 0 ok, 1 decoding
failure, 2 usage error, 3 internal invariant violation.  Identical argv
and seed give byte-identical stdout; wall-clock timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .counting import OpCounts
from .gf2m import Field, FieldError, word_to_text, word_from_text
from .polyring import norm
from . import rs as rsmod
from .rs import RsError, ImplConfig, DEFAULT_CONFIG, CASE_STUDY_CONFIG
from . import complexity as cx
from . import report as rp
from .selftest import run_selftest

EXIT_OK = 0
EXIT_DECODE_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


def _add_code_args(p):
    p.add_argument("--m", type=int, required=True, help="extension degree")
    p.add_argument("--modulus", default="default",
                   help="field modulus as hex (default: pinned per-m table)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--points", default="cyclic",
                   help="'cyclic' or comma-separated hex evaluation points")


def _build_code(args):
    modulus = args.modulus
    if modulus != "default":
        modulus = int(modulus, 16)
    try:
        field = Field(args.m, modulus)
        if args.points == "cyclic":
            pts = "cyclic"
        else:
            pts = [int(x, 16) for x in args.points.split(",")]
        return rsmod.rs_new(field, args.n, args.k, pts)
    except (FieldError, RsError, ValueError) as e:
        raise UsageError(str(e)) from None


def _read_word(path):
    data = sys.stdin.read() if path == "-" else open(path).read()
    lines = [ln for ln in data.splitlines() if ln.strip()]
    if not lines:
        raise UsageError(f"no word found in {path}")
    return word_from_text(lines[0])


def _write_text(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _impl_config(args):
    return ImplConfig(fast_gcd=args.fast_gcd,
                      fast_msg_division=args.fast_msg_division)


def _add_impl_args(p):
    p.add_argument("--decoder", choices=("gao", "gao-mod", "syndrome"),
                   default="gao")
    p.add_argument("--impl", choices=("direct", "fast"), default="direct")
    p.add_argument("--fast-gcd", choices=("feea", "classical"),
                   default=DEFAULT_CONFIG.fast_gcd)
    p.add_argument("--fast-msg-division", choices=("newton", "long"),
                   default=DEFAULT_CONFIG.fast_msg_division)


def cmd_encode(args):
    code = _build_code(args)
    msg = _read_word(args.infile)
    norm(msg)
    if msg and len(msg) > code.k:
        raise UsageError(f"message has degree >= k={code.k}")
    cw = rsmod.rs_encode(code, msg)
    _write_text(args.out, word_to_text(cw) + "\n")
    return EXIT_OK


def cmd_corrupt(args):
    code = _build_code(args)
    cw = _read_word(args.infile)
    if len(cw) != code.n:
        raise UsageError(f"codeword length {len(cw)} != n={code.n}")
    received, error_map, erasures = rsmod.corrupt_word(
        code, cw, args.errors, args.erasures, seed=args.seed)
    _write_text(args.out, word_to_text(received) + "\n")
    truth = {
        "original": word_to_text(cw),
        "errors": {str(p): format(m, "x") for p, m in sorted(
            error_map.items())},
        "erasures": erasures,
        "seed": args.seed,
    }
    with open(args.truth, "w") as fh:
        json.dump(truth, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return EXIT_OK


def _result_json(res):
    out = {
        "status": res.status,
        "message": word_to_text(res.message) if res.message is not None
        else None,
        "codeword": word_to_text(res.codeword) if res.codeword is not None
        else None,
        "errors": {str(p): format(m, "x") for p, m in sorted(
            res.errors.items())},
        "counts": dict(zip(("mul", "add", "inv"), res.counts.as_tuple())),
        "steps": {name: dict(zip(("mul", "add", "inv"), c.as_tuple()))
                  for name, c in res.steps.items()},
        "notes": res.notes,
    }
    if res.reason:
        out["reason"] = res.reason
    return out


def cmd_decode(args):
    code = _build_code(args)
    received = _read_word(args.infile)
    if len(received) != code.n:
        raise UsageError(f"received length {len(received)} != n={code.n}")
    cfg = _impl_config(args)
    erasures = []
    truth = None
    if args.truth:
        with open(args.truth) as fh:
            truth = json.load(fh)
        erasures = list(truth.get("erasures", []))
    if args.erasures:
        erasures = [int(x) for x in args.erasures.split(",")]
    try:
        if erasures:
            res = rsmod.rs_decode_erasures(code, received, erasures,
                                           args.decoder, impl=args.impl,
                                           config=cfg)
        else:
            res = rsmod.rs_decode(code, received, args.decoder,
                                  impl=args.impl, config=cfg)
    except RsError as e:
        raise UsageError(str(e)) from None
    out = _result_json(res)
    if args.verify:
        if truth is None:
            raise UsageError("--verify needs --truth sidecar")
        want = word_from_text(truth["original"])
        out["verified"] = bool(res.ok and res.codeword == want)
    sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if res.ok else EXIT_DECODE_FAILURE


def _bench_trial(code, decoder, impl, cfg, n_errors, seed):
    import random
    rng = random.Random(seed)
    q = code.field.order
    msg = norm([rng.randrange(q) for _ in range(code.k)])
    cw = rsmod.rs_encode(code, msg)
    received, _, _ = rsmod.corrupt_word(code, cw, n_errors, 0, seed=seed)
    res = rsmod.rs_decode(code, received, decoder, impl=impl, config=cfg)
    return res.ok and res.message == msg, res.counts


def cmd_bench(args):
    code = _build_code(args)
    cfg = _impl_config(args)
    n_err = code.t if args.errors is None else args.errors
    seeds = [args.seed + i for i in range(args.trials)]
    t0 = time.time()
    threads = int(os.environ.get("RSWB_THREADS", "1") or "1")
    results = []
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(
                lambda s: _bench_trial(code, args.decoder, args.impl, cfg,
                                       n_err, s), seeds))
    else:
        results = [_bench_trial(code, args.decoder, args.impl, cfg, n_err, s)
                   for s in seeds]
    wall = time.time() - t0
    total = OpCounts()
    ok = 0
    for good, counts in results:
        ok += bool(good)
        total += counts
    out = {
        "code": {"n": code.n, "k": code.k, "m": code.field.m},
        "decoder": args.decoder,
        "impl": args.impl,
        "trials": args.trials,
        "errors_per_word": n_err,
        "decoded_ok": ok,
        "counts_total": dict(zip(("mul", "add", "inv"), total.as_tuple())),
        "overall_total": total.weighted(code.field.m),
    }
    sys.stdout.write(json.dumps(out, indent=2, sort_keys=True) + "\n")
    sys.stderr.write(f"wall time: {wall:.3f}s over {args.trials} trials "
                     f"({threads} threads)\n")
    return EXIT_OK if ok == args.trials else EXIT_DECODE_FAILURE


def _emit(args, rows, fields, stem, figure=None):
    text = rp.render(rows, fields, args.format)
    if args.outdir:
        os.makedirs(args.outdir, exist_ok=True)
        path = os.path.join(args.outdir, f"{stem}.{args.format}")
        with open(path, "w") as fh:
            fh.write(text)
        sys.stdout.write(f"wrote {path}\n")
        if figure is not None:
            fig_path = os.path.join(args.outdir, f"{stem}.png")
            figure(fig_path)
            sys.stdout.write(f"wrote {fig_path}\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_tables(args):
    rep = cx.case_study_report(args.n, args.k, args.m, seed=args.seed,
                               config=CASE_STUDY_CONFIG)
    rows = rp.case_study_rows(rep)
    rc = _emit(args, rows, rp.CASE_STUDY_FIELDS, f"tables_{args.n}_{args.k}",
               figure=lambda p: rp.render_case_study_figure(rep, p))
    if args.outdir:
        notes_path = os.path.join(args.outdir,
                                  f"tables_{args.n}_{args.k}.notes.txt")
        with open(notes_path, "w") as fh:
            for line in rep.footnotes + rep.notes:
                fh.write(f"- {line}\n")
        sys.stdout.write(f"wrote {notes_path}\n")
    return rc


def cmd_hwmodel(args):
    all_rows = {}
    rows_flat = []
    for alg in ("gao", "gao-mod", "syndrome"):
        hw = cx.hw_model(alg, args.n, args.k)
        all_rows[alg] = hw
        for r in rp.hw_rows(hw):
            r = dict(r)
            r["algorithm"] = alg
            rows_flat.append(r)
    fields = ("algorithm",) + rp.HW_FIELDS
    return _emit(args, rows_flat, fields, f"hwmodel_{args.n}_{args.k}",
                 figure=lambda p: rp.render_hw_figure(all_rows, args.n,
                                                      args.k, p))


def cmd_thresholds(args):
    rows = cx.rate_thresholds()
    return _emit(args, rp.threshold_rows(rows), rp.THRESHOLD_FIELDS,
                 "thresholds",
                 figure=lambda p: rp.render_threshold_figure(rows, p))


def cmd_selftest(args):
    def progress(done, total, checked):
        sys.stderr.write(f"  {done}/{total} messages, {checked} checks\n")
        sys.stderr.flush()

    failures, checked = run_selftest(
        progress=progress if args.verbose else None,
        message_limit=args.limit)
    sys.stdout.write(f"selftest: {checked} checks, "
                     f"{len(failures)} failures\n")
    for f in failures[:20]:
        sys.stdout.write(f"  FAIL {f}\n")
    return EXIT_OK if not failures else EXIT_INTERNAL


def build_parser():
    ap = argparse.ArgumentParser(
        prog="rswb",
        description="Reed-Solomon decoding workbench over GF(2^m)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("encode", help="message file -> codeword")
    _add_code_args(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(fn=cmd_encode)

    p = sub.add_parser("corrupt", help="inject errors/erasures + sidecar")
    _add_code_args(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--truth", required=True,
                   help="ground-truth sidecar JSON path")
    p.add_argument("--errors", type=int, default=0)
    p.add_argument("--erasures", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_corrupt)

    p = sub.add_parser("decode", help="received word -> JSON result")
    _add_code_args(p)
    _add_impl_args(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--erasures", default="",
                   help="comma-separated erased positions")
    p.add_argument("--truth", default="",
                   help="sidecar from corrupt (supplies erasures)")
    p.add_argument("--verify", action="store_true",
                   help="check the result against the sidecar")
    p.set_defaults(fn=cmd_decode)

    p = sub.add_parser("bench", help="aggregate counts over random trials")
    _add_code_args(p)
    _add_impl_args(p)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--errors", type=int, default=None,
                   help="errors per word (default t)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("tables", help="formula vs measured step tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--format", choices=("csv", "md", "json"), default="csv")
    p.add_argument("--outdir", default="")
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("hwmodel", help="decoder architecture cost tables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("csv", "md", "json"), default="csv")
    p.add_argument("--outdir", default="")
    p.set_defaults(fn=cmd_hwmodel)

    p = sub.add_parser("thresholds", help="rate-threshold sweep report")
    p.add_argument("--format", choices=("csv", "md", "json"), default="csv")
    p.add_argument("--outdir", default="")
    p.set_defaults(fn=cmd_thresholds)

    p = sub.add_parser("selftest", help="exhaustive RS(7,3) sweeps")
    p.add_argument("--limit", type=int, default=None,
                   help="cap the message count (debugging aid)")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except (RsError, FieldError, ValueError, OSError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except AssertionError as e:
        sys.stderr.write(f"internal invariant violation: {e}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
