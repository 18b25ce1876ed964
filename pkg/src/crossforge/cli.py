"""Command-line front end.

Subcommands: bounds, verify, count, congestion, render.  Exit codes:
0 success / all-match, 1 verification mismatches found, 2 usage error.
Identical invocations produce byte-identical output; CROSSFORGE_THREADS
caps the process pool used to fan verification sweeps out over lemmas.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from crossforge import closedforms, lowerbounds
from crossforge.closedforms import (QUICK_GRIDS, VerificationReport,
                                    discrepancy_lines, report_to_csv,
                                    report_to_json, verify_sweep)
from crossforge.conformance import DEFAULT, Readings

BRUTE_FORCE_CAP = 15   # lemmas backed by O(m^4) counting
FORMULA_CAP = 40       # closed-form-only sweeps
RENDER_CAP = 12

_BRUTE_LEMMAS = {"3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "3.7", "3.8",
                 "3.9", "3.10", "3.11", "3.12"}


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'4..6' or '5' -> list of ints."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError
            return list(range(lo_i, hi_i + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None


def _readings(args) -> Readings:
    return Readings(
        odd_s_phase=args.odd_s_phase.replace("-", "_"),
        even_s_phase=args.even_s_phase.replace("-", "_"),
        path_winding=args.winding.replace("-", "_"),
    )


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_frac(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# ---------------------------------------------------------------------------
# bounds

def cmd_bounds(args) -> int:
    ms = parse_range(args.m)
    ns = parse_range(args.n)
    if not args.unsafe_large and (max(ms) > FORMULA_CAP or max(ns) > 25):
        raise UsageError(
            f"m up to {FORMULA_CAP} and n up to 25 without --unsafe-large")
    try:
        rows = lowerbounds.bounds_table(args.family, ms, ns)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        lines = ["m,n,family,lower_raw,lower_clamped,upper,ratio"]
        for r in rows:
            ratio = ("" if r.upper == 0
                     else f"{float(r.lower_clamped / r.upper):.6f}")
            lines.append(f"{r.m},{r.n},{r.family},{_fmt_frac(r.lower_raw)},"
                         f"{_fmt_frac(r.lower_clamped)},{_fmt_frac(r.upper)},{ratio}")
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "json":
        import json
        payload = {"schema": 1, "rows": [
            {"m": r.m, "n": r.n, "family": r.family,
             "lower_raw": _fmt_frac(r.lower_raw),
             "lower_clamped": _fmt_frac(r.lower_clamped),
             "upper": _fmt_frac(r.upper),
             "exact_drawing": None if r.exact_drawing is None
             else _fmt_frac(r.exact_drawing)}
            for r in rows]}
        _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.output)
    else:
        header = (f"{'m':>3} {'n':>3} {'family':<6} {'lower_raw':>16} "
                  f"{'lower_clamped':>14} {'upper':>16} {'exact':>12}")
        lines = [header, "-" * len(header)]
        for r in rows:
            exact = "" if r.exact_drawing is None else _fmt_frac(r.exact_drawing)
            lines.append(f"{r.m:>3} {r.n:>3} {r.family:<6} "
                         f"{_fmt_frac(r.lower_raw):>16} "
                         f"{_fmt_frac(r.lower_clamped):>14} "
                         f"{_fmt_frac(r.upper):>16} {exact:>12}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


# ---------------------------------------------------------------------------
# verify

def _sweep_job(item):
    lemma, ms, ns, readings = item
    return verify_sweep(lemma, ms, ns, readings)


def _run_sweeps(items) -> list[VerificationReport]:
    threads = int(os.environ.get("CROSSFORGE_THREADS", "1") or 1)
    threads = max(1, min(threads, os.cpu_count() or 1, len(items)))
    if threads == 1 or len(items) <= 1:
        return [_sweep_job(it) for it in items]
    import multiprocessing
    with multiprocessing.Pool(threads) as pool:
        return pool.map(_sweep_job, items)


def cmd_verify(args) -> int:
    readings = _readings(args)
    if args.lemma == "all":
        lemmas = list(QUICK_GRIDS)
    elif args.lemma in QUICK_GRIDS:
        lemmas = [args.lemma]
    else:
        raise UsageError(f"unknown lemma {args.lemma!r}; "
                         f"choose from {', '.join(QUICK_GRIDS)} or 'all'")
    items = []
    for lemma in lemmas:
        qms, qns = QUICK_GRIDS[lemma]
        ms = qms if (args.quick or not args.m) else parse_range(args.m)
        ns = qns if (args.quick or not args.n) else parse_range(args.n)
        cap = BRUTE_FORCE_CAP if lemma in _BRUTE_LEMMAS else FORMULA_CAP
        if not args.unsafe_large and max(ms) > cap:
            raise UsageError(f"lemma {lemma} sweeps cap at m <= {cap} "
                             f"without --unsafe-large")
        items.append((lemma, ms, ns, readings))
    reports = _run_sweeps(items)
    if args.format == "csv":
        _emit(report_to_csv(reports), args.output)
    elif args.format == "json":
        _emit(report_to_json(reports), args.output)
    else:
        lines = []
        for rep in reports:
            n_mis = len(rep.mismatches)
            lines.append(f"lemma {rep.lemma:<6} [{rep.grid}] rows={len(rep.rows)} "
                         f"mismatches={n_mis}")
        total_mis = sum(len(r.mismatches) for r in reports)
        lines.append(f"total mismatches: {total_mis}")
        text = "\n".join(lines) + "\n"
        mism = discrepancy_lines(reports)
        if mism:
            text += mism
        _emit(text, args.output)
    return 0 if all(r.all_match for r in reports) else 1


# ---------------------------------------------------------------------------
# count / congestion / render

def cmd_count(args) -> int:
    m = int(args.m)
    n = int(args.n)
    if args.family == "cycle":
        if m <= 3:
            val = closedforms.small_case_values(m, n, "cycle")
            out = _fmt_frac(val.value) + ("" if val.is_exact else " (upper bound)")
        else:
            out = _fmt_frac(closedforms.nu_cycle_drawing(m, n).value)
    else:
        if m <= 3:
            out = "0"
        else:
            out = str(closedforms.nu_path_drawing(m, n).total)
    _emit(out + "\n", args.output)
    return 0


def cmd_congestion(args) -> int:
    m = int(args.m)
    if not args.unsafe_large and m > 24:
        raise UsageError("congestion builds cap at m <= 24 without --unsafe-large")
    build = (lowerbounds.build_embedding_kmm if args.target == "kmm"
             else lowerbounds.build_embedding_km2m)
    rep = lowerbounds.congestion(build(m))
    _emit(f"max={rep.max} uniform={'true' if rep.uniform else 'false'}\n",
          args.output)
    return 0


def cmd_render(args) -> int:
    from crossforge import scene as scene_mod
    from crossforge.svg import emit_svg
    if not args.output:
        raise UsageError("render needs -o OUTPUT.svg")
    readings = _readings(args)
    m = int(args.m)
    n = int(args.n)
    if not args.unsafe_large and (m > RENDER_CAP or n > RENDER_CAP):
        raise UsageError(f"render caps at m, n <= {RENDER_CAP} without --unsafe-large")
    if args.family == "cycle":
        if m <= 2:
            sc = scene_mod.planar_small_cases(m, "cycle", n)
        elif m == 3:
            raise UsageError("no stored drawing for K3 x Cn (m = 3 values are cited)")
        else:
            sc = scene_mod.realize_cycle_drawing(m, n, readings)
    else:
        sc = scene_mod.realize_path_drawing(m, n, readings)
    emit_svg(sc, args.output)
    if args.scene_json:
        with open(args.scene_json, "w", encoding="utf-8") as fh:
            fh.write(scene_mod.scene_to_json(sc))
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="crossforge",
        description="Exact verification of cylindrical drawings and "
                    "crossing-number bounds for K_m x P_n and K_m x C_n.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_switches(p):
        p.add_argument("--odd-s-phase", choices=["f7-first", "f8-first"],
                       default=DEFAULT.odd_s_phase.replace("_", "-"))
        p.add_argument("--even-s-phase", choices=["f5-first", "f4-first"],
                       default=DEFAULT.even_s_phase.replace("_", "-"))
        p.add_argument("--winding",
                       choices=["uniform", "shortest-pos", "shortest-parity"],
                       default=DEFAULT.path_winding.replace("_", "-"))

    def add_common(p, need_family=True):
        if need_family:
            p.add_argument("--family", choices=["path", "cycle"], required=True)
        p.add_argument("--format", choices=["table", "csv", "json"],
                       default="table")
        p.add_argument("-o", "--output", default=None)
        p.add_argument("--unsafe-large", action="store_true")
        add_switches(p)

    p = sub.add_parser("bounds", help="lower/upper bound table over a grid")
    p.add_argument("-m", required=True, help="m or lo..hi")
    p.add_argument("-n", required=True, help="n or lo..hi")
    add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="closed forms vs counting oracles")
    p.add_argument("--lemma", required=True,
                   help="a lemma id (e.g. 3.12) or 'all'")
    p.add_argument("-m", default=None, help="m or lo..hi")
    p.add_argument("-n", default=None, help="n or lo..hi")
    p.add_argument("--quick", action="store_true",
                   help="use the pinned desk-scale grid")
    add_common(p, need_family=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="exact drawing crossing count")
    p.add_argument("-m", required=True)
    p.add_argument("-n", required=True)
    add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("congestion", help="embedding congestion report")
    p.add_argument("-m", required=True)
    p.add_argument("--target", choices=["kmm", "km2m"], default="kmm")
    add_common(p, need_family=False)
    p.set_defaults(func=cmd_congestion)

    p = sub.add_parser("render", help="emit an SVG drawing")
    p.add_argument("-m", required=True)
    p.add_argument("-n", required=True)
    p.add_argument("--scene-json", default=None,
                   help="also dump the scene as JSON")
    add_common(p)
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
