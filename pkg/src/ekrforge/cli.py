"""Command-line surface: construct, analyze, verify, search.

Subcommands: construct | tau | covers | saturate | trace | classify |
verify | oracle | lex.  Exit codes: 0 on success / all certificates
passing, 1 when any certificate fails, 2 on usage or input errors.

Determinism: with a fixed invocation (including --seed) the JSON output
is byte-identical across runs; wall-clock fields are emitted as 0 unless
--timings is given.  --threads (default from EKRFORGE_THREADS) fans the
verify suites out over a thread pool; results are re-sorted before
emission so the output does not depend on scheduling.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .certify import Certificate, SUITES
from .classify import classify_T3
from .covers import covers as cover_enum
from .covers import saturate, tau
from .constructions import (build_F_H, build_G, build_HM, build_K34, build_R,
                            build_S, full_star, lex_family)
from .familyio import FamilyFormatError, read_family, render_family
from .families import elements_of, trace
from .oracles import trace_bound_check
from .properties import PROPERTY_SUITES
from .search import max_intersecting, max_intersecting_degcap

USAGE_ERROR = 2


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("EKRFORGE_THREADS", "1")))
    except ValueError:
        return 1


def _parse_budget(text: str) -> float:
    text = text.strip().lower()
    scale = 1.0
    if text.endswith("h"):
        scale, text = 3600.0, text[:-1]
    elif text.endswith("m"):
        scale, text = 60.0, text[:-1]
    elif text.endswith("s"):
        text = text[:-1]
    return float(text) * scale


def _emit(payload: str, out: str | None) -> None:
    if out:
        Path(out).write_text(payload)
    else:
        sys.stdout.write(payload)


def _emit_certs(certs: list[Certificate], args) -> None:
    include_timing = args.timings
    if args.format == "json-lines":
        payload = "".join(
            json.dumps(c.to_json_dict(include_timing), sort_keys=False) + "\n"
            for c in certs)
    elif args.format == "json-array":
        payload = json.dumps([c.to_json_dict(include_timing) for c in certs],
                             sort_keys=False, indent=2) + "\n"
    else:
        lines = []
        for c in certs:
            lines.append(f"{c.id}: {c.verdict.upper()}  ({c.wall_time_ms} ms)")
            lines.append(f"  {c.statement}")
            if c.witnesses:
                for w in c.witnesses[:5]:
                    lines.append(f"  witness: {w}")
                if len(c.witnesses) > 5:
                    lines.append(f"  ... {len(c.witnesses) - 5} more")
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.out)


class UsageError(Exception):
    pass


def _load_family(path: str):
    try:
        return read_family(path)
    except FileNotFoundError:
        raise UsageError(f"family file not found: {path}") from None
    except FamilyFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


# ── subcommand handlers ──────────────────────────────────────────────────────

def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "g":
        fam = build_G(args.n, args.k)
    elif kind == "s":
        fam = build_S(args.n or 6)
    elif kind == "r":
        fam = build_R(args.n or 5)
    elif kind == "k34":
        fam = build_K34(args.n or 4)
    elif kind == "star":
        fam = full_star(args.n, args.k, args.apex)
    elif kind == "hm":
        fam = build_HM(args.n, args.k)
    elif kind == "fh":
        if not args.input:
            raise UsageError("construct fh needs --input with the H family")
        h = _load_family(args.input)
        fam = build_F_H(h, args.n or h.n, args.k or h.k)
    else:
        raise UsageError(f"unknown construction {kind!r}")
    _emit(render_family(fam), args.out)
    return 0


def _cmd_tau(args) -> int:
    fam = _load_family(args.family)
    value = tau(fam)
    if args.format == "text":
        _emit(f"{value}\n", args.out)
    else:
        _emit(json.dumps({"tau": value, "n": fam.n, "k": fam.k,
                          "members": len(fam)}) + "\n", args.out)
    return 0


def _cmd_covers(args) -> int:
    fam = _load_family(args.family)
    cf = cover_enum(fam, args.ell)
    if args.format == "text":
        lines = [" ".join(map(str, s)) for s in cf.sets()]
        _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    else:
        _emit(json.dumps({"ell": args.ell, "count": len(cf),
                          "covers": [list(s) for s in cf.sets()]}) + "\n", args.out)
    return 0


def _cmd_saturate(args) -> int:
    fam = _load_family(args.family)
    _emit(render_family(saturate(fam)), args.out)
    return 0


def _cmd_trace(args) -> int:
    fam = _load_family(args.family)
    window = _parse_elements(args.window)
    stats = trace(fam, window)
    rows = []
    for s_mask, (f_s, residual) in sorted(stats.table.items()):
        alpha = stats.alpha_of(s_mask)
        rows.append({"S": list(elements_of(s_mask)), "f": f_s,
                     "alpha": None if alpha is None else str(alpha),
                     "residual_size": len(residual)})
    cert = trace_bound_check(fam, window) if args.check_bounds else None
    if args.format == "text":
        lines = [f"S={tuple(r['S'])} f={r['f']} alpha={r['alpha']}" for r in rows]
        if cert is not None:
            lines.append(f"TRACE-BOUNDS: {cert.verdict.upper()}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        payload = {"window": sorted(window), "total": stats.total(), "rows": rows}
        if cert is not None:
            payload["bounds"] = cert.to_json_dict(args.timings)
        _emit(json.dumps(payload) + "\n", args.out)
    return 0 if cert is None or cert.passed else 1


def _cmd_classify(args) -> int:
    fam = _load_family(args.family)
    result = classify_T3(fam)
    payload = {"tag": result.tag.value, "witness": _jsonable(result.witness)}
    if args.format == "text":
        _emit(f"{payload['tag']} witness={payload['witness']}\n", args.out)
    else:
        _emit(json.dumps(payload) + "\n", args.out)
    return 0


def _cmd_verify(args) -> int:
    all_suites = {**SUITES, **PROPERTY_SUITES}
    if args.suite == ["all"]:
        names = sorted(all_suites)
    else:
        names = args.suite
        unknown = [s for s in names if s not in all_suites]
        if unknown:
            raise UsageError(
                f"unknown suite(s) {', '.join(unknown)}; known: {', '.join(sorted(all_suites))}")
    overrides = {}
    for field in ("k_min", "k_max", "n_span", "n_max", "samples"):
        value = getattr(args, field)
        if value is not None:
            overrides[field] = value

    def run_one(name: str) -> Certificate:
        runner = all_suites[name]
        kwargs = dict(overrides)
        if name in PROPERTY_SUITES:
            kwargs.setdefault("seed", args.seed)
        cert = runner(**kwargs)
        params = dict(cert.params)
        params["seed"] = args.seed
        return Certificate(cert.id, cert.statement, params, cert.verdict,
                           cert.witnesses, cert.wall_time_ms, cert.details)

    threads = args.threads
    if threads > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            certs = list(pool.map(run_one, names))
    else:
        certs = [run_one(n) for n in names]
    certs.sort(key=lambda c: c.id)
    _emit_certs(certs, args)
    return 0 if all(c.passed for c in certs) else 1


def _cmd_oracle(args) -> int:
    budget = _parse_budget(args.budget)
    if args.degree_cap_ell is not None:
        result = max_intersecting_degcap(args.n, args.k, args.degree_cap_ell, budget)
        ident = "M-ORACLE-DEGCAP"
        params = {"n": args.n, "k": args.k, "ell": args.degree_cap_ell}
    else:
        result = max_intersecting(args.n, args.k, args.r, budget,
                                  seed_incumbent=not args.no_warm_start)
        ident = "M-ORACLE"
        params = {"n": args.n, "k": args.k, "r": args.r}
    statement = (f"maximum intersecting family size, n={args.n} k={args.k} "
                 + (f"degree-cap ell={args.degree_cap_ell}" if args.degree_cap_ell
                    else f"tau >= {args.r}"))
    params.update({"value": result.value, "status": result.status,
                   "nodes": result.nodes, "budget_s": budget, "seed": args.seed})
    witnesses = [] if result.status == "proved-optimal" else \
        [{"status": result.status, "lower_bound": result.value}]
    cert = Certificate(
        id=ident,
        statement=statement,
        params=params,
        verdict="pass" if result.status == "proved-optimal" else "fail",
        witnesses=witnesses,
        wall_time_ms=int(result.elapsed * 1000),
    )
    if args.format == "text":
        _emit(f"value {result.value} status {result.status} nodes {result.nodes}\n",
              args.out)
        if args.witness_out:
            from .familyio import write_family
            write_family(result.witness, args.witness_out)
    else:
        _emit_certs([cert], args)
        if args.witness_out:
            from .familyio import write_family
            write_family(result.witness, args.witness_out)
    return 0 if cert.passed else 1


def _cmd_lex(args) -> int:
    fam = lex_family(args.n, args.k, args.m)
    _emit(render_family(fam), args.out)
    return 0


def _parse_elements(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad element list {text!r}") from None


def _jsonable(obj):
    if obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return str(obj)


# ── parser ───────────────────────────────────────────────────────────────────

def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json-lines", "json-array"),
                   default="text")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--timings", action="store_true",
                   help="emit measured wall times in JSON (breaks byte-stability)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ekrforge",
        description="intersecting-family verification and search toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named family")
    p.add_argument("kind", choices=("g", "s", "r", "k34", "star", "hm", "fh"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--apex", type=int, default=1)
    p.add_argument("--input", default=None, help="H family file (for fh)")
    _add_common(p)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("tau", help="covering number of a family file")
    p.add_argument("family")
    _add_common(p)
    p.set_defaults(handler=_cmd_tau)

    p = sub.add_parser("covers", help="all size-l covers of a family file")
    p.add_argument("family")
    p.add_argument("--ell", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_covers)

    p = sub.add_parser("saturate", help="maximal intersecting completion")
    p.add_argument("family")
    _add_common(p)
    p.set_defaults(handler=_cmd_saturate)

    p = sub.add_parser("trace", help="trace statistics through a window")
    p.add_argument("family")
    p.add_argument("--window", required=True, help="e.g. 1,2,3,4,5")
    p.add_argument("--check-bounds", action="store_true")
    _add_common(p)
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("classify", help="classify the 3-cover family")
    p.add_argument("family")
    _add_common(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("verify", help="run certificate suites")
    p.add_argument("--suite", action="append", required=True,
                   help="suite id, repeatable; 'all' for everything")
    p.add_argument("--k-min", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--n-span", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    _add_common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("oracle", help="exact m(n,k,r) search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--budget", default="600s", help="e.g. 600s, 10m, 2h")
    p.add_argument("--degree-cap-ell", type=int, default=None)
    p.add_argument("--no-warm-start", action="store_true")
    p.add_argument("--witness-out", default=None)
    _add_common(p)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("lex", help="lexicographic initial segment L(n,k,m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_lex)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"ekrforge: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, FamilyFormatError) as exc:
        print(f"ekrforge: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())
