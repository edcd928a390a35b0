"""Command-line front end: ``bkkunmix {gen,check,bkk,vol,mv,bench}``.

Exit codes: 0 certified / ok, 3 not certified, 4 bad input, 5 resource cap
hit, 6 no generic lift found.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from contextlib import contextmanager
from pathlib import Path

from . import generators as gen
from .hull import DegeneratePolytope, ResourceLimit
from .io import (FormatError, format_graph, points_to_dict, read_points,
                 read_system, resolve_graph, write_system)
from .mixedvol import NonSquareSystem, mixed_volume
from .ratgeom import DimensionMismatch, format_rat
from .unmix import (CERTIFIED, DEGENERATE, Grouping, InvalidGrouping,
                    check_semimixed, check_theorem2, semimixed_bkk, unmixed_bkk)
from .volume import GenericityFailure, normalized_volume, regular_triangulation

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 3
EXIT_INPUT = 4
EXIT_LIMIT = 5
EXIT_GENERICITY = 6

# normalized volumes of the cycle-graph adjacency polytopes, N * 2^(N-2)
CYCLE_REFERENCE = {N: N * 2 ** (N - 2) for N in range(3, 19)}
IEEE14_REFERENCE = 427680


class RunReport:
    def __init__(self, argv, seed):
        self.command = list(argv)
        self.seed = seed
        self.input_sha256 = None
        self.timings_ms = {}
        self.result = {}
        self.status = "ok"

    def hash_file(self, path):
        self.input_sha256 = hashlib.sha256(Path(path).read_bytes()).hexdigest()

    @contextmanager
    def phase(self, name):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings_ms[name] = round((time.perf_counter() - t0) * 1000, 3)

    def to_dict(self):
        return {"command": self.command, "input_sha256": self.input_sha256,
                "seed": self.seed, "timings_ms": self.timings_ms,
                "result": self.result, "status": self.status}


def _emit(args, rep: RunReport, lines):
    if args.json:
        print(json.dumps(rep.to_dict(), indent=1))
    else:
        for line in lines:
            print(line)
        if args.verbose:
            for k, v in rep.timings_ms.items():
                print(f"  {k}: {v:.1f} ms", file=sys.stderr)


def _family_output(args):
    fam = args.family
    if fam == "kuramoto-cycle":
        return gen.kuramoto_cycle(_need(args.n, "--n")), None
    if fam == "noonburg":
        return gen.noonburg(_need(args.n, "--n")), None
    if fam == "tensor":
        return gen.tensor_eigen_supports(_need(args.n, "--n"), _need(args.m, "--m"),
                                         _need(args.mp, "--mp"),
                                         args.generalized, args.linear_lambda), None
    g = resolve_graph(_need(args.graph, "--graph"), loops=not args.no_loops)
    if fam == "loadflow":
        return gen.loadflow_supports(g), None
    if fam == "adjacency":
        return None, points_to_dict(gen.adjacency_polytope(g))
    return None, format_graph(g)


def _need(value, flag):
    if value is None:
        raise FormatError(f"{flag} is required for this family")
    return value


def cmd_gen(args, rep):
    with rep.phase("generate"):
        system, other = _family_output(args)
    if system is not None:
        text = write_system(system) + "\n"
        rep.result = {"family": args.family, "supports": len(system.supports),
                      "dim": system.dim, "points": [len(s) for s in system.supports]}
        if system.notes:
            rep.result["notes"] = list(system.notes)
            for note in system.notes:
                print(f"note: {note}", file=sys.stderr)
    elif isinstance(other, dict):
        text = json.dumps(other) + "\n"
        rep.result = {"family": args.family, "dim": other["dim"],
                      "points": len(other["points"])}
    else:
        text = other
        rep.result = {"family": args.family}
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise FormatError(f"cannot write {args.out}: {exc}") from exc
        _emit(args, rep, [f"wrote {args.out}"])
    elif args.json:
        rep.result["content"] = text if isinstance(other, str) else json.loads(text)
        _emit(args, rep, [])
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _load_system(args, rep):
    rep.hash_file(args.system)
    with rep.phase("read"):
        return read_system(args.system)


def cmd_check(args, rep):
    system = _load_system(args, rep)
    if args.groups:
        with rep.phase("semimixed"):
            sm = check_semimixed(system, Grouping.parse(args.groups), args.face_cap)
        rep.result = {"semimixed": sm.ok, "groups": sm.groups}
        rep.status = CERTIFIED if sm.ok else "not-certified"
        _emit(args, rep, [f"semi-mixed condition: {'holds' if sm.ok else 'fails'}"])
        return EXIT_OK if sm.ok else EXIT_NOT_CERTIFIED
    with rep.phase("faces"):
        ur = check_theorem2(system, args.face_cap)
    ur_dict = ur.to_dict(args.verbose)
    rep.result = ur_dict
    rep.status = ur.status
    lines = [f"status: {ur.status}",
             f"faces checked: {ur.face_count}",
             f"every face meets every support: {str(ur.theorem1).lower()}",
             f"every face passes A, B or C: {str(ur.theorem2).lower()}"]
    for f in ur_dict["faces"]:
        if f["satisfied_by"] == "none":
            lines.append(f"  failing face dim {f['dim']} normal {f['normal']} "
                         f"meets {f['meets']}")
    _emit(args, rep, lines)
    ok = ur.status in (CERTIFIED, DEGENERATE)
    return EXIT_OK if ok else EXIT_NOT_CERTIFIED


def cmd_bkk(args, rep):
    system = _load_system(args, rep)
    lines = []
    code = EXIT_OK
    if args.groups:
        with rep.phase("semimixed"):
            value, sm = semimixed_bkk(system, Grouping.parse(args.groups), args.seed,
                                      args.face_cap)
        rep.result = {"route": "semimixed", "bkk": None if value is None else format_rat(value),
                      "groups": sm.groups}
        if value is None:
            rep.status = "not-certified"
            lines.append("semi-mixed condition fails; no value")
            code = EXIT_NOT_CERTIFIED
        else:
            rep.status = CERTIFIED
            lines.append(format_rat(value))
    else:
        value, reason, bound = None, None, None
        if args.no_check:
            reason = "certificate skipped (--no-check)"
        else:
            try:
                with rep.phase("faces"):
                    value, ur = unmixed_bkk(system, args.seed, args.face_cap)
                bound = ur.bound
                rep.status = ur.status
                rep.result = {"route": "union", "face_count": ur.face_count}
                if value is None:
                    reason = "faces fail conditions A, B and C"
            except ResourceLimit as exc:
                reason = f"certificate not checked: {exc}"
        if reason is not None:
            if bound is None:
                with rep.phase("volume"):
                    bound = normalized_volume(system.union(), args.seed)
            rep.status = "bound-only"
            rep.result.update({"route": "union", "reason": reason})
            lines.append(f"{format_rat(bound)} (bound only: {reason})")
            code = EXIT_NOT_CERTIFIED
        else:
            lines.append(format_rat(value))
        rep.result["bkk"] = None if value is None else format_rat(value)
        rep.result["bound"] = None if bound is None else format_rat(bound)
    if args.oracle:
        with rep.phase("oracle"):
            mv = mixed_volume(system, args.seed, threads=args.threads)
        rep.result["oracle"] = format_rat(mv)
        lines.append(f"oracle: {format_rat(mv)}")
    _emit(args, rep, lines)
    return code


def cmd_vol(args, rep):
    rep.hash_file(args.points)
    with rep.phase("read"):
        pts = read_points(args.points)
    with rep.phase("volume"):
        tri = regular_triangulation(pts, args.seed)
    rep.result = {"normalized_volume": format_rat(tri.total), "cells": len(tri.cells),
                  "degenerate": tri.degenerate}
    if args.triangulation:
        Path(args.triangulation).write_text(tri.to_json() + "\n", encoding="utf-8")
    _emit(args, rep, [format_rat(tri.total)])
    return EXIT_OK


def cmd_mv(args, rep):
    system = _load_system(args, rep)
    with rep.phase("oracle"):
        mv = mixed_volume(system, args.seed, threads=args.threads)
    rep.result = {"mixed_volume": format_rat(mv)}
    _emit(args, rep, [format_rat(mv)])
    return EXIT_OK


def _bench_row(label, points_fn, reference, seed, oracle_fn=None):
    t0 = time.perf_counter()
    value = normalized_volume(points_fn(), seed)
    row = {"case": label, "bkk": value, "reference": reference,
           "ms": round((time.perf_counter() - t0) * 1000, 1)}
    if oracle_fn is not None:
        t0 = time.perf_counter()
        row["oracle"] = oracle_fn()
        row["oracle_ms"] = round((time.perf_counter() - t0) * 1000, 1)
    return row


def cmd_bench(args, rep):
    rows = []
    with rep.phase("bench"):
        if args.name == "cycle":
            for N in range(args.n_min, args.n_max + 1):
                g = gen.cycle_graph(N)
                oracle = None
                if N <= args.oracle_max:
                    def oracle(g=g):
                        return mixed_volume(gen.loadflow_supports(g), args.seed,
                                            threads=args.threads)
                rows.append(_bench_row(f"cycle N={N}",
                                       lambda g=g: gen.adjacency_polytope(g),
                                       CYCLE_REFERENCE.get(N), args.seed, oracle))
        else:
            rows.append(_bench_row("ieee14",
                                   lambda: gen.adjacency_polytope(gen.ieee14()),
                                   IEEE14_REFERENCE, args.seed))
    ok = all(r["reference"] is None or r["bkk"] == r["reference"] for r in rows)
    ok = ok and all("oracle" not in r or r["oracle"] == r["bkk"] for r in rows)
    rep.result = {"rows": [{k: (format_rat(v) if k in ("bkk", "oracle", "reference")
                                and v is not None else v) for k, v in r.items()}
                           for r in rows]}
    rep.status = "ok" if ok else "mismatch"
    lines = [f"{'case':<14}{'bkk':>12}{'reference':>12}{'oracle':>10}{'ms':>12}"]
    for r in rows:
        ref = "" if r["reference"] is None else str(r["reference"])
        orc = str(r.get("oracle", ""))
        lines.append(f"{r['case']:<14}{r['bkk']:>12}{ref:>12}{orc:>10}{r['ms']:>12.1f}")
    _emit(args, rep, lines)
    return EXIT_OK if ok else EXIT_NOT_CERTIFIED


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the subcommand copy must not overwrite flags given before the subcommand
    def d(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=d(0), help="lifting seed (u64)")
    common.add_argument("--threads", type=int, default=d(os.cpu_count() or 1))
    common.add_argument("--json", action="store_true", default=d(False),
                        help="print a JSON run report")
    common.add_argument("--verbose", action="store_true", default=d(False))
    common.add_argument("--face-cap", type=int, default=d(None),
                        help="maximum number of faces (env UNMIX_FACE_CAP)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    p = argparse.ArgumentParser(prog="bkkunmix", parents=[_global_flags(suppress=False)],
                                description="Exact BKK bounds via the hull of the union.")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a system or graph file")
    g.add_argument("family", choices=["kuramoto-cycle", "noonburg", "loadflow",
                                      "tensor", "adjacency", "graph"])
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--mp", type=int, help="order m' of the right-hand side")
    g.add_argument("--generalized", action="store_true")
    g.add_argument("--linear-lambda", action="store_true",
                   help="include lambda in the linear normalization")
    g.add_argument("--graph", help="ieee14, cycle:N, path:N or an edge-list file")
    g.add_argument("--no-loops", action="store_true")
    g.add_argument("--out", "-o")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[common], help="run the face certificate")
    c.add_argument("system")
    c.add_argument("--groups", help="semi-mixed blocks, e.g. '0,1;2'")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("bkk", parents=[common], help="certified BKK bound")
    b.add_argument("system")
    b.add_argument("--oracle", action="store_true", help="also run inclusion-exclusion")
    b.add_argument("--groups", help="semi-mixed blocks, e.g. '0,1;2'")
    b.add_argument("--no-check", action="store_true",
                   help="skip the face certificate and report the bound")
    b.set_defaults(func=cmd_bkk)

    v = sub.add_parser("vol", parents=[common], help="normalized volume of a point set")
    v.add_argument("points")
    v.add_argument("--triangulation", help="write the cells as JSON to this path")
    v.set_defaults(func=cmd_vol)

    m = sub.add_parser("mv", parents=[common], help="inclusion-exclusion mixed volume")
    m.add_argument("system")
    m.set_defaults(func=cmd_mv)

    be = sub.add_parser("bench", parents=[common], help="cycle-graph or IEEE-14 rows")
    be.add_argument("name", choices=["cycle", "ieee14"])
    be.add_argument("--n-min", type=int, default=6)
    be.add_argument("--n-max", type=int, default=10)
    be.add_argument("--oracle-max", type=int, default=4,
                    help="run the oracle up to this N")
    be.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.face_cap is None and os.environ.get("UNMIX_FACE_CAP"):
        args.face_cap = int(os.environ["UNMIX_FACE_CAP"])
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    rep = RunReport(["bkkunmix", *argv], args.seed)
    try:
        return args.func(args, rep)
    except (FormatError, InvalidGrouping, NonSquareSystem, DimensionMismatch,
            DegeneratePolytope, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except GenericityFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GENERICITY


if __name__ == "__main__":
    sys.exit(main())
