"""Command-line interface: ``frechet-ann {build,query,gadgets,bench}``.

Exit status is 0 on success, 1 when validation reports a FAIL verdict and
2 for usage, parse or I/O errors.
"""

import argparse
from concurrent.futures import ThreadPoolExecutor
import json
import math
import os
import sys
import time

from . import __version__, indexes, persist
from .errors import DatasetError, InvalidParameterError, QueryBudgetError
from .gadgets import (
    SetPair,
    continuous_gadget,
    discrete_planar_gadget,
    highdim_gadget,
)
from .oracle import Verdict, scan, validate

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _write_json(path, obj):
    text = json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _index_summary(index):
    out = {"kind": index.kind, "k": index.k, "radius": index.radius,
           "curves": len(index.ids), "dictionary_size": len(index),
           "approximation_factor": indexes.approximation_factor(index)}
    if index.kind == "lsh":
        out.update(width=index.width, reps=index.reps, seed=index.seed,
                   table_sizes=[len(t) for t in index.tables])
    else:
        out.update(epsilon=index.epsilon)
    return out


def _curve_stats(index):
    return [{"id": ident, "signature_length": s.signature_length,
             "candidates": s.candidates, "stored": s.stored, "skipped": s.skipped}
            for ident, s in zip(index.ids, index.stats)]


# build --------------------------------------------------------------------

def cmd_build(args):
    corpus = persist.read_dataset(args.dataset)
    start = time.perf_counter()
    index = indexes.build(args.kind, corpus, epsilon=args.epsilon, k=args.k,
                          radius=args.radius, seed=args.seed, reps=args.reps,
                          width=args.width, threads=args.threads)
    build_s = time.perf_counter() - start
    size = persist.save_index(index, args.out)
    max_cand = max((s.candidates for s in index.stats), default=0)
    print(f"dictionary size {len(index)}; max candidates per curve {max_cand}; "
          f"wrote {size} bytes to {args.out}")
    if args.report:
        _write_json(args.report, {
            "command": "build",
            "parameters": _echo(args),
            "seed": args.seed,
            "index": _index_summary(index),
            "timings": {"build_s": build_s},
            "curves": _curve_stats(index),
        })
    return EXIT_OK


# query --------------------------------------------------------------------

def answer_query(index, qid, tau, do_validate, tol=1e-6):
    """One report row; deterministic apart from the ``time_s`` field."""
    start = time.perf_counter()
    row = {"id": qid}
    try:
        found, probes = indexes.query(index, tau)
    except QueryBudgetError as exc:
        row.update(verdict="NO", answer=None, probes=0, error=str(exc))
        found, probes = None, 0
        budget_hit = True
    else:
        row.update(verdict="HIT" if found is not None else "NO", answer=found, probes=probes)
        budget_hit = False
    if do_validate:
        oracle = scan(dict(zip(index.ids, index.curves)), tau, index.radius)
        applies = indexes.completeness_applies(index, tau) and not budget_hit
        curve = indexes.curve_of(index, found) if found is not None else None
        verdict = validate(found, oracle, indexes.approximation_factor(index), index.radius,
                           tau, curve, applies, tol)
        row.update(validation=str(verdict), oracle_within_r=oracle.any_within_r,
                   oracle_best=oracle.best_id,
                   oracle_distance=oracle.best_distance if math.isfinite(oracle.best_distance) else None)
    row["time_s"] = time.perf_counter() - start
    return row


def run_queries(index, queries, do_validate=False, threads=1):
    items = list(queries.items())

    def work(item):
        return answer_query(index, item[0], item[1], do_validate)

    if threads and threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(work, items))
    else:
        rows = [work(item) for item in items]
    return sorted(rows, key=lambda r: r["id"])


def cmd_query(args):
    start = time.perf_counter()
    index = persist.load_index(args.index)
    load_s = time.perf_counter() - start
    queries = persist.read_dataset(args.queries)
    start = time.perf_counter()
    rows = run_queries(index, queries, args.validate, args.threads)
    total_s = time.perf_counter() - start
    counts = {}
    for row in rows:
        for key in ("verdict", "validation"):
            if key in row:
                counts[row[key]] = counts.get(row[key], 0) + 1
    for row in rows:
        mark = f" {row['validation']}" if "validation" in row else ""
        print(f"{row['id']}\t{row['verdict']}\t{row['answer'] if row['answer'] is not None else '-'}{mark}")
    failed = any(Verdict(row["validation"]).failed for row in rows if "validation" in row)
    if args.report:
        _write_json(args.report, {
            "command": "query",
            "parameters": _echo(args),
            "seed": index.seed if index.kind == "lsh" else None,
            "index": _index_summary(index),
            "timings": {"load_s": load_s, "queries_s": total_s},
            "curves": _curve_stats(index),
            "queries": rows,
            "summary": counts,
        })
    return EXIT_FAIL if failed else EXIT_OK


# gadgets ------------------------------------------------------------------

def _int_set(text):
    if text is None or text.strip() == "":
        return frozenset()
    try:
        return frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _bit_vectors(text):
    if text is None or text.strip() == "":
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok or set(tok) - {"0", "1"}:
            raise UsageError(f"bit vectors are strings of 0/1, got {tok!r}")
        out.append(tuple(int(c) for c in tok))
    return out


def _point_records(P, Q):
    return [{"id": "P", "dim": int(P.shape[1]), "values": P.ravel().tolist()},
            {"id": "Q", "dim": int(Q.shape[1]), "values": Q.ravel().tolist()}]


def cmd_gadgets(args):
    os.makedirs(args.out, exist_ok=True)
    if args.family == "continuous":
        sp = SetPair(args.universe, _int_set(args.alice), _int_set(args.bob))
        x, y = continuous_gadget(sp)
        records = [{"id": "x", "values": x.tolist()}, {"id": "y", "values": y.tolist()}]
        gap = {"intersecting_at_least": 2, "disjoint_at_most": 1, "text": "≤1 vs ≥2"}
        intersecting = sp.intersecting
        params = {"universe": sp.universe_size, "alice": sorted(sp.alice), "bob": sorted(sp.bob)}
    elif args.family == "planar-discrete":
        a, b = _bit_vectors(args.alice), _bit_vectors(args.bob)
        P, Q = discrete_planar_gadget(a, b)
        records = _point_records(P, Q)
        gap = {"intersecting_at_most": 1, "disjoint_at_least": 1.11, "text": "≤1 vs ≥1.11"}
        intersecting = bool(set(a) & set(b))
        params = {"alice": ["".join(map(str, v)) for v in a],
                  "bob": ["".join(map(str, v)) for v in b]}
    else:
        sp = SetPair(args.universe, _int_set(args.alice), _int_set(args.bob))
        P, Q = highdim_gadget(sp)
        records = _point_records(P, Q)
        gap = {"intersecting_at_most": math.sqrt(2), "disjoint_at_least": math.sqrt(3),
               "text": "≤√2 vs ≥√3"}
        intersecting = sp.intersecting
        params = {"universe": sp.universe_size, "alice": sorted(sp.alice), "bob": sorted(sp.bob)}
    data_path = os.path.join(args.out, "gadget.jsonl")
    with open(data_path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec) + "\n")
    manifest = {"family": args.family, "parameters": params, "gap": gap,
                "intersecting": intersecting,
                "distance": "discrete" if args.family != "continuous" else "continuous",
                "dataset": os.path.basename(data_path)}
    _write_json(os.path.join(args.out, "manifest.json"), manifest)
    print(f"wrote {data_path} ({gap['text']}, {'intersecting' if intersecting else 'disjoint'})")
    return EXIT_OK


# bench --------------------------------------------------------------------

def cmd_bench(args):
    from .bench import run_benchmark
    result = run_benchmark(reps=args.reps or 5, seed=args.seed)
    for name, row in result["seconds"].items():
        extra = f"  speedup {row['speedup']:.1f}x" if "speedup" in row else ""
        timings = "  ".join(f"{b} {row[b] * 1e3:.3f} ms" for b in result["backends"])
        print(f"{name:18s} {timings}{extra}")
    if args.report:
        _write_json(args.report, {"command": "bench", "parameters": _echo(args),
                                  "seed": args.seed, **result})
    return EXIT_OK


# parser -------------------------------------------------------------------

def _echo(args):
    return {k: v for k, v in sorted(vars(args).items()) if k != "func"}


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {value}")
    return value


def _nonneg_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="frechet-ann", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=_nonneg_int, default=0)
        p.add_argument("--threads", type=_positive_int, default=1)
        p.add_argument("--report", help="write a JSON run report here ('-' for stdout)")

    b = sub.add_parser("build", help="build an index from a JSON-lines dataset")
    b.add_argument("dataset")
    b.add_argument("--kind", choices=indexes.KINDS, default="five-eps")
    b.add_argument("--epsilon", type=float, default=1.0)
    b.add_argument("--k", type=_positive_int, default=3)
    b.add_argument("--radius", type=float, default=1.0)
    b.add_argument("--width", type=float, default=None,
                   help="lsh grid width in units of the radius (default 12k)")
    b.add_argument("--reps", type=_positive_int, default=None,
                   help="lsh repetitions (default ceil(2 log2(n+1)))")
    b.add_argument("--out", "-o", required=True)
    common(b)
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("query", help="answer queries against a saved index")
    q.add_argument("index")
    q.add_argument("queries")
    q.add_argument("--validate", action="store_true", help="check answers against the oracle")
    common(q)
    q.set_defaults(func=cmd_query)

    g = sub.add_parser("gadgets", help="export a gadget curve pair")
    g.add_argument("family", choices=("continuous", "planar-discrete", "highdim"))
    g.add_argument("--universe", "-U", type=_positive_int, default=3)
    g.add_argument("--alice", help="comma-separated elements (bit strings for planar-discrete)")
    g.add_argument("--bob", help="comma-separated elements (bit strings for planar-discrete)")
    g.add_argument("--out", "-o", required=True, help="output directory")
    common(g)
    g.set_defaults(func=cmd_gadgets)

    be = sub.add_parser("bench", help="time compiled against pure-Python kernels")
    be.add_argument("--reps", type=_positive_int, default=5)
    common(be)
    be.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DatasetError, InvalidParameterError, UsageError, OSError) as exc:
        print(f"frechet-ann: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
