"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--reps N] [--seed S] [--json PATH]
"""

import argparse
import json

from frechet_ann.bench import run_benchmark


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", help="also write the raw timings here")
    args = parser.parse_args()
    result = run_benchmark(args.reps, args.seed)
    if "compiled" not in result["backends"]:
        print("compiled extension not available; timing the Python kernels only")
    print(f"{'workload':18s} {'python ms':>11s} {'compiled ms':>12s} {'speedup':>8s}")
    for name, row in result["seconds"].items():
        compiled = f"{row['compiled'] * 1e3:12.3f}" if "compiled" in row else f"{'-':>12s}"
        speedup = f"{row['speedup']:7.1f}x" if "speedup" in row else f"{'-':>8s}"
        print(f"{name:18s} {row['python'] * 1e3:11.3f} {compiled} {speedup}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(result, fh, indent=2)


if __name__ == "__main__":
    main()
