"""Compiled against pure-Python kernels, plus the naive-vs-fast Dedekind ratio.

    python benchmarks/bench_kernels.py [SIZE ...]
"""

import argparse
import json

from hardysums import bench


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("sizes", nargs="*", type=int, default=[1000, 10000, 100000])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    for size in args.sizes:
        result = bench.bench_kernels(size)
        if args.json:
            print(json.dumps(result))
            continue
        print(f"size {size}  backends {', '.join(result['backends'])}")
        for name, row in result["kernels"].items():
            py = row["python_ns"] / 1e6
            line = f"  {name:<16} python {py:10.3f} ms"
            if "cython_ns" in row:
                line += f"  cython {row['cython_ns'] / 1e6:9.3f} ms  x{row['speedup']:.0f}"
            print(line + ("" if row["agree"] else "  MISMATCH"))
    ded = bench.bench_dedekind(max(args.sizes))
    print(json.dumps({"dedekind-naive-vs-fast": {k: ded[k] for k in ("inputs", "naive_ns", "fast_ns", "speedup", "agree")}}))


if __name__ == "__main__":
    main()
