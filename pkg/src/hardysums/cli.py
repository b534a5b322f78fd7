"""Command-line front end.

Every evaluation prints one JSON object on standard output, exact values as
``"p/q"`` strings.  Exit status: 0 on success, 1 when a verification suite
fails, 2 on usage or domain errors.
"""

import argparse
import json
import os
import sys
import time

from hardysums import bench, geodesic, hardy, lattice, verify
from hardysums.dedekind import dedekind_fast, dedekind_naive, dedekind_symbol, rademacher_cocycle
from hardysums.exact import INF, DomainError, ResourceError, gcd, parse_rational, render
from hardysums.modgroup import Mat, decompose_theta


def _int(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _rational(text):
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _matrix(ns, prefix=""):
    return Mat(*(getattr(ns, prefix + k) for k in "abcd"))


def _count_triangle(ns):
    d, c = ns.d, ns.c
    brute = lattice.count_triangle_z2_brute(d, c, ns.max_iterations)
    extra = {"brute": brute}
    if gcd(d, c) == 1:
        extra["closed"] = lattice.count_triangle_z2_closed(d, c)
    return brute, extra


def _count_triangle_even(ns):
    r = lattice.triangle_2z2_report(ns.d, ns.c, ns.max_iterations)
    extra = {
        "brute": r.brute,
        "closed_corrected": render(r.closed_corrected),
        "closed_printed": render(r.closed_printed),
        "delta": render(r.delta),
    }
    return r.brute, extra


def _count_tetra(ns):
    u, v, w = ns.u, ns.v, ns.w
    brute = lattice.count_tetra_brute(u, v, w, ns.max_iterations)
    extra = {"brute": brute}
    if gcd(u, v) == gcd(u, w) == gcd(v, w) == 1:
        extra["mordell"] = render(lattice.tetra_mordell_value(u, v, w))
    if w == 2 and u % 2 == 0 and v % 2 == 1 and gcd(u, v) == 1:
        extra["printed"] = render(lattice.tetra_mordell2_printed(u, v))
        extra["corrected"] = render(lattice.tetra_mordell2_corrected(u, v))
    return brute, extra


def _frak_s(ns):
    if len(ns.args) == 1:
        x = parse_rational(ns.args[0])
        if x is INF:
            return 0, {}
        return hardy.frak_s_column(x.numerator, x.denominator), {}
    if len(ns.args) == 4:
        return hardy.frak_s(Mat(*(int(t) for t in ns.args))), {}
    raise DomainError("frak-s takes a cusp a/c or four matrix entries a b c d")


def _intersect(ns):
    x = ns.x
    value = geodesic.intersection_number(x, ns.bound)
    extra = {}
    if x is not INF:
        extra["crossing_bound"] = ns.bound or geodesic.crossing_bound(x)
        extra["crossings"] = [json.loads(line) for line in geodesic.crossings_jsonl(x, ns.bound)]
    return value, extra


def _decompose(ns):
    word = decompose_theta(_matrix(ns))
    return str(word), {"sign": word.sign, "exponents": list(word.exponents)}


EVAL = {
    "dedekind": (("d", "c"), lambda ns: (dedekind_naive(ns.d, ns.c), {})),
    "dedekind-fast": (("d", "c"), lambda ns: (dedekind_fast(ns.d, ns.c), {})),
    "s4": (("d", "c"), lambda ns: (hardy.s4_naive(ns.d, ns.c), {"via_dedekind": hardy.s4_via_dedekind(ns.d, ns.c)})),
    "s": (("d", "c"), lambda ns: (hardy.s_naive(ns.d, ns.c), {})),
    "frak-s4": (("a", "c"), lambda ns: (hardy.frak_s4(ns.a, ns.c), {})),
    "phi": (("a", "b", "c", "d"), lambda ns: (dedekind_symbol(_matrix(ns)), {})),
    "chi": (("a", "b", "c", "d"), lambda ns: (hardy.chi_theta(_matrix(ns)), {})),
    "cocycle": (
        ("a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"),
        lambda ns: (rademacher_cocycle(Mat(ns.a1, ns.b1, ns.c1, ns.d1), Mat(ns.a2, ns.b2, ns.c2, ns.d2)), {}),
    ),
    "count-triangle": (("d", "c"), _count_triangle),
    "count-triangle-even": (("d", "c"), _count_triangle_even),
    "count-tetra": (("u", "v", "w"), _count_tetra),
    "decompose": (("a", "b", "c", "d"), _decompose),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=_int, default=None, help="sweep bound / crossing bound override")
    common.add_argument("--max-iterations", type=_int, default=None,
                        help=f"cap on brute-force iterations (env {lattice.ENV_MAX_ITERATIONS})")
    common.add_argument("--json", action="store_true", help="machine-readable output only")

    parser = argparse.ArgumentParser(prog="hardysums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (params, _) in EVAL.items():
        p = sub.add_parser(name, parents=[common])
        for param in params:
            p.add_argument(param, type=_int)
    p = sub.add_parser("frak-s", parents=[common], help="S(a, c) of a cusp a/c or of a matrix a b c d")
    p.add_argument("args", nargs="+")
    p = sub.add_parser("intersect", parents=[common], help="signed intersection number I(x)")
    p.add_argument("x", type=_rational)
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=verify.SUITES + ("all",))
    p.add_argument("suite_bound", nargs="?", type=_int, default=None)
    p.add_argument("--report", help="also write the JSON report to this file")
    p = sub.add_parser("bench", parents=[common], help="time naive against fast implementations")
    p.add_argument("target", choices=bench.TARGETS)
    p.add_argument("size", type=_int)
    return parser


def _emit(obj):
    print(json.dumps(obj, default=str))


def cmd_eval(ns):
    t0 = time.perf_counter_ns()
    if ns.command == "frak-s":
        value, extra = _frak_s(ns)
        inputs = {"args": ns.args}
    elif ns.command == "intersect":
        value, extra = _intersect(ns)
        inputs = {"x": render(ns.x)}
    else:
        params, fn = EVAL[ns.command]
        value, extra = fn(ns)
        inputs = {p: getattr(ns, p) for p in params}
    elapsed = time.perf_counter_ns() - t0
    out = {"command": ns.command, "inputs": inputs, "value": render(value) if not isinstance(value, str) else value,
           "elapsed_ns": elapsed}
    out.update(extra)
    _emit(out)
    return 0


def cmd_verify(ns):
    bound = ns.suite_bound if ns.suite_bound is not None else (ns.bound or 10)
    reports = verify.run(ns.suite, bound)
    ok = all(r.ok for r in reports)
    doc = {"suite": ns.suite, "bound": bound, "ok": ok, "reports": [r.to_dict() for r in reports]}
    if ns.report:
        with open(ns.report, "w") as fh:
            json.dump(doc, fh, indent=2, default=str)
    if ns.json:
        _emit(doc)
    else:
        for r in reports:
            print(r.summary())
        print(f"{'OK' if ok else 'FAILED'}: {ns.suite} up to {bound}")
    return 0 if ok else 1


def cmd_bench(ns):
    result = bench.run(ns.target, ns.size, ns.max_iterations)
    out = {"command": "bench", "target": ns.target}
    out.update(result)
    if "value" in out:
        out["value"] = render(out["value"])
    _emit(out)
    return 0


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    saved = os.environ.get(lattice.ENV_MAX_ITERATIONS)
    if ns.max_iterations is not None:
        os.environ[lattice.ENV_MAX_ITERATIONS] = str(ns.max_iterations)
    try:
        if ns.command == "verify":
            return cmd_verify(ns)
        if ns.command == "bench":
            return cmd_bench(ns)
        return cmd_eval(ns)
    except (DomainError, ResourceError) as exc:
        print(f"hardysums {ns.command}: {exc}", file=sys.stderr)
        return 2
    finally:
        # main() may run in-process (tests, embedding); don't leak the cap
        if saved is None:
            os.environ.pop(lattice.ENV_MAX_ITERATIONS, None)
        else:
            os.environ[lattice.ENV_MAX_ITERATIONS] = saved


if __name__ == "__main__":
    sys.exit(main())
