"""Timing comparisons: naive against fast formulas, compiled against pure-Python kernels."""

from math import gcd
import time

from hardysums import kernels, lattice
from hardysums.dedekind import dedekind_fast, dedekind_naive
from hardysums.exact import DomainError

TARGETS = ("dedekind-naive-vs-fast", "tetra-brute-vs-mordell", "kernels")


def _time(fn, *args, repeat=1):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        value = fn(*args)
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def _coprime_partner(c):
    d = max(1, (c * 5) // 8)
    while gcd(d, c) != 1:
        d += 1
    return d


def _coprime_triple(n):
    u, v = n, n + 1
    w = n + 2
    while gcd(u, w) != 1 or gcd(v, w) != 1:
        w += 1
    return u, v, w


def bench_dedekind(size, max_iterations=None):
    c = size
    if c < 1:
        raise DomainError("size must be >= 1")
    lattice._guard(c, max_iterations, f"naive Dedekind sum with c = {c}")
    d = _coprime_partner(c)
    slow, t_slow = _time(dedekind_naive, d, c)
    fast, t_fast = _time(dedekind_fast, d, c, repeat=5)
    return {
        "inputs": {"d": d, "c": c},
        "naive_ns": t_slow,
        "fast_ns": t_fast,
        "speedup": t_slow / max(t_fast, 1),
        "agree": slow == fast,
        "value": fast,
    }


def bench_tetra(size, max_iterations=None):
    u, v, w = _coprime_triple(size)
    brute, t_brute = _time(lattice.count_tetra_brute, u, v, w, max_iterations)
    closed, t_closed = _time(lattice.count_tetra_mordell, u, v, w, repeat=5)
    return {
        "inputs": {"u": u, "v": v, "w": w},
        "brute_ns": t_brute,
        "mordell_ns": t_closed,
        "speedup": t_brute / max(t_closed, 1),
        "agree": brute == closed,
        "value": closed,
    }


def bench_kernels(size, max_iterations=None):
    """Compiled against pure-Python kernels on the same brute-force workloads."""
    backends = kernels.available_backends()
    c = size
    lattice._guard(c, max_iterations, "kernel benchmark")
    d = _coprime_partner(c)
    side = max(2, int(round(size ** (1 / 3))))
    u, v, w = _coprime_triple(side)
    work = {
        "dedekind_scaled": (d, c),
        "s4_sum": (d | 1, c),
        "count_tetra": (u, v, w),
        "scan_crossings": (3, 4, size),
    }
    rows = {}
    for name, args in work.items():
        row = {}
        values = set()
        for backend, mod in backends.items():
            value, dt = _time(getattr(mod, name), *args)
            row[f"{backend}_ns"] = dt
            values.add(repr(value))
        if "cython" in backends:
            row["speedup"] = row["python_ns"] / max(row["cython_ns"], 1)
        row["agree"] = len(values) == 1
        rows[name] = row
    return {
        "inputs": {"size": size},
        "backends": sorted(backends),
        "kernels": rows,
        "agree": all(r["agree"] for r in rows.values()),
    }


def run(target, size, max_iterations=None):
    if target == "dedekind-naive-vs-fast":
        return bench_dedekind(size, max_iterations)
    if target == "tetra-brute-vs-mordell":
        return bench_tetra(size, max_iterations)
    if target == "kernels":
        return bench_kernels(size, max_iterations)
    raise DomainError(f"unknown benchmark target {target!r}; expected one of {', '.join(TARGETS)}")

