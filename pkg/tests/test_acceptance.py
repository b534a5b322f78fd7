"""Acceptance gate: each criterion at full size, every comparison exact.

The terminal summary prints one PASS/FAIL line per test (see conftest.py);
run with ``-s`` to also see the per-criterion detail lines.
"""

from fractions import Fraction
import random
import time

from hardysums import geodesic, hardy, lattice, verify
from hardysums.dedekind import dedekind_fast, dedekind_naive, dedekind_symbol, rademacher_cocycle
from hardysums.exact import gcd, sign
from hardysums.geodesic import DIRECTED
from hardysums.modgroup import S, T2, GeneratorWord, compose_word, cusp, decompose_theta, random_theta_matrix

SEED = 1729


def report(n, text):
    print(f"\n[criterion {n}] {text}")


def geomchar_grid():
    return list(verify.q_theta_grid(30, 60))


def test_criterion_01_reciprocity_and_fast_dedekind():
    t0 = time.perf_counter()
    pairs = 0
    for d in range(1, 201):
        for c in range(1, 201):
            if gcd(d, c) != 1:
                continue
            naive = dedekind_naive(d, c)
            assert dedekind_fast(d, c) == naive, (d, c)
            assert naive + dedekind_naive(c, d) == Fraction(d * d + c * c + 1, 12 * c * d) - Fraction(1, 4), (d, c)
            pairs += 1
    elapsed = time.perf_counter() - t0
    report(1, f"{pairs} coprime pairs, {elapsed:.2f} s")
    assert elapsed < 10


def test_criterion_02_s4_through_dedekind():
    t0 = time.perf_counter()
    pairs = 0
    for c in range(1, 501):
        for d in range(-2 * c + 1, 2 * c, 2):
            if gcd(d, c) == 1:
                assert hardy.s4_naive(d, c) == hardy.s4_via_dedekind(d, c), (d, c)
                pairs += 1
    elapsed = time.perf_counter() - t0
    report(2, f"{pairs} pairs (d odd over two periods), {elapsed:.2f} s")
    assert elapsed < 30


def test_criterion_03_mordell():
    t0 = time.perf_counter()
    n = 0
    for u in range(1, 4001):
        for v in range(1, 4000 // u + 1):
            if gcd(u, v) != 1:
                continue
            for w in range(1, 4000 // (u * v) + 1):
                if gcd(u, w) == 1 and gcd(v, w) == 1:
                    assert lattice.count_tetra_mordell(u, v, w) == lattice.count_tetra_brute(u, v, w), (u, v, w)
                    n += 1
    assert lattice.count_tetra_mordell(1, 3, 2) == 4
    elapsed = time.perf_counter() - t0
    report(3, f"{n} pairwise coprime triples, {elapsed:.2f} s")
    assert elapsed < 60


def test_criterion_04_main_theorem():
    part1, part2 = set(), set()
    for d in range(1, 61):
        for c in range(1, 61):
            if gcd(d, c) != 1:
                continue
            assert lattice.count_triangle_z2_closed(d, c) == lattice.count_triangle_z2_brute(d, c)
            r = lattice.triangle_2z2_report(d, c)
            assert r.corrected_ok, (d, c)
            if d % 2 and c % 2:
                part1.add(r.delta)
            else:
                part2.add(r.delta * 8 * c * d)
    rep = verify.verify_mainthm(60)
    assert rep.ok
    shapes = [e["delta"] for e in rep.errata]
    report(4, f"part 1 printed - brute in {sorted(part1)}; part 2 (printed - brute)*8cd in {sorted(part2)}")
    assert part1 == {Fraction(-3, 8)}
    assert part2 == {-1}
    assert all(e["structured"] for e in rep.errata)
    assert shapes[0].startswith("printed - brute = -3/8 in all")
    assert shapes[1].startswith("printed - brute = -1/(8cd) in all")


def test_criterion_05_mordell_even_slab():
    n = 0
    for d in range(2, 601, 2):
        for c in range(1, 600 // d + 1, 2):
            if gcd(d, c) != 1:
                continue
            r = lattice.count_tetra_mordell2(d, c)
            assert r.delta == Fraction(-1, 8 * c * d), (d, c)
            assert r.corrected_ok, (d, c)
            n += 1
    report(5, f"{n} pairs with cd <= 600")


def test_criterion_06_hardy_lemmas():
    bad = lattice.verify_lemma_identities(100)
    report(6, f"{len(bad)} violations for c, d <= 100")
    assert bad == []


def test_criterion_07_intersection_properties():
    t0 = time.perf_counter()
    grid = geomchar_grid()
    I = {x: geodesic.intersection_number(x) for x in grid}

    def value(x):
        return I[x] if x in I else geodesic.intersection_number(x)

    assert geodesic.intersection_number(Fraction(0)) == 0
    for x in grid:
        assert value(-x) == -I[x], x
        assert value(x + 2) == I[x], x
        if x:
            assert I[x] + value(1 / x) == sign(x), x
    elapsed = time.perf_counter() - t0
    report(7, f"{len(grid)} cusps, properties (1)-(3) and I(0) = 0, {elapsed:.2f} s")
    assert elapsed < 60


def test_criterion_07_three_quarters_two_crossings():
    edges = geodesic.enumerate_crossings(Fraction(3, 4))
    directed = [e for e in edges if e.orientation == DIRECTED]
    report(7, f"x = 3/4 crosses {[e.to_json() for e in edges]}; {len(directed)} single-orientation edges")
    assert len(directed) == 2


def test_criterion_08_hardy_sum_is_intersection_number():
    rng = random.Random(SEED)
    for _ in range(500):
        A = random_theta_matrix(rng, 8)
        assert hardy.frak_s(A) == geodesic.intersection_number(cusp(A)), A
    report(8, "500 words of length <= 8")


def test_criterion_09_cocycle():
    rng = random.Random(SEED + 9)
    inverses = 0
    for i in range(2000):
        A = random_theta_matrix(rng, 12)
        if i % 10 == 0:
            B = A.inv()
            inverses += 1
        else:
            B = random_theta_matrix(rng, 12)
        lhs = hardy.frak_s(A @ B) - hardy.frak_s(A) - hardy.frak_s(B)
        assert lhs == rademacher_cocycle(A, B), (A, B)
        assert hardy.frak_s(A.inv()) == -hardy.frak_s(A), A
    report(9, f"2000 pairs of length <= 12, {inverses} with B = A^-1")


def _phi_minus_s(A):
    return dedekind_symbol(A) - hardy.frak_s(A)


def test_criterion_10_phi_minus_s_homomorphism():
    rng = random.Random(SEED + 10)
    misses = 0
    for _ in range(2000):
        A = random_theta_matrix(rng, 12)
        B = random_theta_matrix(rng, 12)
        misses += _phi_minus_s(A @ B) != _phi_minus_s(A) + _phi_minus_s(B)
    report(10, f"Phi - frak_s additive on {2000 - misses}/2000 pairs")
    assert misses == 0


def test_criterion_10_generator_values():
    report(10, f"(Phi - frak_s)(T^2) = {_phi_minus_s(T2)}, (Phi - frak_s)(S) = {_phi_minus_s(S)}")
    assert _phi_minus_s(T2) == 2
    assert _phi_minus_s(S) == 0


def test_criterion_10_shift_relation():
    n = 0
    for c in range(-50, 51):
        for a in range(-101, 102, 2):
            if gcd(a, c) == 1:
                assert hardy.frak_s_column(a + c, c) == -hardy.frak_s4(a, c), (a, c)
                n += 1
    report(10, f"frak_s(x + 1) = -frak_s4(x) on {n} cusps with |c| <= 50")


def test_criterion_11_fast_dedekind_speedup():
    c = 1000003
    d = 618034
    best_naive = min(_timed(dedekind_naive, d, c) for _ in range(3))
    best_fast = min(_timed(dedekind_fast, d, c) for _ in range(20))
    assert dedekind_naive(d, c) == dedekind_fast(d, c)
    ratio = best_naive / best_fast
    report(11, f"c = {c}: naive {best_naive * 1e3:.3f} ms, fast {best_fast * 1e6:.1f} us, {ratio:.0f}x")
    assert ratio >= 100


def test_criterion_11_decompose_huge_words():
    rng = random.Random(SEED + 11)
    worst = 0.0
    for _ in range(100):
        exps = tuple(rng.choice((1, -1)) * rng.randrange(10**49, 10**50) for _ in range(6)) + (0,)
        word = GeneratorWord(rng.choice((1, -1)), exps)
        A = compose_word(word)
        assert max(len(str(abs(e))) for e in A.entries()) >= 200
        t0 = time.perf_counter()
        back = decompose_theta(A)
        assert compose_word(back) == A
        worst = max(worst, time.perf_counter() - t0)
        assert back == word
    report(11, f"100 twelve-letter words, 200+ digit entries, worst round trip {worst * 1e3:.3f} ms")
    assert worst < 0.01


def test_criterion_12_doubled_bound():
    changed = 0
    grid = geomchar_grid()
    for x in grid:
        b = geodesic.crossing_bound(x)
        changed += geodesic.intersection_number(x, b) != geodesic.intersection_number(x, 2 * b)
    report(12, f"{changed} of {len(grid)} values change when the crossing bound is doubled")
    assert changed == 0


def _timed(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0
