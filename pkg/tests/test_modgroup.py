from fractions import Fraction
import time

import pytest
from hypothesis import given, strategies as st

from hardysums.exact import INF, DomainError
from hardysums.modgroup import (
    I,
    S,
    T,
    T2,
    V,
    GeneratorWord,
    Mat,
    compose_word,
    cusp,
    decompose_theta,
    in_gamma0_2,
    in_gamma_theta,
    moebius,
    random_theta_matrix,
    random_theta_word,
)


def test_determinant_checked():
    with pytest.raises(DomainError):
        Mat(1, 1, 1, 1)


def test_group_ops():
    assert S @ S == -I
    assert (S @ T) ** 3 == -I
    assert T ** 2 == T2
    assert T2 ** -3 == Mat(1, -6, 0, 1)
    assert V @ V.inv() == I


def test_membership():
    assert in_gamma_theta(S) and in_gamma_theta(T2)
    assert not in_gamma_theta(T) and not in_gamma_theta(V)
    assert in_gamma0_2(V) and in_gamma0_2(T2)
    assert not in_gamma0_2(S)


@pytest.mark.parametrize(
    "A,x,y",
    [(S, INF, Fraction(0)), (S, Fraction(0), INF), (T2, Fraction(1, 3), Fraction(7, 3)), (S, Fraction(1, 2), Fraction(-2)), (T, INF, INF)],
)
def test_moebius(A, x, y):
    assert moebius(A, x) == y


def test_moebius_composes(rng):
    x = Fraction(3, 7)
    for _ in range(200):
        A = random_theta_matrix(rng, 6)
        B = random_theta_matrix(rng, 6)
        assert moebius(A @ B, x) == moebius(A, moebius(B, x))
    assert cusp(Mat(3, 2, 4, 3)) == Fraction(3, 4)


@pytest.mark.parametrize(
    "A,sign,exps",
    [(I, 1, (0,)), (T2, 1, (1,)), (S, 1, (0, 0)), (-T2, -1, (1,)), (T2 @ S @ T2.inv(), 1, (1, -1))],
)
def test_decompose_examples(A, sign, exps):
    w = decompose_theta(A)
    assert (w.sign, w.exponents) == (sign, exps)
    assert compose_word(w) == A


def test_word_text():
    assert str(GeneratorWord(-1, (1,))) == "-T^2"
    assert str(GeneratorWord(1, (0, 0))) == "S"
    assert str(GeneratorWord(1, (0,))) == "I"
    assert compose_word(GeneratorWord(-1, (1,))) == -T2
    with pytest.raises(DomainError):
        GeneratorWord(0, (1,))


def test_decompose_rejects_outside():
    with pytest.raises(DomainError):
        decompose_theta(T)


@given(st.randoms(use_true_random=False), st.integers(0, 30), st.integers(1, 50))
def test_decompose_round_trip(r, letters, maxexp):
    A = compose_word(random_theta_word(r, letters, maxexp))
    w = decompose_theta(A)
    assert compose_word(w) == A
    assert w.is_normal()


def huge_word(rng, digits=40):
    # 12 letters: S alternating with T^(2n), |n| about 10^digits
    exps = [rng.choice((1, -1)) * rng.randrange(10 ** (digits - 1), 10**digits) for _ in range(6)]
    return GeneratorWord(rng.choice((1, -1)), tuple(exps) + (0,))


def test_decompose_huge_entries(rng):
    for _ in range(30):
        word = huge_word(rng)
        A = compose_word(word)
        assert max(abs(e) for e in A.entries()) > 10**200
        t0 = time.perf_counter()
        w = decompose_theta(A)
        assert compose_word(w) == A
        assert time.perf_counter() - t0 < 0.01
        assert w == word
