import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from hardysums import kernels, _pykernels

from conftest import pure_python_env

BACKENDS = kernels.available_backends()
compiled = pytest.mark.skipif("cython" not in BACKENDS, reason="compiled kernels not built")


def test_python_always_available():
    assert "python" in BACKENDS
    assert kernels.BACKEND in BACKENDS


def test_env_forces_fallback():
    code = "from hardysums import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=pure_python_env(), capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@compiled
@settings(max_examples=300)
@given(st.integers(-10**12, 10**12), st.integers(1, 400))
def test_sums_agree(d, c):
    ck = BACKENDS["cython"]
    assert ck.dedekind_scaled(d, c) == _pykernels.dedekind_scaled(d, c)
    assert ck.s4_sum(d, c) == _pykernels.s4_sum(d, c)


@compiled
@given(st.integers(-10**9, 10**9), st.integers(-400, 400).filter(bool))
def test_s_sum_agrees(d, c):
    assert BACKENDS["cython"].s_sum(d, c) == _pykernels.s_sum(d, c)


@compiled
@given(st.integers(1, 40), st.integers(1, 40), st.integers(1, 2))
def test_triangle_agree(d, c, step):
    assert BACKENDS["cython"].count_triangle(d, c, step) == _pykernels.count_triangle(d, c, step)


@compiled
@given(st.integers(1, 25), st.integers(1, 25), st.integers(1, 25))
def test_tetra_agree(u, v, w):
    assert BACKENDS["cython"].count_tetra(u, v, w) == _pykernels.count_tetra(u, v, w)


@compiled
@given(st.integers(-200, 200), st.integers(1, 100), st.integers(1, 3000))
def test_scan_agree(a, c, bound):
    if (a + c) % 2 == 0:
        a += 1
    assert BACKENDS["cython"].scan_crossings(a, c, bound) == _pykernels.scan_crossings(a, c, bound)


@compiled
def test_big_inputs_fall_back():
    ck = BACKENDS["cython"]
    big = 10**30 + 1
    assert ck.s4_sum(big, 7) == _pykernels.s4_sum(big, 7)
    assert ck.scan_crossings(big, 2**70, 9) == _pykernels.scan_crossings(big, 2**70, 9)
