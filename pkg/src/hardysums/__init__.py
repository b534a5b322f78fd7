"""Exact Dedekind and Hardy sums, lattice-point counts and theta-group intersection numbers."""

from hardysums.dedekind import dedekind_fast, dedekind_naive, dedekind_symbol, rademacher_cocycle
from hardysums.exact import INF, DomainError, ResourceError, floor_q, gcd, sawtooth, sign
from hardysums.geodesic import crossing_bound, enumerate_crossings, intersection_number
from hardysums.hardy import chi_theta, frak_s, frak_s4, s4_naive, s4_via_dedekind, s_naive
from hardysums.kernels import BACKEND
from hardysums.modgroup import S, T, T2, V, GeneratorWord, Mat, compose_word, decompose_theta, moebius

__version__ = "0.1.0"
