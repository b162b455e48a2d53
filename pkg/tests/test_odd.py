import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from szeta.numkit import DomainError
from szeta.odd_extremal import OddExtremalPair

SMALL_GRID = [(0, 0.5, 1.0), (0, 0.75, 1.5), (1, 0.6, 1.0),
              (2, 0.9, 2.0)]


def test_parameter_validation():
    with pytest.raises(DomainError):
        OddExtremalPair(m=-1, alpha=0.6, delta=1.0)
    with pytest.raises(DomainError):
        OddExtremalPair(m=0, alpha=1.0, delta=1.0)
    with pytest.raises(DomainError):
        OddExtremalPair(m=0, alpha=0.4, delta=1.0)
    with pytest.raises(DomainError):
        OddExtremalPair(m=0, alpha=0.6, delta=0.9)


@pytest.mark.parametrize("m,alpha,delta", SMALL_GRID)
def test_target_positive_even(m, alpha, delta):
    pair = OddExtremalPair(m=m, alpha=alpha, delta=delta)
    x = np.linspace(0.01, 10, 200)
    f = pair.f_odd_vec(x)
    assert np.all(f > 0)
    assert np.allclose(pair.f_odd_vec(-x), f, rtol=1e-12)
    fe = pair.f_even_vec(x)
    assert np.allclose(pair.f_even_vec(-x), -fe, rtol=1e-12)


@pytest.mark.parametrize("m,alpha,delta", SMALL_GRID)
def test_bracketing(m, alpha, delta):
    pair = OddExtremalPair(m=m, alpha=alpha, delta=delta)
    x = np.linspace(-15, 15, 1201)
    f = pair.f_odd_vec(x)
    assert np.all(pair.g_real("+", x) >= f - 1e-9)
    assert np.all(pair.g_real("-", x) <= f + 1e-9)


@pytest.mark.parametrize("m,alpha,delta", SMALL_GRID)
def test_interpolation_nodes(m, alpha, delta):
    pair = OddExtremalPair(m=m, alpha=alpha, delta=delta)
    k = np.arange(1, 10, dtype=np.float64)
    plus = k / delta
    minus = (k - 0.5) / delta
    assert np.max(np.abs(pair.g_real("+", plus)
                         - pair.f_odd_vec(plus))) < 1e-9
    assert np.max(np.abs(pair.g_real("-", minus)
                         - pair.f_odd_vec(minus))) < 1e-9


@given(st.sampled_from(SMALL_GRID),
       st.floats(min_value=-10, max_value=10),
       st.floats(min_value=-1.5, max_value=1.5))
@settings(max_examples=10, deadline=None)
def test_conjugate_symmetry(cfg, re, im):
    m, alpha, delta = cfg
    pair = OddExtremalPair(m=m, alpha=alpha, delta=delta)
    for sign in "+-":
        v = pair.g_eval(sign, complex(re, im))
        w = pair.g_eval(sign, complex(re, -im))
        assert cmath.isclose(w, v.conjugate(), rel_tol=1e-8,
                             abs_tol=1e-10)


@pytest.mark.parametrize("m,alpha,delta", SMALL_GRID)
def test_ft_support_and_value_at_zero(m, alpha, delta):
    pair = OddExtremalPair(m=m, alpha=alpha, delta=delta)
    f_int = pair._f_integral()
    for sign, s in (("+", 1.0), ("-", -1.0)):
        assert pair.ft_g(sign, delta * 1.01) == 0.0
        v0 = pair.ft_g(sign, 0.0)
        gap = pair.l1_gap_odd(sign)
        assert v0 == pytest.approx(f_int + s * gap, rel=1e-9)
        # even in xi
        assert pair.ft_g(sign, 0.4 * delta) == pytest.approx(
            pair.ft_g(sign, -0.4 * delta), rel=1e-12)


@pytest.mark.parametrize("m,alpha,delta", SMALL_GRID)
def test_l1_gap_positive_and_ordered(m, alpha, delta):
    pair = OddExtremalPair(m=m, alpha=alpha, delta=delta)
    gp = pair.l1_gap_odd("+")
    gm = pair.l1_gap_odd("-")
    assert gp > 0 and gm > 0
    assert gm < gp


def test_gap_decreases_with_delta():
    for sign in "+-":
        gaps = [OddExtremalPair(m=0, alpha=0.75, delta=d)
                .l1_gap_odd(sign) for d in (1.0, 2.0, 3.0)]
        assert gaps[0] > gaps[1] > gaps[2]


@pytest.mark.parametrize("m,alpha,delta", SMALL_GRID)
def test_decay_envelope(m, alpha, delta):
    pair = OddExtremalPair(m=m, alpha=alpha, delta=delta)
    x = np.linspace(0.0, 80.0, 1601)
    for sign in "+-":
        K = pair.decay_envelope_const(sign)
        g = pair.g_real(sign, x)
        assert np.all(np.abs(g) <= K / (1 + x * x) + 1e-12)
