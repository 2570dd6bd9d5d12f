"""Level-1 logarithm against an independent computation from the Laurent series of wp.

The model y^2 = 4x^3 - g2 x - g3 with parameter t = -2 wp/wp' has logarithm u(t),
found by Lagrange inversion. The library reports a_n with log = sum a_n s^n / n in
the parameter s = t/2, so a_n = n 2^(n-1) [t^n] u.
"""

from collections import defaultdict
from fractions import Fraction

import pytest

import fbeta

N = 25


def _add(a, b):
    r = defaultdict(Fraction, a)
    for k, v in b.items():
        r[k] += v
    return {k: v for k, v in r.items() if v}


def _mul(a, b):
    r = defaultdict(Fraction)
    for (i, j), v in a.items():
        for (k, l), w in b.items():
            r[(i + k, j + l)] += v * w
    return {k: v for k, v in r.items() if v}


def _scale(a, s):
    return {k: v * s for k, v in a.items() if v * s}


def _series_mul(a, b):
    r = [{} for _ in range(N + 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b[: N + 1 - i]):
            if x and y:
                r[i + j] = _add(r[i + j], _mul(x, y))
    return r


def _series_inverse(a):
    a0 = a[0][(0, 0)]
    r = [{} for _ in range(N + 1)]
    r[0] = {(0, 0): 1 / a0}
    for n in range(1, N + 1):
        acc = {}
        for k in range(1, n + 1):
            if a[k] and r[n - k]:
                acc = _add(acc, _mul(a[k], r[n - k]))
        r[n] = _scale(acc, -1 / a0)
    return r


def _oracle():
    # wp = u^-2 + sum_{k>=2} c_k u^(2k-2); keys (i, j) mean g2^i g3^j
    c = {2: {(1, 0): Fraction(1, 20)}, 3: {(0, 1): Fraction(1, 28)}}
    for k in range(4, N // 2 + 2):
        acc = {}
        for m in range(2, k - 1):
            acc = _add(acc, _mul(c[m], c[k - m]))
        c[k] = _scale(acc, Fraction(3, (2 * k + 1) * (k - 3)))
    wp = [{} for _ in range(N + 1)]  # u^2 wp
    wd = [{} for _ in range(N + 1)]  # u^3 wp'
    wp[0] = {(0, 0): Fraction(1)}
    wd[0] = {(0, 0): Fraction(-2)}
    for k, v in c.items():
        if 2 * k <= N:
            wp[2 * k] = v
            wd[2 * k] = _scale(v, 2 * k - 2)
    ratio = [_scale(x, Fraction(-1, 2)) for x in _series_mul(wd, _series_inverse(wp))]  # u / t
    out = {}
    power = [{(0, 0): Fraction(1)}] + [{} for _ in range(N)]
    for n in range(1, N + 1):
        power = _series_mul(power, ratio)
        out[n] = {k: v / n for k, v in power[n - 1].items()}  # [t^n] u
    return out




@pytest.fixture(scope="module")
def oracle():
    return _oracle()


@pytest.mark.parametrize("n", [1, 5, 11, 17, 25])
def test_log_coefficients_match_wp(oracle, n):
    expected = _scale(oracle[n], n * 2 ** (n - 1))
    got = fbeta.log_coefficient(5, 1, n)
    # compare by evaluating at a few rational points; avoids parsing the polynomial
    for g2, g3 in [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)), (Fraction(2), Fraction(3)), (Fraction(-1, 3), Fraction(5, 7))]:
        want = sum(v * g2**i * g3**j for (i, j), v in expected.items())
        have = eval(got.replace("^", "**"), {"g2": g2, "g3": g3})  # noqa: S307
        assert have == want, (n, got, expected)


def test_unnormalized_a11_and_a25_signs(oracle):
    a11 = _scale(oracle[11], 11 * 2**10)
    assert a11 == {(1, 1): Fraction(1280)}  # unnormalized -2560 g2 g3
    a25 = _scale(oracle[25], 25 * 2**24)
    assert a25 == {(6, 0): 3784704, (3, 2): -129761280, (0, 4): 32440320}
