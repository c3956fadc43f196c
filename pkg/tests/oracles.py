"""Independent reference computations used to freeze expected values.

Everything here works in the monomial basis theta^k with plain Fraction
lists and never touches thetacalc's cup product or Newton recursion.
"""

import random
from fractions import Fraction
from math import factorial


def to_monomial(divided):
    return [Fraction(x) / factorial(k) for k, x in enumerate(divided)]


def to_divided(monomial):
    return [Fraction(x) * factorial(k) for k, x in enumerate(monomial)]


def poly_mul(a, b):
    n = len(a)
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        for j in range(n - i):
            out[i + j] += x * b[j]
    return out


def series_log(c):
    """log of a truncated series with constant term 1."""
    n = len(c)
    assert c[0] == 1
    x = [Fraction(0)] + list(c[1:])
    out = [Fraction(0)] * n
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for m in range(1, n):
        power = poly_mul(power, x)
        for k in range(n):
            out[k] += Fraction((-1) ** (m - 1), m) * power[k]
    return out


def series_exp(x):
    n = len(x)
    assert x[0] == 0
    out = [Fraction(1)] + [Fraction(0)] * (n - 1)
    power = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for m in range(1, n):
        power = poly_mul(power, x)
        for k in range(n):
            out[k] += power[k] / factorial(m)
    return out


def ch_from_c_by_log(rank, c_divided):
    """ch_k = (-1)^(k-1) [log c]_k / (k-1)!, returned in the divided basis."""
    log = series_log(to_monomial(c_divided))
    mono = [Fraction(rank)] + [
        (-1) ** (k - 1) * log[k] / factorial(k - 1) for k in range(1, len(log))
    ]
    return to_divided(mono)


def c_from_ch_by_exp(ch_divided):
    mono = to_monomial(ch_divided)
    x = [Fraction(0)] + [
        (-1) ** (k - 1) * factorial(k - 1) * mono[k] for k in range(1, len(mono))
    ]
    return to_divided(series_exp(x))


def from_roots(roots, g):
    """(c, ch) in the divided basis for a bundle with Chern roots t_i * theta."""
    c = [Fraction(1)] + [Fraction(0)] * g
    for t in roots:
        c = poly_mul(c, [Fraction(1), Fraction(t)] + [Fraction(0)] * (g - 1))
    ch = [sum((Fraction(t) ** k for t in roots), Fraction(0)) for k in range(g + 1)]
    return to_divided(c), ch


def random_rational(rng, bound=6, den=4):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_coeffs(rng, g, bound=6, den=4):
    return [random_rational(rng, bound, den) for _ in range(g + 1)]


def random_seeded(seed):
    return random.Random(seed)
