"""Reference values frozen into the C++ unit tests.

Everything here is computed with mpmath at 50 digits or with exact
rationals, independently of the C++ implementation. Rerun with
`python3 tests/oracle/reference_values.py` to regenerate.
"""
from fractions import Fraction
from itertools import product
from math import comb, factorial

import mpmath as mp

mp.mp.dps = 50


def show(label, value):
    print(f"{label} = {mp.nstr(value, 20)}")


# Generalized multinomial instance used by the monotone tests.
gamma = [mp.mpf("0.7"), mp.mpf("1.3"), mp.mpf("2.0")]
x = [mp.mpf("0.2"), mp.mpf("0.3"), mp.mpf("0.5")]
M = sum(gamma)


def log_g(a):
    v = mp.loggamma(a * M + 1)
    for g, xi in zip(gamma, x):
        v += -mp.loggamma(a * g + 1) + a * g * mp.log(xi)
    return v


def h_deriv(a, n):
    return -mp.diff(log_g, a, n)


for a in [mp.mpf("0.37"), mp.mpf("4.5")]:
    show(f"log_g({a})", log_g(a))
    for n in range(1, 8):
        show(f"h^({n})({a})", h_deriv(a, n))
show("h'(1e4)", h_deriv(mp.mpf(10) ** 4, 1))
kl = sum(g * mp.log((g / M) / xi) for g, xi in zip(gamma, x))
show("kl", kl)


def j_eval(u, y):
    return 1 / (y - 1) - sum(1 / (y ** (1 / ui) - 1) for ui in u)


show("J((0.3,0.7), 1+1e-6)", j_eval([mp.mpf("0.3"), mp.mpf("0.7")], 1 + mp.mpf("1e-6")))
show("J((0.2,0.3,0.5), 1e6)", j_eval([mp.mpf("0.2"), mp.mpf("0.3"), mp.mpf("0.5")], mp.mpf(10) ** 6))
show("J((0.25,0.25,0.5), 1.5)", j_eval([mp.mpf("0.25"), mp.mpf("0.25"), mp.mpf("0.5")], mp.mpf("1.5")))


def log_coeff(gam, a):
    return mp.loggamma(a * sum(gam) + 1) - sum(mp.loggamma(a * g + 1) for g in gam)


show("log_coeff((0.7,1.3,2.0), 0.37)", log_coeff(gamma, mp.mpf("0.37")))
show("log_coeff((0.7,1.3,2.0), 13.1)", log_coeff(gamma, mp.mpf("13.1")))

for m in [1, 10, 100, 10 ** 4]:
    ratio = mp.gamma(m + 1) / (mp.sqrt(m) * mp.gamma(m + mp.mpf(1) / 2))
    show(f"gamma_ratio_residual({m})", m * m * abs(ratio - 1 - mp.mpf(1) / (8 * m)))


def lattice(d, m):
    for k in product(range(m + 1), repeat=d):
        if sum(k) <= m:
            yield list(k) + [m - sum(k)]


def multinomial(m, full):
    v = factorial(m)
    for k in full:
        v //= factorial(k)
    return v


def s_integral_exact(r, s, m, d):
    total = Fraction(0)
    q = r + s
    for full in lattice(d, m):
        num = multinomial(r * m, [r * k for k in full]) * multinomial(s * m, [s * k for k in full])
        dirichlet = Fraction(1)
        for k in full:
            dirichlet *= factorial(q * k)
        total += num * dirichlet / factorial(q * m + d)
    return total


for (r, s, m, d) in [(1, 2, 3, 1), (2, 3, 4, 2), (1, 1, 5, 3)]:
    v = s_integral_exact(r, s, m, d)
    print(f"s_integral_exact({r},{s},{m},{d}) = {v} = {mp.nstr(mp.mpf(v.numerator) / v.denominator, 20)}")


def s_eval(r, s, m, xs):
    bary = xs + [1 - sum(xs)]
    total = Fraction(0)
    for full in lattice(len(xs), m):
        p1 = multinomial(r * m, [r * k for k in full])
        p2 = multinomial(s * m, [s * k for k in full])
        for k, xi in zip(full, bary):
            p1 *= xi ** (r * k)
            p2 *= xi ** (s * k)
        total += p1 * p2
    return total


v = s_eval(2, 3, 5, [Fraction(1, 5), Fraction(3, 10)])
show("s_eval(2,3,5,(0.2,0.3))", mp.mpf(v.numerator) / v.denominator)
v = s_eval(1, 1, 7, [Fraction(1, 10), Fraction(1, 5), Fraction(3, 10)])
show("s_eval(1,1,7,(0.1,0.2,0.3))", mp.mpf(v.numerator) / v.denominator)


def phi(r, s, xs):
    bary = [mp.mpf(v) for v in xs] + [1 - sum(mp.mpf(v) for v in xs)]
    d = len(xs)
    g = mp.mpf(__import__("math").gcd(r, s))
    det = (r * s * (r + s)) ** d
    for b in bary:
        det *= b
    return g ** d / mp.sqrt((2 * mp.pi) ** d * det)


show("phi(2,3,(0.2,0.3))", phi(2, 3, ["0.2", "0.3"]))

# Central-binomial lattice sums for a few (d, m).
for d, m in [(2, 1), (3, 7), (4, 60)]:
    lhs = sum(
        __import__("math").prod(comb(2 * k, k) for k in full) for full in lattice(d, m)
    ) if (d, m) != (4, 60) else None
    rhs = Fraction(4) ** m
    for j in range(1, m + 1):
        rhs *= Fraction(d - 1 + 2 * j, 2 * j)
    print(f"central({d},{m}): lhs={lhs} rhs={rhs}")


# lnGamma table. Arguments go through float() so the reference is taken at
# the exact binary value the C++ test passes in.
for z in [1e-6, 1e-3, 0.1, 0.5, 0.9, 1.0000001, 1.25, 1.5, 1.75, 2.0000001,
          2.5, 3.7, 7.5, 11.9, 12.5, 25.0, 100.0, 1234.5, 1e6, 1e9, 1e12]:
    show(f"log_gamma({z!r})", mp.loggamma(mp.mpf(float(z))))
