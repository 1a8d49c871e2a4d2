"""Independent reference computations used to derive expected values in tests."""

import cmath
from fractions import Fraction


def complex_value(x):
    """A CycloInt as a complex number at z = exp(2 pi i / d)."""
    z = cmath.exp(2j * cmath.pi / x.d)
    return sum(c * z ** k for k, c in enumerate(x.coeffs))


def complex_num(x):
    return complex_value(x.num) / complex_value(x.den)


def mobius(n):
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _div(a, b):
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        q[k] = a[k + len(b) - 1] / b[-1]
        for j, y in enumerate(b):
            a[k + j] -= q[k] * y
    assert not any(a), "inexact"
    return [int(x) for x in q]


def phi_mobius(d):
    """Phi_d = prod_{k | d} (x^k - 1)^mu(d/k), low degree first."""
    num, den = [1], [1]
    for k in range(1, d + 1):
        if d % k:
            continue
        f = [-1] + [0] * (k - 1) + [1]
        mu = mobius(d // k)
        if mu == 1:
            num = _mul(num, f)
        elif mu == -1:
            den = _mul(den, f)
    return tuple(_div(num, den))


def brute_inverse(a, m):
    for x in range(1, m):
        if (a * x) % m == 1:
            return x
    raise ValueError("not invertible")


def lens_class(p, q):
    """All q' in [0, p) with L(p, q') homeomorphic to L(p, q), by brute search."""
    q %= p
    inv = brute_inverse(q, p) if p > 1 else 0
    return {q, (-q) % p, inv, (-inv) % p}


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))
