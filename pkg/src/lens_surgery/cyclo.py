"""Exact arithmetic in Z[zeta_d] and Q(zeta_d).

Elements of Z[zeta_d] are stored in the power basis 1, z, ..., z^(phi(d)-1)
after reduction modulo the d-th cyclotomic polynomial, so ring equality is
plain coefficient comparison.  Field elements are numerator/denominator
pairs compared by cross multiplication.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Optional, Tuple


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> Tuple[int, ...]:
    """Coefficients (lowest degree first) of the d-th cyclotomic polynomial.

    Computed as (x^d - 1) divided exactly by Phi_e for every proper divisor e.
    """
    if d < 1:
        raise ValueError(f"cyclotomic_polynomial needs d >= 1, got {d}")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly = _divide_monic(poly, cyclotomic_polynomial(e))
    return tuple(poly)


def _divide_monic(num: list, den: Tuple[int, ...]) -> list:
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j in range(dn + 1):
                num[k - dn + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quot


@lru_cache(maxsize=None)
def totient(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def units_mod(d: int) -> list:
    """Residues in [1, d) coprime to d."""
    return [k for k in range(1, d) if gcd(k, d) == 1]


def _reduce(d: int, coeffs: Iterable[int]) -> Tuple[int, ...]:
    # fold exponents mod d first (z^d = 1), then reduce mod Phi_d
    folded = [0] * d
    for k, c in enumerate(coeffs):
        if c:
            folded[k % d] += c
    phi = cyclotomic_polynomial(d)
    n = len(phi) - 1
    for k in range(d - 1, n - 1, -1):
        c = folded[k]
        if c:
            base = k - n
            for j in range(n):
                if phi[j]:
                    folded[base + j] -= c * phi[j]
            folded[k] = 0
    return tuple(folded[:n])


class CycloInt:
    """An element of Z[zeta_d] in the reduced power basis."""

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Iterable[int] = (), *, reduced: bool = False):
        if d < 2:
            raise ValueError(f"root-of-unity order must be >= 2, got {d}")
        self.d = d
        if reduced:
            self.coeffs = tuple(coeffs)
            if len(self.coeffs) != totient(d):
                raise ValueError("reduced coefficient vector has the wrong length")
        else:
            self.coeffs = _reduce(d, coeffs)

    @classmethod
    def from_int(cls, d: int, c: int) -> "CycloInt":
        return cls(d, [c])

    @classmethod
    def zeta(cls, d: int, m: int = 1) -> "CycloInt":
        """zeta_d ** m for any integer m."""
        m %= d
        return cls(d, [0] * m + [1])

    @classmethod
    def from_exponents(cls, d: int, terms: Mapping[int, int]) -> "CycloInt":
        """Sum of c * zeta^e over the mapping e -> c (negative e allowed)."""
        folded = [0] * d
        for e, c in terms.items():
            folded[e % d] += c
        return cls(d, folded)

    def _check(self, other: "CycloInt") -> None:
        if self.d != other.d:
            raise ValueError(f"mismatched root orders {self.d} and {other.d}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CycloInt.from_int(self.d, other)
        self._check(other)
        return CycloInt(self.d, [a + b for a, b in zip(self.coeffs, other.coeffs)], reduced=True)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = CycloInt.from_int(self.d, other)
        self._check(other)
        return CycloInt(self.d, [a - b for a, b in zip(self.coeffs, other.coeffs)], reduced=True)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycloInt(self.d, [-a for a in self.coeffs], reduced=True)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloInt(self.d, [other * a for a in self.coeffs], reduced=True)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycloInt(self.d, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers live in CycloNum")
        result = CycloInt.from_int(self.d, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycloInt.from_int(self.d, other)
        if not isinstance(other, CycloInt):
            return NotImplemented
        return self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def times_zeta(self, m: int = 1) -> "CycloInt":
        """Multiply by zeta^m using shifts instead of a full product."""
        m %= self.d
        phi = cyclotomic_polynomial(self.d)
        n = len(phi) - 1
        c = list(self.coeffs)
        for _ in range(m):
            top = c[-1]
            c = [0] + c[:-1]
            if top:
                for j in range(n):
                    c[j] -= top * phi[j]
        return CycloInt(self.d, c, reduced=True)

    def conjugate(self, a: int) -> "CycloInt":
        """Galois image under zeta -> zeta^a (gcd(a, d) = 1)."""
        if gcd(a, self.d) != 1:
            raise ValueError(f"{a} is not a unit mod {self.d}")
        folded = [0] * self.d
        for k, c in enumerate(self.coeffs):
            folded[(k * a) % self.d] += c
        return CycloInt(self.d, folded)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __repr__(self):
        return f"CycloInt({self.d}, {list(self.coeffs)})"

    def __str__(self):
        return format_cyclo_int(self)


def format_cyclo_int(x: CycloInt, var: str = "z") -> str:
    parts = []
    for k in range(len(x.coeffs) - 1, -1, -1):
        c = x.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def norm(x: CycloInt) -> int:
    """Field norm from Q(zeta_d) to Q, as the product of all Galois conjugates."""
    prod = x
    for a in units_mod(x.d)[1:]:
        prod = prod * x.conjugate(a)
    value = prod.coeffs[0]
    if any(prod.coeffs[1:]):
        raise ArithmeticError("norm is not rational; arithmetic is broken")
    return value


class CycloNum:
    """An element of Q(zeta_d) held as num/den with den != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if isinstance(num, int):
            if not isinstance(den, CycloInt):
                raise TypeError("need a CycloInt to fix the root order")
            num = CycloInt.from_int(den.d, num)
        if isinstance(den, int):
            den = CycloInt.from_int(num.d, den)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("CycloNum with zero denominator")
        self.num = num
        self.den = den

    @property
    def d(self) -> int:
        return self.num.d

    def _lift(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, CycloInt)):
            return CycloNum(other if isinstance(other, CycloInt) else CycloInt.from_int(self.d, other))
        raise TypeError(f"cannot combine CycloNum with {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        return CycloNum(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return CycloNum(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return CycloNum(-self.num, self.den)

    def __mul__(self, other):
        o = self._lift(other)
        return CycloNum(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def inverse(self) -> "CycloNum":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_d)")
        return CycloNum(self.den, self.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        if o.d != self.d:
            return False
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def normalized(self) -> Tuple[CycloInt, int]:
        """Unique form c/m with c in Z[zeta], m > 0 and gcd(content(c), m) = 1."""
        # den^-1 = (product of the other conjugates of den) / norm(den)
        cofactor = CycloInt.from_int(self.d, 1)
        for a in units_mod(self.d)[1:]:
            cofactor = cofactor * self.den.conjugate(a)
        m = (self.den * cofactor).coeffs[0]
        c = self.num * cofactor
        g = gcd(c.content(), m)
        if m < 0:
            g = -g
        return CycloInt(self.d, [x // g for x in c.coeffs], reduced=True), m // g

    def __repr__(self):
        return f"CycloNum({self.num!r}, {self.den!r})"

    def __str__(self):
        c, m = self.normalized()
        body = format_cyclo_int(c)
        if m == 1:
            return body
        return f"({body})/{m}" if " " in body else f"{body}/{m}"


def as_cyclo_num(x) -> CycloNum:
    return x if isinstance(x, CycloNum) else CycloNum(x)


def invert(a) -> CycloNum:
    return as_cyclo_num(a).inverse()


class UnitWitness(NamedTuple):
    """Certifies A = sign * zeta^m * B."""

    sign: int
    m: int


def unit_equivalent(A, B) -> Optional[UnitWitness]:
    """Search sign in {+1, -1} and m in [0, d) for A = sign * zeta^m * B."""
    A, B = as_cyclo_num(A), as_cyclo_num(B)
    if A.d != B.d:
        raise ValueError(f"mismatched root orders {A.d} and {B.d}")
    a_zero, b_zero = A.is_zero(), B.is_zero()
    if a_zero and b_zero:
        return UnitWitness(1, 0)
    if a_zero or b_zero:
        return None
    lhs = A.num * B.den
    rhs = B.num * A.den
    neg = -lhs
    for m in range(A.d):
        if rhs == lhs:
            return UnitWitness(1, m)
        if rhs == neg:
            return UnitWitness(-1, m)
        rhs = rhs.times_zeta()
    return None


def unit_class_key(x: CycloInt) -> Tuple[int, ...]:
    """Smallest coefficient vector among all sign * zeta^m * x.

    Two cyclotomic integers are unit-equivalent exactly when their keys agree.
    """
    best = None
    cur = x
    for _ in range(x.d):
        for cand in (cur.coeffs, tuple(-c for c in cur.coeffs)):
            if best is None or cand < best:
                best = cand
        cur = cur.times_zeta()
    return best


def eval_at_root(f, a: int, d: int) -> CycloInt:
    """Evaluate a one-variable Laurent polynomial at zeta_d ** a.

    ``f`` is either a one-variable MultiLaurent or a mapping exponent -> coeff.
    """
    if d < 2:
        raise ValueError(f"root-of-unity order must be >= 2, got {d}")
    terms = getattr(f, "terms", f)
    folded = [0] * d
    for e, c in terms.items():
        if isinstance(e, tuple):
            if len(e) != 1:
                raise ValueError("eval_at_root needs a one-variable polynomial")
            e = e[0]
        folded[(e * a) % d] += c
    return CycloInt(d, folded)
