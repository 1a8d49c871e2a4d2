"""Reidemeister torsion of surgeries on the twisted Whitehead link.

Two independent routes are provided: the closed form in terms of zeta_d, and
the full surgery-formula pipeline that substitutes homology classes into the
3-component Alexander polynomial, cancels the vanishing denominator factor
exactly and only then evaluates at the root of unity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .alex import alexander_Wbar
from .cyclo import CycloInt, CycloNum, UnitWitness, eval_at_root, unit_equivalent
from .laurent import MultiLaurent, divide_exact


class InvalidSpec(ValueError):
    """Surgery data outside the homology-lens-space setting."""


class Side(enum.IntEnum):
    """Which component's meridian is sent to zeta_d."""

    ONE = 1
    TWO = 2

    @property
    def other(self) -> "Side":
        return Side.TWO if self is Side.ONE else Side.ONE


@dataclass(frozen=True, order=True)
class SurgerySpec:
    """(n; p1/q1, p2/q2) surgery on the n-twisted Whitehead link."""

    n: int
    p1: int
    q1: int
    p2: int
    q2: int

    def problems(self) -> list:
        out = []
        if self.n < 0:
            out.append(f"n = {self.n} is negative (use mirror_normalize)")
        if self.q1 < 1 or self.q2 < 1:
            out.append("denominators must be >= 1")
        if gcd(self.p1, self.q1) != 1 or gcd(self.p2, self.q2) != 1:
            out.append("surgery fractions must be reduced")
        if gcd(self.p1, self.p2) != 1:
            out.append(f"gcd(p1, p2) = {gcd(self.p1, self.p2)} != 1")
        if abs(self.p1 * self.p2) < 2:
            out.append(f"|p1 p2| = {abs(self.p1 * self.p2)} < 2")
        return out

    @property
    def is_valid(self) -> bool:
        return not self.problems()

    def validate(self) -> "SurgerySpec":
        probs = self.problems()
        if probs:
            raise InvalidSpec(f"{self}: " + "; ".join(probs))
        return self

    def p(self, side: Side) -> int:
        return self.p1 if side is Side.ONE else self.p2

    def q(self, side: Side) -> int:
        return self.q1 if side is Side.ONE else self.q2

    def swapped(self) -> "SurgerySpec":
        return SurgerySpec(self.n, self.p2, self.q2, self.p1, self.q1)

    def __str__(self):
        return f"(W_{self.n}; {self.p1}/{self.q1}, {self.p2}/{self.q2})"


def mirror_normalize(n: int, p1: int, q1: int, p2: int, q2: int) -> SurgerySpec:
    """W_{-n} is the mirror of W_n: flip the twist sign and the surgery slopes together."""
    if n < 0:
        return SurgerySpec(-n, -p1, q1, -p2, q2)
    return SurgerySpec(n, p1, q1, p2, q2)


def homology_order(s: SurgerySpec) -> int:
    s.validate()
    return abs(s.p1 * s.p2)


def mod_inverse(a: int, m: int) -> int:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not invertible mod {m}")
    return pow(a, -1, m)


@dataclass(frozen=True)
class TorsionValue:
    """A torsion value, meaningful only up to multiplication by +-zeta_d^m."""

    value: CycloNum
    d: int
    ambiguity: str = "up to +-zeta^m"

    def equivalent(self, other) -> Optional[UnitWitness]:
        other = other.value if isinstance(other, TorsionValue) else other
        return unit_equivalent(self.value, other)

    def __str__(self):
        return str(self.value)


def _check_level(s: SurgerySpec, d: int, side: Side) -> None:
    s.validate()
    if d < 2:
        raise ValueError(f"root order d must be >= 2, got {d}")
    if s.p(side) % d:
        raise ValueError(f"d = {d} does not divide p{int(side)} = {s.p(side)}")


def zeta_minus_one(d: int, k: int = 1) -> CycloInt:
    return CycloInt.zeta(d, k) - 1


def closed_form_parts(n: int, q_other: int, p_other: int, epsilon: int, d: int) -> CycloInt:
    """n q (z - 1)^2 + eps p z, the numerator of the closed form."""
    zm1 = zeta_minus_one(d)
    return zm1 * zm1 * (n * q_other) + CycloInt.zeta(d) * (epsilon * p_other)


def torsion_closed_form(s: SurgerySpec, d: int, side: Side = Side.TWO, epsilon: int = 1) -> TorsionValue:
    """{n q (z-1)^2 + eps p z} / ((z - 1)(z^qbar - 1)), from the other component's slope."""
    side = Side(side)
    _check_level(s, d, side)
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    other = side.other
    # least positive inverse mod |p|, then reduced mod d
    qbar = mod_inverse(s.q(side), abs(s.p(side))) % d
    num = closed_form_parts(s.n, s.q(other), s.p(other), epsilon, d)
    den = zeta_minus_one(d) * zeta_minus_one(d, qbar)
    return TorsionValue(CycloNum(num, den), d)


def surgery_exponents(s: SurgerySpec):
    """Exponents of [m1], [m2], [m3] in H_1(M_0) = <T>."""
    return (s.p2 * s.q1, s.p1 * s.q2, -s.p1 * s.p2)


def _binomial(k: int) -> MultiLaurent:
    return MultiLaurent(1, {(k,): 1, (0,): -1})


def torsion_pipeline(s: SurgerySpec, d: int, side: Side = Side.TWO, epsilon: int = 1) -> TorsionValue:
    """Surgery formula applied to the 3-component link, closed off by infinity-filling K3."""
    side = Side(side)
    _check_level(s, d, side)
    a, b, c = surgery_exponents(s)
    numer = alexander_Wbar(s.n, epsilon).substitute_monomials((a, b, c))
    # psi_0(T) is pinned by sending the chosen meridian to zeta_d
    meridian = a if side is Side.ONE else b
    if gcd(meridian, d) != 1:
        raise ArithmeticError(f"meridian class T^{meridian} is not a generator at level {d}")
    t_power = mod_inverse(meridian % d, d)

    denom = CycloInt.from_int(d, 1)
    for p in (s.p1, s.p2):
        factor = _binomial(p)
        if eval_at_root(factor, t_power, d).is_zero():
            numer = divide_exact(numer, factor)
        else:
            denom = denom * eval_at_root(factor, t_power, d)
    if denom.is_zero():
        raise ArithmeticError("denominator still vanishes after cancellation")

    value_m0 = eval_at_root(numer, t_power, d)
    l3 = eval_at_root(_binomial(a + b), t_power, d)
    if l3.is_zero():
        raise ArithmeticError("psi([l_3']) = 1: the surgery formula does not apply")
    return TorsionValue(CycloNum(value_m0, denom * l3), d)


def lens_torsion(p: int, q: int, d: int, i: int) -> TorsionValue:
    """Torsion of L(p, q) at level d: 1 / ((z^i - 1)(z^(i qbar) - 1))."""
    if p < 2:
        raise ValueError(f"lens order must be >= 2, got {p}")
    if d < 2 or p % d:
        raise ValueError(f"d = {d} must be >= 2 and divide p = {p}")
    if gcd(q, p) != 1:
        raise ValueError(f"gcd(q, p) = {gcd(q, p)} != 1")
    if gcd(i, d) != 1:
        raise ValueError(f"i = {i} is not coprime to d = {d}")
    qbar = mod_inverse(q, d)
    den = zeta_minus_one(d, i) * zeta_minus_one(d, i * qbar)
    return TorsionValue(CycloNum(CycloInt.from_int(d, 1), den), d)


def torsion_mixed_level(s: SurgerySpec, d: int, epsilon: int = 1) -> TorsionValue:
    """Surgery formula at a level d dividing |p1 p2| but neither p1 nor p2.

    The generator T goes to zeta_d.  No denominator factor vanishes there, so
    the fraction is evaluated directly with nothing cancelled.
    """
    s.validate()
    if d < 2 or (s.p1 * s.p2) % d:
        raise ValueError(f"d = {d} must be >= 2 and divide p1 p2 = {s.p1 * s.p2}")
    if s.p1 % d == 0 or s.p2 % d == 0:
        raise ValueError(f"d = {d} divides p1 or p2; use the one-meridian formulas")
    a, b, c = surgery_exponents(s)
    numer = eval_at_root(alexander_Wbar(s.n, epsilon).substitute_monomials((a, b, c)), 1, d)
    denom = CycloInt.from_int(d, 1)
    for k in (s.p1, s.p2, a + b):
        denom = denom * eval_at_root(_binomial(k), 1, d)
    if denom.is_zero():
        raise ArithmeticError(f"surgery formula denominator vanishes at level {d}")
    return TorsionValue(CycloNum(numer, denom), d)
