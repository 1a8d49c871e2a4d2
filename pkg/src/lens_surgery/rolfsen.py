"""Constructive lens-space identification by surgery calculus.

A twist along an unknotted component changes its coefficient to 1/(u + 1/r)
and adds u * lk^2 to every other component.  Surgery on a (2, 2s)-torus link
with one coefficient at distance 1 from s is a lens space with an explicit
(p, q).  On the Whitehead link, a slope of 2 or 3 on one component reduces to
such a torus link, and a slope of 1 reduces to surgery on a trefoil.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

from .lens import LensSpace
from .torsion import SurgerySpec


@dataclass(frozen=True)
class RationalCoeff:
    """A surgery coefficient a/b; b = 0 is infinity, ``empty`` means no filling."""

    num: int
    den: int
    empty: bool = False

    def __post_init__(self):
        if self.empty:
            object.__setattr__(self, "num", 0)
            object.__setattr__(self, "den", 0)
            return
        a, b = self.num, self.den
        if a == 0 and b == 0:
            raise ValueError("0/0 is not a coefficient (use RationalCoeff.EMPTY)")
        g = gcd(a, b)
        a, b = a // g, b // g
        if b < 0 or (b == 0 and a < 0):
            a, b = -a, -b
        object.__setattr__(self, "num", a)
        object.__setattr__(self, "den", b)

    @classmethod
    def of(cls, num: int, den: int = 1) -> "RationalCoeff":
        return cls(num, den)

    @property
    def is_infinite(self) -> bool:
        return not self.empty and self.den == 0

    @classmethod
    def parse(cls, text: str) -> "RationalCoeff":
        text = text.strip()
        if text in ("inf", "oo", "1/0", "∞"):
            return INFINITY
        if text in ("empty", "∅"):
            return EMPTY
        num, _, den = text.partition("/")
        return cls(int(num), int(den) if den else 1)

    def __str__(self):
        if self.empty:
            return "empty"
        if self.den == 0:
            return "inf"
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


INFINITY = RationalCoeff(1, 0)
EMPTY = RationalCoeff(0, 0, empty=True)


def r1_twist(r_i: RationalCoeff, u: int,
             others: Sequence[Tuple[RationalCoeff, int]]) -> Tuple[RationalCoeff, List[RationalCoeff]]:
    """Twist u times along the (unknotted) component with coefficient r_i.

    ``others`` pairs each remaining coefficient with its linking number with
    that component.  Empty fillings are passed through unchanged.
    """
    if r_i.empty:
        new_i = r_i
    else:
        # 1/(u + 1/(a/b)) = a/(u a + b), which also covers a/b = inf and 0
        new_i = RationalCoeff(r_i.num, u * r_i.num + r_i.den)
    out = []
    for r, lk in others:
        if r.empty:
            out.append(r)
        else:
            out.append(RationalCoeff(r.num + u * lk * lk * r.den, r.den))
    return new_i, out


class DegenerateOrder(ValueError):
    """The torus-link surgery has |H_1| < 2, so it is not a lens space of order >= 2."""


@dataclass(frozen=True)
class TorusLinkSurgery:
    """(alpha1/beta1, alpha2/beta2) surgery on the (2, 2s)-torus link."""

    s: int
    alpha1: int
    beta1: int
    alpha2: int
    beta2: int

    def __post_init__(self):
        if abs(self.s) < 2:
            raise ValueError(f"|s| must be >= 2, got s = {self.s}")
        for a, b in ((self.alpha1, self.beta1), (self.alpha2, self.beta2)):
            if a - self.s * b == 0:
                raise ValueError(f"{a}/{b} equals s = {self.s}")

    def swapped(self) -> "TorusLinkSurgery":
        return TorusLinkSurgery(self.s, self.alpha2, self.beta2, self.alpha1, self.beta1)


def torus_link_lens(t: TorusLinkSurgery) -> Optional[LensSpace]:
    """L(p, (alpha1 - s beta1) beta2 + eps beta1), p = alpha1 alpha2 - s^2 beta1 beta2.

    Needs eps = alpha2 - s beta2 to be +-1; if only the first component
    satisfies that, the roles are swapped.  None when neither does.
    """
    if abs(t.alpha2 - t.s * t.beta2) != 1:
        if abs(t.alpha1 - t.s * t.beta1) != 1:
            return None
        t = t.swapped()
    eps = t.alpha2 - t.s * t.beta2
    assert eps in (1, -1)
    p = t.alpha1 * t.alpha2 - t.s * t.s * t.beta1 * t.beta2
    if abs(p) < 2:
        raise DegenerateOrder(f"{t}: order |p| = {abs(p)}")
    q = (t.alpha1 - t.s * t.beta1) * t.beta2 + eps * t.beta1
    return LensSpace.from_any(p, q)


@dataclass(frozen=True)
class TrefoilSurgery:
    p: int
    q: int


def trefoil_surgery(p: int, q: int) -> Optional[LensSpace]:
    """p/q surgery on the trefoil is L(p, 4q) when |p - 6q| = 1, else not a lens space."""
    if q < 1 or gcd(p, q) != 1:
        raise ValueError(f"{p}/{q} is not a reduced slope with q >= 1")
    if abs(p - 6 * q) != 1:
        return None
    return LensSpace.from_any(p, 4 * q)


class W1Case(Enum):
    ONE = 1
    TWO = 2
    THREE = 3


def reduce_W1(case: W1Case, r: RationalCoeff) -> Union[TorusLinkSurgery, TrefoilSurgery]:
    """Trade (k, r) surgery on the Whitehead link for a simpler description, k in {1, 2, 3}."""
    case = W1Case(case)
    if r.empty or r.den < 1:
        raise ValueError(f"slope {r} must be a finite rational")
    p2, q2 = r.num, r.den
    if case is W1Case.ONE:
        return TrefoilSurgery(p2, q2)
    if case is W1Case.TWO:
        return TorusLinkSurgery(2, -2, 1, p2 - 2 * q2, q2)
    return TorusLinkSurgery(-3, -3, 2, p2 - 6 * q2, q2)


def _finish(datum) -> Optional[LensSpace]:
    if isinstance(datum, TrefoilSurgery):
        return trefoil_surgery(datum.p, datum.q)
    return torus_link_lens(datum)


@dataclass(frozen=True)
class Construction:
    route: str
    steps: Tuple[str, ...]
    space: Optional[LensSpace]


def constructive_lens(s: SurgerySpec) -> Optional[Construction]:
    """Build the lens space by explicit moves, or None when no route applies.

    Routes: for n = 1 a slope in {1, 2, 3} on either component; for n = 0 a
    slope +-1/q on either component, twisted away to infinity and deleted.
    A route may apply and still yield no lens space (``space`` is None).
    """
    s.validate()
    if s.n == 1:
        tried = []
        for (pa, qa), (pb, qb), side in (((s.p1, s.q1), (s.p2, s.q2), 1), ((s.p2, s.q2), (s.p1, s.q1), 2)):
            if qa == 1 and pa in (1, 2, 3):
                datum = reduce_W1(W1Case(pa), RationalCoeff(pb, qb))
                tried.append(Construction(f"W1-slope-{pa}-on-component-{side}",
                                          (f"reduce to {datum}",), _finish(datum)))
        # both slopes may be small; prefer a route that reaches a lens space
        tried.sort(key=lambda c: c.space is None)
        return tried[0] if tried else None
    if s.n == 0:
        for (pa, qa), (pb, qb), side in (((s.p1, s.q1), (s.p2, s.q2), 1), ((s.p2, s.q2), (s.p1, s.q1), 2)):
            if abs(pa) == 1:
                # trivial link: linking number 0, so the other slope is untouched
                r_i = RationalCoeff(pa, qa)
                new_i, (new_j,) = r1_twist(r_i, -pa * qa, [(RationalCoeff(pb, qb), 0)])
                assert new_i == INFINITY
                steps = (f"twist {-pa * qa} along component {side}: {r_i} -> {new_i}",
                         "delete the infinity-framed component",
                         f"{new_j} surgery on the unknot")
                return Construction(f"trivial-link-component-{side}", steps,
                                    LensSpace.from_any(new_j.num, new_j.den))
        return None
    return None
