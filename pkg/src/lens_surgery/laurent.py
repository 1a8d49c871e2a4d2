"""Multivariable integer Laurent polynomials.

A polynomial is a sparse map from integer exponent vectors to nonzero
integer coefficients.  Values are treated as immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .cyclo import eval_at_root

Exps = Tuple[int, ...]


class InexactDivision(ArithmeticError):
    """Raised when a Laurent polynomial is not divisible by the proposed factor."""


class MultiLaurent:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exps, int]] = None):
        if nvars < 1:
            raise ValueError("a Laurent polynomial needs at least one variable")
        self.nvars = nvars
        clean: Dict[Exps, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, nvars: int, c: int) -> "MultiLaurent":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1) -> "MultiLaurent":
        return cls(len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiLaurent":
        """The variable t_{i+1} (0-based index i)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def gens(cls, nvars: int) -> Tuple["MultiLaurent", ...]:
        return tuple(cls.var(i, nvars) for i in range(nvars))

    # -- ring structure -----------------------------------------------------

    def _coerce(self, other) -> "MultiLaurent":
        if isinstance(other, int):
            return MultiLaurent.constant(self.nvars, other)
        if not isinstance(other, MultiLaurent):
            raise TypeError(f"cannot combine MultiLaurent with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ValueError(f"mismatched variable counts {self.nvars} and {other.nvars}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiLaurent(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiLaurent(self.nvars, {e: other * c for e, c in self.terms.items()})
        other = self._coerce(other)
        out: Dict[Exps, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiLaurent(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have negative powers")
            return MultiLaurent(self.nvars, {tuple(k * x for x in e): c ** (-k)})
        result = MultiLaurent.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiLaurent.constant(self.nvars, other)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # -- substitutions ------------------------------------------------------

    def substitute_monomials(self, exps: Sequence[int]) -> "MultiLaurent":
        """Replace t_i by T^{exps[i]}, giving a one-variable polynomial in T."""
        if len(exps) != self.nvars:
            raise ValueError(f"need {self.nvars} exponents, got {len(exps)}")
        out: Dict[Exps, int] = {}
        for e, c in self.terms.items():
            k = sum(a * b for a, b in zip(e, exps))
            out[(k,)] = out.get((k,), 0) + c
        return MultiLaurent(1, out)

    def specialize(self, values: Mapping[int, int]) -> "MultiLaurent":
        """Set variables (0-based index -> +1 or -1), keeping nvars unchanged."""
        for v in values.values():
            if v not in (1, -1):
                raise ValueError("specialize only handles t_i = +1 or -1")
        out: Dict[Exps, int] = {}
        for e, c in self.terms.items():
            sign = 1
            e = list(e)
            for i, v in values.items():
                if v == -1 and e[i] % 2:
                    sign = -sign
                e[i] = 0
            key = tuple(e)
            out[key] = out.get(key, 0) + sign * c
        return MultiLaurent(self.nvars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a point of nonzero rationals."""
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, k in zip(point, e):
                term *= Fraction(x) ** k
            total += term
        return total

    def inverted(self) -> "MultiLaurent":
        """f(t_1^-1, ..., t_n^-1)."""
        return MultiLaurent(self.nvars, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def shift(self, exps: Sequence[int]) -> "MultiLaurent":
        return MultiLaurent(
            self.nvars, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}
        )

    def eval_at_root(self, a: int, d: int):
        return eval_at_root(self, a, d)

    # -- inspection ---------------------------------------------------------

    def leading(self) -> Tuple[Exps, int]:
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self) -> Exps:
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def max_exponents(self) -> Exps:
        return tuple(max(e[i] for e in self.terms) for i in range(self.nvars))

    def degree_span(self) -> int:
        """For one variable: max exponent minus min exponent."""
        if self.nvars != 1:
            raise ValueError("degree_span is for one-variable polynomials")
        if not self.terms:
            return -1
        return self.max_exponents()[0] - self.min_exponents()[0]

    def __repr__(self):
        return f"MultiLaurent({self.nvars}, {format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


def unit_factor(f: MultiLaurent, g: MultiLaurent) -> Optional[Tuple[int, Exps]]:
    """Find (sign, exps) with f = sign * t^exps * g, or None."""
    if f.nvars != g.nvars:
        raise ValueError("mismatched variable counts")
    if f.is_zero() or g.is_zero():
        return (1, (0,) * f.nvars) if f.is_zero() and g.is_zero() else None
    ef, cf = f.leading()
    eg, cg = g.leading()
    if cf not in (cg, -cg):
        return None
    sign = 1 if cf == cg else -1
    shift = tuple(a - b for a, b in zip(ef, eg))
    if f == g.shift(shift) * sign:
        return sign, shift
    return None


def monomial_equivalent(f: MultiLaurent, g: MultiLaurent) -> bool:
    return unit_factor(f, g) is not None


def ml_arith(f: MultiLaurent, g: MultiLaurent, op: str) -> MultiLaurent:
    if f.nvars != g.nvars:
        raise ValueError(f"mismatched variable counts {f.nvars} and {g.nvars}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def substitute_monomials(f: MultiLaurent, exps: Sequence[int]) -> MultiLaurent:
    return f.substitute_monomials(exps)


def _dense(f: MultiLaurent) -> Tuple[int, list]:
    """(lowest exponent, dense coefficient list) of a one-variable polynomial."""
    lo = f.min_exponents()[0]
    hi = f.max_exponents()[0]
    out = [0] * (hi - lo + 1)
    for (e,), c in f.terms.items():
        out[e - lo] = c
    return lo, out


def divide_exact(f: MultiLaurent, g: MultiLaurent) -> MultiLaurent:
    """Return q with f = q * g in Z[T, T^-1]; raise InexactDivision otherwise."""
    if f.nvars != 1 or g.nvars != 1:
        raise ValueError("divide_exact works on one-variable polynomials")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return MultiLaurent(1)
    flo, num = _dense(f)
    glo, den = _dense(g)
    lead = den[-1]
    dn = len(den) - 1
    if len(num) < len(den):
        raise InexactDivision(f"{g} does not divide {f}")
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            q, r = divmod(c, lead)
            if r:
                raise InexactDivision(f"{g} does not divide {f}")
            quot[k - dn] = q
            for j in range(dn + 1):
                num[k - dn + j] -= q * den[j]
    if any(num):
        raise InexactDivision(f"{g} does not divide {f}")
    shift = flo - glo
    return MultiLaurent(1, {(k + shift,): c for k, c in enumerate(quot) if c})


def duality_transform(f: MultiLaurent, monomial_exps: Sequence[int], global_sign: int) -> MultiLaurent:
    """global_sign * t^monomial_exps * f(t^-1)."""
    if len(monomial_exps) != f.nvars:
        raise ValueError(f"need {f.nvars} exponents, got {len(monomial_exps)}")
    if global_sign not in (1, -1):
        raise ValueError("global_sign must be +1 or -1")
    return f.inverted().shift(monomial_exps) * global_sign


def is_symmetric(f: MultiLaurent) -> bool:
    return f == f.inverted()


def symmetric_agreement(F: MultiLaurent, G: MultiLaurent, ell: int) -> bool:
    """Decide F == G for symmetric F, G of degree at most (ell - 3) / 2.

    Under the degree bound, agreement at every ell-th root of unity is
    equivalent to divisibility of F - G by 1 + t + ... + t^(ell-1), which in
    turn forces F - G = 0.
    """
    if ell < 5 or any(ell % p == 0 for p in range(2, int(ell ** 0.5) + 1)):
        raise ValueError(f"ell must be a prime >= 5, got {ell}")
    bound = (ell - 3) // 2
    for name, h in (("F", F), ("G", G)):
        if h.nvars != 1:
            raise ValueError(f"{name} must be a one-variable polynomial")
        if not is_symmetric(h):
            raise ValueError(f"{name} is not symmetric under t -> 1/t")
        if h.terms and max(abs(e[0]) for e in h.terms) > bound:
            raise ValueError(f"{name} exceeds the degree bound {bound} for ell = {ell}")
    diff = F - G
    if diff.is_zero():
        return True
    cyclo_sum = MultiLaurent(1, {(k,): 1 for k in range(ell)})
    try:
        divide_exact(diff, cyclo_sum)
    except InexactDivision:
        return False
    # unreachable under the bound: a nonzero diff has span < ell - 1
    raise AssertionError("nonzero difference divisible by the cyclotomic sum")


# -- text format ------------------------------------------------------------

def default_names(nvars: int) -> Tuple[str, ...]:
    return ("t",) if nvars == 1 else tuple(f"t{i + 1}" for i in range(nvars))


def format_laurent(f: MultiLaurent, names: Optional[Sequence[str]] = None) -> str:
    """Render as e.g. ``3*t1^2*t2^-1 - 1`` with terms in descending exponent order."""
    names = tuple(names) if names else default_names(f.nvars)
    if not f.terms:
        return "0"
    parts = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        factors = []
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|\^\s*(-?\d+)|([+*-]))")


def _tokens(text: str) -> list:
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, name, power, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif power is not None:
            out.append(("pow", int(power)))
        else:
            out.append(("op", op))
        pos = m.end()
    return out


def parse_laurent(text: str, nvars: int, names: Optional[Sequence[str]] = None) -> MultiLaurent:
    """Inverse of format_laurent; also accepts any ordering and repeated factors."""
    names = tuple(names) if names else default_names(nvars)
    index = {n: i for i, n in enumerate(names)}
    toks = _tokens(text)
    if not toks:
        raise ValueError("empty polynomial text")
    out: Dict[Exps, int] = {}
    pos = 0

    def factor(coeff, exps):
        nonlocal pos
        if pos >= len(toks):
            raise ValueError(f"expression ends early in {text!r}")
        kind, val = toks[pos]
        pos += 1
        if kind == "num":
            return coeff * val
        if kind != "name":
            raise ValueError(f"expected a number or variable in {text!r}")
        if val not in index:
            raise ValueError(f"unknown variable {val!r} in {text!r}")
        k = 1
        if pos < len(toks) and toks[pos][0] == "pow":
            k = toks[pos][1]
            pos += 1
        exps[index[val]] += k
        return coeff

    first = True
    while pos < len(toks):
        sign = 1
        kind, val = toks[pos]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
        elif not first:
            raise ValueError(f"missing operator in {text!r}")
        first = False
        exps = [0] * nvars
        coeff = factor(sign, exps)
        while pos < len(toks) and toks[pos] == ("op", "*"):
            pos += 1
            coeff = factor(coeff, exps)
        key = tuple(exps)
        out[key] = out.get(key, 0) + coeff
    return MultiLaurent(nvars, out)
