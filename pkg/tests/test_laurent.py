import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lens_surgery.cyclo import eval_at_root
from lens_surgery.laurent import (
    InexactDivision,
    MultiLaurent,
    divide_exact,
    duality_transform,
    format_laurent,
    ml_arith,
    parse_laurent,
    substitute_monomials,
    symmetric_agreement,
)


def T(*terms):
    return MultiLaurent(1, {(e,): c for e, c in terms})


t1, t2 = MultiLaurent.gens(2)


def test_arith_examples():
    assert ml_arith(t1 - 1, MultiLaurent.constant(2, 0), "mul").is_zero()
    assert ml_arith(t1 - 1, t2 - 1, "mul") == t1 * t2 - t1 - t2 + 1
    three = ml_arith(MultiLaurent.constant(2, 3), ml_arith(t1 - 1, t2 - 1, "mul"), "mul")
    assert three.terms == {(1, 1): 3, (1, 0): -3, (0, 1): -3, (0, 0): 3}
    with pytest.raises(ValueError):
        ml_arith(t1, MultiLaurent.gens(3)[0], "add")


def test_no_zero_coefficients_stored():
    f = t1 + 1 - t1
    assert f.terms == {(0, 0): 1}


def test_substitute_examples():
    assert substitute_monomials(t1 * t2, (1, -1)) == T((0, 1))
    assert substitute_monomials((t1 - 1) * (t2 - 1), (2, 3)) == T((5, 1), (3, -1), (2, -1), (0, 1))
    (x,) = MultiLaurent.gens(1)
    assert substitute_monomials(x, (0,)) == T((0, 1))


def test_divide_exact_examples():
    assert divide_exact(T((4, 1), (0, -1)), T((2, 1), (0, -1))) == T((2, 1), (0, 1))
    assert divide_exact(T((6, 1), (0, -1)), T((1, 1), (0, -1))) == T(*[(k, 1) for k in range(6)])
    with pytest.raises(InexactDivision):
        divide_exact(T((2, 1), (0, 1)), T((1, 1), (0, -1)))


def test_divide_exact_laurent_shift():
    f = T((-3, 1), (1, -1))  # t^-3 - t = -t^-3 (t^4 - 1)
    assert divide_exact(f, T((2, 1), (0, -1))) == T((-3, -1), (-1, -1))


def test_duality_examples():
    f = T((1, 1), (0, -1))
    assert duality_transform(f, (1,), -1) == f
    for n in (1, 2, 5):
        g = n * (t1 - 1) * (t2 - 1)
        assert duality_transform(g, (1, 1), 1) == g
    one = MultiLaurent.constant(2, 1)
    assert duality_transform(one, (0, 0), 1) == one


def sym(coeffs):
    """c0 + sum c_k (t^k + t^-k)."""
    terms = {(0,): coeffs[0]} if coeffs else {}
    for k, c in enumerate(coeffs[1:], 1):
        terms[(k,)] = c
        terms[(-k,)] = c
    return MultiLaurent(1, terms)


def test_symmetric_agreement_examples():
    F = sym([2, 1])
    assert symmetric_agreement(F, F, 7)
    # 1 and z + 1/z = 2 cos(2 pi / 5) ~ 0.618 differ at z = exp(2 pi i / 5)
    assert not symmetric_agreement(sym([1]), sym([0, 1]), 5)
    zero = MultiLaurent(1, {})
    assert symmetric_agreement(zero, zero, 11)


def test_symmetric_agreement_validates():
    with pytest.raises(ValueError):
        symmetric_agreement(sym([0, 0, 1]), sym([0]), 5)  # degree 2 > (5-3)/2
    with pytest.raises(ValueError):
        symmetric_agreement(T((1, 1)), T((1, 1)), 7)  # asymmetric
    with pytest.raises(ValueError):
        symmetric_agreement(sym([1]), sym([1]), 9)  # not prime


def test_text_round_trip_example():
    f = parse_laurent("3*t1^2*t2^-1 - 1", 2)
    assert f.terms == {(2, -1): 3, (0, 0): -1}
    assert format_laurent(f) == "3*t1^2*t2^-1 - 1"


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_laurent("3*t4", 2)
    with pytest.raises(ValueError):
        parse_laurent("t1 +", 2)


# -- properties ------------------------------------------------------------------

def laurents(nvars, max_terms=4, lo=-3, hi=3):
    exps = st.tuples(*[st.integers(lo, hi)] * nvars)
    return st.dictionaries(exps, st.integers(-4, 4), max_size=max_terms).map(lambda t: MultiLaurent(nvars, t))


@settings(max_examples=80, deadline=None)
@given(laurents(2), laurents(2), laurents(2))
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f
    assert f * g == g * f


@settings(max_examples=80, deadline=None)
@given(laurents(1, lo=-4, hi=6), laurents(1, lo=-4, hi=6).filter(lambda g: not g.is_zero()))
def test_divide_exact_inverts_multiplication(f, g):
    assert divide_exact(f * g, g) == f


@settings(max_examples=60, deadline=None)
@given(laurents(3), laurents(3), st.tuples(*[st.integers(-5, 5)] * 3))
def test_substitution_commutes_with_product(f, g, exps):
    assert substitute_monomials(f * g, exps) == substitute_monomials(f, exps) * substitute_monomials(g, exps)


@settings(max_examples=100, deadline=None)
@given(laurents(3, max_terms=5, lo=-9, hi=9))
def test_text_round_trip(f):
    text = format_laurent(f)
    assert parse_laurent(text, 3) == f
    assert format_laurent(parse_laurent(text, 3)) == text


@st.composite
def distinct_symmetric(draw):
    ell = draw(st.sampled_from([5, 7, 11, 13]))
    k = (ell - 3) // 2
    a = draw(st.lists(st.integers(-5, 5), min_size=k + 1, max_size=k + 1))
    b = draw(st.lists(st.integers(-5, 5), min_size=k + 1, max_size=k + 1).filter(lambda x: x != a))
    return ell, sym(a), sym(b)


@settings(max_examples=80, deadline=None)
@given(distinct_symmetric())
def test_distinct_symmetric_polys_differ_at_some_root(args):
    ell, F, G = args
    assert not symmetric_agreement(F, G, ell)
    assert any(eval_at_root(F, a, ell) != eval_at_root(G, a, ell) for a in range(ell))
