import math
from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lens_surgery.lens import (
    Indeterminate,
    Lens,
    LensSpace,
    NotLens,
    certify_lens,
    classify_generalized,
    classify_theorem,
    closed_form_is_unit,
    lens_equivalent,
    obstruct,
    obstruction_at_d,
    real_minimal_polynomial,
    real_norm,
    theorem_cases,
    trefoil_condition,
)
from lens_surgery.cyclo import CycloNum, CycloInt
from lens_surgery.torsion import Side, SurgerySpec, lens_torsion, torsion_closed_form

from oracles import lens_class


def test_lens_space_normalizes():
    assert LensSpace(7, 11).q == 4
    assert LensSpace.from_any(-7, 3) == LensSpace(7, 4)
    with pytest.raises(ValueError):
        LensSpace(1, 0)
    with pytest.raises(ValueError):
        LensSpace(6, 3)


def test_lens_equivalent_examples():
    assert lens_equivalent(LensSpace(6, 5), LensSpace.from_any(6, -1))
    assert lens_equivalent(LensSpace(7, 4), LensSpace(7, 2))
    assert not lens_equivalent(LensSpace(7, 4), LensSpace(7, 1))
    assert not lens_equivalent(LensSpace(5, 1), LensSpace(7, 1))


def coprime_pairs(pmax=60):
    return st.integers(2, pmax).flatmap(
        lambda p: st.tuples(st.just(p), st.integers(1, p).filter(lambda q: gcd(p, q) == 1)))


@settings(max_examples=200, deadline=None)
@given(coprime_pairs(), st.data())
def test_lens_equivalent_matches_brute_classes(pq, data):
    p, q = pq
    q2 = data.draw(st.integers(1, p).filter(lambda x: gcd(p, x) == 1))
    assert lens_equivalent(LensSpace(p, q), LensSpace(p, q2)) == ((q2 % p) in lens_class(p, q))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 40).flatmap(lambda p: st.lists(
    st.integers(1, p).filter(lambda q: gcd(p, q) == 1), min_size=3, max_size=3).map(lambda qs: [LensSpace(p, q) for q in qs])))
def test_lens_equivalent_is_an_equivalence(ls):
    a, b, c = ls
    assert lens_equivalent(a, a)
    assert lens_equivalent(a, b) == lens_equivalent(b, a)
    if lens_equivalent(a, b) and lens_equivalent(b, c):
        assert lens_equivalent(a, c)
    assert lens_equivalent(a, a.normal_form())


def test_real_minimal_polynomials():
    assert real_minimal_polynomial(5) == (-1, 1, 1)       # y^2 + y - 1
    assert real_minimal_polynomial(12) == (-3, 0, 1)      # y^2 - 3
    assert real_minimal_polynomial(7) == (-1, -2, 1, 1)
    with pytest.raises(ValueError):
        real_minimal_polynomial(2)


@pytest.mark.parametrize("d", [3, 4, 5, 7, 9, 12, 15, 16, 24, 30])
@pytest.mark.parametrize("c0,c1", [(1, 1), (-5, 2), (7, -3), (0, 1), (4, 9)])
def test_real_norm_matches_float_product(d, c0, c1):
    # product over the real embeddings 2 cos(2 pi j / d), j a unit up to sign
    prod = 1.0
    for j in range(1, d // 2 + 1):
        if gcd(j, d) == 1 and 2 * j != d:
            prod *= c0 + c1 * 2 * math.cos(2 * math.pi * j / d)
    assert real_norm(c0, c1, d) == round(prod)


def test_real_norm_d2():
    # at z = -1 the element is 4 n q - eps p up to sign
    assert abs(real_norm(1 - 2 * 3, 3, 2)) == abs(4 * 3 - 1)
    assert closed_form_is_unit(1, 3, 2)
    assert not closed_form_is_unit(1, 1, 2)


def test_obstruction_examples():
    w = obstruction_at_d(SurgerySpec(1, 1, 1, 7, 1), 7, Side.TWO)
    assert w is not None
    tau = torsion_closed_form(SurgerySpec(1, 1, 1, 7, 1), 7).value
    lens_q = pow(w.k, -1, 7)
    assert lens_torsion(7, lens_q, 7, w.i).value * CycloNum(CycloInt.zeta(7, w.unit.m) * w.unit.sign) == tau
    assert obstruction_at_d(SurgerySpec(2, 1, 1, 7, 1), 7, Side.TWO) is None
    assert obstruction_at_d(SurgerySpec(1, 5, 1, 7, 1), 7, Side.TWO) is None
    assert obstruction_at_d(SurgerySpec(2, 1, 1, 7, 1), 7, Side.TWO, method="search") is None
    assert obstruction_at_d(SurgerySpec(1, 5, 1, 7, 1), 7, Side.TWO, method="search") is None


def test_obstruction_bad_level():
    with pytest.raises(ValueError):
        obstruction_at_d(SurgerySpec(1, 1, 1, 7, 1), 5, Side.TWO)
    with pytest.raises(ValueError):
        obstruction_at_d(SurgerySpec(1, 1, 1, 7, 1), 7, Side.TWO, method="guess")


@st.composite
def specs(draw, pmax=16, qmax=4, nmax=3):
    s = SurgerySpec(draw(st.integers(0, nmax)), draw(st.integers(-pmax, pmax)), draw(st.integers(1, qmax)),
                    draw(st.integers(-pmax, pmax)), draw(st.integers(1, qmax)))
    assume(s.is_valid)
    return s


@settings(max_examples=150, deadline=None)
@given(specs(), st.sampled_from([1, -1]))
def test_sieve_agrees_with_exhaustive_search(s, eps):
    for side in (Side.ONE, Side.TWO):
        for d in range(2, abs(s.p(side)) + 1):
            if s.p(side) % d == 0:
                fast = obstruction_at_d(s, d, side, eps, method="sieve")
                slow = obstruction_at_d(s, d, side, eps, method="search")
                assert (fast is None) == (slow is None), (s, d, side)


def test_obstruct_examples():
    assert isinstance(obstruct(SurgerySpec(1, 2, 1, 3, 1)), Indeterminate)
    v = obstruct(SurgerySpec(1, 1, 1, 8, 1))
    assert isinstance(v, NotLens)
    # at z = -1 the torsion is 3/4 against 1/4 for every lens space; levels 4 and 8 match
    assert {d for d, _ in v.obstruction} == {2}
    for d in (4, 8):
        assert obstruction_at_d(SurgerySpec(1, 1, 1, 8, 1), d, Side.TWO, method="search") is not None
    for s in (SurgerySpec(3, 1, 1, 5, 1), SurgerySpec(3, 2, 1, 7, 3), SurgerySpec(3, -11, 2, 3, 1)):
        assert isinstance(obstruct(s), NotLens)


def test_trefoil_step_is_needed_and_reported():
    s = SurgerySpec(1, 1, 1, 5, 4)
    assert isinstance(obstruct(s, trefoil=False), Indeterminate)
    v = obstruct(s)
    assert isinstance(v, NotLens) and "trefoil" in v.obstruction[0][1]
    assert trefoil_condition(s) == (Side.TWO, False)
    assert trefoil_condition(SurgerySpec(1, 1, 1, 7, 1)) == (Side.TWO, True)
    assert trefoil_condition(SurgerySpec(2, 1, 1, 7, 1)) is None


def test_classify_theorem_examples():
    v = classify_theorem(SurgerySpec(1, 1, 1, 7, 1))
    assert isinstance(v, Lens) and v.space == LensSpace(7, 4) and v.cases == ("1",)
    v = classify_theorem(SurgerySpec(1, 2, 1, 3, 1))
    assert lens_equivalent(v.space, LensSpace(6, 5)) and v.cases == ("2", "6")
    fired = dict(theorem_cases(SurgerySpec(1, 2, 1, 3, 1)))
    assert lens_equivalent(fired["2"], fired["6"])
    assert fired["6"] == LensSpace.from_any(6, 3 - 4)
    assert isinstance(classify_theorem(SurgerySpec(2, 1, 1, 5, 1)), NotLens)
    v = classify_theorem(SurgerySpec(1, 3, 1, 2, 1))
    assert set(v.cases) == {"3", "5"} and lens_equivalent(v.space, LensSpace(6, 5))


def test_classify_theorem_trivial_link():
    assert classify_theorem(SurgerySpec(0, 1, 1, 9, 2)).space == LensSpace(9, 2)
    assert classify_theorem(SurgerySpec(0, 5, 3, -1, 4)).space == LensSpace(5, 3)
    assert isinstance(classify_theorem(SurgerySpec(0, 5, 1, 7, 1)), NotLens)


def test_not_lens_needs_a_witness():
    with pytest.raises(ValueError):
        NotLens(())


def test_classify_generalized_examples():
    v = classify_generalized(SurgerySpec(0, 1, 1, 9, 2), 1)
    assert isinstance(v, Lens) and lens_equivalent(v.space, LensSpace(9, 2))
    for eps in (1, -1):
        assert isinstance(classify_generalized(SurgerySpec(0, 5, 1, 7, 1), eps), NotLens)
    # |eps p2 - 4 q2| = |5 - 4| = 1 with p1/q1 = 2 eps
    v = classify_generalized(SurgerySpec(1, -2, 1, -5, 1), -1)
    assert isinstance(v, Indeterminate) and "2" in v.note
    assert isinstance(classify_generalized(SurgerySpec(2, 1, 1, 7, 1), 1), NotLens)
    with pytest.raises(ValueError):
        classify_generalized(SurgerySpec(1, 1, 1, 7, 1), 0)


def test_generalized_six_condition_is_weaker_than_trefoil():
    # 6q = 36 = 1 mod 7 holds for 7/6, while |7 - 36| = 29: a necessary-only hit
    s = SurgerySpec(1, 1, 1, 7, 6)
    assert isinstance(classify_generalized(s, 1), Indeterminate)
    assert isinstance(classify_theorem(s), NotLens)


def test_certify_lens():
    s = SurgerySpec(1, 2, 1, 3, 1)
    results = certify_lens(s, LensSpace(6, 5))
    assert results and all(ok for _, _, ok in results)
    assert not all(ok for _, _, ok in certify_lens(SurgerySpec(1, 1, 1, 7, 1), LensSpace(7, 1)))
