from math import comb

import pytest

from symbolic_powers.engine import (
    AmbientMismatchError, CapExceededError, Monomial, MonomialIdeal, ParseError,
    complete_graph, divides, graded_dimension, intersect, lcm, membership, minimize,
    parse_ideal, parse_monomial, power, product, quotient_by_variable, scale,
    symbolic_power, edge_ideal, compositions, degree_histogram, prime_ideal,
)


def mono(*exps):
    return Monomial(tuple(exps))


def ideal(m, *rows):
    return MonomialIdeal(m, [tuple(r) for r in rows])


K3_CUBE = ideal(3, (3, 3, 0), (3, 0, 3), (0, 3, 3), (2, 2, 1), (2, 1, 2), (1, 2, 2))


# ============================================
# MONOMI
# ============================================

def test_divides_componentwise():
    assert divides(mono(1, 1), mono(2, 2))
    assert not divides(mono(3, 0), mono(2, 5))
    assert divides(Monomial.unit(4), mono(0, 7, 1, 2))


def test_divides_rejects_different_ambient():
    with pytest.raises(AmbientMismatchError):
        divides(mono(1, 1), mono(1, 1, 1))


def test_lcm_is_componentwise_max():
    assert lcm(mono(2, 1, 0), mono(0, 3, 1)) == mono(2, 3, 1)
    assert lcm(mono(1, 1, 1), mono(2, 2, 0)) == mono(2, 2, 1)
    w = mono(4, 0, 2)
    assert lcm(w, w) == w


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        mono(1, -1)


def test_quotient_by_variable():
    assert quotient_by_variable(mono(2, 1, 0), 2) == mono(2, 0, 0)
    with pytest.raises(ValueError):
        quotient_by_variable(mono(2, 1, 0), 3)


def test_text_form_round_trip():
    w = parse_monomial("x1^2*x2*x3^4")
    assert w.exponents == (2, 1, 4)
    assert w.to_text() == "x1^2*x2*x3^4"
    assert parse_monomial("1", 3) == Monomial.unit(3)
    assert Monomial.unit(2).to_text() == "1"


@pytest.mark.parametrize("text", ["x0", "y1", "x1^", "x1**2", ""])
def test_parse_monomial_errors(text):
    with pytest.raises(ParseError):
        parse_monomial(text)


def test_parse_monomial_beyond_ambient():
    with pytest.raises(ParseError):
        parse_monomial("x4", 3)


# ============================================
# IDEALI
# ============================================

def test_minimize_drops_multiples():
    assert minimize([(1, 1), (2, 2)]) == ideal(2, (1, 1))
    kept = minimize([(2, 0), (0, 2), (1, 1)])
    assert len(kept) == 3


def test_minimize_keeps_known_generating_set():
    assert minimize(K3_CUBE.generators) == K3_CUBE
    assert len(K3_CUBE) == 6


def test_minimize_empty_needs_ambient():
    assert minimize([], ambient=3).is_zero
    with pytest.raises(ValueError):
        minimize([])


def test_generators_are_sorted_lexicographically():
    I = ideal(2, (2, 0), (0, 2), (1, 1))
    assert [g.exponents for g in I] == [(0, 2), (1, 1), (2, 0)]


def test_zero_and_unit_ideals():
    assert MonomialIdeal.zero(3).to_text() == "0"
    assert MonomialIdeal.unit(3).is_unit
    assert not MonomialIdeal.zero(3).is_unit


def test_intersect_coprime_generators():
    assert intersect(ideal(2, (1, 0)), ideal(2, (0, 1))) == ideal(2, (1, 1))


def test_intersect_with_unit_is_identity():
    assert intersect(K3_CUBE, MonomialIdeal.unit(3)) == K3_CUBE


def test_intersect_with_product_of_variables():
    result = intersect(K3_CUBE, ideal(3, (1, 1, 1)))
    assert result == ideal(3, (2, 2, 1), (2, 1, 2), (1, 2, 2))


def test_intersect_with_zero_ideal():
    assert intersect(K3_CUBE, MonomialIdeal.zero(3)).is_zero


def test_intersect_candidate_cap():
    with pytest.raises(CapExceededError):
        intersect(K3_CUBE, K3_CUBE, cap=10)


def test_scale_shifts_degrees():
    I = ideal(3, (1, 1, 0))
    assert scale(3, I) == ideal(3, (1, 1, 1))
    assert scale(1, MonomialIdeal.zero(3)).is_zero
    assert sorted(scale(2, K3_CUBE).degrees()) == sorted(d + 1 for d in K3_CUBE.degrees())
    with pytest.raises(ValueError):
        scale(4, I)


def test_power_of_maximal_ideal():
    m = ideal(2, (1, 0), (0, 1))
    assert power(m, 2) == ideal(2, (2, 0), (1, 1), (0, 2))


@pytest.mark.parametrize("s", [1, 2, 5])
def test_power_of_principal_edge(s):
    assert power(ideal(2, (1, 1)), s) == ideal(2, (s, s))


def test_product_with_unit():
    assert product(K3_CUBE, MonomialIdeal.unit(3)) == K3_CUBE


def test_power_requires_positive_exponent():
    with pytest.raises(ValueError):
        power(K3_CUBE, 0)


def test_membership_examples():
    assert membership(mono(2, 2), ideal(2, (1, 1)))
    assert not membership(mono(5, 0, 0), ideal(3, (1, 1, 0), (0, 1, 1)))
    assert mono(1, 1, 1) in symbolic_power(complete_graph(3), 2)
    assert not membership(mono(1, 1), MonomialIdeal.zero(2))


def test_graded_dimension_examples():
    assert graded_dimension(ideal(2, (1, 1)), 2, "ideal") == 1
    assert graded_dimension(MonomialIdeal.zero(4), 3, "quotient") == comb(6, 3)
    assert graded_dimension(edge_ideal(complete_graph(3)), 2, "quotient") == 3


def test_graded_dimension_modes_sum():
    for j in range(8):
        inside = graded_dimension(K3_CUBE, j, "ideal")
        outside = graded_dimension(K3_CUBE, j, "quotient")
        assert inside + outside == comb(j + 2, 2)


def test_graded_dimension_cap():
    with pytest.raises(CapExceededError):
        graded_dimension(K3_CUBE, 65)
    with pytest.raises(ValueError):
        graded_dimension(K3_CUBE, 2, "both")


def test_compositions_count_and_order():
    parts = list(compositions(3, 3))
    assert len(parts) == comb(5, 2)
    assert len(set(parts)) == len(parts)
    assert all(sum(p) == 3 for p in parts)
    assert list(compositions(-1, 2)) == []


def test_parse_ideal():
    I = parse_ideal("x1*x2, x2*x3, x1^2*x2^2")
    assert I == ideal(3, (1, 1, 0), (0, 1, 1))
    assert I.to_text() == "x2*x3, x1*x2"
    assert parse_ideal("0", 2).is_zero
    with pytest.raises(ParseError):
        parse_ideal("0")


def test_prime_ideal_and_histogram():
    P = prime_ideal([1, 3], 3)
    assert P == ideal(3, (1, 0, 0), (0, 0, 1))
    assert degree_histogram(K3_CUBE) == {5: 3, 6: 3}
