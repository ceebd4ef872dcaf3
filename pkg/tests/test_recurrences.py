import json

import pytest

from signedperm.core import Family
from signedperm.polynomial import BivarPoly, S, T
from signedperm.recurrences import (RecurrenceId, check_pde, check_range, check_rec_b,
                                    check_rec_i, check_rec_j, pde_rhs, rec_b_coefficients,
                                    rec_i_terms, rec_j_terms)
from signedperm.statistics import (DescentVector, Order, descent_vector, two_sided_polynomial,
                                   two_sided_triangle)


@pytest.mark.parametrize("order", list(Order))
def test_rec_b(order):
    for n in range(2, 6):
        rep = check_rec_b(n, order)
        assert rep.passed, rep.counterexample


@pytest.mark.parametrize("order", list(Order))
def test_rec_i(order):
    for n in range(3, 8):
        assert check_rec_i(n, order).passed


@pytest.mark.parametrize("order", list(Order))
def test_rec_j(order):
    for two_n in (4, 6, 8):
        assert check_rec_j(two_n, order).passed


def test_pde():
    for n in range(2, 6):
        assert check_pde(n).passed
    assert pde_rhs(2, 1 + S * T) == 2 * two_sided_polynomial(2)


def test_small_values():
    assert two_sided_triangle(1, Order.NATURAL).counts == ((1, 0), (0, 1))
    assert descent_vector(2, Family.INVOLUTIONS).counts == (1, 4, 1)
    assert descent_vector(4, Family.FPF_INVOLUTIONS, Order.NATURAL).counts == (0, 3, 6, 3, 0)
    assert descent_vector(4, Family.FPF_INVOLUTIONS, Order.R).counts == (0, 1, 5, 5, 1)


def test_rec_b_terms_reproduce_n2():
    prev = two_sided_triangle(1, Order.NATURAL)
    cur = two_sided_triangle(2, Order.NATURAL)
    for i in range(3):
        for j in range(3):
            coeff = rec_b_coefficients(2, i, j)
            total = sum(c * prev.at(i - a, j - b) for (a, b), c in coeff.items())
            assert 2 * cur.at(i, j) == total


def test_rec_i_terms_example():
    # n = 3, k = 1: the second term is 5 * I_{2,0} = 5
    p1 = descent_vector(2, Family.INVOLUTIONS)
    p2 = descent_vector(1, Family.INVOLUTIONS)
    assert rec_i_terms(p1, p2, 3, 1)[2] == 5
    assert sum(rec_i_terms(p1, p2, 3, 1).values()) == 3 * 9


def test_rec_j_terms_sum():
    for order in Order:
        prev = descent_vector(2, Family.FPF_INVOLUTIONS, order)
        cur = descent_vector(4, Family.FPF_INVOLUTIONS, order)
        for k in range(5):
            assert sum(rec_j_terms(prev, 2, k, order).values()) == 2 * cur.at(k)


def test_perturbed_vector_is_caught():
    prev = DescentVector(2, Family.INVOLUTIONS, Order.NATURAL, (1, 5, 1))
    p2 = descent_vector(1, Family.INVOLUTIONS)
    cur = descent_vector(3, Family.INVOLUTIONS)
    sums = [sum(rec_i_terms(prev, p2, 3, k).values()) for k in range(4)]
    assert sums != [3 * c for c in cur.counts]


def test_pde_derivative_of_constant():
    assert BivarPoly({(0, 0): 5}).d_s() == 0


def test_check_range_merges_and_serializes():
    rep = check_range("rec-b", [2, 3, 4], Order.R)
    assert rep.passed and rep.range == [2, 3, 4]
    assert rep.recurrence_id is RecurrenceId.REC_B_R
    data = json.loads(rep.to_json())
    assert data["status"] == "pass" and data["counterexample"] is None
    assert check_range("pde", [2, 3], workers=2).passed


def test_report_keeps_first_failure():
    a = check_rec_b(2)
    b = check_rec_b(3)
    b.fail(n=3, indices=[0, 0])
    a.fail(n=2, indices=[1, 1])
    merged = b.merge(a)
    assert merged.status == "fail" and merged.counterexample["n"] == 2


def test_bad_ranges():
    with pytest.raises(ValueError):
        check_rec_b(1)
    with pytest.raises(ValueError):
        check_pde(1)
