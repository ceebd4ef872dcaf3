"""Acceptance suite: one PASS/FAIL line per criterion, exact integer equality throughout."""
import time

import pytest

from signedperm.bijections import TargetPair, term_cardinalities, split_target, verify_round_trips
from signedperm.core import Family, classify, enumerate_perms, inverse, make
from signedperm.dtypes import (PAIRS, SIGNS, CountMode, PathMode, count_d_types, count_paths,
                               d_type, d_type_table, sample_perms)
from signedperm.genfun import check_identity
from signedperm.grid import (DoubleOp, delete, double_insert, insert_diagonal_pair, insert, squares,
                             transpose_squares)
from signedperm.recurrences import check_pde, check_rec_b, check_rec_i, check_rec_j
from signedperm.statistics import Order, des, descent_vector, two_sided_triangle

ORDERS = (Order.NATURAL, Order.R)


@pytest.fixture
def report(capsys):
    def emit(number, title, failures):
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            extra = "" if not failures else f"  first failure: {failures[0]}"
            print(f"\n[{status}] criterion {number}: {title}{extra}")
        assert not failures, failures[:5]
    return emit


def direct_vector(n, family, order):
    counts = [0] * (n + 1)
    for p in enumerate_perms(n, family):
        counts[des(p, order)] += 1
    return tuple(counts)


def test_criterion_01_triangle_recurrences(report):
    bad = []
    start = time.perf_counter()
    for order in ORDERS:
        tri = two_sided_triangle(1, order)
        if (tri.at(0, 0), tri.at(1, 1), tri.at(0, 1), tri.at(1, 0)) != (1, 1, 0, 0):
            bad.append(f"initial triangle {order.value}: {tri.counts}")
        for n in range(2, 7):
            rep = check_rec_b(n, order)
            if not rep.passed:
                bad.append(f"{order.value} n={n}: {rep.counterexample}")
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        bad.append(f"took {elapsed:.1f}s")
    report(1, "two-sided triangle recurrences, n = 2..6, both orders", bad)


def test_criterion_02_equidistribution(report):
    bad = []
    for n in range(1, 7):
        if two_sided_triangle(n, Order.NATURAL).counts != two_sided_triangle(n, Order.R).counts:
            bad.append(f"triangles differ at n={n}")
    for n in range(1, 9):
        a = descent_vector(n, Family.INVOLUTIONS, Order.NATURAL).counts
        b = descent_vector(n, Family.INVOLUTIONS, Order.R).counts
        if a != b:
            bad.append(f"involution vectors differ at n={n}: {a} vs {b}")
    nat = direct_vector(2, Family.FPF_INVOLUTIONS, Order.NATURAL)
    r = direct_vector(2, Family.FPF_INVOLUTIONS, Order.R)
    if (nat, r) != ((0, 2, 0), (0, 1, 1)):
        bad.append(f"fpf witness at 2: {nat} vs {r}")
    report(2, "natural and r-order equidistribution; fpf witness at length 2", bad)


def test_criterion_03_involution_recurrences(report):
    bad = []
    for order in ORDERS:
        for n in range(3, 10):
            rep = check_rec_i(n, order)
            if not rep.passed:
                bad.append(f"{order.value} n={n}: {rep.counterexample}")
    if direct_vector(2, Family.INVOLUTIONS, Order.NATURAL) != (1, 4, 1):
        bad.append("I_2")
    i3 = direct_vector(3, Family.INVOLUTIONS, Order.NATURAL)
    if i3 != (1, 9, 9, 1) or sum(i3) != 20:
        bad.append(f"I_3 = {i3}")
    if descent_vector(3, Family.INVOLUTIONS).counts != i3:
        bad.append("library vector disagrees with direct count")
    report(3, "involution recurrences, n = 3..9, both orders", bad)


def test_criterion_04_fpf_recurrences(report):
    bad = []
    for order in ORDERS:
        for two_n in range(4, 11, 2):
            rep = check_rec_j(two_n, order)
            if not rep.passed:
                bad.append(f"{order.value} 2n={two_n}: {rep.counterexample}")
    if len(list(enumerate_perms(4, Family.FPF_INVOLUTIONS))) != 12:
        bad.append("|J_4| != 12")
    if direct_vector(4, Family.FPF_INVOLUTIONS, Order.NATURAL) != (0, 3, 6, 3, 0):
        bad.append("natural J_4")
    if direct_vector(4, Family.FPF_INVOLUTIONS, Order.R) != (0, 1, 5, 5, 1):
        bad.append("r-order J_4")
    report(4, "fixed-point-free recurrences, 2n = 4..10, both orders", bad)


def test_criterion_05_path_counts(report):
    bad = []
    for n in range(0, 6):
        for pi in enumerate_perms(n):
            for order in ORDERS:
                if count_paths(pi, order, PathMode.FORMULA) != count_paths(pi, order, PathMode.BOUNDARY):
                    bad.append(f"{pi} {order.value}")
    report(5, "path counts equal the des/ides formulas on all of B_n, n <= 5", bad)


def _dtype_mismatch(pi, order):
    brute = count_d_types(pi, order, CountMode.BRUTE_FORCE)
    return brute != count_d_types(pi, order, CountMode.CLOSED_FORM)


def test_criterion_06_dtype_counts(report):
    bad = []
    for pi in enumerate_perms(4):
        for order in ORDERS:
            if _dtype_mismatch(pi, order):
                bad.append(f"{pi} {order.value}")
    for n in range(5, 9):
        for pi in sample_perms(n, 1000, seed=n):
            for order in ORDERS:
                if _dtype_mismatch(pi, order):
                    bad.append(f"{pi} {order.value}")

    def flat(c):
        return tuple(c[(s, p)] for s in SIGNS for p in PAIRS)

    if flat(count_d_types(make((2, -4, 3, -1, 5)), Order.NATURAL)) != (12, 6, 6, 12, 6, 6, 6, 18):
        bad.append("natural golden counts")
    if flat(count_d_types(make((4, -3, 1, -2, -5)), Order.R)) != (14, 10, 4, 8, 9, 9, 3, 15):
        bad.append("r-order golden counts")
    report(6, "closed-form d-type counts, all of B_4 and 1000 samples for n = 5..8", bad)


GOLDEN_SPLITS = {
    1: ((-2, -4, 1, -3), (1, 3), "D(0,0)+"),
    2: ((2, -4, 1, -3), (2, 2), "D(1,0)-"),
    3: ((3, -2, 1, -4), (3, 5), "D(1,0)-"),
    4: ((2, -1, -4, -3), (4, 1), "D(1,0)+"),
    5: ((3, -2, -4, 1), (5, 4), "D(1,0)-"),
}


def test_criterion_07_bijections(report):
    bad = []
    jobs = ([(Family.ALL, n) for n in range(1, 6)]
            + [(Family.INVOLUTIONS, n) for n in range(1, 7)]
            + [(Family.FPF_INVOLUTIONS, n) for n in (2, 4, 6)])
    for family, n in jobs:
        for order in ORDERS:
            rep = verify_round_trips(family, order, n)
            if not rep.ok:
                bad.append(f"{family.value} {order.value} n={n}: {rep.failures[0]}")
            if n >= 2:
                terms = term_cardinalities(family, order, n)
                if terms:
                    bad.append(f"terms {family.value} {order.value} n={n}: {terms[0]}")
    sigma = make((3, -2, -5, 1, -4))
    for r, (w, point, cls) in GOLDEN_SPLITS.items():
        src = split_target(Family.ALL, Order.NATURAL, TargetPair(sigma, r))
        if (src.perm.window, tuple(src.point), src.cls) != (w, point, cls):
            bad.append(f"golden r={r}: {src.describe()}")
    report(7, "bijection round trips, term cardinalities and golden inverse images", bad)


def test_criterion_08_pde(report):
    bad = [f"n={n}: {rep.counterexample}"
           for n in range(2, 7) for rep in [check_pde(n)] if not rep.passed]
    report(8, "two-sided polynomial PDE, n = 2..6", bad)


def test_criterion_09_generating_functions(report):
    bad = []
    for family in ("iub", "jub"):
        rep = check_identity(family, 6, 6)
        if not rep["equal"]:
            bad.append(f"{family}: {rep['first_mismatch']}")
    report(9, "generating-function identities through x^6 t^6", bad)


# (order, op) -> extra descents beyond p for inserts of a diagonal pair at (i, i)
DIAGONAL_SHIFT = {
    Order.NATURAL: {DoubleOp.FIXED: 0, DoubleOp.SWAP: 1,
                    DoubleOp.FIXED_NEG: 1, DoubleOp.SWAP_NEG: 0},
    Order.R: {DoubleOp.FIXED: 0, DoubleOp.SWAP: 1,
              DoubleOp.FIXED_NEG: 0, DoubleOp.SWAP_NEG: 1},
}


def _structural_failures():
    bad = []
    for n in range(0, 6):
        for pi in enumerate_perms(n):
            if sorted(squares(inverse(pi))) != transpose_squares(squares(pi)):
                bad.append(f"transpose {pi}")
    for n in range(0, 5):
        for pi in enumerate_perms(n):
            for r in range(1, n + 2):
                for s in range(1, n + 2):
                    for sign in SIGNS:
                        sigma = insert(pi, (r, s), sign)
                        if delete(sigma, (r, s)) != pi:
                            bad.append(f"round trip {pi} at {(r, s)}")
    for n in range(1, 6):
        for pi in enumerate_perms(n, Family.INVOLUTIONS):
            for i, v in enumerate(pi.window, 1):
                if abs(v) != i:
                    continue
                s = 1 if v > 0 else -1
                sigma = insert(pi, (i + 1, i), s)
                if not classify(sigma).is_involution:
                    bad.append(f"subdiagonal insert leaves involutions: {pi} at {i}")
                if des(sigma, Order.NATURAL) - des(pi, Order.NATURAL) != (1 if s > 0 else 0):
                    bad.append(f"subdiagonal descent change {pi} at {i}")
    for n in range(0, 6):
        for pi in enumerate_perms(n, Family.INVOLUTIONS):
            for order in ORDERS:
                table = d_type_table(pi, order)
                for (s, r, c), (p, q) in table.items():
                    if table[(s, c, r)] != (q, p):
                        bad.append(f"transposed types {pi} {(r, c)} {order.value}")
                    if r == c and p != q:
                        bad.append(f"diagonal type {pi} {r} {order.value}")
    for n in range(0, 5):
        for pi in enumerate_perms(n, Family.INVOLUTIONS):
            for order in ORDERS:
                base = des(pi, order)
                for i in range(1, n + 2):
                    for op, shift in DIAGONAL_SHIFT[order].items():
                        p = d_type(pi, (i, i), op.sign, order)[0]
                        if des(insert_diagonal_pair(pi, i, op), order) != base + p + shift:
                            bad.append(f"{op.name} {pi} at {i} {order.value}")
                    for j in range(1, n + 2):
                        if i == j:
                            continue
                        for op in (DoubleOp.MIRROR, DoubleOp.MIRROR_NEG):
                            p, q = d_type(pi, (i, j), op.sign, order)
                            if des(double_insert(pi, op, (i, j)), order) != base + p + q:
                                bad.append(f"{op.name} {pi} at {(i, j)} {order.value}")
    return bad


def test_criterion_10_structural_properties(report):
    report(10, "grid transpose, round trips and involution insertion laws", _structural_failures())
