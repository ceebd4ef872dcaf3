"""Term-wise checks of the triangle, involution and fpf recurrences and of the PDE.

Coefficients are written exactly as the recurrences state them, with no
simplification, so a transcription slip shows up as a failing term.
Out-of-range table entries are 0.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Optional

from .core import Family
from .polynomial import S, T, BivarPoly
from .statistics import Order, descent_vector, two_sided_polynomial, two_sided_triangle


class RecurrenceId(enum.Enum):
    REC_B_NATURAL = "RecB-Natural"
    REC_B_R = "RecB-R"
    REC_I_NATURAL = "RecI-Natural"
    REC_I_R = "RecI-R"
    REC_J_NATURAL = "RecJ-Natural"
    REC_J_R = "RecJ-R"
    PDE = "PDE"


@dataclass
class RecurrenceReport:
    recurrence_id: RecurrenceId
    range: list
    passed: bool = True
    counterexample: Optional[dict] = None
    checked: int = 0

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def fail(self, **witness):
        if self.passed:
            self.passed = False
            self.counterexample = witness

    def merge(self, other):
        """Combine reports for the same recurrence over disjoint n ranges."""
        out = RecurrenceReport(self.recurrence_id, sorted(self.range + other.range),
                               checked=self.checked + other.checked)
        first = sorted((r for r in (self, other) if not r.passed),
                       key=lambda r: r.counterexample["n"])
        if first:
            out.passed = False
            out.counterexample = first[0].counterexample
        return out

    def to_dict(self):
        return {"recurrence_id": self.recurrence_id.value, "range": self.range,
                "status": self.status, "checked": self.checked,
                "counterexample": self.counterexample}

    def to_json(self):
        return json.dumps(self.to_dict())


# Coefficients ------------------------------------------------------------

def rec_b_coefficients(n, i, j):
    """Coefficients of b_{n-1,i,j}, b_{n-1,i,j-1}, b_{n-1,i-1,j}, b_{n-1,i-1,j-1}."""
    return {
        (0, 0): n + i + j + 2 * i * j,
        (0, 1): (2 * n - 1) * i - (2 * i + 1) * (j - 1),
        (1, 0): (2 * n - 1) * j - (2 * j + 1) * (i - 1),
        (1, 1): (2 * n ** 2 - n) + 2 * (i - 1) * (j - 1) + (1 - 2 * n) * (i + j - 2),
    }


def rec_b_terms(prev, n, i, j):
    """Right-hand terms keyed by the (des, ides) shift; ``prev`` is the n-1 triangle."""
    coeff = rec_b_coefficients(n, i, j)
    return {shift: c * prev.at(i - shift[0], j - shift[1]) for shift, c in coeff.items()}


def rec_i_terms(prev1, prev2, n, k):
    """The five terms, keyed 1..5, over I_{n-1} (terms 1, 2) and I_{n-2} (3..5)."""
    return {
        1: (2 * k + 1) * prev1.at(k),
        2: (2 * n - 2 * k + 1) * prev1.at(k - 1),
        3: (n - 1 + 2 * k * (k + 1)) * prev2.at(k),
        4: (2 * (n - 1) + 4 * (n - k - 1) * (k - 1)) * prev2.at(k - 1),
        5: ((2 * n - 3) * (n - 1) + 2 * (k - 2) * (k - 2 * n + 1)) * prev2.at(k - 2),
    }


def rec_j_coefficients(n, k, order):
    """Coefficients of J_{2n-2,k}, J_{2n-2,k-1}, J_{2n-2,k-2} (n is half the length)."""
    if order is Order.NATURAL:
        return (k ** 2 + k + n - 1,
                2 * ((k - 1) * (2 * n - k - 1) + n),
                (2 * n - k) * (2 * n - k + 1) + (n - 1))
    return (k ** 2 + n - 1,
            2 * (k - 1) * (2 * n - k) + 1,
            (k - 2) * (k - 4 * n) + 4 * n ** 2 - 3 * n)


def rec_j_terms(prev, n, k, order):
    """Terms keyed by the des shift 0, 1, 2; ``prev`` is the J vector of length 2n-2."""
    c = rec_j_coefficients(n, k, order)
    return {s: c[s] * prev.at(k - s) for s in range(3)}


# Checks ------------------------------------------------------------------

def check_rec_b(n: int, order: Order = Order.NATURAL, max_enum=None) -> RecurrenceReport:
    if n < 2:
        raise ValueError("the triangle recurrence starts at n = 2")
    order = Order.parse(order)
    rid = RecurrenceId.REC_B_NATURAL if order is Order.NATURAL else RecurrenceId.REC_B_R
    rep = RecurrenceReport(rid, [n])
    prev = two_sided_triangle(n - 1, order, max_enum=max_enum)
    cur = two_sided_triangle(n, order, max_enum=max_enum)
    for i in range(n + 1):
        for j in range(n + 1):
            lhs = n * cur.at(i, j)
            terms = rec_b_terms(prev, n, i, j)
            rhs = sum(terms.values())
            rep.checked += 1
            if lhs != rhs:
                rep.fail(n=n, indices=[i, j], lhs=lhs, rhs=rhs)
    return rep


def check_rec_i(n: int, order: Order = Order.NATURAL, max_enum=None) -> RecurrenceReport:
    if n < 3:
        raise ValueError("the involution recurrence starts at n = 3")
    order = Order.parse(order)
    rid = RecurrenceId.REC_I_NATURAL if order is Order.NATURAL else RecurrenceId.REC_I_R
    rep = RecurrenceReport(rid, [n])
    vec = lambda m: descent_vector(m, Family.INVOLUTIONS, order, max_enum=max_enum)
    cur, p1, p2 = vec(n), vec(n - 1), vec(n - 2)
    for k in range(n + 1):
        lhs = n * cur.at(k)
        rhs = sum(rec_i_terms(p1, p2, n, k).values())
        rep.checked += 1
        if lhs != rhs:
            rep.fail(n=n, indices=[k], lhs=lhs, rhs=rhs)
    return rep


def check_rec_j(two_n: int, order: Order = Order.NATURAL, max_enum=None) -> RecurrenceReport:
    if two_n < 4 or two_n % 2:
        raise ValueError("the fpf recurrence needs an even length >= 4")
    order = Order.parse(order)
    rid = RecurrenceId.REC_J_NATURAL if order is Order.NATURAL else RecurrenceId.REC_J_R
    rep = RecurrenceReport(rid, [two_n])
    n = two_n // 2
    cur = descent_vector(two_n, Family.FPF_INVOLUTIONS, order, max_enum=max_enum)
    prev = descent_vector(two_n - 2, Family.FPF_INVOLUTIONS, order, max_enum=max_enum)
    for k in range(two_n + 1):
        lhs = n * cur.at(k)
        rhs = sum(rec_j_terms(prev, n, k, order).values())
        rep.checked += 1
        if lhs != rhs:
            rep.fail(n=two_n, indices=[k], lhs=lhs, rhs=rhs)
    return rep


def pde_rhs(n: int, prev: BivarPoly) -> BivarPoly:
    """Right side of the PDE applied to the degree n-1 polynomial ``prev``."""
    one_s, one_t = 1 - S, 1 - T
    st = S * T
    return ((2 * n ** 2 * st - n * st + n) * prev
            + (2 * n * st * one_s + S * one_s * one_t) * prev.d_s()
            + (2 * n * st * one_t + T * one_s * one_t) * prev.d_t()
            + 2 * st * one_s * one_t * prev.d_s().d_t())


def check_pde(n: int, max_enum=None) -> RecurrenceReport:
    if n < 2:
        raise ValueError("the PDE starts at n = 2")
    rep = RecurrenceReport(RecurrenceId.PDE, [n])
    prev = two_sided_polynomial(n - 1, Order.NATURAL) if n > 2 else BivarPoly({(0, 0): 1, (1, 1): 1})
    cur = two_sided_polynomial(n, Order.NATURAL)
    lhs = n * cur
    rhs = pde_rhs(n, prev)
    rep.checked = 1
    if lhs != rhs:
        diff = lhs - rhs
        key = min(diff.coeffs)
        rep.fail(n=n, indices=list(key), lhs=lhs.coefficient(*key), rhs=rhs.coefficient(*key))
    return rep


_CHECKS = {
    "rec-b": (check_rec_b, 2),
    "rec-i": (check_rec_i, 3),
    "rec-j": (check_rec_j, 4),
}


def check_range(name, ns, order=Order.NATURAL, max_enum=None, workers=1):
    """Run one recurrence over several n and merge into a single report."""
    from .parallel import pmap
    if name == "pde":
        reports = pmap(check_pde, [(n, max_enum) for n in ns], workers)
    else:
        fn = _CHECKS[name][0]
        reports = pmap(fn, [(n, order, max_enum) for n in ns], workers)
    out = reports[0]
    for r in reports[1:]:
        out = out.merge(r)
    return out
