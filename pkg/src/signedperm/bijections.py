"""Constructive bijections behind the recurrences.

Each recurrence ``n * X_n = sum of terms`` is realized by a bijection between
*target pairs* ``(sigma, r)`` with sigma in the family of size n and
1 <= r <= n, and *source pairs* ``(pi, point)`` with pi one or two sizes
smaller, partitioned into classes whose sizes are the right-hand terms.

* B family (all of B_n): insert one square; classes ``D(p,q)+`` / ``D(p,q)-``.
* INV family (involutions): insert one square on the diagonal, or a
  symmetric pair; classes ``E1+`` ... ``E5-``.
* FPF family (fixed-point-free involutions): always insert a pair; classes
  ``F1+`` ... ``F5-``; diagonal classes F2/F4 appear with occurrence 1 and 2.

:func:`split_target` is the primary direction (a total case table on sigma_r);
:func:`build_target` inverts it on validated sources.  :func:`is_member` recomputes a
source's class from d-types and path touch points alone, independently of
either map.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .core import Family, SignedPermutation, ValidationError, classify, enumerate_windows
from .dtypes import d_type, touch_point_set
from .grid import (DoubleOp, GridPoint, delete, double_delete, insert_diagonal_pair,
                   insert_mirror_pair, insert)
from .statistics import Order, des_window, ides_window


class ClassValidationError(ValidationError):
    pass


@dataclass(frozen=True)
class SourcePair:
    family: Family
    order: Order
    perm: SignedPermutation
    point: GridPoint
    cls: str
    occurrence: Optional[int] = None

    def describe(self):
        occ = "" if self.occurrence is None else f"_{self.occurrence}"
        return f"({self.perm}, {tuple(self.point)}){occ} in {self.cls}"


@dataclass(frozen=True)
class TargetPair:
    perm: SignedPermutation
    index: int


_CLASS_RE = re.compile(r"^(?:D\(([01]),([01])\)|E([1-5])|F([1-5]))([+-])$")


def parse_class(cls):
    """Split a class tag into (letter, detail, sign)."""
    m = _CLASS_RE.match(cls)
    if not m:
        raise ValueError(f"bad class tag {cls!r}")
    sign = 1 if m.group(5) == "+" else -1
    if m.group(1) is not None:
        return "D", (int(m.group(1)), int(m.group(2))), sign
    if m.group(3) is not None:
        return "E", int(m.group(3)), sign
    return "F", int(m.group(4)), sign


def _sym(sign):
    return "+" if sign > 0 else "-"


def shifted_row(i, j):
    return i if i <= j else i + 1


# Change in des caused by a diagonal double insertion, on top of p where the
# point has d-type (p, p) for the op's sign.
_DIAG_SHIFT = {
    Order.NATURAL: {DoubleOp.FIXED: 0, DoubleOp.SWAP: 1,
                    DoubleOp.FIXED_NEG: 1, DoubleOp.SWAP_NEG: 0},
    Order.R: {DoubleOp.FIXED: 0, DoubleOp.SWAP: 1,
              DoubleOp.FIXED_NEG: 0, DoubleOp.SWAP_NEG: 1},
}
_MIRROR = {1: DoubleOp.MIRROR, -1: DoubleOp.MIRROR_NEG}
_FIXED = {1: DoubleOp.FIXED, -1: DoubleOp.FIXED_NEG}
_SWAP = {1: DoubleOp.SWAP, -1: DoubleOp.SWAP_NEG}


def _inv_diag_op(order, cls_num, sign, p):
    """Which pair an E3/E4/E5 source at a diagonal point (i, i) inserts.

    Classes E3, E4, E5 raise des by 0, 1, 2; pick the op of the right sign
    whose shift over p gives that increase.
    """
    want = cls_num - 3 - p
    for op in (_FIXED[sign], _SWAP[sign]):
        if _DIAG_SHIFT[order][op] == want:
            return op
    raise ClassValidationError(f"no diagonal pair raises des by {cls_num - 3} from d-type ({p},{p})")


def _require_family(perm, family):
    c = classify(perm)
    if family is Family.INVOLUTIONS and not c.is_involution:
        raise ValidationError(f"{perm} is not an involution")
    if family is Family.FPF_INVOLUTIONS and not c.is_fpf_involution:
        raise ValidationError(f"{perm} is not a fixed-point-free involution")


# Source to target ---------------------------------------------------------

def build_target(source: SourcePair, validate: bool = True) -> TargetPair:
    """Map a classified source pair to its target pair."""
    if validate and not is_member(source):
        raise ClassValidationError(f"{source.describe()} fails its class conditions")
    letter, detail, sign = parse_class(source.cls)
    pi, (i, j) = source.perm, source.point
    if source.family is Family.ALL:
        return TargetPair(insert(pi, (i, j), sign), i)
    if source.family is Family.INVOLUTIONS:
        if detail in (1, 2):
            return TargetPair(insert(pi, (i, j), sign), i)
        if i != j:
            return TargetPair(insert_mirror_pair(pi, (i, j), sign), shifted_row(i, j))
        p = d_type(pi, (i, i), sign, source.order)[0]
        op = _inv_diag_op(source.order, detail, sign, p)
        index = i + 1 if op in (DoubleOp.FIXED, DoubleOp.FIXED_NEG) else i
        return TargetPair(insert_diagonal_pair(pi, i, op), index)
    # fixed-point free
    if i != j:
        return TargetPair(insert_mirror_pair(pi, (i, j), sign), shifted_row(i, j))
    if source.occurrence not in (1, 2):
        raise ClassValidationError("diagonal fpf sources need occurrence 1 or 2")
    index = i + 1 if source.occurrence == 1 else i
    return TargetPair(insert_diagonal_pair(pi, i, _SWAP[sign]), index)


# Target to source ---------------------------------------------------------

def _des_gain(order, before, after):
    return des_window(after.window, order) - des_window(before.window, order)


def split_target(family: Family, order: Order, target: TargetPair) -> SourcePair:
    """Case analysis on sigma_r: undo the insertion that produced row r."""
    sigma, r = target.perm, target.index
    n = len(sigma.window)
    if not 1 <= r <= n:
        raise ValidationError(f"index {r} outside [1, {n}]")
    v = sigma.window[r - 1]
    m, sign = abs(v), (1 if v > 0 else -1)

    if family is Family.ALL:
        pi = delete(sigma, (r, m))
        gain = (des_window(sigma.window, order) - des_window(pi.window, order),
                ides_window(sigma.window, order) - ides_window(pi.window, order))
        return SourcePair(family, order, pi, GridPoint(r, m), f"D({gain[0]},{gain[1]}){_sym(sign)}")

    _require_family(sigma, family)
    if family is Family.FPF_INVOLUTIONS:
        return _split_fpf(order, sigma, r, m, sign)

    single = None
    if m > r + 1:
        op, anchor, point = _MIRROR[sign], (r, m - 1), (r, m - 1)
    elif m < r - 1:
        op, anchor, point = _MIRROR[sign], (r - 1, m), (r - 1, m)
    elif m == r + 1:
        op, anchor, point = _SWAP[sign], r, (r, r)
    elif m == r - 1:
        single = (r, r - 1)
    elif r >= 2 and sigma.window[r - 2] == sign * (r - 1):
        op, anchor, point = _FIXED[sign], r - 1, (r - 1, r - 1)
    else:
        single = (r, r)

    if single is not None:
        pi = delete(sigma, (r, m))
        cls = f"E{1 + _des_gain(order, pi, sigma)}{_sym(sign)}"
        return SourcePair(family, order, pi, GridPoint(*single), cls)
    pi = double_delete(sigma, op, anchor)
    cls = f"E{3 + _des_gain(order, pi, sigma)}{_sym(sign)}"
    return SourcePair(family, order, pi, GridPoint(*point), cls)


_FPF_OFF_DIAG = {0: 1, 1: 5, 2: 3}   # des gain -> class number
_FPF_DIAG = {0: 2, 1: 4}             # p of the diagonal d-type -> class number


def _split_fpf(order, sigma, r, m, sign):
    family = Family.FPF_INVOLUTIONS
    occurrence = None
    if m > r + 1:
        pi = double_delete(sigma, _MIRROR[sign], (r, m - 1))
        point = (r, m - 1)
    elif m < r - 1:
        pi = double_delete(sigma, _MIRROR[sign], (r - 1, m))
        point = (r - 1, m)
    elif m == r - 1:
        pi = double_delete(sigma, _SWAP[sign], r - 1)
        point, occurrence = (r - 1, r - 1), 1
    elif m == r + 1:
        pi = double_delete(sigma, _SWAP[sign], r)
        point, occurrence = (r, r), 2
    else:
        raise ValidationError(f"{sigma} has a fixed point at {r}")
    gain = _des_gain(order, pi, sigma)
    if occurrence is None:
        num = _FPF_OFF_DIAG[gain]
    else:
        num = _FPF_DIAG[gain - _DIAG_SHIFT[order][_SWAP[sign]]]
    return SourcePair(family, order, pi, GridPoint(*point), f"F{num}{_sym(sign)}", occurrence)


# Independent class membership -------------------------------------------

def is_member(source: SourcePair) -> bool:
    """Recompute the class conditions from d-types and touch points only."""
    try:
        letter, detail, sign = parse_class(source.cls)
    except ValueError:
        return False
    pi, order = source.perm, source.order
    n = len(pi.window)
    i, j = source.point
    if not (1 <= i <= n + 1 and 1 <= j <= n + 1):
        return False
    expected_letter = {Family.ALL: "D", Family.INVOLUTIONS: "E", Family.FPF_INVOLUTIONS: "F"}
    if letter != expected_letter[source.family]:
        return False
    c = classify(pi)
    if source.family is Family.INVOLUTIONS and not c.is_involution:
        return False
    if source.family is Family.FPF_INVOLUTIONS and not c.is_fpf_involution:
        return False
    dt = d_type(pi, (i, j), sign, order)

    if letter == "D":
        return source.occurrence is None and dt == detail
    if letter == "E":
        if source.occurrence is not None:
            return False
        if detail in (1, 2):
            kind = "0h" if detail == 1 else "1h"
            return (i, j) in touch_point_set(pi, order, kind, sign)
        if detail == 3:
            return dt == (0, 0)
        if detail == 5:
            return dt == (1, 1)
        return dt in ((1, 0), (0, 1)) or (i == j and dt in ((0, 0), (1, 1)))
    # F
    diagonal = i == j
    if diagonal != (source.occurrence is not None):
        return False
    if diagonal and source.occurrence not in (1, 2):
        return False
    want = {1: ((0, 0),), 3: ((1, 1),), 5: ((1, 0), (0, 1)), 2: ((0, 0),), 4: ((1, 1),)}
    if detail in (2, 4) and not diagonal:
        return False
    if detail in (1, 3, 5) and diagonal:
        return False
    return dt in want[detail]


# Enumeration -------------------------------------------------------------

def source_size(family: Family, n: int) -> int:
    """Length of the source permutations for targets of length n."""
    return n - 1 if family is Family.ALL else n - 2


def _points(size):
    return [(r, s) for r in range(1, size + 2) for s in range(1, size + 2)]


def _sources_for_perm(family, order, pi):
    size = len(pi.window)
    out = []
    for sign in (1, -1):
        s = _sym(sign)
        if family is Family.ALL:
            for pt in _points(size):
                p, q = d_type(pi, pt, sign, order)
                out.append(SourcePair(family, order, pi, GridPoint(*pt), f"D({p},{q}){s}"))
        elif family is Family.INVOLUTIONS:
            for pt in _points(size):
                p, q = d_type(pi, pt, sign, order)
                if pt[0] == pt[1]:
                    num = 3 + p + _DIAG_SHIFT[order][_FIXED[sign]]
                    out.append(SourcePair(family, order, pi, GridPoint(*pt), f"E{num}{s}"))
                    other = 3 + p + _DIAG_SHIFT[order][_SWAP[sign]]
                    out.append(SourcePair(family, order, pi, GridPoint(*pt), f"E{other}{s}"))
                else:
                    out.append(SourcePair(family, order, pi, GridPoint(*pt), f"E{3 + p + q}{s}"))
        else:
            for pt in _points(size):
                p, q = d_type(pi, pt, sign, order)
                if pt[0] == pt[1]:
                    num = _FPF_DIAG[p]
                    for occ in (1, 2):
                        out.append(SourcePair(family, order, pi, GridPoint(*pt), f"F{num}{s}", occ))
                else:
                    out.append(SourcePair(family, order, pi, GridPoint(*pt),
                                          f"F{_FPF_OFF_DIAG[p + q]}{s}"))
    return out


def _single_sources(order, pi):
    out = []
    for sign in (1, -1):
        for num, kind in ((1, "0h"), (2, "1h")):
            for pt in sorted(touch_point_set(pi, order, kind, sign)):
                out.append(SourcePair(Family.INVOLUTIONS, order, pi, GridPoint(*pt),
                                      f"E{num}{_sym(sign)}"))
    return out


def enumerate_sources(family: Family, order: Order, n: int, target_stats=None):
    """Every source pair whose image has length n, each exactly once.

    ``target_stats`` restricts to images with des = k (INV/FPF, an int) or
    (des, ides) = (i, j) (B family, a pair).  Sources are classified by
    d-type and touch points, never by running build_target.
    """
    order = Order.parse(order)
    if family is Family.FPF_INVOLUTIONS and n % 2:
        return
    sub = Family.ALL if family is Family.ALL else family
    pools = []
    if family is Family.INVOLUTIONS:
        if n >= 1:
            pools.append(("single", n - 1))
        if n >= 2:
            pools.append(("double", n - 2))
    elif n >= 1:
        pools.append(("double" if family is not Family.ALL else "b", source_size(family, n)))
    for kind, size in pools:
        if size < 0:
            continue
        for w in enumerate_windows(size, sub):
            pi = SignedPermutation(w)
            if kind == "single":
                cands = _single_sources(order, pi)
            else:
                cands = _sources_for_perm(family, order, pi)
            for src in cands:
                if target_stats is None or source_target_stats(src) == _norm_stats(family, target_stats):
                    yield src


def _norm_stats(family, stats):
    return tuple(stats) if family is Family.ALL else stats


def source_target_stats(src: SourcePair):
    """Statistics the image of ``src`` will have, read off the class tag."""
    letter, detail, sign = parse_class(src.cls)
    w = src.perm.window
    d = des_window(w, src.order)
    if letter == "D":
        return (d + detail[0], ides_window(w, src.order) + detail[1])
    return d + term_gain(src)


def term_gain(src: SourcePair) -> int:
    """des(image) - des(source perm) implied by the class tag alone."""
    letter, detail, sign = parse_class(src.cls)
    if letter == "D":
        return detail[0]
    if letter == "E":
        return detail - 1 if detail <= 2 else detail - 3
    if detail in (1, 3, 5):
        return {1: 0, 5: 1, 3: 2}[detail]
    p = 0 if detail == 2 else 1
    return p + _DIAG_SHIFT[src.order][_SWAP[sign]]


def term_of(src: SourcePair):
    """Which right-hand term of the recurrence the source is counted in.

    B: the (p, q) shift; INV: 1..5 (E-class number); FPF: 0, 1, 2 for the
    J_{2n-2,k}, J_{2n-2,k-1}, J_{2n-2,k-2} terms.
    """
    letter, detail, sign = parse_class(src.cls)
    if letter == "D":
        return detail
    if letter == "E":
        return detail
    return term_gain(src)


def enumerate_targets(family: Family, n: int, target_stats=None, order: Order = Order.NATURAL):
    for w in enumerate_windows(n, family):
        sigma = SignedPermutation(w)
        if target_stats is not None:
            if family is Family.ALL:
                if (des_window(w, order), ides_window(w, order)) != tuple(target_stats):
                    continue
            elif des_window(w, order) != target_stats:
                continue
        for r in range(1, n + 1):
            yield TargetPair(sigma, r)


@dataclass
class BijectionReport:
    family: Family
    order: Order
    n: int
    targets: int
    sources: int
    class_counts: dict
    failures: list

    @property
    def ok(self):
        return not self.failures

    def to_dict(self):
        return {
            "family": self.family.value, "order": self.order.value, "n": self.n,
            "targets": self.targets, "sources": self.sources,
            "class_counts": dict(sorted(self.class_counts.items())),
            "failures": self.failures, "ok": self.ok,
        }


def _source_key(src):
    return (src.perm.window, tuple(src.point), src.cls, src.occurrence)


def verify_round_trips(family: Family, order: Order, n: int, max_failures: int = 20):
    """Check build_target(split_target(y)) = y on all targets and split_target(build_target(x)) = x on all sources."""
    order = Order.parse(order)
    failures = []
    counts = Counter()
    n_targets = 0
    for tgt in enumerate_targets(family, n):
        n_targets += 1
        try:
            src = split_target(family, order, tgt)
            counts[src.cls] += 1
            if not is_member(src):
                raise ClassValidationError(f"split_target gave non-member {src.describe()}")
            back = build_target(src, validate=False)
            if back != tgt:
                raise AssertionError(f"build_target(split_target) = ({back.perm},{back.index})")
        except Exception as exc:  # report, keep going
            if len(failures) < max_failures:
                failures.append(f"target ({tgt.perm},{tgt.index}): {exc}")
    n_sources = 0
    for src in enumerate_sources(family, order, n):
        n_sources += 1
        try:
            tgt = build_target(src)
            back = split_target(family, order, tgt)
            if _source_key(back) != _source_key(src):
                raise AssertionError(f"split_target(build_target) = {back.describe()}")
        except Exception as exc:
            if len(failures) < max_failures:
                failures.append(f"source {src.describe()}: {exc}")
    if n_sources != n_targets and len(failures) < max_failures:
        failures.append(f"{n_sources} sources vs {n_targets} targets")
    return BijectionReport(family, order, n, n_targets, n_sources, dict(counts), failures)


def term_cardinalities(family: Family, order: Order, n: int):
    """Compare class-partitioned source counts with every recurrence term.

    Returns a list of mismatches ``(stats, term, sources, expected)``; empty
    means each term of the recurrence for length n is realized exactly.
    FPF terms are compared in doubled form (targets number 2n * J_{2n,k}).
    """
    from .recurrences import rec_b_terms, rec_i_terms, rec_j_terms
    from .statistics import descent_vector, two_sided_triangle

    order = Order.parse(order)
    counts = Counter()
    for src in enumerate_sources(family, order, n):
        counts[(source_target_stats(src), term_of(src))] += 1
    expected = {}
    if family is Family.ALL:
        prev = two_sided_triangle(n - 1, order)
        for i in range(n + 1):
            for j in range(n + 1):
                for shift, v in rec_b_terms(prev, n, i, j).items():
                    expected[((i, j), shift)] = v
    elif family is Family.INVOLUTIONS:
        p1 = descent_vector(n - 1, Family.INVOLUTIONS, order)
        p2 = descent_vector(n - 2, Family.INVOLUTIONS, order)
        for k in range(n + 1):
            for term, v in rec_i_terms(p1, p2, n, k).items():
                expected[(k, term)] = v
    else:
        prev = descent_vector(n - 2, Family.FPF_INVOLUTIONS, order)
        for k in range(n + 1):
            for shift, v in rec_j_terms(prev, n // 2, k, order).items():
                expected[(k, shift)] = 2 * v
    bad = []
    for key in sorted(set(expected) | set(counts), key=repr):
        if counts.get(key, 0) != expected.get(key, 0):
            bad.append((key[0], key[1], counts.get(key, 0), expected.get(key, 0)))
    return bad
