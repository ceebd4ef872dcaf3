"""Descent and inverse-descent statistics under the natural order and the r-order."""
from __future__ import annotations

import csv
import enum
import io
import json
import os
from dataclasses import dataclass
from functools import lru_cache

from .core import (Family, SignedPermutation, enumerate_windows, family_size,
                   inverse_window)
from .polynomial import BivarPoly

DEFAULT_MAX_ENUMERATION = 2_000_000
MAX_ENUM_ENV = "SIGNEDPERM_MAX_ENUM"


class ResourceLimitError(RuntimeError):
    pass


class Order(enum.Enum):
    """Total order used for every comparison.

    NATURAL is ``... < -1 < 0 < 1 < ...``; R puts all negatives first,
    ordered ``-1 < -2 < -3 < ...``, then 0, then the positives.
    """
    NATURAL = "natural"
    R = "r"

    @classmethod
    def parse(cls, text):
        if isinstance(text, Order):
            return text
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown order {text!r} (expected natural or r)") from None


def order_key(v: int, order: Order):
    """Integer key whose usual order is the requested order."""
    if order is Order.NATURAL or v >= 0:
        return v
    # negatives: -1 smallest, then -2, ...; all below 0
    return -(1 << 40) - v


def greater(a: int, b: int, order: Order) -> bool:
    return order_key(a, order) > order_key(b, order)


def max_enumeration() -> int:
    raw = os.environ.get(MAX_ENUM_ENV)
    if raw is None:
        return DEFAULT_MAX_ENUMERATION
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ENUM_ENV} must be an integer, got {raw!r}") from None


def guard(size: int, what: str, limit=None):
    limit = max_enumeration() if limit is None else limit
    if size > limit:
        raise ResourceLimitError(
            f"{what} needs {size} elements, above the cap {limit} "
            f"(set {MAX_ENUM_ENV} or --max-enum to raise it)")


# Window-level helpers. These are the hot loops; keep them plain.

def des_window(w, order: Order) -> int:
    count = 0
    prev = 0
    if order is Order.NATURAL:
        for v in w:
            if prev > v:
                count += 1
            prev = v
    else:
        for v in w:
            k = v if v >= 0 else -(1 << 40) - v
            if prev > k:
                count += 1
            prev = k
    return count


def ides_window(w, order: Order) -> int:
    return des_window(inverse_window(w), order)


def descent_set(pi: SignedPermutation, order: Order) -> frozenset:
    w = (0,) + pi.window
    return frozenset(i for i in range(len(pi.window)) if greater(w[i], w[i + 1], order))


def idescent_set(pi: SignedPermutation, order: Order) -> frozenset:
    return descent_set(SignedPermutation(inverse_window(pi.window)), order)


def des(pi: SignedPermutation, order: Order = Order.NATURAL) -> int:
    return des_window(pi.window, order)


def ides(pi: SignedPermutation, order: Order = Order.NATURAL) -> int:
    return des_window(inverse_window(pi.window), order)


@dataclass(frozen=True)
class Triangle:
    n: int
    order: Order
    counts: tuple  # (n+1) rows of (n+1) ints, counts[i][j] = #{des = i, ides = j}

    def at(self, i, j):
        if 0 <= i <= self.n and 0 <= j <= self.n:
            return self.counts[i][j]
        return 0

    def total(self):
        return sum(map(sum, self.counts))

    def transpose(self):
        return Triangle(self.n, self.order, tuple(zip(*self.counts)))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i\\j"] + list(range(self.n + 1)))
        for i, row in enumerate(self.counts):
            writer.writerow([i] + list(row))
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "order": self.order.value,
                           "counts": [list(r) for r in self.counts]})

    def to_text(self) -> str:
        width = max(len(str(c)) for row in self.counts for c in row)
        width = max(width, len(str(self.n)))
        head = " " * (width + 1) + " ".join(str(j).rjust(width) for j in range(self.n + 1))
        lines = [head]
        for i, row in enumerate(self.counts):
            lines.append(str(i).rjust(width) + " " + " ".join(str(c).rjust(width) for c in row))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DescentVector:
    n: int
    family: Family
    order: Order
    counts: tuple

    def at(self, k):
        return self.counts[k] if 0 <= k <= self.n else 0

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "count"])
        for k, c in enumerate(self.counts):
            writer.writerow([k, c])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "family": self.family.value,
                           "order": self.order.value, "counts": list(self.counts)})

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.counts) + "\n"


def _windows_with_first(n, first):
    """All windows of B_n whose first entry is ``first``, in enumeration order."""
    m0 = abs(first)
    for rest in enumerate_windows(n - 1):
        yield (first,) + tuple(
            v + (1 if v > 0 else -1) if abs(v) >= m0 else v for v in rest)


def _triangle_shard(n, order, first):
    counts = [[0] * (n + 1) for _ in range(n + 1)]
    for w in _windows_with_first(n, first):
        counts[des_window(w, order)][des_window(inverse_window(w), order)] += 1
    return counts


def _first_entries(n):
    return [s * m for m in range(1, n + 1) for s in (-1, 1)]


def two_sided_triangle(n: int, order: Order = Order.NATURAL, workers: int = 1,
                       max_enum=None) -> Triangle:
    """Joint (des, ides) counts over all of B_n, by exhaustive enumeration.

    With ``workers != 1`` the enumeration is sharded by first entry over a
    process pool; shards are merged by addition so the result is identical.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    guard(family_size(n), f"B_{n} triangle", max_enum)
    order = Order.parse(order)
    if n == 0:
        return Triangle(0, order, ((1,),))
    if workers == 1:
        return _cached_triangle(n, order)
    from .parallel import pmap
    shards = pmap(_triangle_shard, [(n, order, f) for f in _first_entries(n)], workers)
    counts = [[0] * (n + 1) for _ in range(n + 1)]
    for shard in shards:
        for i in range(n + 1):
            for j in range(n + 1):
                counts[i][j] += shard[i][j]
    return Triangle(n, order, tuple(tuple(r) for r in counts))


@lru_cache(maxsize=None)
def _cached_triangle(n, order):
    counts = [[0] * (n + 1) for _ in range(n + 1)]
    for f in _first_entries(n):
        shard = _triangle_shard(n, order, f)
        for i in range(n + 1):
            for j in range(n + 1):
                counts[i][j] += shard[i][j]
    return Triangle(n, order, tuple(tuple(r) for r in counts))


def eulerian_polynomial(n: int, order: Order = Order.NATURAL) -> tuple:
    """Coefficients of B_n(t), lowest degree first."""
    tri = two_sided_triangle(n, order)
    return tuple(sum(row) for row in tri.counts)


def two_sided_polynomial(n: int, order: Order = Order.NATURAL) -> BivarPoly:
    return BivarPoly.from_table(two_sided_triangle(n, order).counts)


def descent_vector(n: int, family: Family = Family.INVOLUTIONS,
                   order: Order = Order.NATURAL, max_enum=None) -> DescentVector:
    if family is Family.ALL:
        raise ValueError("descent_vector takes INVOLUTIONS or FPF_INVOLUTIONS")
    guard(family_size(n, family), f"{family.value} vector for n={n}", max_enum)
    order = Order.parse(order)
    return DescentVector(n, family, order, _cached_vector(n, family, order))


@lru_cache(maxsize=None)
def _cached_vector(n, family, order):
    counts = [0] * (n + 1)
    for w in enumerate_windows(n, family):
        counts[des_window(w, order)] += 1
    return tuple(counts)
