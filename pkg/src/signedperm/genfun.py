"""Truncated bivariate power series in (x, t) and the involution generating functions.

Both identities have the shape

    sum_n V_n(t) x^n / (1 - t)^(n+1)  =  sum_m t^m * F_m(x)

where V_n(t) is the r-order descent polynomial of the involutions (or of the
fixed-point-free involutions) in B_n.  For involutions
F_m = (1-x)^-(2m+1) (1-x^2)^-(m^2); for fpf involutions F_m = (1-x^2)^-(m^2).
"""
from __future__ import annotations

import json

from .core import Family
from .statistics import Order, descent_vector


class TruncSeries:
    """Coefficients c[a][b] of x^a t^b for a <= max_x, b <= max_t, exact ints."""

    __slots__ = ("max_x", "max_t", "coeffs")

    def __init__(self, max_x, max_t, coeffs=None):
        if max_x < 0 or max_t < 0:
            raise ValueError("truncation degrees must be >= 0")
        self.max_x, self.max_t = max_x, max_t
        table = [[0] * (max_t + 1) for _ in range(max_x + 1)]
        if coeffs is not None:
            for a, row in enumerate(coeffs):
                if a > max_x:
                    break
                for b, c in enumerate(row):
                    if b > max_t:
                        break
                    table[a][b] = c
        self.coeffs = table

    @classmethod
    def constant(cls, c, max_x, max_t):
        s = cls(max_x, max_t)
        s.coeffs[0][0] = c
        return s

    @classmethod
    def from_terms(cls, terms, max_x, max_t):
        """Build from ``{(a, b): c}``; terms beyond the truncation are dropped."""
        s = cls(max_x, max_t)
        for (a, b), c in terms.items():
            if a <= max_x and b <= max_t:
                s.coeffs[a][b] += c
        return s

    def _like(self, other):
        if (self.max_x, self.max_t) != (other.max_x, other.max_t):
            raise ValueError("series truncations differ")

    def __getitem__(self, key):
        a, b = key
        return self.coeffs[a][b]

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncSeries.constant(other, self.max_x, self.max_t)
        self._like(other)
        return TruncSeries(self.max_x, self.max_t,
                           [[u + v for u, v in zip(r, s)] for r, s in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.max_x, self.max_t, [[-c for c in r] for r in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries(self.max_x, self.max_t, [[other * c for c in r] for r in self.coeffs])
        self._like(other)
        mx, mt = self.max_x, self.max_t
        out = [[0] * (mt + 1) for _ in range(mx + 1)]
        A, B = self.coeffs, other.coeffs
        for a in range(mx + 1):
            for b in range(mt + 1):
                c = A[a][b]
                if not c:
                    continue
                for d in range(mx - a + 1):
                    row_in, row_out = B[d], out[a + d]
                    for e in range(mt - b + 1):
                        if row_in[e]:
                            row_out[b + e] += c * row_in[e]
        return TruncSeries(mx, mt, out)

    __rmul__ = __mul__

    def reciprocal(self):
        """Inverse series; the constant term must be a unit (+1 or -1)."""
        c0 = self.coeffs[0][0]
        if c0 not in (1, -1):
            raise ZeroDivisionError("constant term must be +1 or -1 for an integer inverse")
        mx, mt = self.max_x, self.max_t
        A = self.coeffs
        out = [[0] * (mt + 1) for _ in range(mx + 1)]
        # solve (self * out)[a][b] = [a == b == 0] in graded order
        for a in range(mx + 1):
            for b in range(mt + 1):
                acc = 1 if a == 0 and b == 0 else 0
                for d in range(a + 1):
                    for e in range(b + 1):
                        if (d, e) != (0, 0) and A[d][e]:
                            acc -= A[d][e] * out[a - d][b - e]
                out[a][b] = acc * c0  # c0 is its own inverse
        return TruncSeries(mx, mt, out)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncSeries.constant(1, self.max_x, self.max_t)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.max_x, self.max_t, self.coeffs) == (other.max_x, other.max_t, other.coeffs)

    def __repr__(self):
        return f"TruncSeries({self.max_x}, {self.max_t}, {self.coeffs})"


_FAMILIES = {"iub": Family.INVOLUTIONS, "jub": Family.FPF_INVOLUTIONS}


def _family(family):
    if isinstance(family, Family):
        return family
    try:
        return _FAMILIES[family.lower()]
    except KeyError:
        raise ValueError(f"family must be iub or jub, got {family!r}") from None


def rhs_series(family, max_x: int, max_t: int) -> TruncSeries:
    """The m-sum side.  Terms with m > max_t only touch degrees above max_t in t."""
    fam = _family(family)
    one = TruncSeries.constant(1, max_x, max_t)
    x = TruncSeries.from_terms({(1, 0): 1}, max_x, max_t)
    inv_1mx = (one - x).reciprocal()
    inv_1mx2 = (one - x * x).reciprocal()
    total = TruncSeries(max_x, max_t)
    for m in range(max_t + 1):
        tm = TruncSeries.from_terms({(0, m): 1}, max_x, max_t)
        term = tm * inv_1mx2 ** (m * m)
        if fam is Family.INVOLUTIONS:
            term = term * inv_1mx ** (2 * m + 1)
        total = total + term
    return total


def lhs_series(family, max_x: int, max_t: int, vectors=None) -> TruncSeries:
    """sum_{n <= max_x} V_n(t) x^n / (1-t)^(n+1) with V_n from brute force.

    ``vectors`` may map n to a coefficient sequence to override the
    enumerated descent vector (used for fault injection).
    """
    fam = _family(family)
    one = TruncSeries.constant(1, max_x, max_t)
    t = TruncSeries.from_terms({(0, 1): 1}, max_x, max_t)
    inv_1mt = (one - t).reciprocal()
    total = TruncSeries(max_x, max_t)
    for n in range(max_x + 1):
        if vectors is not None and n in vectors:
            counts = vectors[n]
        else:
            counts = descent_vector(n, fam, Order.R).counts
        if not any(counts):
            continue
        poly = TruncSeries.from_terms({(n, k): c for k, c in enumerate(counts)}, max_x, max_t)
        total = total + poly * inv_1mt ** (n + 1)
    return total


def compare(lhs: TruncSeries, rhs: TruncSeries) -> dict:
    """Equality report, with the first differing coefficient in (x, t) order."""
    lhs._like(rhs)
    for a in range(lhs.max_x + 1):
        for b in range(lhs.max_t + 1):
            if lhs.coeffs[a][b] != rhs.coeffs[a][b]:
                return {"equal": False,
                        "first_mismatch": {"x": a, "t": b, "lhs": lhs.coeffs[a][b],
                                           "rhs": rhs.coeffs[a][b]}}
    return {"equal": True, "first_mismatch": None}


def check_identity(family, max_x: int = 6, max_t: int = 6) -> dict:
    report = compare(lhs_series(family, max_x, max_t), rhs_series(family, max_x, max_t))
    name = {v: k for k, v in _FAMILIES.items()}[_family(family)]
    report.update({"family": name, "max_x": max_x, "max_t": max_t})
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)
