"""Exact bivariate integer polynomials in (s, t), stored sparsely."""
from __future__ import annotations


class BivarPoly:
    """Polynomial sum c[i,j] s^i t^j with Python int coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for key, c in (coeffs or {}).items():
            if c:
                clean[tuple(key)] = c
        self.coeffs = clean

    @classmethod
    def from_table(cls, table):
        return cls({(i, j): c for i, row in enumerate(table) for j, c in enumerate(row)})

    @classmethod
    def monomial(cls, c, i=0, j=0):
        return cls({(i, j): c})

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out = {}
        for (a, b), c in self.coeffs.items():
            for (d, e), f in other.coeffs.items():
                key = (a + d, b + e)
                out[key] = out.get(key, 0) + c * f
        return BivarPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (BivarPoly, int)):
            return self.coeffs == _lift(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def d_s(self):
        return BivarPoly({(i - 1, j): i * c for (i, j), c in self.coeffs.items() if i})

    def d_t(self):
        return BivarPoly({(i, j - 1): j * c for (i, j), c in self.coeffs.items() if j})

    def coefficient(self, i, j):
        return self.coeffs.get((i, j), 0)

    def degrees(self):
        if not self.coeffs:
            return (0, 0)
        return (max(i for i, _ in self.coeffs), max(j for _, j in self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j) in sorted(self.coeffs):
            c = self.coeffs[(i, j)]
            mono = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("s", i), ("t", j)) if e)
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


S = BivarPoly({(1, 0): 1})
T = BivarPoly({(0, 1): 1})


def _lift(x):
    if isinstance(x, BivarPoly):
        return x
    if isinstance(x, int):
        return BivarPoly({(0, 0): x})
    raise TypeError(f"cannot combine BivarPoly with {type(x).__name__}")
