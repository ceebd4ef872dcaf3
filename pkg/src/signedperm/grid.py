"""Signed permutation grids and the insertion/deletion calculus.

The grid of pi in B_n is an n x n board whose row i has one filled square in
column |pi_i|, positive or negative with the sign of pi_i.  Grid points (r, s)
are the line intersections, 1 <= r, s <= n+1; point (r, s) sits at the top
left corner of square <r, s>.

Everything acts on windows; grids are only ever a computed view.
"""
from __future__ import annotations

import enum
from typing import NamedTuple

from .core import SignedPermutation, ValidationError


class UnfilledSquareError(ValidationError):
    pass


class ConfigurationMismatch(ValidationError):
    """A double deletion was asked for a pair the permutation does not contain."""


class GridPoint(NamedTuple):
    row: int
    col: int


class Square(NamedTuple):
    row: int
    col: int
    sign: int  # +1 or -1


class DoubleOp(enum.Enum):
    """Ways to insert two squares into an involution at once."""
    MIRROR = "mirror"          # <i, j> and <j, i>, off the diagonal
    MIRROR_NEG = "mirror_neg"
    FIXED = "fixed"            # two diagonal squares at rows i, i+1
    FIXED_NEG = "fixed_neg"
    SWAP = "swap"              # <i, i+1> and <i+1, i>
    SWAP_NEG = "swap_neg"

    @property
    def sign(self):
        return -1 if self.value.endswith("neg") else 1


def squares(pi: SignedPermutation):
    return [Square(i, abs(v), 1 if v > 0 else -1) for i, v in enumerate(pi.window, 1)]


def transpose_squares(sq):
    return sorted(Square(s.col, s.row, s.sign) for s in sq)


def _check_sign(sign):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def insert_window(w, r, s, sign):
    # Shift magnitudes >= s up by one, then drop the new entry in at row r.
    out = [v + 1 if v >= s else (v - 1 if v <= -s else v) for v in w]
    out.insert(r - 1, sign * s)
    return tuple(out)


def delete_window(w, i):
    j = abs(w[i - 1])
    out = [v - 1 if v > j else (v + 1 if v < -j else v) for v in w]
    del out[i - 1]
    return tuple(out)


def insert(pi: SignedPermutation, point, sign: int = 1) -> SignedPermutation:
    """Insert a square of the given sign at grid point ``point = (r, s)``.

    The result sigma lies in B_{n+1} with sigma_r = sign * s, every other
    square kept in its relative position.
    """
    r, s = point
    n = len(pi.window)
    _check_sign(sign)
    if not (1 <= r <= n + 1 and 1 <= s <= n + 1):
        raise ValidationError(f"grid point {(r, s)} outside [1, {n + 1}]^2")
    return SignedPermutation(insert_window(pi.window, r, s, sign))


def delete(sigma: SignedPermutation, square) -> SignedPermutation:
    """Delete row i and column j of the grid; ``<i, j>`` must be filled."""
    i, j = square[0], square[1]
    n = len(sigma.window)
    if not (1 <= i <= n) or abs(sigma.window[i - 1]) != j:
        raise UnfilledSquareError(f"square <{i},{j}> is not filled in {sigma}")
    return SignedPermutation(delete_window(sigma.window, i))


def insert_mirror_pair(pi: SignedPermutation, point, sign: int = 1) -> SignedPermutation:
    """Insert the symmetric pair of squares <i, j>, <j, i> (i != j) into an involution."""
    i, j = point
    _check_sign(sign)
    n = len(pi.window)
    if i == j:
        raise ValidationError("a mirror pair needs i != j; use insert_diagonal_pair on the diagonal")
    if not (1 <= i <= n + 1 and 1 <= j <= n + 1):
        raise ValidationError(f"grid point {(i, j)} outside [1, {n + 1}]^2")
    w = insert_window(pi.window, i, j, sign)
    if i < j:
        w = insert_window(w, j + 1, i, sign)
    else:
        w = insert_window(w, j, i + 1, sign)
    return SignedPermutation(w)


_SECOND_ROW_OFFSET = {
    DoubleOp.FIXED: 0, DoubleOp.FIXED_NEG: 0,   # second square at (i, i)
    DoubleOp.SWAP: 1, DoubleOp.SWAP_NEG: 1,     # second square at (i+1, i)
}


def insert_diagonal_pair(pi: SignedPermutation, i: int, variant: DoubleOp) -> SignedPermutation:
    """Insert a 12-, 1bar2bar-, 21- or 2bar1bar-pair centered at (i, i)."""
    if variant not in _SECOND_ROW_OFFSET:
        raise ValidationError(f"{variant} is not a diagonal pair op")
    n = len(pi.window)
    if not 1 <= i <= n + 1:
        raise ValidationError(f"index {i} outside [1, {n + 1}]")
    sign = variant.sign
    w = insert_window(pi.window, i, i, sign)
    w = insert_window(w, i + _SECOND_ROW_OFFSET[variant], i, sign)
    return SignedPermutation(w)


def double_insert(pi, op: DoubleOp, anchor):
    """Dispatch helper: ``anchor`` is (i, j) for mirror ops and i for diagonal ops."""
    if op in (DoubleOp.MIRROR, DoubleOp.MIRROR_NEG):
        return insert_mirror_pair(pi, anchor, op.sign)
    return insert_diagonal_pair(pi, anchor, op)


def _require(cond, msg):
    if not cond:
        raise ConfigurationMismatch(msg)


def double_delete(sigma: SignedPermutation, op: DoubleOp, anchor) -> SignedPermutation:
    """Undo a double insertion. ``anchor`` is (i, j) for mirror ops, i for diagonal ops.

    The case is explicit; the permutation must hold exactly the pair the
    corresponding insertion would have produced.
    """
    w = sigma.window
    n = len(w)

    def val(k):
        _require(1 <= k <= n, f"position {k} outside [1, {n}]")
        return w[k - 1]

    sign = op.sign
    if op in (DoubleOp.MIRROR, DoubleOp.MIRROR_NEG):
        i, j = anchor
        _require(i != j, "mirror deletion needs i != j")
        if i < j:
            # squares <i, j+1> and <j+1, i>
            _require(val(i) == sign * (j + 1), f"needs sigma_{i} = {sign * (j + 1)}")
            _require(val(j + 1) == sign * i, f"needs sigma_{j + 1} = {sign * i}")
            return SignedPermutation(delete_window(delete_window(w, j + 1), i))
        # squares <i+1, j> and <j, i+1>
        _require(val(i + 1) == sign * j, f"needs sigma_{i + 1} = {sign * j}")
        _require(val(j) == sign * (i + 1), f"needs sigma_{j} = {sign * (i + 1)}")
        return SignedPermutation(delete_window(delete_window(w, j), i))
    if op not in _SECOND_ROW_OFFSET:
        raise ValidationError(f"unknown double operation {op!r}")
    i = anchor
    if _SECOND_ROW_OFFSET[op] == 0:
        _require(val(i) == sign * i, f"needs sigma_{i} = {sign * i}")
        _require(val(i + 1) == sign * (i + 1), f"needs sigma_{i + 1} = {sign * (i + 1)}")
    else:
        _require(val(i) == sign * (i + 1), f"needs sigma_{i} = {sign * (i + 1)}")
        _require(val(i + 1) == sign * i, f"needs sigma_{i + 1} = {sign * i}")
    return SignedPermutation(delete_window(delete_window(w, i + 1), i))


def render(pi: SignedPermutation) -> str:
    """ASCII view of the grid: '.' empty, '#' positive, 'x' negative, rows top to bottom."""
    n = len(pi.window)
    lines = []
    for v in pi.window:
        row = ["."] * n
        row[abs(v) - 1] = "#" if v > 0 else "x"
        lines.append("".join(row))
    return "\n".join(lines)


def render_points(pi: SignedPermutation, points) -> str:
    """Interleave grid points ('o' on a path, '+' otherwise) with the squares."""
    n = len(pi.window)
    pts = set(map(tuple, points))
    lines = []
    for r in range(1, n + 2):
        lines.append(" ".join("o" if (r, c) in pts else "+" for c in range(1, n + 2)))
        if r <= n:
            v = pi.window[r - 1]
            cells = ["."] * n
            cells[abs(v) - 1] = "#" if v > 0 else "x"
            lines.append(" " + " ".join(cells))
    return "\n".join(lines)
