"""d-types of grid points, paths through the grid, and their enumeration.

The d^+-type (resp. d^-) of a grid point is the change in (des, ides) caused
by inserting a positive (resp. negative) square there.  It is always computed
from that definition; the closed-form counts are checked against it.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import lru_cache

from .core import SignedPermutation, ValidationError, inverse_window, negative_count
from .grid import GridPoint, insert_window
from .statistics import Order, des_window

SIGNS = (1, -1)
PAIRS = ((0, 0), (1, 0), (0, 1), (1, 1))
KINDS = ("0h", "1h", "0v", "1v")


class CountMode(enum.Enum):
    BRUTE_FORCE = "brute"
    CLOSED_FORM = "closed"


class PathMode(enum.Enum):
    FORMULA = "formula"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class PathTrace:
    kind: str   # "0h", "1h", "0v" or "1v"
    sign: int
    points: tuple

    def __len__(self):
        return len(self.points)


def sign_symbol(sign):
    return "+" if sign > 0 else "-"


def _stats(w, order):
    return des_window(w, order), des_window(inverse_window(w), order)


def d_type_window(w, point, sign, order, base=None):
    d0, i0 = base if base is not None else _stats(w, order)
    d1, i1 = _stats(insert_window(w, point[0], point[1], sign), order)
    return d1 - d0, i1 - i0


def d_type(pi: SignedPermutation, point, sign: int, order: Order = Order.NATURAL):
    """(p, q) = stats after inserting a ``sign`` square at ``point`` minus stats before."""
    n = len(pi.window)
    r, s = point
    if not (1 <= r <= n + 1 and 1 <= s <= n + 1):
        raise ValidationError(f"grid point {(r, s)} outside [1, {n + 1}]^2")
    if sign not in SIGNS:
        raise ValueError("sign must be +1 or -1")
    return d_type_window(pi.window, point, sign, order)


@lru_cache(maxsize=4096)
def _table(w, order):
    n = len(w)
    base = _stats(w, order)
    out = {}
    for sign in SIGNS:
        for r in range(1, n + 2):
            for s in range(1, n + 2):
                out[(sign, r, s)] = d_type_window(w, (r, s), sign, order, base)
    return out


def d_type_table(pi: SignedPermutation, order: Order = Order.NATURAL):
    """All d-types at once: ``{(sign, row, col): (p, q)}``."""
    return _table(pi.window, order)


def _brute_counts(w, order):
    n = len(w)
    base = _stats(w, order)
    counts = {(sign, pair): 0 for sign in SIGNS for pair in PAIRS}
    for sign in SIGNS:
        for r in range(1, n + 2):
            for s in range(1, n + 2):
                counts[(sign, d_type_window(w, (r, s), sign, order, base))] += 1
    return counts


def closed_form_counts(n, d, i, m):
    """Number of grid points of each type, from (n, des, ides, #negatives).

    The same formulas serve both orders once des/ides are taken in that order.
    """
    return {
        (1, (0, 0)): (d + 1) * (i + 1) - m + n,
        (1, (1, 0)): (i + 1) * (n - d) + m - n,
        (1, (0, 1)): (d + 1) * (n - i) + m - n,
        (1, (1, 1)): (n - d) * (n - i) - m + n,
        (-1, (0, 0)): d * i + m,
        (-1, (1, 0)): i * (n - d + 1) - m,
        (-1, (0, 1)): d * (n - i + 1) - m,
        (-1, (1, 1)): (n - d + 1) * (n - i + 1) + m,
    }


def count_d_types(pi: SignedPermutation, order: Order = Order.NATURAL,
                  mode: CountMode = CountMode.BRUTE_FORCE):
    """Map ``(sign, (p, q)) -> count`` over all (n+1)^2 grid points."""
    if mode is CountMode.BRUTE_FORCE:
        return _brute_counts(pi.window, order)
    d, i = _stats(pi.window, order)
    return closed_form_counts(len(pi.window), d, i, negative_count(pi))


# Paths -------------------------------------------------------------------

# Diagonal direction per (order, kind, sign): "SE", "NE" (h-paths) or "SE", "SW" (v-paths).
_DIRECTIONS = {
    Order.NATURAL: {
        ("0h", 1): "SE", ("1h", 1): "NE", ("0v", 1): "SE", ("1v", 1): "SW",
        ("0h", -1): "NE", ("1h", -1): "SE", ("0v", -1): "SW", ("1v", -1): "SE",
    },
    Order.R: {
        ("0h", 1): "SE", ("1h", 1): "NE", ("0v", 1): "SE", ("1v", 1): "SW",
        ("0h", -1): "SE", ("1h", -1): "NE", ("0v", -1): "SE", ("1v", -1): "SW",
    },
}


def step_direction(order, kind, sign):
    return _DIRECTIONS[order][(kind, sign)]


def _check_kind(kind, sign):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if sign not in SIGNS:
        raise ValueError("sign must be +1 or -1")


def path_counts_formula(n, d, i):
    return {
        ("0h", 1): d + 1, ("1h", 1): n - d, ("0h", -1): d, ("1h", -1): n - d + 1,
        ("0v", 1): i + 1, ("1v", 1): n - i, ("0v", -1): i, ("1v", -1): n - i + 1,
    }


def boundary_starts(pi, order, kind, sign):
    """Boundary grid points where paths of this family begin."""
    _check_kind(kind, sign)
    n = len(pi.window)
    want = int(kind[0])
    table = _table(pi.window, order)
    if kind[1] == "h":
        return [GridPoint(r, 1) for r in range(1, n + 2) if table[(sign, r, 1)][0] == want]
    return [GridPoint(1, c) for c in range(1, n + 2) if table[(sign, 1, c)][1] == want]


def count_paths(pi: SignedPermutation, order: Order = Order.NATURAL,
                mode: PathMode = PathMode.FORMULA):
    """Map ``(kind, sign) -> number of paths``.

    FORMULA evaluates the closed formulas in des/ides; BOUNDARY counts the
    boundary points of matching type, one per path.
    """
    if mode is PathMode.FORMULA:
        d, i = _stats(pi.window, order)
        return path_counts_formula(len(pi.window), d, i)
    return {(kind, sign): len(boundary_starts(pi, order, kind, sign))
            for kind in KINDS for sign in SIGNS}


def _walk(w, direction, horizontal, sign, start):
    n = len(w)

    def filled(r, c):
        # square <r, c> exists with the path's sign
        return 1 <= r <= n and 1 <= c <= n and abs(w[r - 1]) == c and (w[r - 1] > 0) == (sign > 0)

    r, c = start
    pts = [GridPoint(r, c)]
    if horizontal:
        while c <= n:
            if direction == "SE" and filled(r, c):
                r, c = r + 1, c + 1
            elif direction == "NE" and filled(r - 1, c):
                r, c = r - 1, c + 1
            else:
                c += 1
            pts.append(GridPoint(r, c))
    else:
        while r <= n:
            if direction == "SE" and filled(r, c):
                r, c = r + 1, c + 1
            elif direction == "SW" and filled(r, c - 1):
                r, c = r + 1, c - 1
            else:
                r += 1
            pts.append(GridPoint(r, c))
    return tuple(pts)


def trace_path(pi: SignedPermutation, order: Order, kind: str, sign: int, start) -> PathTrace:
    """Walk one path from its boundary start point to the opposite boundary.

    h-paths run left to right from (i, 1); v-paths run top to bottom from
    (1, j).  A diagonal step is taken through a square of the path's sign in
    the direction fixed by (order, kind, sign), otherwise a unit step.
    """
    _check_kind(kind, sign)
    n = len(pi.window)
    start = GridPoint(*start)
    horizontal = kind[1] == "h"
    on_boundary = start.col == 1 if horizontal else start.row == 1
    if not on_boundary or not (1 <= start.row <= n + 1 and 1 <= start.col <= n + 1):
        side = "left (col 1)" if horizontal else "top (row 1)"
        raise ValidationError(f"{kind} paths start on the {side} boundary, got {tuple(start)}")
    p, q = _table(pi.window, order)[(sign, start.row, start.col)]
    got = p if horizontal else q
    if got != int(kind[0]):
        raise ValidationError(
            f"start {tuple(start)} has d_{kind[1]}^{sign_symbol(sign)} = {got}, not {kind[0]}")
    pts = _walk(pi.window, step_direction(order, kind, sign), horizontal, sign, start)
    return PathTrace(kind, sign, pts)


def all_paths(pi: SignedPermutation, order: Order, kind: str, sign: int):
    return [trace_path(pi, order, kind, sign, s) for s in boundary_starts(pi, order, kind, sign)]


def _touch(points):
    for a, b in zip(points, points[1:]):
        if a.row == a.col:
            return a
        # a diagonal step crossing the main diagonal inside a square
        if b.row == a.row - 1 and b.col == a.col + 1 and a.row == a.col + 1:
            return a
    last = points[-1]
    if last.row == last.col:
        return last
    raise AssertionError(f"path {points} never meets the diagonal")


def diagonal_touch_points(pi: SignedPermutation, order: Order, kind: str, sign: int):
    """``[(path_id, point)]``: where each h-path of the family first meets the diagonal.

    That is the first path point (a, a), or the corner (a+1, a) when the path
    instead crosses the diagonal by a NE step through square <a, a>.  Path
    ids index :func:`all_paths` in order.
    """
    if kind[1] != "h":
        raise ValueError("touch points are defined for h-paths")
    return [(k, _touch(p.points)) for k, p in enumerate(all_paths(pi, order, kind, sign))]


@lru_cache(maxsize=4096)
def _touch_set(w, order, kind, sign):
    return frozenset(pt for _, pt in diagonal_touch_points(SignedPermutation(w), order, kind, sign))


def touch_point_set(pi, order, kind, sign):
    return _touch_set(pi.window, order, kind, sign)


# Sampling ----------------------------------------------------------------

def random_perm(n: int, rng: random.Random) -> SignedPermutation:
    """Uniform element of B_n drawn from ``rng`` (shuffle magnitudes, then signs)."""
    mags = list(range(1, n + 1))
    rng.shuffle(mags)
    return SignedPermutation(m if rng.random() < 0.5 else -m for m in mags)


def sample_perms(n: int, count: int, seed: int):
    rng = random.Random(seed)
    return [random_perm(n, rng) for _ in range(count)]
