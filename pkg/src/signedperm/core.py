"""Signed permutations of B_n.

A signed permutation is stored as its window ``(w_1, ..., w_n)``; positions are
1-based and ``w_0 = 0`` is implied. Everything here is immutable and pure.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import factorial


class ValidationError(ValueError):
    """Raised for malformed windows."""


class DuplicateMagnitude(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class SignedPermutation:
    """An element of B_n given by its window.

    ``window[i-1]`` is the value at position ``i``. Use :func:`make` for
    validated construction; the bare constructor trusts its input.
    """

    __slots__ = ("window",)

    def __init__(self, window):
        object.__setattr__(self, "window", tuple(window))

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self):
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def at(self, i: int) -> int:
        """Value at 1-based position ``i``; position 0 holds 0."""
        if i == 0:
            return 0
        if not 1 <= i <= len(self.window):
            raise IndexError(i)
        return self.window[i - 1]

    def __eq__(self, other):
        if isinstance(other, SignedPermutation):
            return self.window == other.window
        return NotImplemented

    def __lt__(self, other):
        return window_key(self.window) < window_key(other.window)

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"SignedPermutation({self.window})"

    def __str__(self):
        return format_window(self.window)


@dataclass(frozen=True)
class PermClass:
    is_involution: bool
    is_fpf_involution: bool


class Family(enum.Enum):
    ALL = "all"
    INVOLUTIONS = "inv"
    FPF_INVOLUTIONS = "fpf"


def make(window) -> SignedPermutation:
    """Validate ``window`` and wrap it.

    >>> make((-3, 1, 6, -5, 2, 4)).n
    6
    """
    w = tuple(window)
    n = len(w)
    seen = {}
    for idx, v in enumerate(w, 1):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValidationError(f"position {idx}: {v!r} is not an integer")
        m = abs(v)
        if m < 1 or m > n:
            raise OutOfRange(f"position {idx}: |{v}| not in [1, {n}]")
        if m in seen:
            raise DuplicateMagnitude(
                f"position {idx}: magnitude {m} already used at position {seen[m]}")
        seen[m] = idx
    return SignedPermutation(w)


def parse(text: str) -> SignedPermutation:
    """Parse ``"-3,1,6,-5,2,4"``. The empty string gives the empty permutation."""
    text = text.strip()
    if not text:
        return SignedPermutation(())
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"cannot parse window {text!r}: {exc}") from None
    return make(values)


def format_window(window) -> str:
    return ",".join(str(v) for v in window)


def identity(n: int) -> SignedPermutation:
    return SignedPermutation(range(1, n + 1))


def inverse_window(w):
    inv = [0] * len(w)
    for i, v in enumerate(w, 1):
        if v > 0:
            inv[v - 1] = i
        else:
            inv[-v - 1] = -i
    return tuple(inv)


def inverse(pi: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(inverse_window(pi.window))


def compose(pi: SignedPermutation, sigma: SignedPermutation) -> SignedPermutation:
    """The map i -> pi(sigma(i))."""
    w = pi.window
    out = []
    for v in sigma.window:
        out.append(w[v - 1] if v > 0 else -w[-v - 1])
    return SignedPermutation(out)


def negative_count(pi: SignedPermutation) -> int:
    return sum(1 for v in pi.window if v < 0)


def is_involution(pi: SignedPermutation) -> bool:
    return inverse_window(pi.window) == pi.window


def classify(pi: SignedPermutation) -> PermClass:
    inv = is_involution(pi)
    fpf = inv and all(abs(v) != i for i, v in enumerate(pi.window, 1))
    return PermClass(is_involution=inv, is_fpf_involution=fpf)


def in_family(pi: SignedPermutation, family: Family) -> bool:
    if family is Family.ALL:
        return True
    c = classify(pi)
    return c.is_fpf_involution if family is Family.FPF_INVOLUTIONS else c.is_involution


def window_key(w):
    """Sort key realizing the enumeration order: entrywise (|v|, negative first)."""
    return tuple((abs(v), v > 0) for v in w)


def _involution_windows(n, fpf):
    w = [0] * n

    def rec(pos):
        while pos < n and w[pos] != 0:
            pos += 1
        if pos == n:
            yield tuple(w)
            return
        i = pos + 1
        if not fpf:
            for s in (-1, 1):
                w[pos] = s * i
                yield from rec(pos + 1)
            w[pos] = 0
        for j in range(i + 1, n + 1):
            if w[j - 1] != 0:
                continue
            for s in (-1, 1):
                w[pos] = s * j
                w[j - 1] = s * i
                yield from rec(pos + 1)
            w[j - 1] = 0
        w[pos] = 0

    yield from rec(0)


def enumerate_windows(n: int, family: Family = Family.ALL):
    """Raw window tuples of the family, in enumeration order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if family is Family.ALL:
        return _all_windows(n)
    if family is Family.FPF_INVOLUTIONS and n % 2:
        return iter(())
    return _involution_windows(n, family is Family.FPF_INVOLUTIONS)


def _all_windows(n):
    # Recursive so the order is lexicographic position by position.
    used = [False] * (n + 1)
    w = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(w)
            return
        for m in range(1, n + 1):
            if used[m]:
                continue
            used[m] = True
            for s in (-1, 1):
                w[pos] = s * m
                yield from rec(pos + 1)
            used[m] = False

    yield from rec(0)


def enumerate_perms(n: int, family: Family = Family.ALL):
    """Stream every member of the family in B_n exactly once.

    Order is lexicographic on windows, comparing entries by magnitude and
    putting -k before +k. ``n = 0`` yields the empty permutation.
    """
    for w in enumerate_windows(n, family):
        yield SignedPermutation(w)


def family_size(n: int, family: Family = Family.ALL) -> int:
    if family is Family.ALL:
        return 2 ** n * factorial(n)
    if family is Family.FPF_INVOLUTIONS:
        if n % 2:
            return 0
        size = 1
        for k in range(1, n, 2):
            size *= 2 * k
        return size
    a, b = 1, 2  # |I_0|, |I_1|
    if n == 0:
        return 1
    for m in range(2, n + 1):
        a, b = b, 2 * b + 2 * (m - 1) * a
    return b
