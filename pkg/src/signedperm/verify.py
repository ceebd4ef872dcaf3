"""Verification suites shared by the CLI and the test-suite.

Every suite returns a plain dict with an ``ok`` flag, a count of what was
checked, and (capped) failure witnesses.  Work is split into independent
shards that :func:`signedperm.parallel.pmap` may run in parallel; results are
merged in shard order so the report does not depend on the worker count.
"""
from __future__ import annotations

import time

from .bijections import term_cardinalities, verify_round_trips
from .core import Family, SignedPermutation, enumerate_windows
from .dtypes import CountMode, PathMode, count_d_types, count_paths, sample_perms
from .genfun import check_identity
from .parallel import pmap
from .recurrences import check_range
from .statistics import Order, descent_vector, two_sided_triangle

MAX_FAILURES = 20
ORDERS = (Order.NATURAL, Order.R)


def _dtype_shard(n, order, windows):
    bad = []
    for w in windows:
        pi = SignedPermutation(w)
        brute = count_d_types(pi, order, CountMode.BRUTE_FORCE)
        closed = count_d_types(pi, order, CountMode.CLOSED_FORM)
        if brute != closed and len(bad) < MAX_FAILURES:
            bad.append({"perm": list(w), "order": order.value,
                        "brute": _flat(brute), "closed": _flat(closed)})
    return len(windows), bad


def _flat(counts):
    return {f"{'+' if s > 0 else '-'}{p}{q}": c for (s, (p, q)), c in sorted(counts.items())}


def verify_dtypes(max_n=5, samples=1000, seed=0, exhaustive_max=4, workers=1):
    """Closed-form d-type counts vs brute force.

    Exhaustive over B_n for n <= min(max_n, exhaustive_max); ``samples``
    seeded random elements for each larger n up to max_n.
    """
    jobs = []
    for order in ORDERS:
        for n in range(0, min(max_n, exhaustive_max) + 1):
            jobs.append((n, order, list(enumerate_windows(n))))
        for n in range(exhaustive_max + 1, max_n + 1):
            perms = sample_perms(n, samples, seed + n)
            jobs.append((n, order, [p.window for p in perms]))
    results = pmap(_dtype_shard, jobs, workers)
    failures = [f for _, bad in results for f in bad][:MAX_FAILURES]
    return {"check": "dtypes", "ok": not failures, "max_n": max_n, "samples": samples,
            "seed": seed, "checked": sum(c for c, _ in results), "failures": failures}


def _path_shard(n, order):
    bad = []
    count = 0
    for w in enumerate_windows(n):
        pi = SignedPermutation(w)
        count += 1
        a, b = count_paths(pi, order, PathMode.FORMULA), count_paths(pi, order, PathMode.BOUNDARY)
        if a != b and len(bad) < MAX_FAILURES:
            bad.append({"perm": list(w), "order": order.value})
    return count, bad


def verify_paths(max_n=5, workers=1):
    """Path-count formulas vs boundary counts, exhaustively for n <= max_n."""
    jobs = [(n, order) for order in ORDERS for n in range(0, max_n + 1)]
    results = pmap(_path_shard, jobs, workers)
    failures = [f for _, bad in results for f in bad][:MAX_FAILURES]
    return {"check": "paths", "ok": not failures, "max_n": max_n,
            "checked": sum(c for c, _ in results), "failures": failures}


def _bijection_shard(family, order, n):
    rep = verify_round_trips(family, order, n).to_dict()
    min_n = {Family.ALL: 2, Family.INVOLUTIONS: 2, Family.FPF_INVOLUTIONS: 4}[family]
    if n >= min_n:
        terms = term_cardinalities(family, order, n)
        rep["term_mismatches"] = [list(map(_jsonable, t)) for t in terms[:MAX_FAILURES]]
        rep["ok"] = rep["ok"] and not terms
    return rep


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def bijection_jobs(max_n):
    jobs = []
    for family in (Family.ALL, Family.INVOLUTIONS, Family.FPF_INVOLUTIONS):
        for order in ORDERS:
            for n in range(1, max_n + 1):
                if family is Family.FPF_INVOLUTIONS and n % 2:
                    continue
                jobs.append((family, order, n))
    return jobs


def verify_bijection(max_n=5, workers=1, timing=False, jobs=None):
    """Round trips both ways plus term-wise source counts, per (family, order, n).

    ``jobs`` overrides the default list of (family, order, n) shards.
    """
    start = time.perf_counter()
    jobs = bijection_jobs(max_n) if jobs is None else jobs
    reports = pmap(_bijection_shard, jobs, workers)
    out = {"check": "bijection", "ok": all(r["ok"] for r in reports), "max_n": max_n,
           "reports": reports}
    if timing:
        out["wall_time_s"] = round(time.perf_counter() - start, 3)
    return out


def verify_equidist(max_n=6, max_inv=8):
    """Natural vs r-order: triangles equal, involution vectors equal, fpf differ at 2."""
    failures = []
    for n in range(1, max_n + 1):
        a, b = two_sided_triangle(n, Order.NATURAL), two_sided_triangle(n, Order.R)
        if a.counts != b.counts:
            failures.append({"what": "triangle", "n": n})
    for n in range(1, max_inv + 1):
        a = descent_vector(n, Family.INVOLUTIONS, Order.NATURAL).counts
        b = descent_vector(n, Family.INVOLUTIONS, Order.R).counts
        if a != b:
            failures.append({"what": "involutions", "n": n, "natural": a, "r": b})
    fn = descent_vector(2, Family.FPF_INVOLUTIONS, Order.NATURAL).counts
    fr = descent_vector(2, Family.FPF_INVOLUTIONS, Order.R).counts
    if fn == fr:
        failures.append({"what": "fpf witness", "n": 2, "natural": fn, "r": fr})
    return {"check": "equidist", "ok": not failures, "max_n": max_n, "max_inv": max_inv,
            "fpf_witness": {"natural": list(fn), "r": list(fr)}, "failures": failures}


def verify_recurrence(name, max_n, workers=1):
    """One recurrence over its whole range up to max_n, both orders where relevant."""
    lo = {"rec-b": 2, "rec-i": 3, "rec-j": 4, "pde": 2}[name]
    step = 2 if name == "rec-j" else 1
    ns = list(range(lo, max_n + 1, step))
    if not ns:
        return {"check": name, "ok": True, "reports": [], "note": f"no n in [{lo}, {max_n}]"}
    orders = (None,) if name == "pde" else ORDERS
    reports = [check_range(name, ns, order or Order.NATURAL, workers=workers).to_dict()
               for order in orders]
    return {"check": name, "ok": all(r["status"] == "pass" for r in reports), "reports": reports}


def verify_genfun(max_x=6, max_t=6):
    reports = [check_identity(f, max_x, max_t) for f in ("iub", "jub")]
    return {"check": "genfun", "ok": all(r["equal"] for r in reports), "reports": reports}


def verify_all(max_n=5, samples=200, seed=0, workers=1, timing=False):
    suites = [
        verify_recurrence("rec-b", max_n, workers),
        verify_recurrence("rec-i", max_n, workers),
        verify_recurrence("rec-j", max_n, workers),
        verify_recurrence("pde", max_n, workers),
        verify_dtypes(max_n, samples, seed, workers=workers),
        verify_paths(max_n, workers),
        verify_bijection(max_n, workers, timing),
        verify_equidist(max_n, max_n),
        verify_genfun(max_n, max_n),
    ]
    return {"check": "all", "ok": all(s["ok"] for s in suites), "max_n": max_n, "suites": suites}
