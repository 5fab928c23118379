"""Worked examples with every invariant recomputed and checked.

Each builder returns a plain dict (insertion-ordered, rationals as strings)
plus a list of failed checks; the CLI renders it.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt, sqrt
from typing import Callable, Sequence

from .errors import PreconditionError
from .norms import cell_function, cell_norm, d_norm, lemma18_bound, osc_sup, qd_norm
from .oscillation import baire_index, d_index, full_profile
from .set_calculus import (
    MIN_DCS_BUDGET,
    boundary_tower,
    chi_norm,
    dcs_decompose,
    example_sets,
    min_dcs_count,
)
from .space import path_space
from .values import NodeFunction, fmt, to_scalar

MAX_N = 40


def _guard(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise PreconditionError(f"n must be between 1 and {MAX_N}")


def _expect(failures: list, label: str, got, want) -> None:
    if got != want:
        failures.append(f"{label}: got {fmt(got)}, expected {fmt(want)}")


def alternating_sets(n: int) -> tuple[dict, list[str]]:
    """Sets on the path of height n whose indicators have norm n and n + 1."""
    _guard(n)
    failures: list[str] = []
    rows = []
    for kind, want_d, want_k in (("A", n, (n + 1) // 2), ("B", n + 1, n // 2 + 1)):
        space, S = example_sets(n, kind)
        tower = boundary_tower(S)
        d, qd = chi_norm(S)
        chi = NodeFunction.indicator(S)
        dec = dcs_decompose(S)
        row = {
            "set": kind,
            "members": S.sorted(),
            "index": tower.index,
            "meets_top": tower.meets_top,
            "d_norm": fmt(d),
            "qd_norm": fmt(qd),
            "engine_d_norm": fmt(d_norm(chi)),
            "engine_qd_norm": fmt(qd_norm(chi)),
            "parts": [p.sorted() for p in dec.parts],
            "part_count": dec.count,
        }
        if len(space) <= MIN_DCS_BUDGET:
            m = min_dcs_count(S)
            row["min_part_count"] = m
            _expect(failures, f"{kind} minimal part count", m, want_k)
        else:
            row["min_part_count"] = "skipped (space too large)"
        _expect(failures, f"{kind} index", tower.index, n)
        _expect(failures, f"{kind} d_norm", d, want_d)
        _expect(failures, f"{kind} qd_norm", qd, n)
        _expect(failures, f"{kind} engine d_norm", d_norm(chi), want_d)
        _expect(failures, f"{kind} engine qd_norm", qd_norm(chi), n)
        _expect(failures, f"{kind} part count", dec.count, want_k)
        rows.append(row)
    return {"gallery": "prop2.6", "n": n, "sets": rows}, failures


def alternating_function(n: int) -> tuple[dict, list[str]]:
    """f(v_j) = (-1)**j on the path of height n."""
    _guard(n)
    space = path_space(n)
    f = NodeFunction(space, {f"v{j}": (-1) ** j for j in range(n + 1)})
    prof = full_profile(f)
    d, qd, sup, first = d_norm(f), qd_norm(f), f.sup_norm(), osc_sup(f)
    ib = baire_index(f)
    failures: list[str] = []
    _expect(failures, "d_norm", d, 2 * n + 1)
    _expect(failures, "qd_norm", qd, 2 * n)
    _expect(failures, "sup of first oscillation", first, 2)
    _expect(failures, "Baire index", ib, n)
    _expect(failures, "d_norm vs (2n+1) sup", d, (2 * n + 1) * sup)
    _expect(failures, "qd_norm vs n * sup osc", qd, ib * first)
    _expect(failures, "qd_norm vs 2n sup", qd, 2 * ib * sup)
    _expect(failures, "chain lower bound", lemma18_bound(f), d)
    levels = [
        {"level": k, "values": [fmt(lv[f"v{j}"]) for j in range(n + 1)]}
        for k, lv in enumerate(prof.per_level)
    ]
    out = {
        "gallery": "alternating",
        "n": n,
        "values": [fmt(f[f"v{j}"]) for j in range(n + 1)],
        "sup_norm": fmt(sup),
        "osc_sup": fmt(first),
        "baire_index": ib,
        "d_index": prof.d_index,
        "d_norm": fmt(d),
        "qd_norm": fmt(qd),
        "d_bound": fmt((2 * ib + 1) * sup),
        "qd_bound": fmt(ib * first),
        "levels": levels,
    }
    return out, failures


def cells(a: Sequence) -> tuple[dict, list[str]]:
    """A function stepping through the values ``a`` up a path."""
    if not a:
        raise PreconditionError("cell values must be nonempty")
    if len(a) > MAX_N + 1:
        raise PreconditionError(f"at most {MAX_N + 1} cell values")
    vals = [to_scalar(x) for x in a]
    if any(isinstance(x, complex) for x in vals):
        raise PreconditionError("cell values must be rational")
    f = cell_function(vals)
    cd, cqd = cell_norm(vals)
    d, qd, low = d_norm(f), qd_norm(f), lemma18_bound(f)
    failures: list[str] = []
    _expect(failures, "engine d_norm", d, cd)
    _expect(failures, "engine qd_norm", qd, cqd)
    _expect(failures, "chain search", low, cd)
    out = {
        "gallery": "cells",
        "values": [fmt(x) for x in vals],
        "closed_form_d": fmt(cd),
        "closed_form_qd": fmt(cqd),
        "engine_d": fmt(d),
        "engine_qd": fmt(qd),
        "chain_search_d": fmt(low),
        "d_index": d_index(f),
    }
    return out, failures


def scaled_trend(n: int) -> tuple[dict, list[str]]:
    """Norms of (1/sqrt k) times an index-k indicator, for k = 1..n.

    The k-th norm is sqrt(k): exact when k is a perfect square, otherwise
    given as a float and marked as such.
    """
    _guard(n)
    failures: list[str] = []
    rows = []
    for k in range(1, n + 1):
        _, S = example_sets(k, "A")
        d = d_norm(NodeFunction.indicator(S))
        _expect(failures, f"norm of indicator {k}", d, k)
        r = isqrt(k)
        if r * r == k:
            scaled, exact = fmt(Fraction(d) / r), True
        else:
            scaled, exact = repr(d / sqrt(k)), False
        rows.append({"k": k, "indicator_d_norm": fmt(d), "scaled_d_norm": scaled, "exact": exact})
    return {"gallery": "b12-trend", "n": n, "rows": rows}, failures


GALLERIES: dict[str, Callable] = {
    "prop2.6": alternating_sets,
    "alternating": alternating_function,
    "cells": cells,
    "b12-trend": scaled_trend,
}
