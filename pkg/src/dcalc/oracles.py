"""Slow brute-force recomputations used only to check production code.

Nothing here calls the oscillation, norm or set-calculus engines.  The tree
is read only through its parent map, and every relation is rebuilt by
walking up from each node.
"""

from __future__ import annotations

from itertools import combinations

from .errors import SearchBudgetExceeded
from .space import NodeSet, Space
from .values import NodeFunction


def _ancestors(space: Space) -> dict[str, list[str]]:
    """Strict ancestors of each node, nearest first."""
    parent = space.parent_map()
    out = {}
    for v in parent:
        chain, p = [], parent[v]
        while p is not None:
            chain.append(p)
            p = parent[p]
        out[v] = chain
    return out


def _at_or_below(space: Space) -> dict[str, list[str]]:
    """For each node x the nodes y with y == x or y a descendant of x."""
    anc = _ancestors(space)
    out = {v: [v] for v in anc}
    for y, chain in anc.items():
        for x in chain:
            out[x].append(y)
    return out


def osc_by_definition(f: NodeFunction, n: int) -> dict[str, object]:
    """n-th oscillation straight from the definition.

    A level is the max over pairs x >= z >= y (each step "equal or a
    descendant") of |f(y) - f(z)| plus the previous level at y.
    """
    sub = _at_or_below(f.space)
    val = {v: f[v] for v in sub}
    level = {v: 0 for v in sub}
    for _ in range(n):
        level = {
            x: max(abs(val[y] - val[z]) + level[y] for z in sub[x] for y in sub[z])
            for x in sub
        }
    return level


def _is_convex(members: set[str], anc: dict[str, list[str]]) -> bool:
    """No node outside ``members`` sits between two members."""
    for c in members:
        gap = False
        for p in anc[c]:
            if p not in members:
                gap = True
            elif gap:
                return False
    return True


def exhaustive_dcs_search(A: NodeSet, budget: int = 12) -> int:
    """Fewest disjoint locally closed pieces covering ``A``.

    A set is closed-intersect-open exactly when it is order convex in the
    tree.  Dynamic programming over subsets of ``A`` covers every partition.
    """
    space = A.space
    if len(space) > budget:
        raise SearchBudgetExceeded(f"search limited to {budget} nodes")
    elems = sorted(A.members)
    anc = _ancestors(space)
    n = len(elems)
    convex = [
        _is_convex({elems[i] for i in range(n) if m >> i & 1}, anc)
        for m in range(1 << n)
    ]
    best = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        rest = m ^ low
        cand = n + 1
        sub = rest
        while True:
            piece = sub | low
            if convex[piece]:
                cand = min(cand, 1 + best[m ^ piece])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[m] = cand
    return best[(1 << n) - 1]


def _first_osc_set(f: NodeFunction, keep: frozenset, eps, sub) -> frozenset:
    """{x in keep : some z <= x and y <= z in keep with |f(y)-f(z)| >= eps}."""
    out = set()
    for x in keep:
        hit = any(
            abs(f[y] - f[z]) >= eps
            for z in sub[x] if z in keep
            for y in sub[z] if y in keep
        )
        if hit:
            out.add(x)
    return frozenset(out)


def eps_sequence_search(f: NodeFunction, with_sup: bool = False):
    """Sup of threshold sums over nonempty oscillation-set chains.

    With ``with_sup`` the sup of |f| on the last set is added, and the empty
    chain (the whole space) is allowed.
    """
    sub = _at_or_below(f.space)
    vals = {f[v] for v in sub}
    gaps = sorted({abs(a - b) for a, b in combinations(vals, 2)} - {0})
    memo: dict[frozenset, object] = {}

    def walk(keep: frozenset):
        if keep in memo:
            return memo[keep]
        best = max(abs(f[v]) for v in keep) if with_sup else 0
        for e in gaps:
            nxt = _first_osc_set(f, keep, e, sub)
            if nxt:
                best = max(best, e + walk(nxt))
        memo[keep] = best
        return best

    if not sub:
        return 0
    return walk(frozenset(sub))
