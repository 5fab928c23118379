"""The oscillation hierarchy, oscillation sets and the indices built on them.

Limits are taken non-exclusively: the lim-sup of g at x ranges over x itself
and its strict descendants.  On a tree this makes every envelope and every
level of the hierarchy a bottom-up pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import InvariantViolation, PreconditionError
from .space import NodeSet, Space, iter_bits
from .values import TOL, NodeFunction, Scalar


@dataclass(frozen=True)
class OscProfile:
    """All finite levels of the hierarchy for one function.

    ``per_level[n]`` is the n-th oscillation; levels run at least up to the
    height of the space and at least one past stabilization.
    """

    per_level: tuple[NodeFunction, ...]
    d_index: int
    omega: NodeFunction
    tilde_omega: NodeFunction


def _agree(a: Sequence[Scalar], b: Sequence[Scalar], exact: bool) -> bool:
    if exact:
        return a == b
    return all(abs(x - y) <= TOL for x, y in zip(a, b))


def upper_env(g: NodeFunction) -> NodeFunction:
    """Smallest USC majorant: max of g over a node and its descendants."""
    kids, vec = g.space.kids, g.vec
    out = list(vec)
    for i, ks in enumerate(kids):
        for k in ks:
            if out[k] > out[i]:
                out[i] = out[k]
    return NodeFunction.from_vector(g.space, out)


def lower_env(g: NodeFunction) -> NodeFunction:
    kids, vec = g.space.kids, g.vec
    out = list(vec)
    for i, ks in enumerate(kids):
        for k in ks:
            if out[k] < out[i]:
                out[i] = out[k]
    return NodeFunction.from_vector(g.space, out)


def is_usc(g: NodeFunction) -> bool:
    """Value at each node dominates the values below it."""
    below, vec = g.space.below, g.vec
    return all(vec[j] <= vec[i] for i in range(len(vec)) for j in iter_bits(below[i]))


def is_lsc(g: NodeFunction) -> bool:
    below, vec = g.space.below, g.vec
    return all(vec[j] >= vec[i] for i in range(len(vec)) for j in iter_bits(below[i]))


def _step_real(space: Space, f: Sequence, o: Sequence) -> tuple[list, list]:
    """One level for real f: returns (pre-envelope, next level).

    |f(y) - f(x)| + o(y) is the larger of (f(y) + o(y)) - f(x) and
    (o(y) - f(y)) + f(x), so two subtree maxima per node suffice.
    """
    n = len(f)
    up = [0] * n
    down = [0] * n
    tilde = [0] * n
    nxt = [0] * n
    for i, ks in enumerate(space.kids):
        fi, oi = f[i], o[i]
        p, q = fi + oi, oi - fi
        u = None
        for k in ks:
            if up[k] > p:
                p = up[k]
            if down[k] > q:
                q = down[k]
            if u is None or nxt[k] > u:
                u = nxt[k]
        up[i], down[i] = p, q
        t = p - fi if p - fi >= q + fi else q + fi
        tilde[i] = t
        nxt[i] = t if u is None or t >= u else u
    return tilde, nxt


def _step_general(space: Space, f: Sequence, o: Sequence) -> tuple[list, list]:
    n = len(f)
    below = space.below
    tilde = [0.0] * n
    nxt = [0.0] * n
    for i, ks in enumerate(space.kids):
        fi = f[i]
        t = o[i]
        for j in iter_bits(below[i]):
            c = abs(f[j] - fi) + o[j]
            if c > t:
                t = c
        tilde[i] = t
        u = t
        for k in ks:
            if nxt[k] > u:
                u = nxt[k]
        nxt[i] = u
    return tilde, nxt


def _levels(f: NodeFunction) -> tuple[list[list], list[list], int]:
    """Levels 0.. up to stabilization (and at least the height)."""
    memo = f.memo.get("levels")
    if memo is not None:
        return memo
    exact = f.is_real
    step = _step_real if exact else _step_general
    zero = 0 if exact else 0.0
    levels = [[zero] * len(f.vec)]
    tildes: list[list] = [[zero] * len(f.vec)]
    d_index: Optional[int] = None
    limit = f.space.height + 1
    while True:
        tilde, nxt = step(f.space, f.vec, levels[-1])
        if d_index is None and _agree(nxt, levels[-1], exact):
            d_index = len(levels) - 1
        if d_index is not None and len(levels) > f.space.height:
            break
        levels.append(nxt)
        tildes.append(tilde)
        if len(levels) > limit + 1:
            raise InvariantViolation("oscillation failed to stabilize by the height")
    f.memo["levels"] = (levels, tildes, d_index)
    return levels, tildes, d_index


def lower_osc(f: NodeFunction) -> NodeFunction:
    """Largest gap |f(y) - f(x)| over strict descendants y, 0 at leaves."""
    _, tildes, _ = _levels(f)
    if len(tildes) > 1:
        return NodeFunction.from_vector(f.space, tildes[1])
    step = _step_real if f.is_real else _step_general
    return NodeFunction.from_vector(f.space, step(f.space, f.vec, [0] * len(f.vec))[0])


def osc_n(f: NodeFunction, n: int) -> NodeFunction:
    if n < 0:
        raise PreconditionError("oscillation level must be non-negative")
    levels, _, d = _levels(f)
    return NodeFunction.from_vector(f.space, levels[min(n, len(levels) - 1)])


def osc(f: NodeFunction) -> NodeFunction:
    """First oscillation (upper envelope of the lower oscillation)."""
    return osc_n(f, 1)


def full_profile(f: NodeFunction) -> OscProfile:
    levels, _, d = _levels(f)
    per = tuple(NodeFunction.from_vector(f.space, lv) for lv in levels)
    sup = [max(col) for col in zip(*levels)] if levels[0] else []
    return OscProfile(
        per_level=per,
        d_index=d,
        omega=per[d],
        tilde_omega=NodeFunction.from_vector(f.space, sup),
    )


def osc_omega(f: NodeFunction) -> NodeFunction:
    levels, _, d = _levels(f)
    return NodeFunction.from_vector(f.space, levels[d])


def d_index(f: NodeFunction) -> int:
    return _levels(f)[2]


def _at_least(x: Scalar, eps) -> bool:
    if isinstance(x, float):
        return x >= eps - TOL
    return x >= eps


def _os_step(f: NodeFunction, within: int, eps) -> int:
    """Points of ``within`` where the first oscillation of f|within is >= eps."""
    space = f.space
    g = f.restrict(NodeSet(space, within))
    o = osc_n(g, 1).vec
    out = 0
    for v, x in zip(g.space.nodes, o):
        if _at_least(x, eps):
            out |= 1 << space.index[v]
    return out


def os_sets(f: NodeFunction, eps_seq: Sequence) -> list[NodeSet]:
    """The chain os_1, os_2, ... for the given thresholds (os_0 is implicit)."""
    out = []
    w = f.space.full
    for eps in eps_seq:
        if eps < 0:
            raise PreconditionError("thresholds must be non-negative")
        w = _os_step(f, w, eps) if w else 0
        out.append(NodeSet(f.space, w))
    return out


def breakpoints(f: NodeFunction) -> list:
    """Distinct positive gaps between values, in increasing order.

    Every first oscillation of every restriction of f takes values in this
    set, so thresholds between two consecutive gaps behave identically.
    """
    vals = set(f.vec)
    return sorted({abs(a - b) for a, b in combinations(vals, 2) if abs(a - b) > 0})


def baire_index(f: NodeFunction, eps=None) -> int:
    """Length of the longest nonempty os-chain at a fixed threshold.

    Without ``eps`` the maximum over all thresholds; the index can only grow
    as the threshold shrinks, so the smallest positive gap attains it.
    """
    if eps is None:
        gaps = breakpoints(f)
        return baire_index(f, gaps[0]) if gaps else 0
    if eps <= 0:
        raise PreconditionError("threshold must be positive")
    w, n = f.space.full, 0
    if not w:
        return 0
    while True:
        w = _os_step(f, w, eps)
        if not w:
            return n
        n += 1


def index_table(f: NodeFunction) -> list[tuple[Scalar, int]]:
    return [(e, baire_index(f, e)) for e in breakpoints(f)]


def lemma36_oracle(f: NodeFunction, n: int, x: str) -> Scalar:
    """Largest total threshold over chains of length <= n that keep ``x``.

    Exhaustive over thresholds taken from :func:`breakpoints`.  For each
    current set only the largest threshold producing a given next set is
    kept, since a larger threshold with the same set only adds to the sum.
    """
    if n < 0:
        raise PreconditionError("chain length must be non-negative")
    bit = 1 << f.space.index[x]
    gaps = breakpoints(f)
    memo: dict[tuple[int, int], Scalar] = {}

    def best(w: int, r: int):
        if r == 0:
            return 0
        key = (w, r)
        if key in memo:
            return memo[key]
        by_set: dict[int, Scalar] = {}
        for e in gaps:
            nxt = _os_step(f, w, e)
            if nxt & bit:
                by_set[nxt] = e
        val = 0
        for nxt, e in by_set.items():
            val = max(val, e + best(nxt, r - 1))
        memo[key] = val
        return val

    return best(f.space.full, n)


def omega_level_sets(f: NodeFunction, eps) -> tuple[list[NodeSet], int]:
    """Iterate level sets of the stabilized oscillation on restrictions.

    Returns the nonempty sets os_1, ..., os_k and k.
    """
    if eps <= 0:
        raise PreconditionError("threshold must be positive")
    space = f.space
    w = space.full
    sets = []
    while w:
        g = f.restrict(NodeSet(space, w))
        om = osc_omega(g).vec
        nxt = 0
        for v, val in zip(g.space.nodes, om):
            if _at_least(val, eps):
                nxt |= 1 << space.index[v]
        if not nxt:
            break
        sets.append(NodeSet(space, nxt))
        w = nxt
    return sets, len(sets)


def local_qd(f: NodeFunction, node: str):
    """qD-norm of f on the smallest open set around ``node``, its subtree."""
    space = f.space
    g = f.restrict(NodeSet(space, space.subtree_mask(space.index[node])))
    return max(osc_omega(g).vec, default=0)


def qd_local_index(f: NodeFunction, eps) -> int:
    if eps <= 0:
        raise PreconditionError("threshold must be positive")
    space = f.space
    w, n = space.full, 0
    while w:
        g = f.restrict(NodeSet(space, w))
        nxt = 0
        for v in g.space.nodes:
            if _at_least(local_qd(g, v), eps):
                nxt |= 1 << space.index[v]
        if not nxt:
            break
        n += 1
        w = nxt
    return n
