"""Random and exhaustive generators for spaces, sets and functions."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .space import NodeSet, Space, TreeSpace
from .values import NodeFunction

VALUE_POOL = (
    -2, Fraction(-3, 2), -1, Fraction(-1, 2), 0,
    Fraction(1, 2), 1, Fraction(3, 2), 2,
)


def random_space(rng: random.Random, max_nodes: int = 10, min_nodes: int = 1) -> TreeSpace:
    """Random tree on up to ``max_nodes`` nodes.

    Node i hangs under an earlier node; half the time that node is one of
    the last three, which produces the deep chains uniform attachment rarely
    does.
    """
    n = rng.randint(min_nodes, max_nodes)
    parent = {"n0": None}
    for i in range(1, n):
        lo = max(0, i - 3) if rng.random() < 0.5 else 0
        parent[f"n{i}"] = f"n{rng.randrange(lo, i)}"
    return TreeSpace(parent)


def random_set(rng: random.Random, space: Space) -> NodeSet:
    return NodeSet(space, rng.getrandbits(len(space)) if len(space) else 0)


def random_function(
    rng: random.Random, space: Space, pool: Sequence = VALUE_POOL, distinct: int = 0
) -> NodeFunction:
    """Values drawn from ``pool``; ``distinct`` > 0 first narrows the pool."""
    if distinct:
        pool = rng.sample(list(pool), min(distinct, len(pool)))
    return NodeFunction.from_vector(space, [rng.choice(pool) for _ in space.nodes])


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple:
    """Canonical rooted trees with n nodes, each a sorted tuple of child shapes."""
    if n == 1:
        return ((),)
    return tuple(_forests(n - 1, None))


@lru_cache(maxsize=None)
def _forests(m: int, cap) -> tuple:
    """Forests of total size m as non-increasing tuples of (size, index) keys."""
    if m == 0:
        return ((),)
    out = []
    for size in range(m, 0, -1):
        for idx in range(len(_shapes(size))):
            key = (size, idx)
            if cap is not None and key > cap:
                continue
            for rest in _forests(m - size, key):
                out.append((key,) + rest)
    return tuple(out)


def _shape_edges(forest: tuple, parent: str, counter: list, edges: list) -> None:
    for size, idx in forest:
        name = f"n{counter[0]}"
        counter[0] += 1
        edges.append((parent, name))
        _shape_edges(_shapes(size)[idx], name, counter, edges)


def all_rooted_trees(n: int) -> Iterator[TreeSpace]:
    """Every rooted tree with exactly n nodes, one per isomorphism class."""
    for shape in _shapes(n):
        edges: list = []
        _shape_edges(shape, "n0", [1], edges)
        parent = {"n0": None}
        parent.update({c: p for p, c in edges})
        yield TreeSpace(parent)
