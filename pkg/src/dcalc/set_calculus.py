"""Iterated boundaries, the set index and decompositions into DCS parts.

A DCS ("difference of closed sets") is a set of the form C minus D with C, D
closed; equivalently the intersection of a closed set with an open one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, SearchBudgetExceeded
from .space import (
    NodeSet,
    TreeSpace,
    _boundary_mask,
    classify_set,
    closure,
    iter_bits,
    path_space,
)

MIN_DCS_BUDGET = 12


@dataclass(frozen=True)
class BoundaryTower:
    """``tower[j]`` is the j-th iterated boundary; ``tower[0]`` is the space."""

    tower: tuple[NodeSet, ...]
    index: int
    meets_top: bool

    def level(self, j: int) -> NodeSet:
        if j < len(self.tower):
            return self.tower[j]
        return self.tower[0].space.empty()


@dataclass(frozen=True)
class DcsDecomposition:
    parts: tuple[NodeSet, ...]
    certificates: tuple[tuple[NodeSet, NodeSet], ...]
    count: int


def boundary_tower(A: NodeSet) -> BoundaryTower:
    space = A.space
    levels = [space.full]
    while True:
        nxt = _boundary_mask(space, A.mask, levels[-1])
        if not nxt:
            break
        levels.append(nxt)
    n = len(levels) - 1
    return BoundaryTower(
        tower=tuple(NodeSet(space, m) for m in levels),
        index=n,
        meets_top=bool(A.mask & levels[n]),
    )


def chi_norm(A: NodeSet) -> tuple[int, int]:
    """Exact (D-norm, qD-norm) of the indicator of ``A``."""
    t = boundary_tower(A)
    return (t.index + 1 if t.meets_top else t.index), t.index


def dcs_part_count(A: NodeSet) -> int:
    t = boundary_tower(A)
    n = t.index
    return n // 2 + 1 if t.meets_top else (n + 1) // 2


def dcs_certificate(W: NodeSet) -> tuple[NodeSet, NodeSet]:
    """A (closed, open) pair whose intersection is ``W``."""
    cl = closure(W)
    return cl, closure(cl - W).complement()


def dcs_decompose(A: NodeSet) -> DcsDecomposition:
    """Split ``A`` into the fewest disjoint DCS parts.

    Parts are bands of the boundary tower two levels thick.  When the
    number of levels is odd in one case and even in the other, the first
    part is the part of ``A`` off the first boundary, which is open.
    """
    t = boundary_tower(A)
    n, space = t.index, A.space
    lvl = [x.mask for x in t.tower] + [0, 0]

    def band(lo: int, hi: int) -> int:
        return A.mask & lvl[lo] & ~lvl[hi]

    open_first = (n % 2 == 1) != t.meets_top
    masks: list[int] = []
    if not A:
        pass
    elif open_first:
        k = n // 2 + 1 if t.meets_top else (n + 1) // 2
        masks.append(A.mask & ~lvl[1])
        masks.extend(band(2 * i - 1, 2 * i + 1) for i in range(1, k))
    else:
        k = n // 2 + 1 if t.meets_top else n // 2
        masks.extend(band(2 * i, 2 * i + 2) for i in range(k))

    parts = tuple(NodeSet(space, m) for m in masks)
    certs = []
    for j, W in enumerate(parts):
        if j == 0 and open_first:
            certs.append((space.everything(), W))
        else:
            certs.append(dcs_certificate(W))
    return DcsDecomposition(parts=parts, certificates=tuple(certs), count=len(parts))


def min_dcs_count(A: NodeSet, budget: int = MIN_DCS_BUDGET) -> int:
    """Fewest parts in any partition of ``A`` into disjoint DCS sets.

    Exhaustive branch-and-bound over set partitions.  Members are placed
    root-first by depth, so every partial block is the final block cut down
    to a closed set; a partial block that is not DCS can be pruned.
    """
    space = A.space
    if len(space) > budget:
        raise SearchBudgetExceeded(
            f"exhaustive search limited to {budget} nodes, space has {len(space)}"
        )
    if not A:
        return 0
    depth = [0] * len(space)
    for i in reversed(range(len(space))):
        p = space.parent_of[i]
        if p >= 0:
            depth[i] = depth[p] + 1
    members = sorted(iter_bits(A.mask), key=lambda i: (depth[i], i))
    best = len(members)
    blocks: list[int] = []

    def is_dcs(mask: int) -> bool:
        return classify_set(NodeSet(space, mask)).is_dcs

    def place(pos: int) -> None:
        nonlocal best
        if len(blocks) >= best:
            return
        if pos == len(members):
            best = len(blocks)
            return
        bit = 1 << members[pos]
        for j in range(len(blocks)):
            old = blocks[j]
            if is_dcs(old | bit):
                blocks[j] = old | bit
                place(pos + 1)
                blocks[j] = old
        if len(blocks) + 1 < best:
            blocks.append(bit)
            place(pos + 1)
            blocks.pop()

    place(0)
    return best


def example_sets(n: int, kind: str) -> tuple[TreeSpace, NodeSet]:
    """Alternating sets on the path of height ``n``.

    Kind ``"A"`` takes the nodes whose index parity differs from ``n`` and
    reaches index n with norm n; kind ``"B"`` takes the others, including the
    root, and has norm n + 1.
    """
    if n < 1:
        raise PreconditionError("example sets need n >= 1")
    if kind not in ("A", "B"):
        raise PreconditionError("kind must be 'A' or 'B'")
    space = path_space(n)
    want = (n + (1 if kind == "A" else 0)) % 2
    return space, space.set(f"v{j}" for j in range(n + 1) if j % 2 == want)
