"""Finite tree model of countable compact spaces and its topology kernels.

A node stands for a class of points.  A leaf is one isolated point; an
internal node is a point that is the limit of infinitely many shrinking
copies of each of its child subtrees.  Sets and functions are taken to be
constant on each class, so a point ``x`` lies in the closure of ``S`` exactly
when ``x`` is in ``S`` or some strict descendant of ``x`` is.

Sets are stored as integer bitmasks over a fixed node numbering; the public
:class:`NodeSet` wraps a mask together with its space.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import PreconditionError, StructuralError

_DIGITS = re.compile(r"(\d+)")


def natural_key(node: str):
    """Sort key that orders ``v2`` before ``v10``."""
    parts = _DIGITS.split(node)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Space:
    """A finite forest read as a topological space.

    Nodes are numbered in post-order (every node after all of its
    descendants), with siblings taken in natural id order.  The numbering is
    what bitmasks refer to.
    """

    __slots__ = (
        "nodes", "index", "parent_of", "kids", "below", "above",
        "heights", "roots", "full", "_key", "_hash",
    )

    def __init__(self, parent: Mapping[str, Optional[str]]):
        children: dict[str, list[str]] = {v: [] for v in parent}
        tops = []
        for v, p in parent.items():
            if p is None:
                tops.append(v)
            elif p not in children:
                raise StructuralError(f"node {v!r} has unknown parent {p!r}")
            else:
                children[p].append(v)
        for lst in children.values():
            lst.sort(key=natural_key)
        tops.sort(key=natural_key)

        order: list[str] = []
        for top in tops:
            stack = [(top, False)]
            while stack:
                v, done = stack.pop()
                if done:
                    order.append(v)
                    continue
                stack.append((v, True))
                for c in reversed(children[v]):
                    stack.append((c, False))
        if len(order) != len(parent):
            raise StructuralError("parent relation contains a cycle")

        self.nodes: tuple[str, ...] = tuple(order)
        self.index: dict[str, int] = {v: i for i, v in enumerate(order)}
        idx = self.index
        self.parent_of = tuple(
            -1 if parent[v] is None else idx[parent[v]] for v in order
        )
        self.kids = tuple(tuple(idx[c] for c in children[v]) for v in order)
        self.roots = tuple(idx[t] for t in tops)

        below = [0] * len(order)
        heights = [0] * len(order)
        for i, ks in enumerate(self.kids):
            m = 0
            for k in ks:
                m |= below[k] | (1 << k)
                heights[i] = max(heights[i], heights[k] + 1)
            below[i] = m
        above = [0] * len(order)
        for i in reversed(range(len(order))):
            p = self.parent_of[i]
            if p >= 0:
                above[i] = above[p] | (1 << p)
        self.below = tuple(below)
        self.above = tuple(above)
        self.heights = tuple(heights)
        self.full = (1 << len(order)) - 1
        self._key = frozenset(parent.items())
        self._hash = hash(self._key)

    # -- structure -----------------------------------------------------
    def __len__(self) -> int:
        return len(self.nodes)

    def __eq__(self, other) -> bool:
        return isinstance(other, Space) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.nodes)} nodes, height {self.height})"

    @property
    def height(self) -> int:
        return max(self.heights, default=0)

    @property
    def root(self) -> str:
        if len(self.roots) != 1:
            raise PreconditionError("space is a forest without a single root")
        return self.nodes[self.roots[0]]

    def parent(self, node: str) -> Optional[str]:
        p = self.parent_of[self.index[node]]
        return None if p < 0 else self.nodes[p]

    def parent_map(self) -> dict[str, Optional[str]]:
        return {v: self.parent(v) for v in self.nodes}

    def node_height(self, node: str) -> int:
        return self.heights[self.index[node]]

    def display_order(self) -> list[str]:
        return sorted(self.nodes, key=natural_key)

    # -- sets ----------------------------------------------------------
    def mask_of(self, ids: Iterable[str]) -> int:
        m = 0
        for v in ids:
            try:
                m |= 1 << self.index[v]
            except KeyError:
                raise PreconditionError(f"unknown node {v!r}") from None
        return m

    def names(self, mask: int) -> list[str]:
        return sorted((self.nodes[i] for i in iter_bits(mask)), key=natural_key)

    def subtree_mask(self, i: int) -> int:
        return self.below[i] | (1 << i)

    def set(self, ids: Iterable[str] = ()) -> "NodeSet":
        return NodeSet(self, self.mask_of(ids))

    def everything(self) -> "NodeSet":
        return NodeSet(self, self.full)

    def empty(self) -> "NodeSet":
        return NodeSet(self, 0)

    # -- mask kernels --------------------------------------------------
    def close_in(self, mask: int, within: int) -> int:
        """Closure of ``mask`` relative to the subspace ``within``."""
        out = mask
        below = self.below
        for i in iter_bits(within & ~mask):
            if below[i] & mask:
                out |= 1 << i
        return out

    def derived_mask(self, within: int) -> int:
        """Non-isolated points of the subspace ``within``."""
        below = self.below
        out = 0
        for i in iter_bits(within):
            if below[i] & within:
                out |= 1 << i
        return out


class TreeSpace(Space):
    """A space whose parent relation has exactly one root."""

    __slots__ = ()

    def __init__(self, parent: Mapping[str, Optional[str]]):
        super().__init__(parent)
        if len(self.roots) != 1:
            raise StructuralError(
                f"expected one root, found {len(self.roots)}"
            )


@dataclass(frozen=True)
class NodeSet:
    """A node-uniform subset of a space, stored as a bitmask."""

    space: Space
    mask: int

    def __post_init__(self):
        if self.mask & ~self.space.full:
            raise PreconditionError("mask has bits outside the space")

    @classmethod
    def of(cls, space: Space, ids: Iterable[str]) -> "NodeSet":
        return cls(space, space.mask_of(ids))

    @property
    def members(self) -> frozenset[str]:
        return frozenset(self.space.nodes[i] for i in iter_bits(self.mask))

    def sorted(self) -> list[str]:
        return self.space.names(self.mask)

    def __iter__(self) -> Iterator[str]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, node: str) -> bool:
        i = self.space.index.get(node)
        return i is not None and bool(self.mask >> i & 1)

    def _other(self, other: "NodeSet") -> int:
        if other.space != self.space:
            raise PreconditionError("sets live in different spaces")
        return other.mask

    def __or__(self, other):
        return NodeSet(self.space, self.mask | self._other(other))

    def __and__(self, other):
        return NodeSet(self.space, self.mask & self._other(other))

    def __sub__(self, other):
        return NodeSet(self.space, self.mask & ~self._other(other))

    def __le__(self, other):
        return self.mask & ~self._other(other) == 0

    def complement(self) -> "NodeSet":
        return NodeSet(self.space, self.space.full & ~self.mask)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.sorted()) + "}"


@dataclass(frozen=True)
class SetClassification:
    is_closed: bool
    is_open: bool
    is_dcs: bool
    index: int
    canonical_dcs: Optional[tuple[NodeSet, NodeSet]]


def build_space(
    edges: Sequence[Sequence[str]],
    nodes: Optional[Iterable[str]] = None,
    root: Optional[str] = None,
) -> TreeSpace:
    """Build a tree from ``[parent, child]`` pairs.

    ``nodes`` lists every node (needed for a one-node tree); ``root``, if
    given, must agree with the root the edges imply.
    """
    parent: dict[str, Optional[str]] = {}
    declared = None if nodes is None else list(nodes)
    if declared is not None:
        if len(set(declared)) != len(declared):
            raise StructuralError("duplicate node id")
        parent.update((v, None) for v in declared)
    seen = set()
    for edge in edges:
        if len(edge) != 2:
            raise StructuralError(f"edge must be a [parent, child] pair: {edge!r}")
        p, c = edge
        if not isinstance(p, str) or not isinstance(c, str):
            raise StructuralError("node ids must be strings")
        if (p, c) in seen:
            raise StructuralError(f"duplicate edge {p!r} -> {c!r}")
        seen.add((p, c))
        if p == c:
            raise StructuralError(f"self-loop at {p!r}")
        for v in (p, c):
            if v not in parent:
                if declared is not None:
                    raise StructuralError(f"edge mentions undeclared node {v!r}")
                parent[v] = None
        if parent[c] is not None:
            raise StructuralError(f"node {c!r} has two parents")
        parent[c] = p
    if root is not None:
        if declared is None and root not in parent:
            parent[root] = None
        if root not in parent:
            raise StructuralError(f"root {root!r} is not a node")
        if parent[root] is not None:
            raise StructuralError(f"declared root {root!r} has a parent")
    if not parent:
        raise StructuralError("a space needs at least one node")
    space = TreeSpace(parent)
    if root is not None and space.root != root:
        raise StructuralError(f"declared root {root!r} is not the tree's root")
    return space


def path_space(n: int) -> TreeSpace:
    """The chain v0 <- v1 <- ... <- vn with root vn, of height n."""
    if n < 0:
        raise PreconditionError("path length must be non-negative")
    return build_space([[f"v{j + 1}", f"v{j}"] for j in range(n)], root=f"v{n}")


def star_space(leaves: int) -> TreeSpace:
    """A root with ``leaves`` leaf children named leaf1, leaf2, ..."""
    return build_space([["root", f"leaf{j}"] for j in range(1, leaves + 1)], root="root")


def closure(S: NodeSet) -> NodeSet:
    return NodeSet(S.space, S.space.close_in(S.mask, S.space.full))


def is_open(S: NodeSet) -> bool:
    below = S.space.below
    return all(below[i] & ~S.mask == 0 for i in iter_bits(S.mask))


def is_closed(S: NodeSet) -> bool:
    return S.space.close_in(S.mask, S.space.full) == S.mask


def _boundary_mask(space: Space, a: int, within: int) -> int:
    inside = a & within
    outside = within & ~a
    return space.close_in(inside, within) & space.close_in(outside, within)


def boundary_rel(A: NodeSet, L: NodeSet) -> NodeSet:
    """Boundary of ``A ∩ L`` taken inside the subspace ``L``."""
    return NodeSet(A.space, _boundary_mask(A.space, A.mask, A._other(L)))


def boundary_index(A: NodeSet) -> int:
    """Largest n with a nonempty n-th iterated boundary (the 0-th is K)."""
    space, a = A.space, A.mask
    level, n = space.full, 0
    while True:
        level = _boundary_mask(space, a, level)
        if not level:
            return n
        n += 1


def interior_rel(B: NodeSet, A: NodeSet) -> NodeSet:
    """Interior of ``B`` relative to the subspace ``A``."""
    a = B._other(A)
    space = B.space
    out = 0
    for i in iter_bits(B.mask & a):
        if space.below[i] & a & ~B.mask == 0:
            out |= 1 << i
    return NodeSet(space, out)


def is_nowhere_dense(B: NodeSet, A: NodeSet) -> bool:
    if not B <= A:
        raise PreconditionError("is_nowhere_dense needs B to be a subset of A")
    cl = NodeSet(B.space, B.space.close_in(B.mask, A.mask))
    return not interior_rel(cl, A)


def classify_set(S: NodeSet) -> SetClassification:
    space = S.space
    cl = space.close_in(S.mask, space.full)
    rim = cl & ~S.mask
    dcs = space.close_in(rim, space.full) & S.mask == 0
    canonical = None
    if dcs:
        canonical = (
            NodeSet(space, cl),
            NodeSet(space, _boundary_mask(space, S.mask, cl)),
        )
    return SetClassification(
        is_closed=cl == S.mask,
        is_open=is_open(S),
        is_dcs=dcs,
        index=boundary_index(S),
        canonical_dcs=canonical,
    )


def derived_set(L: NodeSet, n: int = 1) -> NodeSet:
    """The n-th derived set of the subspace ``L``."""
    m = L.mask
    for _ in range(n):
        m = L.space.derived_mask(m)
    return NodeSet(L.space, m)


def subspace(L: NodeSet) -> Space:
    """The subspace on ``L`` with the induced descendant relation.

    Each kept node's parent becomes its nearest strict ancestor inside ``L``.
    The result is a :class:`TreeSpace` when it has one root, otherwise a
    forest :class:`Space`.
    """
    space, keep = L.space, L.mask
    parent: dict[str, Optional[str]] = {}
    for i in iter_bits(keep):
        p = space.parent_of[i]
        while p >= 0 and not keep >> p & 1:
            p = space.parent_of[p]
        parent[space.nodes[i]] = None if p < 0 else space.nodes[p]
    roots = sum(1 for p in parent.values() if p is None)
    return TreeSpace(parent) if roots == 1 else Space(parent)


def lift(S: NodeSet, space: Space) -> NodeSet:
    """Re-express a set of a subspace as a set of an enclosing space."""
    return NodeSet(space, space.mask_of(S.members))


def is_subspace_of(small: Space, big: Space) -> bool:
    """True when ``small`` carries the relation ``big`` induces on its nodes."""
    if any(v not in big.index for v in small.nodes):
        return False
    return subspace(NodeSet(big, big.mask_of(small.nodes))) == small
