"""Pointwise algebra and lattice operations, plus restriction and extension.

The norm bounds each operation satisfies are stated next to it as helper
functions returning the bound, so callers can compare against
:func:`dcalc.norms.d_norm`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import PreconditionError, StructuralError
from .norms import d_norm, lsc_decomposition
from .space import NodeSet, Space, closure, is_subspace_of, iter_bits
from .values import NodeFunction, Scalar, to_scalar


def _same_space(f: NodeFunction, g: NodeFunction) -> None:
    if f.space != g.space:
        raise StructuralError("functions live on different spaces")


def abs_f(f: NodeFunction) -> NodeFunction:
    return abs(f)


def add(f: NodeFunction, g: NodeFunction) -> NodeFunction:
    _same_space(f, g)
    return f + g


def mul(f: NodeFunction, g: NodeFunction) -> NodeFunction:
    _same_space(f, g)
    return f * g


def scale(t, f: NodeFunction) -> NodeFunction:
    return f * to_scalar(t)


def _need_real(*fs: NodeFunction) -> None:
    for f in fs:
        if not f.is_real:
            raise PreconditionError("lattice operations need real-valued functions")


def lattice_max(f: NodeFunction, g: NodeFunction) -> NodeFunction:
    _same_space(f, g)
    _need_real(f, g)
    return NodeFunction.from_vector(f.space, [max(a, b) for a, b in zip(f.vec, g.vec)])


def lattice_min(f: NodeFunction, g: NodeFunction) -> NodeFunction:
    _same_space(f, g)
    _need_real(f, g)
    return NodeFunction.from_vector(f.space, [min(a, b) for a, b in zip(f.vec, g.vec)])


def invert(f: NodeFunction) -> NodeFunction:
    for v, x in zip(f.space.nodes, f.vec):
        if x == 0:
            raise PreconditionError(f"cannot invert: value 0 at node {v!r}")
    return f.map(lambda x: 1 / x if isinstance(x, complex) else 1 / Fraction(x))


def inverse_norm_bound(f: NodeFunction):
    """1/delta + ||f||_D / delta**2 with delta = min |f|."""
    delta = min(abs(x) for x in f.vec)
    if delta == 0:
        raise PreconditionError("function has a zero")
    if not f.is_real:
        raise PreconditionError("exact bound needs a real-valued function")
    delta = Fraction(delta)
    return 1 / delta + d_norm(f) / delta ** 2


@dataclass(frozen=True)
class LipschitzMap:
    """A scalar map with certified constants on discs |z| <= r.

    ``lipschitz(r)`` bounds its Lipschitz constant and ``sup(r)`` bounds
    |phi| on that disc.
    """

    name: str
    fn: Callable[[Scalar], Scalar]
    lipschitz: Callable[[Scalar], Scalar]
    sup: Callable[[Scalar], Scalar]


ABS = LipschitzMap("abs", abs, lambda r: 1, lambda r: r)


def _clamp_value(lam, z):
    r = abs(z)
    if r <= lam:
        return z
    if isinstance(z, complex):
        return z * (float(lam) / r)
    return lam if z > 0 else -lam


def clamp_map(lam) -> LipschitzMap:
    lam = to_scalar(lam)
    if not lam > 0:
        raise PreconditionError("clamp radius must be positive")
    return LipschitzMap(
        f"clamp({lam})",
        lambda z: _clamp_value(lam, z),
        lambda r: 1,
        lambda r: min(r, lam),
    )


def polynomial_map(coeffs: Sequence) -> LipschitzMap:
    """sum c_k z**k, with constants from the coefficient moduli."""
    cs = [to_scalar(c) for c in coeffs]

    def fn(z):
        acc = 0
        for c in reversed(cs):
            acc = acc * z + c
        return acc

    def lip(r):
        return sum(k * abs(c) * r ** (k - 1) for k, c in enumerate(cs) if k)

    def sup(r):
        return sum(abs(c) * r ** k for k, c in enumerate(cs))

    return LipschitzMap(f"poly{tuple(str(c) for c in cs)}", fn, lip, sup)


SQUARE = polynomial_map([0, 0, 1])


def compose_lipschitz(phi: LipschitzMap, f: NodeFunction) -> NodeFunction:
    return f.map(phi.fn)


def composition_bound(phi: LipschitzMap, f: NodeFunction):
    """sup|phi| + M * ||f||_D on the disc of radius sup|f|."""
    r = f.sup_norm()
    return phi.sup(r) + phi.lipschitz(r) * d_norm(f)


def clamp_modulus(lam, f: NodeFunction) -> NodeFunction:
    """Radially pull values of modulus above ``lam`` back to modulus ``lam``."""
    return compose_lipschitz(clamp_map(lam), f)


def restrict(f: NodeFunction, W: NodeSet) -> NodeFunction:
    return f.restrict(W)


def _check_embedding(f: NodeFunction, K: Space) -> NodeSet:
    if not len(f.space):
        raise PreconditionError("cannot extend from an empty set")
    if not is_subspace_of(f.space, K):
        raise PreconditionError("function's space is not a subspace of the target")
    return K.set(f.space.nodes)


def extend(f: NodeFunction, K: Space) -> NodeFunction:
    """Extend real f from a subspace W of K without increasing the D-norm.

    f = u - v with u, v nonnegative LSC and u + v <= ||f||_D.  On the
    closure of W each is replaced by its lower envelope over points of W;
    every other node copies the values of its nearest ancestor in the
    closure, which keeps both parts LSC.
    """
    W = _check_embedding(f, K)
    if not f.is_real:
        raise PreconditionError("extend needs a real-valued function")
    u, v = lsc_decomposition(f)
    cl = closure(W).mask
    ue: list = [None] * len(K)
    ve: list = [None] * len(K)
    for i in iter_bits(cl):
        pts = [K.nodes[j] for j in iter_bits(K.subtree_mask(i) & W.mask)]
        ue[i] = min(u[p] for p in pts)
        ve[i] = min(v[p] for p in pts)
    for i in reversed(range(len(K))):
        if ue[i] is None:
            p = K.parent_of[i]
            # a tree of the forest that misses W entirely gets zero
            ue[i], ve[i] = (0, 0) if p < 0 else (ue[p], ve[p])
    return NodeFunction.from_vector(K, [a - b for a, b in zip(ue, ve)])


def zero_extend(f: NodeFunction, K: Space) -> NodeFunction:
    """f on its subspace W, 0 elsewhere in K."""
    _check_embedding(f, K)
    vals = {v: 0 for v in K.nodes}
    vals.update(zip(f.space.nodes, f.vec))
    return NodeFunction.from_vector(K, [vals[v] for v in K.nodes])
