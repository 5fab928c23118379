"""Node-uniform functions and the scalar conventions they use.

Real values are kept exact as ``int`` or :class:`fractions.Fraction`.
Complex values use Python floats and are compared with :data:`TOL`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

from .errors import PreconditionError
from .space import NodeSet, Space, iter_bits, natural_key, subspace

Real = Union[int, Fraction]
Scalar = Union[int, Fraction, complex]

TOL = 1e-9


def to_scalar(value) -> Scalar:
    """Parse a user value: ints, ``"p/q"`` strings, Fractions, or complex.

    A two-element list ``[re, im]`` is read as a complex number.
    """
    if isinstance(value, bool):
        raise PreconditionError("booleans are not function values")
    if isinstance(value, int):
        return value
    if isinstance(value, Rational):
        q = Fraction(value)
        return q.numerator if q.denominator == 1 else q
    if isinstance(value, str):
        try:
            q = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(f"not a rational number: {value!r}") from None
        return q.numerator if q.denominator == 1 else q
    if isinstance(value, float):
        return to_scalar(Fraction(repr(value)))
    if isinstance(value, complex):
        return value
    if isinstance(value, (list, tuple)) and len(value) == 2:
        try:
            return complex(float(value[0]), float(value[1]))
        except (TypeError, ValueError):
            raise PreconditionError(f"bad complex pair: {value!r}") from None
    raise PreconditionError(f"unsupported value {value!r}")


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def fmt(x: Scalar) -> str:
    """Render a scalar; rationals come out as ``p/q`` (or an integer)."""
    if isinstance(x, complex):
        return f"{x.real!r}{x.imag:+}j"
    if isinstance(x, float):
        return repr(x)
    return str(Fraction(x))


class NodeFunction:
    """A function constant on each node class of ``space``.

    Values are held in a tuple aligned with ``space.nodes``.
    """

    __slots__ = ("space", "vec", "memo")

    def __init__(self, space: Space, values: Mapping[str, object]):
        missing = [v for v in space.nodes if v not in values]
        if missing:
            raise PreconditionError(f"no value for node {missing[0]!r}")
        extra = [v for v in values if v not in space.index]
        if extra:
            raise PreconditionError(f"value given for unknown node {extra[0]!r}")
        self.space = space
        self.vec = tuple(to_scalar(values[v]) for v in space.nodes)
        self.memo = {}

    @classmethod
    def from_vector(cls, space: Space, vec: Sequence[Scalar]) -> "NodeFunction":
        if len(vec) != len(space.nodes):
            raise PreconditionError("vector length does not match the space")
        f = cls.__new__(cls)
        f.space = space
        f.vec = tuple(vec)
        f.memo = {}
        return f

    @classmethod
    def constant(cls, space: Space, c: Scalar) -> "NodeFunction":
        return cls.from_vector(space, [to_scalar(c)] * len(space.nodes))

    @classmethod
    def indicator(cls, S: NodeSet, value: Scalar = 1) -> "NodeFunction":
        m = S.mask
        return cls.from_vector(S.space, [value if m >> i & 1 else 0 for i in range(len(S.space.nodes))])

    def __getitem__(self, node: str) -> Scalar:
        return self.vec[self.space.index[node]]

    def items(self) -> Iterator[tuple[str, Scalar]]:
        for v in self.space.display_order():
            yield v, self[v]

    def as_dict(self) -> dict[str, Scalar]:
        return dict(self.items())

    @property
    def domain(self) -> NodeSet:
        return self.space.everything()

    @property
    def is_real(self) -> bool:
        return all(isinstance(x, (int, Fraction)) for x in self.vec)

    def sup_norm(self):
        return max((abs(x) for x in self.vec), default=0)

    def map(self, fn: Callable[[Scalar], Scalar]) -> "NodeFunction":
        return NodeFunction.from_vector(self.space, [fn(x) for x in self.vec])

    def restrict(self, L: NodeSet) -> "NodeFunction":
        """This function on the subspace ``L`` (a view with induced order)."""
        if L.space != self.space:
            raise PreconditionError("restriction set lives in another space")
        sub = subspace(L)
        vals = {self.space.nodes[i]: self.vec[i] for i in iter_bits(L.mask)}
        return NodeFunction.from_vector(sub, [vals[v] for v in sub.nodes])

    def _zip(self, other: "NodeFunction") -> Iterable[tuple[Scalar, Scalar]]:
        if other.space != self.space:
            raise PreconditionError("functions live on different spaces")
        if other.space.nodes == self.space.nodes:
            return zip(self.vec, other.vec)
        return zip(self.vec, (other[v] for v in self.space.nodes))

    def __add__(self, other):
        if isinstance(other, NodeFunction):
            return NodeFunction.from_vector(self.space, [a + b for a, b in self._zip(other)])
        return self.map(lambda x: x + other)

    def __sub__(self, other):
        if isinstance(other, NodeFunction):
            return NodeFunction.from_vector(self.space, [a - b for a, b in self._zip(other)])
        return self.map(lambda x: x - other)

    def __mul__(self, other):
        if isinstance(other, NodeFunction):
            return NodeFunction.from_vector(self.space, [a * b for a, b in self._zip(other)])
        return self.map(lambda x: x * other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.map(lambda x: -x)

    def __abs__(self):
        return self.map(abs)

    def close_to(self, other: "NodeFunction", tol: float = TOL) -> bool:
        return all(abs(a - b) <= tol for a, b in self._zip(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, NodeFunction) or other.space != self.space:
            return NotImplemented if not isinstance(other, NodeFunction) else False
        return all(a == b for a, b in self._zip(other))

    __hash__ = None

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {fmt(x)}" for k, x in self.items())
        return f"NodeFunction({{{body}}})"


def sort_nodes(ids: Iterable[str]) -> list[str]:
    return sorted(ids, key=natural_key)
