"""Exact D- and qD-norms, the LSC splitting and related cross-checks.

For a real node-uniform f with stabilized oscillation ``osc_w f``:

    ||f||_D  = max(|f| + osc_w f)
    ||f||_qD = max(osc_w f)

Complex inputs only get two-sided float bounds, see :class:`NormBounds`.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Sequence, Union

from .errors import InvariantViolation, PreconditionError
from .oscillation import _os_step, breakpoints, osc_n, osc_omega, full_profile
from .space import NodeSet, classify_set, path_space
from .values import NodeFunction, Real, Scalar, fmt, to_scalar


@dataclass(frozen=True)
class NormBounds:
    """Float bounds on the D-norm of a complex function (flagged inexact)."""

    lower: float
    upper: float
    flagged: bool = True


@dataclass(frozen=True)
class NormReport:
    sup_norm: Real
    d_norm: Real
    qd_norm: Real
    d_index: int
    lower_bound_18: Real
    b14_lower: Real
    b14_upper: Real
    fl_value: Real

    def as_dict(self) -> dict[str, Union[str, int]]:
        out = {}
        for fld in fields(self):
            val = getattr(self, fld.name)
            out[fld.name] = val if fld.name == "d_index" else fmt(val)
        return out


def _need_real(f: NodeFunction, what: str) -> None:
    if not f.is_real:
        raise PreconditionError(f"{what} needs a real-valued function")


def _max(vec, default=0):
    return max(vec, default=default)


def _real_d(f: NodeFunction):
    om = osc_omega(f).vec
    return _max(abs(a) + o for a, o in zip(f.vec, om))


def d_norm(f: NodeFunction):
    """Exact D-norm for real f; :class:`NormBounds` for complex f."""
    if f.is_real:
        return _real_d(f)
    return d_norm_bounds(f)


def qd_norm(f: NodeFunction):
    return _max(osc_omega(f).vec)


def d_norm_bounds(f: NodeFunction) -> NormBounds:
    """Bounds for complex f from its real and imaginary parts.

    With s = max(|f| + osc_w f):  s/2 <= ||f||_D <= ||Re f||_D + ||Im f||_D
    and ||f||_D <= 2s.
    """
    vals = [complex(x) for x in f.vec]
    re = NodeFunction.from_vector(f.space, [float(z.real) for z in vals])
    im = NodeFunction.from_vector(f.space, [float(z.imag) for z in vals])
    s = float(_max(abs(a) + o for a, o in zip(vals, osc_omega(f).vec)))
    parts = float(_real_d(re) + _real_d(im))
    return NormBounds(lower=s / 2, upper=min(parts, 2 * s))


def lsc_decomposition(f: NodeFunction) -> tuple[NodeFunction, NodeFunction]:
    """Nonnegative LSC u, v with f = u - v and max(u + v) = ||f||_D."""
    _need_real(f, "lsc_decomposition")
    lam = _real_d(f)
    om = osc_omega(f).vec
    half = to_scalar("1/2")
    u = [(lam - o + a) * half for a, o in zip(f.vec, om)]
    v = [(lam - o - a) * half for a, o in zip(f.vec, om)]
    return NodeFunction.from_vector(f.space, u), NodeFunction.from_vector(f.space, v)


def lemma18_bound(f: NodeFunction):
    """Best lower bound of the form sum(deltas) + sup|f| on the last os-set.

    Searches all chains with thresholds from the exact gap set, including
    the empty chain (which contributes sup|f|).
    """
    gaps = breakpoints(f)
    absval = [abs(x) for x in f.vec]
    memo: dict[int, Scalar] = {}

    def best(w: int):
        if w in memo:
            return memo[w]
        val = _max(absval[i] for i in range(len(absval)) if w >> i & 1)
        by_set: dict[int, Scalar] = {}
        for e in gaps:
            nxt = _os_step(f, w, e)
            if nxt:
                by_set[nxt] = e
        for nxt, e in by_set.items():
            val = max(val, e + best(nxt))
        memo[w] = val
        return val

    return best(f.space.full) if len(f.space) else 0


def cell_function(a: Sequence) -> NodeFunction:
    """The function a_j at v_j on the path of height len(a) - 1."""
    if not a:
        raise PreconditionError("cell values must be nonempty")
    space = path_space(len(a) - 1)
    return NodeFunction(space, {f"v{j}": x for j, x in enumerate(a)})


def cell_norm(a: Sequence) -> tuple:
    """Closed-form (D, qD) norms of a cell function on a path."""
    if not a:
        raise PreconditionError("cell values must be nonempty")
    vals = [to_scalar(x) for x in a]
    qd = sum(abs(vals[i] - vals[i - 1]) for i in range(1, len(vals)))
    return qd + abs(vals[-1]), qd


def b14_report(f: NodeFunction) -> NormReport:
    """Norm summary; raises :class:`InvariantViolation` if any bound fails.

    The B_{1/4} norm of a node-uniform function coincides with its D-norm,
    so only the two-sided estimate around it is reported.
    """
    _need_real(f, "b14_report")
    prof = full_profile(f)
    sup = f.sup_norm()
    d = _real_d(f)
    qd = _max(prof.omega.vec)
    low18 = lemma18_bound(f)
    fl = _max(abs(a) + t for a, t in zip(f.vec, prof.tilde_omega.vec))
    half = to_scalar("1/2")
    rep = NormReport(
        sup_norm=sup,
        d_norm=d,
        qd_norm=qd,
        d_index=prof.d_index,
        lower_bound_18=low18,
        b14_lower=(sup + qd) * half,
        b14_upper=sup + 3 * qd,
        fl_value=fl,
    )
    problems = report_violations(rep)
    if problems:
        raise InvariantViolation("; ".join(problems))
    return rep


def report_violations(rep: NormReport) -> list[str]:
    checks = [
        (rep.qd_norm <= rep.d_norm, "qd_norm > d_norm"),
        (rep.d_norm <= rep.sup_norm + rep.qd_norm, "d_norm > sup_norm + qd_norm"),
        (rep.lower_bound_18 <= rep.d_norm, "chain lower bound exceeds d_norm"),
        (rep.lower_bound_18 == rep.d_norm, "chain lower bound is not attained"),
        (rep.b14_lower <= rep.d_norm <= rep.b14_upper, "d_norm outside the sandwich"),
        (rep.fl_value == rep.d_norm, "envelope-free value differs from d_norm"),
    ]
    return [msg for ok, msg in checks if not ok]


def closed_cover_norm(f: NodeFunction, cover: Sequence[NodeSet]):
    """Largest D-norm of f over the pieces of a finite closed cover."""
    _need_real(f, "closed_cover_norm")
    space = f.space
    union = 0
    for W in cover:
        if W.space != space:
            raise PreconditionError("cover set lives in another space")
        if not classify_set(W).is_closed:
            raise PreconditionError(f"cover set {W!r} is not closed")
        union |= W.mask
    if union != space.full:
        raise PreconditionError("cover does not cover the space")
    return max((_real_d(f.restrict(W)) for W in cover if W), default=0)


def osc_sup(f: NodeFunction):
    """Sup of the first oscillation."""
    return _max(osc_n(f, 1).vec)
