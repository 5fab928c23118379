"""Randomized invariant suite shared by ``dcalc check`` and the tests.

Each property draws a fresh instance per case from a ``random.Random``
seeded by (seed, property name, case number), so any failure can be
replayed on its own.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from . import algebra_ops as alg
from . import norms, oracles, oscillation as osc
from .generate import random_function, random_set, random_space
from .set_calculus import (
    boundary_tower,
    chi_norm,
    dcs_decompose,
    dcs_part_count,
    min_dcs_count,
)
from .space import (
    NodeSet,
    boundary_rel,
    classify_set,
    closure,
    derived_set,
    interior_rel,
    is_closed,
    is_open,
    iter_bits,
    lift,
    subspace,
)
from .values import NodeFunction

SUITES = ("space", "set_calculus", "oscillation", "norms", "algebra_ops", "oracles")
HALF = Fraction(1, 2)


class PropertyFailure(AssertionError):
    pass


def require(cond: bool, msg: str) -> None:
    if not cond:
        raise PropertyFailure(msg)


@dataclass(frozen=True)
class Property:
    suite: str
    name: str
    check: Callable[[random.Random], None]
    summary: str


@dataclass(frozen=True)
class PropertyResult:
    suite: str
    name: str
    cases: int
    failure: Optional[str]
    seconds: float

    @property
    def passed(self) -> bool:
        return self.failure is None


REGISTRY: list[Property] = []


def prop(suite: str):
    def wrap(fn):
        summary = (fn.__doc__ or fn.__name__).strip().splitlines()[0]
        REGISTRY.append(Property(suite, fn.__name__, fn, summary))
        return fn
    return wrap


def properties(suite: str = "all") -> list[Property]:
    if suite == "all":
        return list(REGISTRY)
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    return [p for p in REGISTRY if p.suite == suite]


def run_property(p: Property, seed: int, cases: int) -> PropertyResult:
    start = time.perf_counter()
    failure = None
    for case in range(cases):
        rng = random.Random(f"{seed}/{p.name}/{case}")
        try:
            p.check(rng)
        except PropertyFailure as exc:
            failure = f"case {case}: {exc}"
            break
        except Exception as exc:  # a crash is a failed case too
            failure = f"case {case}: {type(exc).__name__}: {exc}"
            break
    return PropertyResult(p.suite, p.name, cases, failure, time.perf_counter() - start)


def run_suite(suite: str, seed: int = 0, cases: int = 100) -> list[PropertyResult]:
    return [run_property(p, seed, cases) for p in properties(suite)]


# -- helpers ---------------------------------------------------------------

def _le(f: NodeFunction, g: NodeFunction) -> bool:
    return all(a <= b for a, b in zip(f.vec, g.vec))


def _all_subsets(space):
    return range(space.full + 1)


def _sub_masks(space, within: int):
    sub = within
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & within


def _subtree_set(f: NodeFunction, i: int) -> NodeSet:
    return NodeSet(f.space, f.space.subtree_mask(i))


# -- space -----------------------------------------------------------------

@prop("space")
def closure_kernel(rng):
    """closure is idempotent, monotone, additive; interior is its dual."""
    K = random_space(rng, 12)
    S, T = random_set(rng, K), random_set(rng, K)
    cS = closure(S)
    require(closure(cS) == cS, "closure not idempotent")
    require(S <= cS, "closure not extensive")
    require(closure(S & T) <= closure(S), "closure not monotone")
    require(closure(S | T) == cS | closure(T), "closure not additive")
    whole = K.everything()
    require(interior_rel(S, whole) == closure(S.complement()).complement(),
            "interior is not the dual of closure")


@prop("space")
def open_closed_by_order(rng):
    """open means descendant-closed and closed means ancestor-closed."""
    K = random_space(rng, 12)
    S = random_set(rng, K)
    down = all(K.below[i] & ~S.mask == 0 for i in iter_bits(S.mask))
    up = all(K.above[i] & ~S.mask == 0 for i in iter_bits(S.mask))
    c = classify_set(S)
    require(c.is_open == down == is_closed(S.complement()), "open test disagrees")
    require(c.is_closed == up == is_open(S.complement()), "closed test disagrees")


@prop("space")
def dcs_by_enumeration(rng):
    """is_dcs agrees with a search for closed C and open O with S = C & O."""
    K = random_space(rng, 12)
    S = random_set(rng, K)
    sets = [NodeSet(K, m) for m in _all_subsets(K)]
    closed = [X.mask for X in sets if is_closed(X) and S <= X]
    opened = [X.mask for X in sets if is_open(X) and S <= X]
    found = any(c & o == S.mask for c in closed for o in opened)
    require(classify_set(S).is_dcs == found, f"is_dcs wrong for {S!r}")


@prop("space")
def derived_sets_by_height(rng):
    """iterated derived sets are height level sets; relative ones use L."""
    K = random_space(rng, 12)
    for n in range(K.height + 2):
        want = {v for v in K.nodes if K.node_height(v) >= n}
        require(derived_set(K.everything(), n).members == want, f"derived set {n} wrong")
    L = random_set(rng, K)
    view = subspace(L)
    limits = {view.nodes[i] for i, ks in enumerate(view.kids) if ks}
    require(derived_set(L).members == limits, "relative derived set wrong")


@prop("space")
def subspace_is_relative(rng):
    """kernels on a subspace view match the relative topology."""
    K = random_space(rng, 12)
    L = random_set(rng, K)
    A = random_set(rng, K)
    view = subspace(L)
    S_view = view.set((A & L).members)
    require(lift(closure(S_view), K) == closure(A & L) & L, "relative closure wrong")
    whole = view.everything()
    require(lift(boundary_rel(S_view, whole), K) == boundary_rel(A, L),
            "relative boundary wrong")


# -- set calculus ----------------------------------------------------------

@prop("set_calculus")
def tower_is_os_chain(rng):
    """boundary tower equals the os-set chain of the indicator."""
    K = random_space(rng, 10)
    A = random_set(rng, K)
    t = boundary_tower(A)
    chi = NodeFunction.indicator(A)
    for eps in (HALF, 1):
        chain = osc.os_sets(chi, [eps] * (t.index + 1))
        require([S.mask for S in chain] == [S.mask for S in t.tower[1:]] + [0],
                f"os chain differs from tower at eps={eps}")
        require(osc.baire_index(chi, eps) == t.index, "index differs")


@prop("set_calculus")
def chi_norm_matches_engine(rng):
    """closed-form indicator norms equal the general engine."""
    K = random_space(rng, 10)
    A = random_set(rng, K)
    chi = NodeFunction.indicator(A)
    require(chi_norm(A) == (norms.d_norm(chi), norms.qd_norm(chi)), "norms differ")


@prop("set_calculus")
def decomposition_is_valid(rng):
    """parts are disjoint DCS sets covering A, as few as possible."""
    K = random_space(rng, 10)
    A = random_set(rng, K)
    dec = dcs_decompose(A)
    seen = 0
    for part, (C, O) in zip(dec.parts, dec.certificates):
        require(part.mask & seen == 0, "parts overlap")
        seen |= part.mask
        require(bool(part), "empty part")
        require(classify_set(part).is_dcs, f"part {part!r} is not DCS")
        require(is_closed(C) and is_open(O) and C & O == part, "bad certificate")
    require(seen == A.mask, "parts do not cover A")
    require(dec.count == dcs_part_count(A), "count differs from closed form")
    require(min_dcs_count(A) == dec.count, "a smaller partition exists")


@prop("set_calculus")
def dcs_has_index_at_most_two(rng):
    """every DCS has index at most two."""
    K = random_space(rng, 12)
    W = closure(random_set(rng, K)) & random_set(rng, K)
    O = NodeSet(K, 0)
    for i in iter_bits(W.mask):
        O = O | NodeSet(K, K.subtree_mask(i))
    W = closure(W) & O
    require(classify_set(W).is_dcs, "construction is not DCS")
    require(classify_set(W).index <= 2, f"DCS {W!r} has index > 2")


@prop("set_calculus")
def boundary_bands_are_dcs(rng):
    """A cut to two consecutive boundary bands is a DCS."""
    K = random_space(rng, 12)
    A = random_set(rng, K)
    t = boundary_tower(A)
    for i in range(t.index + 1):
        band = A & (t.level(i) - t.level(i + 2))
        require(classify_set(band).is_dcs, f"band {i} not DCS")


# -- oscillation -----------------------------------------------------------

@prop("oscillation")
def levels_monotone_usc(rng):
    """levels increase and each level is upper semicontinuous."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    prof = osc.full_profile(f)
    require(all(v == 0 for v in prof.per_level[0].vec), "level 0 is not zero")
    for lo, hi in zip(prof.per_level, prof.per_level[1:]):
        require(_le(lo, hi), "levels decrease")
    require(all(osc.is_usc(g) for g in prof.per_level), "a level is not USC")


@prop("oscillation")
def scaling_and_subadditivity(rng):
    """osc scales by |t| and is subadditive."""
    K = random_space(rng, 10)
    f, g = random_function(rng, K), random_function(rng, K)
    t = rng.choice([-3, -1, Fraction(-2, 3), 0, Fraction(1, 2), 2])
    for n in range(K.height + 2):
        require(osc.osc_n(f * t, n) == osc.osc_n(f, n) * abs(t), f"scaling fails at {n}")
        require(_le(osc.osc_n(f + g, n), osc.osc_n(f, n) + osc.osc_n(g, n)),
                f"subadditivity fails at {n}")


@prop("oscillation")
def product_rule(rng):
    """osc(fg) <= U|f| osc g + U|g| osc f."""
    K = random_space(rng, 10)
    f, g = random_function(rng, K), random_function(rng, K)
    uf, ug = osc.upper_env(abs(f)), osc.upper_env(abs(g))
    for n in range(K.height + 2):
        rhs = uf * osc.osc_n(g, n) + ug * osc.osc_n(f, n)
        require(_le(osc.osc_n(f * g, n), rhs), f"product bound fails at {n}")


@prop("oscillation")
def modulus_lowers_osc(rng):
    """osc |f| <= osc f."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    for n in range(K.height + 2):
        require(_le(osc.osc_n(abs(f), n), osc.osc_n(f, n)), f"fails at {n}")


@prop("oscillation")
def stabilization(rng):
    """levels stay fixed after the D-index and osc +- f are USC there."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    prof = osc.full_profile(f)
    d = prof.d_index
    for n in range(d, K.height + 3):
        require(osc.osc_n(f, n) == prof.omega, f"level {n} moved after stabilizing")
    require(osc.is_usc(prof.omega + f) and osc.is_usc(prof.omega - f),
            "osc +- f not USC at the D-index")
    if d:
        om = prof.per_level[d - 1]
        require(not (osc.is_usc(om + f) and osc.is_usc(om - f)),
                "osc +- f already USC below the D-index")


@prop("oscillation")
def constant_shift(rng):
    """adding a constant leaves every level unchanged."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    c = rng.choice([-2, Fraction(1, 3), 5])
    for n in range(K.height + 2):
        require(osc.osc_n(f + c, n) == osc.osc_n(f, n), f"shift changes level {n}")


@prop("oscillation")
def semicontinuous_levels_collapse(rng):
    """for USC or LSC f every level from 1 on equals the first."""
    K = random_space(rng, 10)
    g = random_function(rng, K)
    for f in (osc.upper_env(g), osc.lower_env(g)):
        first = osc.osc_n(f, 1)
        require(first == osc.upper_env(osc.lower_osc(f)), "first level is not U(lower osc)")
        for n in range(2, K.height + 2):
            require(osc.osc_n(f, n) == first, f"level {n} differs from level 1")


@prop("oscillation")
def chain_search_matches_levels(rng):
    """each level equals the best threshold sum over chains keeping x."""
    K = random_space(rng, 7)
    f = random_function(rng, K, distinct=3)
    for n in range(K.height + 2):
        lv = osc.osc_n(f, n)
        for v in K.nodes:
            require(osc.lemma36_oracle(f, n, v) == lv[v], f"level {n} at {v}")


@prop("oscillation")
def omega_sup_is_chain_sup(rng):
    """sup of the stabilized level equals the best chain threshold sum."""
    K = random_space(rng, 8)
    f = random_function(rng, K, distinct=3)
    require(max(osc.osc_omega(f).vec) == oracles.eps_sequence_search(f), "sups differ")


@prop("oscillation")
def index_orderings(rng):
    """D-index <= Baire index <= height."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    ib = osc.baire_index(f)
    require(osc.d_index(f) <= ib <= K.height, "index ordering fails")
    require(ib == max((i for _, i in osc.index_table(f)), default=0),
            "index is not the max over thresholds")


@prop("oscillation")
def baire_index_subadditive(rng):
    """i(f+g, e) <= i(f, e/2) + i(g, e/2), also for the omega-level index."""
    K = random_space(rng, 9)
    f, g = random_function(rng, K), random_function(rng, K)
    cands = osc.breakpoints(f + g) + osc.breakpoints(f) + osc.breakpoints(g)
    eps = rng.choice(cands) if cands else 1
    e2 = eps * HALF
    require(osc.baire_index(f + g, eps) <= osc.baire_index(f, e2) + osc.baire_index(g, e2),
            f"Baire index not subadditive at {eps}")
    w = lambda h, e: osc.omega_level_sets(h, e)[1]
    require(w(f + g, eps) <= w(f, e2) + w(g, e2), f"omega index not subadditive at {eps}")


@prop("oscillation")
def restriction_adds_threshold(rng):
    """where osc_w f >= delta on L, osc_w f >= delta + osc_w(f|L)."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    om = osc.osc_omega(f)
    L = random_set(rng, K)
    if not L:
        return
    delta = min(om.vec[i] for i in iter_bits(L.mask))
    sub = osc.osc_omega(f.restrict(L))
    for v in L:
        require(om[v] >= delta + sub[v], f"inequality fails at {v}")


@prop("oscillation")
def omega_index_bounds(rng):
    """e * omega-index <= sup osc_w f, and the local qD index agrees."""
    K = random_space(rng, 9)
    f = random_function(rng, K)
    top = max(osc.osc_omega(f).vec)
    cands = sorted(set(osc.osc_omega(f).vec) - {0}) or [1]
    eps = rng.choice(cands + [c * HALF for c in cands])
    sets, idx = osc.omega_level_sets(f, eps)
    require(eps * idx <= top, "threshold times index exceeds the sup")
    require(all(b <= a for a, b in zip(sets, sets[1:])), "level sets not nested")
    require(osc.qd_local_index(f, eps) == idx, "local qD index differs")


# -- norms -----------------------------------------------------------------

@prop("norms")
def norm_chain(rng):
    """qd <= d <= sup + qd."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    d, qd = norms.d_norm(f), norms.qd_norm(f)
    require(qd <= d <= f.sup_norm() + qd, f"chain fails: qd={qd} d={d}")


@prop("norms")
def norm_routes_agree(rng):
    """engine, chain bound and brute-force chain search give one D-norm."""
    K = random_space(rng, 8)
    f = random_function(rng, K, distinct=3)
    d = norms.d_norm(f)
    require(norms.lemma18_bound(f) == d, "chain lower bound not attained")
    require(oracles.eps_sequence_search(f, with_sup=True) == d, "oracle search differs")


@prop("norms")
def cell_closed_form(rng):
    """path cells: closed form equals the engine."""
    a = [rng.choice([-2, -1, 0, Fraction(1, 2), 1, 3]) for _ in range(rng.randint(1, 8))]
    f = norms.cell_function(a)
    require(norms.cell_norm(a) == (norms.d_norm(f), norms.qd_norm(f)), f"cell {a}")


@prop("norms")
def lsc_split(rng):
    """u, v >= 0 are LSC, f = u - v and max(u + v) = ||f||_D."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    u, v = norms.lsc_decomposition(f)
    require(min(u.vec) >= 0 and min(v.vec) >= 0, "negative part")
    require(osc.is_lsc(u) and osc.is_lsc(v), "part not LSC")
    require(u - v == f, "parts do not reconstruct f")
    require(max((u + v).vec) == norms.d_norm(f), "u + v misses the norm")


@prop("norms")
def local_qd_norm(rng):
    """osc_w f(x) is the qD-norm of f on the subtree at x."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    om = osc.osc_omega(f)
    for i, v in enumerate(K.nodes):
        require(om[v] == norms.qd_norm(f.restrict(_subtree_set(f, i))), f"at {v}")


@prop("norms")
def index_norm_bounds(rng):
    """||f||_D <= (2n+1) sup|f| and ||f||_qD <= 2n sup|f| for n the index."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    n, s = osc.baire_index(f), f.sup_norm()
    require(norms.d_norm(f) <= (2 * n + 1) * s, "D bound fails")
    require(norms.qd_norm(f) <= n * norms.osc_sup(f) <= 2 * n * s, "qD bound fails")


@prop("norms")
def closed_cover_max(rng):
    """the D-norm is the max over a closed cover."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    c1, c2 = closure(random_set(rng, K)), closure(random_set(rng, K))
    rest = closure((c1 | c2).complement())
    cover = [W for W in (c1, c2, rest) if W]
    require(norms.closed_cover_norm(f, cover) == norms.d_norm(f), "cover max differs")


@prop("norms")
def sandwich_report(rng):
    """the report's two-sided estimate and identities hold."""
    K = random_space(rng, 9)
    f = random_function(rng, K)
    rep = norms.b14_report(f)
    require(not norms.report_violations(rep), "report violations")
    require(osc.full_profile(f).tilde_omega == osc.osc_omega(f), "sup of levels is not stable level")


@prop("norms")
def complex_bounds_bracket(rng):
    """complex bounds are ordered and bracket the exact real value."""
    K = random_space(rng, 8)
    f = random_function(rng, K)
    g = random_function(rng, K)
    h = NodeFunction.from_vector(K, [complex(a, b) for a, b in zip(f.vec, g.vec)])
    b = norms.d_norm(h)
    require(b.flagged and b.lower <= b.upper + 1e-9, "bounds out of order")
    r = norms.d_norm_bounds(NodeFunction.from_vector(K, [complex(a) for a in f.vec]))
    d = float(norms.d_norm(f))
    require(r.lower - 1e-9 <= d <= r.upper + 1e-9, "real value outside its bounds")


# -- algebra ---------------------------------------------------------------

@prop("algebra_ops")
def algebra_bounds(rng):
    """modulus, sum and product obey the Banach algebra bounds."""
    K = random_space(rng, 10)
    f, g = random_function(rng, K), random_function(rng, K)
    df, dg = norms.d_norm(f), norms.d_norm(g)
    require(norms.d_norm(alg.abs_f(f)) <= df, "modulus bound")
    require(norms.d_norm(alg.add(f, g)) <= df + dg, "sum bound")
    require(norms.d_norm(alg.mul(f, g)) <= df * dg, "product bound")


@prop("algebra_ops")
def lattice_bounds(rng):
    """max/min are bounded by the sum of norms and add up to f + g."""
    K = random_space(rng, 10)
    f, g = random_function(rng, K), random_function(rng, K)
    hi, lo = alg.lattice_max(f, g), alg.lattice_min(f, g)
    s = norms.d_norm(f) + norms.d_norm(g)
    require(norms.d_norm(hi) <= s and norms.d_norm(lo) <= s, "lattice bound")
    require(hi + lo == f + g, "max + min != f + g")


@prop("algebra_ops")
def inverse_bound(rng):
    """||1/f||_D <= 1/delta + ||f||_D / delta^2."""
    K = random_space(rng, 10)
    f = random_function(rng, K, pool=[-2, Fraction(-1, 2), Fraction(1, 3), 1, 3])
    require(norms.d_norm(alg.invert(f)) <= alg.inverse_norm_bound(f), "inverse bound")


@prop("algebra_ops")
def composition_bound(rng):
    """||phi o f||_D <= sup|phi| + M ||f||_D for the shipped maps."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    coeffs = [rng.choice([-1, 0, Fraction(1, 2), 2]) for _ in range(rng.randint(1, 4))]
    maps = [alg.ABS, alg.SQUARE, alg.clamp_map(rng.choice([HALF, 1, 2])),
            alg.polynomial_map(coeffs)]
    for phi in maps:
        g = alg.compose_lipschitz(phi, f)
        require(norms.d_norm(g) <= alg.composition_bound(phi, f), f"bound fails for {phi.name}")


@prop("algebra_ops")
def clamp_is_one_lipschitz(rng):
    """the clamp is 1-Lipschitz and ||clamp f||_D <= lambda + ||f||_qD."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    lam = rng.choice([Fraction(1, 4), HALF, 1, Fraction(3, 2)])
    g = alg.clamp_modulus(lam, f)
    for i, j in combinations(range(len(K)), 2):
        require(abs(g.vec[i] - g.vec[j]) <= abs(f.vec[i] - f.vec[j]), "not 1-Lipschitz")
    require(g.sup_norm() <= lam, "clamp exceeds lambda")
    require(norms.d_norm(g) <= lam + norms.qd_norm(f), "clamp norm bound")
    z = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(6)]
    c = [alg._clamp_value(float(lam), w) for w in z]
    for a, b in combinations(range(6), 2):
        require(abs(c[a] - c[b]) <= abs(z[a] - z[b]) + 1e-9, "complex clamp not 1-Lipschitz")


@prop("algebra_ops")
def clamp_commutes_with_restriction(rng):
    """clamping then restricting equals restricting then clamping."""
    K = random_space(rng, 10)
    f = random_function(rng, K)
    W = random_set(rng, K)
    lam = rng.choice([HALF, 1])
    require(alg.clamp_modulus(lam, f).restrict(W) == alg.clamp_modulus(lam, f.restrict(W)),
            "clamp and restriction do not commute")


@prop("algebra_ops")
def extension_keeps_norm(rng):
    """extension from W keeps f on W and its D-norm exactly."""
    K = random_space(rng, 10)
    W = random_set(rng, K)
    if not W:
        W = K.everything()
    f = random_function(rng, subspace(W))
    g = alg.extend(f, K)
    require(g.restrict(W) == f, "extension changes f on W")
    require(norms.d_norm(g) == norms.d_norm(f), "extension changes the norm")
    O = NodeSet(K, 0)
    for i in iter_bits(W.mask):
        O = O | NodeSet(K, K.subtree_mask(i))
    fo = random_function(rng, subspace(O))
    require(norms.d_norm(alg.zero_extend(fo, K)) == norms.d_norm(fo),
            "zero extension from an open set changes the norm")


@prop("algebra_ops")
def dcs_multiplier(rng):
    """extending by zero off a DCS at most doubles the norm."""
    K = random_space(rng, 10)
    dec = dcs_decompose(random_set(rng, K))
    if not dec.parts:
        return
    W = rng.choice(dec.parts)
    f = random_function(rng, subspace(W))
    require(norms.d_norm(alg.zero_extend(f, K)) <= 2 * norms.d_norm(f), "multiplier bound")


# -- oracles ---------------------------------------------------------------

@prop("oracles")
def definition_matches_engine(rng):
    """brute-force oscillation levels equal the engine."""
    K = random_space(rng, 9)
    f = random_function(rng, K)
    for n in range(K.height + 2):
        require(oracles.osc_by_definition(f, n) == osc.osc_n(f, n).as_dict(), f"level {n}")


@prop("oracles")
def dcs_search_matches(rng):
    """subset search and partition search find the same minimum."""
    K = random_space(rng, 10)
    A = random_set(rng, K)
    m = oracles.exhaustive_dcs_search(A)
    require(m == min_dcs_count(A) == dcs_decompose(A).count, "minimum counts differ")


@prop("oracles")
def chain_search_matches(rng):
    """brute-force chain search matches the stabilized level and norm."""
    K = random_space(rng, 7)
    f = random_function(rng, K, distinct=3)
    require(oracles.eps_sequence_search(f) == norms.qd_norm(f), "qD sup differs")
    require(oracles.eps_sequence_search(f, True) == norms.d_norm(f), "D sup differs")
