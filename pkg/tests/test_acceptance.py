"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line which pytest prints in a summary section.
Run this file directly (``python3 tests/test_acceptance.py``) to get the same
lines without pytest.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

import conftest  # noqa: E402
from dcalc.gallery import alternating_function, alternating_sets  # noqa: E402
from dcalc.generate import all_rooted_trees, random_function, random_space  # noqa: E402
from dcalc.norms import b14_report, cell_function, cell_norm, d_norm, lemma18_bound, qd_norm  # noqa: E402
from dcalc.oracles import exhaustive_dcs_search, osc_by_definition  # noqa: E402
from dcalc.oscillation import full_profile, lemma36_oracle, osc_n  # noqa: E402
from dcalc.set_calculus import boundary_tower, example_sets  # noqa: E402
from dcalc.space import NodeSet  # noqa: E402
from dcalc.values import NodeFunction  # noqa: E402

GOLDEN = HERE / "golden"


def record(label: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f"  ({detail})" if detail else "")
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_alternating_path_sets():
    start = time.perf_counter()
    problems = []
    for n in range(1, 7):
        _, failures = alternating_sets(n)
        problems += [f"n={n}: {m}" for m in failures]
        for kind, want in (("A", (n + 1) // 2), ("B", n // 2 + 1)):
            _, S = example_sets(n, kind)
            if exhaustive_dcs_search(S) != want:
                problems.append(f"n={n} {kind}: exhaustive count differs")
    took = time.perf_counter() - start
    record(
        "1 indicator norms n / n+1 and minimal DCS counts on paths, n=1..6",
        not problems and took < 5,
        f"{took:.2f}s" + (f"; {problems[0]}" if problems else ""),
    )


def _indicator_mismatches(space) -> tuple[int, int]:
    N = len(space)
    sets = bad = 0
    for a in range(1 << N):
        A = NodeSet(space, a)
        tower = boundary_tower(A)
        masks = [t.mask for t in tower.tower] + [0]
        levels = full_profile(NodeFunction.indicator(A)).per_level
        for m in range(1, tower.index + 1):
            lv = levels[m].vec
            for i in range(N):
                j = 0
                while j < m and masks[j + 1] >> i & 1:
                    j += 1
                bad += lv[i] != j
        sets += 1
    return sets, bad


def test_indicator_levels_follow_boundaries():
    start = time.perf_counter()
    sets = bad = 0
    for N in range(1, 11):
        for space in all_rooted_trees(N):
            s, b = _indicator_mismatches(space)
            sets, bad = sets + s, bad + b
    took = time.perf_counter() - start
    record(
        "2 indicator oscillation levels equal boundary depth, every set on every tree up to 10 nodes",
        bad == 0,
        f"{sets} sets, {bad} mismatches, {took:.0f}s",
    )


def test_alternating_function_bounds_attained():
    problems = []
    for n in range(1, 7):
        _, failures = alternating_function(n)
        problems += [f"n={n}: {m}" for m in failures]
        f = cell_function([(-1) ** j for j in range(n + 1)])
        first = max(osc_by_definition(f, 1).values())
        if first != 2:
            problems.append(f"n={n}: oracle first oscillation sup {first}")
        if (d_norm(f), qd_norm(f)) != (2 * n + 1, 2 * n):
            problems.append(f"n={n}: norms")
    record(
        "3 alternating +-1 on paths: norms 2n+1 / 2n, index bounds attained, first oscillation 2",
        not problems,
        problems[0] if problems else "n=1..6",
    )


def test_cell_closed_form():
    rng = random.Random(20261016)
    bad = []
    cases = 250
    for _ in range(cases):
        a = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(rng.randint(1, 7))]
        f = cell_function(a)
        cd, cqd = cell_norm(a)
        if not (cd == d_norm(f) == lemma18_bound(f) and cqd == qd_norm(f)):
            bad.append(a)
    record(
        "4 cell functions: closed form = engine = chain search",
        not bad,
        f"{cases} cells" + (f"; first failure {bad[0]}" if bad else ""),
    )


def test_chain_search_matches_recurrence():
    rng = random.Random(36)
    cases = 120
    bad = checked = 0
    for _ in range(cases):
        K = random_space(rng, max_nodes=8)
        f = random_function(rng, K)
        for n in range(K.height + 2):
            level = osc_n(f, n)
            by_def = osc_by_definition(f, n)
            for v in K.nodes:
                checked += 1
                bad += not (lemma36_oracle(f, n, v) == level[v] == by_def[v])
    record(
        "5 oscillation recurrence = threshold-chain search = definition, every node and level",
        bad == 0,
        f"{cases} functions, {checked} values, {bad} mismatches",
    )


def _check_all() -> tuple[int, str, float]:
    start = time.perf_counter()
    res = subprocess.run(
        [sys.executable, "-m", "dcalc", "check", "all", "--seed", "7", "--cases", "100"],
        capture_output=True, text=True,
    )
    return res.returncode, res.stdout + res.stderr, time.perf_counter() - start


def test_property_suite():
    code, out, took = _check_all()
    failed = [ln for ln in out.splitlines() if "FAIL" in ln]
    record(
        "6 full randomized property suite, 100 cases per property",
        code == 0 and took < 60,
        f"exit {code}, {took:.1f}s" + (f"; {failed[0].strip()}" if failed else ""),
    )


def test_sandwich_and_envelope_identity():
    rng = random.Random(7)
    cases = 300
    bad = []
    for _ in range(cases):
        f = random_function(rng, random_space(rng, max_nodes=10))
        try:
            rep = b14_report(f)
        except AssertionError as exc:
            bad.append(str(exc))
            continue
        if not (rep.b14_lower <= rep.d_norm <= rep.b14_upper and rep.fl_value == rep.d_norm):
            bad.append(repr(rep))
    record(
        "7 two-sided norm sandwich and envelope-free norm identity",
        not bad,
        f"{cases} random functions" + (f"; {bad[0]}" if bad else ""),
    )


GALLERY_RUNS = {
    "prop2.6_n4": ["prop2.6", "--n", "4"],
    "alternating_n3": ["alternating", "--n", "3"],
    "cells_0_1_0": ["cells", "--a", "0,1,0"],
    "b12-trend_n9": ["b12-trend", "--n", "9"],
}


def test_gallery_output_is_stable():
    diffs = []
    for name, args in GALLERY_RUNS.items():
        for ext, extra in (("txt", []), ("json", ["--json"])):
            cmd = [sys.executable, "-m", "dcalc", "gallery", *args, *extra]
            first = subprocess.run(cmd, capture_output=True, check=True).stdout
            second = subprocess.run(cmd, capture_output=True, check=True).stdout
            if first != second or first != (GOLDEN / f"{name}.{ext}").read_bytes():
                diffs.append(f"{name}.{ext}")
    record(
        "8 gallery output byte-identical across runs and equal to goldens",
        not diffs,
        ", ".join(diffs) or f"{2 * len(GALLERY_RUNS)} outputs",
    )


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
