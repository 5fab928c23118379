"""Command-line front end.

Exit status: 0 on success, 1 when a property or gallery check fails, 2 on
bad input (unreadable or malformed documents, usage errors, size guards).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import norms
from .documents import function_from_doc, load_json, set_from_doc, space_from_doc
from .errors import DcalcError
from .gallery import GALLERIES
from .oscillation import baire_index, full_profile, index_table
from .properties import SUITES, run_suite
from .set_calculus import boundary_tower, chi_norm, dcs_decompose
from .space import classify_set, derived_set
from .values import NodeFunction, fmt


class CommandFailed(Exception):
    """Carries a finished report whose checks did not all pass."""

    def __init__(self, report: dict, failures: list[str]):
        super().__init__("; ".join(failures))
        self.report = report
        self.failures = failures


# -- reports ---------------------------------------------------------------

def space_report(args) -> dict:
    space = space_from_doc(load_json(args.file))
    whole = space.everything()
    return {
        "nodes": len(space),
        "root": space.root,
        "height": space.height,
        "derived_sets": [
            {"level": k, "members": derived_set(whole, k).sorted()}
            for k in range(1, space.height + 1)
        ],
    }


def _decomposition(S) -> list[dict]:
    dec = dcs_decompose(S)
    return [
        {"part": W.sorted(), "closed": C.sorted(), "open": O.sorted()}
        for W, (C, O) in zip(dec.parts, dec.certificates)
    ]


def set_analyze(args) -> dict:
    S = set_from_doc(load_json(args.file))
    c = classify_set(S)
    t = boundary_tower(S)
    d, qd = chi_norm(S)
    parts = _decomposition(S)
    return {
        "members": S.sorted(),
        "closed": c.is_closed,
        "open": c.is_open,
        "dcs": c.is_dcs,
        "canonical_dcs": None if c.canonical_dcs is None else {
            "closure": c.canonical_dcs[0].sorted(),
            "boundary": c.canonical_dcs[1].sorted(),
        },
        "index": t.index,
        "meets_top": t.meets_top,
        "tower": [{"level": j, "members": L.sorted()} for j, L in enumerate(t.tower)],
        "d_norm": fmt(d),
        "qd_norm": fmt(qd),
        "part_count": len(parts),
        "parts": parts,
    }


def set_decompose(args) -> dict:
    S = set_from_doc(load_json(args.file))
    parts = _decomposition(S)
    return {"members": S.sorted(), "part_count": len(parts), "parts": parts}


def _level_rows(f: NodeFunction) -> list[dict]:
    prof = full_profile(f)
    rows = []
    for v, x in f.items():
        row = {"node": v, "value": fmt(x)}
        for k, lv in enumerate(prof.per_level[1:], start=1):
            row[f"osc_{k}"] = fmt(lv[v])
        rows.append(row)
    return rows


def fn_analyze(args) -> dict:
    f = function_from_doc(load_json(args.file))
    out: dict[str, Any] = {"domain": f.space.display_order(), "real": f.is_real}
    prof = full_profile(f)
    out["d_index"] = prof.d_index
    if f.is_real:
        out["norms"] = norms.b14_report(f).as_dict()
        out["baire_index"] = baire_index(f)
        out["index_table"] = [
            {"eps": fmt(e), "index": i, "eps_times_index": fmt(e * i)}
            for e, i in index_table(f)
        ]
    else:
        b = norms.d_norm_bounds(f)
        out["d_norm_bounds"] = {"lower": repr(b.lower), "upper": repr(b.upper), "flagged": b.flagged}
        out["qd_norm"] = fmt(norms.qd_norm(f))
    out["levels"] = _level_rows(f)
    return out


def fn_decompose(args) -> dict:
    f = function_from_doc(load_json(args.file))
    u, v = norms.lsc_decomposition(f)
    return {
        "d_norm": fmt(norms.d_norm(f)),
        "rows": [
            {"node": x, "value": fmt(f[x]), "u": fmt(u[x]), "v": fmt(v[x])}
            for x in f.space.display_order()
        ],
    }


def _parse_values(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def gallery(args) -> dict:
    build = GALLERIES[args.name]
    if args.name == "cells":
        report, failures = build(_parse_values(args.a))
    else:
        report, failures = build(args.n)
    if failures:
        raise CommandFailed(report, failures)
    return report


def check(args) -> dict:
    if args.cases < 1:
        raise DcalcError("--cases must be at least 1")
    results = run_suite(args.suite, seed=args.seed, cases=args.cases)
    rows = [
        {
            "status": "PASS" if r.passed else "FAIL",
            "suite": r.suite,
            "property": r.name,
            "cases": r.cases,
            "failure": r.failure or "",
        }
        for r in results
    ]
    failed = [r for r in rows if r["status"] == "FAIL"]
    report = {
        "suite": args.suite,
        "seed": args.seed,
        "passed": len(rows) - len(failed),
        "failed": len(failed),
        "results": rows,
    }
    if failed:
        raise CommandFailed(report, [f"{r['suite']}.{r['property']}" for r in failed])
    return report


# -- rendering -------------------------------------------------------------

def _cell(x: Any) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if x is None:
        return "-"
    if isinstance(x, list):
        if x and isinstance(x[0], list):
            return " ".join("{" + ",".join(p) + "}" for p in x)
        return "{" + ",".join(str(p) for p in x) + "}"
    if isinstance(x, dict):
        return " ".join(f"{k}={_cell(v)}" for k, v in x.items())
    return str(x)


def _table(rows: list[dict]) -> list[str]:
    cols = list(rows[0])
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    line = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    return [line(cols)] + [line(r) for r in cells]


def render_text(report: dict) -> str:
    lines = []
    for key, val in report.items():
        if isinstance(val, list) and val and all(isinstance(v, dict) for v in val):
            lines.append(f"{key}:")
            lines.extend("  " + t for t in _table(val))
        elif isinstance(val, dict) and key == "norms":
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {_cell(v)}" for k, v in val.items())
        else:
            lines.append(f"{key}: {_cell(val)}")
    return "\n".join(lines) + "\n"


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2) + "\n"
    return render_text(report)


# -- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    parser = argparse.ArgumentParser(
        prog="dcalc",
        description="Exact oscillation indices and D-norms on finite tree spaces.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    sp = top.add_parser("space", help="space documents").add_subparsers(dest="action", required=True)
    p = sp.add_parser("validate", parents=[common], help="check a space and list its derived sets")
    p.add_argument("file", help="JSON space document, or - for stdin")
    p.set_defaults(run=space_report)

    st = top.add_parser("set", help="set documents").add_subparsers(dest="action", required=True)
    p = st.add_parser("analyze", parents=[common], help="boundary tower, index, norms, parts")
    p.add_argument("file")
    p.set_defaults(run=set_analyze)
    p = st.add_parser("decompose", parents=[common], help="fewest disjoint DCS parts")
    p.add_argument("file")
    p.set_defaults(run=set_decompose)

    fn = top.add_parser("fn", help="function documents").add_subparsers(dest="action", required=True)
    p = fn.add_parser("analyze", parents=[common], help="oscillation levels, norms, index table")
    p.add_argument("file")
    p.set_defaults(run=fn_analyze)
    p = fn.add_parser("decompose", parents=[common], help="split f = u - v into LSC parts")
    p.add_argument("file")
    p.set_defaults(run=fn_decompose)

    p = top.add_parser("gallery", parents=[common], help="worked examples with checks")
    p.add_argument("name", choices=sorted(GALLERIES))
    p.add_argument("--n", type=int, default=3, help="size parameter (default 3)")
    p.add_argument("--a", default="0,1,0", help="comma-separated cell values")
    p.set_defaults(run=gallery)

    p = top.add_parser("check", parents=[common], help="run the randomized invariant suite")
    p.add_argument("suite", choices=("all",) + SUITES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.set_defaults(run=check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.run(args)
    except CommandFailed as exc:
        sys.stdout.write(render(exc.report, args.json))
        for msg in exc.failures:
            print(f"failed: {msg}", file=sys.stderr)
        return 1
    except DcalcError as exc:
        print(f"dcalc: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, args.json))
    return 0


if __name__ == "__main__":
    sys.exit(main())
