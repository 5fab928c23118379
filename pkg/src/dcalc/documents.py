"""JSON documents for spaces, sets and functions."""

from __future__ import annotations

import json
import sys
from typing import Any

from .errors import DcalcError, InputError
from .space import NodeSet, Space, TreeSpace, build_space, subspace
from .values import NodeFunction, fmt


def load_json(path: str) -> Any:
    """Read a JSON document from a file path, or stdin for ``-``."""
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno}") from None


def _field(doc: Any, key: str, kind: type, what: str):
    if not isinstance(doc, dict):
        raise InputError(f"{what} document must be a JSON object")
    if key not in doc:
        raise InputError(f"{what} document lacks {key!r}")
    val = doc[key]
    if not isinstance(val, kind):
        raise InputError(f"{what} field {key!r} has the wrong type")
    return val


def space_from_doc(doc: Any) -> TreeSpace:
    nodes = _field(doc, "nodes", list, "space")
    root = _field(doc, "root", str, "space")
    edges = _field(doc, "edges", list, "space")
    if not all(isinstance(v, str) for v in nodes):
        raise InputError("node ids must be strings")
    if not all(isinstance(e, list) for e in edges):
        raise InputError("edges must be [parent, child] lists")
    try:
        return build_space(edges, nodes=nodes, root=root)
    except DcalcError as exc:
        raise InputError(str(exc)) from None


def space_to_doc(space: Space) -> dict:
    order = space.display_order()
    return {
        "nodes": order,
        "root": space.root,
        "edges": [[space.parent(v), v] for v in order if space.parent(v) is not None],
    }


def _members(space: Space, ids: Any, what: str) -> NodeSet:
    if not isinstance(ids, list) or not all(isinstance(v, str) for v in ids):
        raise InputError(f"{what} must be a list of node ids")
    unknown = [v for v in ids if v not in space.index]
    if unknown:
        raise InputError(f"{what} mentions unknown node {unknown[0]!r}")
    return space.set(ids)


def set_from_doc(doc: Any) -> NodeSet:
    space = space_from_doc(_field(doc, "space", dict, "set"))
    return _members(space, _field(doc, "members", list, "set"), "members")


def set_to_doc(S: NodeSet) -> dict:
    return {"space": space_to_doc(S.space), "members": S.sorted()}


def function_from_doc(doc: Any) -> NodeFunction:
    """Read a function; with a ``domain`` it lives on that subspace."""
    space = space_from_doc(_field(doc, "space", dict, "function"))
    values = _field(doc, "values", dict, "function")
    if "domain" in doc:
        dom = _members(space, doc["domain"], "domain")
        keep = dom.members
        values = {k: v for k, v in values.items() if k in keep or k not in space.index}
        target = subspace(dom)
    else:
        target = space
    try:
        return NodeFunction(target, values)
    except DcalcError as exc:
        raise InputError(str(exc)) from None


def function_to_doc(f: NodeFunction) -> dict:
    return {"values": {k: fmt(x) for k, x in f.items()}}
