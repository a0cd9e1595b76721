"""JSON and DOT serialisation.

Every ``dump_*`` function returns a canonical string (two-space indent,
fixed key order, trailing newline), so re-parsing and dumping again gives
the same bytes.  DOT output is write-only.
"""

from __future__ import annotations

import json
from typing import Any

from .build import ConstructionTrace, RealisabilityProfile, make_profile
from .core import ARITY, FiniteAlgebra, Signature, canonical_symbol
from .decide import Decision
from .errors import MalformedInputError
from .network import Network
from .pfun import Base, PartialFunction, Representation


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str, what: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{what} is not valid JSON: {exc.msg}",
                                  f"line {exc.lineno} column {exc.colno}") from None


def read_json(path: str, what: str | None = None) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_json(text, what or path)


def _require(obj, key, kind, where=""):
    if not isinstance(obj, dict):
        raise MalformedInputError("expected a JSON object", where or None)
    if key not in obj:
        raise MalformedInputError(f"missing key {key!r}", where or None)
    value = obj[key]
    if not isinstance(value, kind):
        raise MalformedInputError(f"{key!r} has the wrong type", f"{where}{key}")
    return value


# --- algebras ---------------------------------------------------------------

def algebra_from_json(obj: Any) -> FiniteAlgebra:
    symbols = _require(obj, "signature", list)
    carrier = _require(obj, "carrier", list)
    tables = _require(obj, "tables", dict)
    for i, s in enumerate(symbols):
        if not isinstance(s, str):
            raise MalformedInputError("symbol must be a string", f"signature[{i}]")
    for i, c in enumerate(carrier):
        if not isinstance(c, str):
            raise MalformedInputError("element name must be a string", f"carrier[{i}]")
    sig = Signature(symbols, enable_unipoint=bool(obj.get("enableUnipoint", False)))
    canon = {}
    for key, table in tables.items():
        sym = canonical_symbol(key)
        if sym in canon:
            raise MalformedInputError(f"two tables for {sym}", f"tables.{key}")
        canon[sym] = table
    return FiniteAlgebra(carrier, sig, canon)


def algebra_to_json(A: FiniteAlgebra) -> dict:
    tables = {}
    for sym in A.signature:
        t = A.tables[sym]
        if ARITY[sym] == 0:
            tables[sym] = t
        elif ARITY[sym] == 1:
            tables[sym] = list(t)
        else:
            tables[sym] = [list(row) for row in t]
    out = {"signature": list(A.signature.symbols), "carrier": list(A.carrier), "tables": tables}
    if A.signature.enable_unipoint:
        out["enableUnipoint"] = True
    return out


def load_algebra(text: str) -> FiniteAlgebra:
    return algebra_from_json(parse_json(text, "algebra"))


def dump_algebra(A: FiniteAlgebra) -> str:
    return _dumps(algebra_to_json(A))


# --- representations --------------------------------------------------------

def representation_from_json(obj: Any, names: list[str] | None = None
                             ) -> tuple[Representation, list[str]]:
    """Parse a representation file.

    Returns the representation and the element names in file order; with
    ``names`` given the functions are ordered to match it instead.
    """
    points = _require(obj, "base", list)
    functions = _require(obj, "functions", dict)
    base = Base(points)
    index = {p: i for i, p in enumerate(base.points)}
    parsed = {}
    for name, pairs in functions.items():
        where = f"functions.{name}"
        if not isinstance(pairs, list):
            raise MalformedInputError("expected a list of pairs", where)
        seen = {}
        for j, pair in enumerate(pairs):
            pos = f"{where}[{j}]"
            if not (isinstance(pair, list) and len(pair) == 2):
                raise MalformedInputError("a pair must be a two-element list", pos)
            x, y = (str(v) for v in pair)
            for v in (x, y):
                if v not in index:
                    raise MalformedInputError(f"point {v!r} is not in the base", pos)
            if x in seen and seen[x] != y:
                raise MalformedInputError(f"not functional: {x} ↦ {seen[x]} and {x} ↦ {y}", pos)
            seen[x] = y
        parsed[name] = PartialFunction((index[x], index[y]) for x, y in seen.items())
    order = list(functions) if names is None else list(names)
    missing = [n for n in order if n not in parsed]
    if missing:
        raise MalformedInputError(f"no function given for {missing}", "functions")
    return Representation(base, [parsed[n] for n in order]), order


def representation_to_json(rep: Representation, names: list[str]) -> dict:
    pts = rep.base.points
    return {"base": list(pts),
            "functions": {n: [[pts[x], pts[y]] for x, y in f.pairs]
                          for n, f in zip(names, rep.theta)}}


def dump_representation(rep: Representation, names: list[str]) -> str:
    return _dumps(representation_to_json(rep, names))


# --- networks ---------------------------------------------------------------

def network_from_json(obj: Any, A: FiniteAlgebra | None = None) -> Network:
    vertices = _require(obj, "vertices", list)
    edges_raw = _require(obj, "edges", list)
    n = len(vertices)
    edges = {}
    for i, e in enumerate(edges_raw):
        pos = f"edges[{i}]"
        if not isinstance(e, dict):
            raise MalformedInputError("an edge must be an object", pos)
        vals = []
        for key in ("from", "to", "label"):
            v = e.get(key)
            if isinstance(v, bool) or not isinstance(v, int):
                if key == "label" and isinstance(v, str) and A is not None:
                    v = A.index(v)
                else:
                    raise MalformedInputError(f"{key!r} must be an integer", f"{pos}.{key}")
            vals.append(v)
        x, y, lab = vals
        for key, v in (("from", x), ("to", y)):
            if not 0 <= v < n:
                raise MalformedInputError(f"vertex {v} out of range", f"{pos}.{key}")
        if A is not None and not 0 <= lab < A.size:
            raise MalformedInputError(f"label {lab} out of range", f"{pos}.label")
        if (x, y) in edges:
            raise MalformedInputError(f"second edge from {x} to {y}", pos)
        edges[(x, y)] = lab
    for v in range(n):
        if (v, v) not in edges:
            raise MalformedInputError(f"vertex {vertices[v]!r} has no reflexive edge",
                                      f"vertices[{v}]")
    return Network(vertices, edges)


def network_to_json(N: Network) -> dict:
    return {"vertices": [str(v) for v in N.vertices],
            "edges": [{"from": x, "to": y, "label": lab} for (x, y), lab in sorted(N.edges.items())]}


def load_network(text: str, A: FiniteAlgebra | None = None) -> Network:
    return network_from_json(parse_json(text, "network"), A)


def dump_network(N: Network) -> str:
    return _dumps(network_to_json(N))


# --- traces, profiles, decisions --------------------------------------------

def trace_to_json(trace: ConstructionTrace) -> dict:
    out = trace.to_dict()
    out["network"] = network_to_json(trace.network)
    return out


def dump_trace(trace: ConstructionTrace) -> str:
    return _dumps(trace_to_json(trace))


def profile_from_json(obj: Any, A: FiniteAlgebra) -> RealisabilityProfile:
    names = _require(obj, "realisables", list)
    return make_profile(A, [A.index(str(n)) for n in names])


def profile_to_json(A: FiniteAlgebra, profile: RealisabilityProfile) -> dict:
    return {"realisables": [A.name(a) for a in profile.realisables]}


def _stat(v):
    if isinstance(v, float):
        return round(v, 6)
    if isinstance(v, dict):
        return {str(k): _stat(x) for k, x in v.items()}
    return v


def decision_to_json(decision: Decision, A: FiniteAlgebra) -> dict:
    out = {"outcome": decision.outcome, "k": decision.k,
           "witness": (representation_to_json(decision.witness, list(A.carrier))
                       if decision.witness is not None else None),
           "stats": {k: _stat(v) for k, v in decision.stats.items()}}
    if decision.reason:
        out["reason"] = decision.reason
    return out


def dump_decision(decision: Decision, A: FiniteAlgebra) -> str:
    return _dumps(decision_to_json(decision, A))


def dump_json(obj: Any) -> str:
    return _dumps(obj)


# --- DOT --------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(N: Network, A: FiniteAlgebra | None = None, name: str = "network") -> str:
    """Graphviz text; reflexive labels annotate vertices, other labels annotate edges."""
    label = (lambda a: A.name(a)) if A is not None else str
    lines = [f"digraph {_quote(name)} {{"]
    for v, vid in enumerate(N.vertices):
        attrs = f"label={_quote(f'{vid} [{label(N.reflexive_label(v))}]')}"
        if N.root == v:
            attrs += ", peripheries=2"
        lines.append(f"  n{v} [{attrs}];")
    for (x, y), lab in sorted(N.edges.items()):
        if x != y:
            lines.append(f"  n{x} -> n{y} [label={_quote(label(lab))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
