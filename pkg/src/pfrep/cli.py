"""Command-line interface.

Exit codes: 0 on success, a passing check or a representable verdict; 1 on
bad input or usage; 2 when a check fails or no representation was found;
3 when the signature has no supported characterisation.  Errors are
written to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import build, decide, formats
from .core import Signature, necessary_laws, validate_algebra
from .errors import (CapacityError, ConstructionError, MalformedInputError, NotARepresentationError,
                     NotRepresentableError, PfrepError, UnsupportedSignatureError)
from .network import from_concrete, is_representation
from .pfun import ConcreteAlgebra, abstract

EXIT_OK, EXIT_INPUT, EXIT_FAIL, EXIT_UNSUPPORTED = 0, 1, 2, 3

COMMANDS = ("validate", "abstract", "construct", "check", "decide", "bound", "realisable",
            "future", "demo")


class UsageError(MalformedInputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandInvocation:
    command: str
    inputs: list[str]
    options: dict = field(default_factory=dict)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pfrep", description="Algebras of partial functions and their representations.")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads (accepted; the search currently runs on one)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check algebra tables and screen necessary laws")
    s.add_argument("algebra")

    s = sub.add_parser("abstract", help="operation tables of a concrete algebra")
    s.add_argument("representation")
    s.add_argument("--signature", required=True, help="comma-separated operation symbols")
    s.add_argument("--enable-unipoint", action="store_true")
    s.add_argument("-o", "--output")
    s.add_argument("--network", help="also write the network of the representation here")

    s = sub.add_parser("construct", help="build a finite representation")
    s.add_argument("algebra")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--algebraic", action="store_true", help="read the profile off the tables")
    g.add_argument("--profile", help="profile file with the realisable elements")
    s.add_argument("-m", "--multiplicity", type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--trace")
    s.add_argument("--dot")

    s = sub.add_parser("check", help="check that a network represents an algebra")
    s.add_argument("network")
    s.add_argument("algebra")
    s.add_argument("--dot")

    s = sub.add_parser("decide", help="decide representability")
    s.add_argument("algebra")
    s.add_argument("--max-base", type=int, default=4)
    s.add_argument("--method", choices=("brute", "construction"), default="brute")
    s.add_argument("-o", "--output")

    s = sub.add_parser("bound", help="size bound for the constructed base")
    s.add_argument("algebra")
    s.add_argument("--profile")
    s.add_argument("--depth", type=int)

    s = sub.add_parser("realisable", help="realisable elements, classes and depths")
    s.add_argument("algebra")
    s.add_argument("--from-network")

    s = sub.add_parser("future", help="canonical future of a domain element")
    s.add_argument("algebra")
    s.add_argument("--alpha", required=True)
    s.add_argument("-o", "--output")
    s.add_argument("--dot")

    s = sub.add_parser("demo", help="run a gallery example")
    s.add_argument("example", choices=("group", "counterexample"))
    s.add_argument("--group", choices=sorted(decide.GROUPS), default="Z2")
    s.add_argument("--max-base", type=int, default=4)
    return p


_FILE_ARGS = {"validate": ["algebra"], "abstract": ["representation"],
              "construct": ["algebra", "profile"], "check": ["network", "algebra"],
              "decide": ["algebra"], "bound": ["algebra", "profile"],
              "realisable": ["algebra", "from_network"], "future": ["algebra"], "demo": []}


def parse_args(argv: list[str]) -> CommandInvocation:
    ns = vars(_parser().parse_args(argv))
    command = ns.pop("command")
    inputs = []
    for key in _FILE_ARGS[command]:
        path = ns.get(key)
        if path is None:
            continue
        if not os.path.isfile(path):
            raise UsageError(f"no such file: {path}")
        inputs.append(path)
    return CommandInvocation(command, inputs, ns)


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_algebra(path):
    return formats.algebra_from_json(formats.read_json(path, "algebra"))


def _profile(A, opts):
    if opts.get("profile"):
        return formats.profile_from_json(formats.read_json(opts["profile"], "profile"), A)
    return build.realisables_algebraic(A)


def _cmd_validate(o):
    A = _load_algebra(o["algebra"])
    report = validate_algebra(A)
    laws = necessary_laws(A) if report.passed else None
    out = {"valid": report.passed, "checks": report.to_dict(A)}
    if laws is not None:
        out["necessaryLaws"] = laws.to_dict(A)
    _write(None, formats.dump_json(out))
    return EXIT_OK if report.passed and laws.passed else EXIT_FAIL


def _cmd_abstract(o):
    sig = Signature(o["signature"].split(","), enable_unipoint=o["enable_unipoint"])
    rep, names = formats.representation_from_json(formats.read_json(o["representation"]))
    A, rep = abstract(ConcreteAlgebra(rep.base, rep.theta, sig, names))
    _write(o["output"], formats.dump_algebra(A))
    if o.get("network"):
        _write(o["network"], formats.dump_network(from_concrete(A, rep)))
    return EXIT_OK


def _cmd_construct(o):
    A = _load_algebra(o["algebra"])
    profile = _profile(A, o)
    trace = build.construct(A, profile, m=o["multiplicity"])
    _write(o["output"], formats.dump_network(trace.network))
    if o.get("trace"):
        _write(o["trace"], formats.dump_trace(trace))
    if o.get("dot"):
        _write(o["dot"], formats.to_dot(trace.network, A))
    return EXIT_OK


def _cmd_check(o):
    A = _load_algebra(o["algebra"])
    N = formats.network_from_json(formats.read_json(o["network"], "network"), A)
    verdict = is_representation(N, A)
    _write(None, formats.dump_json(verdict.to_dict(A)))
    if o.get("dot"):
        _write(o["dot"], formats.to_dot(N, A))
    return EXIT_OK if verdict.passed else EXIT_FAIL


def _cmd_decide(o):
    A = _load_algebra(o["algebra"])
    if o["method"] == "brute":
        d = decide.brute_force_decide(A, k_max=o["max_base"])
    else:
        d = decide.decide_via_construction(A)
    _write(o["output"], formats.dump_decision(d, A))
    return EXIT_OK if d.representable else EXIT_FAIL


def _cmd_bound(o):
    A = _load_algebra(o["algebra"])
    depth = o["depth"]
    if depth is None:
        depth = max(_profile(A, o).max_depth, 0)
    bound = build.size_bound(A.size, depth)
    _write(None, formats.dump_json({"elements": A.size, "maxDepth": depth, "bound": bound,
                                    "digits": len(str(bound))}))
    return EXIT_OK


def _cmd_realisable(o):
    A = _load_algebra(o["algebra"])
    if o.get("from_network"):
        N = formats.network_from_json(formats.read_json(o["from_network"], "network"), A)
        profile = build.realisables_from_representation(N, A)
    else:
        profile = build.realisables_algebraic(A)
    _write(None, formats.dump_json(build.profile_report(A, profile)))
    return EXIT_OK


def _cmd_future(o):
    A = _load_algebra(o["algebra"])
    F = build.canonical_future(A, A.index(o["alpha"]))
    _write(o["output"], formats.dump_network(F))
    if o.get("dot"):
        _write(o["dot"], formats.to_dot(F, A, name=f"future {o['alpha']}"))
    return EXIT_OK


def _cmd_demo(o):
    if o["example"] == "group":
        table, names = decide.GROUPS[o["group"]]()
        A, rep = decide.group_algebra(table, names)
        cayley = is_representation(from_concrete(A, rep), A)
        trace = build.construct(A, build.realisables_algebraic(A))
        built = is_representation(trace.network, A)
        out = {"group": o["group"], "elements": A.size, "cayleyPasses": cayley.passed,
               "constructedVertices": len(trace.network), "constructedPasses": built.passed,
               "algebra": formats.algebra_to_json(A)}
        _write(None, formats.dump_json(out))
        return EXIT_OK if cayley.passed and built.passed else EXIT_FAIL
    A, argument = decide.counterexample_F()
    certified = {"nodes": 0, "broken": 0}

    def visitor(k, theta, status):
        certified["nodes"] += 1
        certified["broken"] += argument.check_candidate(theta)["implication_broken"]

    d = decide.brute_force_decide(A, k_max=o["max_base"], visitor=visitor)
    out = {"decision": formats.decision_to_json(d, A), "cardinalityArgument": argument.report(),
           "nodesCertified": certified["nodes"], "implicationFailures": certified["broken"]}
    _write(None, formats.dump_json(out))
    return EXIT_OK if d.representable else EXIT_FAIL


_HANDLERS = {"validate": _cmd_validate, "abstract": _cmd_abstract, "construct": _cmd_construct,
             "check": _cmd_check, "decide": _cmd_decide, "bound": _cmd_bound,
             "realisable": _cmd_realisable, "future": _cmd_future, "demo": _cmd_demo}


def _error(exc: Exception, code: int) -> int:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    position = getattr(exc, "position", None)
    if position is not None:
        payload["position"] = position
    sys.stderr.write(json.dumps(payload, ensure_ascii=False) + "\n")
    return code


def run(inv: CommandInvocation) -> int:
    try:
        return _HANDLERS[inv.command](inv.options)
    except UnsupportedSignatureError as exc:
        return _error(exc, EXIT_UNSUPPORTED)
    except (NotRepresentableError, ConstructionError, NotARepresentationError) as exc:
        return _error(exc, EXIT_FAIL)
    except (MalformedInputError, CapacityError) as exc:
        return _error(exc, EXIT_INPUT)
    except PfrepError as exc:
        return _error(exc, EXIT_INPUT)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        inv = parse_args(argv)
    except MalformedInputError as exc:
        return _error(exc, EXIT_INPUT)
    return run(inv)


if __name__ == "__main__":
    sys.exit(main())
