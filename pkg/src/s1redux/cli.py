"""Command-line entry point; every command prints one UTF-8 JSON document.

Exit codes: 0 success, 1 bad input, 2 failed audit or check.  Negative weight
lists must be attached to the flag: ``--weights=-1,1``.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .errors import DegreeCapTooLow, S1ReduxError
from .invariants import invariant_monoid_basis, real_generators
from .homotopy.search import obstruction_search
from .nerve import check_simplicial_identities, groupoid_from_json, pi1_of_classifying_space
from .verdict import analyze, consistency_audit, main_theorem_verdict
from .weights import WeightVector, parse_weights

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _weights(text):
    return WeightVector(tuple(parse_weights(text)))


def _emit(doc):
    sys.stdout.write(json.dumps(doc, ensure_ascii=False) + "\n")


def cmd_analyze(args):
    w = _weights(args.weights)
    if args.json:
        return analyze(w, args.level), EXIT_OK
    v = main_theorem_verdict(w, args.level)
    return {"weights": w.to_json(), "level": args.level, **v.to_json()}, EXIT_OK


def cmd_hilbert(args):
    w = _weights(args.weights)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegreeCapTooLow)
        basis = invariant_monoid_basis(w, args.degree_cap)
    doc = basis.to_json()
    doc["weights"] = w.to_json()
    doc["degreeCap"] = basis.degree_cap
    doc["realGenerators"] = [g.name for g in real_generators(basis)]
    doc["warnings"] = [str(c.message) for c in caught]
    return doc, EXIT_OK


def cmd_homotopy(args):
    res = obstruction_search(args.l1, args.l2, args.k_max)
    return res.to_json(), EXIT_OK


def cmd_nerve(args):
    with open(args.input, encoding="utf-8") as fh:
        G = groupoid_from_json(json.load(fh))
    if args.check == "simplicial":
        report = check_simplicial_identities(G, args.n_max)
        return report.to_json(), (EXIT_OK if report.ok else EXIT_VIOLATION)
    out = []
    for comp in G.components():
        g = pi1_of_classifying_space(G, comp[0], allow_presentation=True)
        entry = {"basepoint": G.objects[comp[0]],
                 "objects": [G.objects[x] for x in comp], "pi1": str(g)}
        entry["detail"] = g.to_json()
        out.append(entry)
    return {"components": out}, EXIT_OK


def cmd_audit(args):
    report = consistency_audit(args.max_n, args.max_weight)
    return report.to_json(), (EXIT_OK if report.ok else EXIT_VIOLATION)


def build_parser():
    p = _Parser(prog="s1redux", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="verdict or full analysis bundle")
    a.add_argument("--weights", required=True, help="comma-separated, e.g. --weights=1,1,-2")
    a.add_argument("--level", type=float, default=0.0)
    a.add_argument("--json", action="store_true", help="emit the full analysis bundle")
    a.set_defaults(func=cmd_analyze)

    h = sub.add_parser("hilbert", help="minimal invariant monomials")
    h.add_argument("--weights", required=True)
    h.add_argument("--degree-cap", type=int, default=None)
    h.set_defaults(func=cmd_hilbert)

    m = sub.add_parser("homotopy", help="compact-model obstruction search")
    m.add_argument("--l1", type=int, required=True)
    m.add_argument("--l2", type=int, required=True)
    m.add_argument("--k-max", type=int, default=15)
    m.set_defaults(func=cmd_homotopy)

    n = sub.add_parser("nerve", help="groupoid nerve checks")
    n.add_argument("--input", required=True, help="groupoid or finite-action JSON file")
    n.add_argument("--check", choices=("pi1", "simplicial"), default="pi1")
    n.add_argument("--n-max", type=int, default=4)
    n.set_defaults(func=cmd_nerve)

    u = sub.add_parser("audit", help="exhaustive consistency audit")
    u.add_argument("--max-n", type=int, default=5)
    u.add_argument("--max-weight", type=int, default=4)
    u.set_defaults(func=cmd_audit)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        doc, code = args.func(args)
    except _UsageError as exc:
        _emit({"error": "usage", "message": str(exc)})
        return EXIT_INPUT
    except (S1ReduxError, ValueError, OSError, KeyError, TypeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INPUT
    _emit(doc)
    return code


if __name__ == "__main__":
    sys.exit(main())
