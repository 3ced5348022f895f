"""Command-line interface.

One executable, one subcommand per area: compose, phi, hopf, classify,
theta, closure, enumerate, sequences, verify, paper-examples.  Input posets
are JSON documents ``{"elements": [...], "relations": [[u, v], ...]}`` whose
relations are generators (the closure is taken on load); every poset printed
by the tool uses the same format with sorted elements and sorted cover pairs,
so outputs re-parse losslessly.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
Domain errors are reported as one JSON object on stderr.  The only
environment variable honoured is POSETOPS_SIZE_LIMIT, which overrides the
default cap on canonical-form computations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import canon
from .canon import SizeLimitExceeded, canonicalize
from .core import Poset, PosetError, connected_components, from_doc, hasse_covers
from .enumeration import all_isoclasses, all_posets, count_table, pinned_sequences
from .hopf import (
    ClassSum,
    class_info,
    cls_of,
    coproduct_delta,
    coproduct_delta_star,
    product,
    verify_bialgebra,
    verify_infinitesimal,
    verify_nap,
)
from .operad import (
    FormalSum,
    compose,
    verify_axioms,
    verify_equivariance,
    verify_involution,
    verify_mixed,
)
from .species import phi, phi_inverse, verify_phi
from .structure import (
    br_split,
    closure_nabla,
    closure_triple,
    closure_wn,
    is_nabla_compatible,
    is_wn,
    theta,
    theta_inverse,
    verify_graft_split,
    verify_suboperad_relations,
    wn_factorize,
)
from .worked import run_worked_examples

FAMILIES = ("circ", "bullet", "down", "up")
HOPF_OPS = ("m", "down", "star", "uptri", "downtri")
VERIFY_LAWS = (
    "axioms",
    "mixed",
    "involution",
    "equivariance",
    "phi",
    "bialgebra",
    "infinitesimal",
    "nap",
    "relations",
    "split",
    "examples",
)


def _read_poset(path: str) -> Poset:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise PosetError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PosetError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict) or "elements" not in doc or "relations" not in doc:
        raise PosetError(f"{path}: expected an object with elements and relations")
    return from_doc(doc)


def _print_json(doc) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _poset_lines(p: Poset) -> list[str]:
    lines = ["elements: " + " ".join(p.elements)]
    covers = hasse_covers(p)
    lines.append("covers:   " + (", ".join(f"{u} < {v}" for u, v in covers) or "(none)"))
    return lines


def _emit_poset(p: Poset, fmt: str) -> None:
    if fmt == "table":
        print("\n".join(_poset_lines(p)))
    else:
        _print_json(p.to_doc())


def _emit_weighted(rows: list[tuple[Poset, int]], fmt: str) -> None:
    if fmt == "table":
        for p, c in rows:
            print(f"coefficient {c}")
            print("\n".join("  " + line for line in _poset_lines(p)))
    else:
        _print_json([{"poset": p.to_doc(), "coefficient": c} for p, c in rows])


def _class_doc(key: str) -> dict:
    info = class_info(key)
    return {
        "key": key,
        "size": info.size,
        "automorphisms": info.aut_count,
        "representative": info.representative.to_doc(),
    }


def _cmd_compose(args) -> int:
    outer = _read_poset(args.outer)
    inner = _read_poset(args.inner)
    result = compose(args.family, outer, args.at, inner)
    if isinstance(result, FormalSum):
        rows = []
        for p, c in result.posets():
            rows.extend([p.to_doc()] * c)
        if args.format == "table":
            for p, c in result.posets():
                for _ in range(c):
                    print("\n".join(_poset_lines(p)))
                    print()
        else:
            _print_json(rows)
    else:
        _emit_poset(result, args.format)
    return 0


def _cmd_phi(args) -> int:
    p = _read_poset(args.poset)
    value = phi_inverse(p) if args.inverse else phi(p)
    _emit_weighted(value.posets(), args.format)
    return 0


def _cmd_hopf_prod(args) -> int:
    x = ClassSum.of(_read_poset(args.a))
    y = ClassSum.of(_read_poset(args.b))
    value = product(args.op, x, y)
    rows = [
        {"poset": _class_doc(k)["representative"], "coefficient": c, "class": k}
        for k, c in value.items()
    ]
    if args.format == "table":
        for row in rows:
            print(f"coefficient {row['coefficient']}  class {row['class']}")
            print("\n".join("  " + line for line in _poset_lines(from_doc(row["poset"]))))
    else:
        _print_json(rows)
    return 0


def _cmd_hopf_coprod(args) -> int:
    x = ClassSum.of(_read_poset(args.a))
    cop = coproduct_delta if args.op == "delta" else coproduct_delta_star
    value = cop(x)
    rows = [
        {
            "left": _class_doc(k1)["representative"],
            "right": _class_doc(k2)["representative"],
            "coefficient": c,
        }
        for (k1, k2), c in value.items()
    ]
    if args.format == "table":
        for row in rows:
            print(f"coefficient {row['coefficient']}")
            print("  left:")
            print("\n".join("    " + s for s in _poset_lines(from_doc(row["left"]))))
            print("  right:")
            print("\n".join("    " + s for s in _poset_lines(from_doc(row["right"]))))
    else:
        _print_json(rows)
    return 0


def _cmd_classify(args) -> int:
    p = _read_poset(args.poset)
    if len(p) == 0:
        raise PosetError("cannot classify the empty poset")
    doc: dict = {
        "size": len(p),
        "connected": len(connected_components(p)) == 1,
        "wn": is_wn(p),
        "nabla_compatible": is_nabla_compatible(p),
    }
    try:
        info = canonicalize(p)
        doc["key"] = info.key
        doc["automorphisms"] = info.aut_count
    except SizeLimitExceeded:
        doc["key"] = None
        doc["automorphisms"] = None
    if doc["wn"]:
        doc["wn_factors"] = [f.to_doc() for f in wn_factorize(p).factors]
    else:
        doc["wn_factors"] = None
    b, r = br_split(p)
    doc["br"] = {"b": b.to_doc(), "r": r.to_doc()}
    if args.format == "table":
        for field in ("size", "connected", "wn", "nabla_compatible", "key", "automorphisms"):
            print(f"{field}: {doc[field]}")
    else:
        _print_json(doc)
    return 0


def _cmd_theta(args) -> int:
    p = _read_poset(args.poset)
    result = theta_inverse(p) if args.inverse else theta(p)
    _emit_poset(result, args.format)
    return 0


def _cmd_closure(args) -> int:
    fn = {"wn": closure_wn, "nabla": closure_nabla, "triple": closure_triple}[args.family]
    classes = fn(args.max_n)
    rows = [
        {
            "key": c.key,
            "size": c.size,
            "automorphisms": c.aut_count,
            "representative": c.representative.to_doc(),
        }
        for c in classes
    ]
    if args.format == "table":
        for row in rows:
            print(f"size {row['size']}  automorphisms {row['automorphisms']}  key {row['key']}")
    else:
        _print_json(rows)
    return 0


def _cmd_enumerate(args) -> int:
    predicates = []
    if args.connected:
        predicates.append(lambda p: len(connected_components(p)) == 1)
    if args.filter == "wn":
        predicates.append(is_wn)
    elif args.filter == "nabla":
        predicates.append(is_nabla_compatible)

    def keep(p: Poset) -> bool:
        return all(pred(p) for pred in predicates)

    if args.iso:
        for c in all_isoclasses(args.n):
            if keep(c.representative):
                doc = c.representative.to_doc()
                doc["key"] = c.key
                doc["automorphisms"] = c.aut_count
                print(json.dumps(doc, sort_keys=True))
    else:
        for p in all_posets(args.n):
            if keep(p):
                print(json.dumps(p.to_doc(), sort_keys=True))
    return 0


def _cmd_sequences(args) -> int:
    table = count_table(args.max_n)
    if args.table == "md":
        print(table.render_markdown())
        return 0
    if args.table == "csv":
        print(table.render_csv())
        return 0
    pinned = pinned_sequences()
    rows = table.to_doc()
    k = len(rows)

    def prefix(name: str) -> list[int]:
        return pinned[name]["values"][:k]

    agreement = {
        "labeled_posets": [r["labeled"] for r in rows] == prefix("labeled_posets"),
        "poset_isoclasses": [r["isoclasses"] for r in rows] == prefix("poset_isoclasses"),
        "connected_isoclasses": [r["connected_isoclasses"] for r in rows]
        == prefix("connected_isoclasses"),
        "A048172": [r["wn_labeled"] for r in rows] == prefix("A048172"),
        "A003430": [r["wn_isoclasses"] for r in rows] == prefix("A003430"),
    }
    _print_json({"rows": rows, "pinned_agreement": agreement})
    return 0


def _verify_reports(law: str, args) -> list:
    if law == "axioms":
        families = [args.family] if args.family else list(FAMILIES)
        return [verify_axioms(f, args.max_n) for f in families]
    if law == "mixed":
        return [verify_mixed(args.max_n, min(2, args.max_n))]
    if law == "involution":
        return [verify_involution(args.max_n)]
    if law == "equivariance":
        return [verify_equivariance(args.max_n)]
    if law == "phi":
        return [verify_phi(args.max_n, args.max_n + 1)]
    if law == "bialgebra":
        return [verify_bialgebra(args.max_n)]
    if law == "infinitesimal":
        return [verify_infinitesimal(args.max_n)]
    if law == "nap":
        return [verify_nap(args.max_n)]
    if law == "relations":
        return [verify_suboperad_relations()]
    if law == "split":
        return [verify_graft_split(args.max_n)]
    if law == "examples":
        return [run_worked_examples()]
    raise PosetError(f"unknown law {law!r}")


def _cmd_verify(args) -> int:
    law = args.law_flag or args.law
    if args.all:
        laws = list(VERIFY_LAWS)
    elif law:
        laws = [law]
    else:
        raise PosetError("verify needs a law or --all")
    reports = []
    for name in laws:
        reports.extend(_verify_reports(name, args))
    if args.format == "json":
        _print_json([r.to_doc() for r in reports])
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.ok for r in reports) else 1


def _cmd_hopf_verify(args) -> int:
    return _cmd_verify(args)


def _cmd_paper_examples(args) -> int:
    report = run_worked_examples()
    if args.format == "json":
        _print_json(report.to_doc())
    else:
        print(report.summary())
        for failure in report.failures:
            print(f"  mismatch: {json.dumps(failure, sort_keys=True)}")
    return 0 if report.ok else 1


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "table"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetops",
        description="Insertion operads, incidence products and suboperads of finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="compose one poset into a vertex of another")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--at", required=True, metavar="LABEL", help="insertion vertex of the outer poset")
    p.add_argument("outer", help="outer poset JSON file, or - for stdin")
    p.add_argument("inner", help="inner poset JSON file")
    _add_format(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("phi", help="expand a poset in the refinement basis")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("poset")
    _add_format(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("hopf", help="products, coproducts and suites on isomorphism classes")
    hopf_sub = p.add_subparsers(dest="hopf_command", required=True)

    hp = hopf_sub.add_parser("prod", help="product of two classes")
    hp.add_argument("--op", required=True, choices=HOPF_OPS)
    hp.add_argument("a")
    hp.add_argument("b")
    _add_format(hp)
    hp.set_defaults(func=_cmd_hopf_prod)

    hc = hopf_sub.add_parser("coprod", help="coproduct of a class")
    hc.add_argument("--op", required=True, choices=("delta", "dstar"))
    hc.add_argument("a")
    _add_format(hc)
    hc.set_defaults(func=_cmd_hopf_coprod)

    hv = hopf_sub.add_parser("verify", help="run one algebra suite")
    hv.add_argument("--law", dest="law_flag", required=True,
                    choices=("bialgebra", "infinitesimal", "nap"))
    hv.add_argument("--max-n", type=int, default=3)
    hv.set_defaults(func=_cmd_hopf_verify, law=None, all=False, family=None)
    _add_format(hv)

    p = sub.add_parser("classify", help="canonical and structural data of one poset")
    p.add_argument("poset")
    _add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("theta", help="apply the chain-reversing bijection")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("poset")
    _add_format(p)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("closure", help="classes generated by the two-element seeds")
    p.add_argument("--family", required=True, choices=("wn", "nabla", "triple"))
    p.add_argument("--max-n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("enumerate", help="all posets of one size, as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--iso", action="store_true", help="one representative per class")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--filter", choices=("wn", "nabla"))
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("sequences", help="counting table with pinned-sequence comparison")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--table", choices=("md", "csv"))
    p.set_defaults(func=_cmd_sequences)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("law", nargs="?", choices=VERIFY_LAWS)
    p.add_argument("--law", dest="law_flag", choices=VERIFY_LAWS)
    p.add_argument("--all", action="store_true")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--max-n", type=int, default=3)
    _add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("paper-examples", help="replay the bundled worked examples")
    _add_format(p)
    p.set_defaults(func=_cmd_paper_examples)

    return parser


def main(argv=None) -> int:
    if "POSETOPS_SIZE_LIMIT" in os.environ:
        try:
            canon.DEFAULT_SIZE_LIMIT = int(os.environ["POSETOPS_SIZE_LIMIT"])
        except ValueError:
            print(
                json.dumps({"error": "BadSizeLimit",
                            "message": "POSETOPS_SIZE_LIMIT must be an integer"}),
                file=sys.stderr,
            )
            return 2
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except PosetError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True),
            file=sys.stderr,
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
