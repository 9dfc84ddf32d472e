"""Command line front end.

All inputs are flags; there is no configuration file or environment lookup,
so identical invocations produce identical output.  JSON output is sorted
canonically (weights by decreasing (t, r)) and carries the same content as
the plain text.  Exit status is 0 exactly when every requested verification
passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import sprime, structures
from .alcoves import OUT, classify, linked_weight
from .decompose import IntegrityError, decompose, sweep, verify
from .modchar import char_dim, m_char, simple_char, tilting_char, to_simple_basis
from .weights import Weight, dim_weyl, parse_weight
from .weylchar import Character


def _json_dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ": "), indent=1)


def _kind_char(kind: str, w: Weight, p: int) -> Character:
    if kind == "weyl":
        return Character("weyl", {w: 1})
    if kind == "simple":
        return simple_char(w, p)
    if kind == "tilting":
        return tilting_char(w, p)
    if kind == "m":
        return m_char(w, p, basis="weyl")
    raise ValueError(f"unknown kind {kind!r}")


def cmd_facet(args) -> int:
    label = classify(parse_weight(args.weight), args.p)
    if args.json:
        print(_json_dumps({"p": args.p, "weight": list(parse_weight(args.weight)),
                           "facet": label}))
    else:
        print(label)
    return 0


def cmd_dim(args) -> int:
    w = parse_weight(args.weight)
    if args.kind == "weyl":
        value = dim_weyl(w)
    else:
        value = char_dim(_kind_char(args.kind, w, args.p))
    print(value)
    return 0


def cmd_char(args) -> int:
    w = parse_weight(args.weight)
    c = _kind_char(args.kind, w, args.p)
    if args.basis == "simple" and c.basis == "weyl":
        c = to_simple_basis(c, args.p)
    elif args.basis == "weyl" and c.basis == "simple":
        raise SystemExit("cannot lower a simple-basis character without p")
    if args.json:
        print(_json_dumps(c.to_json()))
    else:
        symbol = {"weyl": "X", "simple": "Xp", "monomial": "m"}[c.basis]
        terms = [
            (f"{k}*" if k != 1 else "") + f"{symbol}({w2[0]},{w2[1]})"
            for w2, k in c.items_sorted()
        ]
        print(" + ".join(terms) if terms else "0")
    return 0


def cmd_decompose(args) -> int:
    lhs, rhs = parse_weight(args.lhs), parse_weight(args.rhs)
    try:
        d = decompose(lhs, rhs, args.p)
    except IntegrityError as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return 2
    report = verify(d)
    if args.json:
        payload = d.to_json()
        payload["verified"] = report.passed
        if not report.passed:
            payload["failures"] = [c.name for c in report.failures()]
        print(_json_dumps(payload))
    else:
        status = "verified" if report.passed else "VERIFICATION FAILED"
        print(f"{d}  [dim {d.dim_product}, {status}]")
        for c in report.failures():
            print(f"  failed: {c.name} {c.detail}", file=sys.stderr)
    return 0 if report.passed else 1


def cmd_sweep(args) -> int:
    try:
        result = sweep(args.p, run_verify=not args.no_verify, jobs=args.jobs)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.json:
        print(_json_dumps(result.to_json()))
    else:
        counts = ", ".join(f"{k}:{v}" for k, v in sorted(result.summand_counts.items()))
        print(f"p={result.p}: {result.pairs} pairs, summands {counts}, "
              f"{result.m_pairs} pairs with an M summand, "
              f"{len(result.failures)} failures")
        for f in result.failures:
            print(f"  FAIL {f}")
    return 0 if result.passed else 1


def cmd_quiver(args) -> int:
    if args.action == "verify":
        checks = sprime.report()
        failed = 0
        for name, ok, detail in checks:
            print(f"{'PASS' if ok else 'FAIL'} {name}" + (f"  {detail}" if detail and not ok else ""))
        failed = sum(1 for _, ok, _ in checks if not ok)
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
        return 0 if failed == 0 else 1
    if args.action == "dot":
        target = args.target
        if target is None:
            print("dot needs a target module (P1, P2, P3, P3p, M2)", file=sys.stderr)
            return 2
        from .quiver import coefficient_quiver

        alg = sprime.algebra()
        if target == "M2":
            module = sprime.module_m2(alg)
            # quotients lose path labels; render coordinate labels instead
            basis = {
                v: [
                    (f"{v}.{i}", tuple(
                        1 if j == i else 0 for j in range(module.dims[v])
                    ))
                    for i in range(module.dims[v])
                ]
                for v in module.pres.quiver.vertices
            }
            print(coefficient_quiver(module, basis).to_dot("M2"))
            return 0
        if target in ("P1", "P2", "P3", "P3p"):
            vertex = target[1:]
            module = alg.projective(vertex)
            if target == "P2":
                names = tuple((args.basis or "b1'b1,b2'b2").split(","))
                cq = sprime.p2_coefficient_quiver(names, alg)
            else:
                basis = {
                    v: [
                        (label, tuple(1 if j == i else 0 for j in range(module.dims[v])))
                        for i, label in enumerate(module.basis_labels[v])
                    ]
                    for v in module.pres.quiver.vertices
                }
                cq = coefficient_quiver(module, basis)
            print(cq.to_dot(target))
            return 0
        print(f"unknown module {target!r}", file=sys.stderr)
        return 2
    print(f"unknown quiver action {args.action!r}", file=sys.stderr)
    return 2


def cmd_diagram(args) -> int:
    w = parse_weight(args.weight)
    p = args.p
    facet = classify(w, p)
    if facet == OUT:
        print(f"weight {args.weight} lies outside the region for p={p}", file=sys.stderr)
        return 2
    try:
        d = structures.diagram(facet, args.kind)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2

    def labeler(entry: str) -> Optional[str]:
        mu = linked_weight(w, entry, p)
        return None if mu is None else f"{mu[0]},{mu[1]}"

    print(structures.diagram_dot(d, labeler, title=f"{args.kind} {w[0]},{w[1]} p={p}"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3tensor",
        description="Exact tensor product decomposition for restricted "
                    "simple SL3 modules (p >= 5).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, weight=True):
        sp.add_argument("--p", type=int, required=True, help="prime >= 5")
        if weight:
            sp.add_argument("--weight", required=True, help="weight 'a,b'")
        sp.add_argument("--json", action="store_true", help="emit JSON")

    sp = sub.add_parser("facet", help="classify a weight into its facet")
    add_common(sp)
    sp.set_defaults(func=cmd_facet)

    sp = sub.add_parser("dim", help="dimension of a module")
    add_common(sp)
    sp.add_argument("--kind", default="simple",
                    choices=("weyl", "simple", "tilting", "m"))
    sp.set_defaults(func=cmd_dim)

    sp = sub.add_parser("char", help="character of a module")
    add_common(sp)
    sp.add_argument("--kind", default="simple",
                    choices=("weyl", "simple", "tilting", "m"))
    sp.add_argument("--basis", default=None, choices=(None, "weyl", "simple"))
    sp.set_defaults(func=cmd_char)

    sp = sub.add_parser("decompose", help="decompose a tensor product")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lhs", required=True, help="weight 'a,b'")
    sp.add_argument("--rhs", required=True, help="weight 'a,b'")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("sweep", help="decompose and verify all restricted pairs")
    sp.add_argument("--p", type=int, required=True, help="one of 5, 7, 11")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-verify", action="store_true",
                    help="skip per-pair verification")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("quiver", help="path-algebra checks and drawings")
    sp.add_argument("action", choices=("verify", "dot"))
    sp.add_argument("target", nargs="?", help="P1, P2, P3, P3p or M2")
    sp.add_argument("--basis", default=None,
                    help="two of a'a,b1'b1,b2'b2 for the P2 bottom layer")
    sp.set_defaults(func=cmd_quiver)

    sp = sub.add_parser("diagram", help="layered module diagram as DOT")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--kind", required=True, choices=("delta", "tilting", "m"))
    sp.add_argument("--weight", required=True, help="weight 'a,b'")
    sp.set_defaults(func=cmd_diagram)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IntegrityError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
