"""Command line front end.

Subcommands cover the main operations: classification, root and basis
listings, orbit tables, highest 2-roots, expansion over the canonical
basis, word action matrices, the module decomposition, kernel orders,
arc pictures, and the self-check suites.  Every subcommand accepts
--json for machine readable output; plain text is the default.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import linalg
from .diagram import (Diagram, TypeClass, classify, diagram_to_json,
                      path_diagram, y_diagram)
from .forms import (action_kernel_order, affine_radical_witness,
                    decompose_s2v, norm2_witness)
from .orbits import closed_form_highest, orbit_tables
from .roots import paper_labels, positive_roots
from .skein import render_skein
from .symsquare import canonical_basis, standard_coords, vee
from .verify import SUITES, run_suites


def add_diagram_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--y", nargs=3, type=int, metavar=("A", "B", "C"),
                   help="fork diagram with arms A, B, C")
    g.add_argument("--path", type=int, metavar="N", help="path with N vertices")


def get_diagram(args) -> Diagram:
    if args.y is not None:
        return y_diagram(*args.y)
    return path_diagram(args.path)


def get_labels(args, d: Diagram):
    num = getattr(args, "paper_numbering", None)
    if num is None or num == "internal":
        return None
    return paper_labels(d, num)


def fmt_root(r, labels=None) -> str:
    terms = []
    for v, c in enumerate(r):
        if not c:
            continue
        lab = labels[v] if labels else str(v)
        key = (0, int(lab)) if lab.isdigit() else (1, lab)
        terms.append((key, ("a%s" % lab) if c == 1 else "%da%s" % (c, lab)))
    return "+".join(t for _k, t in sorted(terms)) or "0"


def fmt_pair(pair, labels=None) -> str:
    return "%s v %s" % (fmt_root(pair[0], labels), fmt_root(pair[1], labels))


def emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def parse_components(d: Diagram, spec: str):
    parts = spec.split(";")
    if len(parts) != 2:
        raise ValueError("expected two coefficient vectors separated by ';'")
    out = []
    for part in parts:
        coeffs = tuple(int(x) for x in part.replace(",", " ").split())
        if len(coeffs) != d.n:
            raise ValueError("coefficient vector %r has length %d, expected %d"
                             % (part, len(coeffs), d.n))
        out.append(coeffs)
    return out[0], out[1]


def parse_word(spec: str):
    return [int(x) for x in spec.replace(",", " ").split()]


def weyl_order(d: Diagram) -> int:
    if classify(d) is not TypeClass.FINITE:
        raise ValueError("group order is only defined for finite diagrams")
    if d.kind == "Path":
        return math.factorial(d.n + 1)
    if sorted(d.arms)[:2] == [1, 1]:
        return 2 ** (d.n - 1) * math.factorial(d.n)
    return {6: 51840, 7: 2903040, 8: 696729600}[d.n]


# --- subcommands -----------------------------------------------------------

def cmd_classify(args) -> int:
    d = get_diagram(args)
    cls = classify(d)
    emit(args,
         {"diagram": diagram_to_json(d), "n": d.n, "type": cls.name.lower()},
         "%r: %s (n = %d)" % (d, cls.name.lower(), d.n))
    return 0


def cmd_roots(args) -> int:
    d = get_diagram(args)
    labels = get_labels(args, d)
    roots = positive_roots(d, height_bound=args.height_bound)
    if args.json:
        print(json.dumps({"diagram": diagram_to_json(d),
                          "roots": [list(r) for r in roots],
                          "total": len(roots)}, sort_keys=True))
    else:
        for r in roots:
            print(fmt_root(r, labels))
        print("total %d" % len(roots))
    return 0


def cmd_basis(args) -> int:
    d = get_diagram(args)
    labels = get_labels(args, d)
    basis = canonical_basis(d)
    if args.json:
        elts = [{"index": k,
                 "vertex": e.labels[0][0],
                 "partner": list(e.labels[0][1]),
                 "pair": [list(e.pair[0]), list(e.pair[1])]}
                for k, e in enumerate(basis.elements)]
        print(json.dumps({"diagram": diagram_to_json(d), "elements": elts,
                          "total": len(basis)}, sort_keys=True))
    else:
        for k, e in enumerate(basis.elements):
            i, beta = e.labels[0]
            print("%3d  %s v %s" % (k, fmt_root(tuple(1 if v == i else 0
                                                      for v in range(d.n)), labels),
                                    fmt_root(beta, labels)))
        print("total %d" % len(basis))
    return 0


def cmd_orbits(args) -> int:
    d = get_diagram(args)
    tables = orbit_tables(d)
    if args.json:
        out = []
        for t in tables:
            rec = {"id": t.id, "size": t.size, "height": t.height,
                   "highest": [list(t.highest[0]), list(t.highest[1])],
                   "basis_members": list(t.basis_members)}
            if args.members:
                rec["members"] = [[list(a), list(b)] for a, b in t.members]
            out.append(rec)
        print(json.dumps({"diagram": diagram_to_json(d), "orbits": out,
                          "total": sum(t.size for t in tables)}, sort_keys=True))
    else:
        for t in tables:
            print("orbit %d: size %d, %d basis members, highest %s (height %d)"
                  % (t.id, t.size, len(t.basis_members),
                     fmt_pair(t.highest), t.height))
            if args.members:
                for p in t.members:
                    print("    " + fmt_pair(p))
        print("total %d positive 2-roots" % sum(t.size for t in tables))
    return 0


def cmd_highest(args) -> int:
    d = get_diagram(args)
    basis = canonical_basis(d)
    pairs = closed_form_highest(d)
    if args.json:
        out = [{"pair": [list(a), list(b)],
                "height": sum(basis.expand_pair(a, b))}
               for a, b in pairs]
        print(json.dumps({"diagram": diagram_to_json(d), "highest": out},
                         sort_keys=True))
    else:
        for a, b in pairs:
            ht = sum(basis.expand_pair(a, b))
            print("%s (height %d)" % (fmt_pair((a, b)), ht))
    return 0


def cmd_expand(args) -> int:
    d = get_diagram(args)
    labels = get_labels(args, d)
    a, b = parse_components(d, args.components)
    basis = canonical_basis(d)
    coords = basis.expand_pair(a, b)
    if args.json:
        print(json.dumps({"diagram": diagram_to_json(d),
                          "coords": list(coords),
                          "height": sum(coords)}, sort_keys=True))
    else:
        for k, c in enumerate(coords):
            if c:
                print("%d * %s" % (c, fmt_pair(basis.elements[k].pair, labels)))
        print("height %d" % sum(coords))
    return 0


def cmd_matrix(args) -> int:
    d = get_diagram(args)
    word = parse_word(args.word)
    basis = canonical_basis(d)
    m = basis.word_matrix(word)
    coherent = True
    if args.check_sign_coherence:
        for j in range(len(m)):
            col = [row[j] for row in m]
            pos = any(x > 0 for x in col)
            neg = any(x < 0 for x in col)
            if pos == neg:
                coherent = False
                break
    if args.json:
        rec = {"diagram": diagram_to_json(d), "word": word,
               "matrix": [list(row) for row in m]}
        if args.check_sign_coherence:
            rec["sign_coherent"] = coherent
        print(json.dumps(rec, sort_keys=True))
    else:
        for row in m:
            print(" ".join("%3d" % x for x in row))
        if args.check_sign_coherence:
            print("sign coherent: %s" % coherent)
    return 0 if coherent else 1


def cmd_decompose(args) -> int:
    d = get_diagram(args)
    cls = classify(d)
    if cls is TypeClass.AFFINE:
        if args.prime is not None:
            raise ValueError("--prime is not supported for affine diagrams")
        w = affine_radical_witness(d)
        rows = [standard_coords(m) for m in w["elements"]]
        rows.append(standard_coords(w["delta_squared"]))
        rad_dim = linalg.rank(tuple(rows))
        if args.json:
            print(json.dumps({"diagram": diagram_to_json(d), "type": "affine",
                              "delta": list(w["delta"]),
                              "radical_dim": rad_dim}, sort_keys=True))
        else:
            print("%r: affine, invariant form is degenerate" % (d,))
            print("delta = %s" % fmt_root(w["delta"]))
            print("radical spanned by delta v a_i, dimension %d" % rad_dim)
        return 0
    rep = decompose_s2v(d, p=args.prime)
    if args.json:
        rep = dict(rep)
        rep["diagram"] = diagram_to_json(d)
        rep["type"] = cls.name.lower()
        print(json.dumps(rep, sort_keys=True))
    else:
        print("%r: %s" % (d, cls.name.lower()))
        if args.prime is not None:
            print("radicals computed mod %d" % args.prime)
        print("dim S^2(V) = %d" % rep["dim_sym_square"])
        print("invariant line: %d" % rep["invariant_dim"])
        print("module dim: %d" % rep["module_dim"])
        if "orbit_summands" in rep:
            for s in rep["orbit_summands"]:
                print("orbit %d: dim %d, radical %d"
                      % (s["id"], s["dim"], s["radical_dim"]))
            print("complement dim: %d" % rep["complement_dim"])
        else:
            print("module radical dim: %d" % rep["module_radical_dim"])
    return 0


def cmd_kernel(args) -> int:
    d = get_diagram(args)
    order = args.group_order if args.group_order else weyl_order(d)
    tables = orbit_tables(d)
    if args.orbit is not None:
        tables = [t for t in tables if t.id == args.orbit]
        if not tables:
            raise ValueError("no orbit with id %d" % args.orbit)
    out = []
    for t in tables:
        k = action_kernel_order(d, t, order, state_cap=args.max_order)
        out.append({"orbit": t.id, "kernel_order": k})
        if not args.json:
            print("orbit %d: kernel order %d (group order %d)"
                  % (t.id, k, order))
    if args.json:
        print(json.dumps({"diagram": diagram_to_json(d), "group_order": order,
                          "kernels": out}, sort_keys=True))
    return 0


def cmd_skein(args) -> int:
    d = get_diagram(args)
    a, b = parse_components(d, args.components)
    sys.stdout.write(render_skein(d, (a, b)))
    return 0


def cmd_verify(args) -> int:
    names = args.suite if args.suite else sorted(SUITES)
    checks = run_suites(names, seed=args.seed, max_order=args.max_order)
    failed = 0
    for c in checks:
        line = "%s %s" % ("PASS" if c.ok else "FAIL", c.name)
        if c.detail:
            line += ": " + c.detail
        print(line)
        if not c.ok:
            failed += 1
    print("%d checks, %d failed" % (len(checks), failed))
    return 1 if failed else 0


def cmd_witness(args) -> int:
    w = norm2_witness(*args.y)
    if args.json:
        print(json.dumps({"diagram": diagram_to_json(w["diagram"]),
                          "norm": int(w["norm"]),
                          "sign_coherent": w["sign_coherent"],
                          "sign": w["sign"],
                          "coords": list(w["coords"]),
                          "delta": list(w["delta"])}, sort_keys=True))
    else:
        print("%r: x = (a%d + a%d) v a%d + a%d v delta, delta = %s"
              % (w["diagram"], w["alpha"], w["beta"], w["outer"], w["alpha"],
                 fmt_root(w["delta"])))
        print("norm %s, sign coherent: %s (sign %s)"
              % (w["norm"], w["sign_coherent"], w["sign"]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tworoots",
        description="Exact computations with 2-roots of simply laced "
                    "Weyl groups of path and fork type.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, diagram=True, numbering=False):
        p = sub.add_parser(name, help=help_)
        if diagram:
            add_diagram_args(p)
        if numbering:
            p.add_argument("--paper-numbering",
                           choices=["internal", "d", "e", "a"],
                           default="internal",
                           help="vertex labels used when printing roots")
        p.add_argument("--json", action="store_true",
                       help="machine readable output")
        p.set_defaults(fn=fn)
        return p

    add("classify", cmd_classify, "finite / affine / indefinite type")

    p = add("roots", cmd_roots, "list the positive roots", numbering=True)
    p.add_argument("--height-bound", type=int, default=None,
                   help="cap on root height (required for infinite types)")

    add("basis", cmd_basis, "list the canonical basis of 2-roots",
        numbering=True)

    p = add("orbits", cmd_orbits, "orbit tables of the positive 2-roots")
    p.add_argument("--members", action="store_true",
                   help="list every orbit member")

    add("highest", cmd_highest, "closed form highest 2-roots, one per orbit")

    p = add("expand", cmd_expand, "expand a v b over the canonical basis",
            numbering=True)
    p.add_argument("--components", required=True, metavar="A;B",
                   help="two root coefficient vectors, e.g. '1,1,0;0,1,1'")

    p = add("matrix", cmd_matrix, "matrix of a word of simple reflections")
    p.add_argument("--word", required=True, metavar="W",
                   help="vertex numbers, e.g. '0 1 2'")
    p.add_argument("--check-sign-coherence", action="store_true",
                   help="exit 1 unless every column has one sign")

    p = add("decompose", cmd_decompose,
            "decomposition of the symmetric square")
    p.add_argument("--prime", type=int, default=None,
                   help="compute radical dimensions mod this prime")

    p = add("kernel", cmd_kernel, "kernel of the group action on an orbit "
                                  "summand (practical for rank <= 6)")
    p.add_argument("--orbit", type=int, default=None, help="orbit id")
    p.add_argument("--group-order", type=int, default=None,
                   help="override the group order")
    p.add_argument("--max-order", type=int, default=10 ** 6,
                   help="abort if the image group exceeds this order")

    p = add("skein", cmd_skein, "arc picture of a 2-root and its expansion")
    p.add_argument("--components", required=True, metavar="A;B")

    p = sub.add_parser("witness",
                       help="norm 2 element with sign coherent expansion "
                            "in a minimal indefinite fork type")
    p.add_argument("--y", nargs=3, type=int, required=True,
                   metavar=("A", "B", "C"))
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("verify", help="run the self check suites")
    p.add_argument("--suite", action="append",
                   choices=sorted(SUITES) + ["all"],
                   help="suite name (repeatable; default all)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized checks")
    p.add_argument("--max-order", type=int, default=None,
                   help="skip kernel checks for groups above this order")
    p.set_defaults(fn=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
