"""Command-line interface.

Exit codes everywhere: 0 = pass, 1 = error (bad input, parse failure,
unsupported dimension), 2 = obstruction found.
"""

from __future__ import annotations

import argparse
import sys

from . import corpus as corpus_mod
from .complexes import Simplex, geometric_link
from .fileio import (ParseError, read_complex, read_function, save_complex,
                     write_complex, write_function)
from .functions import euler_integral, indicator_of_subcomplex
from .invariants import (BoundQuery, InvariantVector, b_vector, bonnard_bounds,
                         dim3_check, merge_reports, search_check,
                         sullivan_check)
from .reports import RunConfig, exit_code_for, render, report_payload
from .search import SearchBudget

import json


def _dim_word(d: int, count: int) -> str:
    if d == 0:
        return "vertex" if count == 1 else "vertices"
    if d == 1:
        return "edge" if count == 1 else "edges"
    if d == 2:
        return "triangle" if count == 1 else "triangles"
    return f"{d}-simplex" if count == 1 else f"{d}-simplices"


def _counts_phrase(k) -> str:
    return ", ".join(f"{c} {_dim_word(d, c)}"
                     for d, c in enumerate(k.counts_by_dim()))


def _budget_from(args) -> SearchBudget:
    return SearchBudget(max_depth=args.depth, max_functions=args.max_funcs,
                        use_p=not args.no_p)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _vertex_by_label(k, label: str) -> int:
    for v in k.vertex_ids:
        if k.label(v) == label:
            return v
    raise ValueError(f"no vertex labeled {label!r}")


def cmd_validate(args) -> int:
    k = read_complex(args.path)
    print(f"{k.name}: {_counts_phrase(k)}")
    return 0


def cmd_check(args) -> int:
    k = read_complex(args.path)
    if k.dim > 4:
        raise ValueError(f"dimension {k.dim} is out of range for check"
                         " (supported: <= 4)")
    budget = _budget_from(args)
    config = RunConfig(command="check", inputs=(args.path,),
                       output_format="json" if args.json else "text",
                       seed=args.seed, budget=budget, search_forced=args.search)
    parts = [sullivan_check(k)]
    if k.dim <= 3:
        parts.append(dim3_check(k))
    if k.dim == 4 or args.search:
        parts.append(search_check(k, budget))
    report = merge_reports(*parts)
    _emit(render(report, config), args.output)
    return exit_code_for(report)


def cmd_invariants(args) -> int:
    k = read_complex(args.path)
    res = b_vector(k)
    if isinstance(res, InvariantVector):
        if args.json:
            payload = {"complex": k.name, "b": list(res.as_tuple()),
                       "exit_code": 0}
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(str(res))
        return 0
    if args.json:
        payload = {"complex": k.name, "witness": res.as_dict(k),
                   "exit_code": 2}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"obstruction: {res.describe(k)}")
    return 2


def cmd_integrate(args) -> int:
    k = read_complex(args.complex_path)
    phi = read_function(args.function_path, k)
    print(str(euler_integral(phi)))
    return 0


def cmd_link(args) -> int:
    k = read_complex(args.path)
    verts = [_vertex_by_label(k, l) for l in args.simplex]
    link = geometric_link(k, Simplex(sorted(verts)))
    if not link.simplices:
        raise ValueError("the link is empty (isolated maximal vertex);"
                         " nothing to write")
    if args.output:
        save_complex(link, args.output)
    else:
        sys.stdout.write(write_complex(link))
    return 0


def cmd_bounds(args) -> int:
    q = BoundQuery(d=args.d, k=args.k, delta=args.delta)
    b = bonnard_bounds(q)
    if args.json:
        payload = {"d": q.d, "k": q.k, "delta": q.delta, "N": b.n,
                   "N'": b.n_prime, "note": b.note}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"N={b.n} N'={b.n_prime}")
        print(f"note: {b.note}")
    return 0


def cmd_corpus(args) -> int:
    if args.list:
        for name in corpus_mod.corpus_names():
            print(name)
        return 0
    if args.write:
        import os
        os.makedirs(args.write, exist_ok=True)
        for name in corpus_mod.corpus_names():
            k = corpus_mod.corpus_complex(name)
            with open(os.path.join(args.write, f"{name}.cplx"), "w",
                      encoding="utf-8") as fh:
                fh.write(write_complex(k))
        w = corpus_mod.window()
        one_q = indicator_of_subcomplex(w, corpus_mod.quadrant_subcomplex(w))
        with open(os.path.join(args.write, "quadrant_indicator.fn"), "w",
                  encoding="utf-8") as fh:
            fh.write(write_function(one_q))
        print(f"wrote {len(corpus_mod.corpus_names())} complexes and 1"
              " function file")
        return 0
    if args.name:
        sys.stdout.write(write_complex(corpus_mod.corpus_complex(args.name)))
        return 0
    raise ValueError("corpus: give a name, --list, or --write <dir>")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="eulerlink",
        description="Exact Euler-calculus engine and local obstruction"
                    " checker for finite simplicial complexes.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="parse a complex file and report its"
                                        " face counts")
    v.add_argument("path")
    v.set_defaults(fn=cmd_validate)

    c = sub.add_parser("check", help="run the local obstruction tests")
    c.add_argument("path")
    c.add_argument("--json", action="store_true",
                   help="structured report instead of text")
    c.add_argument("--depth", type=int, default=6,
                   help="search: maximum expression depth (default 6)")
    c.add_argument("--max-funcs", type=int, default=20000,
                   help="search: distinct-function budget (default 20000)")
    c.add_argument("--no-P", dest="no_p", action="store_true",
                   help="search: drop the P operator from the closure")
    c.add_argument("--seed", type=int, default=0,
                   help="seed echoed into the report (reserved for"
                        " randomized suites)")
    c.add_argument("--search", action="store_true",
                   help="force the per-simplex closure search below"
                        " dimension 4")
    c.add_argument("-o", "--output", default=None,
                   help="write the report here instead of stdout")
    c.set_defaults(fn=cmd_check)

    i = sub.add_parser("invariants", help="b-vector of a complex of"
                                          " dimension <= 2")
    i.add_argument("path")
    i.add_argument("--json", action="store_true")
    i.set_defaults(fn=cmd_invariants)

    g = sub.add_parser("integrate", help="Euler integral of a function file")
    g.add_argument("complex_path")
    g.add_argument("function_path")
    g.set_defaults(fn=cmd_integrate)

    l = sub.add_parser("link", help="write the geometric link of a simplex"
                                    " as a complex file")
    l.add_argument("path")
    l.add_argument("simplex", nargs="+",
                   help="vertex labels of the simplex")
    l.add_argument("-o", "--output", default=None)
    l.set_defaults(fn=cmd_link)

    b = sub.add_parser("bounds", help="presentation bounds N, N' for value"
                                      " range [delta-k, delta+k] in"
                                      " dimension d")
    b.add_argument("d", type=int)
    b.add_argument("k", type=int)
    b.add_argument("delta", type=int)
    b.add_argument("--json", action="store_true")
    b.set_defaults(fn=cmd_bounds)

    s = sub.add_parser("corpus", help="built-in example complexes")
    s.add_argument("name", nargs="?")
    s.add_argument("--list", action="store_true")
    s.add_argument("--write", metavar="DIR")
    s.set_defaults(fn=cmd_corpus)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
