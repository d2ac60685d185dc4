"""Command line entry point: ``skein {eval,verify,nf,table,catalog}``.

Exit status: 0 success, 1 parse or usage error, 2 verification failure,
3 irreducible normal form, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import GenPolynomial, evaluate
from .geometry import GenericityError
from .parser import ParseError, parse_expression

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_IRREDUCIBLE, EXIT_INTERNAL = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skein", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    e = sub.add_parser("eval", help="expand an expression in the multicurve basis")
    e.add_argument("expression")
    e.add_argument("--n", type=int, default=4, help="number of punctures on the line (default 4)")
    e.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="verify catalog relations against the oracle")
    v.add_argument("names", nargs="*", help="relation names (default: all)")
    v.add_argument("--printed", action="store_true", help="verify the verbatim printed text")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")

    n = sub.add_parser("nf", help="normal form of an expression")
    n.add_argument("expression")
    n.add_argument("--checked", action="store_true", help="verify every rewrite step")
    n.add_argument("--printed", action="store_true", help="use the verbatim table")
    n.add_argument("--json", action="store_true")

    t = sub.add_parser("table", help="check distinguished-monomial table rows")
    t.add_argument("--row", help="row label, e.g. R7")
    t.add_argument("--printed", action="store_true", help="use the verbatim table")
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--json", action="store_true")

    c = sub.add_parser("catalog", help="list catalog relations")
    c.add_argument("--json", action="store_true", help="one JSON record per line")
    return p


def _run_eval(args, out) -> int:
    poly = parse_expression(args.expression, n=args.n)
    element = evaluate(poly, n=args.n)
    out.write((_dump(element.to_json()) if args.json else str(element)) + "\n")
    return EXIT_OK


def _verify_job(job):
    from .presentation.catalog import build_catalog, verify, verify_printed

    name, printed = job
    rel = build_catalog().get(name)
    return (verify_printed if printed else verify)(rel)


def _map(fn, jobs, workers):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, jobs))
    return [fn(j) for j in jobs]


def _run_verify(args, out) -> int:
    from .presentation.catalog import build_catalog

    catalog = build_catalog()
    names = args.names or catalog.names()
    missing = [n for n in names if n not in set(catalog.names())]
    if missing:
        raise _UsageError(f"unknown relation(s): {', '.join(missing)}")
    reports = _map(_verify_job, [(n, args.printed) for n in names], args.jobs)
    failed = [r for r in reports if not r.zero]
    if args.json:
        for r in reports:
            out.write(_dump(r.to_json()) + "\n")
    else:
        for r in failed:
            out.write(f"FAILED {r.name}: residual {_dump(r.residual.to_json())}\n")
        if failed:
            out.write(f"{len(failed)} of {len(reports)} relations failed\n")
        else:
            out.write(f"all {len(reports)} relations verified\n")
    return EXIT_VERIFY if failed else EXIT_OK


def _run_nf(args, out) -> int:
    from .presentation.catalog import build_catalog
    from .presentation.rewrite import RewriteSystem, default_system, normal_form
    from .presentation.table import TABLE
    from .presentation.triples import derive_triple_relations

    poly = parse_expression(args.expression)
    if args.printed:
        extra = [r.relation for r in derive_triple_relations()]
        system = RewriteSystem(build_catalog(), extra, table=TABLE)
    else:
        system = default_system()
    res = normal_form(poly, checked=args.checked, system=system)
    names = [str(GenPolynomial({m: 1})) for m in res.irreducible]
    if args.json:
        out.write(_dump({
            "result": res.result.to_json(),
            "irreducible": [[list(g) for g in m] for m in res.irreducible],
            "steps": res.steps,
            "checks": res.checks,
        }) + "\n")
    else:
        out.write(str(res.result) + "\n")
        for name in names:
            out.write(f"irreducible: {name}\n")
    return EXIT_IRREDUCIBLE if res.irreducible else EXIT_OK


def _table_job(job):
    from .presentation.table import check_table_row, get_row

    label, printed, seed = job
    return check_table_row(get_row(label, corrected=not printed), seed=seed)


def _run_table(args, out) -> int:
    from .presentation.table import CORRECTED_TABLE, TABLE

    rows = TABLE if args.printed else CORRECTED_TABLE
    labels = [r.label for r in rows]
    if args.row:
        if args.row.upper() not in labels:
            raise _UsageError(f"no table row {args.row!r}; rows are {labels[0]}..{labels[-1]}")
        labels = [args.row.upper()]
    reports = _map(_table_job, [(l, args.printed, args.seed) for l in labels], args.jobs)
    for r in reports:
        if args.json:
            out.write(_dump(r.to_json()) + "\n")
        else:
            status = "ok" if r.ok else "FAIL"
            out.write(f"{r.label} {tuple(r.multidegree)} {status} ranks={r.ranks}\n")
            for msg in r.failures():
                out.write(f"    {msg}\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY


def _run_catalog(args, out) -> int:
    from .presentation.catalog import build_catalog

    catalog = build_catalog()
    if args.json:
        out.write(catalog.dumps())
    else:
        for r in catalog.relations:
            out.write(f"{r.name}: {r.lhs} = {r.rhs}\n")
    return EXIT_OK


_VERBS = {
    "eval": _run_eval,
    "verify": _run_verify,
    "nf": _run_nf,
    "table": _run_table,
    "catalog": _run_catalog,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb is None:
            raise _UsageError("a verb is required: " + ", ".join(_VERBS))
        return _VERBS[args.verb](args, out)
    except (_UsageError, ParseError) as exc:
        err.write(f"skein: error: {exc}\n")
        return EXIT_USAGE
    except GenericityError as exc:
        err.write(f"skein: internal error: {exc}\n")
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        err.write(f"skein: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
