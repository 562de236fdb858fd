"""qfk: command-line theorem checker.

Exit codes: 0 all checks passed, 1 a check failed (invalid datum or a
theorem-level assertion), 2 unreadable input.
"""

from __future__ import annotations

import argparse
import sys

from .datafiles import DatumFileError, datum_from_json, dumps, load_datum, write_json
from .datum import PRESETS, DatumError, validate, with_field
from .pipeline import export_bundle, info, run_simples
from .scalars import FieldError


def _load(args):
    if args.preset:
        d, factors = datum_from_json({"preset": args.preset}), {}
    elif args.datum:
        d, factors = load_datum(args.datum)
    else:
        raise DatumFileError("give a datum file or --preset NAME")
    if args.prime:
        if factors:
            raise DatumFileError("--prime cannot be combined with imported bundles")
        try:
            d = with_field(d, {"backend": "prime", "p": args.prime})
        except (FieldError, DatumError) as exc:
            raise DatumFileError(f"--prime {args.prime}: {exc}") from exc
    return d, factors


def _add_input(p):
    p.add_argument("datum", nargs="?", help="datum JSON file")
    p.add_argument("--preset", choices=PRESETS, help="use a built-in datum instead of a file")
    p.add_argument("--prime", type=int, help="work over F_p instead of the datum's field")


def cmd_validate(args) -> int:
    d, _ = _load(args)
    rep = validate(d)
    for v in rep.violations:
        print(f"violation [{v['code']}]: {v['message']}")
    for f in rep.flags:
        print(f"note [{f['code']}]: {f['message']}")
    print("valid" if rep.ok else "invalid")
    return 0 if rep.ok else 1


def _check_valid(d) -> bool:
    rep = validate(d)
    if not rep.ok:
        for v in rep.violations:
            print(f"violation [{v['code']}]: {v['message']}", file=sys.stderr)
    return rep.ok


def cmd_info(args) -> int:
    d, factors = _load(args)
    if not _check_valid(d):
        return 1
    sys.stdout.write(dumps(info(d, factors)))
    return 0


def cmd_simples(args) -> int:
    d, factors = _load(args)
    if not _check_valid(d):
        return 1
    report, ok = run_simples(
        d,
        target=args.target,
        oracle=args.oracle,
        exhaustive_axioms=args.exhaustive_axioms,
        threads=args.threads,
        seed=args.seed,
        factors=factors,
        samples=args.samples,
    )
    if args.export:
        write_json(args.export, report)
    s = report["simples"]
    print(f"datum: {d.name or args.datum}  target: {args.target}  field: {d.field.spec()}")
    print(f"dim H = {report['dimensions']['H']}, dim D(H) = {report['dimensions']['double']}")
    print(f"hopf axioms ({report['axioms']['mode']}): {'pass' if report['axioms']['ok'] else 'FAIL'}")
    if "double" in report:
        print(f"double structure: {'pass' if report['double']['ok'] else 'FAIL'}")
    print(f"{'lambda':<24} {'dim M':>5} {'dim L':>5}  simple")
    for r in s["rows"]:
        print(f"{r['lambda']:<24} {r['dim_M']:>5} {r['dim_L']:>5}  {'yes' if r['simple'] else 'NO'}")
    print(f"{s['count']} simples, sum of squared dimensions {s['sum_dim_squared']}")
    for f in s["failures"]:
        print(f"failure: {f}")
    o = report["oracle"]
    if o["status"] != "not requested":
        print(f"oracle: {o['status']}" + (f" (dim J = {o['dim_radical']})" if "dim_radical" in o else ""))
    for note in report["notes"]:
        print(f"note: {note}")
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_export(args) -> int:
    d, factors = _load(args)
    if not _check_valid(d):
        return 1
    write_json(args.out, export_bundle(d, args.what, side=args.side, factors=factors))
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qfk", description="Simple modules of H and its Drinfel'd double.")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("validate", help="check a datum")
    _add_input(v)
    v.set_defaults(func=cmd_validate)

    i = sub.add_parser("info", help="dimensions and dual generator degrees")
    _add_input(i)
    i.set_defaults(func=cmd_info)

    s = sub.add_parser("simples", help="classify simple modules")
    _add_input(s)
    s.add_argument("--target", choices=("H", "double"), default="H")
    s.add_argument("--oracle", action="store_true", help="cross-check with the trace-form radical")
    s.add_argument("--exhaustive-axioms", action="store_true")
    s.add_argument("--export", metavar="PATH", help="write the JSON report")
    s.add_argument("--threads", type=int, default=None, help="parallel weights (default: $QFK_THREADS or 1)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=2000, help="sampled axiom tuples (default 2000)")
    s.set_defaults(func=cmd_simples)

    e = sub.add_parser("export", help="write structure constants")
    e.add_argument("what", choices=("H", "dual", "double", "prenichols"))
    e.add_argument("out")
    _add_input(e)
    e.add_argument("--side", choices=("L", "R"), default="L")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DatumFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
