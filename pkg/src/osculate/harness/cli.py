"""Command-line interface: ``analyze``, ``catalog`` and ``verify``."""

from __future__ import annotations

import argparse
import os
import sys

from ..errors import GenericityFailure, OsculateError, ResourceError
from ..variety import catalog, catalog_entry, parse_variety, render_variety
from .report import render_report, render_reports
from .suite import Config, run_suite

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_GENERICITY = 4


def _add_config_args(p):
    p.add_argument("--max-order", type=int, default=3, metavar="T")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--samples", type=int, default=3, metavar="N")
    p.add_argument("--bound", type=int, default=10, metavar="B")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte determinism)")


def build_parser():
    parser = argparse.ArgumentParser(prog="osculate",
                                     description="Osculating spaces, fundamental forms and higher Gauss maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="run the verification suite on one variety")
    a.add_argument("variety", help="variety file, or the name of a catalog entry")
    _add_config_args(a)

    c = sub.add_parser("catalog", help="print built-in varieties in the input grammar")
    group = c.add_mutually_exclusive_group()
    group.add_argument("--list", action="store_true", help="list the names only")
    group.add_argument("--name", metavar="NAME")

    v = sub.add_parser("verify", help="run the suite over the whole catalog")
    v.add_argument("--all", action="store_true", required=True)
    _add_config_args(v)
    return parser


def _config(args):
    return Config(max_order=args.max_order, seed=args.seed, samples=args.samples, bound=args.bound)


def load_variety(source):
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            default = os.path.splitext(os.path.basename(source))[0]
            return parse_variety(fh.read(), default_name=default)
    return catalog_entry(source)


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            if args.list:
                sys.stdout.write("".join(f"{V.name}\n" for V in catalog()))
            elif args.name:
                sys.stdout.write(render_variety(catalog_entry(args.name)))
            else:
                sys.stdout.write("\n".join(render_variety(V) for V in catalog()))
            return 0
        cfg = _config(args)
        if args.command == "analyze":
            report = run_suite(load_variety(args.variety), cfg)
            _emit(render_report(report, args.format, args.timings), args.out)
            return EXIT_FAIL if report.fail_count else 0
        reports = [run_suite(V, cfg) for V in catalog()]
        _emit(render_reports(reports, args.format, args.timings), args.out)
        return EXIT_FAIL if any(r.fail_count for r in reports) else 0
    except ResourceError as exc:
        print(f"osculate: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except GenericityFailure as exc:
        print(f"osculate: genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except (OsculateError, OSError) as exc:
        print(f"osculate: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
