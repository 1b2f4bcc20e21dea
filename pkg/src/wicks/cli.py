"""Command line interface: ``wicks <command> ...``.

Exit status is 0 on success, 1 on domain errors (invalid form, genus
guard, failed certificate) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from . import census as census_mod
from . import counting, errors, geometry, moves, symmetry, topology
from .words import parse, validate


def _form(args):
    return validate(parse(args.form, args.syntax))


def _emit(obj):
    print(json.dumps(obj, sort_keys=False))


def cmd_validate(args):
    f = _form(args)
    _emit({"valid": True, "word": str(f.word), "genus": f.genus,
           "edges": f.edge_count, "length": f.length, "maximal": f.is_maximal})


def cmd_info(args):
    f = _form(args)
    m = topology.glue(f)
    out = {"word": str(f.word), "canonical": str(f.canonical), "genus": f.genus,
           "v": m.v, "e": m.e, "maximal": f.is_maximal, "degrees": m.degrees(),
           "map": m.to_json(), "symmetry": symmetry.automorphisms(f).to_json()}
    if f.is_maximal:
        vs = topology.vertex_signs(f)
        out["signs"] = list(vs.signs)
        out["pos"], out["neg"] = vs.counts
    _emit(out)


def cmd_dual(args):
    _emit(topology.dual(_form(args)).to_json())


def cmd_transform(args):
    res = moves.ih_transform(_form(args), args.ih)
    _emit({"word": str(res.result.word), "move_type": res.move_type,
           "new_edge": res.new_edge.base, "canonical": str(res.result.canonical)})


def cmd_reduce(args):
    res = moves.reduce(_form(args), args.vertex)
    _emit({"word": str(res.parent.word), "reduction_type": res.reduction_type,
           "genus": res.parent.genus, "removed_darts": list(res.certificate)})


def cmd_count(args):
    t = counting.count_table(args.genus)
    if args.format == "text":
        print(f"genus {t.genus}: m1={t.m1} m2={t.m2} m3={t.m3} m6={t.m6}")
        for d in (1, 2, 3, 6):
            print(f"  order divisible by {d}: {t.M[d]}   exactly {d}: {t.exact[d]}")
        return
    _emit(t.to_json())


def cmd_table(args):
    rows = counting.surface_table(args.max_genus, args.include_genus_3)
    sys.stdout.write(counting.format_table(rows, "csv" if args.format == "csv" else "text"))


def cmd_enumerate(args):
    cache = None if args.no_cache else census_mod.CensusCache.from_env()
    c = census_mod.enumerate_census(args.genus, args.method, args.jobs,
                                    args.allow_large, cache=cache)
    if args.out:
        census_mod.save(c, args.out)
        _emit(c.metadata())
        return
    if args.format == "text":
        st = census_mod.census_stats(c)
        print(f"genus {c.genus}: {len(c)} classes, mass {c.mass}")
        for d, k in st["exact"].items():
            print(f"  exactly {d} automorphisms: {k}")
    elif args.format == "csv":
        buf = io.StringIO()
        fields = ["genus", "word", "aut_order", "pos", "neg", "r", "s", "t"]
        w = csv.DictWriter(buf, fields, lineterminator="\n")
        w.writeheader()
        for rec in c.records:
            w.writerow(rec.to_json(c.genus))
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(c.to_jsonl())


def cmd_geometry(args):
    geom = geometry.extremal_geometry(args.genus, args.digits)
    out = geom.strings()
    if args.format == "text":
        for k, v in out.items():
            print(f"{k}: {v}")
    else:
        _emit(out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wicks", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def form_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("form", help="form in verbose (a b a' b') or compact (abAB) syntax")
        sp.add_argument("--syntax", choices=["auto", "verbose", "compact"], default="auto")
        sp.set_defaults(func=func)
        return sp

    form_cmd("validate", cmd_validate, "check the Wicks-form conditions")
    form_cmd("info", cmd_info, "genus, glued map, signs and symmetry of a form")
    form_cmd("dual", cmd_dual, "dual one-vertex triangulation of a maximal form")
    sp = form_cmd("transform", cmd_transform, "IH-transformation on an edge")
    sp.add_argument("--ih", required=True, metavar="BASE")
    sp = form_cmd("reduce", cmd_reduce, "reduce at a negative vertex")
    sp.add_argument("--vertex", required=True, type=int, metavar="K")

    sp = sub.add_parser("enumerate", help="census of maximal forms of one genus")
    sp.add_argument("--genus", required=True, type=int)
    sp.add_argument("--method", choices=["construct", "backtrack", "both"], default="construct")
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sp.add_argument("--out")
    sp.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--no-cache", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("count", help="exact masses and surface counts")
    sp.add_argument("--genus", required=True, type=int)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("table", help="number of extremal surfaces per genus")
    sp.add_argument("--max-genus", type=int, default=15)
    sp.add_argument("--format", choices=["text", "csv"], default="text")
    sp.add_argument("--include-genus-3", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("geometry", help="radii and polygon data of extremal surfaces")
    sp.add_argument("--genus", required=True, type=int)
    sp.add_argument("--digits", type=int, default=30)
    sp.add_argument("--format", choices=["json", "text"], default="json")
    sp.set_defaults(func=cmd_geometry)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    try:
        args.func(args)
    except (errors.WicksError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
