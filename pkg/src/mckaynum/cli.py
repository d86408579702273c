"""Command line interface.

Verbs:
  table <file>                        print the exact character table
  bijection <file> --prime p          print the constructed bijection
  verify <file> --prime p             run both verifiers on one group
  corpus [dir] [--report f] [--format text|machine]
                                      run the batch over a directory
                                      (bundled corpus when omitted)
  check-fixture <file> --mode m       check an ingested matrix
"""

import argparse
import sys
from pathlib import Path

from .chartable import character_table, render_table_exact
from .errors import EngineError
from .formats import parse_decomposition_file, parse_group_file
from .mckay import (build_bijection, counterexample_check,
                    verify_corollary_b, verify_theorem_a)
from .runner import bundled_corpus_dir, run_corpus


def _load_group(path):
    spec = parse_group_file(Path(path).read_text())
    return spec, spec.group()


def _cmd_table(args):
    spec, G = _load_group(args.file)
    sys.stdout.write(render_table_exact(character_table(G)))
    return 0


def _cmd_bijection(args):
    spec, G = _load_group(args.file)
    bij = build_bijection(G, args.prime)
    table = character_table(G)
    tn = character_table(bij.normalizer)
    print(f"group {spec.name}: order {G.order}, prime {args.prime},"
          f" normalizer order {bij.normalizer.order}")
    for k, (chi, img) in enumerate(bij.pairs):
        line = (f"Irr(G)[{table.index_of(chi)}] deg {chi.degree}"
                f"  ->  Irr(N)[{tn.index_of(img)}] deg {img.degree}")
        if args.trace:
            line += f"   via {bij.trace[k]}"
        print(line)
    return 0


def _cmd_verify(args):
    spec, G = _load_group(args.file)
    va = verify_theorem_a(G, args.prime)
    vb = verify_corollary_b(G, args.prime)
    print(f"group {spec.name}: order {G.order}, prime {args.prime}")
    print(f"bijection: {va['pairs']} p'-degree irreducibles on each side")
    for c in va["checks"]:
        mark = "ok" if c["equal"] else "FAIL"
        print(f"  d[chi={c['chi']}, tau={c['tau']}] = {c['d_group']}"
              f"  vs  d[image={c['image']}] = {c['d_normalizer']}  [{mark}]")
    print(f"decomposition numbers preserved: {va['all_equal']}")
    print(f"trivial-column values: {vb['column']}")
    print(f"ones {vb['ones']}, orbits on P/P' {vb['orbits_on_quotient']},"
          f" orbits on linear characters {vb['orbits_on_linears']}")
    print(f"counting identity holds: {vb['ok']}")
    return 0 if va["all_equal"] and vb["ok"] else 1


def _cmd_corpus(args):
    directory = args.dir if args.dir is not None else None
    report = run_corpus(directory)
    text = (report.to_machine() if args.format == "machine"
            else report.to_text())
    if args.report:
        Path(args.report).write_text(text)
        print(f"report written to {args.report}")
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


def _cmd_check_fixture(args):
    record = parse_decomposition_file(Path(args.file).read_text())
    group = None
    if args.mode != "zero-exists":
        group = _find_group_for(record.label, Path(args.file).parent)
        if group is None:
            raise EngineError(f"no group file named {record.label!r} found"
                              f" next to the fixture or in the bundled"
                              f" corpus; mode {args.mode} needs one")
    rep = counterexample_check(record, args.mode, group)
    print(f"fixture {record.label} p={record.prime} mode {args.mode}")
    print(f"record d-column (p'-degree rows): {rep['record_column']}")
    if rep["computed_column"] is not None:
        print(f"computed normalizer column:     {rep['computed_column']}")
    print(f"{rep['detail']}: {'ok' if rep['ok'] else 'FAIL'}")
    return 0 if rep["ok"] else 1


def _find_group_for(label, sibling_dir):
    for base in (sibling_dir, bundled_corpus_dir()):
        for path in sorted(Path(base).glob("*.group")):
            try:
                spec = parse_group_file(path.read_text())
            except EngineError:
                continue
            if spec.name == label:
                return spec.group()
    return None


def build_parser():
    ap = argparse.ArgumentParser(
        prog="mckaynum",
        description="exact character tables and Sylow-normalizer"
                    " bijections for permutation groups")
    sub = ap.add_subparsers(dest="verb", required=True)

    t = sub.add_parser("table", help="print the exact character table")
    t.add_argument("file", help="group file")
    t.set_defaults(fn=_cmd_table)

    b = sub.add_parser("bijection", help="construct and print the bijection")
    b.add_argument("file", help="group file")
    b.add_argument("--prime", type=int, required=True)
    b.add_argument("--trace", action="store_true",
                   help="show the construction path per character")
    b.set_defaults(fn=_cmd_bijection)

    v = sub.add_parser("verify", help="run both verifiers on one group")
    v.add_argument("file", help="group file")
    v.add_argument("--prime", type=int, required=True)
    v.set_defaults(fn=_cmd_verify)

    c = sub.add_parser("corpus", help="run the batch over a directory")
    c.add_argument("dir", nargs="?", default=None,
                   help="corpus directory (bundled corpus when omitted)")
    c.add_argument("--report", help="write the report to this path")
    c.add_argument("--format", choices=("text", "machine"), default="text")
    c.set_defaults(fn=_cmd_corpus)

    f = sub.add_parser("check-fixture", help="check an ingested matrix")
    f.add_argument("file", help="decomposition matrix file")
    f.add_argument("--mode", required=True,
                   choices=("no-equality", "ge-exists", "zero-exists"))
    f.set_defaults(fn=_cmd_check_fixture)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except EngineError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
