"""Batch verification over a directory of group and matrix files.

Every *.group file is parsed, its character table built and re-checked
against both orthogonality relations, and for each declared prime the
bijection is constructed and both verifiers run.  Every *.decomp file
is parsed and checked in the requested counterexample mode against the
computed Sylow-normalizer column of the matching group.  Per-file
errors are collected into the report; one bad file never aborts the
batch.

The machine report carries no wall times or absolute paths, so two
consecutive runs over the same directory serialize byte-identically.
Timings are kept separately for the text rendering.
"""

import json
import time
from fractions import Fraction
from pathlib import Path

from .chartable import character_table, inner_product, irr_pprime
from .errors import EngineError
from .formats import parse_decomposition_file, parse_group_file
from .mckay import (build_bijection, counterexample_check,
                    verify_corollary_b, verify_theorem_a)

SCHEMA = "mckaynum-run-report/1"


def bundled_corpus_dir():
    return Path(__file__).resolve().parent / "corpus"


class RunReport:
    """Outcome of a corpus run.

    `data` is plain JSON material; `to_machine` is deterministic
    (sorted keys, no timing or path noise).  `to_text` is for humans
    and includes per-file wall times.
    """

    def __init__(self, data, timings):
        self.data = data
        self.timings = timings

    @property
    def ok(self):
        return self.data["ok"]

    def to_machine(self):
        return json.dumps(self.data, indent=2, sort_keys=True) + "\n"

    def to_text(self):
        d = self.data
        lines = [f"corpus report ({d['schema']})"]
        for g in d["groups"]:
            flat = dict(g["checks"])
            for pr in g["primes"]:
                flat.update(pr["checks"])
            mark = "ok" if all(flat.values()) else "FAIL"
            secs = self.timings.get(g["file"], 0.0)
            lines.append(f"group {g['label']} ({g['file']}): order"
                         f" {g['order']}, {g['classes']} classes"
                         f" [{mark}] {secs:.2f}s")
            for name, val in sorted(g["checks"].items()):
                if not val:
                    lines.append(f"  check {name}: FAIL")
            for pr in g["primes"]:
                pmark = "ok" if all(pr["checks"].values()) else "FAIL"
                extra = " (degenerate)" if pr["degenerate"] else ""
                lines.append(
                    f"  p={pr['prime']}{extra}: {pr['pairs_count']} <->"
                    f" {pr['pairs_count']} irreducibles, ones"
                    f" {pr['ones']}, orbits {pr['orbits_on_quotient']}"
                    f" [{pmark}]")
                for name, val in sorted(pr["checks"].items()):
                    if not val:
                        lines.append(f"    check {name}: FAIL")
        for f in d["fixtures"]:
            mark = "ok" if f["ok"] else "FAIL"
            lines.append(f"fixture {f['file']}: {f['label']} p={f['prime']}"
                         f" mode {f['mode']} [{mark}] {f['detail']}")
        for e in d["errors"]:
            lines.append(f"error {e['file']}: {e['error']}: {e['message']}")
        c = d["counts"]
        verdict = "ALL OK" if d["ok"] else "FAILURES PRESENT"
        lines.append(f"summary: {c['groups']} groups, {c['prime_runs']}"
                     f" prime runs, {c['fixtures']} fixtures,"
                     f" {c['errors']} errors -> {verdict}")
        return "\n".join(lines) + "\n"


def orthogonality_checks(table):
    """Re-verify both orthogonality relations exactly.  Returns
    (rows_ok, columns_ok)."""
    irr = table.irreducibles
    k = len(irr)
    order = table.group.order
    sizes = table.classes.sizes
    rows_ok = True
    for i in range(k):
        for j in range(i, k):
            want = Fraction(1 if i == j else 0)
            if inner_product(irr[i], irr[j]) != want:
                rows_ok = False
    cols_ok = True
    for a in range(k):
        for b in range(a, k):
            s = irr[0].values[a] * irr[0].values[b].conjugate()
            for chi in irr[1:]:
                s = s + chi.values[a] * chi.values[b].conjugate()
            want = Fraction(order, sizes[a]) if a == b else Fraction(0)
            if s.as_rational() != want:
                cols_ok = False
    return rows_ok, cols_ok


def _group_entry(path, consumed_by_file):
    spec = parse_group_file(path.read_text())
    G = spec.group()
    table = character_table(G)
    degrees = [ch.degree for ch in table.irreducibles]
    checks = {}
    rows_ok, cols_ok = orthogonality_checks(table)
    checks["orthogonality_rows"] = rows_ok
    checks["orthogonality_columns"] = cols_ok
    checks["sum_of_squares"] = sum(d * d for d in degrees) == G.order
    consumed = set()
    if "order" in spec.expectations:
        checks["expect_order"] = spec.expectations["order"] == G.order
        consumed.add("order")
    if "classes" in spec.expectations:
        checks["expect_classes"] = (spec.expectations["classes"]
                                    == len(table.classes.representatives))
        consumed.add("classes")
    primes_out = []
    for p in spec.primes:
        primes_out.append(_prime_entry(spec, G, table, p, consumed))
    entry = {
        "file": path.name, "label": spec.name, "order": G.order,
        "classes": len(table.classes.representatives),
        "degrees": degrees, "checks": checks, "primes": primes_out,
    }
    leftover = sorted(set(spec.expectations) - consumed)
    if leftover:
        checks["expectations_recognized"] = False
        entry["unrecognized_expectations"] = leftover
    consumed_by_file[path.name] = (spec, G)
    return entry


def _prime_entry(spec, G, table, p, consumed):
    degenerate = G.order % p != 0
    bij = build_bijection(G, p)
    tn = character_table(bij.normalizer)
    va = verify_theorem_a(G, p)
    vb = verify_corollary_b(G, p)
    checks = {
        "mckay_count": (len(irr_pprime(table, p))
                        == len(irr_pprime(tn, p))),
        "theorem_a": va["all_equal"],
        "corollary_b": vb["ok"],
        "brauer_orbit_lemma": vb["brauer_lemma_matches"],
    }
    mkey, okey = f"mckay_p{p}", f"ones_p{p}"
    if mkey in spec.expectations:
        checks["expect_mckay"] = spec.expectations[mkey] == va["pairs"]
        consumed.add(mkey)
    if okey in spec.expectations:
        checks["expect_ones"] = spec.expectations[okey] == vb["ones"]
        consumed.add(okey)
    return {
        "prime": p, "degenerate": degenerate,
        "pairs_count": va["pairs"],
        "normalizer_order": va["normalizer_order"],
        "ones": vb["ones"],
        "orbits_on_quotient": vb["orbits_on_quotient"],
        "pairs": [[table.index_of(chi), tn.index_of(img)]
                  for chi, img in bij.pairs],
        "trace": list(bij.trace),
        "checks": checks,
    }


def _fixture_entry(path, mode, groups_by_label):
    record = parse_decomposition_file(path.read_text())
    group = None
    group_file = None
    if mode != "zero-exists":
        hit = groups_by_label.get(record.label)
        if hit is None:
            raise EngineError(f"no group file named {record.label!r}"
                              f" available for fixture {path.name}")
        group_file, group = hit
    rep = counterexample_check(record, mode, group)
    return {
        "file": path.name, "label": record.label, "prime": record.prime,
        "mode": mode, "group_file": group_file,
        "record_column": list(rep["record_column"]),
        "computed_column": (None if rep["computed_column"] is None
                            else list(rep["computed_column"])),
        "ok": rep["ok"], "detail": rep["detail"],
    }


def run_corpus(directory=None, fixture_mode="no-equality"):
    base = Path(directory) if directory is not None else bundled_corpus_dir()
    group_paths = sorted(base.glob("*.group"))
    decomp_paths = sorted(base.glob("*.decomp"))
    groups = []
    fixtures = []
    errors = []
    timings = {}
    built = {}
    for path in group_paths:
        t0 = time.monotonic()
        try:
            groups.append(_group_entry(path, built))
        except EngineError as exc:
            errors.append({"file": path.name,
                           "error": type(exc).__name__,
                           "message": str(exc)})
        timings[path.name] = time.monotonic() - t0
    groups_by_label = {spec.name: (name, G)
                       for name, (spec, G) in built.items()}
    if directory is not None:
        # fixtures may name a group that only the bundled corpus carries
        for path in sorted(bundled_corpus_dir().glob("*.group")):
            try:
                spec = parse_group_file(path.read_text())
            except EngineError:
                continue
            groups_by_label.setdefault(spec.name, (path.name, spec.group()))
    for path in decomp_paths:
        t0 = time.monotonic()
        try:
            fixtures.append(_fixture_entry(path, fixture_mode,
                                           groups_by_label))
        except EngineError as exc:
            errors.append({"file": path.name,
                           "error": type(exc).__name__,
                           "message": str(exc)})
        timings[path.name] = time.monotonic() - t0
    all_checks = []
    for g in groups:
        all_checks.extend(g["checks"].values())
        for pr in g["primes"]:
            all_checks.extend(pr["checks"].values())
    all_checks.extend(f["ok"] for f in fixtures)
    data = {
        "schema": SCHEMA,
        "groups": groups,
        "fixtures": fixtures,
        "errors": errors,
        "counts": {
            "groups": len(groups),
            "prime_runs": sum(len(g["primes"]) for g in groups),
            "fixtures": len(fixtures),
            "errors": len(errors),
        },
        "ok": bool(all(all_checks) and not errors),
    }
    return RunReport(data, timings)
