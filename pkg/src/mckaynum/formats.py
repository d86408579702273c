"""Line-oriented input formats.

Two file kinds are understood: group files (name, degree, generators
in cycle notation, primes to test, optional expected values)
and decomposition-matrix files for groups whose tables are ingested as
data rather than computed.

Both grammars are key = value per line, "#" starts a comment, blank
lines are skipped.  Keys may come in any order; repeated keys (gen,
prime, row) keep their order of appearance.
"""

from dataclasses import dataclass, field

from .errors import BadFormat, MalformedPermutation, ShapeMismatch
from .mckay import DecompositionRecord
from .permgroup import PermGroup, parse_cycles, render_cycles


@dataclass(frozen=True)
class GroupSpec:
    """A parsed group file: generators plus the primes to run it at."""

    name: str
    degree: int
    generators: tuple
    primes: tuple
    expectations: dict = field(default_factory=dict)

    def group(self):
        return PermGroup(self.degree, list(self.generators))


def _split_line(raw, ln):
    line = raw.split("#", 1)[0].strip()
    if not line:
        return None
    if "=" not in line:
        raise BadFormat(f"line {ln}: expected 'key = value', got {line!r}")
    key, _, val = line.partition("=")
    key = key.strip()
    val = val.strip()
    if not key:
        raise BadFormat(f"line {ln}: empty key")
    if not val:
        raise BadFormat(f"line {ln}: empty value for {key!r}")
    return key, val


def _parse_int(val, ln, what):
    try:
        return int(val)
    except ValueError:
        raise BadFormat(f"line {ln}: {what} must be an integer, got {val!r}")


def parse_group_file(text):
    name = None
    degree = None
    gen_lines = []
    primes = []
    expectations = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        item = _split_line(raw, ln)
        if item is None:
            continue
        key, val = item
        if key == "name":
            if name is not None:
                raise BadFormat(f"line {ln}: duplicate name")
            name = val
        elif key == "degree":
            if degree is not None:
                raise BadFormat(f"line {ln}: duplicate degree")
            degree = _parse_int(val, ln, "degree")
            if degree < 1:
                raise BadFormat(f"line {ln}: degree must be positive")
        elif key == "gen":
            gen_lines.append((ln, val))
        elif key == "prime":
            p = _parse_int(val, ln, "prime")
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                raise BadFormat(f"line {ln}: {p} is not prime")
            primes.append(p)
        elif key.startswith("expect."):
            ekey = key[len("expect."):]
            if not ekey:
                raise BadFormat(f"line {ln}: empty expectation key")
            if ekey in expectations:
                raise BadFormat(f"line {ln}: duplicate expectation {ekey!r}")
            expectations[ekey] = _parse_int(val, ln, f"expect.{ekey}")
        else:
            raise BadFormat(f"line {ln}: unknown key {key!r}")
    if name is None:
        raise BadFormat("missing required key 'name'")
    if degree is None:
        raise BadFormat("missing required key 'degree'")
    gens = []
    for ln, val in gen_lines:
        # out-of-range points keep their own error type; anything else
        # malformed becomes a BadFormat tagged with the offending line
        try:
            gens.append(parse_cycles(val, degree))
        except MalformedPermutation as exc:
            raise BadFormat(f"line {ln}: {exc}")
    return GroupSpec(name=name, degree=degree, generators=tuple(gens),
                     primes=tuple(primes), expectations=expectations)


def render_group_file(spec):
    """Canonical serialization; parse(render(s)) == s and rendering is
    idempotent, so files written in this form round-trip byte-exactly."""
    lines = [f"name = {spec.name}", f"degree = {spec.degree}"]
    lines.extend(f"gen = {render_cycles(g)}" for g in spec.generators)
    lines.extend(f"prime = {p}" for p in spec.primes)
    lines.extend(f"expect.{k} = {spec.expectations[k]}"
                 for k in sorted(spec.expectations))
    return "\n".join(lines) + "\n"


def _parse_int_row(val, ln, what):
    out = []
    for tok in val.split():
        n = _parse_int(tok, ln, f"{what} entry")
        if n < 0:
            raise BadFormat(f"line {ln}: negative {what} entry {n}")
        out.append(n)
    return out


def parse_decomposition_file(text):
    label = None
    prime = None
    ordinary = None
    brauer = None
    rows = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        item = _split_line(raw, ln)
        if item is None:
            continue
        key, val = item
        if key == "group":
            if label is not None:
                raise BadFormat(f"line {ln}: duplicate group")
            label = val
        elif key == "prime":
            if prime is not None:
                raise BadFormat(f"line {ln}: duplicate prime")
            prime = _parse_int(val, ln, "prime")
        elif key == "ordinary":
            if ordinary is not None:
                raise BadFormat(f"line {ln}: duplicate ordinary")
            ordinary = _parse_int_row(val, ln, "ordinary")
            if any(d < 1 for d in ordinary):
                raise BadFormat(f"line {ln}: ordinary degrees must be positive")
        elif key == "brauer":
            if brauer is not None:
                raise BadFormat(f"line {ln}: duplicate brauer")
            brauer = _parse_int_row(val, ln, "brauer")
            if any(d < 1 for d in brauer):
                raise BadFormat(f"line {ln}: brauer degrees must be positive")
        elif key == "row":
            rows.append((ln, _parse_int_row(val, ln, "row")))
        else:
            raise BadFormat(f"line {ln}: unknown key {key!r}")
    for req, what in ((label, "group"), (prime, "prime"),
                      (ordinary, "ordinary"), (brauer, "brauer")):
        if req is None:
            raise BadFormat(f"missing required key {what!r}")
    if len(rows) != len(ordinary):
        raise ShapeMismatch(f"{len(rows)} rows for {len(ordinary)} "
                            "ordinary degrees")
    for ln, row in rows:
        if len(row) != len(brauer):
            raise ShapeMismatch(f"line {ln}: row has {len(row)} entries, "
                                f"expected {len(brauer)}")
    return DecompositionRecord(label=label, prime=prime,
                               ordinary=tuple(ordinary),
                               brauer=tuple(brauer),
                               matrix=tuple(tuple(r) for _, r in rows))
