import pytest

from mckaynum.formats import parse_group_file
from mckaynum.runner import bundled_corpus_dir

# filled by the acceptance module; echoed after the run so the verdict
# per criterion is visible in plain pytest output
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus_specs():
    specs = {}
    for path in sorted(bundled_corpus_dir().glob("*.group")):
        spec = parse_group_file(path.read_text())
        specs[spec.name] = spec
    return specs


@pytest.fixture(scope="session")
def groups(corpus_specs):
    """One shared PermGroup per corpus entry; character tables memoize
    on the object, so every test reuses the same computations."""
    return {name: spec.group() for name, spec in corpus_specs.items()}


@pytest.fixture(scope="session")
def solvable_pairs(corpus_specs):
    """(label, prime) for every declared prime in the corpus."""
    out = []
    for name in sorted(corpus_specs):
        for p in corpus_specs[name].primes:
            out.append((name, p))
    return out
