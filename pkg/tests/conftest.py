import itertools

import pytest
from hypothesis import settings

from mermin_ovoid import mermin, pauli

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def bits_span(vectors):
    """All vectors reachable as GF(2) combinations, by brute force over coefficients."""
    out = set()
    for coeffs in itertools.product((0, 1), repeat=len(vectors)):
        acc = 0
        for c, v in zip(coeffs, vectors):
            if c:
                acc ^= v
        out.add(acc)
    return out


@pytest.fixture(scope="session")
def paper():
    return mermin.paper_pentagram()


@pytest.fixture(scope="session")
def three_qubit_paulis():
    return pauli.all_observables(3)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
