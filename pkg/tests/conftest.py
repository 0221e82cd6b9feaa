import random
from fractions import Fraction

import pytest

import leibnizalg as L

# one line per acceptance criterion, echoed after the run (see
# test_acceptance.report); kept here so the summary hook sees them
CRITERION_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def sl2():
    return L.make_sl2()


@pytest.fixture
def r2():
    return L.make_r2()


@pytest.fixture
def prefamily():
    return L.make_L_prefamily()


def random_poly(rng: random.Random, params: tuple[str, ...]) -> L.Poly:
    total = L.ZERO
    for _ in range(rng.randint(1, 3)):
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        term = L.Poly.const(coeff)
        for _ in range(rng.randint(0, 2) if params else 0):
            term = term * L.Poly.param(rng.choice(params))
        total = total + term
    return total


def random_table(rng: random.Random) -> L.AlgebraTable:
    """A random small table; not Leibniz in general, only well-formed."""
    dim = rng.randint(1, 5)
    params = tuple(f"p{i}" for i in range(rng.randint(0, 2)))
    basis = tuple(f"b{i}" for i in range(dim))
    products: dict[tuple[str, str], dict[str, L.Poly]] = {}
    for _ in range(rng.randint(0, dim * dim)):
        pair = (rng.choice(basis), rng.choice(basis))
        coords = {
            sym: random_poly(rng, params)
            for sym in rng.sample(basis, rng.randint(1, dim))
        }
        products[pair] = coords
    return L.AlgebraTable.from_products("random_table", basis, products, params=params)


def constant_fixture_tables() -> list[L.AlgebraTable]:
    """Every constant table the suite treats as a known-good Leibniz algebra."""
    tables = [
        L.make_sl2(),
        L.make_r2(),
        L.make_abelian(1),
        L.make_abelian(4),
        L.make_direct_sum(L.make_sl2(), L.make_r2()),
        L.make_direct_sum(L.make_r2(), L.make_abelian(1)),
    ]
    for m in (0, 1, 2, 4):
        for a in (0, 1, -2, Fraction(7, 3)):
            tables.append(L.make_module_extension(m, a))
    for m in (1, 2, 3):
        names, e, f, h = L.make_sl2_module(m)
        tables.append(L.make_dzhumadildaev(L.make_sl2(), names, {"e": e, "f": f, "h": h}))
    for l, mu, a in ((1, 0, 1), (2, 3, 1), (0, 1, 0), (0, 1, 1), (0, 0, -5), (0, 4, 2)):
        tables.append(L.make_L_family(l, mu, a))
    return tables
