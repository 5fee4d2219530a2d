import pytest

from jndgroups.catalog import alternating, example_72, load_catalog, symmetric


@pytest.fixture(scope="session")
def catalog():
    return load_catalog()


@pytest.fixture(scope="session")
def small_catalog(catalog):
    return [e for e in catalog if e.order <= 24]


@pytest.fixture(scope="session")
def a5_package():
    from jndgroups.semisimple import compute_automorphisms

    return compute_automorphisms(alternating(5))


@pytest.fixture(scope="session")
def ex72():
    return example_72()


@pytest.fixture(scope="session")
def s5():
    return symmetric(5)


@pytest.fixture(scope="session")
def oracle_groups():
    from oracle_enumeration import enumerate_groups

    return enumerate_groups(24)


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture(scope="session")
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, config):
    rows = config.stash.get(ACCEPTANCE, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(rows):
        terminalreporter.write_line(line[1])
