import pytest

from localheat import PrefixBounds, validate_instance

CRITERIA = []


def w1_data():
    return {
        "horizon": 4,
        "heat_per_run": 2,
        "demand": [1, 1, 1, 1],
        "price": [3, 1, 4, 2],
        "lower": [0, 0, 0, 0, 0],
        "upper": [0, 3, 3, 3, 3],
    }


@pytest.fixture
def w1():
    return validate_instance(w1_data())


@pytest.fixture
def w1_bounds():
    return PrefixBounds.from_sequences([0, 1, 1, 2, 2], [0, 1, 2, 3, 3])


@pytest.fixture
def w2():
    return validate_instance(
        {
            "horizon": 2,
            "heat_per_run": 1,
            "demand": [0, 0],
            "price": [-5, 3],
            "lower": [0, 0, 0],
            "upper": [0, 1, 1],
        }
    )


@pytest.fixture
def short_of_heat():
    # demand 2 in the first interval cannot be met by one run of H=1
    return validate_instance(
        {
            "horizon": 2,
            "heat_per_run": 1,
            "demand": [2, 0],
            "price": [1, 1],
            "lower": [0, 0, 0],
            "upper": [0, 5, 5],
        }
    )


@pytest.fixture
def criterion():
    def record(name, passed, detail=""):
        CRITERIA.append((name, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in CRITERIA:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"{status}  {name}  {detail}")
