import pytest

from galois_hartley import make_field, make_plan, make_trig_context

QUINTIC_MODULUS = "x^5+x^4+x^2+1"

# (label, p, r, modulus, N or alpha)
TRIG_CONTEXTS = [
    ("GF(7) alpha=3", 7, None, {"alpha": 3}),
    ("GF(11) N=10", 11, None, {"N": 10}),
    ("GF(19) N=3", 19, None, {"N": 3}),
    ("GF(19) N=6", 19, None, {"N": 6}),
    ("GF(19) N=9", 19, None, {"N": 9}),
    ("GF(19) N=18", 19, None, {"N": 18}),
    ("GF(3^5) N=11", 3, QUINTIC_MODULUS, {"N": 11}),
    ("GF(3^5) N=22", 3, QUINTIC_MODULUS, {"N": 22}),
]


def build_trig_context(p, modulus, kw):
    host = make_field(p, 5, modulus) if modulus else make_field(p)
    return make_trig_context(host, **kw)


@pytest.fixture(scope="session")
def gf7():
    return make_field(7)


@pytest.fixture(scope="session")
def gf243():
    return make_field(3, 5, QUINTIC_MODULUS)


@pytest.fixture(scope="session")
def plan7():
    return make_plan(make_field(7), alpha=3)


@pytest.fixture(scope="session")
def plan243():
    return make_plan(make_field(3), 5, N=11, ext_modulus=QUINTIC_MODULUS)


PLAN_BUILDERS = {
    "GF(7) N=6": lambda: make_plan(make_field(7), alpha=3),
    "GF(19) N=9": lambda: make_plan(make_field(19), N=9),
    "GF(3)->GF(3^5) N=11": lambda: make_plan(make_field(3), 5, N=11, ext_modulus=QUINTIC_MODULUS),
    "GF(3)->GF(3^5) N=22": lambda: make_plan(make_field(3), 5, N=22, ext_modulus=QUINTIC_MODULUS),
    "GF(3^3)->GF(3^9) N=13": lambda: make_plan(make_field(3, 3), 3, N=13),
}


@pytest.fixture(scope="session")
def plans():
    return {label: build() for label, build in PLAN_BUILDERS.items()}


@pytest.fixture(scope="session", params=list(PLAN_BUILDERS))
def any_plan(request, plans):
    return plans[request.param]


def pytest_terminal_summary(terminalreporter):
    from _report import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
