import pytest

from argdecide.framework import build_framework, CriterionOrder
from argdecide.lang import lit
from argdecide.daf import primitive

X_R = ("box1", "box2", "box3")
X_2 = ("box4", "box5", "box6")
CRITERIA = ("nearer_robot", "nearer_store", "smaller")

E_R = [lit(s) for s in (
    "smaller(box1,box3)", "nearer_store(box2,box3)",
    "smaller(box2,box3)", "nearer_robot(box1,box2)",
    "nearer_store(box1,box3)", "nearer_robot(box1,box3)",
    "nearer_store(box2,box1)", "nearer_robot(box2,box3)",
)]

E_2 = [lit(s) for s in (
    "smaller(box4,box6)", "nearer_robot(box6,box4)",
    "smaller(box5,box6)", "nearer_robot(box6,box5)",
    "nearer_store(box4,box6)", "same_att(box4,box5)",
    "nearer_store(box5,box6)",
)]

# the orders as the pair sets written out in the running examples
ORDER_R = CriterionOrder.from_pairs([("nearer_robot", "nearer_store"), ("nearer_robot", "smaller"),
                                     ("nearer_store", "smaller")])
ORDER_R_ALT = CriterionOrder.from_pairs([("nearer_store", "nearer_robot"), ("nearer_robot", "smaller"),
                                         ("nearer_store", "smaller")])
ORDER_2 = ORDER_R_ALT
ORDER_2_ALT = ORDER_R

# labelled active arguments: label -> (premise, claim)
ARGS_R = {
    1: ("smaller(box1,box3)", "better(box1,box3)"),
    3: ("smaller(box2,box3)", "better(box2,box3)"),
    5: ("nearer_store(box2,box1)", "better(box2,box1)"),
    7: ("nearer_store(box1,box3)", "better(box1,box3)"),
    9: ("nearer_store(box2,box3)", "better(box2,box3)"),
    11: ("nearer_robot(box1,box2)", "better(box1,box2)"),
    13: ("nearer_robot(box1,box3)", "better(box1,box3)"),
    15: ("nearer_robot(box2,box3)", "better(box2,box3)"),
    2: ("smaller(box1,box3)", "~better(box3,box1)"),
    4: ("smaller(box2,box3)", "~better(box3,box2)"),
    6: ("nearer_store(box2,box1)", "~better(box1,box2)"),
    8: ("nearer_store(box1,box3)", "~better(box3,box1)"),
    10: ("nearer_store(box2,box3)", "~better(box3,box2)"),
    12: ("nearer_robot(box1,box2)", "~better(box2,box1)"),
    14: ("nearer_robot(box1,box3)", "~better(box3,box1)"),
    16: ("nearer_robot(box2,box3)", "~better(box3,box2)"),
}

ARGS_2 = {
    21: ("smaller(box4,box6)", "better(box4,box6)"),
    23: ("smaller(box5,box6)", "better(box5,box6)"),
    25: ("nearer_store(box4,box6)", "better(box4,box6)"),
    27: ("nearer_store(box5,box6)", "better(box5,box6)"),
    29: ("nearer_robot(box6,box4)", "better(box6,box4)"),
    31: ("nearer_robot(box6,box5)", "better(box6,box5)"),
    22: ("smaller(box4,box6)", "~better(box6,box4)"),
    24: ("smaller(box5,box6)", "~better(box6,box5)"),
    26: ("nearer_store(box4,box6)", "~better(box6,box4)"),
    28: ("nearer_store(box5,box6)", "~better(box6,box5)"),
    30: ("nearer_robot(box6,box4)", "~better(box4,box6)"),
    32: ("nearer_robot(box6,box5)", "~better(box5,box6)"),
    34: ("same_att(box4,box5)", "~better(box4,box5)"),
    36: ("same_att(box4,box5)", "~better(box5,box4)"),
}


class Labelled:
    """Look up working-set arguments by their labels in the worked examples."""

    def __init__(self, adf, table):
        self.adf = adf
        self.daf = adf.epistemic.daf
        self.table = table
        index = {(next(iter(a.premises)), a.claim): a for a in self.daf.working}
        self.args = {n: index[(lit(p), lit(c))] for n, (p, c) in table.items()}
        self.labels = {a: n for n, a in self.args.items()}

    def __getitem__(self, n):
        return self.args[n]

    def s(self, n):
        return primitive(self.args[n])

    def label(self, arg):
        return self.labels[arg]


@pytest.fixture
def k_r():
    return Labelled(build_framework(X_R, CRITERIA, ORDER_R, E_R), ARGS_R)


@pytest.fixture
def k_r_alt():
    return Labelled(build_framework(X_R, CRITERIA, ORDER_R_ALT, E_R), ARGS_R)


@pytest.fixture
def k_2():
    return Labelled(build_framework(X_2, CRITERIA, ORDER_2, E_2), ARGS_2)


@pytest.fixture
def k_2_alt():
    return Labelled(build_framework(X_2, CRITERIA, ORDER_2_ALT, E_2), ARGS_2)


# -- acceptance report ---------------------------------------------------------

def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config._acceptance_lines

    def record(ident, ok, detail):
        lines.append(f"{ident} {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split()[0][2:])):
            terminalreporter.write_line(line)
