"""Shared fixtures: the worked example programs and scopes used throughout."""

import pytest

from aggsolve import Scope, parse_program, parse_rule

SUM_LT_RULE = "p(1) :- #sum{X : q(X), not r(X)} < 1."
NEG_SUM_GE_RULE = "p(1) :- not #sum{X : q(X), not r(X)} >= 1."
COMPANY_CONTROL_RULE = (
    "controls(C1,C3) :- company(C1), company(C3), #sum{P,C2 : ctrStk(C1,C2,C3,P)} > 50."
)
PROBE_CONTEXT = "q(1). q(-X) :- p(X). :- not p(1)."
DISJOINT_CONSTRAINT = ":- q(X), r(X)."


@pytest.fixture
def sum_lt_program():
    return parse_program(SUM_LT_RULE)


@pytest.fixture
def neg_sum_ge_program():
    return parse_program(NEG_SUM_GE_RULE)


@pytest.fixture
def company_control_rule():
    return parse_rule(COMPANY_CONTROL_RULE)


@pytest.fixture
def probe_context():
    return parse_program(PROBE_CONTEXT)


@pytest.fixture
def disjoint_constraint():
    return parse_program(DISJOINT_CONSTRAINT)


@pytest.fixture
def unit_scope():
    return Scope((), 1, 1)


@pytest.fixture
def signed_scope():
    return Scope((), -1, 1)
