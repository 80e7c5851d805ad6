"""Shared fixture corpus for the summation property suites.

Each entry is (source, variable, parameters).  GOSPER_SUMMABLE terms must
yield verifying certificates; GOSPER_NOT_SUMMABLE must be refused with a
stage; ZEILBERGER_FIXTURES carry the expected order plus sampling hints.
"""

import pytest

# summand, variable, parameters
GOSPER_SUMMABLE = [
    ("k", "k", ()),
    ("k^2", "k", ()),
    ("2*k + 1", "k", ()),
    ("k*factorial(k)", "k", ()),
    ("2^k", "k", ()),
    ("k*2^k", "k", ()),
    ("(-1)^k*(2*k+1)", "k", ()),
    ("1/(k*(k+1))", "k", ()),
    ("1/((k+1)*(k+2))", "k", ()),
    ("binomial(2*k,k)/4^k", "k", ()),
    ("1/(k*(k+3))", "k", ()),
    ("(4*k+1)*factorial(k)/factorial(2*k+1)", "k", ()),
    ("(-1)^i*catalan(i)*binomial(i+1,s-i)", "i", ("s",)),
]

# summand, variable, parameters, expected failing stage
GOSPER_NOT_SUMMABLE = [
    ("1/k", "k", (), "key_equation"),
    ("factorial(k)", "k", (), "degree_bound"),
    ("binomial(n,k)", "k", ("n",), "degree_bound"),
    ("1/(k^2)", "k", (), "key_equation"),
    ("k*factorial(k)/factorial(k+2)", "k", (), "key_equation"),
]

# summand, sumvar, recvar, extra params, expected order, param samples
ZEILBERGER_FIXTURES = [
    ("binomial(n,k)", "k", "n", (), 1, {}),
    ("1", "k", "n", (), 1, {}),
    ("binomial(n,k)^2", "k", "n", (), 1, {}),
    ("binomial(n,k)^3", "k", "n", (), 2, {}),
    ("binomial(n,k)*2^k", "k", "n", (), 1, {}),
    ("binomial(2*n,k)", "k", "n", (), 1, {}),
    # certificate pole sits exactly on the k = n+1 boundary: exercises the
    # bridged (limit-free) boundary evaluation during numeric replay
    ("binomial(l-m+k, m-k)", "k", "m", ("l",), 1, {"l": [60, 61, 62]}),
    (
        "(-1)^k*catalan(k)*binomial(l-m+k,m-k)/binomial(l-m-1,m)",
        "k",
        "m",
        ("l",),
        1,
        {"l": [41, 43, 47]},
    ),
]


@pytest.fixture(scope="session")
def paper_identity1_term():
    from catalemma import termparse as tp

    return tp.parse_term("(-1)^i*catalan(i)*binomial(i+1,s-i)", "i", ("s",))


@pytest.fixture(scope="session")
def paper_identity3_term():
    from catalemma import termparse as tp

    return tp.parse_term(
        "(-1)^k*catalan(k)*binomial(l-m+k,m-k)/binomial(l-m-1,m)", "k", ("m", "l")
    )
