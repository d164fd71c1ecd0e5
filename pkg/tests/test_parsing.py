import pytest

from tgwa.constructions import build_type_A2_example
from tgwa.errors import IndexRangeError, ParseError, SpecValidationError
from tgwa.parsing import (parse_element, parse_polynomial, parse_scalar,
                          parse_tgwc_spec, print_tgwc_spec)
from tgwa.polyring import RingCtx
from tgwa.scalars import QQ, QQ_q, q

A2 = """\
field Q
vars H
sigma 1: H -> H + 1
sigma_inv 1: H -> H - 1
sigma 2: H -> H - 1
sigma_inv 2: H -> H + 1
t 1: H
t 2: H + 1
mu 1 2: 1
"""


def test_scalars():
    assert parse_scalar("-3/4 + 1") == QQ("1/4")
    assert parse_scalar("2^-2") == QQ("1/4")
    assert parse_scalar("(q^2 - 1)/(q - 1)", QQ_q) == q + 1
    with pytest.raises(ParseError):
        parse_scalar("q")
    with pytest.raises(ParseError):
        parse_scalar("1/0")


def test_polynomials():
    R = RingCtx(["a", "b"])
    a, b = R.gens()
    assert parse_polynomial("(a + b)^2 / 2", R) == (a + b) ** 2 / 2
    with pytest.raises(ParseError):
        parse_polynomial("1/a", R)
    with pytest.raises(ParseError):
        parse_polynomial("a^-1", R)
    with pytest.raises(ParseError):
        parse_polynomial("c", R)


def test_elements(a2):
    H = a2.ring.gen(0)
    e = parse_element(a2, "H*X(1) - Y(2)*X(1)/2")
    assert e == a2.word((1,), H) - a2.word((-2, 1), 1 / QQ(2))
    assert parse_element(a2, "X(1)^2") == a2.word((1, 1))


@pytest.mark.parametrize("text, message", [
    ("X(1)^0", "malformed power"),
    ("X(1)^-1", "malformed power"),
    ("X(1)/X(2)", "can only divide by a scalar"),
    ("X(1) +", "unexpected"),
    ("X(1) $ 2", "unexpected character"),
])
def test_element_errors(a2, text, message):
    with pytest.raises(ParseError) as info:
        parse_element(a2, text)
    assert message in str(info.value)


def test_error_positions(a2):
    with pytest.raises(ParseError) as info:
        parse_element(a2, "X(1) $ 2")
    assert (info.value.line, info.value.column) == (1, 6)


def test_index_out_of_range(a2):
    with pytest.raises(IndexRangeError):
        parse_element(a2, "X(3)")


def test_spec_round_trip():
    d = parse_tgwc_spec(A2)
    assert d == build_type_A2_example()
    assert parse_tgwc_spec(print_tgwc_spec(d)) == d


def test_spec_comments_and_fixed_generators():
    text = "# header\nfield Q\nvars a, b\nsigma 1: a -> a + 1  # b fixed\nsigma_inv 1: a -> a - 1\nt 1: a\n"
    d = parse_tgwc_spec(text)
    b = d.ring.gen("b")
    assert d.sigma_of(1)(b) == b


@pytest.mark.parametrize("text, message", [
    ("vars H\n", "missing field declaration"),
    ("field R\n", "unknown field"),
    ("field Q\nsigma 1: H -> H\n", "vars must be declared before sigma"),
    (A2 + "mu 1 2: 3\n", "mu pair declared twice with conflicting values"),
    (A2.replace("t 2: H + 1\n", ""), "missing t 2"),
    (A2.replace("sigma_inv 2: H -> H + 1\n", ""), "needs both sigma and sigma_inv"),
    (A2 + "frobnicate\n", "unknown directive"),
    (A2.replace("mu 1 2: 1", "mu 1 2: 0"), "mu must be nonzero"),
])
def test_spec_errors(text, message):
    with pytest.raises(ParseError) as info:
        parse_tgwc_spec(text)
    assert message in str(info.value)


def test_spec_duplicate_equal_mu_is_fine():
    assert parse_tgwc_spec(A2 + "mu 2 1: 1\n") == build_type_A2_example()


def test_spec_validation_failure():
    bad = A2.replace("t 2: H + 1", "t 2: H")
    with pytest.raises(SpecValidationError) as info:
        parse_tgwc_spec(bad)
    assert "consistency" in str(info.value)
    assert parse_tgwc_spec(bad, validate=False).t_of(2) == parse_tgwc_spec(A2).t_of(1)
