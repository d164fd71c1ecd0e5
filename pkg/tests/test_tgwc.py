import pytest

from tgwa import parse_element
from tgwa.errors import DegreeError, IndexRangeError, InputError
from tgwa.polyring import RingCtx, RingMap
from tgwa.tgwc import (X, Y, TGWCData, equal_in_A, group_action,
                       ideal_witness, is_in_ideal, multiply, project_to_base,
                       prop33_check, prop33_element, reduce_to_spanning,
                       reduce_word, shapovalov, spanning_monomials, star,
                       validate_tgwc)


def H_of(d):
    return d.ring.gen("H")


def test_validate_example(a2):
    rep = validate_tgwc(a2)
    assert rep.ok
    assert [c.name for c in rep.checks] == [
        "t_nonzero", "t_nonzero", "mu_nonzero", "inverse", "inverse",
        "commuting", "consistency", "mu_symmetric"]


def test_validate_reports_difference():
    R = RingCtx(["H"])
    H = R.gen(0)
    d = TGWCData(R, [RingMap(R, [H + 1], [H - 1]), RingMap(R, [H - 1], [H + 1])], [H, H], {(1, 2): 1})
    rep = validate_tgwc(d)
    assert not rep.ok
    (bad,) = rep.failures()
    assert bad.name == "consistency"
    # H*H - (H+1)(H-1) = 1
    assert bad.difference == R.one()


def test_validate_rank_one():
    R = RingCtx(["H"])
    H = R.gen(0)
    d = TGWCData(R, [RingMap(R, [H + 1], [H - 1])], [H])
    assert validate_tgwc(d).ok


def test_missing_mu_and_bad_index():
    R = RingCtx(["H"])
    H = R.gen(0)
    s = RingMap(R, [H], [H])
    with pytest.raises(InputError):
        TGWCData(R, [s, s], [H, H])
    with pytest.raises(IndexRangeError):
        TGWCData(R, [s, s], [H, H], {(1, 3): 1})


def test_group_action(a2):
    H = H_of(a2)
    assert group_action(a2, (1, 0), H) == H + 1
    assert group_action(a2, (0, 0), H ** 2) == H ** 2
    assert group_action(a2, (1, 1), H) == H
    assert group_action(a2, (-2, 0), H) == H - 2


def test_multiply(a2):
    H = H_of(a2)
    assert multiply(a2, a2.X(1), a2.scalar(H)) == a2.scalar(H + 1) * a2.X(1)
    one = a2.scalar(a2.ring.one())
    e = a2.scalar(H) * a2.X(2)
    assert multiply(a2, one, e) == e
    lhs = (a2.scalar(H) * a2.X(1)) * (a2.scalar(H) * a2.X(2))
    assert lhs == a2.word((1, 2), H * (H + 1))


def test_star(a2):
    H = H_of(a2)
    assert star(a2, a2.X(1)) == a2.Y(1)
    assert star(a2, a2.scalar(H)) == a2.scalar(H)
    # (H X1 X2)* = X2* X1* H = Y2 Y1 H = (sigma1 sigma2)^-1 (H) Y2 Y1 = H Y2 Y1
    assert star(a2, a2.word((1, 2), H)) == a2.word((-2, -1), H)
    a = parse_element(a2, "(H+2)*X(1)*Y(2) - X(2)^2")
    assert star(a2, star(a2, a)) == a


def test_star_needs_symmetric_mu():
    R = RingCtx(["H"])
    H = R.gen(0)
    s = RingMap(R, [H], [H])
    d = TGWCData(R, [s, s], [H, H], {(1, 2): 1, (2, 1): 2})
    with pytest.raises(InputError):
        star(d, d.X(1))


def test_projection_examples(a2):
    H = H_of(a2)
    assert project_to_base(a2, a2.word((-1, 1))) == H
    assert project_to_base(a2, a2.scalar(H ** 2)) == H ** 2
    # Y1 Y2 X1 X2 = Y1 X1 Y2 X2 (mu = 1) = t1 t2
    assert project_to_base(a2, a2.word((-1, -2, 1, 2))) == H * (H + 1)
    with pytest.raises(DegreeError):
        project_to_base(a2, a2.X(1))


def test_projection_with_mu(tq_a2_mu5):
    d = tq_a2_mu5
    t1, t2 = d.t_of(1), d.t_of(2)
    # Y1 Y2 X1 X2: X1 Y2 = mu Y2 X1, so Y2 X1 = mu^-1 X1 Y2
    assert project_to_base(d, d.word((-1, -2, 1, 2))) == (t1 * t2).scale(1 / d.mu(1, 2))


def test_reduce_to_spanning_examples(a2):
    H = H_of(a2)
    # X2 X1 Y2 = mu X2 Y2 X1 = sigma2(t2) X1 = H X1
    assert reduce_to_spanning(a2, a2.word((2, 1, -2))) == a2.word((1,), H)
    # Y_i X_i contracts, Y2 X1 is already a spanning word
    assert reduce_word(a2, (-2, 1)) == (a2.ring.one(), (-2, 1))
    # Y1 X1 X1 = t1 X1 = H X1
    assert reduce_word(a2, (-1, 1, 1)) == (H, (1,))


def test_reduce_rank_three_trace():
    R = RingCtx(["H"])
    H = R.gen(0)
    ident = RingMap(R, [H], [H])
    d = TGWCData(R, [RingMap(R, [H + 1], [H - 1]), ident, ident], [H, R.one(), R.one()],
                 {(1, 2): -1, (1, 3): 1, (2, 3): -1})
    assert validate_tgwc(d).ok
    coeff, word = reduce_word(d, (-1, -3, 2, 1))
    assert word == (-3, 2)
    # Y3 X2 = -X2 Y3, then Y1 X2 Y3 X1 = X2 Y1 X1 Y3 = X2 t1 Y3 = H X2 Y3 = -H Y3 X2
    assert coeff == -H


def test_shapovalov(a2):
    H = H_of(a2)
    assert shapovalov(a2, a2.X(1), a2.X(1)) == H
    assert shapovalov(a2, a2.X(1), a2.X(2)).is_zero()
    assert shapovalov(a2, a2.word((1, 2)), a2.word((1, 2))) == (H + 1) ** 2


def test_spanning_monomials(a2):
    assert spanning_monomials(a2, (1, 1)) == [X(1) + X(2), X(2) + X(1)]
    assert spanning_monomials(a2, (0, 0)) == [()]
    assert spanning_monomials(a2, (2, 1)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert spanning_monomials(a2, (-1, 1)) == [Y(1) + X(2)]


def test_membership_examples(a2):
    serre = parse_element(a2, "X(1)^2*X(2) - 2*X(1)*X(2)*X(1) + X(2)*X(1)^2")
    assert is_in_ideal(a2, serre)
    assert not is_in_ideal(a2, a2.X(1))
    w = ideal_witness(a2, a2.X(1))
    assert w.word == (1,) and w.value == H_of(a2)
    bad = parse_element(a2, "X(1)^2*X(2) - 3*X(1)*X(2)*X(1) + X(2)*X(1)^2")
    assert not is_in_ideal(a2, bad)
    assert is_in_ideal(a2, a2.element())


def test_membership_rejects_inhomogeneous(a2):
    with pytest.raises(DegreeError):
        is_in_ideal(a2, a2.X(1) + a2.X(2))


def test_equal_in_A(a2):
    lhs = parse_element(a2, "X(2)*X(1)^2")
    rhs = parse_element(a2, "2*X(1)*X(2)*X(1) - X(1)^2*X(2)")
    assert equal_in_A(a2, lhs, rhs)
    assert not equal_in_A(a2, lhs, a2.element())


def test_prop33(a2):
    H = H_of(a2)
    # (H-2) - 2(H-1) + H = 0
    assert prop33_check(a2, 2, 1, [1, -2, 1])
    assert prop33_check(a2, 1, 2, [0, 0])
    assert not prop33_check(a2, 1, 2, [1, -3, 1])
    e = prop33_element(a2, 1, 2, [1, -2, 1])
    assert e == parse_element(a2, "X(1)^2*X(2) - 2*X(1)*X(2)*X(1) + X(2)*X(1)^2")
    assert prop33_element(a2, 1, 2, [0, 0, 0]).is_zero()
    assert prop33_check(a2, 1, 2, [H, -2 * H, H])
    with pytest.raises(IndexRangeError):
        prop33_check(a2, 1, 1, [1, 1])


def test_prop33_quantized_weyl(qweyl2):
    # (1, -q1 lambda12) with q1 = 4, lambda12 = 1/2
    assert prop33_check(qweyl2, 1, 2, [1, -2])
    assert not prop33_check(qweyl2, 1, 2, [1, -3])


def test_generic_serre_element(tq_a2):
    from tgwa.scalars import q
    e = prop33_element(tq_a2, 1, 2, [1, -(q + 1 / q), 1])
    assert str(e) == "X(1)^2*X(2) - (q + q^-1)*X(1)*X(2)*X(1) + X(2)*X(1)^2"
    assert is_in_ideal(tq_a2, e)
