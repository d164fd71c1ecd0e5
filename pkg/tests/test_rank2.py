import pytest

from tgwa import parse_element
from tgwa.errors import InputError, UnsupportedShapeError
from tgwa.polyring import RingCtx, RingMap
from tgwa.rank2 import (NormalForm, SerrePair, check_P1a, check_P1b, check_P2,
                        inversion_length, presentation, reduce_rank2,
                        serre_pair_from_cartan)
from tgwa.scalars import q
from tgwa.tgwc import TGWCData, equal_in_A, validate_tgwc


def p1b_failing():
    # sigma_1(t_1) = 2H is an associate of t_1 = H
    R = RingCtx(["H"])
    H = R.gen(0)
    return TGWCData(R, [RingMap(R, [H * 2], [H / 2]), RingMap.identity(R)], [H, R.one()], {(1, 2): 1})


def test_inversion_length():
    assert inversion_length((2, 1)) == 1
    assert inversion_length((1, 1, 2)) == 0
    assert inversion_length((2, 2, 1, 1)) == 4
    with pytest.raises(InputError):
        inversion_length((1, -2))


def test_serre_pair_of_example(a2):
    sp = serre_pair_from_cartan(a2)
    assert sp.xi == (2, -1) and sp.eta == (2, -1)
    assert len(sp.generators()) == 4


def test_serre_pair_of_quantum_example(tq_a2):
    sp = serre_pair_from_cartan(tq_a2)
    assert sp.xi == (q + 1 / q, -1)
    assert sp.eta == (q + 1 / q, -1)


def test_reduce_cubic(a2):
    sp = serre_pair_from_cartan(a2)
    nf = reduce_rank2(sp, a2.word((2, 1, 1)))
    assert nf.degree == (2, 1)
    assert nf.beta == [-1, 2]
    assert nf.basis_word(1) == (1, 2, 1)


def test_reduce_quartic(a2):
    sp = serre_pair_from_cartan(a2)
    a = a2.word((2, 2, 1, 1))
    nf = reduce_rank2(sp, a)
    assert nf.beta == [1, -2, 2]
    assert nf == reduce_rank2(sp, a, leftmost=False)
    assert equal_in_A(a2, a, nf.as_element(a2))


def test_reduce_keeps_normal_words(a2):
    sp = serre_pair_from_cartan(a2)
    nf = reduce_rank2(sp, a2.word((1, 2, 1, 2)))
    # X1 (X2 X1) X2 is the i = 1 basis word
    assert nf.beta == [0, 1, 0]
    assert nf.log == []
    assert reduce_rank2(sp, a2.element()) == NormalForm((0, 0), [0])


def test_reduce_rejects_y_letters(a2):
    sp = serre_pair_from_cartan(a2)
    with pytest.raises(InputError):
        reduce_rank2(sp, a2.Y(1))


def test_reduction_log_deltas_lie_in_ideal(tq_a2_mu5):
    from tgwa.tgwc import is_in_ideal
    sp = serre_pair_from_cartan(tq_a2_mu5)
    nf = reduce_rank2(sp, parse_element(tq_a2_mu5, "X(2)^2*X(1)^2"))
    assert nf.log
    seen = set()
    for step in nf.log:
        key = (step.left, step.rule, step.right)
        if key in seen:
            continue
        seen.add(key)
        assert is_in_ideal(tq_a2_mu5, step.delta(sp))


def test_properties_of_example(a2, tq_a2_mu5):
    assert check_P1a(a2) == (True, 1)
    assert check_P1b(a2)
    assert check_P2(a2, serre_pair_from_cartan(a2))
    assert check_P1a(tq_a2_mu5) == (True, 25)


def test_P1a_fails_for_quantized_weyl(qweyl2):
    assert check_P1a(qweyl2) == (False, None)


def test_P1b_shapes():
    assert not check_P1b(p1b_failing())
    R = RingCtx(["H"])
    H = R.gen(0)
    d = TGWCData(R, [RingMap(R, [H + 1], [H - 1]), RingMap.identity(R)], [H * H, R.one()], {(1, 2): 1})
    with pytest.raises(UnsupportedShapeError):
        check_P1b(d)


def test_P2_fails_for_wrong_pair(a2):
    assert not check_P2(a2, SerrePair(a2, (3, -1), (2, -1)))
    assert not check_P2(a2, SerrePair(a2, (2, 0), (2, -1)))


def test_presentation_of_example(a2):
    pr = presentation(a2)
    assert pr.ok
    fams = [r.family for r in pr.relations]
    assert fams.count("a") == 4 and fams.count("b") == 4 and fams.count("c") == 2
    assert [f for f in fams if f.startswith("serre")] == ["serre:s1", "serre:s2", "serre:s1*", "serre:s2*"]
    assert pr.generators == ["H", "X(1)", "X(2)", "Y(1)", "Y(2)"]
    assert pr.relations[0].as_dict() == {"family": "a", "relation": "X(1)*H = (H + 1)*X(1)",
                                         "verified": True}


def test_presentation_refused():
    d = p1b_failing()
    assert validate_tgwc(d).ok
    pr = presentation(d)
    assert not pr.ok
    assert pr.relations == []
    assert pr.diagnosis == "property P1b, P2 failed; no presentation claimed"


def test_rank_two_only(qweyl2):
    R = RingCtx(["H"])
    d = TGWCData(R, [RingMap.identity(R)], [R.one()])
    with pytest.raises(InputError):
        check_P1a(d)


def test_rules_shorten_inversions():
    from tgwa.rank2 import RULE_LHS, RULE_RHS
    for lhs, rhs in zip(RULE_LHS, RULE_RHS):
        assert all(inversion_length(w) < inversion_length(lhs) for w in rhs)


def test_log_length_bounded_by_inversions(a2):
    from itertools import product
    sp = serre_pair_from_cartan(a2)
    for w in product((1, 2), repeat=5):
        nf = reduce_rank2(sp, a2.word(w))
        # each step splits one word into two with fewer inversions, so the
        # steps form a binary tree of depth at most inversion_length(w)
        assert len(nf.log) <= 2 ** inversion_length(w)
