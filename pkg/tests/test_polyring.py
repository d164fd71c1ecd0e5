import pytest

from tgwa.errors import ContextMismatchError, InputError
from tgwa.polyring import (RingCtx, RingMap, apply_map, compose_maps,
                           verify_commuting, verify_inverse)
from tgwa.scalars import QQ_q, q


@pytest.fixture
def R():
    return RingCtx(["H"])


def test_arithmetic_and_printing():
    R = RingCtx(["a", "b"])
    a, b = R.gens()
    p = (a + b) ** 2 - b * b
    assert str(p) == "a^2 + 2*a*b"
    assert p.total_degree() == 2
    assert R.zero().total_degree() == -1
    assert (a * 3 / 2).coefficient((1, 0)) == 3 / 2
    assert str(R("a^3 - 1/2*b + 7")) == "a^3 - 1/2*b + 7"


def test_generic_coefficients_print_in_parentheses():
    R = RingCtx(["H"], QQ_q)
    H = R.gen(0)
    assert str(H.scale(q + 1 / q)) == "(q + q^-1)*H"
    assert str(H.scale(q) - 1) == "q*H - 1"


def test_reserved_and_duplicate_names():
    with pytest.raises(InputError):
        RingCtx(["X"])
    with pytest.raises(InputError):
        RingCtx(["a", "a"])


def test_apply_map_examples(R):
    H = R.gen("H")
    s1 = RingMap(R, [H + 1], [H - 1])
    s2 = RingMap(R, [H - 1], [H + 1])
    assert s1(H) == H + 1
    assert RingMap.identity(R)(H ** 3 + 2) == H ** 3 + 2
    # (H-1)^2 + (H-1) = H^2 - H
    assert apply_map(s2, H ** 2 + H) == H ** 2 - H


def test_compose_and_inverse(R):
    H = R.gen("H")
    s1 = RingMap(R, [H + 1], [H - 1])
    s2 = RingMap(R, [H - 1], [H + 1])
    assert compose_maps(s1, s1.inv()) == RingMap.identity(R)
    assert compose_maps(s1, s2)(H) == H
    assert verify_inverse(s1)
    assert not verify_inverse(RingMap(R, [H + 1], [H + 1]))


def test_compose_order():
    R = RingCtx(["a", "b"])
    a, b = R.gens()
    swap = RingMap(R, [b, a], [b, a])
    shift = RingMap(R, [a + 1, b], [a - 1, b])
    # apply shift first, then swap: a -> a + 1 -> b + 1
    assert compose_maps(swap, shift)(a) == b + 1
    assert compose_maps(shift, swap)(a) == b
    assert verify_inverse(compose_maps(swap, shift))


def test_commuting(R):
    H = R.gen("H")
    s1 = RingMap(R, [H + 1], [H - 1])
    s2 = RingMap(R, [H - 1], [H + 1])
    assert verify_commuting([s1, s2])
    assert verify_commuting([s1])
    # H -> H+1 then H -> 2H gives 2H+1 one way and 2H+2 the other
    assert not verify_commuting([s1, RingMap(R, [H * 2], [H / 2])])


def test_context_mismatch():
    R1, R2 = RingCtx(["a"]), RingCtx(["b"])
    with pytest.raises(ContextMismatchError):
        R1.gen(0) + R2.gen(0)
