import pytest

import oracles
from tgwa.errors import CapExceededError, InputError, NotAGCMError
from tgwa.locfin import (SerreElement, cartan_of, check_serre, independence_bound,
                         minimal_polynomial, poly_cartan_matrix, rank_of_iterates,
                         serre_element, serre_elements, validate_gcm, vij_closure)
from tgwa.polyring import RingCtx, RingMap
from tgwa.tgwc import TGWCData


def not_locally_finite():
    R = RingCtx(["a", "b"])
    a, b = R.gens()
    # sigma(a) = b, sigma(b) = a + b^2; degrees double along the orbit of a
    s = RingMap(R, [b, a + b * b], [b - a * a, a])
    return TGWCData(R, [s], [a])


def test_closure_of_example(a2):
    span = vij_closure(a2, 2, 1)
    H = a2.ring.gen(0)
    assert span.dimension == 2
    assert span.basis == [H, a2.ring.one()]
    assert span.iterates == [H, H - 1, H - 2]
    assert span.relation == [1, -2, 1]


def test_minimal_polynomial_example(a2):
    p = minimal_polynomial(a2, 1, 2)
    assert str(p) == "x^2 - 2*x + 1"


@pytest.mark.parametrize("fixture", ["a2", "tq_a2", "tq_a2_mu5", "qweyl2"])
def test_minimal_polynomial_matches_sympy(fixture, request):
    d = request.getfixturevalue(fixture)
    names = d.ring.names
    for i in range(1, d.n + 1):
        images = oracles.sigma_images(d, i)
        for j in range(1, d.n + 1):
            got = oracles.to_sympy(minimal_polynomial(d, i, j), ["x"])
            tj = oracles.to_sympy(d.t_of(j), names)
            want = oracles.minimal_polynomial(images, tj, names)
            assert oracles.same(got, want)


def test_tqmu_span_dimension(tq_a2):
    assert vij_closure(tq_a2, 1, 2).dimension == 2
    assert vij_closure(tq_a2, 2, 1).dimension == 2


def test_cap():
    d = not_locally_finite()
    with pytest.raises(CapExceededError):
        vij_closure(d, 1, 1, cap=4)
    with pytest.raises(InputError):
        vij_closure(d, 1, 1, cap=0)


def test_rank_and_independence(a2):
    assert rank_of_iterates(a2, 1, 2, 5) == 2
    assert independence_bound(a2, 1, 2, 1)
    assert not independence_bound(a2, 1, 2, 2)
    with pytest.raises(InputError):
        independence_bound(a2, 1, 2, -1)


def test_poly_cartan_and_gcm(a2, tq_a2_mu5):
    assert cartan_of(poly_cartan_matrix(a2)) == [[2, -1], [-1, 2]]
    P = poly_cartan_matrix(tq_a2_mu5)
    assert str(P[1, 2]) == "x^2 - (5*q + 5*q^-1)*x + 25"
    assert P.degree(2, 1) == 2


@pytest.mark.parametrize("C", [[[2, 1], [1, 2]], [[1, 0], [0, 2]], [[2, 0], [-1, 2]], [[2, -1]]])
def test_validate_gcm_rejects(C):
    with pytest.raises(NotAGCMError):
        validate_gcm(C)


def test_serre_example(a2):
    P = poly_cartan_matrix(a2)
    e = serre_element(a2, P, 1, 2)
    assert e.m == 2
    assert e.lambdas == [1, -2, 1]
    assert str(e.x_form) == "X(1)^2*X(2) - 2*X(1)*X(2)*X(1) + X(2)*X(1)^2"
    assert check_serre(a2, e).ok
    assert len(serre_elements(a2, P)) == 2


def test_serre_coefficients_scaled_by_mu(tq_a2_mu5):
    P = poly_cartan_matrix(tq_a2_mu5)
    e = serre_element(tq_a2_mu5, P, 1, 2)
    assert e.lambdas[2] == 25
    # lambda^(k) mu^(-k) removes mu entirely
    assert e.coefficients[0] == 1 and e.coefficients[2] == 1
    assert check_serre(tq_a2_mu5, e).ok


def test_wrong_coefficients_fail_every_route(a2):
    e = SerreElement.from_coefficients(a2, 1, 2, [1, -3, 1])
    v = check_serre(a2, e)
    assert not v.ring_criterion and not v.pairing_x and not v.pairing_y
