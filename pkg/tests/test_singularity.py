from fractions import Fraction

import pytest

from chainmirror.singularity import (
    TwoVarPoly,
    hessian_det,
    jacobian,
    make_chain,
    make_dual,
    weights_of,
)


def test_make_chain_e7():
    s = make_chain(3, 3)
    assert (s.q_x, s.q_y) == (Fraction(1, 3), Fraction(2, 9))
    assert s.c_hat == Fraction(8, 9)
    assert s.mu == 7
    assert s.d == 1


def test_make_chain_d4():
    s = make_chain(3, 2)
    assert s.d == 2
    assert s.c_hat == Fraction(2, 3)
    assert s.mu == 4


def test_make_chain_43():
    s = make_chain(4, 3)
    assert s.d == 3
    assert s.c_hat == 1
    assert s.mu == 9


def test_make_dual_weights():
    dual = make_dual(3, 2)
    assert (dual.q_x, dual.q_y) == (Fraction(1, 6), Fraction(1, 2))
    assert dual.mu == 5
    dual = make_dual(3, 3)
    assert (dual.q_x, dual.q_y) == (Fraction(2, 9), Fraction(1, 3))
    assert dual.mu == 7


def test_central_charges_agree():
    for p in range(2, 13):
        for q in range(2, 13):
            s = make_chain(p, q)
            assert s.c_hat == make_dual(p, q).c_hat
            assert s.c_hat == Fraction(2 * (p - 1) * (q - 1), p * q)


def test_milnor_number_formula():
    for p in range(2, 13):
        for q in range(2, 13):
            s = make_chain(p, q)
            assert s.mu == (1 / s.q_x - 1) * (1 / s.q_y - 1) == p * q - p + 1
            dual = make_dual(p, q)
            assert dual.mu == (1 / dual.q_x - 1) * (1 / dual.q_y - 1) == p * q - q + 1


def test_invalid_exponents_rejected():
    for p, q in [(1, 3), (3, 1), (0, 5), (2, 0)]:
        with pytest.raises(ValueError):
            make_chain(p, q)
        with pytest.raises(ValueError):
            make_dual(p, q)


def test_jacobian():
    W = TwoVarPoly({(3, 0): 1, (1, 2): 1})
    wx, wy = jacobian(W)
    assert wx == TwoVarPoly({(2, 0): 3, (0, 2): 1})
    assert wy == TwoVarPoly({(1, 1): 2})
    V = TwoVarPoly({(3, 1): 1, (0, 2): 1})
    vx, vy = jacobian(V)
    assert vx == TwoVarPoly({(2, 1): 3})
    assert vy == TwoVarPoly({(3, 0): 1, (0, 1): 2})
    assert jacobian(TwoVarPoly({(0, 0): 5})) == (TwoVarPoly.zero(), TwoVarPoly.zero())


def test_hessian_det():
    W = TwoVarPoly({(3, 0): 1, (1, 2): 1})  # det [[6x, 2y], [2y, 2x]]
    assert hessian_det(W) == TwoVarPoly({(2, 0): 12, (0, 2): -4})
    assert hessian_det(TwoVarPoly({(2, 0): 1, (0, 2): 1})) == TwoVarPoly({(0, 0): 4})
    assert hessian_det(TwoVarPoly({(1, 1): 1})) == TwoVarPoly({(0, 0): -1})


def test_quasi_homogeneity_of_chain():
    for p, q in [(2, 2), (3, 5), (7, 4)]:
        s = make_chain(p, q)
        for (a, b) in s.poly().terms:
            assert a * s.q_x + b * s.q_y == 1


def test_weights_require_unique_system():
    with pytest.raises(ValueError):
        weights_of(TwoVarPoly({(2, 2): 1}))  # rank 1
    with pytest.raises(ValueError):
        weights_of(TwoVarPoly({(2, 0): 1, (0, 2): 1, (3, 3): 1}))  # inconsistent


def test_render_canonical():
    s = make_chain(3, 2)
    assert s.poly().render() == "x^3 + x*y^2"
    assert make_dual(3, 2).poly().render() == "x^3*y + y^2"
    assert TwoVarPoly({(2, 0): 12, (0, 2): -4}).render() == "12*x^2 - 4*y^2"
    assert TwoVarPoly.zero().render() == "0"
