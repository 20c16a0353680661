from fractions import Fraction

import pytest

from chainmirror.bmodel import MilnorRing, NonIsolatedSingularityError, _rank, reduce_ideal
from chainmirror.singularity import TwoVarPoly, hessian_det, make_chain, make_dual


def _dual_ring(p, q):
    return MilnorRing(make_dual(p, q).poly())


def test_dual_ring_32():
    ring = _dual_ring(3, 2)  # x^3*y + y^2
    assert ring.mu == 5
    assert ring.basis == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]
    assert ring.top_monomial == (1, 1)
    # y = -x^3 and x^2*y = 0 in the quotient (from the partials)
    assert ring.normal_form(TwoVarPoly.monomial(3, 0)) == TwoVarPoly({(0, 1): -2})
    assert ring.normal_form(TwoVarPoly.monomial(2, 1)).is_zero()
    nf = ring.normal_form(TwoVarPoly({(3, 0): 1, (5, 2): 7, (0, 1): 1}))
    assert ring.normal_form(nf) == nf  # idempotent
    assert set(nf.terms) <= set(ring.basis)


def test_chain_ring_residues():
    ring = MilnorRing(make_chain(3, 2).poly())  # x^3 + x*y^2
    assert ring.mu == 4
    assert ring.residue(TwoVarPoly.monomial(0, 2)) == Fraction(-1, 2)
    assert ring.normal_form(hessian_det(ring.W)) == TwoVarPoly({(0, 2): -8})
    assert ring.residue(hessian_det(ring.W)) == 4


def test_residue_normalization_scan():
    for p in range(2, 7):
        for q in range(2, 7):
            ring = _dual_ring(p, q)
            assert ring.residue(hessian_det(ring.W)) == ring.mu
            if ring.mu > 1:
                assert ring.residue(TwoVarPoly.monomial(0, 0)) == 0


def test_morse_point():
    ring = MilnorRing(TwoVarPoly({(2, 0): 1, (0, 2): 1}))
    assert ring.basis == [(0, 0)]
    assert ring.top_monomial == (0, 0)
    # hessian of x^2 + y^2 is the constant 4, so Res(1) = mu / 4
    assert ring.residue(TwoVarPoly.monomial(0, 0)) == Fraction(1, 4)
    assert ring.residue(hessian_det(ring.W)) == 1


def test_non_isolated_rejected():
    # unique weights (1/6, 1/3) exist, but the Jacobian ideal lies in (x)
    W = TwoVarPoly({(2, 2): 1, (4, 1): 1})
    with pytest.raises(NonIsolatedSingularityError):
        MilnorRing(W)


def test_basis_size_scan():
    for p in range(2, 9):
        for q in range(2, 9):
            ring = _dual_ring(p, q)
            assert len(ring.basis) == p * q - q + 1


def test_gram_matrix_32():
    ring = _dual_ring(3, 2)
    gram = ring.gram_matrix()
    idx = {m: i for i, m in enumerate(ring.basis)}
    norm = ring.residue(TwoVarPoly.monomial(1, 1))
    assert gram[idx[(0, 0)]][idx[(1, 1)]] == norm
    assert gram[idx[(1, 0)]][idx[(0, 1)]] == norm
    assert gram[idx[(0, 0)]][idx[(1, 0)]] == 0
    assert ring.gram_nondegenerate()


def test_gram_nondegenerate_matches_determinant():
    for p, q in [(2, 2), (3, 2), (2, 3), (3, 3)]:
        ring = _dual_ring(p, q)
        gram = ring.gram_matrix()
        assert ring.gram_nondegenerate() == (_rank(gram) == ring.mu)
        assert _rank(gram) == ring.mu


def test_rank_examples():
    F = Fraction
    assert _rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert _rank([[F(0), F(1)], [F(1), F(0)]]) == 2
    assert _rank([[F(0), F(0)]]) == 0
    assert _rank([]) == 0


def test_reduce_ideal_is_reduced():
    from chainmirror.bmodel import _leading

    for p, q in [(3, 2), (2, 4), (4, 3)]:
        ring = _dual_ring(p, q)
        leads = [_leading(g)[0] for g in ring.ideal_basis]
        for i, g in enumerate(ring.ideal_basis):
            assert _leading(g)[1] == 1  # monic
            for m in g.terms:
                assert not any(j != i and leads[j][0] <= m[0] and leads[j][1] <= m[1]
                               for j in range(len(leads)))


def test_principal_ideal():
    gb = reduce_ideal([TwoVarPoly({(2, 0): 2, (0, 1): 2})])
    assert len(gb) == 1
    assert gb[0] == TwoVarPoly({(2, 0): 1, (0, 1): 1})


def test_dual_basis_spans_grid_with_extra_power():
    """The monomials x^s*y^t (s<=p-2, t<=q-1) plus x^(p-1) span the quotient."""
    for p, q in [(3, 3), (3, 2), (2, 4), (2, 5), (3, 6), (4, 3)]:
        ring = _dual_ring(p, q)
        monos = [(s, t) for s in range(p - 1) for t in range(q)] + [(p - 1, 0)]
        idx = {m: i for i, m in enumerate(ring.basis)}
        rows = []
        for m in monos:
            nf = ring.normal_form_monomial(m)
            row = [Fraction(0)] * ring.mu
            for mm, c in nf.terms.items():
                row[idx[mm]] = c
            rows.append(row)
        assert _rank(rows) == ring.mu
