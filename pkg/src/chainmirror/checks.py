"""Exhaustive invariant sweeps on the A-model algebra.

Each check returns (ok, detail) where detail names the first
counterexample on failure.  These are the consistency certificates for
the broad-correlator sign convention: the axioms pin that value only up
to sign, and associativity over all basis triples settles it.
"""

from __future__ import annotations

from fractions import Fraction

from .amodel import FrobeniusAlgebra, StateSpace
from .bmodel import MilnorRing
from .singularity import ChainSingularity, TwoVarPoly


def check_state_space(space: StateSpace):
    s = space.sing
    pq = s.p * s.q
    if space.dim != pq + 1 - s.q:
        return False, f"dim {space.dim} != pq+1-q = {pq + 1 - s.q}"
    if space.basis[0].degree != s.c_hat / 2:
        return False, "broad degree != c_hat/2"
    for b in space.basis[1:]:
        dual = space.basis[space.dual_pos[space.pos_of_narrow[b.k]]]
        if b.degree + dual.degree != s.c_hat:
            return False, f"degree duality fails at e_{b.k}"
    return True, f"dim {space.dim}, degree duality holds"


def check_pairing_consistency(alg: FrobeniusAlgebra):
    """eta entries agree with the unit-insertion correlators."""
    space = alg.space
    for a in range(space.dim):
        for b in range(space.dim):
            c = space.correlator3(space.unit_pos, a, b)
            if c.value != alg.eta[a][b]:
                return False, f"eta[{a}][{b}] != <unit, {a}, {b}> ({c.rule})"
    return True, "eta matches unit correlators entrywise"


def check_pairing_nondegenerate(alg: FrobeniusAlgebra):
    """eta is a signed permutation-like matrix; check row/column support."""
    n = alg.space.dim
    col_hits = [0] * n
    for a in range(n):
        nz = [b for b in range(n) if alg.eta[a][b] != 0]
        if len(nz) != 1:
            return False, f"row {a} has {len(nz)} nonzero entries"
        col_hits[nz[0]] += 1
    if col_hits != [1] * n:
        return False, "columns are not a permutation"
    return True, "eta is an invertible signed permutation matrix"


def check_commutativity(alg: FrobeniusAlgebra):
    # each ordered pair of the table was computed independently
    n = alg.space.dim
    for a in range(n):
        for b in range(a + 1, n):
            if alg.table[(a, b)] != alg.table[(b, a)]:
                return False, f"a*b != b*a at ({a},{b})"
    return True, "a*b == b*a for all pairs"


def check_associativity(alg: FrobeniusAlgebra):
    n = alg.space.dim
    table = alg.table
    for a in range(n):
        for b in range(n):
            ab = table[(a, b)]
            for c in range(n):
                bc = table[(b, c)]
                left = table[(ab[0], c)] if ab else None
                lhs = (left[0], ab[1] * left[1]) if ab and left else None
                right = table[(a, bc[0])] if bc else None
                rhs = (right[0], bc[1] * right[1]) if bc and right else None
                if lhs != rhs:
                    return False, f"(a*b)*c != a*(b*c) at ({a},{b},{c})"
    return True, "associative over all basis triples"


def check_unit_law(alg: FrobeniusAlgebra):
    for a in range(alg.space.dim):
        if alg.product(alg.unit_pos, a) != {a: Fraction(1)}:
            return False, f"unit law fails at {a}"
    return True, "unit acts as identity"


def check_frobenius(alg: FrobeniusAlgebra):
    n = alg.space.dim
    table = alg.table
    eta = alg.eta
    zero = Fraction(0)
    for a in range(n):
        eta_a = eta[a]
        for b in range(n):
            ab = table[(a, b)]
            eta_ab = eta[ab[0]] if ab else None
            for c in range(n):
                lhs = ab[1] * eta_ab[c] if ab else zero
                bc = table[(b, c)]
                rhs = bc[1] * eta_a[bc[0]] if bc else zero
                if lhs != rhs:
                    return False, f"eta(a*b,c) != eta(a,b*c) at ({a},{b},{c})"
    return True, "eta(a*b,c) == eta(a,b*c) for all triples"


def check_grading(alg: FrobeniusAlgebra):
    basis = alg.space.basis
    for (a, b), hit in alg.table.items():
        if hit is not None:
            c = hit[0]
            if basis[a].degree + basis[b].degree != basis[c].degree:
                return False, f"grading fails at ({a},{b})->{c}"
    return True, "nonzero products are degree-additive"


def check_broad_residue(s: ChainSingularity):
    """Cross-model identity: Res_{Q_W}((y^(q-1))^2) == -1/q == eta_00."""
    ring = MilnorRing(s.poly())
    val = ring.residue(TwoVarPoly.monomial(0, 2 * (s.q - 1)))
    expect = Fraction(-1, s.q)
    if val != expect:
        return False, f"residue {val} != -1/q = {expect}"
    return True, f"residue((y^{s.q - 1})^2) = -1/{s.q} = eta_00"
