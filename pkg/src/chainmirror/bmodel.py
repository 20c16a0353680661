"""Milnor ring of an isolated quasi-homogeneous plane singularity.

Jacobian-ideal normal forms via a small Buchberger completion (graded
order, x before y on ties), a monomial basis of standard monomials, and
the residue functional normalized on the socle by Res(hessian) = mu.

Serves both the dual polynomial x^p*y + y^q (the B-model proper) and the
chain polynomial itself (for the broad-pairing cross-check).
"""

from __future__ import annotations

from fractions import Fraction

from .singularity import (
    TwoVarPoly,
    hessian_det,
    jacobian,
    milnor_number_from_weights,
    central_charge_from_weights,
    weights_of,
)

__all__ = ["MilnorRing", "NonIsolatedSingularityError", "reduce_ideal"]

Mono = tuple[int, int]


class NonIsolatedSingularityError(ValueError):
    """The Jacobian ideal does not cut out a finite-dimensional quotient."""


def _order_key(m: Mono):
    # graded order, ties broken by x-degree (x > y)
    return (m[0] + m[1], m[0])


def _leading(f: TwoVarPoly) -> tuple[Mono, Fraction]:
    m = max(f.terms, key=_order_key)
    return m, f.terms[m]


def _divides(m: Mono, n: Mono) -> bool:
    return m[0] <= n[0] and m[1] <= n[1]


def _reduce(f: TwoVarPoly, basis: list[TwoVarPoly]) -> TwoVarPoly:
    """Full multivariate division remainder of f modulo basis."""
    leads = [_leading(g) for g in basis]
    remainder: dict[Mono, Fraction] = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=_order_key)
        c = work.pop(m)
        for g, (lm, lc) in zip(basis, leads):
            if _divides(lm, m):
                shift = (m[0] - lm[0], m[1] - lm[1])
                factor = c / lc
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    tm = (gm[0] + shift[0], gm[1] + shift[1])
                    nc = work.get(tm, Fraction(0)) - factor * gc
                    if nc:
                        work[tm] = nc
                    elif tm in work:
                        del work[tm]
                break
        else:
            remainder[m] = c
    return TwoVarPoly(remainder)


def _s_poly(f: TwoVarPoly, g: TwoVarPoly) -> TwoVarPoly:
    (fm, fc), (gm, gc) = _leading(f), _leading(g)
    lcm = (max(fm[0], gm[0]), max(fm[1], gm[1]))
    uf = TwoVarPoly.monomial(lcm[0] - fm[0], lcm[1] - fm[1], 1 / fc)
    ug = TwoVarPoly.monomial(lcm[0] - gm[0], lcm[1] - gm[1], 1 / gc)
    return uf * f - ug * g


def reduce_ideal(generators: list[TwoVarPoly]) -> list[TwoVarPoly]:
    """Reduced Groebner basis (Buchberger, no pair criteria) of the ideal."""
    G = [g for g in generators if not g.is_zero()]
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    while pairs:
        i, j = pairs.pop()
        r = _reduce(_s_poly(G[i], G[j]), G)
        if not r.is_zero():
            G.append(r)
            pairs.extend((t, len(G) - 1) for t in range(len(G) - 1))
    # minimalize: drop elements whose leading monomial is divisible by another's
    minimal = []
    leads = [_leading(g)[0] for g in G]
    for i, g in enumerate(G):
        if any(j != i and _divides(leads[j], leads[i])
               and (leads[j] != leads[i] or j < i) for j in range(len(G))):
            continue
        minimal.append(g)
    # tail-reduce and make monic
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = _reduce(g, others) if others else g
        _, lc = _leading(r)
        reduced.append(r.scale(1 / lc))
    reduced.sort(key=lambda g: _order_key(_leading(g)[0]))
    return reduced


class MilnorRing:
    """C[x,y]/Jac(W) for quasi-homogeneous W with isolated singularity."""

    def __init__(self, W: TwoVarPoly):
        self.W = W
        self.q_x, self.q_y = weights_of(W)
        self.c_hat = central_charge_from_weights(self.q_x, self.q_y)
        self.mu = milnor_number_from_weights(self.q_x, self.q_y)
        wx, wy = jacobian(W)
        self.ideal_basis = reduce_ideal([wx, wy])
        leads = [_leading(g)[0] for g in self.ideal_basis]
        x_bounds = [m[0] for m in leads if m[1] == 0]
        y_bounds = [m[1] for m in leads if m[0] == 0]
        if not x_bounds or not y_bounds:
            raise NonIsolatedSingularityError(
                f"{W.render()}: quotient by the Jacobian ideal is not finite-dimensional")
        self.basis: list[Mono] = sorted(
            ((a, b) for a in range(min(x_bounds)) for b in range(min(y_bounds))
             if not any(_divides(lm, (a, b)) for lm in leads)),
            key=_order_key)
        if len(self.basis) != self.mu:
            raise NonIsolatedSingularityError(
                f"{W.render()}: standard monomial count {len(self.basis)} "
                f"does not match the weight-formula Milnor number {self.mu}")
        tops = [m for m in self.basis if self.weighted_degree(m) == self.c_hat]
        assert len(tops) == 1, "socle must be one-dimensional"
        self.top_monomial: Mono = tops[0]
        # normalize the residue so that Res(hessian) = mu
        hess_nf = self.normal_form(hessian_det(W))
        assert set(hess_nf.terms) == {self.top_monomial}
        self.residue_norm = Fraction(self.mu) / hess_nf.terms[self.top_monomial]
        self._nf_cache: dict[Mono, TwoVarPoly] = {}

    def weighted_degree(self, m: Mono) -> Fraction:
        return m[0] * self.q_x + m[1] * self.q_y

    def normal_form(self, f: TwoVarPoly) -> TwoVarPoly:
        """Canonical representative supported on the standard monomials."""
        return _reduce(f, self.ideal_basis)

    def normal_form_monomial(self, m: Mono) -> TwoVarPoly:
        """Cached normal form of a single monomial."""
        nf = self._nf_cache.get(m)
        if nf is None:
            nf = self.normal_form(TwoVarPoly.monomial(*m))
            self._nf_cache[m] = nf
        return nf

    def residue(self, f: TwoVarPoly) -> Fraction:
        """Residue functional: socle coefficient of the normal form."""
        nf = self.normal_form(f)
        return nf.terms.get(self.top_monomial, Fraction(0)) * self.residue_norm

    def residue_of_product(self, m1: Mono, m2: Mono) -> Fraction:
        m = (m1[0] + m2[0], m1[1] + m2[1])
        if self.weighted_degree(m) != self.c_hat:
            return Fraction(0)  # residue is graded
        nf = self.normal_form_monomial(m)
        return nf.terms.get(self.top_monomial, Fraction(0)) * self.residue_norm

    def gram_matrix(self) -> list[list[Fraction]]:
        """Residue pairing Gram matrix over the standard-monomial basis."""
        n = len(self.basis)
        return [[self.residue_of_product(self.basis[u], self.basis[v])
                 for v in range(n)] for u in range(n)]

    def gram_nondegenerate(self) -> bool:
        """Exact nondegeneracy via the graded block structure.

        The pairing couples only complementary weighted degrees, so the
        Gram matrix is nonsingular iff every block between degree delta
        and c_hat - delta is square and of full rank.
        """
        by_deg: dict[Fraction, list[int]] = {}
        for i, m in enumerate(self.basis):
            by_deg.setdefault(self.weighted_degree(m), []).append(i)
        for deg, rows in by_deg.items():
            cols = by_deg.get(self.c_hat - deg)
            if cols is None or len(cols) != len(rows):
                return False
            block = [[self.residue_of_product(self.basis[u], self.basis[v])
                      for v in cols] for u in rows]
            if _rank(block) != len(rows):
                return False
        return True


def _rank(matrix: list[list[Fraction]]) -> int:
    """Exact rank by fraction Gaussian elimination."""
    m = [row[:] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                factor = m[r][col] / prow[col]
                m[r] = [a - factor * b for a, b in zip(m[r], prow)]
        rank += 1
    return rank
