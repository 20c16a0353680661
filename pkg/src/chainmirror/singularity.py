"""Chain singularities x^p + x*y^q, their transpose duals, and sparse
two-variable polynomials with exact coefficients.

Weights are recovered by solving the linear system a*q_x + b*q_y = 1 over
the exponent pairs of the polynomial rather than hard-coded, so the same
code path serves W, its dual, and arbitrary test polynomials, and the
uniqueness of the weight system is actually checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "TwoVarPoly",
    "ChainSingularity",
    "DualSingularity",
    "make_chain",
    "make_dual",
    "weights_of",
    "milnor_number_from_weights",
    "central_charge_from_weights",
]


class TwoVarPoly:
    """Sparse polynomial in two variables with Fraction coefficients.

    Stored as {(a, b): coeff} with no zero coefficients.  Immutable in
    spirit: all arithmetic returns fresh instances.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[(int(a), int(b))] = c
        self.terms = clean

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "TwoVarPoly":
        return cls({(a, b): Fraction(coeff)})

    @classmethod
    def zero(cls) -> "TwoVarPoly":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, TwoVarPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return TwoVarPoly(out)

    def __sub__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "TwoVarPoly":
        c = Fraction(c)
        return TwoVarPoly({m: cc * c for m, cc in self.terms.items()})

    def __mul__(self, other: "TwoVarPoly") -> "TwoVarPoly":
        out: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                m = (a1 + a2, b1 + b2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return TwoVarPoly(out)

    def diff_x(self) -> "TwoVarPoly":
        return TwoVarPoly({(a - 1, b): c * a for (a, b), c in self.terms.items() if a > 0})

    def diff_y(self) -> "TwoVarPoly":
        return TwoVarPoly({(a, b - 1): c * b for (a, b), c in self.terms.items() if b > 0})

    def weighted_degrees(self, q_x: Fraction, q_y: Fraction) -> set:
        return {a * q_x + b * q_y for (a, b) in self.terms}

    def render(self) -> str:
        """Canonical text form, exponent-sorted: "x^3 + x*y^2"."""
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda m: (-m[0], -m[1])):
            c = self.terms[(a, b)]
            factors = []
            if a == 1:
                factors.append("x")
            elif a > 1:
                factors.append(f"x^{a}")
            if b == 1:
                factors.append("y")
            elif b > 1:
                factors.append(f"y^{b}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"TwoVarPoly({self.render()})"


def jacobian(W: TwoVarPoly) -> tuple[TwoVarPoly, TwoVarPoly]:
    """Exact partial derivatives (dW/dx, dW/dy)."""
    return W.diff_x(), W.diff_y()


def hessian_det(W: TwoVarPoly) -> TwoVarPoly:
    """Determinant of the second-derivative matrix: Wxx*Wyy - Wxy^2."""
    wx, wy = jacobian(W)
    wxx, wxy = wx.diff_x(), wx.diff_y()
    wyy = wy.diff_y()
    return wxx * wyy - wxy * wxy


def weights_of(W: TwoVarPoly) -> tuple[Fraction, Fraction]:
    """Solve a*q_x + b*q_y = 1 over all monomials of W.

    Raises ValueError if the system is inconsistent or the weights are not
    uniquely determined (rank < 2).
    """
    rows = sorted(W.terms.keys())
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            (a1, b1), (a2, b2) = rows[i], rows[j]
            det = a1 * b2 - a2 * b1
            if det != 0:
                q_x = Fraction(b2 - b1, det)
                q_y = Fraction(a1 - a2, det)
                for (a, b) in rows:
                    if a * q_x + b * q_y != 1:
                        raise ValueError("polynomial is not quasi-homogeneous")
                return q_x, q_y
    raise ValueError("weight system is not uniquely determined")


def is_quasi_homogeneous(W: TwoVarPoly, q_x: Fraction, q_y: Fraction) -> bool:
    return all(a * q_x + b * q_y == 1 for (a, b) in W.terms)


def milnor_number_from_weights(q_x: Fraction, q_y: Fraction) -> int:
    mu = (1 / q_x - 1) * (1 / q_y - 1)
    if mu.denominator != 1:
        raise ValueError("weights do not give an integer Milnor number")
    return int(mu)


def central_charge_from_weights(q_x: Fraction, q_y: Fraction) -> Fraction:
    return (1 - 2 * q_x) + (1 - 2 * q_y)


@dataclass(frozen=True)
class ChainSingularity:
    """The chain polynomial W = x^p + x*y^q with its derived invariants."""

    p: int
    q: int
    d: int            # gcd(p-1, q); d == 1 and d > 1 need different sector formulas
    q_x: Fraction
    q_y: Fraction
    c_hat: Fraction
    mu: int

    def poly(self) -> TwoVarPoly:
        return TwoVarPoly({(self.p, 0): 1, (1, self.q): 1})

    def dual(self) -> "DualSingularity":
        return make_dual(self.p, self.q)


@dataclass(frozen=True)
class DualSingularity:
    """The transpose dual x^p*y + y^q of the chain polynomial."""

    p: int
    q: int
    q_x: Fraction
    q_y: Fraction
    c_hat: Fraction
    mu: int

    def poly(self) -> TwoVarPoly:
        return TwoVarPoly({(self.p, 1): 1, (0, self.q): 1})


def _check_pq(p: int, q: int) -> None:
    if p < 2 or q < 2:
        raise ValueError(f"chain singularity needs p >= 2 and q >= 2, got ({p}, {q})")


def make_chain(p: int, q: int) -> ChainSingularity:
    _check_pq(p, q)
    W = TwoVarPoly({(p, 0): 1, (1, q): 1})
    q_x, q_y = weights_of(W)
    assert (q_x, q_y) == (Fraction(1, p), Fraction(p - 1, p * q))
    return ChainSingularity(
        p=p,
        q=q,
        d=gcd(p - 1, q),
        q_x=q_x,
        q_y=q_y,
        c_hat=central_charge_from_weights(q_x, q_y),
        mu=milnor_number_from_weights(q_x, q_y),
    )


def make_dual(p: int, q: int) -> DualSingularity:
    _check_pq(p, q)
    dual = TwoVarPoly({(p, 1): 1, (0, q): 1})
    q_x, q_y = weights_of(dual)
    assert (q_x, q_y) == (Fraction(q - 1, p * q), Fraction(1, q))
    return DualSingularity(
        p=p,
        q=q,
        q_x=q_x,
        q_y=q_y,
        c_hat=central_charge_from_weights(q_x, q_y),
        mu=milnor_number_from_weights(q_x, q_y),
    )
