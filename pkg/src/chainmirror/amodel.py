"""FJRW A-model of the chain singularity with its maximal diagonal
symmetry group: twisted sectors, genus-0 three-point correlators, the
pairing, and the quantum product assembled into a Frobenius algebra.

Basis order everywhere: the broad element y^{q-1}e_0 first, then the
narrow elements e_k for k in Lambda ascending.  The gcd(p-1, q) = 1 and
> 1 regimes use different sector angles; everything else is uniform.

The three-point correlators are evaluated by a decision procedure (degree
selection, line-bundle integrality, then the concavity / index-zero
values), not read off from the multiplication lemmas they imply, so those
lemmas can be machine-checked downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .singularity import ChainSingularity

__all__ = [
    "Sector",
    "BasisElement",
    "Correlator3",
    "StateSpace",
    "FrobeniusAlgebra",
    "build_state_space",
    "line_bundle_degrees",
]

BROAD = "broad"
NARROW = "narrow"


@dataclass(frozen=True)
class Sector:
    """Twisted sector data of the group element gamma^k."""

    index: int
    theta_x: Fraction
    theta_y: Fraction
    iota: Fraction
    is_narrow: bool
    fixed_dim: int


@dataclass(frozen=True)
class BasisElement:
    kind: str        # BROAD or NARROW
    k: int           # sector index (0 for the broad element)
    degree: Fraction

    def label(self) -> str:
        return "broad" if self.kind == BROAD else f"e{self.k}"


@dataclass(frozen=True)
class Correlator3:
    insertions: tuple
    value: Fraction
    rule: str


# rule tags, recorded on every correlator for auditability
ZERO_BY_DEGREE = "ZeroByDegree"
ZERO_BY_INTEGRALITY = "ZeroByIntegrality"
CONCAVITY = "Concavity"
INDEX_ZERO = "IndexZero"
BROAD_PAIRING = "BroadPairing"
BROAD_CHANNEL = "BroadChannel"
ZERO_OTHER = "ZeroOther"


def sector_angles(s: ChainSingularity, k: int) -> tuple[int, int]:
    """Angle numerators (theta_x * p, theta_y * p*q) of the k-th sector."""
    p, q, pq = s.p, s.q, s.p * s.q
    if s.d == 1:
        return k % p, (k * (p - 1)) % pq
    return (p - k) % p, k % pq


def sector(s: ChainSingularity, k: int) -> Sector:
    pq = s.p * s.q
    nx, ny = sector_angles(s, k % pq)
    theta_x = Fraction(nx, s.p)
    theta_y = Fraction(ny, pq)
    iota = theta_x - s.q_x + theta_y - s.q_y
    narrow = nx != 0 and ny != 0
    if k % pq == 0:
        fixed_dim = 2
    elif narrow:
        fixed_dim = 0
    else:
        fixed_dim = 1
    return Sector(k % pq, theta_x, theta_y, iota, narrow, fixed_dim)


class StateSpace:
    """Graded basis of H_{W,G}: broad y^{q-1}e_0 plus e_k for k in Lambda."""

    def __init__(self, s: ChainSingularity):
        p, q = s.p, s.q
        pq = p * q
        self.sing = s
        self.Lambda = [k for k in range(1, pq) if k % p != 0]
        self.basis: list[BasisElement] = [BasisElement(BROAD, 0, s.c_hat / 2)]
        self.pos_of_narrow: dict[int, int] = {}
        # integer shadows of the angle/degree data (common denominators p,
        # pq, pq) used by the correlator fast path
        self._nx = [0]
        self._ny = [0]
        self._deg_num = [(p - 1) * (q - 1)]
        for k in self.Lambda:
            sec = sector(s, k)
            assert sec.is_narrow
            self.pos_of_narrow[k] = len(self.basis)
            self.basis.append(BasisElement(NARROW, k, sec.iota))
            nx, ny = sector_angles(s, k)
            self._nx.append(nx)
            self._ny.append(ny)
            self._deg_num.append(nx * q + ny + 1 - p - q)
        self._chat_num = 2 * (p - 1) * (q - 1)  # c_hat * pq
        units = [i for i, b in enumerate(self.basis) if b.degree == 0]
        assert len(units) == 1, "unit must be the unique degree-0 element"
        self.unit_pos = units[0]
        expected_unit = 1 if s.d == 1 else p - 1
        assert self.basis[self.unit_pos].k == expected_unit
        # position of the eta-dual element: broad <-> broad, e_k <-> e_{pq-k}
        self.dual_pos = [0] + [self.pos_of_narrow[pq - k] for k in self.Lambda]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _corr(self, i: int, j: int, k: int) -> tuple[Fraction, str]:
        """Correlator decision procedure; (value, rule) without wrapping."""
        s = self.sing
        p, q, pq = s.p, s.q, s.p * s.q
        broad = (i == 0) + (j == 0) + (k == 0)
        deg_sum = self._deg_num[i] + self._deg_num[j] + self._deg_num[k]
        if deg_sum != self._chat_num:
            return Fraction(0), ZERO_BY_DEGREE
        if broad == 2:
            # degree selection already forces the narrow insertion to be
            # the unit; its value is the broad self-pairing -1/q
            return Fraction(-1, q), BROAD_PAIRING
        if broad == 1:
            a, b = (self.basis[t].k for t in (i, j, k) if t != 0)
            target = pq + 1 if s.d == 1 else p - 1
            if a + b == target:
                # the axioms pin this value only up to sign; +1 by
                # convention, certified by the associativity sweep
                return Fraction(1), BROAD_CHANNEL
            return Fraction(0), ZERO_OTHER
        lx_num = 1 - self._nx[i] - self._nx[j] - self._nx[k]        # over p
        ly_num = (p - 1) - self._ny[i] - self._ny[j] - self._ny[k]  # over pq
        if lx_num % p != 0 or ly_num % pq != 0:
            return Fraction(0), ZERO_BY_INTEGRALITY
        lx, ly = lx_num // p, ly_num // pq
        if (lx, ly) == (-1, -1):
            return Fraction(1), CONCAVITY
        if (lx, ly) == (-2, 0):
            return Fraction(-q), INDEX_ZERO
        return Fraction(0), ZERO_OTHER

    def correlator3(self, i: int, j: int, k: int) -> Correlator3:
        """Genus-0 three-point correlator of basis positions (i, j, k)."""
        value, rule = self._corr(i, j, k)
        return Correlator3((i, j, k), value, rule)

    def pairing(self) -> list[list[Fraction]]:
        """Gram matrix of eta: 1 on e_a x e_{pq-a}, -1/q on broad x broad."""
        s = self.sing
        pq = s.p * s.q
        n = self.dim
        eta = [[Fraction(0)] * n for _ in range(n)]
        eta[0][0] = Fraction(-1, s.q)
        for a in range(1, n):
            for b in range(1, n):
                if self.basis[a].k + self.basis[b].k == pq:
                    eta[a][b] = Fraction(1)
        return eta


def build_state_space(s: ChainSingularity) -> StateSpace:
    return StateSpace(s)


def line_bundle_degrees(s: ChainSingularity, insertions, genus: int = 0):
    """Degrees (deg|L_x|, deg|L_y|) for the given sector indices.

    Integrality is not assumed; the caller tests it.
    """
    if genus != 0:
        raise ValueError("only genus 0 is supported")
    k = len(insertions)
    tx = [sector(s, t).theta_x for t in insertions]
    ty = [sector(s, t).theta_y for t in insertions]
    return (
        s.q_x * (2 * genus - 2 + k) - sum(tx),
        s.q_y * (2 * genus - 2 + k) - sum(ty),
    )


class FrobeniusAlgebra:
    """State space + pairing + quantum product, with exact coefficients.

    The product of two basis elements is a scalar multiple of a single
    basis element (grading plus the one-channel property); the structure
    table stores it as (position, scalar) or None.
    """

    def __init__(self, space: StateSpace):
        self.space = space
        self.basis = space.basis
        self.eta = space.pairing()
        self.unit_pos = space.unit_pos
        n = space.dim
        eta_inv_diag = [Fraction(-space.sing.q)] + [Fraction(1)] * (n - 1)
        # each ordered pair is computed independently, so the symmetry of
        # the table is a genuine commutativity check downstream
        table: dict[tuple[int, int], tuple[int, Fraction] | None] = {}
        deg = space._deg_num
        chat = space._chat_num
        for a in range(n):
            for b in range(n):
                dab = deg[a] + deg[b]
                hits = []
                for alpha in range(n):
                    if dab + deg[alpha] != chat:
                        continue
                    value, _ = space._corr(a, b, alpha)
                    if value != 0:
                        beta = space.dual_pos[alpha]
                        hits.append((beta, value * eta_inv_diag[alpha]))
                assert len(hits) <= 1, "product must live in a single channel"
                table[(a, b)] = hits[0] if hits else None
        self.table = table

    def product(self, a: int, b: int) -> dict[int, Fraction]:
        """Quantum product of basis positions as a sparse vector."""
        hit = self.table[(a, b)]
        return {hit[0]: hit[1]} if hit else {}

    def product_vec(self, u: dict[int, Fraction], v: dict[int, Fraction]) -> dict[int, Fraction]:
        """Bilinear extension of the product to sparse vectors."""
        out: dict[int, Fraction] = {}
        for a, ca in u.items():
            for b, cb in v.items():
                hit = self.table[(a, b)]
                if hit:
                    pos, val = hit
                    newc = out.get(pos, Fraction(0)) + ca * cb * val
                    if newc:
                        out[pos] = newc
                    elif pos in out:
                        del out[pos]
        return out

    def unit_vec(self) -> dict[int, Fraction]:
        return {self.unit_pos: Fraction(1)}

    def power(self, a: int, n: int) -> dict[int, Fraction]:
        """n-th quantum power of basis position a (n >= 0)."""
        out = self.unit_vec()
        for _ in range(n):
            out = self.product_vec(out, {a: Fraction(1)})
        return out

    def eta_vec(self, u: dict[int, Fraction], v: dict[int, Fraction]) -> Fraction:
        out = Fraction(0)
        for a, ca in u.items():
            for b, cb in v.items():
                out += ca * cb * self.eta[a][b]
        return out

    def structure_constant_records(self):
        """Nonzero structure constants as {a, b, c, value} records."""
        from .arith import rat_str

        recs = []
        n = self.space.dim
        for a in range(n):
            for b in range(n):
                hit = self.table[(a, b)]
                if hit:
                    recs.append({"a": a, "b": b, "c": hit[0], "value": rat_str(hit[1])})
        return recs
