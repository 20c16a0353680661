"""Ring generators, index bijection, mirror map, and machine verification
of the isomorphism between the A-model Frobenius algebra of x^p + x*y^q
and the Milnor ring of x^p*y + y^q.

The mirror map sends a Milnor basis monomial x^s*y^t to the s-th quantum
power of the first generator times the t-th power of the second, computed
through the product engine; the index bijection and the multiplication
lemmas are then *checked* against it rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arith import rat_str, solve_congruence
from .amodel import FrobeniusAlgebra, StateSpace, build_state_space
from .bmodel import MilnorRing, _rank
from .singularity import ChainSingularity, TwoVarPoly, make_chain

__all__ = [
    "GeneratorPair",
    "IndexBijection",
    "MirrorReport",
    "find_generators",
    "bijection",
    "mirror_map",
    "verify_relations",
    "verify_isomorphism",
    "compare_pairings",
]


class InternalConsistencyError(AssertionError):
    """A formula-level postcondition failed; signals a transcription bug."""


@dataclass(frozen=True)
class GeneratorPair:
    """Sector indices of the two ring generators (k may be 0 = broad)."""

    k_index: int
    m_index: int
    M: int
    regime: str  # "d=1" or "d>1"


@dataclass
class IndexBijection:
    regime: str
    forward: dict  # (s, t) -> Lambda index
    inverse: dict


@dataclass
class MirrorReport:
    p: int
    q: int
    d: int
    generators: GeneratorPair
    dim_a: int
    dim_b: int
    bijection_ok: bool
    table_matches: int
    table_total: int
    rank_ok: bool
    pair_checks: int
    pair_failures: list = field(default_factory=list)
    relation_zero_divisor: bool = False
    relation_power: bool = False
    verdict: bool = False

    def to_dict(self) -> dict:
        return {
            "schema": "lg-mirror-ring/1",
            "p": self.p,
            "q": self.q,
            "d": self.d,
            "regime": self.generators.regime,
            "generator_k": self.generators.k_index,
            "generator_m": self.generators.m_index,
            "dim_a": self.dim_a,
            "dim_b": self.dim_b,
            "bijection_ok": self.bijection_ok,
            "table_matches": self.table_matches,
            "table_total": self.table_total,
            "rank_ok": self.rank_ok,
            "pair_checks": self.pair_checks,
            "pair_failures": self.pair_failures,
            "relation_zero_divisor": self.relation_zero_divisor,
            "relation_power": self.relation_power,
            "verdict": self.verdict,
        }


def find_generators(s: ChainSingularity) -> GeneratorPair:
    """The pair (e_k, e_m) whose degrees equal the dual weights."""
    p, q, pq = s.p, s.q, s.p * s.q
    if s.d == 1:
        x = solve_congruence(p - 1, -1, pq)
        if x is None:
            raise InternalConsistencyError("congruence unsolvable despite d = 1")
        k = (x + 1) % pq
        M = solve_congruence(p - 1, 1, pq)
        m = M + 2
        gp = GeneratorPair(k, m, M, "d=1")
        if k != (pq + 1 - M) % pq:
            raise InternalConsistencyError("k and M are inconsistent")
    else:
        gp = GeneratorPair(p - 2, 2 * p - 1, 2 * p - 3, "d>1")
    space = build_state_space(s)
    deg_k = _degree_of(space, gp.k_index)
    deg_m = _degree_of(space, gp.m_index)
    if deg_k != Fraction(q - 1, pq) or deg_m != Fraction(1, q):
        raise InternalConsistencyError(
            f"generator degrees ({deg_k}, {deg_m}) do not match the dual weights")
    return gp


def _degree_of(space: StateSpace, k_index: int) -> Fraction:
    pos = 0 if k_index == 0 else space.pos_of_narrow[k_index]
    return space.basis[pos].degree


def _gen_pos(space: StateSpace, k_index: int) -> int:
    return 0 if k_index == 0 else space.pos_of_narrow[k_index]


def generator_vectors(space: StateSpace, gp: GeneratorPair):
    """State-space vectors of the two ring generators.

    For p = 2 the first generator lives in the untwisted sector; as a
    ring generator it is -q times the broad state (the same element that
    e_k^(p-1) produces for p > 2 under the +1 broad-channel convention),
    not the broad state itself.
    """
    q = space.sing.q
    k_coeff = Fraction(-q) if gp.k_index == 0 else Fraction(1)
    k_vec = {_gen_pos(space, gp.k_index): k_coeff}
    m_vec = {_gen_pos(space, gp.m_index): Fraction(1)}
    return k_vec, m_vec


def bijection(s: ChainSingularity, gp: GeneratorPair) -> IndexBijection:
    """Index map Delta -> Lambda: (s,t) -> 1+s(k-1)+t(m-1) or p-1-s+t*p."""
    p, q, pq = s.p, s.q, s.p * s.q
    forward = {}
    for u in range(p - 1):
        for t in range(q):
            if s.d == 1:
                i = (1 + u * (gp.k_index - 1) + t * (gp.m_index - 1)) % pq
            else:
                i = (p - 1 - u + t * p) % pq
            forward[(u, t)] = i
    lam = {k for k in range(1, pq) if k % p != 0}
    if set(forward.values()) != lam or len(set(forward.values())) != len(forward):
        raise InternalConsistencyError("index map is not a bijection onto Lambda")
    return IndexBijection(gp.regime, forward, {v: k for k, v in forward.items()})


def mirror_map(alg: FrobeniusAlgebra, gp: GeneratorPair, monomials) -> dict:
    """F(x^s*y^t) = e_k^s (star) e_m^t for each requested monomial."""
    space = alg.space
    k_vec, m_vec = generator_vectors(space, gp)
    monomials = list(monomials)
    images: dict = {}
    x_powers = {0: alg.unit_vec()}
    max_s = max((m[0] for m in monomials), default=0)
    for a in range(1, max_s + 1):
        x_powers[a] = alg.product_vec(x_powers[a - 1], k_vec)
    for (a, b) in monomials:
        vec = x_powers[a]
        for _ in range(b):
            vec = alg.product_vec(vec, m_vec)
        images[(a, b)] = vec
    return images


def _image_of_poly(images: dict, f: TwoVarPoly) -> dict:
    """Linear extension of the mirror map to a normal-form polynomial."""
    out: dict = {}
    for m, c in f.terms.items():
        for pos, cc in images[m].items():
            val = out.get(pos, Fraction(0)) + c * cc
            if val:
                out[pos] = val
            elif pos in out:
                del out[pos]
    return out


def verify_relations(alg: FrobeniusAlgebra, gp: GeneratorPair):
    """Evaluate e_k^{p-1} * e_m and e_k^p + q e_m^{q-1}; both must vanish."""
    space = alg.space
    p, q = space.sing.p, space.sing.q
    k_vec, m_vec = generator_vectors(space, gp)

    def vec_power(vec, n):
        out = alg.unit_vec()
        for _ in range(n):
            out = alg.product_vec(out, vec)
        return out

    r1 = alg.product_vec(vec_power(k_vec, p - 1), m_vec)
    r2 = dict(vec_power(k_vec, p))
    for pos, c in vec_power(m_vec, q - 1).items():
        val = r2.get(pos, Fraction(0)) + q * c
        if val:
            r2[pos] = val
        elif pos in r2:
            del r2[pos]
    return (not r1, not r2), (r1, r2)


def verify_isomorphism(s: ChainSingularity, alg: FrobeniusAlgebra | None = None,
                       ring: MilnorRing | None = None) -> MirrorReport:
    """Full machine check that the mirror map is a ring isomorphism."""
    alg = alg or FrobeniusAlgebra(build_state_space(s))
    ring = ring or MilnorRing(s.dual().poly())
    space = alg.space
    gp = find_generators(s)
    bij = bijection(s, gp)
    # the computed standard monomials need not coincide with the Delta
    # grid; take images of both
    wanted = set(ring.basis) | set(bij.forward)
    images = mirror_map(alg, gp, wanted)

    # the bijection lemma as a theorem: e_{f(s,t)} == e_k^s * e_m^t
    matches = 0
    for (u, t), i in bij.forward.items():
        expect = {space.pos_of_narrow[i]: Fraction(1)}
        if images[(u, t)] == expect:
            matches += 1
    table_total = len(bij.forward)

    # exact rank of the image vectors
    mat = [[images[m].get(pos, Fraction(0)) for pos in range(space.dim)]
           for m in ring.basis]
    rank_ok = _rank(mat) == len(ring.basis)

    # multiplicativity over all mu^2 basis pairs
    failures = []
    pair_checks = 0
    for mu_ in ring.basis:
        for mv in ring.basis:
            pair_checks += 1
            prod = (mu_[0] + mv[0], mu_[1] + mv[1])
            lhs = _image_of_poly(images, ring.normal_form_monomial(prod))
            rhs = alg.product_vec(images[mu_], images[mv])
            if lhs != rhs:
                failures.append({"u": mu_, "v": mv})

    (rel1, rel2), _ = verify_relations(alg, gp)
    dims_ok = space.dim == len(ring.basis)
    verdict = (dims_ok and matches == table_total and rank_ok
               and not failures and rel1 and rel2)
    return MirrorReport(
        p=s.p, q=s.q, d=s.d, generators=gp,
        dim_a=space.dim, dim_b=len(ring.basis),
        bijection_ok=True, table_matches=matches, table_total=table_total,
        rank_ok=rank_ok, pair_checks=pair_checks, pair_failures=failures,
        relation_zero_divisor=rel1, relation_power=rel2, verdict=verdict,
    )


# ---------------------------------------------------------------------------
# pairing comparison (diagnostic only)

def _integer_nth_root(x: int, n: int):
    """Exact nonnegative n-th root of x >= 0, or None."""
    if x < 0:
        return None
    if x in (0, 1) or n == 1:
        return x
    lo, hi = 0, 1
    while hi ** n < x:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid ** n < x:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo ** n == x else None


def _rational_nth_root(r: Fraction, n: int):
    """Rational n-th root of r, or None; negative r allowed for odd n."""
    if n == 0:
        return Fraction(1) if r == 1 else None
    if n < 0:
        root = _rational_nth_root(r, -n)
        return 1 / root if root not in (None, 0) else None
    sign = 1
    if r < 0:
        if n % 2 == 0:
            return None
        sign, r = -1, -r
    num = _integer_nth_root(r.numerator, n)
    den = _integer_nth_root(r.denominator, n)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def _solve_multiplicative(rows):
    """Solve a^alpha * b^beta = r for rational a, b.

    rows: list of (alpha, beta, r) with integer exponents and Fraction r.
    Returns (a, b) or None.  Works by integer elimination on the exponent
    columns with the values combined multiplicatively.
    """
    rows = [(al, be, Fraction(r)) for al, be, r in rows if (al, be) != (0, 0) or r != 1]
    for al, be, r in rows:
        if (al, be) == (0, 0) and r != 1:
            return None

    def eliminate(rows, col):
        rows = [row for row in rows if row[col] != 0 or row[1 - col] != 0 or row[2] != 1]
        active = [row for row in rows if row[col] != 0]
        rest = [row for row in rows if row[col] == 0]
        while len(active) > 1:
            active.sort(key=lambda row: abs(row[col]))
            base = active[0]
            new_active = [base]
            for row in active[1:]:
                t = row[col] // base[col]
                if base[2] == 0:
                    return None, None
                combined = (row[0] - t * base[0], row[1] - t * base[1],
                            row[2] / base[2] ** t)
                if combined[col] != 0:
                    new_active.append(combined)
                elif combined != (0, 0, Fraction(1)):
                    rest.append(combined)
            active = new_active
            if len(active) == 1:
                break
        return (active[0] if active else None), rest

    pivot_a, rest = eliminate(rows, 0)
    if rest is None:
        return None
    pivot_b, leftovers = eliminate(rest, 1)
    if leftovers is None:
        return None
    for al, be, r in leftovers or []:
        if (al, be) == (0, 0) and r != 1:
            return None
    if pivot_b is not None:
        b = _rational_nth_root(pivot_b[2], pivot_b[1])
        if b is None:
            return None
    else:
        b = Fraction(1)
    if pivot_a is not None:
        if b == 0:
            return None
        a = _rational_nth_root(pivot_a[2] / b ** pivot_a[1], pivot_a[0])
        if a is None:
            return None
    else:
        a = Fraction(1)
    for al, be, r in rows:
        if a ** al * b ** be != r:
            return None
    return a, b


def compare_pairings(s: ChainSingularity, alg: FrobeniusAlgebra | None = None,
                     ring: MilnorRing | None = None) -> dict:
    """Diagnostic comparison of the residue pairing and the pulled-back eta.

    Reports the two Gram matrices, the entrywise ratios where both are
    nonzero, and the result of searching for a generator rescaling
    (a, b) with a^p = b^(q-1) that makes them equal.  Never a pass/fail
    gate: the cross-model normalization is not pinned down.
    """
    alg = alg or FrobeniusAlgebra(build_state_space(s))
    ring = ring or MilnorRing(s.dual().poly())
    gp = find_generators(s)
    images = mirror_map(alg, gp, ring.basis)
    n = len(ring.basis)
    gram_b = ring.gram_matrix()
    gram_a = [[alg.eta_vec(images[ring.basis[u]], images[ring.basis[v]])
               for v in range(n)] for u in range(n)]
    zero_pattern_match = all(
        (gram_a[u][v] == 0) == (gram_b[u][v] == 0)
        for u in range(n) for v in range(n))
    ratios = []
    constraints = [(s.p, -(s.q - 1), Fraction(1))]
    for u in range(n):
        for v in range(u, n):
            if gram_a[u][v] != 0 and gram_b[u][v] != 0:
                ratio = gram_a[u][v] / gram_b[u][v]
                mu_, mv = ring.basis[u], ring.basis[v]
                ratios.append({"u": mu_, "v": mv, "ratio": rat_str(ratio)})
                constraints.append((mu_[0] + mv[0], mu_[1] + mv[1], ratio))
    rescaling = None
    obstruction = None
    if zero_pattern_match:
        solved = _solve_multiplicative(constraints)
        if solved is not None:
            rescaling = {"a": rat_str(solved[0]), "b": rat_str(solved[1])}
        else:
            obstruction = "no rational rescaling with a^p = b^(q-1) matches all ratios"
    else:
        obstruction = "gram matrices have different zero patterns"
    return {
        "basis": [list(m) for m in ring.basis],
        "gram_residue": [[rat_str(x) for x in row] for row in gram_b],
        "gram_eta_pulled_back": [[rat_str(x) for x in row] for row in gram_a],
        "zero_pattern_match": zero_pattern_match,
        "ratios": ratios,
        "rescaling": rescaling,
        "obstruction": obstruction,
    }


# ---------------------------------------------------------------------------
# combined verification used by the CLI and the acceptance suite

def verification_suite(p: int, q: int) -> list[tuple[str, bool, str]]:
    """Every invariant check for one (p, q); list of (name, ok, detail)."""
    from . import checks

    s = make_chain(p, q)
    space = build_state_space(s)
    alg = FrobeniusAlgebra(space)
    results = []
    results.append(("state_space", *checks.check_state_space(space)))
    results.append(("pairing_consistency", *checks.check_pairing_consistency(alg)))
    results.append(("pairing_nondegenerate", *checks.check_pairing_nondegenerate(alg)))
    results.append(("commutativity", *checks.check_commutativity(alg)))
    results.append(("associativity", *checks.check_associativity(alg)))
    results.append(("unit_law", *checks.check_unit_law(alg)))
    results.append(("frobenius_compatibility", *checks.check_frobenius(alg)))
    results.append(("grading", *checks.check_grading(alg)))
    report = verify_isomorphism(s, alg=alg)
    results.append(("mirror_isomorphism", report.verdict,
                    f"{report.table_matches}/{report.table_total} table rows, "
                    f"{report.pair_checks} pair checks"))
    results.append(("generator_relations",
                    report.relation_zero_divisor and report.relation_power,
                    "e_k^(p-1)*e_m = 0 and e_k^p + q*e_m^(q-1) = 0"))
    results.append(("broad_pairing_residue", *checks.check_broad_residue(s)))
    return results
