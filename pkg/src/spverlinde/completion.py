"""Augmentation-ideal completions of the fusion rings V(m, n).

The closed-form side (delta counts and binomial ranks) is checked against a
Groebner-basis local-dimension computation over F_p, and the filtration side
is computed by exact lattice arithmetic in the rank-one model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd

from .abelian import INF, AbelianPStructure
from .chebyshev import sigma, sym
from .fusion import (bent_character_poly, fundamental_dims, gamma_polynomials,
                     level_labels)
from .groebner import GroebnerBasisFp, ResourceLimit, buchberger
from .intmatrix import (hermite_basis, lattice_contains, snf_diagonal,
                        sublattice_quotient)
from .multipoly import mp_add, mp_const, mp_substitute, mp_var
from .unipoly import pmod_monic, pmul


def v_p(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def delta(p: int, m: int) -> int:
    """Number of Z_p summands in the completed rank-one ring at level m.

    With p^i exactly dividing m this is (p^i - 1)/2 for odd p and 2^i - 1
    for p = 2; equivalently the count of 2m-th roots of unity with positive
    imaginary part that are p-power roots of unity.
    """
    if m < 1:
        raise ValueError("m must be positive")
    i = 0
    mm = m
    while mm % p == 0:
        mm //= p
        i += 1
    return (2 ** i - 1) if p == 2 else (p ** i - 1) // 2


def delta_root_count(p: int, m: int) -> int:
    """Direct enumeration oracle for delta: k in 1..m-1 with zeta_2m^k of p-power order."""
    count = 0
    for k in range(1, m):
        o = 2 * m // gcd(2 * m, k)
        while o % p == 0:
            o //= p
        if o == 1:
            count += 1
    return count


def prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def completion_structure_sp1(m: int) -> dict:
    """Completed V(m, 1) as a sum of delta(p, m) copies of Z_p per prime p | m."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return {p: AbelianPStructure.free(p, delta(p, m)) for p in prime_factors(m)}


def completion_rank_formula(m: int, n: int, p: int) -> int:
    """Number of Z_p copies in the completed V(m, n): C(delta(p, m), n)."""
    if m < n + 2:
        raise ValueError("need m >= n + 2")
    d = delta(p, m)
    return comb(d, n) if d >= n else 0


def local_dimension_groebner(m: int, n: int, p: int,
                             max_steps: int = 500_000) -> int:
    """F_p-dimension of the completed local quotient, by Buchberger.

    The ideal is generated by the level-(m-n) characters written in the
    augmentation variables u_i = x_i - dim x_i, together with u_i^N for
    N = C(m-1, n); the dimension is the standard-monomial count.
    """
    if m < n + 2:
        raise ValueError("need m >= n + 2")
    N = comb(m - 1, n)
    dims = fundamental_dims(n)
    subs = [mp_add(mp_var(n, i), mp_const(n, dims[i])) for i in range(n)]
    gens = []
    for lam in level_labels(n, m - n):
        gens.append(mp_substitute(bent_character_poly(n, lam), subs, n))
    for i in range(n):
        e = [0] * n
        e[i] = N
        gens.append({tuple(e): 1})
    gb = buchberger(gens, n, prime=p, max_steps=max_steps)
    return gb.standard_monomial_count()


def groebner_basis_for(m: int, n: int, p: int,
                       permutation=None, max_steps: int = 500_000) -> GroebnerBasisFp:
    """The reduced basis itself, optionally under a variable permutation."""
    N = comb(m - 1, n)
    dims = fundamental_dims(n)
    perm = list(permutation) if permutation is not None else list(range(n))
    subs = [mp_add(mp_var(n, perm[i]), mp_const(n, dims[i])) for i in range(n)]
    gens = []
    for lam in level_labels(n, m - n):
        gens.append(mp_substitute(bent_character_poly(n, lam), subs, n))
    for i in range(n):
        e = [0] * n
        e[i] = N
        gens.append({tuple(e): 1})
    return buchberger(gens, n, prime=p, max_steps=max_steps)


# ---------------------------------------------------------------------------
# completion tower in the rank-one model
# ---------------------------------------------------------------------------

@dataclass
class TowerStage:
    stage: int                    # truncation exponent: quotient by y^(stage+1)
    p_structure: AbelianPStructure


@dataclass
class TowerReport:
    m: int
    prime: int
    stages: list
    surjective: bool
    summand_counts: list
    stabilized_count: int


def _stage_lattice_rows(m: int, ell: int) -> list[list[int]]:
    s = sigma(m - 1)
    nbasis = ell + 1
    rows = []
    for sh in range(nbasis):
        row = [0] * nbasis
        for i, c in enumerate(s):
            if sh + i < nbasis:
                row[sh + i] = c
        rows.append(row)
    return rows


def stage_group(m: int, ell: int, p: int) -> AbelianPStructure:
    """p-part of Z[y]/(sigma_{m-1}(y), y^{ell+1})."""
    diag = snf_diagonal(_stage_lattice_rows(m, ell))
    return AbelianPStructure.from_diagonal(p, diag)


def completion_tower_sp1(m: int, ell_max: int, p: int,
                         precision: int = 0) -> TowerReport:
    """Finite stages of the completion tower and their stabilization.

    Checks that each quotient map from stage ell+1 to stage ell is a
    well-defined surjective ring map (the relation lattice projects into the
    smaller one), and that summand counts grow to delta(p, m) while sorted
    exponents are monotone in ell.  precision is accepted for interface
    stability; the computation is exact and does not truncate.
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    stages = []
    surjective = True
    for ell in range(ell_max + 1):
        stages.append(TowerStage(ell, stage_group(m, ell, p)))
        if ell > 0:
            big = _stage_lattice_rows(m, ell)
            small = hermite_basis(_stage_lattice_rows(m, ell - 1))
            for row in big:
                if not lattice_contains(small, row[:ell]):
                    surjective = False
    counts = [len(st.p_structure.exponents) for st in stages]
    d = delta(p, m)
    expected = [min(e + 1, d) for e in range(ell_max + 1)]
    stabilized = sum(1 for c, e in zip(counts, expected) if c == e)
    monotone = True
    for a, b in zip(stages, stages[1:]):
        ea = sorted(a.p_structure.exponents, reverse=True)
        eb = sorted(b.p_structure.exponents, reverse=True)
        if len(eb) < len(ea) or any(y < x for x, y in zip(ea, eb)):
            monotone = False
    return TowerReport(m=m, prime=p, stages=stages,
                       surjective=surjective and monotone,
                       summand_counts=counts, stabilized_count=stabilized)


# ---------------------------------------------------------------------------
# associated graded of the weighted augmentation filtration
# ---------------------------------------------------------------------------

@dataclass
class FiltrationReport:
    n: int
    pieces: list                  # per-degree lists of invariant factors != 1
    two_degree: int               # filtration degree of the ring element 2
    relations: dict = field(default_factory=dict)

    def piece_structure(self, p: int) -> list:
        return [AbelianPStructure.from_diagonal(p, piece) for piece in self.pieces]

    def total_order_exponent(self, p: int) -> int:
        tot = 0
        for piece in self.pieces:
            for d in piece:
                tot += v_p(d, p)
        return tot


def _minimal_weighted_exponents(n: int, k: int) -> list[tuple]:
    """Exponent vectors alpha with sum(i*alpha_i) >= k, minimal in divisibility."""
    gens = []

    def rec(i, alpha, w):
        if w >= k:
            gens.append(tuple(alpha))
            return
        if i > n:
            return
        for a in range(0, (k + i - 1 - w) // i + 1):
            alpha2 = list(alpha)
            alpha2[i - 1] = a
            w2 = w + a * i
            if w2 < k + i:
                rec(i + 1, alpha2, w2)

    rec(1, [0] * n, 0)
    minimal = []
    for g in gens:
        w = sum((i + 1) * a for i, a in enumerate(g))
        if w >= k and all(w - (i + 1) < k for i, a in enumerate(g) if a):
            minimal.append(g)
    return minimal


def weighted_power_lattice(n: int, gammas, modulus, k: int) -> list[list[int]]:
    """Hermite basis of the ideal generated by weight >= k gamma monomials.

    The weight of gamma_i is i; the ambient ring is Z[x]/modulus with the
    power basis 1..x^{deg-1}.
    """
    nb = len(modulus) - 1
    if k <= 0:
        return hermite_basis([[1 if i == j else 0 for i in range(nb)]
                              for j in range(nb)])
    xpows = [[1]]
    for _ in range(nb - 1):
        xpows.append(pmul(xpows[-1], [0, 1]))
    rows = []
    for alpha in _minimal_weighted_exponents(n, k):
        g = [1]
        for i, a in enumerate(alpha):
            for _ in range(a):
                g = pmod_monic(pmul(g, gammas[i]), modulus)
        for xp in xpows:
            v = pmod_monic(pmul(xp, g), modulus)
            rows.append([v[i] if i < len(v) else 0 for i in range(nb)])
    return hermite_basis(rows)


def associated_graded(n: int, ideal_gens=None, kmax: int | None = None) -> FiltrationReport:
    """Graded pieces of the weighted gamma filtration on Z[x]/Sym_{n+1}(x).

    Piece k is F^k / F^{k+1} where F^k is the ideal generated by gamma
    monomials of total weight at least k.  Also locates the filtration
    degree of the integer 2 and, when n = 2^r - 2, verifies the standard
    representing relations.
    """
    gammas = ideal_gens if ideal_gens is not None else gamma_polynomials(n)
    modulus = sym(n + 1)
    nb = n + 1
    r = (n + 2).bit_length() - 1
    if kmax is None:
        kmax = 2 ** (r - 1) + 4 if (1 << r) == n + 2 else n + 4
    lattices = [weighted_power_lattice(n, gammas, modulus, k)
                for k in range(kmax + 2)]
    pieces = []
    for k in range(kmax + 1):
        big = [list(row) for row in lattices[k]]
        small = [list(row) for row in lattices[k + 1]]
        pieces.append(sublattice_quotient(big, small))
    two = [2] + [0] * (nb - 1)
    two_degree = 0
    for k in range(kmax + 2):
        if lattice_contains(lattices[k], two):
            two_degree = k
        else:
            break
    relations = {}
    if (1 << r) == n + 2 and n >= 2:
        h = 2 ** (r - 1)
        g1p = [1]
        for _ in range(h):
            g1p = pmod_monic(pmul(g1p, gammas[0]), modulus)
        rep = pmod_monic(
            [a + b for a, b in zip(gammas[h - 1] + [0] * nb, g1p + [0] * nb)],
            modulus)
        diff = [(2 if i == 0 else 0) - (rep[i] if i < len(rep) else 0)
                for i in range(nb)]
        relations["two_rep_ok"] = (two_degree + 1 <= kmax + 1 and
                                   lattice_contains(lattices[two_degree + 1], diff))
        if n >= 2:
            g1g2 = pmod_monic(pmul(gammas[0], gammas[1]), modulus)
            v = [g1g2[i] if i < len(g1g2) else 0 for i in range(nb)]
            relations["gamma1_gamma2_degree4"] = lattice_contains(lattices[min(4, kmax + 1)], v)
    return FiltrationReport(n=n, pieces=pieces, two_degree=two_degree,
                            relations=relations)


def expected_graded_dims(r: int, kmax: int) -> list[int]:
    """Model dimensions: one generator per degree 0..2^r-2, doubling shift 2^{r-1}."""
    h = 2 ** (r - 1)
    dims = []
    for k in range(kmax + 1):
        dims.append(sum(1 for j in range(2 ** r - 1)
                        for s in range(k // h + 1) if j + s * h == k))
    return dims
