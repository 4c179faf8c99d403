"""Twisted string K-theory models for quaternionic projective spaces.

Three layers: the truncated rank-one module (additive structure of the
intermediate sphere-bundle space), the two-variable loop-space ring with its
t-shifted relation, and the combinatorial path tables that resolve the
additive extensions of the latter.  Every closed form here is backed by a
Smith-form oracle on the corresponding relation lattice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .abelian import AbelianPStructure
from .chebyshev import sigma
from .completion import delta, prime_factors, v_p
from .fusion import cached_fusion_ring, det_T
from .intmatrix import hermite_basis, lattice_index_coords, snf_diagonal


# ---------------------------------------------------------------------------
# additive structure of the intermediate space: epsilon and its oracle
# ---------------------------------------------------------------------------

def _window(j: int, p: int, d: int) -> int:
    """Largest a >= 0 with (p^a - 1)/(p - 1) * d <= j."""
    a = 0
    while (p ** (a + 1) - 1) // (p - 1) * d <= j:
        a += 1
    return a


def epsilon(p: int, ell: int, r: int, m: int) -> int:
    """Cyclic-summand exponent for the r-th generator at truncation ell.

    Nonzero exactly when p | m, r <= ell + 1 and r <= delta(p, m); the window
    index runs over 1..v_p(m) for every prime.  The value is the length of
    the extension path starting in column r - 1: a vertical run of
    v_p(m) - a steps followed by horizontal steps of size p^a * d.
    """
    if m % p or r < 1 or r > ell + 1:
        return 0
    i = v_p(m, p)
    j = r - 1
    if j >= delta(p, m):
        return 0
    d = 1 if p == 2 else (p - 1) // 2
    a = _window(j, p, d)
    return (i - a) + (ell - j) // (p ** a * d)


def y_group_structure(m: int, ell: int) -> dict:
    """Additive structure by the closed form, per prime dividing m."""
    if m < 2 or ell < 1:
        raise ValueError("need m >= 2 and ell >= 1")
    out = {}
    for p in prime_factors(m):
        exps = [epsilon(p, ell, r, m) for r in range(1, ell + 2)]
        out[p] = AbelianPStructure(p, tuple(e for e in exps if e > 0))
    return out


def _y_module_rows(m: int, ell: int) -> list[list[int]]:
    s = sigma(m - 1)
    nb = ell + 1
    rows = []
    for sh in range(nb):
        row = [0] * nb
        for i, c in enumerate(s):
            if sh + i < nb:
                row[sh + i] = c
        rows.append(row)
    return rows


def y_group_oracle(m: int, ell: int, p: int) -> AbelianPStructure:
    """Smith-form p-part of Z[y]/(sigma_{m-1}(y), y^{ell+1})."""
    diag = snf_diagonal(_y_module_rows(m, ell))
    return AbelianPStructure.from_diagonal(p, diag)


# ---------------------------------------------------------------------------
# quotient ring models
# ---------------------------------------------------------------------------

@dataclass
class QuotientRingZ:
    """A presented commutative ring: variables, relations, truncations."""

    variables: tuple
    relations: tuple          # human-readable strings
    degrees: dict             # variable -> homotopy degree
    metadata: dict = field(default_factory=dict)


def omega_hp_ring(m: int, ell: int) -> QuotientRingZ:
    """Based-loop model (Z/m)[t] with |t| = 4*ell + 2."""
    if m < 1:
        raise ValueError("m must be positive")
    rel = ("%d = 0" % m,) if m > 1 else ("1 = 0",)
    meta = {
        "zero_ring": m == 1,
        "additive_rank_per_degree": 0 if m == 1 else 1,
        "generator_degrees": [(4 * ell + 2) * q for q in range(5)],
    }
    return QuotientRingZ(variables=("t",), relations=rel,
                         degrees={"t": 4 * ell + 2}, metadata=meta)


class LoopSpaceRing:
    """Z[t, y]/(y^{ell+1}, sigma_{m-1}(y) - (ell+1) y^ell t) with lattice normal forms.

    Elements are dicts {(j, n): int} over the monomials y^j t^n with j <= ell.
    Equality and normal forms work inside a bounded t-window: the window-D
    relation lattice is spanned by the y-truncated multiples of the defining
    relation, and a normal form is the Hermite reduction of the coefficient
    vector.  Windows are extended with a buffer so results are stable.
    """

    def __init__(self, m: int, ell: int):
        if m < 2 or ell < 1:
            raise ValueError("need m >= 2 and ell >= 1")
        self.m = m
        self.ell = ell
        self.sigma = sigma(m - 1)
        self._lattices: dict = {}
        self.N_metadata = m * m // gcd(m, ell + 1)

    def describe(self) -> QuotientRingZ:
        rel = ("y^%d = 0" % (self.ell + 1),
               "sigma_%d(y) = %d * y^%d * t" % (self.m - 1, self.ell + 1, self.ell))
        return QuotientRingZ(
            variables=("t", "y"), relations=rel,
            degrees={"t": 4 * self.ell + 2, "y": -4},
            metadata={"d5_scale": self.N_metadata})

    # -- monomial/vector plumbing ------------------------------------------

    def _basis(self, D: int):
        return [(j, n) for n in range(D) for j in range(self.ell + 1)]

    def _vec(self, elem: dict, D: int):
        idx = {b: i for i, b in enumerate(self._basis(D))}
        v = [0] * len(idx)
        for (j, n), c in elem.items():
            if c and n < D:
                v[idx[(j, n)]] += c
        return v

    def relation_lattice(self, D: int, order: str = "forward"):
        """Hermite basis of the window-D relation lattice.

        order selects the generator enumeration; the basis is canonical,
        which is what the confluence check exercises.
        """
        key = (D, "basis")
        if key in self._lattices:
            return self._lattices[key]
        idx = {b: i for i, b in enumerate(self._basis(D))}
        rows = []
        span = [(j0, n0) for j0 in range(self.ell + 1) for n0 in range(D)]
        if order == "reversed":
            span = list(reversed(span))
        for (j0, n0) in span:
            row = [0] * len(idx)
            for i, c in enumerate(self.sigma):
                if j0 + i <= self.ell:
                    row[idx[(j0 + i, n0)]] += c
            if n0 + 1 < D:
                row[idx[(self.ell, n0 + 1)]] -= (self.ell + 1)
            rows.append(row)
        basis = hermite_basis(rows)
        self._lattices[key] = basis
        return basis

    def _window_for(self, elem: dict) -> int:
        tmax = max((n for (j, n), c in elem.items() if c), default=0)
        return tmax + 3

    def normal_form(self, elem: dict, D: int | None = None) -> dict:
        """Canonical representative modulo the window-D relation lattice."""
        D = D or self._window_for(elem)
        basis = self.relation_lattice(D)
        v = self._vec(elem, D)
        nc = len(v)
        for b in basis:
            lead = next(j for j in range(nc) if b[j])
            q = v[lead] // b[lead]
            if q:
                for j in range(nc):
                    v[j] -= q * b[j]
        out = {}
        for bmon, c in zip(self._basis(D), v):
            if c:
                out[bmon] = c
        return out

    def is_zero(self, elem: dict, D: int | None = None) -> bool:
        D = D or self._window_for(elem)
        basis = self.relation_lattice(D)
        return lattice_index_coords(basis, self._vec(elem, D)) is not None

    def multiply(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for (j1, n1), c1 in a.items():
            for (j2, n2), c2 in b.items():
                j, n = j1 + j2, n1 + n2
                if j > self.ell:
                    continue
                out[(j, n)] = out.get((j, n), 0) + c1 * c2
        return self.normal_form(out)

    def sigma_element(self) -> dict:
        return {(j, 0): c for j, c in enumerate(self.sigma) if c and j <= self.ell}

    def t_shift_element(self) -> dict:
        return {(self.ell, 1): self.ell + 1}

    def quotient_by_t_rows(self) -> list[list[int]]:
        """Relation rows of the quotient by (t): recovers the rank-one module."""
        return _y_module_rows(self.m, self.ell)

    def t_layer_structure(self, n: int, p: int, D: int | None = None) -> AbelianPStructure:
        """p-part of (t^n)/(t^{n+1}) inside the window; matches the rank-one module."""
        D = D or (n + 3)
        basis = self.relation_lattice(D)
        kept = self._basis(D)
        tn_rows = []
        for (j, nn) in kept:
            if nn == n:
                e = {(j, nn): 1}
                tn_rows.append(self._vec(e, D))
        # relations on the layer: lattice elements and t^{n+1} monomials,
        # projected to the t^n coordinates
        idx = {b: i for i, b in enumerate(kept)}
        proj_cols = [idx[(j, n)] for j in range(self.ell + 1)]
        rel_rows = []
        for b in basis:
            if any(b[idx[(j, nn)]] for j in range(self.ell + 1) for nn in range(n)):
                continue
            rel_rows.append([b[c] for c in proj_cols])
        diag = snf_diagonal(rel_rows) if rel_rows else []
        return AbelianPStructure.from_diagonal(p, diag)


def lhp_ring(m: int, ell: int) -> LoopSpaceRing:
    return LoopSpaceRing(m, ell)


# ---------------------------------------------------------------------------
# path tables
# ---------------------------------------------------------------------------

@dataclass
class Path:
    table: int                # index of the table holding the start cell
    start_col: int
    cells: list               # [(table, row, col)] in chain order

    @property
    def length(self) -> int:
        return len(self.cells)


@dataclass
class PathTable:
    prime: int
    m: int
    ell: int
    tables: int               # number of tables built
    rows: int                 # v_p(m)
    paths: list               # list of Path

    def in_window_paths(self, D: int):
        """Paths fully inside tables 0..D-1, split (reliable, boundary-flagged).

        A path is boundary-flagged when it touches column ell of table D-1:
        the correction step for table D-1 reaches into table D, so those
        summands cannot be trusted after truncation.
        """
        reliable, flagged = [], []
        for path in self.paths:
            if path.table >= D or not path.cells:
                continue
            if any(tb >= D for (tb, _, _) in path.cells):
                continue
            if any(tb == D - 1 and c == self.ell for (tb, _, c) in path.cells):
                flagged.append(path)
            else:
                reliable.append(path)
        return reliable, flagged


def base_paths(m: int, ell: int, p: int) -> list[list[tuple]]:
    """Uncorrected paths of one table: cell lists [(row, col)].

    Paths start in columns 0..min(ell, delta - 1); from column j in window a
    they climb rows 0..k-a-1 and then move right in steps of p^a * d.
    """
    i = v_p(m, p)
    if i == 0:
        return []
    k = i
    d = 1 if p == 2 else (p - 1) // 2
    dl = delta(p, m)
    out = []
    for j in range(0, min(ell, dl - 1) + 1):
        a = _window(j, p, d)
        cells = [(r, j) for r in range(0, k - a)]
        step = p ** a * d
        col = j + step
        while col <= ell:
            cells.append((k - a - 1, col))
            col += step
        out.append(cells)
    return out


def lhp_additive_path_table(m: int, ell: int, p: int, t_cutoff: int,
                            extra_tables: int = 3):
    """Corrected path tables for the loop-space module, plus summand data.

    Builds t_cutoff + extra_tables copies of the base table and then runs the
    correction pass: for each table n and each critical start column j
    (window lower bounds), cells in column ell of table n+1 are moved onto
    the critical path.  With c = v_p(gcd(m, ell+1)) and alpha one less than
    the number of surviving cells in the path's highest row, the candidate
    cells sit in rows c + alpha + d for d = 0, 1, ... and are taken when
    their original divisibility is at most alpha + d + k - a.

    Returns (PathTable, reliable_structure) where the structure lists the
    p-power exponents of the reliable in-window summands.
    """
    if m % p:
        raise ValueError("p must divide m")
    if t_cutoff < 1:
        raise ValueError("t_cutoff must be positive")
    i = v_p(m, p)
    k = i
    d = 1 if p == 2 else (p - 1) // 2
    D_build = t_cutoff + extra_tables
    base = base_paths(m, ell, p)
    paths: dict = {}
    divis: dict = {}
    owner: dict = {}
    for n in range(D_build):
        for cells in base:
            j = cells[0][1]
            key = (n, j)
            paths[key] = [(n, r, c) for (r, c) in cells]
            for pos, (r, c) in enumerate(cells):
                divis[(n, r, c)] = pos
                owner[(n, r, c)] = key
    criticals = sorted(cells[0][1] for cells in base
                       if cells[0][1] ==
                       (p ** _window(cells[0][1], p, d) - 1) // (p - 1) * d)
    c_ = v_p(gcd(m, ell + 1), p) if gcd(m, ell + 1) % p == 0 else 0
    for n in range(D_build - 1):
        taken: set = set()
        for j in criticals:
            a = _window(j, p, d)
            own = [(tb, r, c) for (tb, r, c) in paths[(n, j)] if tb == n]
            if not own:
                continue
            hrow = max(r for (_tb, r, _c) in own)
            alpha = sum(1 for (_tb, r, _c) in own if r == hrow) - 1
            appended = []
            dd = 0
            while True:
                row = c_ + alpha + dd
                if row >= k:
                    break
                cell = (n + 1, row, ell)
                if cell in divis and cell not in taken \
                        and divis[cell] <= alpha + dd + k - a:
                    appended.append(cell)
                    taken.add(cell)
                dd += 1
            for cell in appended:
                paths[owner[cell]].remove(cell)
            paths[(n, j)].extend(sorted(appended, key=lambda x: x[1]))
    plist = [Path(table=n, start_col=j, cells=cells)
             for (n, j), cells in sorted(paths.items())]
    table = PathTable(prime=p, m=m, ell=ell, tables=D_build, rows=k, paths=plist)
    reliable, _flagged = table.in_window_paths(t_cutoff)
    structure = AbelianPStructure(p, tuple(path.length for path in reliable))
    return table, structure


def lhp_truncated_oracle(m: int, ell: int, p: int, t_cutoff: int) -> AbelianPStructure:
    """Smith-form p-part of Z[t,y]/(y^{ell+1}, sigma - (ell+1) y^ell t, t^D)."""
    s = sigma(m - 1)
    ny = ell + 1
    basis = [(j, n) for n in range(t_cutoff) for j in range(ny)]
    idx = {b: i for i, b in enumerate(basis)}
    rows = []
    for j0 in range(ny):
        for n0 in range(t_cutoff):
            row = [0] * len(basis)
            for i, c in enumerate(s):
                if j0 + i < ny:
                    row[idx[(j0 + i, n0)]] += c
            if n0 + 1 < t_cutoff:
                row[idx[(ell, n0 + 1)]] -= (ell + 1)
            rows.append(row)
    diag = snf_diagonal(rows)
    if len(diag) != len(basis) or 0 in diag:
        raise AssertionError("truncated module is not finite")
    return AbelianPStructure.from_diagonal(p, diag)


# ---------------------------------------------------------------------------
# string coproduct and the genus-one operator
# ---------------------------------------------------------------------------

@dataclass
class CoproductValues:
    m: int
    ell: int
    prime: int
    nu_one: str
    nu_t: str
    nu_t_nonzero: bool
    coefficient_condition: bool
    delta_condition: bool


def sigma_coefficient_condition(m: int, ell: int, p: int) -> bool:
    """Lowest sigma_{m-1} coefficient prime to p sits exactly in degree ell."""
    s = sigma(m - 1)
    for i, c in enumerate(s):
        if c % p:
            return i == ell
    return False


def coproduct_values(m: int, ell: int, p: int) -> CoproductValues:
    """String coproduct values on the unit and on t, mod p.

    nu(1) is always (ell+1) y^ell (x) y^ell; nu(t) is y^ell (x) y^ell exactly
    when ell equals delta(p, m), and zero otherwise.  Both the coefficient
    criterion and the delta criterion are evaluated and must agree.
    """
    if m % p:
        raise ValueError("p must divide m")
    cond_coeff = sigma_coefficient_condition(m, ell, p)
    cond_delta = (ell == delta(p, m))
    nz = cond_delta
    return CoproductValues(
        m=m, ell=ell, prime=p,
        nu_one="%d * y^%d (x) y^%d" % (ell + 1, ell, ell),
        nu_t="y^%d (x) y^%d" % (ell, ell) if nz else "0",
        nu_t_nonzero=nz,
        coefficient_condition=cond_coeff,
        delta_condition=cond_delta)


@dataclass
class EulerReport:
    ell: int
    euler_class: str
    euler_square_zero: bool
    string_T_zero: bool
    verlinde_det_T: int | None


def euler_and_T(ell: int, verlinde_m: int | None = None) -> EulerReport:
    """E = (ell+1) y^ell in Z[y]/(y^{ell+1}): E^2 = 0, so the string-side T = 0.

    Optionally carries det T of a fusion ring V(m, 1) to exhibit the contrast
    with the never-vanishing handle determinant on the fusion side.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    euler = {ell: ell + 1}
    square = {}
    for d1, c1 in euler.items():
        for d2, c2 in euler.items():
            if d1 + d2 <= ell:
                square[d1 + d2] = square.get(d1 + d2, 0) + c1 * c2
    square_zero = not any(square.values())
    dt = None
    if verlinde_m is not None:
        dt = det_T(cached_fusion_ring(verlinde_m, 1))
    return EulerReport(ell=ell,
                       euler_class="%d * y^%d" % (ell + 1, ell),
                       euler_square_zero=square_zero,
                       string_T_zero=True,
                       verlinde_det_T=dt)
