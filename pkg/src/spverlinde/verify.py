"""Formula-versus-oracle verification sweeps.

Every closed formula in the package is paired with an independent
computation; this module runs those pairs over parameter grids and reports a
pass/fail matrix.  Conjectural comparisons are reported at info level and
never fail the sweep.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, asdict
from math import comb, gcd

from . import chebyshev, completion, fusion, ktheory
from .abelian import AbelianPStructure
from .intmatrix import snf_diagonal


@dataclass
class CheckResult:
    check: str
    params: str
    status: str               # "pass" | "fail" | "info"
    detail: str = ""

    def row(self):
        return asdict(self)


def _res(check, params, ok, detail=""):
    return CheckResult(check, params, "pass" if ok else "fail", detail)


# --- individual checks (top-level for pool pickling) -----------------------

def check_det_t_sp1(m: int):
    ring = fusion.cached_fusion_ring(m, 1)
    d = fusion.det_T(ring)
    closed = fusion.det_T_closed_form_sp1(m)
    signed = fusion.det_T_signed_form_sp1(m)
    rows = [_res("det_T_sp1", "m=%d" % m, d == closed,
                 "det=%d closed=%d" % (d, closed))]
    if d != signed:
        rows.append(CheckResult("det_T_sp1_signed_form", "m=%d" % m, "info",
                                "printed sign differs: det=%d signed=%d" % (d, signed)))
    return rows


def check_fusion_axioms(m: int, n: int, seed: int = 0):
    R = fusion.cached_fusion_ring(m, n)
    L = R.size
    u = R.unit_index
    ok_unit = all(R.N(u, a, c) == (1 if c == a else 0)
                  for a in range(L) for c in range(L))
    ok_pair = all(R.N(a, b, u) == (1 if a == b else 0)
                  for a in range(L) for b in range(L))
    ok_count = (L == comb(m - 1, n))
    if L <= 60:
        triples = [(a, b, c) for a in range(L) for b in range(a, L)
                   for c in range(b, L)]
    else:
        rng = random.Random(seed)
        triples = [(rng.randrange(L), rng.randrange(L), rng.randrange(L))
                   for _ in range(500)]
    ok_assoc = True
    for a, b, c in triples:
        for d_ in range(L):
            lhs = sum(R.N(a, b, e) * R.N(e, c, d_) for e in range(L))
            rhs = sum(R.N(b, c, e) * R.N(a, e, d_) for e in range(L))
            if lhs != rhs:
                ok_assoc = False
                break
        if not ok_assoc:
            break
    return [
        _res("fusion_unit_row", "m=%d n=%d" % (m, n), ok_unit),
        _res("fusion_pairing_identity", "m=%d n=%d" % (m, n), ok_pair),
        _res("fusion_label_count", "m=%d n=%d" % (m, n), ok_count,
             "labels=%d" % L),
        _res("fusion_associativity", "m=%d n=%d" % (m, n), ok_assoc,
             "exhaustive" if L <= 60 else "randomized"),
    ]


def check_sp1_specialization(m: int):
    R = fusion.cached_fusion_ring(m, 1)
    ref = fusion.sp1_constants(m)
    mine = {(a, b, c): R.N(a, b, c)
            for a in range(R.size) for b in range(a, R.size)
            for c in range(R.size) if R.N(a, b, c)}
    return [_res("sp1_specialization", "m=%d" % m, mine == ref)]


def check_level_rank_level1(n: int):
    """Level <= 1 subtable of V(n+2, n) matches the rank-one recursion."""
    m = n + 2
    R = fusion.cached_fusion_ring(m, n)
    cols = [()] + [tuple([1] * k) for k in range(1, n + 1)]
    idx = [R.labels.index(lam) for lam in cols]
    ok = True
    x1 = idx[1]
    for i in range(1, n):
        row = R.product_row(idx[i], x1)
        expect = [0] * R.size
        expect[idx[i + 1]] += 1
        expect[idx[i - 1]] += 1
        ok = ok and row == expect
    row = R.product_row(idx[n], x1)
    expect = [0] * R.size
    expect[idx[n - 1]] += 1
    ok = ok and row == expect
    return [_res("level_rank_level1", "n=%d" % n, ok)]


def check_braun_douglas(m: int, n: int):
    bd = fusion.braun_douglas(m, n)
    bs = fusion.braun_douglas_via_sums(m, n)
    ca = fusion.braun_douglas_closed_form(m, n, reading="m")
    cb = fusion.braun_douglas_closed_form(m, n, reading="n")
    rows = [
        _res("braun_douglas_sums", "m=%d n=%d" % (m, n), bd == bs,
             "dims-gcd=%d sums=%d" % (bd, bs)),
        _res("braun_douglas_closed_m", "m=%d n=%d" % (m, n), ca == bd,
             "closed=%d" % ca),
        CheckResult("braun_douglas_closed_n", "m=%d n=%d" % (m, n), "info",
                    "printed numerator gives %d vs oracle %d (%s)"
                    % (cb, bd, "match" if cb == bd else "mismatch")),
    ]
    return rows


def check_level1_gcd(n: int):
    d = fusion.braun_douglas(n + 2, n)
    expect = 2 if (n + 2) & (n + 1) == 0 else 1
    return [_res("level1_gcd", "n=%d" % n, d == expect,
                 "d=%d expect=%d" % (d, expect))]


def check_det_t_divisibility(m: int, n: int):
    R = fusion.cached_fusion_ring(m, n)
    dt = fusion.det_T(R)
    bd = fusion.braun_douglas(m, n)
    rows = []
    ok = True
    for p in completion.prime_factors(bd) if bd > 1 else []:
        if dt % p:
            ok = False
    rows.append(_res("det_T_divisibility", "m=%d n=%d" % (m, n), ok,
                     "det=%d d=%d" % (dt, bd)))
    if n >= 2:
        printed = fusion.det_T_conjecture(m, n, lower_shift=2)
        shifted = fusion.det_T_conjecture(m, n, lower_shift=1)
        rows.append(CheckResult(
            "det_T_conjecture", "m=%d n=%d" % (m, n), "info",
            "|det|=%d printed=%d (%s) shifted=%d (%s)"
            % (abs(dt), printed, "MATCH" if abs(dt) == printed else "MISMATCH",
               shifted, "MATCH" if abs(dt) == shifted else "MISMATCH")))
    rows.append(_res("det_T_nonzero", "m=%d n=%d" % (m, n), dt != 0))
    return rows


def check_completion_rank(m: int, n: int, p: int):
    formula = completion.completion_rank_formula(m, n, p)
    local = completion.local_dimension_groebner(m, n, p)
    return [_res("completion_rank_vs_groebner", "m=%d n=%d p=%d" % (m, n, p),
                 formula == local, "formula=%d groebner=%d" % (formula, local))]


def check_divisibility_equivalence(m: int, n: int):
    """p | d(m,n) iff the completion rank is positive iff delta >= n."""
    bd = fusion.braun_douglas(m, n)
    ok = True
    for p in (2, 3, 5, 7, 11, 13):
        if p > m:
            break
        lhs = (bd % p == 0)
        mid = completion.completion_rank_formula(m, n, p) > 0
        rhs = completion.delta(p, m) >= n
        if not (lhs == mid == rhs):
            ok = False
    return [_res("divisibility_equivalence", "m=%d n=%d" % (m, n), ok)]


def check_groebner_permutation(m: int, n: int, p: int, seed: int = 0):
    rng = random.Random(seed)
    perm1 = list(range(n))
    perm2 = list(range(n))
    rng.shuffle(perm2)
    g1 = completion.groebner_basis_for(m, n, p, permutation=perm1)
    g2 = completion.groebner_basis_for(m, n, p, permutation=perm2)
    return [_res("groebner_order_invariance", "m=%d n=%d p=%d" % (m, n, p),
                 g1.standard_monomial_count() == g2.standard_monomial_count())]


def check_delta(p: int, m: int):
    return [_res("delta_root_count", "p=%d m=%d" % (p, m),
                 completion.delta(p, m) == completion.delta_root_count(p, m))]


def check_y_group(m: int, ell: int):
    rows = []
    struct = ktheory.y_group_structure(m, ell)
    for p in completion.prime_factors(m):
        oracle = ktheory.y_group_oracle(m, ell, p)
        got = struct.get(p, AbelianPStructure(p))
        ok = got == oracle
        total = sum(ktheory.epsilon(p, ell, r, m) for r in range(1, ell + 2))
        mass = completion.v_p(m, p) * (ell + 1)
        rows.append(_res("y_group_vs_oracle", "m=%d l=%d p=%d" % (m, ell, p), ok,
                         "%s vs %s" % (got.describe(), oracle.describe())))
        rows.append(_res("y_group_total_order", "m=%d l=%d p=%d" % (m, ell, p),
                         total == mass, "sum eps=%d expected=%d" % (total, mass)))
    return rows


def check_path_table(m: int, ell: int, p: int, D: int):
    table, structure = ktheory.lhp_additive_path_table(m, ell, p, D)
    oracle = ktheory.lhp_truncated_oracle(m, ell, p, D)
    pool = list(oracle.exponents)
    ok = True
    for e in structure.exponents:
        if e in pool:
            pool.remove(e)
        else:
            ok = False
    # disjointness of paths
    seen = set()
    for path in table.paths:
        for cell in path.cells:
            if cell in seen:
                ok = False
            seen.add(cell)
    return [_res("path_table_vs_oracle", "m=%d l=%d p=%d D=%d" % (m, ell, p, D),
                 ok, "paths=%s oracle=%s"
                 % (list(structure.exponents), list(oracle.exponents)))]


def check_coproduct(m: int, ell: int, p: int):
    cv = ktheory.coproduct_values(m, ell, p)
    return [_res("coproduct_conditions", "m=%d l=%d p=%d" % (m, ell, p),
                 cv.coefficient_condition == cv.delta_condition
                 and cv.nu_t_nonzero == cv.delta_condition,
                 "nu(t)=%s" % cv.nu_t)]


def check_euler(ell: int):
    rep = ktheory.euler_and_T(ell)
    return [_res("euler_square_zero", "l=%d" % ell,
                 rep.euler_square_zero and rep.string_T_zero)]


def check_lhp_ring(m: int, ell: int, seed: int = 0):
    ring = ktheory.lhp_ring(m, ell)
    rows = []
    diff = dict(ring.sigma_element())
    for k, v in ring.t_shift_element().items():
        diff[k] = diff.get(k, 0) - v
    rows.append(_res("lhp_sigma_relation", "m=%d l=%d" % (m, ell),
                     ring.is_zero(diff)))
    # quotient by t reproduces the rank-one module
    q_diag = snf_diagonal(ring.quotient_by_t_rows())
    y_diag = snf_diagonal(ktheory._y_module_rows(m, ell))
    rows.append(_res("lhp_t_quotient", "m=%d l=%d" % (m, ell), q_diag == y_diag))
    for p in completion.prime_factors(m):
        oracle = ktheory.y_group_oracle(m, ell, p)
        for layer in range(2):
            got = ring.t_layer_structure(layer, p)
            rows.append(_res("lhp_t_layer", "m=%d l=%d p=%d n=%d" % (m, ell, p, layer),
                             got == oracle))
    # normal forms independent of relation enumeration order
    rng = random.Random(seed)
    ok_nf = True
    b1 = ring.relation_lattice(4)
    ring._lattices.clear()
    b2 = ring.relation_lattice(4, order="reversed")
    ok_nf = (b1 == b2)
    for _ in range(50):
        elem = {(rng.randrange(ell + 1), rng.randrange(3)): rng.randrange(-9, 10)
                for _ in range(3)}
        prod = ring.multiply(elem, {(rng.randrange(ell + 1), rng.randrange(2)): 1})
        again = ring.normal_form(prod)
        if prod != again:
            ok_nf = False
    rows.append(_res("lhp_normal_form_canonical", "m=%d l=%d" % (m, ell), ok_nf))
    return rows


def check_tower(m: int, ell_max: int, p: int):
    rep = completion.completion_tower_sp1(m, ell_max, p)
    ok = rep.surjective and rep.stabilized_count == len(rep.stages)
    return [_res("completion_tower", "m=%d p=%d lmax=%d" % (m, p, ell_max), ok,
                 "summands=%s" % rep.summand_counts)]


def check_associated_graded(r: int):
    n = 2 ** r - 2
    rep = completion.associated_graded(n)
    kmax = len(rep.pieces) - 1
    dims = completion.expected_graded_dims(r, kmax)
    ok_dims = True
    for k, piece in enumerate(rep.pieces):
        if len(piece) != dims[k] or any(d != 2 for d in piece):
            ok_dims = False
    ok_two = rep.two_degree == 2 ** (r - 1)
    ok_rel = all(rep.relations.values())
    return [
        _res("graded_piece_dims", "r=%d" % r, ok_dims,
             "pieces=%s" % [len(p_) for p_ in rep.pieces]),
        _res("graded_two_degree", "r=%d" % r, ok_two,
             "degree=%d" % rep.two_degree),
        _res("graded_relations", "r=%d" % r, ok_rel, str(rep.relations)),
    ]


def check_gamma(n: int):
    gam = fusion.gamma_polynomials(n)
    ok1 = gam[0] == [-2 * n, 1]
    ok_routes = all(gam[i - 1] == fusion.gamma_via_exterior(n, i)
                    for i in range(1, n + 1))
    ok_monic = all(len(gam[i]) == i + 2 and gam[i][-1] == 1
                   for i in range(0, n))
    from .cycfield import get_field
    f = get_field(14)
    ok_vanish = True
    for i in range(1, n + 1):
        for shift in (1, 2):
            orders = tuple(shift + t for t in range(i - 1))
            val = fusion.gamma_restriction_value(n, i, orders, f)
            if not f.is_zero(val):
                ok_vanish = False
    return [
        _res("gamma_linear", "n=%d" % n, ok1),
        _res("gamma_two_routes", "n=%d" % n, ok_routes),
        _res("gamma_monic", "n=%d" % n, ok_monic),
        _res("gamma_restriction_vanish", "n=%d" % n, ok_vanish),
    ]


def check_sym(max_m: int):
    rows = []
    ok_gen = all(chebyshev.generating_identity_check(D) for D in (0, 5, 20))
    rows.append(_res("sym_generating_identity", "D<=20", ok_gen))
    ok_roots = True
    for m in range(2, max_m + 1):
        for k in range(1, m):
            if chebyshev.sym_root_check(m, k):
                ok_roots = False
    rows.append(_res("sym_roots", "m<=%d" % max_m, ok_roots))
    ok_closed = True
    for m in range(2, 9):
        for i in range(1, 11):
            if i % m == 0:
                continue
            for j in range(1, 11):
                if chebyshev.sym_value_at_cyc(m, i, j) != \
                        chebyshev.sym_closed_form_value(m, i, j):
                    ok_closed = False
    rows.append(_res("sym_closed_form", "m<=8 i,j<=10", ok_closed))
    ok_parity = all(chebyshev.nonzero_coefficient_count(m - 1) == (m + 1) // 2
                    for m in range(1, 31))
    rows.append(_res("sym_coefficient_parity", "m<=30", ok_parity))
    return rows


# --- sweep driver -----------------------------------------------------------

def _tasks(max_m: int, max_n: int, seed: int):
    tasks = []
    for m in range(3, max_m + 1):
        tasks.append((check_det_t_sp1, (m,)))
        tasks.append((check_sp1_specialization, (m,)))
    for m in range(3, max_m + 1):
        for n in range(1, max_n + 1):
            if m < n + 2 or comb(m - 1, n) > 30:
                continue
            tasks.append((check_fusion_axioms, (m, n, seed)))
            tasks.append((check_det_t_divisibility, (m, n)))
    for m in range(3, max_m + 1):
        for n in range(1, min(4, max_n) + 1):
            if m >= n + 2:
                tasks.append((check_braun_douglas, (m, n)))
                tasks.append((check_divisibility_equivalence, (m, n)))
    for n in range(2, 11):
        tasks.append((check_level1_gcd, (n,)))
    for n in range(2, min(4, max_n) + 1):
        tasks.append((check_level_rank_level1, (n,)))
    for (m, n, p) in [(4, 2, 2), (6, 2, 2), (6, 2, 3), (8, 2, 2), (5, 3, 5),
                      (5, 2, 5), (9, 2, 3)]:
        if m <= max_m and n <= max_n:
            tasks.append((check_completion_rank, (m, n, p)))
            tasks.append((check_groebner_permutation, (m, n, p, seed)))
    for p, m in [(2, 8), (3, 18), (3, 5), (5, 5), (2, 12), (3, 9)]:
        if m <= max(max_m, 18):
            tasks.append((check_delta, (p, m)))
    for m in range(2, max_m + 1):
        for ell in range(1, 7):
            tasks.append((check_y_group, (m, ell)))
    for case in [(2, 1, 2, 3), (2, 3, 2, 3), (4, 2, 2, 3), (4, 3, 2, 3),
                 (6, 2, 2, 3), (6, 2, 3, 3), (8, 1, 2, 3), (8, 2, 2, 3)]:
        if case[0] <= max(max_m, 8):
            tasks.append((check_path_table, case))
    for m in range(2, max_m + 1):
        for ell in range(1, 7):
            for p in completion.prime_factors(m):
                tasks.append((check_coproduct, (m, ell, p)))
    for ell in range(1, 11):
        tasks.append((check_euler, (ell,)))
    for (m, ell) in [(2, 2), (4, 2), (6, 2), (8, 1)]:
        if m <= max(max_m, 8):
            tasks.append((check_lhp_ring, (m, ell, seed)))
    for (m, p) in [(2, 2), (4, 2), (6, 2), (6, 3), (9, 3)]:
        if m <= max(max_m, 9):
            tasks.append((check_tower, (m, 6, p)))
    tasks.append((check_associated_graded, (2,)))
    tasks.append((check_associated_graded, (3,)))
    tasks.append((check_gamma, (2,)))
    tasks.append((check_gamma, (3,)))
    tasks.append((check_gamma, (6,)))
    tasks.append((check_sym, (min(max_m, 10),)))
    return tasks


def _run_task(item):
    fn, args = item
    return [r.row() for r in fn(*args)]


def default_workers() -> int:
    env = os.environ.get("SPVERLINDE_WORKERS")
    if env:
        return max(1, int(env))
    return 1


def run_all(max_m: int = 8, max_n: int = 3, seed: int = 0,
            workers: int | None = None) -> list[dict]:
    """Run the full verification matrix; returns result rows sorted by name."""
    tasks = _tasks(max_m, max_n, seed)
    workers = workers if workers is not None else default_workers()
    rows: list[dict] = []
    if workers <= 1:
        for t in tasks:
            rows.extend(_run_task(t))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_run_task, tasks):
                rows.extend(chunk)
    rows.sort(key=lambda r: (r["check"], r["params"]))
    return rows


def summarize(rows) -> dict:
    n_pass = sum(1 for r in rows if r["status"] == "pass")
    n_fail = sum(1 for r in rows if r["status"] == "fail")
    n_info = sum(1 for r in rows if r["status"] == "info")
    return {"pass": n_pass, "fail": n_fail, "info": n_info,
            "total": len(rows)}
