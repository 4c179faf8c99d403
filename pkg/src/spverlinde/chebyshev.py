"""The Chebyshev-like Sym family and its shifted variant.

Sym_0 = 1, Sym_1 = x, x*Sym_k = Sym_{k+1} + Sym_{k-1}; sigma_k(y) = Sym_k(y+2).
The recursion is the definition here; the closed form in terms of roots of
unity is only ever used as a cross-check.
"""

from __future__ import annotations

from functools import lru_cache

from .cycfield import CycNumber, get_field
from .unipoly import peval, pmul, pshift_arg, psub, trim


@lru_cache(maxsize=None)
def _sym_cached(k: int) -> tuple:
    if k == 0:
        return (1,)
    if k == 1:
        return (0, 1)
    a = list(_sym_cached(k - 2))
    b = list(_sym_cached(k - 1))
    nxt = [0] + b
    for i, c in enumerate(a):
        nxt[i] -= c
    return tuple(trim(nxt))


def sym(k: int) -> list:
    """Coefficients (ascending) of Sym_k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return list(_sym_cached(k))


def sigma(k: int) -> list:
    """sigma_k(y) = Sym_k(y + 2)."""
    return pshift_arg(sym(k), 2)


def sym_eval(k: int, x):
    return peval(sym(k), x)


def sym_root_check(m: int, k: int) -> CycNumber:
    """Sym_{m-1} evaluated at zeta_{2m}^k + zeta_{2m}^{-k}; zero for 1 <= k <= m-1."""
    if not 1 <= k <= m - 1:
        raise ValueError("k out of range")
    f = get_field(2 * m)
    x = f.add(f.zeta(k), f.zeta(-k))
    acc = f.zero
    xp = f.one
    for c in sym(m - 1):
        if c:
            acc = f.add(acc, f.mul_int(xp, c))
        xp = f.mul(xp, x)
    return CycNumber(f, acc)


def generating_identity_check(depth: int) -> bool:
    """(t^2 - t x + 1) * sum_{i<=depth} Sym_i(x) t^i == 1 modulo t^(depth+1).

    Computed over Z[x][t]; ascending t-coefficients are x-polynomials.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    series = [sym(i) for i in range(depth + 1)]
    prod = [[0] for _ in range(depth + 1)]
    for i, s in enumerate(series):
        if i + 2 <= depth:
            prod[i + 2] = trim([a + b for a, b in
                                zip(prod[i + 2] + [0] * len(s), s + [0] * len(prod[i + 2]))])
        if i + 1 <= depth:
            prod[i + 1] = psub(prod[i + 1], pmul(s, [0, 1]))
        prod[i] = trim([a + b for a, b in
                        zip(prod[i] + [0] * len(s), s + [0] * len(prod[i]))])
    if prod[0] != [1]:
        return False
    return all(p == [0] for p in prod[1:])


def sym_closed_form_value(m: int, i: int, j: int) -> CycNumber:
    """(zeta^{i(j+1)} - zeta^{-i(j+1)}) / (zeta^i - zeta^{-i}) with zeta = zeta_{2m}.

    Defined whenever zeta^{2i} != 1; equals Sym_j at zeta^i + zeta^{-i}.
    """
    f = get_field(2 * m)
    den = f.sub(f.zeta(i), f.zeta(-i))
    if f.is_zero(den):
        raise ZeroDivisionError("closed form degenerates when 2m divides 2i")
    num = f.sub(f.zeta(i * (j + 1)), f.zeta(-i * (j + 1)))
    return CycNumber(f, f.div(num, den))


def sym_value_at_cyc(m: int, i: int, j: int) -> CycNumber:
    """Sym_j evaluated exactly at zeta_{2m}^i + zeta_{2m}^{-i} via the recursion."""
    f = get_field(2 * m)
    x = f.add(f.zeta(i), f.zeta(-i))
    acc = f.zero
    xp = f.one
    for c in sym(j):
        if c:
            acc = f.add(acc, f.mul_int(xp, c))
        xp = f.mul(xp, x)
    return CycNumber(f, acc)


def nonzero_coefficient_count(k: int) -> int:
    return sum(1 for c in sym(k) if c)
