"""Dense univariate integer polynomials as plain coefficient lists.

Coefficients are ascending: [c0, c1, ...] stands for c0 + c1*x + ...
The zero polynomial is [0].  Helpers stay in list-land; nothing here
allocates classes, matching how these get consumed in hot loops.
"""

from __future__ import annotations

from functools import lru_cache


def trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def padd(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def psub(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def pscale(a, s):
    if s == 0:
        return [0]
    return [c * s for c in a]


def pmul(a, b):
    if a == [0] or b == [0]:
        return [0]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def pdeg(a) -> int:
    """Degree, with deg 0 for the zero polynomial."""
    return len(trim(list(a))) - 1


def peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pshift_arg(a, s):
    """p(x + s) by Horner."""
    res = [0]
    for c in reversed(a):
        new = [0] * (len(res) + 1)
        for i, rc in enumerate(res):
            new[i] += s * rc
            new[i + 1] += rc
        new[0] += c
        res = trim(new)
    return res


def pdivmod_exact(a, b):
    """Quotient of a by b when the division is exact over Z."""
    a = list(a)
    q = [0] * max(1, len(a) - len(b) + 1)
    while pdeg(a) >= pdeg(b) and a != [0]:
        if a[-1] == 0:
            a.pop()
            continue
        c, r = divmod(a[-1], b[-1])
        if r:
            raise ValueError("division is not exact")
        sh = len(a) - len(b)
        q[sh] = c
        for i, bc in enumerate(b):
            a[sh + i] -= c * bc
        trim(a)
    if a != [0]:
        raise ValueError("division is not exact")
    return trim(q)


def pmod_monic(a, m):
    """a modulo a monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a != [0]:
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]
        sh = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[sh + i] -= c * mc
        trim(a)
    return trim(a)


@lru_cache(maxsize=None)
def _cyclotomic_cached(N: int) -> tuple:
    p = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            p = pdivmod_exact(p, list(_cyclotomic_cached(d)))
    return tuple(p)


def cyclotomic_poly(N: int):
    """N-th cyclotomic polynomial by recursive exact division of x^N - 1."""
    if N < 1:
        raise ValueError("N must be positive")
    return list(_cyclotomic_cached(N))


def euler_phi(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1
