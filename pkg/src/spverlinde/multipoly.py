"""Sparse multivariate polynomials over Z: dict {exponent tuple: int}."""

from __future__ import annotations


def mp_zero() -> dict:
    return {}


def mp_const(nvars: int, c: int) -> dict:
    return {(0,) * nvars: c} if c else {}


def mp_var(nvars: int, i: int) -> dict:
    e = [0] * nvars
    e[i] = 1
    return {tuple(e): 1}


def mp_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def mp_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def mp_scale(a: dict, s: int) -> dict:
    if s == 0:
        return {}
    return {e: c * s for e, c in a.items()}


def mp_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def mp_pow(a: dict, k: int, nvars: int) -> dict:
    out = mp_const(nvars, 1)
    for _ in range(k):
        out = mp_mul(out, a)
    return out


def mp_eval(a: dict, values) -> object:
    """Evaluate with ring-element values supporting + and *."""
    tot = 0
    for e, c in a.items():
        v = c
        for i, ei in enumerate(e):
            for _ in range(ei):
                v = v * values[i]
        tot = tot + v
    return tot


def mp_eval_field(a: dict, field, values):
    """Evaluate at raw CycField elements."""
    tot = field.zero
    for e, c in a.items():
        v = field.from_rational(c)
        for i, ei in enumerate(e):
            for _ in range(ei):
                v = field.mul(v, values[i])
        tot = field.add(tot, v)
    return tot


def mp_substitute(a: dict, subs, nvars: int) -> dict:
    """Substitute variable i by the polynomial subs[i]."""
    acc = mp_zero()
    for e, c in a.items():
        term = mp_const(nvars, c)
        for i, ei in enumerate(e):
            for _ in range(ei):
                term = mp_mul(term, subs[i])
        acc = mp_add(acc, term)
    return acc


def mp_total_degree(a: dict) -> int:
    return max((sum(e) for e in a), default=0)
