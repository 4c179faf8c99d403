"""Buchberger's algorithm over F_p (and Q) with degrevlex order.

Small dense-in-spirit implementation: polynomials are dicts mapping exponent
tuples to nonzero coefficients.  Coefficient arithmetic is mod p when a prime
is given, exact Fractions otherwise.  Sized for the handful of variables this
package ever sees; the step budget guards runaway runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class ResourceLimit(Exception):
    """Raised when Buchberger exceeds its configured step budget."""


def degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def leading_monomial(f: dict):
    return max(f, key=degrevlex_key)


class _Coeffs:
    def __init__(self, p):
        self.p = p

    def normalize(self, f):
        if self.p is None:
            return {e: Fraction(c) for e, c in f.items() if c != 0}
        p = self.p
        return {e: c % p for e, c in f.items() if c % p}

    def inv(self, c):
        if self.p is None:
            return 1 / Fraction(c)
        return pow(c, self.p - 2, self.p)

    def mulc(self, a, b):
        if self.p is None:
            return a * b
        return (a * b) % self.p

    def subc(self, a, b):
        if self.p is None:
            return a - b
        return (a - b) % self.p


def normal_form(f: dict, basis, coeffs: _Coeffs) -> dict:
    """Full reduction of f by the basis; returns the remainder."""
    f = dict(f)
    out: dict = {}
    while f:
        e = max(f, key=degrevlex_key)
        c = f.pop(e)
        if not c:
            continue
        hit = None
        for g in basis:
            ge = g[0]
            ok = True
            for x, y in zip(e, ge):
                if x < y:
                    ok = False
                    break
            if ok:
                hit = g
                break
        if hit is None:
            out[e] = c
            continue
        ge, gpoly, ginv = hit
        shift = tuple(x - y for x, y in zip(e, ge))
        fac = coeffs.mulc(c, ginv)
        for e2, c2 in gpoly.items():
            e3 = tuple(x + y for x, y in zip(e2, shift))
            if e3 == e:
                continue
            v = coeffs.subc(f.get(e3, 0), coeffs.mulc(fac, c2))
            if v:
                f[e3] = v
            else:
                f.pop(e3, None)
    return out


@dataclass
class GroebnerBasisFp:
    """Reduced Groebner basis over F_p (or Q when prime is None), degrevlex."""

    prime: object
    nvars: int
    basis: list = field(default_factory=list)
    steps: int = 0

    @property
    def lead_monomials(self):
        return [g[0] for g in self.basis]

    def normal_form(self, f: dict) -> dict:
        return normal_form(f, self.basis, _Coeffs(self.prime))

    def standard_monomial_count(self, cap: int | None = None) -> int:
        """Number of monomials under the staircase.

        Requires a finite staircase unless cap bounds each exponent; every
        use in this package adjoins x_i^N generators, so the count is finite.
        """
        leads = self.lead_monomials
        if any(sum(e) == 0 for e in leads):
            return 0
        caps = []
        for i in range(self.nvars):
            pures = [e[i] for e in leads if sum(e) == e[i] and e[i] > 0]
            if pures:
                caps.append(min(pures))
            elif cap is not None:
                caps.append(cap)
            else:
                raise ValueError("staircase is not visibly finite; pass cap")
        count = 0

        def rec(i, prefix):
            nonlocal count
            if i == self.nvars:
                e = tuple(prefix)
                for L in leads:
                    if all(x >= y for x, y in zip(e, L)):
                        return
                count += 1
                return
            for v in range(caps[i]):
                rec(i + 1, prefix + [v])

        rec(0, [])
        return count


def buchberger(gens, nvars: int, prime=None, max_steps: int = 500_000) -> GroebnerBasisFp:
    """Reduced Groebner basis of the ideal generated by gens.

    gens: iterable of dict polynomials with integer (or Fraction) coefficients.
    """
    C = _Coeffs(prime)
    G: list = []  # entries (lead, poly, leadinv)

    def push(poly):
        e = max(poly, key=degrevlex_key)
        G.append((e, poly, C.inv(poly[e])))

    for g in gens:
        g = C.normalize(g)
        if not g:
            continue
        nf = normal_form(g, G, C) if G else g
        if nf:
            push(nf)
    pairs = [(i, j) for i in range(len(G)) for j in range(i)]
    steps = 0
    while pairs:
        steps += 1
        if steps > max_steps:
            raise ResourceLimit("Buchberger exceeded %d steps" % max_steps)
        i, j = pairs.pop()
        ei, pi, invi = G[i]
        ej, pj, invj = G[j]
        lcm = tuple(max(x, y) for x, y in zip(ei, ej))
        if all(x + y == z for x, y, z in zip(ei, ej, lcm)):
            continue  # coprime leads: S-polynomial reduces to zero
        si = tuple(x - y for x, y in zip(lcm, ei))
        sj = tuple(x - y for x, y in zip(lcm, ej))
        spoly: dict = {}
        for e2, c2 in pi.items():
            e3 = tuple(x + y for x, y in zip(e2, si))
            if prime is None:
                spoly[e3] = spoly.get(e3, 0) + Fraction(c2) * invi
            else:
                spoly[e3] = (spoly.get(e3, 0) + c2 * invi) % prime
        for e2, c2 in pj.items():
            e3 = tuple(x + y for x, y in zip(e2, sj))
            if prime is None:
                spoly[e3] = spoly.get(e3, 0) - Fraction(c2) * invj
            else:
                spoly[e3] = (spoly.get(e3, 0) - c2 * invj) % prime
        spoly = {e: c for e, c in spoly.items() if c}
        nf = normal_form(spoly, G, C)
        if nf:
            k = len(G)
            push(nf)
            pairs.extend((k, t) for t in range(k))
    # minimalize and inter-reduce
    keep = []
    leads = [g[0] for g in G]
    for i, e in enumerate(leads):
        dominated = False
        for j, ej in enumerate(leads):
            if j == i:
                continue
            if all(x >= y for x, y in zip(e, ej)) and (ej != e or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    minimal = [G[i] for i in keep]
    reduced = []
    for idx, (e, poly, _inv) in enumerate(minimal):
        others = [minimal[t] for t in range(len(minimal)) if t != idx]
        nf = normal_form(poly, others, C)
        le = max(nf, key=degrevlex_key)
        inv = C.inv(nf[le])
        monic = {ee: C.mulc(cc, inv) for ee, cc in nf.items()}
        reduced.append((le, monic, C.inv(monic[le])))
    reduced.sort(key=lambda g: degrevlex_key(g[0]))
    return GroebnerBasisFp(prime=prime, nvars=nvars, basis=reduced, steps=steps)


def s_polynomial_reduces_to_zero(gb: GroebnerBasisFp) -> bool:
    """Check the defining property of a Groebner basis on all pairs."""
    C = _Coeffs(gb.prime)
    G = gb.basis
    for i in range(len(G)):
        for j in range(i):
            ei, pi, invi = G[i]
            ej, pj, invj = G[j]
            lcm = tuple(max(x, y) for x, y in zip(ei, ej))
            si = tuple(x - y for x, y in zip(lcm, ei))
            sj = tuple(x - y for x, y in zip(lcm, ej))
            spoly: dict = {}
            for e2, c2 in pi.items():
                e3 = tuple(x + y for x, y in zip(e2, si))
                v = spoly.get(e3, 0) + (Fraction(c2) * invi if gb.prime is None
                                        else (c2 * invi) % gb.prime)
                spoly[e3] = v if gb.prime is None else v % gb.prime
            for e2, c2 in pj.items():
                e3 = tuple(x + y for x, y in zip(e2, sj))
                v = spoly.get(e3, 0) - (Fraction(c2) * invj if gb.prime is None
                                        else (c2 * invj) % gb.prime)
                spoly[e3] = v if gb.prime is None else v % gb.prime
            spoly = {e: c for e, c in spoly.items() if c}
            if normal_form(spoly, G, C):
                return False
    return True
