"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored reduced modulo the N-th cyclotomic polynomial as an
integer coefficient vector of length phi(N) together with a positive
common denominator.  That keeps the multiplication kernel in pure integer
convolutions; denominators only move at normalization time.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .unipoly import cyclotomic_poly


class SingularMatrix(Exception):
    """Raised by solve_exact on a singular coefficient matrix."""


class CycField:
    """Q(zeta_N) with raw-tuple element operations.

    A raw element is a pair (coeffs, den): coeffs a tuple of phi(N) ints,
    den a positive int, gcd(content, den) == 1.
    """

    def __init__(self, N: int):
        mod = cyclotomic_poly(N)
        self.N = N
        self.phi = len(mod) - 1
        self.mod = mod
        kmax = max(2 * self.phi - 2, N - 1)
        red = []
        cur = [-c for c in mod[:-1]]
        red.append(list(cur))
        for _ in range(kmax - self.phi):
            cur = [0] + cur
            if len(cur) > self.phi:
                lead = cur.pop()
                if lead:
                    for i in range(self.phi):
                        cur[i] -= lead * mod[i]
            red.append(list(cur))
        self._red = red
        self.zero = (tuple([0] * self.phi), 1)
        one = [0] * self.phi
        one[0] = 1
        self.one = (tuple(one), 1)

    # -- construction ------------------------------------------------------

    def zeta(self, k: int = 1):
        """zeta_N^k as a raw element."""
        k %= self.N
        vec = [0] * (k + 1)
        vec[k] = 1
        return self._reduce_ints(vec)

    def from_rational(self, q):
        fr = Fraction(q)
        vec = [0] * self.phi
        vec[0] = fr.numerator
        return self._normalize(vec, fr.denominator)

    def _reduce_ints(self, vec):
        vec = list(vec) + [0] * max(0, self.phi - len(vec))
        for k in range(len(vec) - 1, self.phi - 1, -1):
            c = vec[k]
            if c:
                row = self._red[k - self.phi]
                for i, rc in enumerate(row):
                    vec[i] += c * rc
            vec.pop()
        return (tuple(vec), 1)

    def _normalize(self, num, den):
        if not any(num):
            return self.zero
        g = 0
        for c in num:
            g = gcd(g, c)
        g = gcd(g, den)
        if den < 0:
            g = -g
        if g == 1:
            return (tuple(num), den)
        return (tuple(c // g for c in num), den // g)

    # -- field operations on raw pairs --------------------------------------

    def add(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._normalize([x + y for x, y in zip(na, nb)], da)
        return self._normalize([x * db + y * da for x, y in zip(na, nb)], da * db)

    def sub(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._normalize([x - y for x, y in zip(na, nb)], da)
        return self._normalize([x * db - y * da for x, y in zip(na, nb)], da * db)

    def neg(self, a):
        return (tuple(-c for c in a[0]), a[1])

    def mul(self, a, b):
        (na, da), (nb, db) = a, b
        ph = self.phi
        out = [0] * (2 * ph - 1)
        for i, x in enumerate(na):
            if x:
                for j, y in enumerate(nb):
                    if y:
                        out[i + j] += x * y
        for k in range(2 * ph - 2, ph - 1, -1):
            c = out[k]
            if c:
                row = self._red[k - ph]
                for i, rc in enumerate(row):
                    out[i] += c * rc
            out.pop()
        return self._normalize(out, da * db)

    def mul_int(self, a, s: int):
        if s == 0:
            return self.zero
        return self._normalize([c * s for c in a[0]], a[1])

    def is_zero(self, a) -> bool:
        return not any(a[0])

    def is_rational(self, a) -> bool:
        return not any(a[0][1:])

    def as_fraction(self, a) -> Fraction:
        if not self.is_rational(a):
            raise ValueError("element is not rational")
        return Fraction(a[0][0], a[1])

    def inv(self, a):
        """Multiplicative inverse by the extended Euclid algorithm in Q[x]."""
        num, den = a
        if not any(num):
            raise ZeroDivisionError("inverse of zero")
        r0 = [Fraction(c) for c in self.mod]
        r1 = [Fraction(c) for c in num]
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(p):
            d = len(p) - 1
            while d >= 0 and p[d] == 0:
                d -= 1
            return d

        while deg(r1) > 0:
            da, db = deg(r0), deg(r1)
            q = [Fraction(0)] * (da - db + 1)
            rr = list(r0)
            while deg(rr) >= db:
                dd = deg(rr)
                c = rr[dd] / r1[db]
                q[dd - db] = c
                for i in range(db + 1):
                    rr[dd - db + i] -= c * r1[i]
            qs1 = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(s1):
                        qs1[i + j] += x * y
            s2 = [Fraction(0)] * max(len(s0), len(qs1))
            for i, x in enumerate(s0):
                s2[i] += x
            for i, x in enumerate(qs1):
                s2[i] -= x
            r0, r1 = r1, rr
            s0, s1 = s1, s2
        c = r1[deg(r1)]
        vec = [x / c for x in s1[:self.phi]]
        vec += [Fraction(0)] * (self.phi - len(vec))
        denL = 1
        for x in vec:
            denL = denL * x.denominator // gcd(denL, x.denominator)
        ints = [int(x * denL) for x in vec]
        return self._normalize([den * c2 for c2 in ints], denL)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        out = self.one
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out


@lru_cache(maxsize=None)
def get_field(N: int) -> CycField:
    return CycField(N)


class CycNumber:
    """Ergonomic wrapper over a CycField raw element."""

    __slots__ = ("field", "raw")

    def __init__(self, field: CycField, raw):
        self.field = field
        self.raw = raw

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "CycNumber":
        f = get_field(N)
        return cls(f, f.zeta(k))

    @classmethod
    def rational(cls, N: int, q) -> "CycNumber":
        f = get_field(N)
        return cls(f, f.from_rational(q))

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.field.N != self.field.N:
                raise ValueError("mixed cyclotomic orders")
            return other.raw
        return self.field.from_rational(other)

    def __add__(self, other):
        return CycNumber(self.field, self.field.add(self.raw, self._coerce(other)))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return CycNumber(self.field, self.field.sub(self.raw, self._coerce(other)))

    def __rsub__(self, other):
        return CycNumber(self.field, self.field.sub(self._coerce(other), self.raw))

    def __mul__(self, other):
        return CycNumber(self.field, self.field.mul(self.raw, self._coerce(other)))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return CycNumber(self.field, self.field.div(self.raw, self._coerce(other)))

    def __neg__(self):
        return CycNumber(self.field, self.field.neg(self.raw))

    def __pow__(self, k):
        return CycNumber(self.field, self.field.pow(self.raw, k))

    def __eq__(self, other):
        if isinstance(other, CycNumber):
            return self.field.N == other.field.N and self.raw == other.raw
        return self.field.is_zero(self.field.sub(self.raw, self._coerce(other)))

    def __hash__(self):
        return hash((self.field.N, self.raw))

    def __bool__(self):
        return not self.field.is_zero(self.raw)

    def inverse(self) -> "CycNumber":
        return CycNumber(self.field, self.field.inv(self.raw))

    @property
    def coefficients(self):
        num, den = self.raw
        return [Fraction(c, den) for c in num]

    def __repr__(self):
        return "CycNumber(N=%d, %r)" % (self.field.N, self.coefficients)


def solve_exact(A, b):
    """Exact solution of A x = b over a cyclotomic field.

    A is a square matrix of CycNumber (or raw pairs with a field supplied by
    the first CycNumber found); raises SingularMatrix when det A == 0.
    """
    n = len(A)
    if n == 0:
        return []
    field = A[0][0].field
    M = [[e.raw for e in row] for row in A]
    rhs = [e.raw for e in b]
    if any(len(row) != n for row in M) or len(rhs) != n:
        raise ValueError("shape mismatch")
    for k in range(n):
        piv = next((i for i in range(k, n) if not field.is_zero(M[i][k])), None)
        if piv is None:
            raise SingularMatrix("zero pivot column %d" % k)
        M[k], M[piv] = M[piv], M[k]
        rhs[k], rhs[piv] = rhs[piv], rhs[k]
        inv = field.inv(M[k][k])
        for i in range(k + 1, n):
            if not field.is_zero(M[i][k]):
                fac = field.mul(M[i][k], inv)
                M[i][k] = field.zero
                for j in range(k + 1, n):
                    if not field.is_zero(M[k][j]):
                        M[i][j] = field.sub(M[i][j], field.mul(fac, M[k][j]))
                rhs[i] = field.sub(rhs[i], field.mul(fac, rhs[k]))
    xs = [field.zero] * n
    for k in range(n - 1, -1, -1):
        v = rhs[k]
        for j in range(k + 1, n):
            if not field.is_zero(M[k][j]):
                v = field.sub(v, field.mul(M[k][j], xs[j]))
        xs[k] = field.mul(v, field.inv(M[k][k]))
    return [CycNumber(field, x) for x in xs]
