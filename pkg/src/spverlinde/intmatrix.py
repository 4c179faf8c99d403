"""Exact integer matrix kernels: Smith normal form, determinants, lattices.

Matrices are plain lists of lists of Python ints; everything here is
arbitrary precision and allocation-light.  These routines are the additive
oracle for the rest of the package, so they are deliberately boring.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    nb = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(nb)]
            for i in range(len(A))]


@dataclass
class SmithNormalForm:
    """U * M * V = diag(diagonal), with U and V unimodular."""

    diagonal: list[int]
    U: list[list[int]]
    V: list[list[int]]


def smith_normal_form(M) -> SmithNormalForm:
    """Smith normal form by elementary operations with smallest-pivot selection.

    The returned diagonal is nonnegative and satisfies d1 | d2 | ... ;
    trailing zero invariant factors are included so that
    len(diagonal) == min(nrows, ncols).
    """
    A = [list(map(int, row)) for row in M]
    nr = len(A)
    nc = len(A[0]) if nr else 0
    U = identity(nr)
    V = identity(nc)
    t = 0
    while t < min(nr, nc):
        while True:
            piv, best = None, None
            for i in range(t, nr):
                Ai = A[i]
                for j in range(t, nc):
                    v = Ai[j]
                    if v:
                        v = -v if v < 0 else v
                        if best is None or v < best:
                            best, piv = v, (i, j)
            if piv is None:
                break
            i0, j0 = piv
            if i0 != t:
                A[t], A[i0] = A[i0], A[t]
                U[t], U[i0] = U[i0], U[t]
            if j0 != t:
                for r in A:
                    r[t], r[j0] = r[j0], r[t]
                for r in V:
                    r[t], r[j0] = r[j0], r[t]
            p = A[t][t]
            for i in range(t + 1, nr):
                q = A[i][t] // p
                if q:
                    Ai, At = A[i], A[t]
                    Ui, Ut = U[i], U[t]
                    for j in range(t, nc):
                        Ai[j] -= q * At[j]
                    for j in range(nr):
                        Ui[j] -= q * Ut[j]
            for j in range(t + 1, nc):
                q = A[t][j] // p
                if q:
                    for i in range(t, nr):
                        A[i][j] -= q * A[i][t]
                    for i in range(nc):
                        V[i][j] -= q * V[i][t]
            if any(A[i][t] for i in range(t + 1, nr)) or \
               any(A[t][j] for j in range(t + 1, nc)):
                continue
            off = None
            for i in range(t + 1, nr):
                Ai = A[i]
                if any(Ai[j] % p for j in range(t + 1, nc)):
                    off = i
                    break
            if off is None:
                break
            for j in range(t, nc):
                A[t][j] += A[off][j]
            for j in range(nr):
                U[t][j] += U[off][j]
        if A[t][t] == 0:
            break
        if A[t][t] < 0:
            for j in range(t, nc):
                A[t][j] = -A[t][j]
            for j in range(nr):
                U[t][j] = -U[t][j]
        t += 1
    diag = [A[i][i] for i in range(t)]
    diag += [0] * (min(nr, nc) - t)
    return SmithNormalForm(diag, U, V)


def snf_diagonal(M) -> list[int]:
    return smith_normal_form(M).diagonal


def det_bareiss(M) -> int:
    """Exact determinant by fraction-free elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = A[k][k]
        for i in range(k + 1, n):
            Ai, Ak = A[i], A[k]
            aik = Ai[k]
            for j in range(k + 1, n):
                Ai[j] = (Ai[j] * pk - aik * Ak[j]) // prev
            Ai[k] = 0
        prev = pk
    return sign * A[n - 1][n - 1]


def det_cofactor(M) -> int:
    """Cofactor-expansion determinant; quadratic-memory oracle for small n."""
    n = len(M)
    cols = tuple(range(n))
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def minor(r, cols_):
        if r == n:
            return 1
        tot = 0
        for k, c in enumerate(cols_):
            e = M[r][c]
            if e:
                sub = minor(r + 1, cols_[:k] + cols_[k + 1:])
                tot += e * sub if k % 2 == 0 else -e * sub
        return tot

    return minor(0, cols)


def hermite_basis(rows) -> list[list[int]]:
    """Row-style Hermite basis of the lattice spanned by the given rows.

    Returns a list of rows, each with a positive leading entry in a strictly
    increasing pivot column, entries above each pivot reduced into [0, pivot).
    """
    M = [list(map(int, r)) for r in rows if any(r)]
    if not M:
        return []
    nc = len(M[0])
    basis = []
    for col in range(nc):
        while True:
            nz = [r for r in M if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                q = r[col] // piv[col]
                for j in range(col, nc):
                    r[j] -= q * piv[j]
            M = [r for r in M if any(r)]
        nz = [r for r in M if r[col] != 0]
        if nz:
            piv = nz[0]
            if piv[col] < 0:
                for j in range(nc):
                    piv[j] = -piv[j]
            basis.append(piv)
            M = [r for r in M if r is not piv]
    for i in range(len(basis) - 1, -1, -1):
        lead = next(j for j in range(nc) if basis[i][j])
        for r in basis[:i]:
            q = r[lead] // basis[i][lead]
            if q:
                for j in range(nc):
                    r[j] -= q * basis[i][j]
    return basis


def lattice_contains(basis, vec) -> bool:
    """Membership of vec in the lattice with Hermite basis rows."""
    v = list(map(int, vec))
    nc = len(v)
    for b in basis:
        lead = next((j for j in range(nc) if b[j]), None)
        if lead is None:
            continue
        if v[lead] % b[lead]:
            return False
        q = v[lead] // b[lead]
        if q:
            for j in range(nc):
                v[j] -= q * b[j]
    return not any(v)


def lattice_index_coords(basis, vec):
    """Integer coordinates of vec in the Hermite basis, or None."""
    v = list(map(int, vec))
    nc = len(v)
    coords = []
    for b in basis:
        lead = next(j for j in range(nc) if b[j])
        if v[lead] % b[lead]:
            return None
        q = v[lead] // b[lead]
        coords.append(q)
        if q:
            for j in range(nc):
                v[j] -= q * b[j]
    return coords if not any(v) else None


def quotient_structure(ambient_rank: int, relation_rows) -> list[int]:
    """Invariant factors != 1 of Z^ambient_rank modulo the relation row span.

    Zero entries stand for free summands.
    """
    if not relation_rows:
        return [0] * ambient_rank
    diag = snf_diagonal(relation_rows)
    nz = [d for d in diag if d != 0]
    free = ambient_rank - len(nz)
    return [d for d in nz if d != 1] + [0] * free


def sublattice_quotient(big_rows, small_rows) -> list[int]:
    """Invariant factors != 1 of (lattice big)/(lattice small)."""
    big = hermite_basis(big_rows)
    if not big:
        return []
    coords = []
    for v in small_rows:
        co = lattice_index_coords(big, v)
        if co is None:
            raise ValueError("second lattice is not contained in the first")
        coords.append(co)
    return quotient_structure(len(big), [c for c in coords if any(c)])
