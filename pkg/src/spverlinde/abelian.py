"""Finite and pro-finite abelian p-groups as multisets of cyclic exponents."""

from __future__ import annotations

from dataclasses import dataclass, field

INF = float("inf")


@dataclass(frozen=True)
class AbelianPStructure:
    """Direct sum of Z/p^e summands; e == INF means the p-adic integers Z_p.

    Exponents are kept sorted in descending order, which makes equality
    testing canonical.
    """

    prime: int
    exponents: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "exponents",
                           tuple(sorted(self.exponents, reverse=True)))

    @classmethod
    def from_diagonal(cls, p: int, diagonal) -> "AbelianPStructure":
        """p-part of a finitely generated group with the given invariant factors."""
        exps = []
        for d in diagonal:
            if d == 0:
                continue
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            if e:
                exps.append(e)
        return cls(p, tuple(exps))

    @classmethod
    def free(cls, p: int, rank: int) -> "AbelianPStructure":
        return cls(p, (INF,) * rank)

    @property
    def is_trivial(self) -> bool:
        return not self.exponents

    @property
    def finite_order_exponent(self):
        """Total exponent sum; INF if any summand is Z_p."""
        if any(e == INF for e in self.exponents):
            return INF
        return sum(self.exponents)

    def describe(self) -> str:
        if not self.exponents:
            return "0"
        parts = []
        for e in self.exponents:
            if e == INF:
                parts.append("Z_%d" % self.prime)
            elif e == 1:
                parts.append("Z/%d" % self.prime)
            else:
                parts.append("Z/%d^%d" % (self.prime, e))
        return " + ".join(parts)

    def to_json(self):
        return {
            "prime": self.prime,
            "exponents": ["inf" if e == INF else e for e in self.exponents],
        }
