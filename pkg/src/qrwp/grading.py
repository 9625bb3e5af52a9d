"""Integer grading induced by a weighted circle coaction.

A coprime weight pair (k, l) assigns z0 the degree k, z1 the degree l
and xi the degree -2l, so the basis word z0^m z1^p xi^r (signed m) is
homogeneous of degree k*m + (p - 2r)*l.  An element is coinvariant for
the coaction exactly when every term has degree zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .sigma3 import AlgebraElement, NormalMonomial


@dataclass(frozen=True, slots=True)
class Weights:
    """A coprime integer weight pair; parity of k picks the quotient family."""

    k: int
    l: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("weight l must be a positive integer")
        if gcd(abs(self.k), self.l) != 1:
            raise ValueError(f"weights ({self.k}, {self.l}) are not coprime")

    @property
    def parity(self) -> str:
        return "even" if self.k % 2 == 0 else "odd"

    @property
    def s(self) -> int:
        """Half-weight: k = 2s (even) or k = 2s - 1 (odd)."""
        return self.k // 2 if self.k % 2 == 0 else (self.k + 1) // 2

    @classmethod
    def canonical(cls, parity: str, l: int) -> "Weights":
        """The standard representative of a parity class: k=2 or k=1."""
        if parity == "even":
            return cls(2, l)
        if parity == "odd":
            return cls(1, l)
        raise ValueError(f"unknown parity {parity!r}")


def degree(w: Weights, mono: NormalMonomial) -> int:
    """Grading degree k*m + (p - 2r)*l; the signed m makes each z0*
    letter count -k, as forced by the coaction being a *-map."""
    return w.k * mono.m + (mono.p - 2 * mono.r) * w.l


def element_degrees(w: Weights, x: AlgebraElement) -> list[int]:
    """Sorted distinct degrees occurring among the terms of x."""
    return sorted({degree(w, mono) for mono, _ in x.terms()})


def homogeneous_degree(w: Weights, x: AlgebraElement) -> int | None:
    """The common degree of all terms, or None if x is inhomogeneous.
    The zero element is homogeneous of degree 0 by convention."""
    degs = element_degrees(w, x)
    if not degs:
        return 0
    if len(degs) == 1:
        return degs[0]
    return None


def coinvariant_part(w: Weights, x: AlgebraElement) -> AlgebraElement:
    """Projection of x onto its degree-zero terms."""
    return AlgebraElement({mono: coef for mono, coef in x.terms() if degree(w, mono) == 0})


def is_coinvariant(w: Weights, x: AlgebraElement) -> bool:
    return coinvariant_part(w, x) == x
