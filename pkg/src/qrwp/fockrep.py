"""Finite truncations of the bounded irreducible *-representations.

The infinite-dimensional representations of the even/odd families act
on l^2(N) by weighted shifts:

    even:  a e_n = q^{2(ln+r)} e_n,
           c+ e_n = prod_{m=1}^{l} (1 - q^{2(ln+r-m)})^{1/2} e_{n-1},  c+ e_0 = 0,
    odd:   b  e_n = q^{ln+r} prod_{m=1}^{l} (1 - q^{2(ln+r-m)})^{1/2} e_{n-1},  b e_0 = 0,
           c- e_n = prod_{m=1}^{2l} (1 - q^{2(ln+r-m)})^{1/2} e_{n-2},  c- e_0 = c- e_1 = 0,

with labels r = 1..l, plus the one-dimensional family a -> 0 (and
b -> 0), c -> e^{2 pi i theta}.  The ambient algebra has the faithful
representation

    pi(z0^m z1^p xi^s) e_n = q^{p(n+1)} prod_{t=0}^{m-1} (1 - q^{2(n-t)})^{1/2} e_{n-m}

(zero when m > n; the central unitary acts trivially).  Everything here
is compressed to span{e_0, ..., e_{N-1}}; all displayed operators lower
the index, so compression is exact except in the top band, and checks
are evaluated on the interior window of N - 2l columns.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .qwrp import GeneratorSet, RelationSide, generators, relations_for
from .grading import Weights
from .sigma3 import AlgebraElement, NormalMonomial


@dataclass(frozen=True, eq=False, slots=True)
class TruncatedOperator:
    """An N x N compression of an l^2(N) operator.

    interior_window counts the leading columns that are free of
    truncation artifacts in operator-identity checks."""

    matrix: np.ndarray
    interior_window: int

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("truncated operators are square matrices")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def adjoint(self) -> "TruncatedOperator":
        return TruncatedOperator(self.matrix.conj().T, self.interior_window)

    def bandwidth(self) -> int:
        """Largest |i - j| over nonzero entries (0 for the zero matrix)."""
        idx = np.nonzero(self.matrix)
        if idx[0].size == 0:
            return 0
        return int(np.max(np.abs(idx[0] - idx[1])))


@dataclass(frozen=True, slots=True)
class RepInstance:
    """One infinite-dimensional representation label, truncated to dim."""

    parity: str
    l: int
    r: int
    q: float
    dim: int

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"unknown parity {self.parity!r}")
        if self.l < 1:
            raise ValueError("l must be a positive integer")
        if self.parity == "even" and self.l % 2 == 0:
            raise ValueError("the even family requires odd l")
        if not 1 <= self.r <= self.l:
            raise ValueError(f"label r must lie in 1..{self.l}")
        if not 0.0 < self.q < 1.0:
            raise ValueError("q must lie in (0, 1)")
        if self.dim < 1:
            raise ValueError("dim must be positive")


def _sqrt_weight(q: float, exponents: Iterable[int]) -> float:
    """prod_e (1 - q^{2e})^{1/2}; a negative radicand signals a formula
    transcription bug and is a hard error."""
    acc = 1.0
    for e in exponents:
        radicand = 1.0 - q ** (2 * e)
        if radicand < 0.0:
            raise ArithmeticError(f"negative radicand 1 - q^{2 * e} in shift weight")
        acc *= math.sqrt(radicand)
    return acc


def shift_kernel_size(parity: str, gen: str) -> int:
    """Number of leading basis vectors annihilated by the shift generator."""
    if gen == "a":
        return 0
    if parity == "even" or gen == "b":
        return 1
    return 2  # c- lowers by two steps


def rep_generator(inst: RepInstance, gen: str) -> TruncatedOperator:
    """Truncated matrix of one generator in the representation inst.

    Out-of-range components are dropped; the displayed kernel conditions
    (c+ e_0 = 0, b e_0 = 0, c- e_0 = c- e_1 = 0) give exactly zero
    columns, not approximations."""
    n_dim, l, r, q = inst.dim, inst.l, inst.r, inst.q
    mat = np.zeros((n_dim, n_dim), dtype=np.complex128)
    if gen == "a":
        for n in range(n_dim):
            mat[n, n] = q ** (2 * (l * n + r))
    elif gen == "b":
        if inst.parity != "odd":
            raise ValueError("generator b exists only in the odd family")
        for n in range(1, n_dim):
            mat[n - 1, n] = q ** (l * n + r) * _sqrt_weight(q, (l * n + r - m for m in range(1, l + 1)))
    elif gen == "c":
        if inst.parity == "even":
            for n in range(1, n_dim):
                mat[n - 1, n] = _sqrt_weight(q, (l * n + r - m for m in range(1, l + 1)))
        else:
            for n in range(2, n_dim):
                mat[n - 2, n] = _sqrt_weight(q, (l * n + r - m for m in range(1, 2 * l + 1)))
    else:
        raise ValueError(f"unknown generator {gen!r}")
    return TruncatedOperator(mat, max(0, n_dim - 2 * l))


def rep_scalar(theta: float, parity: str) -> dict[str, complex]:
    """The one-dimensional representation: a (and b) vanish, c is the
    unit-circle value e^{2 pi i theta}."""
    if not 0.0 <= theta < 1.0:
        raise ValueError("theta must lie in [0, 1)")
    values = {"a": 0j, "c": cmath.exp(2j * math.pi * theta)}
    if parity == "odd":
        values["b"] = 0j
    elif parity != "even":
        raise ValueError(f"unknown parity {parity!r}")
    return values


def rep_sigma(mono: NormalMonomial, q: float, dim: int) -> TruncatedOperator:
    """Truncated matrix of the ambient-algebra representation on one
    basis word (z0 family only); zero whenever the z0 power exceeds n."""
    if mono.m < 0:
        raise ValueError("the ambient representation is tabulated for the z0 family (m >= 0)")
    if not 0.0 < q < 1.0:
        raise ValueError("q must lie in (0, 1)")
    mat = np.zeros((dim, dim), dtype=np.complex128)
    m, p = mono.m, mono.p
    for n in range(m, dim):
        mat[n - m, n] = q ** (p * (n + 1)) * _sqrt_weight(q, (n - t for t in range(m)))
    return TruncatedOperator(mat, dim)


def rep_sigma_element(x: AlgebraElement, q: float, dim: int) -> TruncatedOperator:
    """Linear extension of rep_sigma to elements with z0-family terms."""
    mat = np.zeros((dim, dim), dtype=np.complex128)
    interior = dim
    for mono, coef in x.terms():
        op = rep_sigma(mono, q, dim)
        mat = mat + coef.evaluate(q) * op.matrix
        interior = min(interior, op.interior_window)
    return TruncatedOperator(mat, interior)


# -- relation residuals ----------------------------------------------


def eval_side_matrix(side: RelationSide, ops: Mapping[str, np.ndarray], q: float) -> np.ndarray:
    """Evaluate one relation side on concrete operator matrices."""
    some = next(iter(ops.values()))
    dim = some.shape[0]
    eye = np.eye(dim, dtype=np.complex128)
    out = (q ** side.q_exponent) * eye
    for f in side.factors:
        if f[0] == "gen":
            mat = ops[f[1]]
            if f[2]:
                mat = mat.conj().T
            out = out @ mat
        else:
            for e in f[1]:
                out = out @ (eye - (q ** (2 * e)) * ops["a"])
    return out


def _interior_max(diff: np.ndarray, interior_cols: int) -> float:
    cols = max(0, min(interior_cols, diff.shape[1]))
    if cols == 0:
        return 0.0
    return float(np.max(np.abs(diff[:, :cols])))


def _instance_ops(inst: RepInstance) -> dict[str, np.ndarray]:
    ops = {"a": rep_generator(inst, "a").matrix, "c": rep_generator(inst, "c").matrix}
    if inst.parity == "odd":
        ops["b"] = rep_generator(inst, "b").matrix
    return ops


@dataclass(frozen=True, slots=True)
class ResidualEntry:
    r: int
    rid: str
    residual: float
    passed: bool


def relation_residuals(parity: str, l: int, q: float = 0.5, dim: int = 256,
                       tol: float = 1e-10) -> list[ResidualEntry]:
    """Max interior residual of every defining relation, per label r."""
    rels = relations_for(parity, l)
    entries: list[ResidualEntry] = []
    interior = max(0, dim - 2 * l)
    for r in range(1, l + 1):
        ops = _instance_ops(RepInstance(parity, l, r, q, dim))
        for rel in rels:
            lhs = eval_side_matrix(rel.lhs, ops, q)
            rhs = eval_side_matrix(rel.rhs, ops, q)
            res = _interior_max(lhs - rhs, interior)
            entries.append(ResidualEntry(r=r, rid=rel.rid, residual=res, passed=res < tol))
    return entries


def kernel_conditions_exact(parity: str, l: int, q: float = 0.5, dim: int = 256) -> bool:
    """The displayed kernel columns must be exactly zero, not merely small."""
    for r in range(1, l + 1):
        inst = RepInstance(parity, l, r, q, dim)
        c = rep_generator(inst, "c").matrix
        if parity == "even":
            if np.any(c[:, 0] != 0):
                return False
        else:
            b = rep_generator(inst, "b").matrix
            if np.any(b[:, 0] != 0) or np.any(c[:, 0] != 0) or np.any(c[:, 1] != 0):
                return False
    return True


def scalar_relation_residual(parity: str, l: int, theta: float, q: float = 0.5) -> float:
    """Max residual of the relation set in the one-dimensional
    representation (a = 0 makes every product factor equal 1)."""
    values = rep_scalar(theta, parity)
    ops = {name: np.array([[v]], dtype=np.complex128) for name, v in values.items()}
    worst = 0.0
    for rel in relations_for(parity, l):
        lhs = eval_side_matrix(rel.lhs, ops, q)
        rhs = eval_side_matrix(rel.rhs, ops, q)
        worst = max(worst, float(abs((lhs - rhs)[0, 0])))
    return worst


# -- intertwiner and faithfulness ------------------------------------


def coinvariant_monomial(gens: GeneratorSet, name: str) -> NormalMonomial:
    """The basis word underlying one coinvariant generator."""
    return gens.named(name).sole_monomial()


def subspace_dim(l: int, r: int, dim: int) -> int:
    """Number of small-side vectors e_n^r mapped into the big truncation:
    the relabeling sends e_n^r to e_{ln+r-1}."""
    return (dim - r) // l + 1


def intertwiner_check(parity: str, l: int, q: float = 0.5, dim: int = 256) -> dict:
    """Compare the relabeled family representations with the ambient
    representation of the substituted generator words.

    For each generator g and label r the columns of
    Phi_r pi_r(g) - pi(j(g)) Phi_r are measured on the interior window;
    Phi_r places e_n^r at position ln+r-1."""
    w = Weights.canonical(parity, l)
    gens = generators(w)
    names = ["a", "c"] if parity == "even" else ["a", "b", "c"]
    per_generator: dict[str, float] = {}
    per_pair: list[dict] = []
    interior = max(0, dim - 2 * l)
    for name in names:
        big = rep_sigma(coinvariant_monomial(gens, name), q, dim).matrix
        worst = 0.0
        for r in range(1, l + 1):
            n_r = subspace_dim(l, r, dim)
            small = rep_generator(RepInstance(parity, l, r, q, n_r), name).matrix
            phi = np.zeros((dim, n_r), dtype=np.complex128)
            rows = l * np.arange(n_r) + r - 1
            phi[rows, np.arange(n_r)] = 1.0
            diff = phi @ small - big @ phi
            # interior columns of the small side are those whose image row stays
            # inside the big interior window
            cols = int(np.sum(rows < interior))
            res = _interior_max(diff, cols)
            per_pair.append({"generator": name, "r": r, "residual": res})
            worst = max(worst, res)
        per_generator[name] = worst
    return {
        "parity": parity,
        "l": l,
        "q": q,
        "N": dim,
        "per_generator": per_generator,
        "per_pair": per_pair,
        "max_residual": max(per_generator.values()),
    }


def faithfulness_probe(monomials: Sequence[NormalMonomial], q: float = 0.5,
                       dim: int = 128, tol: float = 1e-8) -> bool:
    """True when the truncated images are linearly independent.

    Images are normalized before the rank computation (independence is
    scale-invariant and the word norms vary over many orders of
    magnitude); the numeric rank counts singular values above
    tol * largest."""
    monomials = list(monomials)
    if len(monomials) > dim // 2:
        raise ValueError("monomial list exceeds half the truncation size")
    if not monomials:
        return True
    rows = []
    for mono in monomials:
        v = rep_sigma(mono, q, dim).matrix.reshape(-1)
        norm = np.linalg.norm(v)
        if norm == 0.0:
            return False
        rows.append(v / norm)
    stack = np.array(rows)
    svals = np.linalg.svd(stack, compute_uv=False)
    rank = int(np.sum(svals > tol * svals[0]))
    return rank == len(monomials)


# -- assembled report -------------------------------------------------


@dataclass(frozen=True, slots=True)
class RepReport:
    parity: str
    l: int
    q: float
    dim: int
    tolerance: float
    residuals: tuple[ResidualEntry, ...]
    kernel_exact: bool
    scalar_residual: float
    intertwiner_residual: float

    @property
    def all_pass(self) -> bool:
        return (
            all(e.passed for e in self.residuals)
            and self.kernel_exact
            and self.scalar_residual < self.tolerance
            and self.intertwiner_residual < self.tolerance
        )

    def as_dict(self) -> dict:
        return {
            "parity": self.parity,
            "l": self.l,
            "q": self.q,
            "N": self.dim,
            "tolerance": self.tolerance,
            "relation_residuals": [
                {"r": e.r, "id": e.rid, "residual": e.residual, "pass": e.passed}
                for e in self.residuals
            ],
            "kernel_conditions_exact": self.kernel_exact,
            "scalar_representation_residual": self.scalar_residual,
            "intertwiner_residual": self.intertwiner_residual,
            "all_pass": self.all_pass,
        }


def rep_report(parity: str, l: int, q: float = 0.5, dim: int = 256,
               tol: float = 1e-10) -> RepReport:
    residuals = tuple(relation_residuals(parity, l, q, dim, tol))
    kernel = kernel_conditions_exact(parity, l, q, dim)
    scalar = max(scalar_relation_residual(parity, l, theta, q) for theta in (0.0, 0.25, 0.5, 0.8))
    inter = intertwiner_check(parity, l, q, dim)["max_residual"]
    return RepReport(
        parity=parity,
        l=l,
        q=q,
        dim=dim,
        tolerance=tol,
        residuals=residuals,
        kernel_exact=kernel,
        scalar_residual=scalar,
        intertwiner_residual=inter,
    )
