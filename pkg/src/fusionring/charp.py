"""Mod-p linear algebra on Grothendieck rings.

Dimension homomorphisms, global dimension, the trace-form semisimplicity
test, p-th power Frobenius, the Frobenius-candidate solver and Frobenius
type classification.  Ranks over F_p come from the exact elimination
kernels; everything else is plain integer arithmetic reduced mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from fusionring import kernels
from fusionring.based import BasedRing, RingElement, power
from fusionring.green import is_prime
from fusionring.numerics import fp_dims
from fusionring.structure import subring_closure
from fusionring.verlinde import (
    frobenius_on_verlinde,
    plus_indices,
    svec_indices,
    verlinde_ring,
)

__all__ = [
    "DimHom",
    "ModpMatrix",
    "FrobeniusTable",
    "FrobeniusType",
    "dim_hom",
    "canonical_dim_hom",
    "apply_dim_hom",
    "global_dimension",
    "regular_dual_element",
    "trace_form_gram",
    "is_semisimple_mod_p",
    "pth_power",
    "frobenius_candidates",
    "verlinde_frobenius_table",
    "frobenius_type",
    "DEFAULT_FP_TOL",
]

DEFAULT_FP_TOL = 1e-6


@dataclass(frozen=True)
class DimHom:
    """Ring homomorphism K(C) -> F_p, stored as one residue per basis
    element.  Construct through :func:`dim_hom`, which verifies
    multiplicativity."""

    residues: tuple[int, ...]
    p: int


@dataclass(frozen=True)
class ModpMatrix:
    """Matrix with entries reduced to [0, p)."""

    entries: tuple[tuple[int, ...], ...]
    p: int

    def __post_init__(self):
        for row in self.entries:
            for v in row:
                if not 0 <= v < self.p:
                    raise ValueError(f"entry {v} not reduced mod {self.p}")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


@dataclass(frozen=True)
class FrobeniusTable:
    """Frobenius images in K(C^(1)) (x) K(Ver_p).

    ``rows[i][j][t]`` is the multiplicity of b_j (boxtimes) L_{t+1} in the
    image of basis element ``i``.
    """

    p: int
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        for row in self.rows:
            for jrow in row:
                for v in jrow:
                    if v < 0:
                        raise ValueError("Frobenius table entries must be non-negative")

    def used_verlinde_indices(self) -> tuple[int, ...]:
        """0-based Ver_p indices hit by any entry of the table."""
        used = set()
        for row in self.rows:
            for jrow in row:
                for t, v in enumerate(jrow):
                    if v:
                        used.add(t)
        return tuple(sorted(used))


class FrobeniusType(Enum):
    VEC = "Vec"
    SVEC = "sVec"
    PLUS = "Ver_p^+"
    FULL = "Ver_p"

    def __str__(self) -> str:
        return self.value


def dim_hom(ring: BasedRing, residues, p: int) -> DimHom:
    """Build a DimHom after verifying multiplicativity on all basis pairs."""
    if not is_prime(p):
        raise ValueError(f"p = {p!r} is not prime")
    res = tuple(int(r) % p for r in residues)
    if len(res) != ring.n:
        raise ValueError("one residue per basis element required")
    if res[ring.unit] != 1 % p:
        raise ValueError(f"unit residue must be 1, got {res[ring.unit]}")
    N = ring.constants
    for i in range(ring.n):
        for j in range(ring.n):
            lhs = sum(v * res[k] for k, v in enumerate(N[i][j])) % p
            if lhs != (res[i] * res[j]) % p:
                raise ValueError(
                    f"not multiplicative at basis pair ({ring.labels[i]}, {ring.labels[j]}): "
                    f"dim(b_i b_j) = {lhs}, dim(b_i)dim(b_j) = {(res[i] * res[j]) % p}"
                )
    return DimHom(res, p)


def canonical_dim_hom(ring: BasedRing, p: int) -> DimHom:
    """The DimHom induced by the ring's integer dimensions (dim(L_s) = s
    for Green and Verlinde rings, all ones for group rings)."""
    if ring.dims is None:
        raise ValueError(f"ring {ring.name!r} carries no integer dimension data")
    return dim_hom(ring, [d % p for d in ring.dims], p)


def apply_dim_hom(d: DimHom, x: RingElement) -> int:
    return sum(c * r for c, r in zip(x.coeffs, d.residues)) % d.p


def global_dimension(ring: BasedRing, d: DimHom) -> int:
    """Sum of squared dimensions mod p."""
    if len(d.residues) != ring.n:
        raise ValueError("dimension homomorphism does not match the ring")
    return sum(r * r for r in d.residues) % d.p


def regular_dual_element(ring: BasedRing) -> RingElement:
    """R = sum_i dual(b_i) * b_i, computed exactly in the ring."""
    N = ring.constants
    coeffs = [0] * ring.n
    for i in range(ring.n):
        for k, v in enumerate(N[ring.dual[i]][i]):
            coeffs[k] += v
    return RingElement(ring, tuple(coeffs))


def trace_form_gram(ring: BasedRing, p: int) -> ModpMatrix:
    """Gram matrix of (x, y) -> Tr(xy) on K(C) (x) F_p in the basis.

    G[i][j] is the trace of left multiplication by b_i b_j, reduced mod
    p; it equals sum_k N[i][j][k] Tr(N_k).
    """
    if not is_prime(p):
        raise ValueError(f"p = {p!r} is not prime")
    N = ring.constants
    n = ring.n
    traces = [sum(N[k][m][m] for m in range(n)) for k in range(n)]
    entries = tuple(
        tuple(sum(v * traces[k] for k, v in enumerate(N[i][j])) % p for j in range(n))
        for i in range(n)
    )
    return ModpMatrix(entries, p)


def is_semisimple_mod_p(ring: BasedRing, p: int) -> bool:
    """True iff the trace form is non-degenerate over F_p (the standard
    criterion for commutative algebras over a perfect field)."""
    gram = trace_form_gram(ring, p)
    return kernels.rank_mod_p([list(row) for row in gram.entries], p) == ring.n


def pth_power(ring: BasedRing, x: RingElement, p: int) -> RingElement:
    """Coefficients of x^p reduced mod p (an element of K(C) (x) F_p)."""
    if not is_prime(p):
        raise ValueError(f"p = {p!r} is not prime")
    full = power(ring, x, p)
    return RingElement(ring, tuple(c % p for c in full.coeffs))


def frobenius_candidates(
    ring: BasedRing,
    d: DimHom | None,
    i: int,
    p: int,
    fp_tol: float = DEFAULT_FP_TOL,
    max_total: int | None = None,
):
    """All Frobenius-image candidates for basis element i.

    A candidate is a non-negative integer matrix m over (source basis) x
    (Ver_p basis) such that

    * for every j: sum_s m[j][s] * s = c_j mod p, where x^p = sum c_j b_j
      over the integers (the dimension-homomorphism constraint), and
    * the FPdim of the candidate matches FPdim(b_i) within fp_tol.

    The search is exhaustive over the finite region forced by the FPdim
    bound; the total multiplicity is additionally capped at
    ceil(FPdim(b_i)) + 1 (configurable via ``max_total``), which is
    sound because every FPdim is at least 1.  An empty list is a legal
    outcome.  Matrices are returned in lexicographic order.
    """
    if not is_prime(p) or p < 3:
        raise ValueError(f"p = {p!r} must be a prime >= 3")
    if not 0 <= i < ring.n:
        raise ValueError(f"basis index {i} out of range")
    if d is not None and (d.p != p or len(d.residues) != ring.n):
        raise ValueError("dimension homomorphism does not match ring and p")
    verl = verlinde_ring(p)
    src_fpd = fp_dims(ring).values
    ver_fpd = fp_dims(verl).values
    target = src_fpd[i]

    c = power(ring, ring.basis_element(i), p).coeffs
    cmod = [v % p for v in c]

    n = ring.n
    nv = p - 1
    budget = max_total if max_total is not None else math.ceil(target - fp_tol) + 1

    matrix = [[0] * nv for _ in range(n)]
    out: list[tuple[tuple[int, ...], ...]] = []

    def search(cell: int, acc: float, used: int, row_sum: int) -> None:
        # Cells run j-major, so each row's congruence is enforced as soon
        # as the row is complete.
        if cell == n * nv:
            if row_sum % p == cmod[n - 1] and abs(acc - target) <= fp_tol:
                out.append(tuple(tuple(r) for r in matrix))
            return
        j, s0 = divmod(cell, nv)
        if s0 == 0 and cell > 0:
            if row_sum % p != cmod[j - 1]:
                return
            row_sum = 0
        w = src_fpd[j] * ver_fpd[s0]
        limit = min(budget - used, int((target + fp_tol - acc) / w + 1e-12))
        for t in range(max(limit, 0) + 1):
            matrix[j][s0] = t
            search(cell + 1, acc + t * w, used + t, row_sum + t * (s0 + 1))
        matrix[j][s0] = 0

    search(0, 0.0, 0, 0)
    return sorted(out)


def verlinde_frobenius_table(p: int) -> FrobeniusTable:
    """The closed-form Frobenius table of Ver_p itself."""
    n = p - 1
    rows = []
    for s in range(1, p):
        a, b = frobenius_on_verlinde(s, p)
        row = [[0] * n for _ in range(n)]
        row[a - 1][b - 1] = 1
        rows.append(tuple(tuple(r) for r in row))
    return FrobeniusTable(p, tuple(rows))


def frobenius_type(table: FrobeniusTable, p: int) -> FrobeniusType:
    """Smallest of the four distinguished subrings of Ver_p containing
    every Ver_p component of the table.

    For p in {2, 3} only the degenerate outcomes Vec and sVec exist.
    Raises if the closure matches none of the four (impossible for a
    table over a valid Ver_p; signals corruption).
    """
    if table.p != p:
        raise ValueError(f"table is at p = {table.p}, expected {p}")
    verl = verlinde_ring(p)
    closure = set(subring_closure(verl, table.used_verlinde_indices()).indices)
    ordered: list[tuple[set[int], FrobeniusType]] = [({verl.unit}, FrobeniusType.VEC)]
    if p > 2:
        ordered.append((set(svec_indices(p)), FrobeniusType.SVEC))
    if p > 3:
        ordered.append((set(plus_indices(p)), FrobeniusType.PLUS))
    ordered.append((set(range(verl.n)), FrobeniusType.FULL))
    for indices, kind in ordered:
        if closure == indices:
            return kind
    raise ValueError(f"closure {sorted(closure)} matches none of the four subrings of Ver_{p}")
