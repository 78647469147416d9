"""Green ring of the cyclic group C_p and the Jordan-type tensor oracle.

Tensor decompositions of indecomposables are *not* taken from closed
formulas: they are computed from rank profiles of nilpotent matrices
over F_p, so the classical multiplication rules can be cross-checked
against this independent oracle.  ``unipotent_jordan_tensor`` decomposes
J_r (x) J_s for unipotent Jordan blocks (the generator of C_p acting on
L_r (x) L_s); ``nilpotent_jordan_tensor`` does the same for the primitive
element x of k[x]/x^p acting as N_r (x) I + I (x) N_s.

The multiplicity of a size-m block of a nilpotent operator A on a
d-dimensional space is rank(A^(m-1)) - 2 rank(A^m) + rank(A^(m+1)),
with rank(A^0) = d.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from fusionring import kernels
from fusionring.based import BasedRing

__all__ = [
    "JordanType",
    "is_prime",
    "unipotent_jordan_tensor",
    "nilpotent_jordan_tensor",
    "green_ring",
    "DEFAULT_PRIME_BOUND",
]

DEFAULT_PRIME_BOUND = 31


def is_prime(n: int) -> bool:
    if not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class JordanType:
    """Multiset of Jordan block sizes for a decomposition over F_p.

    Blocks are stored sorted ascending with multiplicity; every size
    lies in [1, p].
    """

    blocks: tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks)))
        for b in self.blocks:
            if not isinstance(b, int) or not 1 <= b <= self.p:
                raise ValueError(f"block size {b!r} outside [1, {self.p}]")

    @property
    def total(self) -> int:
        return sum(self.blocks)

    def multiplicity(self, m: int) -> int:
        return self.blocks.count(m)

    def counter(self) -> Counter:
        return Counter(self.blocks)

    def __str__(self) -> str:
        parts = [
            f"{mult}*J{size}" if mult > 1 else f"J{size}"
            for size, mult in sorted(self.counter().items())
        ]
        return " + ".join(parts) if parts else "0"


def _check_oracle_args(r: int, s: int, p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p!r} is not prime")
    if not isinstance(r, int) or not 1 <= r <= p:
        raise ValueError(f"block size r = {r!r} outside [1, {p}]")
    if not isinstance(s, int) or not 1 <= s <= p:
        raise ValueError(f"block size s = {s!r} outside [1, {p}]")


def _unipotent_tensor_minus_identity(r: int, s: int, p: int):
    """A = J_r (x) J_s - I over F_p, with J_m upper unipotent."""
    n = r * s
    a = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(s):
            row = a[i * s + j]
            if j + 1 < s:
                row[i * s + (j + 1)] = 1
            if i + 1 < r:
                row[(i + 1) * s + j] = 1
                if j + 1 < s:
                    row[(i + 1) * s + (j + 1)] = 1
    return a


def _nilpotent_block_sum(r: int, s: int, p: int):
    """A = N_r (x) I + I (x) N_s over F_p, with N_m a single nilpotent block."""
    n = r * s
    a = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(s):
            row = a[i * s + j]
            if j + 1 < s:
                row[i * s + (j + 1)] = 1
            if i + 1 < r:
                row[(i + 1) * s + j] = 1
    return a


def _jordan_type_from_matrix(a, r: int, s: int, p: int) -> JordanType:
    n = r * s
    max_block = min(r + s - 1, p)
    ranks = kernels.nilpotent_rank_profile(a, p, max_block + 1)
    blocks: list[int] = []
    for m in range(1, max_block + 1):
        mult = ranks[m - 1] - 2 * ranks[m] + ranks[m + 1]
        if mult < 0:
            raise AssertionError(f"negative multiplicity at block size {m}: {ranks}")
        blocks.extend([m] * mult)
    jt = JordanType(tuple(blocks), p)
    if jt.total != n:
        raise AssertionError(f"block sizes sum to {jt.total}, expected {n}: {ranks}")
    return jt


@lru_cache(maxsize=None)
def unipotent_jordan_tensor(r: int, s: int, p: int) -> JordanType:
    """Jordan type of J_r (x) J_s over F_p (J_m = unipotent block of size m)."""
    _check_oracle_args(r, s, p)
    return _jordan_type_from_matrix(_unipotent_tensor_minus_identity(r, s, p), r, s, p)


@lru_cache(maxsize=None)
def nilpotent_jordan_tensor(r: int, s: int, p: int) -> JordanType:
    """Jordan type of N_r (x) I + I (x) N_s over F_p."""
    _check_oracle_args(r, s, p)
    return _jordan_type_from_matrix(_nilpotent_block_sum(r, s, p), r, s, p)


@lru_cache(maxsize=None)
def green_ring(p: int, max_prime: int = DEFAULT_PRIME_BOUND) -> BasedRing:
    """Representation ring of C_p in characteristic p, basis L_1..L_p.

    The full product table is computed once from the unipotent Jordan
    oracle and memoized.  The result is a based ring with identity
    duality (L_s is self-dual) and unit L_1; it is *not* a fusion ring:
    rows involving the projective L_p violate the duality axioms, which
    is why the ring carries ``fusion=False``.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p!r} is not prime")
    if p > max_prime:
        raise ValueError(f"p = {p} exceeds the configured bound {max_prime}")
    n = p
    constants = [[[0] * n for _ in range(n)] for _ in range(n)]
    for r in range(1, p + 1):
        for s in range(r, p + 1):
            counts = unipotent_jordan_tensor(r, s, p).counter()
            for m, mult in counts.items():
                constants[r - 1][s - 1][m - 1] = mult
                constants[s - 1][r - 1][m - 1] = mult
    return BasedRing(
        labels=tuple(f"L{s}" for s in range(1, p + 1)),
        unit=0,
        dual=tuple(range(n)),
        constants=tuple(tuple(tuple(row) for row in plane) for plane in constants),
        commutative=True,
        fusion=False,
        name=f"green_{p}",
        prime=p,
        dims=tuple(range(1, p + 1)),
    )
