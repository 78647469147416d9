"""The universal Verlinde ring Ver_p and its distinguished subrings.

``verlinde_ring`` builds the ring from the closed-form fusion rule

    [L_r][L_s] = sum_{i=1..c} [L_{|r-s|+2i-1}],   c = min(r, s, p-r, p-s),

with the boundary convention that indices 0 and p denote the zero
element (never basis positions).  ``quotient_green`` builds the same
ring a second, independent way: delete the unique zero-dimensional
basis element L_p from the Jordan-oracle Green ring.  Agreement of the
two routes is a hard test-suite requirement, not a tolerated state.
"""

from __future__ import annotations

from functools import lru_cache

from fusionring.based import BasedRing, restrict, validate
from fusionring.green import is_prime

__all__ = [
    "verlinde_ring",
    "quotient_green",
    "svec_indices",
    "plus_indices",
    "svec_subring",
    "plus_subring",
    "frobenius_on_verlinde",
    "parity_twist",
]


@lru_cache(maxsize=None)
def verlinde_ring(p: int) -> BasedRing:
    """Ver_p fusion ring on basis L_1..L_{p-1}; self-dual, commutative."""
    if not is_prime(p):
        raise ValueError(f"p = {p!r} is not prime")
    n = p - 1
    constants = [[[0] * n for _ in range(n)] for _ in range(n)]
    for r in range(1, p):
        for s in range(1, p):
            c = min(r, s, p - r, p - s)
            for i in range(1, c + 1):
                k = abs(r - s) + 2 * i - 1
                constants[r - 1][s - 1][k - 1] += 1
    return BasedRing(
        labels=tuple(f"L{s}" for s in range(1, p)),
        unit=0,
        dual=tuple(range(n)),
        constants=tuple(tuple(tuple(row) for row in plane) for plane in constants),
        commutative=True,
        fusion=True,
        name=f"verlinde_{p}",
        prime=p,
        dims=tuple(range(1, p)),
    )


def quotient_green(g: BasedRing) -> BasedRing:
    """Negligible quotient of a Green ring: delete the L_p row/column.

    The deleted element is located as the unique basis element whose
    integer dimension vanishes mod p, not by position.  The result is
    computed entirely from ``g``'s structure constants so that it stays
    an independent check of the closed-form fusion rule.
    """
    violations = validate(g)
    if violations:
        raise ValueError(f"input ring fails validation: {violations[0]}")
    if g.prime is None or g.dims is None:
        raise ValueError("quotient requires a Green ring with prime and dimension data")
    p = g.prime
    zero_dim = [i for i, d in enumerate(g.dims) if d % p == 0]
    if len(zero_dim) != 1:
        raise ValueError(f"expected exactly one zero-dimensional basis element, got {zero_dim}")
    drop = zero_dim[0]
    keep = [i for i in range(g.n) if i != drop]
    N = g.constants
    constants = tuple(
        tuple(tuple(N[i][j][k] for k in keep) for j in keep) for i in keep
    )
    pos = {gidx: t for t, gidx in enumerate(keep)}
    return BasedRing(
        labels=tuple(g.labels[i] for i in keep),
        unit=pos[g.unit],
        dual=tuple(pos[g.dual[i]] for i in keep),
        constants=constants,
        commutative=g.commutative,
        fusion=True,
        name=f"verlinde_{p}",
        prime=p,
        dims=tuple(g.dims[i] for i in keep),
    )


def svec_indices(p: int) -> tuple[int, ...]:
    """0-based indices of {L_1, L_{p-1}} inside Ver_p (p > 2)."""
    if p <= 2:
        raise ValueError(f"sVec subring undefined for p = {p} (needs p > 2)")
    return (0, p - 2)


def plus_indices(p: int) -> tuple[int, ...]:
    """0-based indices of the odd part L_1, L_3, ..., L_{p-2} (p > 3)."""
    if p <= 3:
        raise ValueError(f"odd-part subring undefined for p = {p} (needs p > 3)")
    return tuple(s - 1 for s in range(1, p - 1, 2))


def svec_subring(p: int) -> BasedRing:
    """The order-2 pointed subring spanned by L_1 and L_{p-1}."""
    ring = verlinde_ring(p)
    return restrict(ring, svec_indices(p), name=f"svec_{p}")


def plus_subring(p: int) -> BasedRing:
    """The odd-index subring of Ver_p (generated by L_3); p > 3."""
    ring = verlinde_ring(p)
    return restrict(ring, plus_indices(p), name=f"verlinde_plus_{p}")


def frobenius_on_verlinde(s: int, p: int) -> tuple[int, int]:
    """Closed-form Frobenius image of L_s in Ver_p: a pair (a, b) of
    1-based indices meaning L_a (boxtimes) L_b.

    Odd s maps to (1, s); even s maps to (p-1, p-s).
    """
    if not is_prime(p) or p <= 2:
        raise ValueError(f"p = {p!r} must be a prime > 2")
    if not isinstance(s, int) or not 1 <= s <= p - 1:
        raise ValueError(f"index s = {s!r} outside [1, {p - 1}]")
    if s % 2 == 1:
        return (1, s)
    return (p - 1, p - s)


def parity_twist(s: int, p: int) -> int:
    """The index delta_s: 1 for odd s, p-1 for even s.

    Multiplying L_s by L_{delta_s} lands in the odd-index part.
    """
    if not isinstance(s, int) or not 1 <= s <= p - 1:
        raise ValueError(f"index s = {s!r} outside [1, {p - 1}]")
    return 1 if s % 2 == 1 else p - 1
