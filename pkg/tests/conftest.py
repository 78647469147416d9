"""Shared fixtures: the rings shipped by the builtin generators."""

from __future__ import annotations

from fusionring.based import BasedRing, group_ring, yang_lee_ring
from fusionring.charp import canonical_dim_hom
from fusionring.green import green_ring
from fusionring.verlinde import plus_subring, svec_subring, verlinde_ring

SHIPPED_PRIMES = (2, 3, 5, 7, 11, 13)


def shipped_rings() -> list[BasedRing]:
    rings = [yang_lee_ring()]
    rings += [group_ring(n) for n in (1, 2, 3, 4, 8)]
    rings += [verlinde_ring(p) for p in SHIPPED_PRIMES]
    rings += [green_ring(p) for p in SHIPPED_PRIMES]
    rings += [svec_subring(p) for p in (3, 5, 7)]
    rings += [plus_subring(p) for p in (5, 7)]
    return rings


def shipped_dim_pairs():
    """(ring, canonical DimHom, p) for every shipped ring with dims."""
    combos = []
    for p in SHIPPED_PRIMES:
        combos.append((verlinde_ring(p), p))
        combos.append((green_ring(p), p))
    for p in (3, 5, 7):
        combos.append((svec_subring(p), p))
    for p in (5, 7):
        combos.append((plus_subring(p), p))
    for n in (1, 2, 4, 8):
        for p in (3, 5, 7):
            combos.append((group_ring(n), p))
    return [(ring, canonical_dim_hom(ring, p), p) for ring, p in combos]
