"""Pure-Python mod-p matrix kernels (fallback used when the compiled
extension is unavailable).  Exact arithmetic throughout; no tolerances.
"""

from __future__ import annotations


def _check_modulus(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {p!r}")


def rank_mod_p(rows, p: int) -> int:
    """Rank of an integer matrix over F_p.

    Fraction-free forward elimination: rows are combined as
    pivot*row - factor*pivot_row, which never needs a modular inverse.
    The input is not modified.
    """
    _check_modulus(p)
    a = [[x % p for x in row] for row in rows]
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    rank = 0
    for col in range(n):
        piv = None
        for i in range(rank, m):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        pv = prow[col]
        for i in range(rank + 1, m):
            f = a[i][col]
            if f:
                row = a[i]
                a[i] = [(pv * x - f * y) % p for x, y in zip(row, prow)]
        rank += 1
        if rank == m:
            break
    return rank


def matmul_mod_p(a, b, p: int):
    """Product of two integer matrices, reduced mod p.

    Accumulates with exact Python integers and skips zero entries of the
    left factor, which matters for the sparse nilpotent matrices fed in
    by the Jordan-type oracle.
    """
    _check_modulus(p)
    if len(a) == 0 or len(b) == 0:
        return [list(row) for row in a]
    n = len(b[0])
    out = []
    for row in a:
        acc = [0] * n
        for k, v in enumerate(row):
            if v % p:
                w = v % p
                brow = b[k]
                acc = [x + w * y for x, y in zip(acc, brow)]
        out.append([x % p for x in acc])
    return out


def nilpotent_rank_profile(a, p: int, max_power: int):
    """Ranks of A^0, A^1, ..., A^max_power over F_p for square A.

    Once some power reaches rank zero the remaining entries are filled
    with zeros without further multiplication (A is expected nilpotent,
    but the function is correct for any square A).
    """
    _check_modulus(p)
    n = len(a)
    ranks = [n]
    power = [[x % p for x in row] for row in a]
    for _ in range(max_power):
        r = rank_mod_p(power, p)
        ranks.append(r)
        if r == 0:
            break
        power = matmul_mod_p(power, a, p)
    while len(ranks) < max_power + 1:
        ranks.append(0)
    return ranks
