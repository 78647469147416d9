"""Structural search on based rings.

Subring closure and enumeration, the universal grading, the graded
dimension identity, based-ring isomorphism and based-homomorphism
search.  All searches are exhaustive with deterministic (lexicographic)
ordering, so outputs are reproducible across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass

from fusionring.based import BasedRing, RingElement, multiply
from fusionring.numerics import fp_dims

__all__ = [
    "Subring",
    "GradingMap",
    "GradedDimReport",
    "subring_closure",
    "enumerate_subrings",
    "universal_grading",
    "graded_dimension_identity",
    "find_isomorphism",
    "find_based_homs",
    "FP_PRUNE_TOL",
]

FP_PRUNE_TOL = 1e-6


@dataclass(frozen=True)
class Subring:
    """Sorted basis-index set that is unital, dual-closed and fusion-closed."""

    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(sorted(self.indices)))

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i: int) -> bool:
        return i in self.indices

    def labels(self, ring: BasedRing) -> tuple[str, ...]:
        return tuple(ring.labels[i] for i in self.indices)


def subring_closure(ring: BasedRing, seed) -> Subring:
    """Least index set containing the seed, the unit, duals and all
    fusion constituents.  Monotone fixpoint on a finite lattice."""
    current = {ring.unit}
    for i in seed:
        if not 0 <= i < ring.n:
            raise ValueError(f"seed index {i} out of range")
        current.add(i)
        current.add(ring.dual[i])
    N = ring.constants
    changed = True
    while changed:
        changed = False
        members = sorted(current)
        for i in members:
            for j in members:
                for k, v in enumerate(N[i][j]):
                    if v and k not in current:
                        current.add(k)
                        current.add(ring.dual[k])
                        changed = True
    return Subring(tuple(sorted(current)))


def enumerate_subrings(ring: BasedRing) -> list[Subring]:
    """All based subrings, as the join-closure of the singleton closures.

    Complete because every subring is the join of the closures of its
    members.  Sorted by size, then lexicographically.
    """
    found: set[tuple[int, ...]] = set()
    singles = []
    for i in range(ring.n):
        s = subring_closure(ring, (i,)).indices
        if s not in found:
            found.add(s)
            singles.append(s)
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for b in singles:
                u = subring_closure(ring, set(a) | set(b)).indices
                if u not in found:
                    found.add(u)
                    fresh.append(u)
        frontier = fresh
    return [Subring(s) for s in sorted(found, key=lambda t: (len(t), t))]


@dataclass(frozen=True)
class GradingMap:
    """Assignment of basis indices to the classes of a group grading.

    ``classes[c]`` lists the basis indices in class ``c``; class 0 is
    the neutral component.  ``assignment[i]`` is the class of basis
    element ``i``.
    """

    assignment: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GradedDimReport:
    """Both sides of dim(C) = |G| dim(C_1) plus the per-class sums D_g."""

    lhs: int
    group_order: int
    neutral_dimension: int
    rhs: int
    class_sums: tuple[tuple[int, ...], ...]


def universal_grading(ring: BasedRing) -> tuple[tuple[tuple[int, ...], ...], GradingMap]:
    """Finest faithful group grading of a commutative based ring.

    The neutral component is the adjoint subring generated by all
    constituents of b_i * dual(b_i); two indices share a class exactly
    when some constituent of b_i * dual(b_j) lies in it.  Returns the
    multiplication table of the (abelian) class group, identity first,
    and the class map.
    """
    if not ring.commutative:
        raise ValueError("universal grading is only supported for commutative rings")
    N = ring.constants
    n = ring.n
    seed = set()
    for i in range(n):
        for k, v in enumerate(N[i][ring.dual[i]]):
            if v:
                seed.add(k)
    adjoint = set(subring_closure(ring, seed).indices)

    def related(i: int, j: int) -> bool:
        return any(
            v and k in adjoint for k, v in enumerate(N[i][ring.dual[j]])
        )

    # Classes are the transitive closure of the relation.  On fusion
    # rings the relation is already an equivalence; on relaxed-duality
    # rings (the Green ring, whose projective element absorbs products)
    # the closure collapses classes until the grading law can hold.
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if related(i, j):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)

    roots: dict[int, list[int]] = {}
    for i in range(n):
        roots.setdefault(find(i), []).append(i)
    classes = list(roots.values())
    assignment = [-1] * n
    for c, members in enumerate(classes):
        for i in members:
            assignment[i] = c

    # Put the neutral class (the one containing the unit) first, keep the
    # rest ordered by smallest member.
    order = sorted(range(len(classes)), key=lambda c: (ring.unit not in classes[c], classes[c][0]))
    relabel = {old: new for new, old in enumerate(order)}
    classes = [classes[old] for old in order]
    assignment = [relabel[c] for c in assignment]

    if ring.fusion and sorted(classes[0]) != sorted(adjoint):
        raise AssertionError("neutral component differs from the adjoint subring")

    g = len(classes)
    table = [[-1] * g for _ in range(g)]
    for a in range(g):
        for b in range(g):
            i, j = classes[a][0], classes[b][0]
            targets = {assignment[k] for k, v in enumerate(N[i][j]) if v}
            if len(targets) != 1:
                raise ValueError(
                    f"class product of {a} and {b} is ill-defined (targets {sorted(targets)})"
                )
            table[a][b] = targets.pop()

    # Faithfulness and the grading law, re-checked on the full tensor.
    for i in range(n):
        for j in range(n):
            for k, v in enumerate(N[i][j]):
                if v and table[assignment[i]][assignment[j]] != assignment[k]:
                    raise AssertionError(f"grading law fails at ({i}, {j}, {k})")

    table_t = tuple(tuple(row) for row in table)
    gm = GradingMap(tuple(assignment), tuple(tuple(sorted(c)) for c in classes))
    return table_t, gm


def graded_dimension_identity(
    ring: BasedRing, d, grading: GradingMap, p: int
) -> tuple[bool, GradedDimReport]:
    """Check dim(C) = |G| * dim(C_1) mod p for a faithful grading.

    ``d`` is a DimHom (residues mod p per basis element).  The report
    carries both sides and the per-class weighted sums
    D_g = sum_{i in g} dim(b_i) [b_i] as residue vectors.
    """
    if d.p != p:
        raise ValueError(f"dimension homomorphism is mod {d.p}, expected mod {p}")
    res = d.residues
    lhs = sum(r * r for r in res) % p
    neutral = grading.classes[0]
    neutral_dim = sum(res[i] * res[i] for i in neutral) % p
    order = len(grading.classes)
    rhs = (order * neutral_dim) % p
    sums = []
    for members in grading.classes:
        vec = [0] * ring.n
        for i in members:
            vec[i] = res[i] % p
        sums.append(tuple(vec))
    return lhs == rhs, GradedDimReport(lhs, order, neutral_dim, rhs, tuple(sums))


def _fpdim_multisets_match(a_vals, b_vals, tol: float) -> bool:
    for x, y in zip(sorted(a_vals), sorted(b_vals)):
        if abs(x - y) > tol:
            return False
    return True


def _diag_signature(ring: BasedRing, i: int) -> tuple:
    N = ring.constants
    return (
        ring.dual[i] == i,
        tuple(sorted(N[i][i])),
        tuple(sorted(N[i][ring.dual[i]])),
    )


def find_isomorphism(a: BasedRing, b: BasedRing):
    """Basis bijection matching units, duality and every structure
    constant, or None after exhaustive backtracking.

    Candidates are pruned by FPdim (tolerance 1e-6, inclusive so that
    near-collisions enlarge candidate sets instead of wrongly excluding
    them), self-duality, and self-product signatures.
    """
    if a.n != b.n:
        return None
    n = a.n
    fa = fp_dims(a).values
    fb = fp_dims(b).values
    if not _fpdim_multisets_match(fa, fb, FP_PRUNE_TOL):
        return None
    sig_a = [_diag_signature(a, i) for i in range(n)]
    sig_b = [_diag_signature(b, j) for j in range(n)]
    candidates = []
    for i in range(n):
        cand = [
            j
            for j in range(n)
            if sig_a[i] == sig_b[j] and abs(fa[i] - fb[j]) <= FP_PRUNE_TOL
        ]
        if i == a.unit:
            cand = [j for j in cand if j == b.unit]
        if not cand:
            return None
        candidates.append(cand)

    Na, Nb = a.constants, b.constants
    sigma = [-1] * n
    used = [False] * n

    def rows_consistent(assigned: list[int]) -> bool:
        for i in assigned:
            for j in assigned:
                ra = Na[i][j]
                rb = Nb[sigma[i]][sigma[j]]
                if sorted(ra) != sorted(rb):
                    return False
                for k in assigned:
                    if ra[k] != rb[sigma[k]]:
                        return False
        return True

    def assign(i: int, j: int) -> list[int]:
        placed = []
        stack = [(i, j)]
        while stack:
            x, y = stack.pop()
            if sigma[x] != -1:
                if sigma[x] != y:
                    for q in placed:
                        used[sigma[q]] = False
                        sigma[q] = -1
                    return []
                continue
            if used[y] or y not in candidates[x]:
                for q in placed:
                    used[sigma[q]] = False
                    sigma[q] = -1
                return []
            sigma[x] = y
            used[y] = True
            placed.append(x)
            stack.append((a.dual[x], b.dual[y]))
        return placed

    def undo(placed: list[int]) -> None:
        for q in placed:
            used[sigma[q]] = False
            sigma[q] = -1

    def backtrack(pos: int) -> bool:
        while pos < n and sigma[pos] != -1:
            pos += 1
        if pos == n:
            return True
        for j in candidates[pos]:
            if used[j]:
                continue
            placed = assign(pos, j)
            if not placed:
                continue
            assigned = [q for q in range(n) if sigma[q] != -1]
            if rows_consistent(assigned) and backtrack(pos + 1):
                return True
            undo(placed)
        return False

    if not backtrack(0):
        return None
    result = tuple(sigma)
    # Final unconditional verification of the full tensors.
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if Na[i][j][k] != Nb[result[i]][result[j]][result[k]]:
                    raise AssertionError("search returned a non-isomorphism")
    return result


def _image_vectors(fpd_target, value: float, tol: float) -> list[tuple[int, ...]]:
    """All non-negative integer vectors whose FPdim is value within tol.

    Finite because every basis FPdim is >= 1.  Lexicographic order.
    """
    n = len(fpd_target)
    out: list[tuple[int, ...]] = []
    vec = [0] * n

    def rec(idx: int, acc: float) -> None:
        if idx == n:
            if abs(acc - value) <= tol:
                out.append(tuple(vec))
            return
        w = fpd_target[idx]
        max_c = int((value + tol - acc) / w + 1e-12)
        for c in range(max_c + 1):
            vec[idx] = c
            rec(idx + 1, acc + c * w)
        vec[idx] = 0

    rec(0, 0.0)
    return out


def find_based_homs(source: BasedRing, target: BasedRing, fp_tol: float = FP_PRUNE_TOL):
    """All unit- and duality-preserving non-negative matrices defining a
    ring homomorphism source -> target that preserves FPdim within
    fp_tol.  Exhaustive backtracking in source-basis order; returns a
    list of tuples of target coefficient vectors, one per source basis
    element, in deterministic order.
    """
    ns = source.n
    fps = fp_dims(source).values
    fpt = fp_dims(target).values
    unit_vec = tuple(1 if j == target.unit else 0 for j in range(target.n))

    candidates: list[list[tuple[int, ...]]] = []
    for i in range(ns):
        if i == source.unit:
            candidates.append([unit_vec])
            continue
        candidates.append(_image_vectors(fpt, fps[i], fp_tol))

    def dual_vec(v: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * target.n
        for j, c in enumerate(v):
            out[target.dual[j]] = c
        return tuple(out)

    Ns = source.constants
    images: list[tuple[int, ...] | None] = [None] * ns
    results: list[tuple[tuple[int, ...], ...]] = []

    def product_ok(i: int, j: int) -> bool:
        need = [k for k, v in enumerate(Ns[i][j]) if v]
        if any(images[k] is None for k in need):
            return True  # deferred until all constituents are assigned
        lhs = multiply(
            target,
            RingElement(target, images[i]),
            RingElement(target, images[j]),
        ).coeffs
        rhs = [0] * target.n
        for k in need:
            c = Ns[i][j][k]
            for t, v in enumerate(images[k]):
                rhs[t] += c * v
        return list(lhs) == rhs

    def all_products_ok(limit: int) -> bool:
        for i in range(limit + 1):
            if images[i] is None:
                continue
            for j in range(limit + 1):
                if images[j] is None:
                    continue
                if not product_ok(i, j):
                    return False
        return True

    def backtrack(i: int) -> None:
        if i == ns:
            results.append(tuple(images))  # fully assigned and verified
            return
        if images[i] is not None:
            if all_products_ok(i):
                backtrack(i + 1)
            return
        di = source.dual[i]
        for v in candidates[i]:
            images[i] = v
            forced_ok = True
            if di != i:
                dv = dual_vec(v)
                if images[di] is None:
                    images[di] = dv if dv in candidates[di] else None
                    if images[di] is None:
                        forced_ok = False
                elif images[di] != dv:
                    forced_ok = False
            else:
                if dual_vec(v) != v:
                    forced_ok = False
            if forced_ok and all_products_ok(max(i, di) if di > i else i):
                backtrack(i + 1)
            images[i] = None
            if di != i and di > i:
                images[di] = None

    backtrack(0)

    verified = []
    for hom in results:
        ok = True
        for i in range(ns):
            for j in range(ns):
                lhs = multiply(
                    target, RingElement(target, hom[i]), RingElement(target, hom[j])
                ).coeffs
                rhs = [0] * target.n
                for k, c in enumerate(Ns[i][j]):
                    if c:
                        for t, v in enumerate(hom[k]):
                            rhs[t] += c * v
                if list(lhs) != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            verified.append(hom)
    return verified
