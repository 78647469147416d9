"""Based rings: finite bases with non-negative integer structure constants.

A :class:`BasedRing` stores a basis, a unit basis element, a duality
involution and the dense tensor of structure constants.  Elements are
integer coefficient vectors; all arithmetic uses Python integers, so
results are exact and overflow is impossible.

Rings and elements are immutable and hashable; every operation in this
module is pure, so values can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property

__all__ = [
    "BasedRing",
    "RingElement",
    "Violation",
    "validate",
    "multiply",
    "power",
    "box_product",
    "group_ring",
    "yang_lee_ring",
    "restrict",
    "permute",
]

Tensor = tuple[tuple[tuple[int, ...], ...], ...]


@dataclass(frozen=True)
class Violation:
    """One failed axiom, with the witnessing basis indices."""

    axiom: str
    indices: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        return f"{self.axiom} at {self.indices}: {self.message}"


def _as_tensor(constants) -> Tensor:
    return tuple(tuple(tuple(row) for row in plane) for plane in constants)


@dataclass(frozen=True)
class BasedRing:
    """A ring with distinguished basis, unit, duality and ≥0 integer constants.

    ``constants[i][j][k]`` is the multiplicity of basis element ``k`` in
    the product ``b_i * b_j``.  Basis order is part of the ring's
    identity: two rings are equal only if labels, order and every entry
    agree.  Use :func:`fusionring.structure.find_isomorphism` for
    structural equality.

    ``fusion`` declares that the two duality axioms (the unit appears in
    ``b_i * b_j`` exactly when ``j = dual(i)``, and Frobenius
    reciprocity) are expected to hold.  Grothendieck rings of fusion
    categories satisfy them; split Grothendieck rings of non-semisimple
    categories (the Green ring of C_p) do not, and are constructed with
    ``fusion=False`` so that :func:`validate` checks only the axioms
    they actually obey.

    ``dims`` is optional metadata (integer categorical dimensions of the
    basis objects) used to derive canonical dimension homomorphisms; it
    is not part of ring identity and is not serialized.
    """

    labels: tuple[str, ...]
    unit: int
    dual: tuple[int, ...]
    constants: Tensor
    commutative: bool = True
    fusion: bool = True
    name: str = "ring"
    prime: int | None = None
    dims: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "dual", tuple(self.dual))
        object.__setattr__(self, "constants", _as_tensor(self.constants))
        if self.dims is not None:
            object.__setattr__(self, "dims", tuple(self.dims))
        n = len(self.labels)
        if n == 0:
            raise ValueError("basis must be non-empty")
        if len(set(self.labels)) != n:
            raise ValueError("duplicate basis labels")
        if not 0 <= self.unit < n:
            raise ValueError(f"unit index {self.unit} out of range")
        if len(self.dual) != n or sorted(self.dual) != list(range(n)):
            raise ValueError("dual must be a permutation of the basis indices")
        if len(self.constants) != n:
            raise ValueError(f"constants tensor must be cubic of side {n}")
        for plane in self.constants:
            if len(plane) != n:
                raise ValueError(f"constants tensor must be cubic of side {n}")
            for row in plane:
                if len(row) != n:
                    raise ValueError(f"constants tensor must be cubic of side {n}")
                for v in row:
                    if not isinstance(v, int) or isinstance(v, bool):
                        raise ValueError(f"structure constant {v!r} is not an integer")
        if self.dims is not None and len(self.dims) != n:
            raise ValueError("dims length must equal basis size")

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _index_of(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index_of[label]
        except KeyError:
            raise KeyError(f"no basis element labelled {label!r} in {self.name}") from None

    def basis_element(self, i: int | str) -> RingElement:
        if isinstance(i, str):
            i = self.index(i)
        coeffs = [0] * self.n
        coeffs[i] = 1
        return RingElement(self, tuple(coeffs))

    def unit_element(self) -> RingElement:
        return self.basis_element(self.unit)

    def zero_element(self) -> RingElement:
        return RingElement(self, (0,) * self.n)

    def element(self, coeffs) -> RingElement:
        """Element from a coefficient sequence or a {label: coeff} mapping."""
        if isinstance(coeffs, dict):
            vec = [0] * self.n
            for lab, c in coeffs.items():
                vec[self.index(lab)] += c
            return RingElement(self, tuple(vec))
        return RingElement(self, tuple(coeffs))

    def left_mult_matrix(self, i: int) -> tuple[tuple[int, ...], ...]:
        """Matrix of left multiplication by b_i (row k, column j)."""
        N = self.constants
        n = self.n
        return tuple(tuple(N[i][j][k] for j in range(n)) for k in range(n))

    def with_constant(self, i: int, j: int, k: int, value: int) -> BasedRing:
        """Copy with one structure constant replaced (for tests and repairs)."""
        planes = [list(map(list, plane)) for plane in self.constants]
        planes[i][j][k] = value
        return replace(self, constants=_as_tensor(planes))

    def __repr__(self) -> str:
        return f"BasedRing({self.name!r}, n={self.n})"


@dataclass(frozen=True)
class RingElement:
    """Integer coefficient vector over a ring's basis."""

    ring: BasedRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.ring.n:
            raise ValueError(
                f"coefficient vector of length {len(self.coeffs)} over basis of size {self.ring.n}"
            )
        for v in self.coeffs:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"coefficient {v!r} is not an integer")

    def coeff(self, label: str) -> int:
        return self.coeffs[self.ring.index(label)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: RingElement) -> RingElement:
        _require_same_ring(self.ring, other)
        return RingElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RingElement) -> RingElement:
        _require_same_ring(self.ring, other)
        return RingElement(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return multiply(self.ring, self, other)
        if isinstance(other, int):
            return RingElement(self.ring, tuple(other * a for a in self.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ring, tuple(other * a for a in self.coeffs))
        return NotImplemented

    def __pow__(self, n: int) -> RingElement:
        return power(self.ring, self, n)

    def pretty(self) -> str:
        """Human form, e.g. ``L1 + 2*L3`` (deterministic, basis order)."""
        terms = []
        for lab, c in zip(self.ring.labels, self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = lab if mag == 1 else f"{mag}*{lab}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        out = []
        for i, (neg, body) in enumerate(terms):
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __str__(self) -> str:
        return self.pretty()


def _require_same_ring(ring: BasedRing, *elements: RingElement) -> None:
    for x in elements:
        if x.ring != ring:
            raise ValueError(
                f"element over basis of {x.ring.name!r} used with ring {ring.name!r}"
            )


def _int_matmul(a, b):
    n = len(b[0])
    out = []
    for row in a:
        acc = [0] * n
        for k, v in enumerate(row):
            if v:
                brow = b[k]
                acc = [x + v * y for x, y in zip(acc, brow)]
        out.append(acc)
    return out


def validate(ring: BasedRing) -> list[Violation]:
    """Check the based-ring axioms; empty list means all hold.

    At most one violation (the lexicographically first witness) is
    reported per axiom.  The duality axioms -- unit constituent and
    Frobenius reciprocity -- are checked only for rings flagged
    ``fusion=True``; they fail legitimately for split Grothendieck rings
    of non-semisimple categories.  Malformed shapes are rejected at
    construction, not here.
    """
    N = ring.constants
    n = ring.n
    u = ring.unit
    dual = ring.dual
    out: list[Violation] = []

    def first_negative():
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if N[i][j][k] < 0:
                        return Violation(
                            "nonnegative", (i, j, k), f"structure constant {N[i][j][k]} < 0"
                        )
        return None

    v = first_negative()
    if v:
        out.append(v)

    def first_unit():
        for j in range(n):
            for k in range(n):
                want = 1 if j == k else 0
                if N[u][j][k] != want:
                    return Violation(
                        "unit", (u, j, k), f"N[unit][{j}][{k}] = {N[u][j][k]}, want {want}"
                    )
                if N[j][u][k] != want:
                    return Violation(
                        "unit", (j, u, k), f"N[{j}][unit][{k}] = {N[j][u][k]}, want {want}"
                    )
        return None

    v = first_unit()
    if v:
        out.append(v)

    if dual[u] != u:
        out.append(Violation("dual-involution", (u,), f"dual(unit) = {dual[u]} != unit"))
    else:
        for i in range(n):
            if dual[dual[i]] != i:
                out.append(
                    Violation("dual-involution", (i,), f"dual(dual({i})) = {dual[dual[i]]}")
                )
                break

    if ring.fusion:

        def first_unit_dual():
            for i in range(n):
                for j in range(n):
                    want = 1 if j == dual[i] else 0
                    if N[i][j][u] != want:
                        return Violation(
                            "unit-dual",
                            (i, j),
                            f"N[{i}][{j}][unit] = {N[i][j][u]}, want {want}",
                        )
            return None

        v = first_unit_dual()
        if v:
            out.append(v)

        def first_frobenius():
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if N[i][j][k] != N[dual[i]][k][j]:
                            return Violation(
                                "frobenius-reciprocity",
                                (i, j, k),
                                f"N[{i}][{j}][{k}] = {N[i][j][k]} != "
                                f"N[dual({i})][{k}][{j}] = {N[dual[i]][k][j]}",
                            )
                        if N[i][j][k] != N[k][dual[j]][i]:
                            return Violation(
                                "frobenius-reciprocity",
                                (i, j, k),
                                f"N[{i}][{j}][{k}] = {N[i][j][k]} != "
                                f"N[{k}][dual({j})][{i}] = {N[k][dual[j]][i]}",
                            )
            return None

        v = first_frobenius()
        if v:
            out.append(v)

    if ring.commutative:

        def first_noncommutative():
            for i in range(n):
                for j in range(i + 1, n):
                    for k in range(n):
                        if N[i][j][k] != N[j][i][k]:
                            return Violation(
                                "commutativity",
                                (i, j, k),
                                f"N[{i}][{j}][{k}] = {N[i][j][k]} != N[{j}][{i}][{k}] = {N[j][i][k]}",
                            )
            return None

        v = first_noncommutative()
        if v:
            out.append(v)

    def first_nonassociative():
        # (b_i b_j) b_k vs b_i (b_j b_k); the matrix over (k, l) of the
        # left side is sum_m N[i][j][m] * N_m and of the right side is
        # N_j @ N_i where N_m denotes the plane constants[m].
        for i in range(n):
            Ni = N[i]
            for j in range(n):
                rhs = _int_matmul(N[j], Ni)
                lhs = [[0] * n for _ in range(n)]
                for m, c in enumerate(Ni[j]):
                    if c:
                        plane = N[m]
                        for k in range(n):
                            prow = plane[k]
                            lrow = lhs[k]
                            for l in range(n):
                                lrow[l] += c * prow[l]
                for k in range(n):
                    if lhs[k] != rhs[k]:
                        for l in range(n):
                            if lhs[k][l] != rhs[k][l]:
                                return Violation(
                                    "associativity",
                                    (i, j, k, l),
                                    f"sum_m N[{i}][{j}][m]N[m][{k}][{l}] = {lhs[k][l]} != "
                                    f"sum_m N[{j}][{k}][m]N[{i}][m][{l}] = {rhs[k][l]}",
                                )
        return None

    v = first_nonassociative()
    if v:
        out.append(v)
    return out


def multiply(ring: BasedRing, x: RingElement, y: RingElement) -> RingElement:
    """Bilinear extension of the structure constants; exact integers."""
    _require_same_ring(ring, x, y)
    N = ring.constants
    n = ring.n
    out = [0] * n
    for i, xi in enumerate(x.coeffs):
        if not xi:
            continue
        Ni = N[i]
        for j, yj in enumerate(y.coeffs):
            if not yj:
                continue
            c = xi * yj
            for k, nk in enumerate(Ni[j]):
                if nk:
                    out[k] += c * nk
    return RingElement(ring, tuple(out))


def power(ring: BasedRing, x: RingElement, n: int) -> RingElement:
    """x**n by repeated squaring; x**0 is the unit."""
    _require_same_ring(ring, x)
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"exponent must be a non-negative integer, got {n!r}")
    result = ring.unit_element()
    base = x
    e = n
    while e:
        if e & 1:
            result = multiply(ring, result, base)
        e >>= 1
        if e:
            base = multiply(ring, base, base)
    return result


def box_product(a: BasedRing, b: BasedRing) -> BasedRing:
    """External tensor product: basis = pairs (row-major), constants multiply."""
    na, nb = a.n, b.n
    labels = tuple(f"{la}⊠{lb}" for la in a.labels for lb in b.labels)
    unit = a.unit * nb + b.unit
    dual = tuple(a.dual[i] * nb + b.dual[j] for i in range(na) for j in range(nb))
    Na, Nb = a.constants, b.constants
    constants = tuple(
        tuple(
            tuple(
                Na[i1][i2][i3] * Nb[j1][j2][j3]
                for i3 in range(na)
                for j3 in range(nb)
            )
            for i2 in range(na)
            for j2 in range(nb)
        )
        for i1 in range(na)
        for j1 in range(nb)
    )
    dims = None
    if a.dims is not None and b.dims is not None:
        dims = tuple(da * db for da in a.dims for db in b.dims)
    prime = a.prime if a.prime is not None and a.prime == b.prime else None
    return BasedRing(
        labels=labels,
        unit=unit,
        dual=dual,
        constants=constants,
        commutative=a.commutative and b.commutative,
        fusion=a.fusion and b.fusion,
        name=f"{a.name}⊠{b.name}",
        prime=prime,
        dims=dims,
    )


def group_ring(n: int) -> BasedRing:
    """Group ring of Z/n: basis g^0..g^{n-1}, dual(g^i) = g^{-i}."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"group order must be a positive integer, got {n!r}")
    labels = tuple(f"g{i}" for i in range(n))
    dual = tuple((-i) % n for i in range(n))
    constants = tuple(
        tuple(tuple(1 if k == (i + j) % n else 0 for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return BasedRing(
        labels=labels,
        unit=0,
        dual=dual,
        constants=constants,
        commutative=True,
        fusion=True,
        name=f"group_{n}",
        dims=(1,) * n,
    )


def yang_lee_ring() -> BasedRing:
    """The Fibonacci ring: basis {1, X} with X*X = 1 + X."""
    constants = (
        ((1, 0), (0, 1)),
        ((0, 1), (1, 1)),
    )
    return BasedRing(
        labels=("1", "X"),
        unit=0,
        dual=(0, 1),
        constants=constants,
        commutative=True,
        fusion=True,
        name="yanglee",
    )


def restrict(ring: BasedRing, indices, *, name: str | None = None) -> BasedRing:
    """Sub-based-ring on a closed index set (ambient basis order kept).

    Raises ``ValueError`` if the set is not unital, dual-closed and
    closed under fusion -- restriction to a non-closed set would not be
    a ring.
    """
    idx = sorted(set(indices))
    pos = {g: t for t, g in enumerate(idx)}
    if ring.unit not in pos:
        raise ValueError("index set does not contain the unit")
    for g in idx:
        if ring.dual[g] not in pos:
            raise ValueError(f"index set not closed under duality at {g}")
    N = ring.constants
    for g in idx:
        for h in idx:
            for k in range(ring.n):
                if N[g][h][k] and k not in pos:
                    raise ValueError(
                        f"index set not closed under fusion: constituent {k} of {g}*{h}"
                    )
    constants = tuple(
        tuple(tuple(N[g][h][k] for k in idx) for h in idx) for g in idx
    )
    return BasedRing(
        labels=tuple(ring.labels[g] for g in idx),
        unit=pos[ring.unit],
        dual=tuple(pos[ring.dual[g]] for g in idx),
        constants=constants,
        commutative=ring.commutative,
        fusion=ring.fusion,
        name=name if name is not None else f"{ring.name}|{','.join(str(g) for g in idx)}",
        prime=ring.prime,
        dims=None if ring.dims is None else tuple(ring.dims[g] for g in idx),
    )


def permute(ring: BasedRing, sigma, *, name: str | None = None) -> BasedRing:
    """Relabelled copy: new basis position sigma[i] holds old element i."""
    n = ring.n
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(n)):
        raise ValueError("sigma must be a permutation of the basis indices")
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s] = i
    N = ring.constants
    constants = tuple(
        tuple(
            tuple(N[inv[i]][inv[j]][inv[k]] for k in range(n))
            for j in range(n)
        )
        for i in range(n)
    )
    return BasedRing(
        labels=tuple(ring.labels[inv[i]] for i in range(n)),
        unit=sigma[ring.unit],
        dual=tuple(sigma[ring.dual[inv[i]]] for i in range(n)),
        constants=constants,
        commutative=ring.commutative,
        fusion=ring.fusion,
        name=name if name is not None else f"{ring.name}~",
        prime=ring.prime,
        dims=None if ring.dims is None else tuple(ring.dims[inv[i]] for i in range(n)),
    )
