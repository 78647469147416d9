"""Line-oriented text format for based rings (plus an optional DimHom).

Records, one per line, ``#`` starting a comment:

    ring <name>
    prime <p>                      (optional)
    basis <label> <label> ...
    unit <label>
    dual <label> <label>           (one line per nontrivial pair)
    dim <label> <residue>          (optional DimHom; requires prime)
    commutative true|false
    fusion true|false              (optional, default true)
    N <label> <label> <label> <n>  (omitted triples are zero)

Round-trip stability is exact: ``parse_ring_file(write_ring_file(r))``
reproduces ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass

from fusionring.based import BasedRing, validate
from fusionring.charp import DimHom, dim_hom

__all__ = ["RingFileError", "ParsedRingFile", "parse_ring_file", "write_ring_file"]


class RingFileError(ValueError):
    """Malformed ring file; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class ParsedRingFile:
    ring: BasedRing
    dim: DimHom | None


def _parse_bool(tok: str, lineno: int) -> bool:
    if tok == "true":
        return True
    if tok == "false":
        return False
    raise RingFileError(f"expected true or false, got {tok!r}", lineno)


def parse_ring_file(text: str, *, require_valid: bool = True) -> ParsedRingFile:
    """Parse a ring file.

    With ``require_valid`` (the default) the ring must pass
    :func:`fusionring.based.validate`; the ``check`` CLI command parses
    with ``require_valid=False`` so it can report the violations itself.
    """
    name = "ring"
    prime: int | None = None
    labels: tuple[str, ...] | None = None
    unit_label: str | None = None
    dual_pairs: list[tuple[str, str, int]] = []
    dim_entries: list[tuple[str, int, int]] = []
    commutative = True
    fusion = True
    n_entries: dict[tuple[str, str, str], int] = {}
    n_lines: dict[tuple[str, str, str], int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        key, rest = toks[0], toks[1:]
        if key == "ring":
            if len(rest) != 1:
                raise RingFileError("ring record takes exactly one name", lineno)
            name = rest[0]
        elif key == "prime":
            if len(rest) != 1:
                raise RingFileError("prime record takes exactly one value", lineno)
            try:
                prime = int(rest[0])
            except ValueError:
                raise RingFileError(f"prime {rest[0]!r} is not an integer", lineno) from None
            if prime < 2:
                raise RingFileError(f"prime must be >= 2, got {prime}", lineno)
        elif key == "basis":
            if labels is not None:
                raise RingFileError("duplicate basis record", lineno)
            if not rest:
                raise RingFileError("basis record needs at least one label", lineno)
            if len(set(rest)) != len(rest):
                raise RingFileError("duplicate labels in basis record", lineno)
            labels = tuple(rest)
        elif key == "unit":
            if len(rest) != 1:
                raise RingFileError("unit record takes exactly one label", lineno)
            unit_label = rest[0]
        elif key == "dual":
            if len(rest) != 2:
                raise RingFileError("dual record takes exactly two labels", lineno)
            dual_pairs.append((rest[0], rest[1], lineno))
        elif key == "dim":
            if len(rest) != 2:
                raise RingFileError("dim record takes a label and a residue", lineno)
            try:
                residue = int(rest[1])
            except ValueError:
                raise RingFileError(f"residue {rest[1]!r} is not an integer", lineno) from None
            dim_entries.append((rest[0], residue, lineno))
        elif key == "commutative":
            if len(rest) != 1:
                raise RingFileError("commutative record takes true or false", lineno)
            commutative = _parse_bool(rest[0], lineno)
        elif key == "fusion":
            if len(rest) != 1:
                raise RingFileError("fusion record takes true or false", lineno)
            fusion = _parse_bool(rest[0], lineno)
        elif key == "N":
            if len(rest) != 4:
                raise RingFileError("N record takes three labels and a value", lineno)
            try:
                value = int(rest[3])
            except ValueError:
                raise RingFileError(
                    f"structure constant {rest[3]!r} is not an integer", lineno
                ) from None
            if value < 0:
                raise RingFileError(f"negative structure constant {value}", lineno)
            triple = (rest[0], rest[1], rest[2])
            if triple in n_entries:
                raise RingFileError(
                    f"duplicate structure constant for {' '.join(triple)} "
                    f"(first at line {n_lines[triple]})",
                    lineno,
                )
            n_entries[triple] = value
            n_lines[triple] = lineno
        else:
            raise RingFileError(f"unknown record {key!r}", lineno)

    if labels is None:
        raise RingFileError("missing basis")
    if unit_label is None:
        raise RingFileError("missing unit")
    index = {lab: i for i, lab in enumerate(labels)}

    def resolve(lab: str, lineno: int | None) -> int:
        if lab not in index:
            raise RingFileError(f"unknown basis label {lab!r}", lineno)
        return index[lab]

    unit = resolve(unit_label, None)

    dual = list(range(len(labels)))
    seen_dual: set[int] = set()
    for a, b, lineno in dual_pairs:
        ia, ib = resolve(a, lineno), resolve(b, lineno)
        for i in (ia, ib) if ia != ib else (ia,):
            if i in seen_dual:
                raise RingFileError(f"conflicting dual assignment for {labels[i]!r}", lineno)
            seen_dual.add(i)
        dual[ia] = ib
        dual[ib] = ia

    n = len(labels)
    constants = [[[0] * n for _ in range(n)] for _ in range(n)]
    for (a, b, c), value in n_entries.items():
        lineno = n_lines[(a, b, c)]
        constants[resolve(a, lineno)][resolve(b, lineno)][resolve(c, lineno)] = value

    try:
        ring = BasedRing(
            labels=labels,
            unit=unit,
            dual=tuple(dual),
            constants=tuple(tuple(tuple(row) for row in plane) for plane in constants),
            commutative=commutative,
            fusion=fusion,
            name=name,
            prime=prime,
        )
    except ValueError as exc:
        raise RingFileError(str(exc)) from exc

    if require_valid:
        violations = validate(ring)
        if violations:
            raise RingFileError(f"axiom violation: {violations[0]}")

    dim: DimHom | None = None
    if dim_entries:
        if prime is None:
            raise RingFileError("dim records require a prime record", dim_entries[0][2])
        residues = [None] * n
        for lab, residue, lineno in dim_entries:
            i = resolve(lab, lineno)
            if residues[i] is not None:
                raise RingFileError(f"duplicate dim record for {lab!r}", lineno)
            if not 0 <= residue < prime:
                raise RingFileError(f"residue {residue} not in [0, {prime})", lineno)
            residues[i] = residue
        missing = [labels[i] for i, r in enumerate(residues) if r is None]
        if missing:
            raise RingFileError(f"missing dim records for {', '.join(missing)}")
        try:
            dim = dim_hom(ring, residues, prime)
        except ValueError as exc:
            raise RingFileError(f"bad dimension homomorphism: {exc}") from exc

    return ParsedRingFile(ring, dim)


def write_ring_file(ring: BasedRing, dim: DimHom | None = None) -> str:
    """Serialize a ring (and optional DimHom) in canonical form.

    Emits basis, unit, nontrivial dual pairs, dim records, flags, then
    N-triples sorted lexicographically by index with zeros omitted.
    """
    lines = [f"ring {ring.name}"]
    if ring.prime is not None:
        lines.append(f"prime {ring.prime}")
    lines.append("basis " + " ".join(ring.labels))
    lines.append(f"unit {ring.labels[ring.unit]}")
    for i, di in enumerate(ring.dual):
        if di > i:
            lines.append(f"dual {ring.labels[i]} {ring.labels[di]}")
    if dim is not None:
        if len(dim.residues) != ring.n:
            raise ValueError("dimension homomorphism does not match the ring")
        if ring.prime is None or dim.p != ring.prime:
            raise ValueError("dim records require a matching prime on the ring")
        for lab, r in zip(ring.labels, dim.residues):
            lines.append(f"dim {lab} {r}")
    lines.append(f"commutative {'true' if ring.commutative else 'false'}")
    if not ring.fusion:
        lines.append("fusion false")
    N = ring.constants
    for i in range(ring.n):
        for j in range(ring.n):
            for k in range(ring.n):
                if N[i][j][k]:
                    lines.append(
                        f"N {ring.labels[i]} {ring.labels[j]} {ring.labels[k]} {N[i][j][k]}"
                    )
    return "\n".join(lines) + "\n"
