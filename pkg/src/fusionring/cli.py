"""Command-line surface.

Every command prints a deterministic report (basis-order tables, no
timestamps), so identical invocations produce byte-identical output.
Exit codes: 0 success, 1 a requested check failed (``check``, ``grim``,
``iso``), 2 input errors (bad flags, unreadable or malformed files).
"""

from __future__ import annotations

import argparse
import sys

from fusionring import charp, numerics, structure
from fusionring.based import (
    BasedRing,
    RingElement,
    box_product,
    group_ring,
    multiply,
    power,
    validate,
    yang_lee_ring,
)
from fusionring.charp import DimHom, canonical_dim_hom
from fusionring.green import green_ring
from fusionring.ringfile import RingFileError, parse_ring_file, write_ring_file
from fusionring.verlinde import verlinde_ring

__all__ = ["run", "main"]


class CliInputError(Exception):
    pass


def _load_ring_file(path: str, *, require_valid: bool = True):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise CliInputError(f"{path} is not UTF-8 text: {exc}") from exc
    try:
        return parse_ring_file(text, require_valid=require_valid)
    except RingFileError as exc:
        raise CliInputError(f"{path}: {exc}") from exc


def _resolve_ring(ring_path, p):
    """Ring from --ring FILE or -p PRIME (the builtin Verlinde ring)."""
    if ring_path is not None and p is not None:
        raise CliInputError("give either --ring or -p, not both")
    if ring_path is not None:
        parsed = _load_ring_file(ring_path)
        return parsed.ring, parsed.dim
    if p is not None:
        try:
            ring = verlinde_ring(p)
        except ValueError as exc:
            raise CliInputError(str(exc)) from exc
        return ring, None
    raise CliInputError("a ring is required: --ring FILE or -p PRIME")


def _modulus(args, ring: BasedRing) -> int:
    p = getattr(args, "modp", None)
    if p is None:
        p = ring.prime
    if p is None:
        raise CliInputError("no modulus available: pass --modp or use a ring with a prime")
    return p


def _dim_hom_for(ring: BasedRing, file_dim, p: int) -> DimHom:
    if file_dim is not None:
        if file_dim.p != p:
            raise CliInputError(f"file dim records are mod {file_dim.p}, expected mod {p}")
        return file_dim
    try:
        return canonical_dim_hom(ring, p)
    except ValueError as exc:
        raise CliInputError(f"{exc}; add dim records to the ring file") from exc


def _parse_element(ring: BasedRing, text: str) -> RingElement:
    """Element expressions: terms like ``L3`` or ``2*L3`` joined by + or -,
    with unary minus allowed (so pretty-printed elements parse back)."""
    toks = text.replace("+", " + ").replace("-", " - ").split()
    coeffs = [0] * ring.n
    sign = 1
    expect_term = True
    seen_term = False
    for tok in toks:
        if tok in ("+", "-"):
            if expect_term:
                if tok == "-":
                    sign = -sign
                continue
            sign = 1 if tok == "+" else -1
            expect_term = True
            continue
        if not expect_term:
            raise CliInputError(f"bad element expression {text!r}")
        if "*" in tok:
            coef_s, _, lab = tok.partition("*")
            try:
                coef = int(coef_s)
            except ValueError:
                raise CliInputError(f"bad coefficient {coef_s!r} in {text!r}") from None
        else:
            coef, lab = 1, tok
        try:
            idx = ring.index(lab)
        except KeyError as exc:
            raise CliInputError(str(exc)) from exc
        coeffs[idx] += sign * coef
        sign = 1
        expect_term = False
        seen_term = True
    if expect_term or not seen_term:
        raise CliInputError(f"bad element expression {text!r}")
    return RingElement(ring, tuple(coeffs))


def _render_table(headers, rows, fmt: str) -> str:
    if fmt == "tsv":
        lines = ["\t".join(headers)]
        lines.extend("\t".join(row) for row in rows)
        return "\n".join(lines) + "\n"
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt_row(cells):
        return "  ".join(cell.ljust(w) for cell, w in zip(cells, widths)).rstrip()
    lines = [fmt_row(headers)]
    lines.extend(fmt_row(row) for row in rows)
    return "\n".join(lines) + "\n"


def _fusion_table(ring: BasedRing, fmt: str) -> str:
    headers = ["*"] + list(ring.labels)
    rows = []
    for i in range(ring.n):
        row = [ring.labels[i]]
        for j in range(ring.n):
            row.append(multiply(ring, ring.basis_element(i), ring.basis_element(j)).pretty())
        rows.append(row)
    return _render_table(headers, rows, fmt)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ring_file_with_dims(ring: BasedRing) -> str:
    dim = None
    if ring.prime is not None and ring.dims is not None:
        dim = canonical_dim_hom(ring, ring.prime)
    return write_ring_file(ring, dim)


def _cmd_generator(args, ring: BasedRing) -> int:
    if args.table:
        _emit(_fusion_table(ring, args.format), args.output)
    else:
        _emit(_ring_file_with_dims(ring), args.output)
    return 0


def _cmd_check(args) -> int:
    if args.ring is not None and args.p is not None:
        raise CliInputError("give either --ring or -p, not both")
    if args.ring is not None:
        parsed = _load_ring_file(args.ring, require_valid=False)
        ring = parsed.ring
    else:
        ring, _ = _resolve_ring(None, args.p)
    violations = validate(ring)
    if not violations:
        print(f"ok: {ring.name} satisfies all checked axioms (basis size {ring.n})")
        return 0
    for v in violations:
        print(f"violation: {v}")
    return 1


def _cmd_mult(args) -> int:
    ring, _ = _resolve_ring(args.ring, args.p)
    x = _parse_element(ring, args.x)
    y = _parse_element(ring, args.y)
    print(multiply(ring, x, y).pretty())
    return 0


def _cmd_power(args) -> int:
    ring, _ = _resolve_ring(args.ring, args.p)
    x = _parse_element(ring, args.x)
    if args.n < 0:
        raise CliInputError("exponent must be non-negative")
    print(power(ring, x, args.n).pretty())
    return 0


def _cmd_fpdim(args) -> int:
    ring, _ = _resolve_ring(args.ring, args.p)
    dims = numerics.fp_dims(ring)
    rows = [[lab, f"{v:.10f}"] for lab, v in zip(ring.labels, dims.values)]
    rows.append(["FPdim(C)", f"{numerics.fp_dim_category(ring, dims):.10f}"])
    sys.stdout.write(_render_table(["element", "FPdim"], rows, args.format))
    return 0


def _cmd_gdim(args) -> int:
    ring, file_dim = _resolve_ring(args.ring, args.p)
    p = _modulus(args, ring)
    d = _dim_hom_for(ring, file_dim, p)
    print(f"global dimension of {ring.name} mod {p} = {charp.global_dimension(ring, d)}")
    return 0


def _cmd_trace_form(args) -> int:
    ring, file_dim = _resolve_ring(args.ring, args.p)
    p = _modulus(args, ring)
    gram = charp.trace_form_gram(ring, p)
    rows = [
        [lab] + [str(v) for v in row]
        for lab, row in zip(ring.labels, gram.entries)
    ]
    sys.stdout.write(_render_table(["Tr"] + list(ring.labels), rows, args.format))
    semis = charp.is_semisimple_mod_p(ring, p)
    print(f"semisimple mod {p}: {'true' if semis else 'false'}")
    # Semisimplicity implies nonzero global dimension; the converse is an
    # expectation worth surfacing, never asserted.
    try:
        d = _dim_hom_for(ring, file_dim, p)
    except CliInputError:
        d = None
    if d is not None:
        g = charp.global_dimension(ring, d)
        print(
            f"observation: global dimension mod {p} = {g} "
            "(nonzero is implied by semisimplicity; the converse is only expected)"
        )
    return 0


def _cmd_pthpow(args) -> int:
    ring, _ = _resolve_ring(args.ring, args.p)
    p = _modulus(args, ring)
    x = _parse_element(ring, args.x)
    print(charp.pth_power(ring, x, p).pretty())
    return 0


def _box_term(src_label: str, ver_label: str, mult: int) -> str:
    body = f"{src_label} ⊠ {ver_label}"
    return body if mult == 1 else f"{mult}*({body})"


def _cmd_frobenius(args) -> int:
    p = args.p
    if args.ring is not None:
        parsed = _load_ring_file(args.ring)
        ring, file_dim = parsed.ring, parsed.dim
    else:
        ring, file_dim = _resolve_ring(None, p)
    try:
        i = ring.index(args.element)
    except KeyError as exc:
        raise CliInputError(str(exc)) from exc
    verl = verlinde_ring(p)
    try:
        cands = charp.frobenius_candidates(ring, file_dim, i, p, fp_tol=args.tol)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    print(f"candidates for {ring.labels[i]}: {len(cands)}")
    for m in cands:
        terms = []
        for j, row in enumerate(m):
            for t, v in enumerate(row):
                if v:
                    terms.append(_box_term(ring.labels[j], verl.labels[t], v))
        print("  " + " + ".join(terms) if terms else "  0")
    return 0


def _cmd_frobtype(args) -> int:
    p = args.p
    if args.ring is None:
        table = charp.verlinde_frobenius_table(p)
        kind = charp.frobenius_type(table, p)
        print(f"Frobenius type of verlinde_{p}: {kind}")
        return 0
    parsed = _load_ring_file(args.ring)
    ring, file_dim = parsed.ring, parsed.dim
    rows = []
    for i in range(ring.n):
        cands = charp.frobenius_candidates(ring, file_dim, i, p, fp_tol=args.tol)
        if not cands:
            print(f"no Frobenius candidate for {ring.labels[i]}; type undetermined")
            return 1
        merged = [[0] * (p - 1) for _ in range(ring.n)]
        for m in cands:
            for j in range(ring.n):
                for t in range(p - 1):
                    merged[j][t] += m[j][t]
        rows.append(tuple(tuple(r) for r in merged))
    table = charp.FrobeniusTable(p, tuple(rows))
    kind = charp.frobenius_type(table, p)
    print(f"Frobenius type of {ring.name}: {kind}")
    return 0


def _cmd_subrings(args) -> int:
    ring, _ = _resolve_ring(args.ring, args.p)
    subs = structure.enumerate_subrings(ring)
    print(f"subrings of {ring.name}: {len(subs)}")
    for s in subs:
        print(f"  {{{', '.join(s.labels(ring))}}}")
    return 0


def _cmd_grading(args) -> int:
    ring, _ = _resolve_ring(args.ring, args.p)
    try:
        table, gm = structure.universal_grading(ring)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    print(f"universal grading of {ring.name}: group of order {len(table)}")
    for c, members in enumerate(gm.classes):
        tag = " (neutral)" if c == 0 else ""
        print(f"  class {c}{tag}: {' '.join(ring.labels[i] for i in members)}")
    return 0


def _cmd_grim(args) -> int:
    ring, file_dim = _resolve_ring(args.ring, args.p)
    p = _modulus(args, ring)
    d = _dim_hom_for(ring, file_dim, p)
    try:
        _, gm = structure.universal_grading(ring)
    except ValueError as exc:
        raise CliInputError(str(exc)) from exc
    ok, report = structure.graded_dimension_identity(ring, d, gm, p)
    print(f"dim(C) mod {p} = {report.lhs}")
    print(f"|G| = {report.group_order}")
    print(f"dim(C_1) mod {p} = {report.neutral_dimension}")
    print(f"|G| * dim(C_1) mod {p} = {report.rhs}")
    for c, vec in enumerate(report.class_sums):
        pretty = RingElement(ring, vec).pretty()
        print(f"  D[{c}] = {pretty}")
    print(f"identity holds: {'true' if ok else 'false'}")
    return 0 if ok else 1


def _resolve_second_ring(args):
    return _resolve_ring(args.ring2, args.p2)


def _cmd_iso(args) -> int:
    a, _ = _resolve_ring(args.ring, args.p)
    b, _ = _resolve_second_ring(args)
    sigma = structure.find_isomorphism(a, b)
    if sigma is None:
        print(f"no based-ring isomorphism {a.name} -> {b.name}")
        return 1
    print(f"isomorphism {a.name} -> {b.name}:")
    for i, j in enumerate(sigma):
        print(f"  {a.labels[i]} -> {b.labels[j]}")
    return 0


def _cmd_boxprod(args) -> int:
    a, _ = _resolve_ring(args.ring, args.p)
    b, _ = _resolve_second_ring(args)
    box = box_product(a, b)
    if args.table:
        _emit(_fusion_table(box, args.format), args.output)
    else:
        _emit(write_ring_file(box), args.output)
    return 0


def _cmd_homs(args) -> int:
    src, _ = _resolve_ring(args.ring, args.p)
    tgt, _ = _resolve_second_ring(args)
    homs = structure.find_based_homs(src, tgt, fp_tol=args.tol)
    print(f"based homomorphisms {src.name} -> {tgt.name}: {len(homs)}")
    for hom in homs:
        parts = [
            f"{lab} -> {RingElement(tgt, vec).pretty()}"
            for lab, vec in zip(src.labels, hom)
        ]
        print("  " + "; ".join(parts))
    return 0


def _add_ring_args(sp, *, second: bool = False) -> None:
    sp.add_argument("--ring", help="ring file")
    sp.add_argument("-p", type=int, help="builtin Verlinde ring prime")
    if second:
        sp.add_argument("--ring2", help="second ring file")
        sp.add_argument("--p2", type=int, help="second builtin Verlinde ring prime")


def _add_format(sp) -> None:
    sp.add_argument("--format", choices=["table", "tsv"], default="table")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionring",
        description="Exact-arithmetic workbench for based rings of symmetric fusion categories",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for cmd, help_text in (
        ("green", "Green ring of C_p from the Jordan-type oracle"),
        ("verlinde", "universal Verlinde ring Ver_p"),
    ):
        sp = sub.add_parser(cmd, help=help_text)
        sp.add_argument("-p", type=int, required=True)
        sp.add_argument("--table", action="store_true", help="print the fusion table")
        sp.add_argument("-o", "--output", help="write to file instead of stdout")
        _add_format(sp)

    sp = sub.add_parser("groupring", help="group ring of Z/n")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--table", action="store_true")
    sp.add_argument("-o", "--output")
    _add_format(sp)

    sp = sub.add_parser("yanglee", help="the Fibonacci ring {1, X}, X*X = 1 + X")
    sp.add_argument("--table", action="store_true")
    sp.add_argument("-o", "--output")
    _add_format(sp)

    sp = sub.add_parser("check", help="validate the based-ring axioms")
    _add_ring_args(sp)

    sp = sub.add_parser("mult", help="multiply two elements")
    _add_ring_args(sp)
    sp.add_argument("-x", required=True)
    sp.add_argument("-y", required=True)

    sp = sub.add_parser("power", help="raise an element to a power")
    _add_ring_args(sp)
    sp.add_argument("-x", required=True)
    sp.add_argument("-n", type=int, required=True)

    sp = sub.add_parser("fpdim", help="Frobenius-Perron dimensions")
    _add_ring_args(sp)
    _add_format(sp)

    sp = sub.add_parser("gdim", help="global dimension mod p")
    _add_ring_args(sp)
    sp.add_argument("--modp", type=int)

    sp = sub.add_parser("trace-form", help="trace-form Gram matrix and semisimplicity")
    _add_ring_args(sp)
    sp.add_argument("--modp", type=int)
    _add_format(sp)

    sp = sub.add_parser("pthpow", help="p-th power Frobenius of an element")
    _add_ring_args(sp)
    sp.add_argument("-x", required=True)
    sp.add_argument("--modp", type=int)

    sp = sub.add_parser("frobenius", help="Frobenius image candidates in K(C^(1)) ⊠ K(Ver_p)")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--ring", help="source ring file (default: Ver_p itself)")
    sp.add_argument("--element", required=True, help="basis label")
    sp.add_argument("--tol", type=float, default=charp.DEFAULT_FP_TOL)

    sp = sub.add_parser("frobtype", help="Frobenius type (Vec, sVec, Ver_p^+ or Ver_p)")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--ring", help="source ring file (default: Ver_p itself)")
    sp.add_argument("--tol", type=float, default=charp.DEFAULT_FP_TOL)

    sp = sub.add_parser("subrings", help="enumerate all based subrings")
    _add_ring_args(sp)

    sp = sub.add_parser("grading", help="universal grading")
    _add_ring_args(sp)

    sp = sub.add_parser("grim", help="graded dimension identity dim(C) = |G| dim(C_1)")
    _add_ring_args(sp)
    sp.add_argument("--modp", type=int)

    sp = sub.add_parser("iso", help="find a based-ring isomorphism")
    _add_ring_args(sp, second=True)

    sp = sub.add_parser("boxprod", help="external (box) product of two rings")
    _add_ring_args(sp, second=True)
    sp.add_argument("--table", action="store_true")
    sp.add_argument("-o", "--output")
    _add_format(sp)

    sp = sub.add_parser("homs", help="find based homomorphisms")
    _add_ring_args(sp, second=True)
    sp.add_argument("--tol", type=float, default=structure.FP_PRUNE_TOL)

    return parser


_DISPATCH = {
    "check": _cmd_check,
    "mult": _cmd_mult,
    "power": _cmd_power,
    "fpdim": _cmd_fpdim,
    "gdim": _cmd_gdim,
    "trace-form": _cmd_trace_form,
    "pthpow": _cmd_pthpow,
    "frobenius": _cmd_frobenius,
    "frobtype": _cmd_frobtype,
    "subrings": _cmd_subrings,
    "grading": _cmd_grading,
    "grim": _cmd_grim,
    "iso": _cmd_iso,
    "boxprod": _cmd_boxprod,
    "homs": _cmd_homs,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        cmd = args.command
        if cmd in ("green", "verlinde"):
            try:
                ring = green_ring(args.p) if cmd == "green" else verlinde_ring(args.p)
            except ValueError as exc:
                raise CliInputError(str(exc)) from exc
            return _cmd_generator(args, ring)
        if cmd == "groupring":
            try:
                ring = group_ring(args.n)
            except ValueError as exc:
                raise CliInputError(str(exc)) from exc
            return _cmd_generator(args, ring)
        if cmd == "yanglee":
            return _cmd_generator(args, yang_lee_ring())
        return _DISPATCH[cmd](args)
    except (CliInputError, ValueError) as exc:
        # ValueError from the library layer means bad user input here
        # (non-prime modulus, mismatched bases, out-of-range indices)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
