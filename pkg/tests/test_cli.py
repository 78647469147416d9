"""cli module: subcommands, exit codes, determinism."""

from __future__ import annotations

from fusionring.cli import run
from fusionring.green import green_ring
from fusionring.ringfile import parse_ring_file, write_ring_file
from fusionring.verlinde import verlinde_ring


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


VER3_GOLDEN = """\
ring verlinde_3
prime 3
basis L1 L2
unit L1
dim L1 1
dim L2 2
commutative true
N L1 L1 L1 1
N L1 L2 L2 1
N L2 L1 L2 1
N L2 L2 L1 1
"""


def test_verlinde_3_golden_bytes(capsys):
    code, out, _ = invoke(capsys, "verlinde", "-p", "3")
    assert code == 0
    assert out == VER3_GOLDEN


def test_verlinde_table(capsys):
    code, out, _ = invoke(capsys, "verlinde", "-p", "5", "--table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["*", "L1", "L2", "L3", "L4"]
    assert "L1 + L3" in out
    assert "L2 + L4" in out


def test_generators_emit_parseable_files(capsys):
    for argv in (["green", "-p", "7"], ["verlinde", "-p", "7"], ["groupring", "-n", "4"], ["yanglee"]):
        code, out, _ = invoke(capsys, *argv)
        assert code == 0
        parsed = parse_ring_file(out)
        assert parsed.ring.n >= 1


def test_generator_output_to_file(capsys, tmp_path):
    target = tmp_path / "v5.fr"
    code, out, _ = invoke(capsys, "verlinde", "-p", "5", "-o", str(target))
    assert code == 0 and out == ""
    assert parse_ring_file(target.read_text()).ring == verlinde_ring(5)


def test_check_builtin_files_clean(capsys, tmp_path):
    for name, argv in (
        ("g5", ["green", "-p", "5"]),
        ("v7", ["verlinde", "-p", "7"]),
        ("z4", ["groupring", "-n", "4"]),
        ("yl", ["yanglee"]),
    ):
        path = tmp_path / f"{name}.fr"
        assert invoke(capsys, *argv, "-o", str(path))[0] == 0
        code, out, _ = invoke(capsys, "check", "--ring", str(path))
        assert code == 0, out
        assert out.startswith("ok:")


def test_check_corrupted_associativity_exits_one(capsys, tmp_path):
    bad_ring = green_ring(3).with_constant(1, 1, 0, 2)
    path = tmp_path / "bad.fr"
    path.write_text(write_ring_file(bad_ring))
    code, out, _ = invoke(capsys, "check", "--ring", str(path))
    assert code == 1
    assert "associativity" in out


def test_check_syntax_error_exits_two(capsys, tmp_path):
    path = tmp_path / "junk.fr"
    path.write_text("basis a\nunit a\nN a a a one\n")
    code, _, err = invoke(capsys, "check", "--ring", str(path))
    assert code == 2
    assert "error:" in err


def test_check_missing_file_exits_two(capsys, tmp_path):
    code, _, err = invoke(capsys, "check", "--ring", str(tmp_path / "nope.fr"))
    assert code == 2
    assert "error:" in err


def test_unknown_subcommand_and_flag_exit_two(capsys):
    assert invoke(capsys, "frobnicate")[0] == 2
    assert invoke(capsys, "verlinde", "-p", "5", "--bogus")[0] == 2
    assert invoke(capsys, "check")[0] == 2  # no ring given


def test_mult_and_power(capsys):
    code, out, _ = invoke(capsys, "mult", "-p", "5", "-x", "L3", "-y", "L3")
    assert code == 0 and out.strip() == "L1 + L3"
    code, out, _ = invoke(capsys, "power", "-p", "5", "-x", "L2 + L3", "-n", "2")
    assert code == 0
    code, out, _ = invoke(capsys, "power", "-p", "5", "-x", "L2", "-n", "0")
    assert out.strip() == "L1"


def test_bad_element_expression(capsys):
    code, _, err = invoke(capsys, "mult", "-p", "5", "-x", "L9", "-y", "L2")
    assert code == 2 and "error:" in err
    code, _, err = invoke(capsys, "mult", "-p", "5", "-x", "+", "-y", "L2")
    assert code == 2
    code, _, err = invoke(capsys, "mult", "-p", "5", "-x", "L2 L3", "-y", "L2")
    assert code == 2


def test_unary_minus_and_pretty_round_trip(capsys):
    # a leading space keeps argparse from reading the value as a flag
    code, out, _ = invoke(capsys, "mult", "-p", "5", "-x", " -L2", "-y", "L2")
    assert code == 0 and out.strip() == "-L1 - L3"
    # pretty output parses back to the same element
    code, out2, _ = invoke(capsys, "mult", "-p", "5", "-x", " " + out.strip(), "-y", "L1")
    assert code == 0 and out2 == out


def test_fpdim_output(capsys):
    code, out, _ = invoke(capsys, "fpdim", "-p", "5", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "element\tFPdim"
    assert lines[2] == "L2\t1.6180339887"
    assert lines[-1].startswith("FPdim(C)\t")


def test_gdim_and_pthpow(capsys):
    code, out, _ = invoke(capsys, "gdim", "-p", "3")
    assert code == 0 and out.strip().endswith("= 2")
    code, out, _ = invoke(capsys, "gdim", "-p", "7")
    assert code == 0 and out.strip().endswith("= 0")
    code, out, _ = invoke(capsys, "pthpow", "-p", "7", "-x", "L2")
    assert code == 0 and out.strip() == "5*L6"


def test_trace_form(capsys):
    code, out, _ = invoke(capsys, "trace-form", "-p", "3", "--format", "tsv")
    assert code == 0
    assert "semisimple mod 3: true" in out
    assert "observation: global dimension mod 3 = 2" in out
    code, out, _ = invoke(capsys, "trace-form", "-p", "5")
    assert "semisimple mod 5: false" in out
    assert "observation: global dimension mod 5 = 0" in out


def test_frobenius_yang_lee(capsys, tmp_path):
    path = tmp_path / "yl.fr"
    invoke(capsys, "yanglee", "-o", str(path))
    code, out, _ = invoke(capsys, "frobenius", "-p", "5", "--ring", str(path), "--element", "X")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "candidates for X: 1"
    assert lines[1].strip() == "1 ⊠ L3"


def test_frobenius_builtin_verlinde(capsys):
    code, out, _ = invoke(capsys, "frobenius", "-p", "5", "--element", "L2")
    assert code == 0
    assert out.splitlines()[1].strip() == "L4 ⊠ L3"


def test_frobtype(capsys, tmp_path):
    code, out, _ = invoke(capsys, "frobtype", "-p", "7")
    assert code == 0
    assert out.strip() == "Frobenius type of verlinde_7: Ver_p^+"
    path = tmp_path / "yl.fr"
    invoke(capsys, "yanglee", "-o", str(path))
    code, out, _ = invoke(capsys, "frobtype", "-p", "5", "--ring", str(path))
    assert code == 0
    assert out.strip() == "Frobenius type of yanglee: Ver_p^+"


def test_subrings(capsys, tmp_path):
    path = tmp_path / "v7.fr"
    invoke(capsys, "verlinde", "-p", "7", "-o", str(path))
    code, out, _ = invoke(capsys, "subrings", "--ring", str(path))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "subrings of verlinde_7: 4"
    assert lines[1:] == ["  {L1}", "  {L1, L6}", "  {L1, L3, L5}", "  {L1, L2, L3, L4, L5, L6}"]


def test_grading_and_grim(capsys):
    code, out, _ = invoke(capsys, "grading", "-p", "5")
    assert code == 0
    assert "group of order 2" in out
    code, out, _ = invoke(capsys, "grim", "-p", "5")
    assert code == 0
    assert "identity holds: true" in out


def test_iso_found_and_absent(capsys, tmp_path):
    plus = tmp_path / "plus7.fr"
    svec = tmp_path / "svec7.fr"
    from fusionring.verlinde import plus_subring, svec_subring
    plus.write_text(write_ring_file(plus_subring(7)))
    svec.write_text(write_ring_file(svec_subring(7)))
    box = tmp_path / "box.fr"
    code, _, _ = invoke(capsys, "boxprod", "--ring", str(plus), "--ring2", str(svec), "-o", str(box))
    assert code == 0
    code, out, _ = invoke(capsys, "iso", "-p", "7", "--ring2", str(box))
    assert code == 0
    assert out.splitlines()[0].startswith("isomorphism")
    z4 = tmp_path / "z4.fr"
    invoke(capsys, "groupring", "-n", "4", "-o", str(z4))
    code, out, _ = invoke(capsys, "iso", "-p", "5", "--ring2", str(z4))
    assert code == 1
    assert out.startswith("no based-ring isomorphism")


def test_homs(capsys, tmp_path):
    yl = tmp_path / "yl.fr"
    invoke(capsys, "yanglee", "-o", str(yl))
    code, out, _ = invoke(capsys, "homs", "--ring", str(yl), "--p2", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "based homomorphisms yanglee -> verlinde_5: 1"
    assert lines[1] == "  1 -> L1; X -> L3"
    code, out, _ = invoke(capsys, "homs", "--ring", str(yl), "--p2", "7")
    assert code == 0
    assert out.splitlines()[0].endswith(": 0")


def test_boxprod_table(capsys):
    code, out, _ = invoke(capsys, "boxprod", "-p", "3", "--p2", "3", "--table")
    assert code == 0
    assert "L2⊠L2" in out


def test_byte_identical_reruns(capsys, tmp_path):
    yl = tmp_path / "yl.fr"
    invoke(capsys, "yanglee", "-o", str(yl))
    commands = [
        ["verlinde", "-p", "7", "--table"],
        ["green", "-p", "5"],
        ["fpdim", "-p", "7"],
        ["subrings", "-p", "11"],
        ["frobenius", "-p", "5", "--ring", str(yl), "--element", "X"],
        ["homs", "--ring", str(yl), "--p2", "5"],
    ]
    for argv in commands:
        first = invoke(capsys, *argv)
        second = invoke(capsys, *argv)
        assert first == second, argv


def test_non_prime_modulus_is_input_error(capsys):
    code, _, err = invoke(capsys, "trace-form", "-p", "5", "--modp", "4")
    assert code == 2 and "not prime" in err
    code, _, err = invoke(capsys, "pthpow", "-p", "5", "-x", "L2", "--modp", "6")
    assert code == 2 and "not prime" in err
    code, _, err = invoke(capsys, "verlinde", "-p", "9")
    assert code == 2 and "not prime" in err


def test_gdim_without_modulus_errors(capsys, tmp_path):
    z4 = tmp_path / "z4.fr"
    invoke(capsys, "groupring", "-n", "4", "-o", str(z4))
    code, _, err = invoke(capsys, "gdim", "--ring", str(z4))
    assert code == 2
    assert "modp" in err or "modulus" in err


def test_help_exits_zero(capsys):
    assert invoke(capsys, "--help")[0] == 0
