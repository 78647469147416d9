"""ringfile module: exact round trips and parse errors."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import shipped_rings
from fusionring.based import box_product, group_ring, permute, yang_lee_ring
from fusionring.charp import canonical_dim_hom, dim_hom
from fusionring.green import green_ring
from fusionring.ringfile import RingFileError, parse_ring_file, write_ring_file
from fusionring.verlinde import plus_subring, svec_subring, verlinde_ring

VER3_TEXT = """\
# the two-object ring with an order-two generator
ring verlinde_3
prime 3
basis L1 L2
unit L1

commutative true
N L1 L1 L1 1
N L1 L2 L2 1
N L2 L1 L2 1
N L2 L2 L1 1
"""


def test_parse_ver3_text():
    parsed = parse_ring_file(VER3_TEXT)
    assert parsed.ring == verlinde_ring(3)
    assert parsed.dim is None


def test_round_trip_all_shipped_rings():
    for ring in shipped_rings():
        text = write_ring_file(ring)
        assert parse_ring_file(text).ring == ring, ring.name


def test_round_trip_box_product():
    box = box_product(plus_subring(7), svec_subring(7))
    assert parse_ring_file(write_ring_file(box)).ring == box


def test_round_trip_with_dim_hom():
    v7 = verlinde_ring(7)
    d = canonical_dim_hom(v7, 7)
    text = write_ring_file(v7, d)
    parsed = parse_ring_file(text)
    assert parsed.ring == v7
    assert parsed.dim == d


def test_round_trip_is_fixed_point():
    for ring in (green_ring(5), verlinde_ring(7), yang_lee_ring(), group_ring(4)):
        text = write_ring_file(ring)
        again = write_ring_file(parse_ring_file(text).ring)
        assert text == again


def test_green_fusion_flag_round_trips():
    g = green_ring(5)
    text = write_ring_file(g)
    assert "fusion false" in text
    assert parse_ring_file(text).ring.fusion is False


def test_missing_unit():
    with pytest.raises(RingFileError, match="missing unit"):
        parse_ring_file("basis a b\nN a a a 1\n")


def test_missing_basis():
    with pytest.raises(RingFileError, match="missing basis"):
        parse_ring_file("unit a\n")


def test_negative_structure_constant():
    text = VER3_TEXT.replace("N L2 L2 L1 1", "N L2 L2 L1 -1")
    with pytest.raises(RingFileError, match="negative structure constant"):
        parse_ring_file(text)


def test_duplicate_labels():
    with pytest.raises(RingFileError, match="duplicate labels"):
        parse_ring_file("basis a a\nunit a\n")


def test_unknown_record_and_label():
    with pytest.raises(RingFileError, match="unknown record"):
        parse_ring_file("basis a\nunit a\nfrobnicate 3\n")
    with pytest.raises(RingFileError, match="unknown basis label"):
        parse_ring_file("basis a\nunit b\n")


def test_duplicate_structure_constant_line():
    text = VER3_TEXT + "N L2 L2 L1 1\n"
    with pytest.raises(RingFileError, match="duplicate structure constant"):
        parse_ring_file(text)


def test_error_carries_line_number():
    text = "basis a\nunit a\nN a a a one\n"
    with pytest.raises(RingFileError) as info:
        parse_ring_file(text)
    assert info.value.line == 3
    assert "line 3" in str(info.value)


def test_axiom_violation_rejected_at_parse():
    text = VER3_TEXT.replace("N L2 L2 L1 1", "N L2 L2 L2 1")
    with pytest.raises(RingFileError, match="axiom violation"):
        parse_ring_file(text)
    parsed = parse_ring_file(text, require_valid=False)
    assert parsed.ring.constants[1][1][1] == 1


def test_dim_records():
    text = VER3_TEXT + "dim L1 1\ndim L2 2\n"
    parsed = parse_ring_file(text)
    assert parsed.dim == dim_hom(parsed.ring, [1, 2], 3)


def test_dim_requires_prime():
    text = "basis a\nunit a\nN a a a 1\ndim a 1\n"
    with pytest.raises(RingFileError, match="prime"):
        parse_ring_file(text)


def test_dim_rejects_non_multiplicative():
    # L2*L2 = L1 forces dim(L2)^2 = 1, so 0 is not multiplicative
    text = VER3_TEXT + "dim L1 1\ndim L2 0\n"
    with pytest.raises(RingFileError, match="bad dimension homomorphism"):
        parse_ring_file(text)


def test_dim_missing_entry():
    text = VER3_TEXT + "dim L1 1\n"
    with pytest.raises(RingFileError, match="missing dim records"):
        parse_ring_file(text)


def test_dim_out_of_range():
    text = VER3_TEXT + "dim L1 1\ndim L2 5\n"
    with pytest.raises(RingFileError, match="not in"):
        parse_ring_file(text)


def test_dual_conflict():
    text = "basis a b c\nunit a\ndual b c\ndual b b\n"
    with pytest.raises(RingFileError, match="conflicting dual"):
        parse_ring_file(text)


def test_comments_and_blank_lines_ignored():
    text = "\n# leading comment\nbasis a   # trailing comment\nunit a\nN a a a 1\n\n"
    assert parse_ring_file(text).ring.labels == ("a",)


def test_write_requires_matching_dim():
    v5 = verlinde_ring(5)
    d3 = canonical_dim_hom(verlinde_ring(3), 3)
    with pytest.raises(ValueError):
        write_ring_file(v5, d3)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 9), data=st.data())
def test_round_trip_permuted_group_rings(n, data):
    # group rings have nontrivial duality, so permuted copies exercise
    # the dual records and arbitrary basis orders
    sigma = data.draw(st.permutations(range(n)))
    ring = permute(group_ring(n), tuple(sigma))
    assert parse_ring_file(write_ring_file(ring)).ring == ring
