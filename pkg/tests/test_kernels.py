"""Kernel backends against an independent oracle and against each other."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF
from sympy.polys.matrices import DomainMatrix

from fusionring.kernels import _purepy

try:
    from fusionring.kernels import _modpcore
except ImportError:  # pure-python build
    _modpcore = None

PRIMES = (2, 3, 5, 7, 13)

BACKENDS = [_purepy] if _modpcore is None else [_purepy, _modpcore]


def sympy_rank(rows, p):
    if not rows:
        return 0
    dm = DomainMatrix.from_list([[int(x) % p for x in row] for row in rows], GF(p))
    return dm.rank()


def int_matmul(a, b, p):
    n = len(b[0])
    return [
        [sum(row[k] * b[k][j] for k in range(len(b))) % p for j in range(n)]
        for row in a
    ]


@st.composite
def matrix_and_prime(draw, square=False, max_dim=7):
    p = draw(st.sampled_from(PRIMES))
    m = draw(st.integers(1, max_dim))
    n = m if square else draw(st.integers(1, max_dim))
    rows = [
        [draw(st.integers(-2 * p, 2 * p)) for _ in range(n)] for _ in range(m)
    ]
    return rows, p


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=120, deadline=None)
@given(data=matrix_and_prime())
def test_rank_matches_sympy(impl, data):
    rows, p = data
    assert impl.rank_mod_p(rows, p) == sympy_rank(rows, p)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=80, deadline=None)
@given(data=matrix_and_prime(square=True, max_dim=6))
def test_matmul_matches_exact(impl, data):
    rows, p = data
    assert impl.matmul_mod_p(rows, rows, p) == int_matmul(rows, rows, p)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
@settings(max_examples=60, deadline=None)
@given(data=matrix_and_prime(square=True, max_dim=6))
def test_profile_matches_iterated_ranks(impl, data):
    rows, p = data
    n = len(rows)
    max_power = n + 1
    profile = impl.nilpotent_rank_profile(rows, p, max_power)
    assert profile[0] == n
    power = [[x % p for x in row] for row in rows]
    expect = [n]
    for _ in range(max_power):
        r = sympy_rank(power, p)
        expect.append(r)
        power = int_matmul(power, rows, p)
    # the kernel zero-fills after the first zero rank; ranks of a
    # nilpotent drop to zero and stay there, but arbitrary matrices may
    # not, so only compare up to the first zero
    for got, want in zip(profile, expect):
        assert got == want
        if want == 0:
            break


@pytest.mark.skipif(_modpcore is None, reason="compiled kernels not built")
@settings(max_examples=120, deadline=None)
@given(data=matrix_and_prime())
def test_backends_agree_on_rank(data):
    rows, p = data
    assert _purepy.rank_mod_p(rows, p) == _modpcore.rank_mod_p(rows, p)


@pytest.mark.skipif(_modpcore is None, reason="compiled kernels not built")
@settings(max_examples=60, deadline=None)
@given(data=matrix_and_prime(square=True, max_dim=6))
def test_backends_agree_on_profile(data):
    rows, p = data
    assert _purepy.nilpotent_rank_profile(rows, p, len(rows) + 1) == \
        _modpcore.nilpotent_rank_profile(rows, p, len(rows) + 1)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def test_bad_modulus_rejected(impl):
    with pytest.raises(ValueError):
        impl.rank_mod_p([[1]], 1)
    with pytest.raises(ValueError):
        impl.rank_mod_p([[1]], 2.5)


def test_profile_zero_fill():
    # the 2x2 nilpotent block: ranks 2, 1, 0, 0, ...
    a = [[0, 1], [0, 0]]
    for impl in BACKENDS:
        assert impl.nilpotent_rank_profile(a, 5, 4) == [2, 1, 0, 0, 0]
