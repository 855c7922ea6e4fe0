import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from monadcert import base_tables as bt
from monadcert.engine import PullbackParams, h_pullback
from monadcert.hilbert import ci_hilbert
from monadcert.oracle import (
    QQ,
    CommonZeroError,
    PolyParseError,
    PrimeField,
    build_monad,
    equivariance_check,
    fspec_default,
    fspec_from_text,
    fspec_random,
    fspec_validate,
    macaulay_s_p,
    monad_check,
    oracle_h0_E,
    oracle_h0_EndE,
    oracle_h1_E,
    parse_field,
    parse_polynomial,
    parse_polynomials,
    tensor_square,
    variables,
)
from monadcert.oracle.linalg import SparseMatrix, rank, rank_mod_p, rank_rational
from monadcert.oracle.monad import composition, matmul, monad_from_forms, monomials

GF = PrimeField(32003)
GENERIC = bt.alpha_validate(bt.GENERIC_ALPHA)
SPECIAL = bt.alpha_validate(bt.SPECIAL_ALPHA)
a, b, c, d = variables()


# fields -------------------------------------------------------------------

def test_fields():
    assert GF.reduce(Fraction(1, 2)) * 2 % 32003 == 1
    assert GF.reduce(-1) == 32002
    assert parse_field("rational") == QQ
    assert parse_field("prime:7") == PrimeField(7)
    for bad in ("prime:2", "prime:9", "reals"):
        with pytest.raises(ValueError):
            parse_field(bad)


# polynomials and parser ---------------------------------------------------

def test_monomial_order_is_grlex():
    assert monomials(1) == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert monomials(2)[:3] == ((2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0))
    assert len(monomials(5)) == 56


def test_parse_roundtrip():
    p = parse_polynomial("3*a^2*b - (c + d)^2 + -2*a*b*+1")
    assert p == 3 * a ** 2 * b - (c + d) ** 2 - 2 * a * b
    assert parse_polynomial(str(p)) == p
    assert parse_polynomials("# forms\na\n\nb^2 - c*d\n") == [a, b ** 2 - c * d]


@pytest.mark.parametrize("text, line, col", [
    ("a + 2a", 1, 6),
    ("a + b c", 1, 7),
    ("a * (b + c", 1, 5),
    ("a^-1", 1, 3),
    ("a + x", 1, 5),
    ("1/2*a", 1, 2),
    ("a +", 1, 4),
])
def test_parse_errors_report_position(text, line, col):
    with pytest.raises(PolyParseError) as err:
        parse_polynomials("b\n" * (line - 1) + text)
    assert (err.value.line, err.value.col) == (line, col)


def test_parse_error_on_later_line():
    with pytest.raises(PolyParseError) as err:
        parse_polynomials("a\nb\nc^3 d")
    assert err.value.line == 3 and "juxtaposition" in str(err.value)


# linear algebra -----------------------------------------------------------

def _random_sparse(rng, nrows, ncols, density, lo=-3, hi=3):
    m = SparseMatrix(nrows, ncols)
    for r in range(nrows):
        for col in range(ncols):
            if rng.random() < density:
                v = rng.randint(lo, hi)
                if v:
                    m.add(r, col, Fraction(v, rng.choice([1, 1, 2, 3])))
    return m


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 9), st.integers(1, 9), st.floats(0.1, 0.9))
def test_rank_matches_sympy(seed, nrows, ncols, density):
    rng = random.Random(seed)
    m = _random_sparse(rng, nrows, ncols, density)
    dense = [[m.rows[r].get(col, 0) for col in range(ncols)] for r in range(nrows)]
    expected = sympy.Matrix(dense).rank()
    assert rank_rational(m) == expected
    # low-rank products stay low rank over both fields
    assert rank(m, QQ) == expected


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 8), st.integers(1, 8), st.integers(0, 4))
def test_rank_mod_p_matches_sympy_on_low_rank(seed, nrows, ncols, inner):
    rng = np.random.default_rng(seed)
    x = rng.integers(-5, 6, size=(nrows, inner))
    y = rng.integers(-5, 6, size=(inner, ncols))
    prod_ = x @ y
    expected = sympy.Matrix(prod_.tolist()).rank()
    p = 32003
    assert rank_mod_p(prod_, p) == expected
    assert rank_mod_p(prod_ * 0, p) == 0


def test_rank_mod_small_prime_differs_when_it_should():
    m = np.array([[1, 2], [3, 6 + 7]])
    assert rank_mod_p(m, 7) == 1
    assert rank_mod_p(m, 32003) == 2


# Macaulay / forms --------------------------------------------------------

def test_macaulay_examples():
    f = fspec_validate((a, b, c ** 3, d ** 3))
    assert macaulay_s_p(f, 2) == 3
    assert macaulay_s_p(f, 5) == 0
    lin = fspec_validate((a, b, c, d))
    assert macaulay_s_p(lin, 0) == 1 and macaulay_s_p(lin, 1) == 0


def test_fspec_validate_rejects_common_zero_and_bad_degrees():
    with pytest.raises(CommonZeroError):
        fspec_validate((a, a, c ** 3, d ** 3))
    with pytest.raises(ValueError, match="degree mismatch"):
        fspec_validate((a, b, c ** 2, d ** 3), degrees=(1, 1, 3, 3))
    with pytest.raises(ValueError):
        fspec_validate((a, b, c ** 2 + d, d ** 3))


def test_fspec_default_examples():
    assert fspec_default(PullbackParams(0, 1, 2)).forms == (a, b, c ** 3, d ** 3)
    assert fspec_default(PullbackParams(0, 0, 1)).forms == (a, b, c, d)
    assert fspec_default(PullbackParams(-1, 3, 5)).forms == (a, b, c ** 4, d ** 4)


@pytest.mark.parametrize("triple", [(0, 0, 1), (0, 1, 2), (0, 0, 2), (0, 1, 3), (-1, 3, 5)])
@pytest.mark.parametrize("field", [QQ, GF], ids=["QQ", "GF"])
def test_macaulay_matches_ci_hilbert(triple, field):
    p = PullbackParams(*triple)
    for f in (fspec_default(p), fspec_random(p, 11, field)):
        s = ci_hilbert(p.degrees)
        assert [macaulay_s_p(f, q, field) for q in range(s.socle + 3)] == \
               [s[q] for q in range(s.socle + 3)]


def test_fspec_random_is_deterministic():
    p = PullbackParams(0, 1, 2)
    assert fspec_random(p, 3, GF).forms == fspec_random(p, 3, GF).forms
    assert fspec_random(p, 3, GF).forms != fspec_random(p, 4, GF).forms


def test_fspec_from_text():
    p = PullbackParams(0, 1, 2)
    f = fspec_from_text("a + b\nb\nc^3 - d^3\nd^3 + a*b*c", p, QQ)
    assert f.degrees == (1, 1, 3, 3)
    with pytest.raises(ValueError, match="degree mismatch"):
        fspec_from_text("a\nb\nc^2\nd^3", p, QQ)


# monad --------------------------------------------------------------------

def test_base_entry_and_composition():
    m = monad_from_forms((a, b, c, d), (0, 1, 2, 3, 4))
    assert m.B[0][0] == -d
    assert all(p.is_zero() for row in composition(m) for p in row)


def test_b11_is_printed_combination():
    alpha = (5, 7, 11, 13, 17)
    m = monad_from_forms((a, b, c, d), alpha)
    assert m.B[0][0] == -7 * d - 5 * c
    row1 = [p for p in m.A[0]]
    col1 = [m.B[j][0] for j in range(6)]
    total = sum((x * y for x, y in zip(row1, col1)), a * 0)
    assert total.is_zero()


@pytest.mark.parametrize("k", range(5))
def test_composition_vanishes_for_unit_alpha(k):
    unit = [0] * 5
    unit[k] = 1
    m = monad_from_forms((a, b, c, d), unit)
    assert all(p.is_zero() for row in composition(m) for p in row)


def test_equivariance_for_seeded_unimodular():
    from monadcert.oracle.monad import random_unimodular
    rng = random.Random(5)
    for _ in range(5):
        g = random_unimodular(rng)
        assert g[0][0] * g[1][1] - g[0][1] * g[1][0] == 1
        res = equivariance_check(bt.GENERIC_ALPHA, g)
        assert res["A"] and res["B"]


def test_degree_bookkeeping_c1_minus_one():
    p = PullbackParams(-1, 3, 5)
    m = build_monad(p, fspec_default(p).forms, GENERIC)
    assert m.src == (-3, -3) and m.tgt == (2, 2)
    assert m.mid == (-2, -2, -2, 1, 1, 1)


def test_monad_check_pass_and_fail():
    m = build_monad(PullbackParams(0, 0, 1), (a, b, c, d), GENERIC, GF)
    rep = monad_check(m, 100, 0)
    assert rep["passed"] and rep["composition_zero"]
    p12 = PullbackParams(0, 1, 2)
    assert monad_check(build_monad(p12, fspec_default(p12).forms, SPECIAL, QQ), 30, 1)["passed"]
    bad = monad_from_forms((a, b, c, d), (1, 0, 0, 0, 1), GF)
    assert not monad_check(bad, 20, 0)["passed"]
    assert monad_check(m, 15, 9) == monad_check(m, 15, 9)


# section counts -----------------------------------------------------------

def test_oracle_h0_examples():
    base = PullbackParams(0, 0, 1)
    f = fspec_default(base)
    assert oracle_h0_E(base, f, GENERIC, 1) == 2
    assert oracle_h0_E(base, f, GENERIC, 2) == 12  # not 8: H^0 E(2) = S^3 U + U^4
    p = PullbackParams(0, 1, 2)
    fp = fspec_default(p)
    assert [oracle_h0_E(p, fp, GENERIC, t) for t in (0, 1, 2)] == [0, 1, 6]


def test_oracle_h1_examples():
    base = PullbackParams(0, 0, 1)
    assert oracle_h1_E(base, fspec_default(base), GENERIC, 0) == 2
    p = PullbackParams(0, 1, 2)
    fp = fspec_default(p)
    assert oracle_h1_E(p, fp, GENERIC, 0) == 8
    assert oracle_h1_E(p, fp, GENERIC, 6) == 0


@pytest.mark.parametrize("triple", [(0, 1, 2), (0, 1, 3), (0, 2, 5)])
def test_oracle_matches_engine_over_rationals(triple):
    p = PullbackParams(*triple)
    f = fspec_default(p)
    for alpha in (GENERIC, SPECIAL):
        for t in range(-2, 5):
            assert oracle_h0_E(p, f, alpha, t) == h_pullback(0, t, p)
            assert oracle_h1_E(p, f, alpha, t) == h_pullback(1, t, p)


def test_rational_and_prime_agree():
    p = PullbackParams(0, 1, 2)
    f = fspec_validate((a + 2 * b, b - c, c ** 3 + d ** 3 - a * b * d, d ** 3 + a ** 2 * c))
    for t in range(-1, 5):
        assert oracle_h0_E(p, f, GENERIC, t, QQ) == oracle_h0_E(p, f, GENERIC, t, GF)
        assert oracle_h1_E(p, f, GENERIC, t, QQ) == oracle_h1_E(p, f, GENERIC, t, GF)


def test_oracle_c1_minus_one_stands_alone():
    p = PullbackParams(-1, 3, 5)
    f = fspec_default(p)
    assert oracle_h0_E(p, f, GENERIC, 0) == 0
    # pullback along the squaring map: pi^* E_{3/2,5/2}(t) = E_{3,5}(2t - 1)
    assert h_pullback(0, -1, PullbackParams(0, 3, 5)) == 0
    assert oracle_h0_EndE(p, f, GENERIC, 0) == 1
    assert oracle_h0_EndE(p, f, SPECIAL, 0) == 1


def test_tensor_square_is_complex():
    p = PullbackParams(0, 1, 2)
    m = build_monad(p, fspec_default(p).forms, GENERIC)
    ts = tensor_square(m)
    assert [len(ts.twists[k]) for k in range(-2, 3)] == [4, 24, 44, 24, 4]
    for k in range(-2, 1):
        prod_ = matmul(ts.maps[k + 1], ts.maps[k])
        assert all(x.is_zero() for row in prod_ for x in row)


def test_h0_end_simplicity():
    for triple in [(0, 0, 1), (0, 1, 2)]:
        p = PullbackParams(*triple)
        assert oracle_h0_EndE(p, fspec_default(p), GENERIC, 0, GF) == 1
    unstable = PullbackParams(0, 2, 3)
    assert oracle_h0_EndE(unstable, fspec_default(unstable), GENERIC, 0, GF) >= 1
