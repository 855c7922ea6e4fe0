"""Acceptance criteria A1-A11, each checked at its stated (exact) tolerance.

A one-line PASS/FAIL per criterion is printed in the terminal summary (see
conftest.py).
"""
import itertools
import random
from fractions import Fraction
from math import prod

from monadcert import base_tables as bt
from monadcert.engine import (
    PullbackParams,
    c2_of,
    certify,
    h1_end_pullback,
    h_pullback,
    is_stable,
)
from monadcert.hilbert import ci_hilbert
from monadcert.oracle import (
    QQ,
    PrimeField,
    build_monad,
    equivariance_check,
    fspec_default,
    fspec_random,
    macaulay_s_p,
    oracle_h0_E,
    oracle_h0_EndE,
    oracle_h1_E,
    variables,
)
from monadcert.oracle.monad import composition, monad_from_forms, random_unimodular

GF = PrimeField(32003)
GENERIC = bt.alpha_validate((1, 0, 1, 0, 2))
SPECIAL = bt.alpha_validate((1, 0, 0, 1, 0))


def chi_O(t):
    return Fraction((t + 1) * (t + 2) * (t + 3), 6)


def test_A1_base_bundle_reproduction():
    assert not GENERIC.special and SPECIAL.special
    base = PullbackParams(0, 0, 1)
    table = {-1: 8, 0: 13, 1: 12, 2: 5}
    for t in range(-8, 9):
        want = table.get(t, 0)
        assert h1_end_pullback(t, base, False) == want, t
        assert h1_end_pullback(t, base, True) == want + (t == -2), t


def test_A2_certificate_c2_5():
    cert = certify(PullbackParams(0, 1, 2))
    assert (cert.c2, cert.stable, cert.h1_generic, cert.h1_special) == (5, True, 37, 38)
    assert cert.jump == 1 == ci_hilbert((1, 1, 3, 3))[4]
    assert cert.verdict == "singular"
    assert all(c["passed"] for c in cert.checks)


def test_A3_certificate_c1_minus1_c2_6():
    cert = certify(PullbackParams(-1, 3, 5))
    assert (cert.c2, cert.stable, cert.h1_generic, cert.h1_special) == (6, True, 47, 49)
    assert cert.jump == 2 == ci_hilbert((1, 1, 4, 4))[5]
    assert cert.verdict == "singular"
    assert all(c["passed"] for c in cert.checks)


def test_A4_certificate_c2_8():
    cert = certify(PullbackParams(0, 0, 2))
    assert (cert.c2, cert.h1_generic, cert.h1_special, cert.jump) == (8, 61, 62, 1)


def test_A5_stability_iff():
    for g in range(1, 7):
        for b in range(g):
            p = PullbackParams(0, b, g)
            closed = 2 * g - 3 * b > 0
            assert is_stable(p) == closed, (b, g)
            assert (h_pullback(0, 0, p) == 0) == closed, (b, g)


TABLE_GRID = [(0, 1), (1, 2), (0, 2), (1, 3), (3, 5)]


def _table_cells():
    for b, g in TABLE_GRID:
        p = PullbackParams(0, b, g)
        for t in range(-6, p.hilbert().socle + 3):
            yield p, t


def test_A6_euler_characteristic():
    for p, t in _table_cells():
        h = [h_pullback(i, t, p) for i in range(4)]
        assert h[0] - h[1] + h[2] - h[3] == 2 * chi_O(t) - c2_of(p) * (t + 2), (p, t)


def test_A7_serre_duality():
    for p, t in _table_cells():
        assert h_pullback(2, t, p) == h_pullback(1, -4 - t, p), (p, t)
        assert h_pullback(3, t, p) == h_pullback(0, -4 - t, p), (p, t)


def test_A8_end_chi_cancellation():
    grid = [PullbackParams(0, b, g) for g in range(2, 7) for b in range(g)
            if 2 * g - 3 * b > 0]
    grid += [PullbackParams(-1, b, g) for g in (5, 7, 9) for b in range(1, g, 2)
             if 2 * g - 3 * b + 1 > 0]
    assert len(grid) > 15
    for p in grid:
        c2 = c2_of(p)
        want = 8 * c2 - 3 if p.c1 == 0 else 8 * c2 - 5
        for special in (False, True):
            got = h1_end_pullback(0, p, special) - h1_end_pullback(-4, p, special)
            assert got == want, (p, special)


def test_A9_oracle_equivalence():
    for b, g in [(0, 1), (1, 2), (0, 2)]:
        p = PullbackParams(0, b, g)
        s = ci_hilbert(p.degrees)
        for f in (fspec_default(p), fspec_random(p, 2024, GF)):
            for q in range(0, s.socle + 3):
                assert macaulay_s_p(f, q, GF) == s[q], (p, f.description, q)
            for t in range(-2, 7):
                assert oracle_h0_E(p, f, GENERIC, t, GF) == h_pullback(0, t, p), (p, t)
                assert oracle_h1_E(p, f, GENERIC, t, GF) == h_pullback(1, t, p), (p, t)
            assert is_stable(p)
            assert oracle_h0_EndE(p, f, GENERIC, 0, GF) == 1
            assert oracle_h0_EndE(p, f, SPECIAL, 0, GF) == 1


def test_A10_monad_validity():
    a, b, c, d = variables(QQ)
    for k in range(5):
        unit = [0] * 5
        unit[k] = 1
        m = monad_from_forms((a, b, c, d), unit, QQ)
        assert all(x.is_zero() for row in composition(m) for x in row), k
    rng = random.Random(10)
    for _ in range(10):
        g = random_unimodular(rng)
        assert g[0][0] * g[1][1] - g[0][1] * g[1][0] == 1
        res = equivariance_check(GENERIC.alpha, g, QQ)
        assert res["A"] and res["B"], g
    # also on a pulled-back monad
    p = PullbackParams(0, 1, 2)
    m = build_monad(p, fspec_default(p).forms, SPECIAL, QQ)
    assert all(x.is_zero() for row in composition(m) for x in row)


def test_A11_hilbert_invariants():
    for degs in itertools.product(range(1, 11), repeat=4):
        h = ci_hilbert(degs)
        sig = sum(degs) - 4
        assert h.socle == sig
        assert all(h[q] == h[sig - q] for q in range(sig + 1)), degs
        assert all(h[q] > 0 for q in range(sig + 1)), degs
        assert h.total() == prod(degs), degs
