import math
import random
from fractions import Fraction

import pytest

from seidel import algnum
from seidel.algnum import Surd, compare, parse_algebraic, quadratic_roots, surd


def test_canonicalization():
    assert surd(0, 2, 8, 2) == Surd(0, 2, 2, 1)
    assert surd(2, 4, 5, 6) == Surd(1, 2, 5, 3)
    assert surd(1, 0, 7, 2) == Fraction(1, 2)
    assert surd(4, 0, 7, 2) == 2
    assert surd(3, 2, 4, 1) == 7  # sqrt(4) collapses
    assert surd(1, 1, 18, -2) == Surd(-1, -3, 2, 2)


def test_negative_radicand_rejected():
    with pytest.raises(ValueError):
        surd(0, 1, -5, 1)


def test_float_agrees():
    rng = random.Random(0)
    for _ in range(50):
        p = rng.randint(-9, 9)
        q = rng.randint(-9, 9)
        D = rng.randint(0, 30)
        r = rng.randint(1, 9)
        v = surd(p, q, D, r)
        expect = (p + q * math.sqrt(D)) / r
        assert math.isclose(algnum.float_value(v), expect, rel_tol=0, abs_tol=1e-9)


def test_compare_same_field():
    a = surd(0, 1, 5)  # sqrt 5
    b = surd(0, 1, 5)
    assert compare(a, b) == 0
    assert compare(a, 2) > 0
    assert compare(a, 3) < 0
    assert compare(surd(-1, -2, 5), surd(-1, 2, 5)) < 0


def test_compare_mixed_fields():
    assert compare(surd(0, 1, 2), surd(0, 1, 3)) < 0
    # 1 + sqrt(2) vs sqrt(6): 2.414... vs 2.449...
    assert compare(surd(1, 1, 2), surd(0, 1, 6)) < 0
    # sqrt(2) + nothing vs 577/408 (convergent, close)
    assert compare(surd(0, 1, 2), Fraction(577, 408)) < 0
    assert compare(surd(0, 1, 2), Fraction(1393, 985)) > 0


def test_compare_randomized_against_float():
    rng = random.Random(1)
    for _ in range(200):
        a = surd(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(2, 40), rng.randint(1, 6))
        b = surd(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(2, 40), rng.randint(1, 6))
        fa, fb = algnum.float_value(a), algnum.float_value(b)
        if abs(fa - fb) > 1e-6:
            assert compare(a, b) == (1 if fa > fb else -1)


def test_arithmetic():
    root5 = surd(0, 1, 5)
    x = root5 + 1
    assert x == Surd(1, 1, 5, 1)
    assert x - 1 == root5
    assert root5 * root5 == 5
    y = surd(1, 1, 5, 2) * surd(1, -1, 5, 2)  # (1+sqrt5)(1-sqrt5)/4 = -1
    assert y == -1
    with pytest.raises(ValueError):
        root5 + surd(0, 1, 2)


def test_quadratic_roots():
    lo, hi = quadratic_roots(0, -5)  # x^2 - 5
    assert lo == surd(0, -1, 5) and hi == surd(0, 1, 5)
    lo, hi = quadratic_roots(-3, 2)  # (x-1)(x-2)
    assert (lo, hi) == (1, 2)
    lo, hi = quadratic_roots(2, -4)  # x = -1 +- sqrt5
    assert lo == surd(-1, -1, 5) and hi == surd(-1, 1, 5)
    with pytest.raises(ValueError):
        quadratic_roots(0, 1)


def test_format_parse_round_trip():
    values = [
        3,
        -7,
        Fraction(1, 2),
        surd(0, 1, 5),
        surd(-1, -2, 5),
        surd(3, 2, 7, 4),
        surd(-1, 1, 13, 2),
    ]
    for v in values:
        s = algnum.format_algebraic(v)
        assert parse_algebraic(s) == v


def test_format_examples():
    assert algnum.format_algebraic(surd(-1, -2, 5)) == "(-1-2*sqrt(5))"
    assert algnum.format_algebraic(surd(1, 1, 5, 2)) == "(1+1*sqrt(5))/2"
    assert algnum.format_algebraic(-3) == "-3"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_algebraic("sqrt(banana)")


def test_sorting():
    vals = [surd(0, 1, 5), -3, 0, surd(-1, -1, 2), Fraction(5, 2), 2]
    out = sorted(vals, key=algnum.sort_key)
    floats = [algnum.float_value(v) for v in out]
    assert floats == sorted(floats)
