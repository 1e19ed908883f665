from fractions import Fraction

import pytest

from seidel import constructions, spectra
from seidel.bounds import (
    BoundTableRow,
    DYNKIN_THRESHOLD_RANGE,
    SymbolicCount,
    TWO_EIGENVALUE_CONDITION,
    absolute_bound,
    absolute_equality_possible,
    best_known_lower,
    even_eigenvalues_simple,
    external_data,
    max_lines_table,
    n5_bounds,
    n5_table,
    neumann_filter,
    relative_bound,
    relative_bound_info,
    table_csv,
    table_text,
)
from seidel.constructions import quadratic_lower_bound
from seidel.errors import AngleOutOfRangeError, PreconditionFailsError


class TestAbsoluteBound:
    def test_formula(self):
        assert absolute_bound(2) == 3
        assert absolute_bound(7) == 28
        assert absolute_bound(23) == 276
        for d in range(2, 60):
            assert absolute_bound(d) == d * (d + 1) // 2

    def test_rejects_small_dimension(self):
        for d in (-1, 0, 1):
            with pytest.raises(PreconditionFailsError):
                absolute_bound(d)

    def test_equality_possible(self):
        # tightness needs d in {2, 3} or d + 2 an odd square
        assert absolute_equality_possible(2)
        assert absolute_equality_possible(3)
        assert absolute_equality_possible(7)
        assert absolute_equality_possible(23)
        assert not absolute_equality_possible(5)
        assert not absolute_equality_possible(14)
        assert not absolute_equality_possible(22)

    def test_equality_is_necessary_not_sufficient(self):
        # 47 + 2 = 49 passes the arithmetic test, yet equality is known to
        # fail there; the exception ships in the external data file
        assert absolute_equality_possible(47)
        failures = external_data()["absolute_bound_equality_failures"]
        assert 47 in failures["dimensions"]


class TestRelativeBound:
    def test_known_values(self):
        assert relative_bound(7, Fraction(1, 3)) == 28
        assert relative_bound(5, Fraction(1, 3)) == 10
        assert relative_bound(2, Fraction(1, 2)) == 3
        assert relative_bound(14, Fraction(1, 5)) == 30
        assert relative_bound(17, Fraction(1, 5)) == 51
        assert relative_bound(19, Fraction(1, 5)) == 76

    def test_meets_absolute_bound_at_23(self):
        # alpha^2 (d+2) = 1 here, the unique point where both bounds agree
        assert relative_bound(23, Fraction(1, 5)) == absolute_bound(23) == 276

    def test_info_fields(self):
        info = relative_bound_info(5, Fraction(1, 3))
        assert info.value == 10
        assert info.exact == Fraction(10)
        assert info.equality_condition == TWO_EIGENVALUE_CONDITION
        frac = relative_bound_info(14, Fraction(1, 5)).exact
        assert frac == Fraction(14 * 24, 25 - 14)
        assert relative_bound(14, Fraction(1, 5)) == frac.numerator // frac.denominator

    def test_angle_out_of_range(self):
        with pytest.raises(AngleOutOfRangeError):
            relative_bound(95, Fraction(1, 9))
        with pytest.raises(AngleOutOfRangeError):
            relative_bound_info(24, Fraction(1, 5))

    def test_never_exceeds_absolute(self):
        # equality happens exactly when alpha^2 (d+2) = 1
        for d in range(2, 201):
            for a in range(3, 16, 2):
                if a * a < d + 2:
                    continue
                rel = relative_bound(d, Fraction(1, a))
                assert rel <= absolute_bound(d)
                if a * a == d + 2:
                    assert rel == absolute_bound(d)
                else:
                    assert rel < absolute_bound(d)


class TestNeumannFilter:
    def test_examples(self):
        assert neumann_filter(29, 14, Fraction(1, 5))
        assert not neumann_filter(29, 14, Fraction(1, 4))
        assert not neumann_filter(30, 14, Fraction(1, 6))

    def test_small_systems_always_pass(self):
        # the parity constraint only binds above 2d lines
        for n in range(1, 11):
            assert neumann_filter(n, 5, Fraction(1, 4))


def test_even_eigenvalues_simple():
    ok = spectra.parse_spectrum("{[-3]^4,[0]^1,[3]^4}")
    assert even_eigenvalues_simple(ok)
    assert even_eigenvalues_simple(spectra.parse_spectrum("{[-3]^2,[1]^3,[3]^1}"))
    bad = spectra.parse_spectrum("{[-2]^2,[1]^4}")
    assert not even_eigenvalues_simple(bad)
    assert not even_eigenvalues_simple(spectra.parse_spectrum("{[-4]^2,[2]^4,[0]^1}"))


class TestMaxLinesTable:
    EXACT = {2: 3, 3: 6, 4: 6, 5: 10, 6: 16, 7: 28, 13: 28, 15: 36,
             21: 126, 22: 176, 23: 276, 41: 276}
    WINDOWS = {14: (28, 29), 16: (40, 41), 17: (48, 50), 18: (48, 61),
               19: (72, 76), 20: (90, 96)}

    def test_known_values(self):
        rows = {r.d: r for r in max_lines_table(2, 41)}
        for d, value in self.EXACT.items():
            assert rows[d].lower == rows[d].upper == value, d
            assert rows[d].exact
        for d, (lo, hi) in self.WINDOWS.items():
            assert (rows[d].lower, rows[d].upper) == (lo, hi), d
            assert not rows[d].exact

    def test_angles(self):
        rows = {r.d: r for r in max_lines_table(2, 41)}
        assert rows[2].angles == ("2",)
        assert rows[3].angles == ("sqrt(5)",)
        assert rows[4].angles == ("sqrt(5)", "3")
        assert rows[14].angles == ("3", "5")
        assert rows[15].angles == ("5",)
        assert rows[41].angles == ("5",)

    def test_monotone(self):
        # more dimensions never allow fewer lines
        rows = max_lines_table(2, 41)
        for prev, cur in zip(rows, rows[1:]):
            assert prev.lower <= cur.lower
            assert prev.upper <= cur.upper
            assert cur.lower <= cur.upper

    def test_rejects_uncovered_range(self):
        with pytest.raises(PreconditionFailsError):
            max_lines_table(2, 50)


class TestAngleFifthTable:
    EXACT = {5: 6, 6: 7, 7: 9, 8: 10, 9: 12, 10: 16, 11: 18, 13: 26,
             15: 36, 21: 126, 22: 176}
    WINDOWS = {12: (20, 21), 14: (28, 29), 16: (40, 41), 17: (48, 50),
               18: (48, 61), 19: (72, 76), 20: (90, 96)}

    def test_trivial_dimensions(self):
        for d in (2, 3, 4):
            row = n5_bounds(d)
            assert row.lower == row.upper == d

    def test_known_values(self):
        for d, value in self.EXACT.items():
            row = n5_bounds(d)
            assert row.lower == row.upper == value, d
        for d, (lo, hi) in self.WINDOWS.items():
            row = n5_bounds(d)
            assert (row.lower, row.upper) == (lo, hi), d

    def test_dimension_12_cites_order_22_exclusion(self):
        row = n5_bounds(12)
        assert row.window() == "20-21"
        assert "22" in row.upper_source

    def test_plateau_at_276(self):
        for d in (23, 24, 40, 60):
            row = n5_bounds(d)
            assert row.lower == row.upper == 276
            assert row.exact
        assert "relative_bound" in n5_bounds(23).upper_source

    def test_sdp_window(self):
        row = n5_bounds(100)
        assert row.lower == 276
        assert isinstance(row.upper, SymbolicCount)
        assert str(row.upper) == "B(d)"
        assert not row.exact

    def test_absolute_window(self):
        row = n5_bounds(150)
        assert row.lower == 276
        assert row.upper == absolute_bound(150)

    def test_linear_regime(self):
        even = n5_bounds(186)
        assert even.lower == 3 * 185 // 2
        assert "dynkin" in even.lower_source
        odd = n5_bounds(187)
        assert odd.lower == 3 * 186 // 2
        assert "blowup" in odd.lower_source
        # symbolic threshold: unresolved until V is pinned down
        assert n5_bounds(200).upper == SymbolicCount(
            "V", *DYNKIN_THRESHOLD_RANGE)

    def test_linear_regime_with_numeric_threshold(self):
        low = n5_bounds(200, V=300)
        assert (low.lower, low.upper) == (298, 300)
        assert not low.exact
        past = n5_bounds(31000, V=45374)
        assert past.exact
        assert past.lower == past.upper == 3 * 30999 // 2

    def test_table_assembly(self):
        rows = n5_table(5, 30)
        assert [r.d for r in rows] == list(range(5, 31))
        for r in rows:
            if isinstance(r.upper, int):
                assert r.lower <= r.upper


class TestBestKnownLower:
    def test_matches_main_table(self):
        rows = {r.d: r for r in max_lines_table(2, 41)}
        for d in range(2, 42):
            assert best_known_lower(d) == rows[d].lower

    def test_feasibility_inputs(self):
        # the values the feasible-spectra filter treats as already built
        assert best_known_lower(14) == 28
        assert best_known_lower(16) == 40
        assert best_known_lower(17) == 48
        assert best_known_lower(18) == 48
        assert best_known_lower(19) == 72
        assert best_known_lower(20) == 90

    def test_large_dimensions(self):
        assert best_known_lower(42) == 276
        for d in (50, 76, 96):
            expect = max(276, constructions.mub_dimension_lower(d))
            assert best_known_lower(d) == expect

    def test_quadratic_floor(self):
        for d in range(2, 97):
            assert quadratic_lower_bound(d) <= best_known_lower(d)

    def test_domain(self):
        with pytest.raises(PreconditionFailsError):
            best_known_lower(1)
        with pytest.raises(PreconditionFailsError):
            best_known_lower(97)


class TestRowsAndEmitters:
    def test_row_validation(self):
        with pytest.raises(PreconditionFailsError):
            BoundTableRow(5, 10, 9, "x", "y", ("5",))

    def test_symbolic_str(self):
        assert str(SymbolicCount("B(d)")) == "B(d)"
        assert str(SymbolicCount("V", 2486, 45374)) == "V"

    def test_csv(self):
        rows = max_lines_table(2, 41)
        out = table_csv(rows).splitlines()
        assert out[0] == "d,lower,upper,exact,angles,lower_source,upper_source"
        assert len(out) == len(rows) + 1
        d23 = next(line for line in out if line.startswith("23,"))
        assert "276,276" in d23

    def test_text(self):
        out = table_text(max_lines_table(2, 10)).splitlines()
        assert "lines" in out[0] and "angles" in out[0]
        assert set(out[1]) <= {"-", " "}
        assert len(out) == 9 + 2


class TestLineSystemsRespectBounds:
    def test_angle_fifth_constructions(self):
        for builder in (constructions.netto_sts19_system,
                        constructions.witt_octad_system,
                        constructions.two_graph_36_deletion_system):
            ls = builder()
            assert ls.angle_inv == 5
            d = ls.dimension_ambient
            assert ls.count <= relative_bound(d, Fraction(1, 5))
            assert ls.count <= absolute_bound(d)
            assert neumann_filter(ls.count, d, Fraction(1, 5))

    def test_unbiased_bases_beyond_relative_range(self):
        ls = constructions.unbiased_basis_lines(2, "a")
        assert (ls.count, ls.dimension_ambient) == (144, 25)
        # alpha^2 (d+2) > 1 here, so only the absolute bound applies
        with pytest.raises(AngleOutOfRangeError):
            relative_bound(25, Fraction(1, 5))
        assert ls.count <= absolute_bound(25)
        assert neumann_filter(ls.count, 25, Fraction(1, 5))
