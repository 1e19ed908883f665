import random
from fractions import Fraction

import pytest

from seidel import algnum, core, spectra
from seidel.algnum import surd
from seidel.core import SeidelMatrix
from seidel.errors import (
    AnnihilationFailsError,
    BadCliqueSizeError,
    InvalidSpectrumError,
    MultiplicityMismatchError,
    NegativeDiscriminantError,
    NegativeRadicandError,
    NotAnEigenvalueError,
    NotSmallestError,
    PreconditionFailsError,
)
from seidel.spectra import (
    FeasibleSpectrum,
    Spectrum,
    all_eigenvalues_at_least,
    certify_spectrum,
    clique_deletion_spectrum,
    congruence_filters,
    delete_clique,
    energy,
    enumerate_feasible_spectra,
    equal_multiplicity_solver,
    forced_order,
    forced_spectrum_bound,
    format_spectrum,
    generalized_relative_bound,
    integer_eigenvalues,
    interlacing_check,
    min_eigenvalue_multiplicity,
    parse_spectrum,
    seidel_spectrum_of_regular_graph,
    spectrum,
    spectrum_exact,
    standard_equations_check,
)

from .oracles import random_seidel_rows


def icosahedron_seidel() -> SeidelMatrix:
    # antipodal pairs of icosahedron vertices index the 6 lines twice over;
    # the 12-vertex graph below is vertex 0..11 with the standard adjacency
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
        (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
        (1, 6), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9),
        (4, 9), (4, 10), (5, 10), (5, 6),
        (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
    ]
    return core.seidel_of_graph(core.AmbientGraph.from_edges(12, edges))


def paley_seidel(q: int) -> SeidelMatrix:
    # prime q = 1 mod 4: quadratic-residue signs
    res = {(x * x) % q for x in range(1, q)}
    rows = [[0 if i == j else (1 if (i - j) % q in res else -1) for j in range(q)] for i in range(q)]
    return SeidelMatrix(rows)


class TestSpectrumType:
    def test_merge_and_sort(self):
        s = spectrum([(3, 2), (-1, 1), (3, 1), (0, 0)])
        assert s.pairs == ((-1, 1), (3, 3))
        assert s.order == 4

    def test_rejects_bad_multiplicity(self):
        with pytest.raises(InvalidSpectrumError):
            spectrum([(1, -2)])
        with pytest.raises(InvalidSpectrumError):
            spectrum([(1.5, 2)])

    def test_surd_sorting(self):
        s = spectrum([(surd(0, 1, 5), 2), (-3, 1), (surd(0, -1, 5), 2)])
        vals = s.values()
        assert vals[0] == -3
        assert vals[1] == surd(0, -1, 5)
        assert vals[2] == surd(0, 1, 5)


class TestSpectrumText:
    def test_format(self):
        s = spectrum([(-5, 16), (5, 9), (7, 5)])
        assert format_spectrum(s) == "{[-5]^16,[5]^9,[7]^5}"

    def test_round_trip(self):
        cases = [
            "{[-5]^16,[5]^9,[7]^5}",
            "{[-1]^5,[5]^1}",
            "{[(-1-2*sqrt(5))]^3,[1]^6,[(-1+2*sqrt(5))]^3}",
            "{[(0-1*sqrt(5))]^2,[0]^1,[(0+1*sqrt(5))]^2}",
        ]
        for text in cases:
            assert format_spectrum(parse_spectrum(text)) == text

    def test_parse_default_multiplicity(self):
        s = parse_spectrum("{[3],[(-1+1*sqrt(2))]}")
        assert s.multiplicity(3) == 1
        assert s.multiplicity(surd(-1, 1, 2)) == 1

    def test_parse_errors(self):
        with pytest.raises(InvalidSpectrumError):
            parse_spectrum("[3]^2")
        with pytest.raises(InvalidSpectrumError):
            parse_spectrum("{3^2}")


class TestCertify:
    def test_all_plus_6(self):
        S = SeidelMatrix.all_plus(6)
        out = certify_spectrum(S, spectrum([(5, 1), (-1, 5)]))
        assert out.certified

    def test_paley_5(self):
        S = paley_seidel(5)
        claim = spectrum([(surd(0, -1, 5), 2), (0, 1), (surd(0, 1, 5), 2)])
        assert certify_spectrum(S, claim).certified

    def test_icosahedron(self):
        S = icosahedron_seidel()
        claim = spectrum([(surd(-1, -2, 5), 3), (1, 6), (surd(-1, 2, 5), 3)])
        assert certify_spectrum(S, claim).certified

    def test_wrong_multiplicity(self):
        S = SeidelMatrix.all_plus(6)
        with pytest.raises(MultiplicityMismatchError) as ei:
            certify_spectrum(S, spectrum([(5, 2), (-1, 4)]))
        assert ei.value.expected != ei.value.actual

    def test_wrong_value(self):
        S = SeidelMatrix.all_plus(6)
        with pytest.raises(MultiplicityMismatchError):
            certify_spectrum(S, spectrum([(4, 1), (-1, 5)]))

    def test_missing_eigenvalue_annihilation(self):
        # claim the right multiplicity for -1 but stuff the rest with a
        # non-eigenvalue surd pair; rank check for -1 passes, product fails
        S = SeidelMatrix.all_plus(4)
        with pytest.raises((AnnihilationFailsError, MultiplicityMismatchError)):
            certify_spectrum(
                S, spectrum([(-1, 2), (surd(0, -1, 7), 1), (surd(0, 1, 7), 1)])
            )

    def test_rational_noninteger_rejected(self):
        S = SeidelMatrix.all_plus(4)
        with pytest.raises(AnnihilationFailsError):
            certify_spectrum(S, spectrum([(Fraction(1, 2), 4)]))

    def test_order_mismatch(self):
        S = SeidelMatrix.all_plus(4)
        with pytest.raises(InvalidSpectrumError):
            certify_spectrum(S, spectrum([(-1, 2), (3, 1)]))

    def test_unpaired_surd(self):
        S = paley_seidel(5)
        with pytest.raises(MultiplicityMismatchError):
            certify_spectrum(
                S, spectrum([(surd(0, -1, 5), 3), (0, 1), (surd(0, 1, 5), 1)])
            )


class TestEigenvalueExtraction:
    def test_integer_eigenvalues_all_plus_7(self):
        S = SeidelMatrix.all_plus(7)
        pairs, cofactor = integer_eigenvalues(S)
        assert pairs == [(-1, 6), (6, 1)]
        assert cofactor == [1]

    def test_integer_eigenvalues_paley_9(self):
        # 9 = 3^2: build from GF(9) later; here use the known 9-vertex
        # Paley-like two-graph via the exact construction in constructions
        pytest.importorskip("seidel.constructions")

    def test_paley_5_integer_part(self):
        S = paley_seidel(5)
        pairs, cofactor = integer_eigenvalues(S)
        assert pairs == [(0, 1)]
        # remaining factor (x^2-5)^2
        from seidel import intpoly

        assert intpoly.trim(cofactor) == intpoly.mul([-5, 0, 1], [-5, 0, 1])

    def test_spectrum_exact_icosahedron(self):
        S = icosahedron_seidel()
        spec = spectrum_exact(S)
        assert spec is not None
        assert spec.pairs == (
            (surd(-1, -2, 5), 3),
            (1, 6),
            (surd(-1, 2, 5), 3),
        )

    def test_min_eigenvalue_multiplicity(self):
        S = SeidelMatrix.all_plus(6)
        assert min_eigenvalue_multiplicity(S, -1) == 1
        with pytest.raises(NotAnEigenvalueError):
            min_eigenvalue_multiplicity(S, -3)
        with pytest.raises(NotSmallestError):
            min_eigenvalue_multiplicity(S, 5)

    def test_psd_tests(self):
        S = SeidelMatrix.all_plus(6)
        n = S.n
        shifted = [[S.rows[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
        assert spectra.is_psd(shifted)
        assert all_eigenvalues_at_least(S, -1)
        assert not all_eigenvalues_at_least(S, Fraction(-1, 2))
        assert all_eigenvalues_at_least(S, Fraction(-3, 2))


class TestEnergy:
    def test_all_plus_10(self):
        res = energy(SeidelMatrix.all_plus(10))
        assert res.exact == 18
        assert res.equality and res.meets_bound

    def test_paley_5(self):
        res = energy(paley_seidel(5))
        assert res.exact == surd(0, 4, 5)
        assert res.meets_bound and not res.equality

    def test_random_matrices_meet_bound(self):
        rng = random.Random(20)
        for _ in range(15):
            n = rng.randint(2, 7)
            S = SeidelMatrix(random_seidel_rows(n, rng))
            res = energy(S)
            assert res.meets_bound
            assert res.hi - res.lo <= Fraction(1, 10**9)

    def test_interval_mode_on_higher_degree_spectrum(self):
        # 3-path: charpoly x^3 - 3x - 2 = (x+1)^2 (x-2): integer actually;
        # force interval mode with a 5-vertex path whose spectrum is messier
        edges = [(i, i + 1) for i in range(4)]
        S = core.seidel_of_graph(core.AmbientGraph.from_edges(5, edges))
        res = energy(S)
        assert res.lo <= res.hi
        assert res.meets_bound
        assert res.hi - res.lo <= Fraction(1, 10**9)


class TestInterlacing:
    def test_paper_style_pass(self):
        outer = spectrum([(-5, 21), (7, 15)])
        inner = spectrum([(-5, 20), (2, 1), (7, 14)])
        assert interlacing_check(outer, inner)

    def test_trivial_pass(self):
        outer = spectrum([(-1, 5), (5, 1)])
        inner = spectrum([(-1, 4), (4, 1)])
        assert interlacing_check(outer, inner)

    def test_malformed_sizes_fail(self):
        outer = spectrum([(-5, 16), (5, 9), (7, 5)])
        inner = spectrum([(7, 31)])
        assert not interlacing_check(outer, inner)

    def test_violation(self):
        outer = spectrum([(-1, 3), (2, 1)])
        inner = spectrum([(3, 1)])
        assert not interlacing_check(outer, inner)

    def test_actual_submatrix_interlaces(self):
        rng = random.Random(21)
        for _ in range(10):
            n = rng.randint(3, 7)
            S = SeidelMatrix(random_seidel_rows(n, rng))
            keep = sorted(rng.sample(range(n), n - 1))
            outer = spectrum_exact(S)
            inner = spectrum_exact(S.submatrix(keep))
            if outer is None or inner is None:
                continue
            assert interlacing_check(outer, inner)


class TestCliqueDeletion:
    def test_example_36(self):
        spec, warnings = clique_deletion_spectrum(-5, 7, 36, 21, 8)
        assert spec == spectrum([(-5, 14), (7, 7), (3, 7)])
        assert warnings == ()

    def test_single_vertex(self):
        spec, _ = clique_deletion_spectrum(-1, 5, 6, 5, 1)
        assert spec == spectrum([(-1, 4), (4, 1)])

    def test_merging_case_96(self):
        spec, _ = clique_deletion_spectrum(-5, 19, 96, 76, 20)
        assert spec == spectrum([(-5, 57), (15, 19)])
        spec2, _ = clique_deletion_spectrum(-5, 15, 76, 57, 16)
        assert spec2 == spectrum([(-5, 42), (11, 15), (15, 3)])

    def test_size_violation(self):
        with pytest.raises(BadCliqueSizeError):
            clique_deletion_spectrum(-1, 5, 6, 5, 2)

    def test_warning_past_lambda1(self):
        _, warnings = clique_deletion_spectrum(-5, 3, 16, 6, 5)
        assert warnings

    def test_delete_clique_matches_prediction_all_plus(self):
        S = SeidelMatrix.all_plus(6)
        T = delete_clique(S, [1, 2])
        assert T == SeidelMatrix.all_plus(4)

    def test_delete_clique_rejects_non_clique(self):
        from seidel.errors import NotACliqueError

        rows = [[0, 1, -1], [1, 0, 1], [-1, 1, 0]]
        with pytest.raises(NotACliqueError):
            delete_clique(SeidelMatrix(rows), [0, 2])


class TestStandardEquations:
    def test_paper_rows(self):
        assert standard_equations_check(FeasibleSpectrum(40, 16, -5, 7, 15, 15))
        assert standard_equations_check(FeasibleSpectrum(30, 14, -5, 5, 7, 9))
        assert not standard_equations_check(FeasibleSpectrum(30, 20, -5, 5, 7, 9))

    def test_multiplicities(self):
        fs = FeasibleSpectrum(30, 14, -5, 5, 7, 9)
        assert fs.multiplicities() == (16, 9, 5)
        assert fs.spectrum() == spectrum([(-5, 16), (5, 9), (7, 5)])


class TestCongruenceFilters:
    def test_surviving_row(self):
        fs = FeasibleSpectrum(30, 14, -5, 5, 7, 9)
        results = dict(congruence_filters(fs))
        assert all(results.values())

    def test_prime_3_mod_4_killed(self):
        # n=7=prime, 7 % 4 == 3: admissible_order must fail
        fs = FeasibleSpectrum(7, 4, -3, 1, 3, 2)
        results = dict(congruence_filters(fs))
        assert not results["admissible_order"]

    def test_equal_multiplicities_killed(self):
        fs = FeasibleSpectrum(9, 6, -3, 1, 2, 3)
        results = dict(congruence_filters(fs))
        assert not results["unequal_multiplicities"]

    def test_two_equal_multiplicities_mod4(self):
        # n = 11 = 3 mod 4 with two equal multiplicities must fail
        fs = FeasibleSpectrum(11, 8, -3, 1, 3, 4)
        results = dict(congruence_filters(fs))
        assert not results["two_equal_multiplicities_order"]

    def test_even_eigenvalue_multiplicity(self):
        fs = FeasibleSpectrum(20, 10, -4, 2, 6, 5)
        results = dict(congruence_filters(fs))
        assert not results["even_eigenvalue_multiplicity"]


class TestGeneralizedRelativeBound:
    def test_equality_example(self):
        res = generalized_relative_bound(40, 16, -5, 7, 15)
        assert res.lhs_sq == Fraction(1, 4)
        assert res.rhs_sq == Fraction(1, 4)
        assert res.holds and res.equality

    def test_table_row_30(self):
        res = generalized_relative_bound(30, 14, -5, 5, 9)
        assert res.holds and res.equality

    def test_forced_two_eigenvalue_case(self):
        # m=d and mu = -lam0(n-d)/d: lhs = 0 = rhs
        res = generalized_relative_bound(28, 7, -3, 9, 7)
        assert res.lhs_sq == 0 and res.rhs_sq == 0

    def test_violation(self):
        res = generalized_relative_bound(40, 16, -5, 14, 15)
        assert not res.holds

    def test_negative_radicand(self):
        from seidel.errors import NegativeRadicandError

        with pytest.raises(NegativeRadicandError):
            generalized_relative_bound(100, 10, -7, 5, 5)

    def test_mu_nu_relabel_invariance_when_multiplicities_split_evenly(self):
        # with m = d-m the standard trace equation makes the two sides agree
        rng = random.Random(22)
        for _ in range(40):
            d = rng.choice([4, 6, 8, 10])
            m = d // 2
            lam0 = -rng.choice([3, 5])
            n = rng.randint(d + 1, 3 * d)
            num = -(n - d) * lam0
            if num % m:
                continue
            total = num // m  # mu + nu
            mu = rng.randint(lam0 + 1, total // 2)
            nu = total - mu
            if nu <= mu or nu > n - 1:
                continue
            try:
                r1 = generalized_relative_bound(n, d, lam0, mu, m)
                r2 = generalized_relative_bound(n, d, lam0, nu, d - m)
            except NegativeRadicandError:
                continue
            assert r1.lhs_sq == r2.lhs_sq and r1.rhs_sq == r2.rhs_sq


class TestEqualMultiplicitySolver:
    def test_integer_case(self):
        res = equal_multiplicity_solver(9, 5, 0)
        assert (res.lam0, res.nu) == (-3, 3)
        assert res.feasible

    def test_icosahedron_case(self):
        res = equal_multiplicity_solver(12, 9, 1)
        assert res.lam0 == surd(-1, -2, 5)
        assert res.nu == surd(-1, 2, 5)
        assert res.feasible

    def test_order_10_case(self):
        res = equal_multiplicity_solver(10, 7, 3)
        assert res.lam0 == surd(-2, -1, 5)
        assert res.nu == surd(-2, 1, 5)
        assert res.feasible

    def test_precondition(self):
        with pytest.raises(PreconditionFailsError):
            equal_multiplicity_solver(10, 4, 1)

    def test_negative_discriminant(self):
        with pytest.raises(NegativeDiscriminantError):
            equal_multiplicity_solver(10, 9, 10)


class TestForcedSpectrumBound:
    def test_nonexistence_of_22_lines_dim_12(self):
        res = forced_spectrum_bound(22, 12, -5, 4, 0)
        assert res.lhs_sq == Fraction(1, 36)
        assert res.rhs_sq == Fraction(25, 36)
        assert not res.holds

    def test_equality_30_lines_dim_14(self):
        res = forced_spectrum_bound(30, 14, -5, 6, 0)
        assert res.equality
        assert res.w == 9
        assert res.forced == spectrum([(-5, 16), (5, 9), (7, 5)])

    def test_equality_42_lines_dim_16(self):
        res = forced_spectrum_bound(42, 16, -5, 8, 0)
        assert res.equality
        assert res.forced == spectrum([(-5, 26), (7, 7), (9, 9)])

    def test_equality_61_lines_dim_18(self):
        res = forced_spectrum_bound(61, 18, -5, 12, 1)
        assert res.equality
        assert res.forced == spectrum([(-5, 43), (11, 9), (12, 1), (13, 8)])

    def test_strict_inequality_is_uninformative(self):
        res = forced_spectrum_bound(30, 14, -5, 4, 0)
        assert res.holds and not res.equality

    def test_precondition_failure(self):
        # |lam0| too small for the regime: the radicand goes negative
        with pytest.raises(PreconditionFailsError):
            forced_spectrum_bound(30, 14, -3, 6, 0)

    def test_larger_angle_violation(self):
        # lam0=-7 satisfies the precondition here and the bound is violated,
        # ruling out a smallest eigenvalue of -7 with these parameters
        res = forced_spectrum_bound(30, 14, -7, 6, 0)
        assert not res.holds


class TestForcedOrder:
    def test_values(self):
        assert forced_order(14, -5) == 30
        assert forced_order(16, -5) == 42
        assert forced_order(23, -5) == 276

    def test_precondition(self):
        with pytest.raises(PreconditionFailsError):
            forced_order(24, -5)
        with pytest.raises(PreconditionFailsError):
            forced_order(2, -5)


EXISTING_MAX = {14: 28, 16: 40, 17: 48, 18: 48, 19: 72, 20: 90}

TABLE_ROWS = [
    (28, 14, -5, 3, 7, 7),
    (30, 14, -5, 5, 7, 9),
    (40, 16, -5, 5, 9, 6),
    (40, 16, -5, 7, 15, 15),
    (42, 16, -5, 7, 9, 7),
    (48, 17, -5, 7, 11, 8),
    (49, 17, -5, 9, 16, 16),
    (48, 18, -5, 3, 11, 6),
    (48, 18, -5, 7, 19, 16),
    (54, 18, -5, 7, 13, 9),
    (60, 18, -5, 11, 15, 15),
    (72, 19, -5, 13, 19, 16),
    (75, 19, -5, 10, 15, 1),
    (90, 20, -5, 13, 19, 5),
    (95, 20, -5, 14, 19, 1),
]


class TestEnumerateFeasible:
    def test_dim_14(self):
        rows = enumerate_feasible_spectra([14], -5, EXISTING_MAX)
        assert [(f.n, f.d, f.mu, f.nu, f.m) for f in rows] == [
            (28, 14, 3, 7, 7),
            (30, 14, 5, 7, 9),
        ]

    def test_full_table(self):
        rows = enumerate_feasible_spectra([14, 16, 17, 18, 19, 20], -5, EXISTING_MAX)
        got = [(f.n, f.d, f.lam0, f.mu, f.nu, f.m) for f in rows]
        want = sorted(TABLE_ROWS, key=lambda r: (r[1], r[0], r[3], r[4]))
        assert got == want

    def test_rows_refilter_idempotent(self):
        rows = enumerate_feasible_spectra([14, 16], -5, EXISTING_MAX)
        for fs in rows:
            assert standard_equations_check(fs)
            assert all(ok for _, ok in congruence_filters(fs))

    def test_empty_dimension(self):
        assert enumerate_feasible_spectra([2], -5, {2: 2}) == []


class TestRegularGraphMap:
    def test_srg_to_seidel(self):
        # spectrum {[11]^1,[2]^16,[-3]^9,[-4]^4} maps to n-2k-1, -2theta-1
        spec = seidel_spectrum_of_regular_graph(30, 11, [(2, 16), (-3, 9), (-4, 4)])
        assert spec == spectrum([(-5, 16), (5, 9), (7, 5)])

    def test_second_srg(self):
        spec = seidel_spectrum_of_regular_graph(30, 12, [(2, 16), (-3, 8), (-4, 5)])
        assert spec == spectrum([(-5, 16), (5, 9), (7, 5)])

    def test_bad_multiplicity_sum(self):
        with pytest.raises(InvalidSpectrumError):
            seidel_spectrum_of_regular_graph(30, 11, [(2, 16)])


class TestGlobalIntegerEigenvalueProperty:
    def test_three_eigenvalue_spectra_have_integer_member(self):
        # all certified 3-eigenvalue spectra here contain an integer
        specs = [
            spectrum([(-3, 4), (surd(2, -1, 5), 3), (surd(2, 1, 5), 3)]),
            spectrum([(surd(-1, -2, 5), 3), (1, 6), (surd(-1, 2, 5), 3)]),
            spectrum([(-5, 16), (5, 9), (7, 5)]),
        ]
        for s in specs:
            assert any(isinstance(v, int) for v in s.values())
