import itertools
import os

import pytest

from fractions import Fraction

from seidel import bounds, classify, core, spectra
from seidel.constructions import (
    LineSystem,
    conference_two_graph,
    delete_switchable_clique,
    dynkin_triangles,
    extend_system,
    find_switchable_plus_clique,
    golay_octads,
    hadamard16_system,
    icosahedron,
    line_system,
    mub_dimension_lower,
    netto_sts19_system,
    paley,
    quadratic_lower_bound,
    real_mub_complete,
    regular_two_graph_36,
    search_twelve_line_classes,
    tensor_blowup,
    twelve_line_maximal_classes,
    two_eigenvalue_line_system,
    two_graph_36_deletion_system,
    unbiased_basis_lines,
    witt_octad_system,
)
from seidel.errors import (
    BadDimensionError,
    BadOrderError,
    BadVariantParamsError,
    CliqueNotFoundError,
    DimensionTooSmallError,
    NotTwoEigenvalueError,
    UnsupportedExponentError,
    ValidationError,
)
from tests.oracles import rank_by_fractions

LONG = os.environ.get("SEIDEL_LONG_TESTS") == "1"


def spec_of(S):
    return spectra.format_spectrum(spectra.spectrum_exact(S))


def matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


class TestPaley:
    def test_square_identity(self):
        # the quadratic-residue pattern forces S^2 = qI - J
        for q in (5, 9, 13, 17):
            S = paley(q)
            assert S.n == q
            sq = matmul(S.rows, S.rows)
            for i in range(q):
                for j in range(q):
                    assert sq[i][j] == (q if i == j else 0) - 1

    def test_prime_power_orders(self):
        assert paley(9).n == 9
        assert paley(25).n == 25
        assert spec_of(paley(9)) == "{[-3]^4,[0]^1,[3]^4}"

    def test_rejects_bad_orders(self):
        for q in (4, 6, 7, 12):
            with pytest.raises(BadOrderError):
                paley(q)


class TestConferenceTwoGraph:
    def test_square_identity(self):
        for q in (5, 9, 13, 25):
            S = conference_two_graph(q)
            assert S.n == q + 1
            sq = matmul(S.rows, S.rows)
            for i in range(S.n):
                for j in range(S.n):
                    assert sq[i][j] == (q if i == j else 0)

    def test_rejects_bad_orders(self):
        for q in (4, 8, 6):
            with pytest.raises(BadOrderError):
                conference_two_graph(q)


class TestMubFamilies:
    def test_rows_are_hadamard_and_unbiased(self):
        for i in (1, 2):
            mub = real_mub_complete(i)
            m = mub.m
            assert m == 4 ** i
            assert len(mub.hadamards) == m // 2
            root = {4: 2, 16: 4}[m]
            for H in mub.hadamards:
                for a, b in itertools.combinations(range(m), 2):
                    assert sum(x * y for x, y in zip(H[a], H[b])) == 0
            # the bases are the column sets; distinct blocks meet at |dot|
            # sqrt(m) while every column meets the identity basis at +-1
            for H, K in itertools.combinations(mub.hadamards, 2):
                for a in range(m):
                    for b in range(m):
                        dot = sum(H[k][a] * K[k][b] for k in range(m))
                        assert abs(dot) == root

    def test_exponent_one_family_is_maximal(self):
        # exhaustive: no further +-1 row is unbiased to both matrices, so no
        # third Hadamard basis can join the dimension-4 family
        mub = real_mub_complete(1)
        stored = [tuple(H[k][a] for k in range(4))
                  for H in mub.hadamards for a in range(4)]
        cands = []
        for bits in range(16):
            v = tuple(1 if bits >> k & 1 else -1 for k in range(4))
            if all(abs(sum(x * y for x, y in zip(v, c))) == 2 for c in stored):
                cands.append(v)
        for quad in itertools.combinations(cands, 4):
            orthogonal = all(
                sum(x * y for x, y in zip(u, v)) == 0
                for u, v in itertools.combinations(quad, 2))
            assert not orthogonal

    def test_unsupported_exponent(self):
        with pytest.raises(UnsupportedExponentError):
            real_mub_complete(0)
        with pytest.raises(UnsupportedExponentError):
            real_mub_complete(3)


class TestUnbiasedBasisLines:
    CASES = {
        (1, "a", None): (12, 7, 3),
        (1, "b", None): (11, 6, 3),
        (2, "a", None): (144, 25, 5),
        (2, "b", None): (143, 24, 5),
        (2, "c", 2): (32, 17, 5),
    }

    def test_counts_and_ranks(self):
        for (i, variant, j), (count, dim, inv) in self.CASES.items():
            ls = unbiased_basis_lines(i, variant, j)
            assert (ls.count, ls.dimension_ambient, ls.angle_inv) == \
                (count, dim, inv)
            assert ls.angle == Fraction(1, inv)

    def test_rank_oracle(self):
        ls = unbiased_basis_lines(1, "a")
        assert rank_by_fractions([list(v) for v in ls.vectors]) == 7

    def test_variant_parameter_rules(self):
        with pytest.raises(BadVariantParamsError):
            unbiased_basis_lines(1, "a", j=1)
        with pytest.raises(BadVariantParamsError):
            unbiased_basis_lines(1, "c")
        with pytest.raises(BadVariantParamsError):
            unbiased_basis_lines(1, "c", j=9)
        with pytest.raises(BadVariantParamsError):
            unbiased_basis_lines(1, "z")

    def test_dimension_lower_bound_consistency(self):
        # the closed form at d = 25 is witnessed by the variant-a system
        assert mub_dimension_lower(25) == unbiased_basis_lines(2, "a").count
        with pytest.raises(DimensionTooSmallError):
            mub_dimension_lower(24)
        values = [mub_dimension_lower(d) for d in range(25, 200)]
        assert values == sorted(values)

    def test_quadratic_lower_bound_growth(self):
        values = [quadratic_lower_bound(d) for d in range(2, 300)]
        assert values == sorted(values)
        # pinned outputs, guarding against regressions in the floor handling
        assert quadratic_lower_bound(23) == 23
        assert quadratic_lower_bound(96) == 300


class TestNamedLineSystems:
    EXPECTED = {
        netto_sts19_system: (48, 17, "{[-5]^31,[7]^8,[11]^9}"),
        witt_octad_system: (72, 19, "{[-5]^53,[13]^16,[19]^3}"),
        two_graph_36_deletion_system: (28, 14, "{[-5]^14,[3]^7,[7]^7}"),
        hadamard16_system: (16, 10, "{[-5]^6,[3]^10}"),
    }

    @pytest.mark.parametrize("builder", list(EXPECTED))
    def test_count_dimension_spectrum(self, builder):
        count, dim, spec = self.EXPECTED[builder]
        ls = builder()
        assert ls.count == count
        assert ls.dimension_ambient == dim
        assert ls.angle_inv == 5
        assert spec_of(ls.seidel()) == spec

    @pytest.mark.parametrize("builder", list(EXPECTED))
    def test_gram_shape(self, builder):
        ls = builder()
        g = ls.gram()
        c = ls.scale // ls.angle_inv
        assert ls.scale % ls.angle_inv == 0
        for i in range(ls.count):
            assert g[i][i] == ls.scale
            for j in range(i + 1, ls.count):
                assert abs(g[i][j]) == c

    @pytest.mark.parametrize("builder", list(EXPECTED))
    def test_rank_matches_ambient_dimension(self, builder):
        ls = builder()
        assert rank_by_fractions([list(v) for v in ls.vectors]) == \
            ls.dimension_ambient

    @pytest.mark.parametrize("builder", list(EXPECTED))
    def test_json_round_trip(self, builder):
        ls = builder()
        again = LineSystem.from_json(ls.to_json())
        assert again == ls


class TestLineSystemConstructor:
    def test_rebuild_from_vectors(self):
        ls = unbiased_basis_lines(1, "b")
        again = line_system(ls.vectors)
        assert again == ls

    def test_subset_of_lines(self):
        ls = hadamard16_system()
        sub = line_system(ls.vectors[:5])
        assert sub.count == 5
        assert sub.angle_inv == 5
        assert sub.dimension_ambient <= ls.dimension_ambient

    def test_rejections(self):
        with pytest.raises(ValidationError):
            line_system([(1, 0), (0, 1), (1, 1)])  # mixed norms
        with pytest.raises(ValidationError):
            line_system([(1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 0, 0)])
        with pytest.raises(ValidationError):
            # common angle 1/2 has no odd inverse
            line_system([(1, 1, 0), (1, 0, 1), (0, 1, 1)])


class TestTwoEigenvalueSystems:
    def test_regular_two_graph_36(self):
        S = regular_two_graph_36()
        assert S.n == 36
        assert spec_of(S) == "{[-5]^21,[7]^15}"
        # minimal polynomial check: (S + 5I)(S - 7I) = 0
        sq = matmul(S.rows, S.rows)
        for i in range(36):
            for j in range(36):
                expect = 35 if i == j else 0
                assert sq[i][j] - 2 * S.rows[i][j] == expect

    def test_lines_from_two_eigenvalue_matrix(self):
        ls = two_eigenvalue_line_system(regular_two_graph_36())
        assert (ls.count, ls.dimension_ambient, ls.angle_inv) == (36, 15, 5)
        # 36 meets the two-eigenvalue equality case of the relative bound
        assert ls.count == bounds.relative_bound(15, Fraction(1, 5))
        h = hadamard16_system()
        again = two_eigenvalue_line_system(h.seidel())
        assert again.seidel() == h.seidel()

    def test_requires_two_eigenvalues(self):
        with pytest.raises(NotTwoEigenvalueError):
            two_eigenvalue_line_system(paley(9))


class TestBlowupsAndTriangles:
    def test_small_blowup_spectra(self):
        b = tensor_blowup(core.SeidelMatrix.all_plus(2), 2)
        assert spec_of(b) == "{[-3]^1,[1]^3}"
        b = tensor_blowup(core.SeidelMatrix.all_plus(3), 2)
        assert spec_of(b) == "{[-3]^2,[1]^3,[3]^1}"

    def test_blowup_order(self):
        assert tensor_blowup(paley(5), 3).n == 15

    def test_triangle_forest(self):
        S = dynkin_triangles(10)
        assert S.n == 13
        assert spectra.min_eigenvalue_multiplicity(S, -5) == 10

    def test_triangle_forest_scales(self):
        # the certification must stay cheap at table-sized dimensions
        S = dynkin_triangles(186)
        assert S.n == 277

    def test_triangle_forest_domain(self):
        for d in (4, 5, 7, 11):
            with pytest.raises(BadDimensionError):
                dynkin_triangles(d)


class TestGolayAndWitt:
    def test_octads(self):
        octads = golay_octads()
        assert len(octads) == 759
        assert all(bin(o).count("1") == 8 for o in octads)
        meets = {bin(a & b).count("1")
                 for a, b in itertools.combinations(octads, 2)}
        assert meets == {0, 2, 4}

    def test_icosahedron(self):
        g = icosahedron()
        assert g.n == 12
        assert g.edge_count() == 30
        assert set(g.degrees()) == {5}
        a3 = matmul(matmul(g.rows, g.rows), g.rows)
        assert sum(a3[i][i] for i in range(12)) == 120  # 20 triangles


class TestCliqueSurgery:
    def test_find_and_verify(self):
        S = conference_two_graph(25)
        switched, verts = find_switchable_plus_clique(S, 6)
        assert len(verts) == 6
        for a in verts:
            for b in verts:
                if a != b:
                    assert switched.rows[a][b] == 1
        key = classify.switching_class_key
        assert key(switched, limit=26) == key(S, limit=26)

    def test_deletion_keeps_floor(self):
        D = delete_switchable_clique(conference_two_graph(25), 6)
        assert D.n == 20
        assert spectra.min_eigenvalue_multiplicity(D, -5) == 12

    def test_not_found(self):
        with pytest.raises(CliqueNotFoundError):
            find_switchable_plus_clique(paley(5), 4)


class TestExtensions:
    def test_triangle_completes_to_tetrahedron(self):
        out = extend_system(core.SeidelMatrix.all_plus(3), -1)
        assert len(out) == 1
        assert spec_of(out[0]) == "{[-1]^3,[3]^1}"

    def test_extension_classes_contain_base(self):
        base = hadamard16_system().seidel()
        out = extend_system(base, -5, count=1)
        assert len(out) == 2
        key = classify.switching_class_key
        base_key = key(base, limit=16)
        for T in out:
            assert T.n == 17
            assert spectra.all_eigenvalues_at_least(T, -5)
            deletions = {key(spectra.delete_clique(T, (v,)), limit=16)
                         for v in range(17)}
            assert base_key in deletions

    def test_two_step_extension(self):
        base = hadamard16_system().seidel()
        out = extend_system(base, -5, count=2)
        assert len(out) == 14
        dims = sorted(spectra.min_eigenvalue_multiplicity(T, -5) for T in out)
        assert dims.count(11) == 1

    def test_twelve_line_classes_are_maximal(self):
        classes = twelve_line_maximal_classes()
        assert len(classes) == 4
        keys = {classify.switching_class_key(T, limit=12) for T in classes}
        assert len(keys) == 4
        for T in classes:
            assert T.n == 12
            assert spectra.min_eigenvalue_multiplicity(T, -5) == 9
            assert extend_system(T, -5, min_multiplicity=4) == []

    @pytest.mark.skipif(not LONG, reason="set SEIDEL_LONG_TESTS=1 to run")
    def test_search_recovers_stored_classes(self):
        found = search_twelve_line_classes()
        key = classify.switching_class_key
        assert {key(T, limit=12) for T in found} == \
            {key(T, limit=12) for T in twelve_line_maximal_classes()}
