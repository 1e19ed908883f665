"""Explicit equiangular line systems and the Seidel matrices behind them.

Every construction here is exact.  A LineSystem stores integer vectors that
all share one squared length ``scale`` and whose pairwise inner products are
``±scale/angle_inv``; dividing by sqrt(scale) turns them into unit vectors
spanning lines at common angle arccos(1/angle_inv).  Sources of systems:

* complete sets of real mutually unbiased bases (``real_mub_complete``,
  ``unbiased_basis_lines``) and the closed-form lower bounds they imply,
* quadratic-residue matrices (``paley``, ``conference_two_graph``),
* a symmetric Hadamard matrix of order 16 (``hadamard16_system``),
* triangle forests (``dynkin_triangles``) and blowups (``tensor_blowup``),
* triple systems and designs (``netto_sts19_system``, ``witt_octad_system``,
  ``regular_two_graph_36`` and its clique deletion),
* an exact one-line extension search (``extend_system``) together with the
  four maximal order-12 systems at angle 1/5 it certifies.

Numeric claims (line counts, ambient ranks, spectra) are verified on
construction with integer arithmetic; a construction that cannot certify
itself raises instead of returning.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Optional, Sequence

from . import algnum, classify, core, intpoly, spectra
from .errors import (
    BadDimensionError,
    BadOrderError,
    BadVariantParamsError,
    CliqueNotFoundError,
    ConstructionError,
    DimensionTooSmallError,
    GolayConstructionError,
    NotTwoEigenvalueError,
    UnsupportedExponentError,
    ValidationError,
)

__all__ = [
    "LineSystem",
    "MubSet",
    "line_system",
    "two_eigenvalue_line_system",
    "real_mub_complete",
    "unbiased_basis_lines",
    "mub_dimension_lower",
    "quadratic_lower_bound",
    "paley",
    "conference_two_graph",
    "tensor_blowup",
    "hadamard16_system",
    "dynkin_triangles",
    "netto_sts19_system",
    "icosahedron",
    "golay_octads",
    "witt_octad_system",
    "regular_two_graph_36",
    "find_switchable_plus_clique",
    "delete_switchable_clique",
    "two_graph_36_deletion_system",
    "extend_system",
    "twelve_line_maximal_classes",
    "search_twelve_line_classes",
]


# ---------------------------------------------------------------------------
# line systems


@dataclass(frozen=True)
class LineSystem:
    """Equiangular lines as integer vectors of common squared length.

    ``vectors[k]`` stands for the unit vector vectors[k]/sqrt(scale); all
    pairwise inner products equal ±scale/angle_inv exactly, so the spanned
    lines meet pairwise at angle arccos(1/angle_inv).
    """

    vectors: tuple[tuple[int, ...], ...]
    scale: int
    angle_inv: int

    def __post_init__(self):
        object.__setattr__(
            self, "vectors", tuple(tuple(int(x) for x in v) for v in self.vectors)
        )
        _validate_line_system(self)

    @property
    def count(self) -> int:
        return len(self.vectors)

    @property
    def angle(self) -> Fraction:
        return Fraction(1, self.angle_inv)

    @property
    def dimension_ambient(self) -> int:
        """Rank of the vector matrix: the dimension the lines actually span."""
        r = getattr(self, "_rank", None)
        if r is None:
            r = core.rank_exact([list(v) for v in self.vectors])
            object.__setattr__(self, "_rank", r)
        return r

    def gram(self) -> list[list[int]]:
        return [[_dot(u, v) for v in self.vectors] for u in self.vectors]

    def seidel(self) -> core.SeidelMatrix:
        """Sign pattern of the inner products: G*angle_inv/scale - angle_inv*I."""
        c = self.scale // self.angle_inv
        return core.SeidelMatrix(
            [
                [0 if i == j else _dot(u, v) // c for j, v in enumerate(self.vectors)]
                for i, u in enumerate(self.vectors)
            ]
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "scale": self.scale,
                "angle_inv": self.angle_inv,
                "vectors": [list(v) for v in self.vectors],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "LineSystem":
        data = json.loads(text)
        return cls(
            tuple(tuple(row) for row in data["vectors"]),
            int(data["scale"]),
            int(data["angle_inv"]),
        )

    def __repr__(self):
        return (
            f"LineSystem(count={self.count}, scale={self.scale}, "
            f"angle_inv={self.angle_inv})"
        )


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _validate_line_system(sys: LineSystem) -> None:
    vecs = sys.vectors
    if len(vecs) < 2:
        raise ValidationError("a line system needs at least two vectors")
    width = len(vecs[0])
    if any(len(v) != width for v in vecs):
        raise ValidationError("vectors have mixed lengths")
    if sys.scale <= 0:
        raise ValidationError("scale must be positive")
    if sys.angle_inv < 3 or sys.angle_inv % 2 == 0:
        raise ValidationError("angle_inv must be an odd integer >= 3")
    if sys.scale % sys.angle_inv:
        raise ValidationError("scale must be divisible by angle_inv")
    c = sys.scale // sys.angle_inv
    for i, u in enumerate(vecs):
        if _dot(u, u) != sys.scale:
            raise ValidationError(f"vector {i} has squared norm != scale")
        for j in range(i + 1, len(vecs)):
            ip = _dot(u, vecs[j])
            if ip != c and ip != -c:
                raise ValidationError(
                    f"inner product of vectors {i},{j} is {ip}, expected ±{c}"
                )


def line_system(vectors: Iterable[Sequence[int]]) -> LineSystem:
    """Build a LineSystem inferring scale and angle from the Gram matrix."""
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if len(vecs) < 2:
        raise ValidationError("a line system needs at least two vectors")
    scale = _dot(vecs[0], vecs[0])
    ip = abs(_dot(vecs[0], vecs[1]))
    if ip == 0 or scale % ip:
        raise ValidationError("inner products do not divide the common norm")
    return LineSystem(tuple(vecs), scale, scale // ip)


def two_eigenvalue_line_system(S: core.SeidelMatrix) -> LineSystem:
    """Realize a Seidel matrix with two integer eigenvalues as a LineSystem.

    The minimal polynomial gives S² = (lam0+lam1)S - lam0*lam1*I, so the
    rows V of -lam0*I + S satisfy V·Vᵀ = (lam1-lam0)·(-lam0*I + S): constant
    squared norm -lam0(lam1-lam0) and inner products ±(lam1-lam0).
    """
    lam0, lam1 = _two_integer_eigenvalues(S)
    rows = [
        [(-lam0 if i == j else 0) + S.rows[i][j] for j in range(S.n)]
        for i in range(S.n)
    ]
    return LineSystem(tuple(tuple(r) for r in rows), -lam0 * (lam1 - lam0), -lam0)


def _two_integer_eigenvalues(S: core.SeidelMatrix) -> tuple[int, int]:
    """The pair (lam0, lam1), lam0 < 0 < lam1, or NotTwoEigenvalueError."""
    p = core.charpoly_exact(S).as_list()
    roots, rest = intpoly.integer_roots(p)
    if rest != [1] or len(roots) != 2:
        raise NotTwoEigenvalueError(
            f"matrix of order {S.n} does not have exactly two integer eigenvalues"
        )
    lam0, lam1 = sorted(roots)
    if not lam0 < 0 < lam1:
        raise NotTwoEigenvalueError(f"eigenvalues {lam0},{lam1} do not straddle 0")
    return lam0, lam1


# ---------------------------------------------------------------------------
# mutually unbiased bases


@dataclass(frozen=True)
class MubSet:
    """m/2 pairwise-unbiased ±1 Hadamard matrices of order m = 4^i.

    Each H represents sqrt(m) times an orthogonal basis; together with the
    identity basis they form a complete set of real mutually unbiased bases.
    Definitional invariants, checked exactly on construction: HᵀH = mI,
    every entry of HjᵀHk (j≠k) is ±2^i, and each first row is all-ones.
    """

    m: int
    hadamards: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        m, i = self.m, self.exponent
        if 4**i != m:
            raise ValidationError("order must be a power of 4")
        if len(self.hadamards) != m // 2:
            raise ValidationError(f"expected {m // 2} matrices, got {len(self.hadamards)}")
        root = 1 << i
        for H in self.hadamards:
            if len(H) != m or any(len(r) != m for r in H):
                raise ValidationError("matrix is not square of order m")
            if any(x != 1 and x != -1 for r in H for x in r):
                raise ValidationError("entries must be ±1")
            if any(x != 1 for x in H[0]):
                raise ValidationError("first row must be all-ones")
            _check_product_entries(H, H, m, diag=m)
        for Ha, Hb in itertools.combinations(self.hadamards, 2):
            _check_product_entries(Ha, Hb, m, unbiased=root)

    @property
    def exponent(self) -> int:
        return (self.m.bit_length() - 1) // 2

    @property
    def count(self) -> int:
        return len(self.hadamards)


def _check_product_entries(Ha, Hb, m: int, diag: int = 0, unbiased: int = 0) -> None:
    """Entries of HaᵀHb: m·I for a basis with itself, ±sqrt(m) across bases."""
    cols_a = list(zip(*Ha))
    cols_b = list(zip(*Hb))
    for x, ca in enumerate(cols_a):
        for y, cb in enumerate(cols_b):
            ip = _dot(ca, cb)
            if diag:
                want = diag if x == y else 0
                if ip != want:
                    raise ValidationError(f"HᵀH entry ({x},{y}) is {ip}, want {want}")
            elif ip != unbiased and ip != -unbiased:
                raise ValidationError(
                    f"cross product entry ({x},{y}) is {ip}, want ±{unbiased}"
                )


def _alternating_forms(t: int) -> list[tuple[int, ...]]:
    """All symmetric zero-diagonal binary t×t matrices, as row bitmasks."""
    pairs = [(u, v) for u in range(t) for v in range(u + 1, t)]
    out = []
    for bits in range(1 << len(pairs)):
        rows = [0] * t
        for k, (u, v) in enumerate(pairs):
            if (bits >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        out.append(tuple(rows))
    return out


def _gf2_nonsingular(rows: Sequence[int], t: int) -> bool:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r == 0:
            return False
        basis.append(r)
    return len(basis) == t


def _binary_form_family(t: int) -> list[tuple[int, ...]]:
    """2^(t-1) alternating forms whose pairwise sums are nonsingular.

    Depth-first search in lexicographic order; the first complete family is
    returned, so the result is deterministic.
    """
    forms = _alternating_forms(t)
    want = 1 << (t - 1)
    chosen: list[tuple[int, ...]] = []

    def ok(cand: tuple[int, ...]) -> bool:
        return all(
            _gf2_nonsingular([a ^ b for a, b in zip(cand, prev)], t) for prev in chosen
        )

    def extend(start: int) -> bool:
        if len(chosen) == want:
            return True
        for idx in range(start, len(forms)):
            if ok(forms[idx]):
                chosen.append(forms[idx])
                if extend(idx + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise ConstructionError(f"no family of {want} alternating forms at t={t}")
    return chosen


def real_mub_complete(i: int) -> MubSet:
    """A complete set of real mutually unbiased bases in dimension m = 4^i.

    Built from a family of binary alternating forms P: the Hadamard matrix of
    form P has entries (-1)^(Q_P(x) + x·y) with Q_P(x) the quadratic form of
    P, and distinct members stay unbiased because the sum of their forms is
    nonsingular.  Supported exponents: i = 1 and i = 2.
    """
    if i not in (1, 2):
        raise UnsupportedExponentError(f"exponent {i} not supported (use 1 or 2)")
    t = 2 * i
    m = 1 << t
    mats = []
    for P in _binary_form_family(t):
        quad = [0] * m
        for x in range(m):
            q = 0
            for u in range(t):
                if (x >> u) & 1:
                    q ^= ((P[u] & x) >> (u + 1)).bit_count() & 1
            quad[x] = q
        H = tuple(
            tuple(
                -1 if (quad[x] ^ ((x & y).bit_count() & 1)) else 1 for y in range(m)
            )
            for x in range(m)
        )
        mats.append(H)
    return MubSet(m, tuple(mats))


def unbiased_basis_lines(i: int, variant: str, j: Optional[int] = None) -> LineSystem:
    """Lines spanned by the basis vectors of a complete real MUB family.

    The vectors are the scaled basis columns: block 0 holds 2^i times the
    identity basis, block k holds the columns of the k-th Hadamard matrix,
    and each block gets its own slot coordinate(s) contributing 2^i to every
    squared norm so that same-block products match the cross-block ±2^i.

    variant "a": all m/2+1 blocks, m(m/2+1) lines spanning 3m/2+1 dimensions.
    variant "b": variant a minus its first column; one line fewer, rank 3m/2.
    variant "c": Hadamard blocks 1..j only, mj lines spanning m+j-1 dimensions.
    """
    mub = real_mub_complete(i)
    m = mub.m
    if variant in ("a", "b"):
        if j is not None:
            raise BadVariantParamsError(f"variant {variant} takes no block count")
        nblocks = m // 2 + 1
    elif variant == "c":
        if j is None or not 1 <= j <= m // 2:
            raise BadVariantParamsError(f"variant c needs 1 <= j <= {m // 2}")
        nblocks = j
    else:
        raise BadVariantParamsError(f"unknown variant {variant!r}")

    # slot coordinates add exactly 2^i to each squared norm
    slot_vals = [1 << (i // 2)] if i % 2 == 0 else [1 << ((i - 1) // 2)] * 2
    per_block = len(slot_vals)
    width = m + nblocks * per_block

    def with_slot(top: list[int], block: int) -> tuple[int, ...]:
        vec = top + [0] * (nblocks * per_block)
        for s, val in enumerate(slot_vals):
            vec[m + block * per_block + s] = val
        return tuple(vec)

    vectors: list[tuple[int, ...]] = []
    if variant in ("a", "b"):
        for x in range(m):
            top = [0] * m
            top[x] = 1 << i
            vectors.append(with_slot(top, 0))
        for k, H in enumerate(mub.hadamards, start=1):
            for y in range(m):
                vectors.append(with_slot([H[x][y] for x in range(m)], k))
        if variant == "b":
            vectors.pop(0)
    else:
        for k, H in enumerate(mub.hadamards[:j], start=0):
            for y in range(m):
                vectors.append(with_slot([H[x][y] for x in range(m)], k))

    sys = LineSystem(tuple(vectors), m + (1 << i), (1 << i) + 1)
    expect_count = {"a": m * (m // 2 + 1), "b": m * (m // 2 + 1) - 1, "c": m * (j or 0)}
    expect_rank = {"a": 3 * m // 2 + 1, "b": 3 * m // 2, "c": m + (j or 0) - 1}
    if sys.count != expect_count[variant]:
        raise ConstructionError(f"line count {sys.count} != {expect_count[variant]}")
    if sys.dimension_ambient != expect_rank[variant]:
        raise ConstructionError(
            f"ambient rank {sys.dimension_ambient} != {expect_rank[variant]}"
        )
    assert width == len(sys.vectors[0])
    return sys


def mub_dimension_lower(d: int) -> int:
    """Closed-form count of lines at angle 1/(2^i+1) available in dimension d.

    Uses the best unbiased-basis system fitting in d dimensions, where m is
    the unique power of 4 with 3m/2+1 <= d <= 6m (the intervals tile the
    integers): the full system for small d, a truncated next-size system in
    the middle range, and the next-size system minus one line at d = 6m.
    """
    if d < 25:
        raise DimensionTooSmallError(f"closed form needs d >= 25, got {d}")
    m = 16
    while 6 * m < d:
        m *= 4
    if 8 * d <= 33 * m - 8:
        return m * (m // 2 + 1)
    if d == 6 * m:
        return 4 * m * (2 * m + 1) - 1
    return 4 * m * (d - 4 * m + 1)


def quadratic_lower_bound(d: int) -> int:
    """ceil((32d² + 328d + 296)/1089) lines in dimension d, valid for d >= 2.

    A quadratic consequence of the unbiased-basis family: weaker than
    mub_dimension_lower pointwise but defined for every d >= 2.
    """
    if d < 2:
        raise DimensionTooSmallError(f"need d >= 2, got {d}")
    num = 32 * d * d + 328 * d + 296
    return -(-num // 1089)


# ---------------------------------------------------------------------------
# quadratic-residue matrices


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise BadOrderError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    if q != 1:
        raise BadOrderError("order is not a prime power")
    return p, k


class _GF:
    """Arithmetic in GF(p^k); elements are coefficient tuples of length k."""

    def __init__(self, p: int, k: int):
        self.p, self.k = p, k
        self.modulus = self._irreducible()

    def _irreducible(self) -> tuple[int, ...]:
        p, k = self.p, self.k
        if k == 1:
            return (0, 1)
        for tail in itertools.product(range(p), repeat=k):
            cand = tail + (1,)
            if not any(
                self._divides(div + (1,), cand)
                for deg in range(1, k // 2 + 1)
                for div in itertools.product(range(p), repeat=deg)
            ):
                return cand
        raise BadOrderError(f"no irreducible polynomial of degree {k} mod {p}")

    def _divides(self, div: tuple[int, ...], poly: tuple[int, ...]) -> bool:
        p = self.p
        rem = list(poly)
        dd = len(div) - 1
        for top in range(len(rem) - 1, dd - 1, -1):
            c = rem[top] % p
            if c:
                for s in range(dd + 1):
                    rem[top - dd + s] = (rem[top - dd + s] - c * div[s]) % p
        return all(c % p == 0 for c in rem)

    def elements(self) -> list[tuple[int, ...]]:
        return [tuple(reversed(t)) for t in itertools.product(range(self.p), repeat=self.k)]

    def sub(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p, k, mod = self.p, self.k, self.modulus
        prod = [0] * (2 * k - 1)
        for s, x in enumerate(a):
            if x:
                for t, y in enumerate(b):
                    prod[s + t] = (prod[s + t] + x * y) % p
        for top in range(len(prod) - 1, k - 1, -1):
            c = prod[top]
            if c:
                for s in range(k + 1):
                    prod[top - k + s] = (prod[top - k + s] - c * mod[s]) % p
        return tuple(prod[:k])


def paley(q: int) -> core.SeidelMatrix:
    """Quadratic-residue Seidel matrix of prime-power order q ≡ 1 (mod 4).

    Entry (x, y) is +1 when x - y is a nonzero square in GF(q); the spectrum
    {[-sqrt(q)]^((q-1)/2), [0]^1, [sqrt(q)]^((q-1)/2)} is certified exactly.
    """
    p, k = _factor_prime_power(q)
    if q % 4 != 1:
        raise BadOrderError(f"order {q} is not 1 mod 4")
    field = _GF(p, k)
    elems = field.elements()
    squares = {field.mul(e, e) for e in elems if any(e)}
    rows = [
        [
            0 if i == j else (1 if field.sub(a, b) in squares else -1)
            for j, b in enumerate(elems)
        ]
        for i, a in enumerate(elems)
    ]
    S = core.SeidelMatrix(rows)
    root = algnum.surd(0, 1, q)
    half = (q - 1) // 2
    spectra.certify_spectrum(
        S, spectra.spectrum([(algnum.surd(0, -1, q), half), (0, 1), (root, half)])
    )
    return S


def conference_two_graph(q: int) -> core.SeidelMatrix:
    """Order q+1 Seidel matrix with spectrum {[-sqrt(q)], [sqrt(q)]} halved.

    Borders paley(q) by an all-ones row and column; the result squares to qI,
    giving eigenvalues ±sqrt(q) with equal multiplicities (q+1)/2.
    """
    P = paley(q)
    n = q + 1
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[0][i] = rows[i][0] = 1
        for j in range(1, n):
            rows[i][j] = P.rows[i - 1][j - 1]
    S = core.SeidelMatrix(rows)
    half = (q + 1) // 2
    spectra.certify_spectrum(
        S,
        spectra.spectrum([(algnum.surd(0, -1, q), half), (algnum.surd(0, 1, q), half)]),
    )
    return S


# ---------------------------------------------------------------------------
# blowups and small explicit systems


def tensor_blowup(S: core.SeidelMatrix, b: int) -> core.SeidelMatrix:
    """Replace each line of a two-eigenvalue system by b parallel copies.

    The matrix is J_b ⊗ (S - I_a) + I_ab.  From spectrum {[lam0]^(a-c),
    [lam1]^c} it produces {[b(lam0-1)+1]^(a-c), [1]^(a(b-1)), [b(lam1-1)+1]^c}
    (coincident values merge), certified on construction.
    """
    if b < 2:
        raise BadOrderError(f"blowup factor must be >= 2, got {b}")
    lam0, lam1 = _two_integer_eigenvalues(S)
    a = S.n
    n = a * b
    rows = [[0] * n for _ in range(n)]
    for k in range(b):
        for l in range(b):
            for i in range(a):
                for j in range(a):
                    if i == j:
                        rows[k * a + i][l * a + j] = 0 if k == l else -1
                    else:
                        rows[k * a + i][l * a + j] = S.rows[i][j]
    R = core.SeidelMatrix(rows)
    spec_S = spectra.spectrum_exact(S)
    c = spec_S.multiplicity(lam1)
    pairs: dict[int, int] = {}
    for value, mult in (
        (b * (lam0 - 1) + 1, a - c),
        (1, a * (b - 1)),
        (b * (lam1 - 1) + 1, c),
    ):
        pairs[value] = pairs.get(value, 0) + mult
    spectra.certify_spectrum(R, spectra.spectrum(sorted(pairs.items())))
    return R


def hadamard16_system() -> LineSystem:
    """16 lines in dimension 10 at angle 1/5.

    H = (J4 - 2I4) ⊗ (J4 - 2I4) is a symmetric Hadamard matrix of order 16
    with constant diagonal, so S = H - I is a Seidel matrix with the two
    eigenvalues {[-5]^6, [3]^10}.
    """
    K = [[1 if i != j else -1 for j in range(4)] for i in range(4)]
    rows = [
        [
            K[i // 4][j // 4] * K[i % 4][j % 4] - (1 if i == j else 0)
            for j in range(16)
        ]
        for i in range(16)
    ]
    S = core.SeidelMatrix(rows)
    spectra.certify_spectrum(S, spectra.spectrum([(-5, 6), (3, 10)]))
    sys = two_eigenvalue_line_system(S)
    if (sys.count, sys.dimension_ambient, sys.angle_inv) != (16, 10, 5):
        raise ConstructionError("hadamard16 system failed its shape check")
    return sys


def dynkin_triangles(d: int) -> core.SeidelMatrix:
    """Seidel matrix of (d-2)/2 disjoint triangles plus one isolated vertex.

    For even d >= 6 this gives 3(d-2)/2 + 1 lines whose smallest eigenvalue
    is -5 with multiplicity (d-2)/2 - 1, hence lines spanning d dimensions.
    """
    if d < 6 or d % 2:
        raise BadDimensionError(f"triangle family needs even d >= 6, got {d}")
    t = (d - 2) // 2
    n = 3 * t + 1
    adj = [[0] * n for _ in range(n)]
    for k in range(t):
        for a, b in ((0, 1), (0, 2), (1, 2)):
            adj[3 * k + a][3 * k + b] = adj[3 * k + b][3 * k + a] = 1
    S = core.seidel_of_graph(core.AmbientGraph(adj))
    _certify_triangle_spectrum(S, t)
    return S


def _certify_triangle_spectrum(S: core.SeidelMatrix, t: int) -> None:
    """Exact eigenbasis check, cheap enough for orders in the hundreds.

    Sum-zero triangle-constant vectors give -5 with multiplicity t - 1 and
    within-triangle sum-zero vectors give 1 with multiplicity 2t; these sets
    have disjoint leading supports, so independence is free.  The remaining
    two eigenvalues come from the block on (triangle sum, lone vertex).
    """
    n = S.n
    rows = S.rows

    def image(vec):
        support = [j for j, x in enumerate(vec) if x]
        return [sum(rows[i][j] * vec[j] for j in support) for i in range(n)]

    for k in range(1, t):
        vec = [0] * n
        for a in range(3):
            vec[a] = 1
            vec[3 * k + a] = -1
        if image(vec) != [-5 * x for x in vec]:
            raise ConstructionError("lost the -5 eigenspace")
    for k in range(t):
        for pat in ((1, -1, 0), (1, 0, -1)):
            vec = [0] * n
            for a in range(3):
                vec[3 * k + a] = pat[a]
            if image(vec) != vec:
                raise ConstructionError("lost the eigenvalue-1 space")
    # S u = (3t-5) u + 3t w and S w = u on u = triangle sum, w = lone
    # vertex, so the last two eigenvalues solve x^2 - (3t-5)x - 3t = 0;
    # both exceed -5 because the value there, 12t, is positive and the
    # root sum 3t-5 is above -10.  With (t-1) + 2t + 2 = n directions
    # accounted for, -5 has multiplicity exactly t - 1.
    u = [1] * (n - 1) + [0]
    w = [0] * (n - 1) + [1]
    expect_u = [(3 * t - 5) * a + 3 * t * b for a, b in zip(u, w)]
    if image(u) != expect_u or image(w) != u:
        raise ConstructionError("unexpected action on the constant block")


# ---------------------------------------------------------------------------
# triple systems and designs


def netto_sts19_system() -> LineSystem:
    """48 lines in dimension 17 at angle 1/5 from the Netto triple system.

    The 57 blocks {4^i·{1,7,11} + j mod 19} form a Steiner triple system on
    19 points; the 48 blocks avoiding point 1 give vectors 6e_B + e_1 - e_X
    (squared norm 90, inner products ±18) whose Seidel matrix has spectrum
    {[-5]^31, [7]^8, [11]^9}.
    """
    blocks = sorted(
        {
            tuple(sorted((c * pow(4, i, 19) + j) % 19 for c in (1, 7, 11)))
            for i in range(3)
            for j in range(19)
        }
    )
    if len(blocks) != 57:
        raise ConstructionError(f"expected 57 blocks, got {len(blocks)}")
    if any(sum(1 for B in blocks if p in B) != 9 for p in range(19)):
        raise ConstructionError("triple system is not 9-regular on points")
    kept = [B for B in blocks if 1 not in B]
    if len(kept) != 48:
        raise ConstructionError(f"expected 48 blocks avoiding 1, got {len(kept)}")
    vectors = tuple(
        tuple(6 * (p in B) + (p == 1) - 1 for p in range(19)) for B in kept
    )
    # orthogonal to e_1 and to the all-ones vector by construction
    if any(v[1] != 0 or sum(v) != 0 for v in vectors):
        raise ConstructionError("vectors lost orthogonality to e_1 or e_X")
    sys = LineSystem(vectors, 90, 5)
    spectra.certify_spectrum(
        sys.seidel(), spectra.spectrum([(-5, 31), (7, 8), (11, 9)])
    )
    if sys.dimension_ambient != 17:
        raise ConstructionError(f"ambient rank {sys.dimension_ambient} != 17")
    return sys


def icosahedron() -> core.AmbientGraph:
    """Adjacency matrix of the icosahedron: two 5-rings between two poles."""
    n = 12
    adj = [[0] * n for _ in range(n)]

    def edge(a: int, b: int) -> None:
        adj[a][b] = adj[b][a] = 1

    for k in range(5):
        edge(0, 1 + k)
        edge(11, 6 + k)
        edge(1 + k, 1 + (k + 1) % 5)
        edge(6 + k, 6 + (k + 1) % 5)
        edge(1 + k, 6 + k)
        edge(1 + k, 6 + (k + 1) % 5)
    return core.AmbientGraph(adj)


def _golay_codewords() -> list[int]:
    """The 4096 words of a [24,12,8] self-dual code, as 24-bit integers.

    Generator [I | B] with B the complemented icosahedron adjacency plus
    diagonal; the weight enumerator 1 + 759z^8 + 2576z^12 + 759z^16 + z^24
    is asserted, which pins the code up to equivalence.
    """
    A = icosahedron().rows
    gens = [
        (1 << i) | sum(1 << (12 + j) for j in range(12) if i == j or not A[i][j])
        for i in range(12)
    ]
    words = [0] * 4096
    for mask in range(1, 4096):
        low = (mask & -mask).bit_length() - 1
        words[mask] = words[mask & (mask - 1)] ^ gens[low]
    counts: dict[int, int] = {}
    for w in words:
        counts[w.bit_count()] = counts.get(w.bit_count(), 0) + 1
    if counts != {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}:
        raise GolayConstructionError(f"weight enumerator off: {sorted(counts.items())}")
    return words


def golay_octads() -> list[int]:
    """The 759 weight-8 codeword supports, as sorted 24-bit masks."""
    return sorted(w for w in _golay_codewords() if w.bit_count() == 8)


def witt_octad_system() -> LineSystem:
    """72 lines in dimension 19 at angle 1/5 from octads of the Witt design.

    Fixes reference octads B1, B2 avoiding point 0 with B1 ∩ B2 = {1, 2},
    then keeps the octads B through 0 avoiding 1 and 2 that meet each
    reference octad in exactly two points.  Vectors 4e_B - 4e_0 - e_X have
    squared norm 80 and inner products ±16; the Seidel spectrum is
    {[-5]^53, [13]^16, [19]^3}.
    """
    octads = golay_octads()
    if sum(1 for o in octads if o & 1) != 253:
        raise ConstructionError("point 0 should lie in 253 octads")
    avoiding = [o for o in octads if not (o & 1)]
    ref = next(
        (
            (o1, o2)
            for a, o1 in enumerate(avoiding)
            for o2 in avoiding[a + 1 :]
            if o1 & o2 == 0b110
        ),
        None,
    )
    if ref is None:
        raise ConstructionError("no octad pair meeting exactly in {1,2}")
    b1, b2 = ref
    kept = [
        o
        for o in octads
        if (o & 0b111) == 1
        and (o & b1).bit_count() == 2
        and (o & b2).bit_count() == 2
    ]
    if len(kept) != 72:
        raise ConstructionError(f"expected 72 selected octads, got {len(kept)}")
    vectors = tuple(
        tuple(4 * ((o >> p) & 1) - 4 * (p == 0) - 1 for p in range(24)) for o in kept
    )
    sys = LineSystem(vectors, 80, 5)
    spectra.certify_spectrum(
        sys.seidel(), spectra.spectrum([(-5, 53), (13, 16), (19, 3)])
    )
    if sys.dimension_ambient != 19:
        raise ConstructionError(f"ambient rank {sys.dimension_ambient} != 19")
    return sys


# ---------------------------------------------------------------------------
# the order-36 regular two-graph and its clique deletion


def _pg32_line_disjointness() -> core.AmbientGraph:
    """Disjointness graph of the 35 lines of the projective space PG(3,2).

    Points are the nonzero vectors of GF(2)^4, lines are the triples
    {a, b, a xor b}; the graph is strongly regular (35, 16, 6, 8).
    """
    lines = sorted(
        {
            tuple(sorted((a, b, a ^ b)))
            for a in range(1, 16)
            for b in range(a + 1, 16)
        }
    )
    assert len(lines) == 35
    masks = [sum(1 << p for p in line) for line in lines]
    n = 35
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not masks[i] & masks[j]:
                adj[i][j] = adj[j][i] = 1
    nbr = [sum(1 << j for j in range(n) if adj[i][j]) for i in range(n)]
    for i in range(n):
        if nbr[i].bit_count() != 16:
            raise ConstructionError("disjointness graph is not 16-regular")
        for j in range(i + 1, n):
            common = (nbr[i] & nbr[j]).bit_count()
            if common != (6 if adj[i][j] else 8):
                raise ConstructionError("disjointness graph is not SRG(35,16,6,8)")
    return core.AmbientGraph(adj)


def regular_two_graph_36() -> core.SeidelMatrix:
    """Order-36 Seidel matrix with the two eigenvalues {[-5]^21, [7]^15}.

    Borders the Seidel matrix of the PG(3,2) line-disjointness graph with an
    all-ones row and column at index 0.
    """
    P = core.seidel_of_graph(_pg32_line_disjointness())
    n = 36
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[0][i] = rows[i][0] = 1
        for j in range(1, n):
            rows[i][j] = P.rows[i - 1][j - 1]
    S = core.SeidelMatrix(rows)
    spectra.certify_spectrum(S, spectra.spectrum([(-5, 21), (7, 15)]))
    return S


def _lex_first_independent_set(nbr: Sequence[int], size: int) -> Optional[tuple[int, ...]]:
    """Lexicographically first independent set of the given size, or None."""
    n = len(nbr)
    chosen: list[int] = []

    def extend(allowed: int) -> bool:
        if len(chosen) == size:
            return True
        if allowed.bit_count() < size - len(chosen):
            return False
        rest = allowed
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            chosen.append(v)
            if extend(rest & ~nbr[v]):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if extend((1 << n) - 1) else None


def find_switchable_plus_clique(
    S: core.SeidelMatrix, size: int
) -> tuple[core.SeidelMatrix, tuple[int, ...]]:
    """Switch S so that some `size` rows pairwise carry +1 entries.

    For a root v, the pairs {u, w} whose triple with v has an odd number of
    -1 entries form a graph; an independent set C of size-1 such pairs plus
    v becomes an all-plus clique after switching the -1 neighbours of v.
    Returns the switched matrix and the clique rows, or raises
    CliqueNotFoundError if no root admits one.
    """
    n = S.n
    for v in range(n):
        others = [u for u in range(n) if u != v]
        pos = {u: k for k, u in enumerate(others)}
        nbr = [0] * (n - 1)
        for a, u in enumerate(others):
            for w in others[a + 1 :]:
                if S.rows[v][u] * S.rows[v][w] * S.rows[u][w] == -1:
                    nbr[pos[u]] |= 1 << pos[w]
                    nbr[pos[w]] |= 1 << pos[u]
        found = _lex_first_independent_set(nbr, size - 1)
        if found is None:
            continue
        rows = (v,) + tuple(others[k] for k in found)
        switched = core.switch_class_member(
            S, [u for u in range(n) if u != v and S.rows[v][u] == -1]
        )
        core.verify_plus_clique(switched, rows)
        return switched, rows
    raise CliqueNotFoundError(f"no switchable all-plus clique of size {size}")


def delete_switchable_clique(S: core.SeidelMatrix, size: int) -> core.SeidelMatrix:
    """Remove an all-plus clique of the given size from the switching class."""
    switched, rows = find_switchable_plus_clique(S, size)
    return spectra.delete_clique(switched, rows)


def two_graph_36_deletion_system() -> LineSystem:
    """28 lines in dimension 14 at angle 1/5.

    Deletes an 8-row all-plus clique from (a switch of) the order-36 regular
    two-graph; the remaining Seidel matrix has spectrum {[-5]^14, [3]^7,
    [7]^7} and the rows of 5I + S restricted to the kept indices realize it.
    """
    S36 = regular_two_graph_36()
    switched, rows = find_switchable_plus_clique(S36, 8)
    S28 = spectra.delete_clique(switched, rows)
    predicted, warnings = spectra.clique_deletion_spectrum(-5, 7, 36, 21, 8)
    if warnings:
        raise ConstructionError(f"clique size out of range: {warnings}")
    spectra.certify_spectrum(S28, predicted)
    if predicted != spectra.spectrum([(-5, 14), (3, 7), (7, 7)]):
        raise ConstructionError("deletion produced an unexpected spectrum")
    keep = [i for i in range(36) if i not in set(rows)]
    vectors = tuple(
        tuple((5 if i == j else 0) + switched.rows[i][j] for j in range(36))
        for i in keep
    )
    sys = LineSystem(vectors, 60, 5)
    if sys.dimension_ambient != 14:
        raise ConstructionError(f"ambient rank {sys.dimension_ambient} != 14")
    if sys.seidel() != S28:
        raise ConstructionError("realized Gram disagrees with the deleted matrix")
    return sys


# ---------------------------------------------------------------------------
# exact one-line extension search


def _rref_pivots_kernel(M: Sequence[Sequence[int]]) -> tuple[list[int], list[list[int]]]:
    """Pivot columns and an integer kernel basis of a symmetric matrix."""
    n = len(M)
    rows = [[Fraction(x) for x in r] for r in M]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, n) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    kernel: list[list[int]] = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -rows[ri][fc]
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        kernel.append([int(x * lcm) for x in vec])
    return pivots, kernel


def _scaled_inverse(M: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """(det(M) · M⁻¹, det(M)) for a nonsingular integer matrix, exactly."""
    d = core.det_exact([list(r) for r in M])
    if d == 0:
        raise ConstructionError("pivot submatrix is singular")
    k = len(M)
    aug = [[Fraction(M[i][j]) for j in range(k)] + [Fraction(i == j) for j in range(k)] for i in range(k)]
    for c in range(k):
        pr = next(i for i in range(c, k) if aug[i][c])
        aug[c], aug[pr] = aug[pr], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    scaled = [[aug[i][k + j] * d for j in range(k)] for i in range(k)]
    out = []
    for row in scaled:
        if any(x.denominator != 1 for x in row):
            raise ConstructionError("scaled inverse is not integral")
        out.append([int(x) for x in row])
    return out, d


def _border_extensions(
    S: core.SeidelMatrix, lam0: int, min_multiplicity: Optional[int]
) -> list[core.SeidelMatrix]:
    """All accepted one-row borders of S keeping eigenvalues >= lam0.

    The border column u (normalized u[0] = +1) is accepted iff u lies in the
    range of M = S - lam0·I and uᵀM⁺u <= -lam0, evaluated as the integer
    quadratic form u_Cᵀ(det·M_CC⁻¹)u_C <= -lam0·det over the pivot columns C.
    Equality adds one to the lam0 multiplicity.
    """
    n = S.n
    M = [
        [S.rows[i][j] - (lam0 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    if not spectra.is_psd(M):
        raise BadOrderError(f"{lam0} exceeds the smallest eigenvalue")
    pivots, kernel = _rref_pivots_kernel(M)
    mult_s = len(kernel)
    bprime, det = _scaled_inverse([[M[i][j] for j in pivots] for i in pivots])
    if det < 0:
        raise ConstructionError("pivot submatrix of a PSD matrix must have det > 0")
    bound = -lam0 * det
    in_c = {c: k for k, c in enumerate(pivots)}

    v = [1] * n
    kv = [sum(k_row) for k_row in kernel]
    w = [sum(bprime[a][b] for b in range(len(pivots))) for a in range(len(pivots))]
    q = sum(w)

    out = []

    def consider() -> None:
        if any(kv):
            return
        if q > bound:
            return
        mult_t = mult_s + (1 if q == bound else 0)
        if min_multiplicity is not None and mult_t < min_multiplicity:
            return
        rows = [list(r) + [v[i]] for i, r in enumerate(S.rows)] + [v + [0]]
        out.append(core.SeidelMatrix(rows))

    consider()
    for g in range(1, 1 << (n - 1)):
        j = (g & -g).bit_length()  # coordinate 0 stays +1
        old = v[j]
        v[j] = -old
        for r, k_row in enumerate(kernel):
            kv[r] -= 2 * old * k_row[j]
        cj = in_c.get(j)
        if cj is not None:
            q -= 4 * old * w[cj] - 4 * bprime[cj][cj]
            for a in range(len(w)):
                w[a] -= 2 * old * bprime[a][cj]
        consider()
    return out


def extend_system(
    S: core.SeidelMatrix,
    lam0: int,
    count: int = 1,
    min_multiplicity: Optional[int] = None,
) -> list[core.SeidelMatrix]:
    """Grow S by `count` lines keeping every eigenvalue >= lam0.

    Returns one canonical representative per switching class of extension,
    sorted deterministically; the empty list means no extension exists.
    With min_multiplicity set, only extensions whose lam0-eigenspace reaches
    that dimension are kept (at every step).
    """
    if count < 1:
        raise ValidationError("count must be >= 1")
    frontier = {classify.switching_class_key(S, limit=S.n): S}
    for _ in range(count):
        nxt: dict = {}
        for base in frontier.values():
            for T in _border_extensions(base, lam0, min_multiplicity):
                key = classify.switching_class_key(T, limit=T.n)
                if key not in nxt:
                    nxt[key] = classify.canonical_form(T, limit=T.n)
        frontier = nxt
        if not frontier:
            break
    return [frontier[k] for k in sorted(frontier)]


# ---------------------------------------------------------------------------
# the four maximal 12-line systems at angle 1/5


_ORDER12_RESOURCE = "angle5_order12.json"


def twelve_line_maximal_classes() -> list[core.SeidelMatrix]:
    """The four order-12 Seidel matrices with smallest eigenvalue -5 of
    multiplicity 3: twelve lines spanning dimension 9 at angle 1/5.

    Loaded from packaged data (see search_twelve_line_classes for the
    derivation) and re-certified on load.
    """
    text = (resources.files(__package__) / "data" / _ORDER12_RESOURCE).read_text()
    data = json.loads(text)
    out = []
    for masks in data["neg_masks"]:
        S = core.SeidelMatrix.from_neg_masks(masks, data["order"])
        if spectra.min_eigenvalue_multiplicity(S, -5) != 9:
            raise ConstructionError("packaged matrix lost its multiplicity")
        out.append(S)
    keys = {classify.switching_class_key(S) for S in out}
    if len(keys) != 4 or len(out) != 4:
        raise ConstructionError("packaged classes are not four distinct ones")
    return out


def search_twelve_line_classes() -> list[core.SeidelMatrix]:
    """Derive the four order-12 multiplicity-3 classes by breadth-first search.

    Start from every order-9 switching class with all eigenvalues >= -5 and
    extend one line at a time; a deleted row lowers the -5 multiplicity by at
    most one, so requiring multiplicity >= k-9 at order k loses nothing.
    Returns canonical representatives sorted by class key.
    """
    frontier: dict = {}
    for fp in classify.enumerate_switching_classes(9):
        S = fp.canonical_matrix
        if intpoly.all_roots_at_least(core.charpoly_exact(S).as_list(), -5):
            frontier[classify.switching_class_key(S)] = S
    for k in (10, 11, 12):
        nxt: dict = {}
        for base in frontier.values():
            for T in _border_extensions(base, -5, k - 9):
                key = classify.switching_class_key(T, limit=T.n)
                if key not in nxt:
                    nxt[key] = classify.canonical_form(T, limit=T.n)
        frontier = nxt
    for S in frontier.values():
        if spectra.min_eigenvalue_multiplicity(S, -5) != 9:
            raise ConstructionError("search produced a wrong multiplicity")
    return [frontier[k] for k in sorted(frontier)]
