"""Seidel matrices and exact integer linear algebra.

A Seidel matrix is a symmetric integer matrix with zero diagonal and all
off-diagonal entries +1 or -1.  Everything here is exact: determinants via
fraction-free (Bareiss) elimination, permanents via Ryser's
inclusion-exclusion, characteristic polynomials by evaluation at the
integers 0..n followed by exact Newton interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import intpoly
from .errors import (
    BadDiagonalError,
    BadEntryError,
    FormatError,
    IndexOutOfRangeError,
    NonSymmetricError,
    NotACliqueError,
    OrderTooLargeError,
    ValidationError,
)

Matrix = Sequence[Sequence[int]]


# ---------------------------------------------------------------------------
# matrix types


class SeidelMatrix:
    """Immutable validated Seidel matrix."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Matrix):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        validate(rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", len(rows))

    def __setattr__(self, *a):
        raise AttributeError("SeidelMatrix is immutable")

    def __eq__(self, other):
        return isinstance(other, SeidelMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SeidelMatrix(order={self.n})"

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    @classmethod
    def all_plus(cls, n: int) -> "SeidelMatrix":
        """J_n - I_n, the Seidel matrix of the empty graph."""
        return cls([[0 if i == j else 1 for j in range(n)] for i in range(n)])

    @classmethod
    def from_neg_masks(cls, masks: Sequence[int], n: int) -> "SeidelMatrix":
        rows = [
            [0 if i == j else (-1 if (masks[i] >> j) & 1 else 1) for j in range(n)]
            for i in range(n)
        ]
        return cls(rows)

    def neg_masks(self) -> tuple[int, ...]:
        """Row bitmasks of the -1 entries (bit j of mask i <-> S[i][j] == -1)."""
        out = []
        for r in self.rows:
            m = 0
            for j, x in enumerate(r):
                if x == -1:
                    m |= 1 << j
            out.append(m)
        return tuple(out)

    def negate(self) -> "SeidelMatrix":
        return SeidelMatrix([[-x for x in r] for r in self.rows])

    def submatrix(self, keep: Sequence[int]) -> "SeidelMatrix":
        keep = list(keep)
        for v in keep:
            if not 0 <= v < self.n:
                raise IndexOutOfRangeError("row index", v, self.n)
        if len(set(keep)) != len(keep):
            raise ValidationError("repeated row index in submatrix selection")
        return SeidelMatrix([[self.rows[i][j] for j in keep] for i in keep])


def validate(rows: Matrix) -> None:
    """Raise a specific ValidationError unless rows form a Seidel matrix."""
    n = len(rows)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ValidationError(f"row {i} has length {len(r)}, expected {n}")
    for i in range(n):
        if rows[i][i] != 0:
            raise BadDiagonalError(i)
        for j in range(i + 1, n):
            if rows[i][j] not in (1, -1):
                raise BadEntryError(i, j, rows[i][j])
            if rows[j][i] != rows[i][j]:
                raise NonSymmetricError(i, j)


class AmbientGraph:
    """Simple graph as a 0/1 adjacency matrix (zero diagonal, symmetric)."""

    __slots__ = ("rows", "n")

    def __init__(self, rows: Matrix):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValidationError(f"row {i} has length {len(r)}, expected {n}")
        for i in range(n):
            if rows[i][i] != 0:
                raise BadDiagonalError(i)
            for j in range(i + 1, n):
                if rows[i][j] not in (0, 1):
                    raise BadEntryError(i, j, rows[i][j])
                if rows[j][i] != rows[i][j]:
                    raise NonSymmetricError(i, j)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "n", n)

    def __setattr__(self, *a):
        raise AttributeError("AmbientGraph is immutable")

    def __eq__(self, other):
        return isinstance(other, AmbientGraph) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"AmbientGraph(order={self.n}, edges={self.edge_count()})"

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "AmbientGraph":
        rows = [[0] * n for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRangeError("edge endpoint", (u, v), n)
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            rows[u][v] = rows[v][u] = 1
        return cls(rows)

    def edge_count(self) -> int:
        return sum(sum(r) for r in self.rows) // 2

    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def adj_masks(self) -> tuple[int, ...]:
        out = []
        for r in self.rows:
            m = 0
            for j, x in enumerate(r):
                if x:
                    m |= 1 << j
            out.append(m)
        return tuple(out)

    def complement(self) -> "AmbientGraph":
        n = self.n
        return AmbientGraph(
            [[0 if i == j else 1 - self.rows[i][j] for j in range(n)] for i in range(n)]
        )


@dataclass(frozen=True)
class SwitchingOperation:
    """Seidel switching at a vertex subset followed by a relabeling.

    The result of applying (subset U, permutation p) to S places the
    switched matrix D S D (D negating rows/columns in U) so that old vertex
    i lands at position p[i].
    """

    subset: frozenset[int] = frozenset()
    perm: tuple[int, ...] | None = None


def switch(S: SeidelMatrix, op: SwitchingOperation) -> SeidelMatrix:
    n = S.n
    for v in op.subset:
        if not 0 <= v < n:
            raise IndexOutOfRangeError("switching vertex", v, n)
    perm = op.perm if op.perm is not None else tuple(range(n))
    if sorted(perm) != list(range(n)):
        raise ValidationError(f"not a permutation of 0..{n - 1}: {perm}")
    sign = [-1 if i in op.subset else 1 for i in range(n)]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                out[perm[i]][perm[j]] = sign[i] * sign[j] * S.rows[i][j]
    return SeidelMatrix(out)


def switch_class_member(S: SeidelMatrix, subset: Iterable[int]) -> SeidelMatrix:
    return switch(S, SwitchingOperation(subset=frozenset(subset)))


def ambient_graph(S: SeidelMatrix) -> AmbientGraph:
    """The graph A with S = J - 2A - I (edge where the entry is -1)."""
    n = S.n
    return AmbientGraph(
        [[1 if i != j and S.rows[i][j] == -1 else 0 for j in range(n)] for i in range(n)]
    )


def seidel_of_graph(A: AmbientGraph) -> SeidelMatrix:
    n = A.n
    return SeidelMatrix(
        [[0 if i == j else (1 - 2 * A.rows[i][j]) for j in range(n)] for i in range(n)]
    )


def _as_int_rows(M) -> list[list[int]]:
    if isinstance(M, SeidelMatrix) or isinstance(M, AmbientGraph):
        return [list(r) for r in M.rows]
    return [list(r) for r in M]


# ---------------------------------------------------------------------------
# exact linear algebra


def det_exact(M) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = _as_int_rows(M)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - aik * rk[j]) // prev
        prev = pk
    return sign * a[n - 1][n - 1]


def rank_exact(M) -> int:
    """Rank over the rationals, by fraction-free elimination with pivoting."""
    a = _as_int_rows(M)
    m = len(a)
    if m == 0:
        return 0
    ncols = len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, m):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        row_r = a[r]
        for i in range(r + 1, m):
            ai = a[i]
            aic = ai[c]
            for j in range(c + 1, ncols):
                ai[j] = (ai[j] * p - aic * row_r[j]) // prev
            ai[c] = 0
        prev = p
        r += 1
        if r == m:
            break
    return r


def permanent_exact(M, limit: int = 20) -> int:
    """Permanent via Ryser's formula with Gray-code updates, O(2^n * n).

    Orders above `limit` are refused rather than silently ground through.
    """
    a = _as_int_rows(M)
    n = len(a)
    if n > limit:
        raise OrderTooLargeError(n, limit, "permanent")
    if n == 0:
        return 1
    cols = [tuple(a[i][j] for i in range(n)) for j in range(n)]
    sums = [0] * n
    total = 0
    gray_prev = 0
    bits = 0
    rng = range(n)
    for g in range(1, 1 << n):
        gray = g ^ (g >> 1)
        diff = gray ^ gray_prev
        gray_prev = gray
        col = cols[diff.bit_length() - 1]
        if gray & diff:
            bits += 1
            for i in rng:
                sums[i] += col[i]
        else:
            bits -= 1
            for i in rng:
                sums[i] -= col[i]
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            total += prod if ((n - bits) & 1) == 0 else -prod
    return total


@dataclass(frozen=True)
class CharPoly:
    """Characteristic polynomial det(xI - M), coefficients ascending."""

    coefficients: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return intpoly.evaluate(self.coefficients, x)

    def as_list(self) -> list[int]:
        return list(self.coefficients)


def charpoly_int(M) -> list[int]:
    """det(xI - M) for a general square integer matrix, exactly.

    Evaluates the determinant at x = 0..n and interpolates through Newton
    forward differences; every intermediate stays integral or is an exact
    small-denominator fraction that cancels.
    """
    a = _as_int_rows(M)
    n = len(a)
    vals = []
    for x in range(n + 1):
        m = [[(x if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
        vals.append(det_exact(m))
    newton = []
    diffs = vals
    for _ in range(n + 1):
        newton.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    coeffs = [Fraction(0)] * (n + 1)
    falling = [1]
    kfact = 1
    for k, ck in enumerate(newton):
        if k:
            falling = intpoly.mul(falling, [-(k - 1), 1])
            kfact *= k
        if ck:
            q = Fraction(ck, kfact)
            for j, f in enumerate(falling):
                coeffs[j] += q * f
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("charpoly interpolation produced a non-integer")
        out.append(int(c))
    if out[-1] != 1:
        raise ArithmeticError("charpoly lost monicity")
    return out


def charpoly_exact(S: SeidelMatrix) -> CharPoly:
    coeffs = charpoly_int(S)
    if S.n >= 1 and coeffs[-2] != 0:
        raise ArithmeticError("Seidel charpoly must have zero trace coefficient")
    return CharPoly(tuple(coeffs))


# ---------------------------------------------------------------------------
# modular identities


@dataclass(frozen=True)
class IdentityCheck:
    ok: bool
    lhs: int
    rhs: int
    modulus: int


def det_mod4(S: SeidelMatrix) -> IdentityCheck:
    """det S mod 4 together with the forced residue 1 - n."""
    lhs = det_exact(S) % 4
    rhs = (1 - S.n) % 4
    return IdentityCheck(lhs == rhs, lhs, rhs, 4)


def det_mod8_identity_check(A: AmbientGraph) -> IdentityCheck:
    """det(J - 2A - I) against (-1)^n (1-n) + 4en  (mod 8)."""
    n = A.n
    e = A.edge_count()
    lhs = det_exact(seidel_of_graph(A)) % 8
    rhs = ((-1) ** n * (1 - n) + 4 * e * n) % 8
    return IdentityCheck(lhs == rhs, lhs, rhs, 8)


def perm_mod8_identity_check(A: AmbientGraph, limit: int = 20) -> IdentityCheck:
    """per(J - 2A - I) against (-1)^n + n(1-(-1)^n)/2 + 4en  (mod 8)."""
    n = A.n
    e = A.edge_count()
    lhs = permanent_exact(seidel_of_graph(A), limit=limit) % 8
    rhs = ((-1) ** n + n * (1 - (-1) ** n) // 2 + 4 * e * n) % 8
    return IdentityCheck(lhs == rhs, lhs, rhs, 8)


def derangement(n: int) -> int:
    """Number of fixed-point-free permutations; equals per(J_n - I_n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = 1
    for k in range(1, n + 1):
        d = k * d + (-1) ** k
    return d


def derangement_mod8(n: int) -> int:
    """Closed-form residue: 1 for even n, n-1 mod 8 for odd n."""
    return 1 if n % 2 == 0 else (n - 1) % 8


@dataclass(frozen=True)
class ObstructionReport:
    applies: bool
    obstructed: bool
    det_mod8: int
    det_negated_mod8: int


def self_complementary_obstruction(S: SeidelMatrix) -> ObstructionReport:
    """Mod-8 obstruction to S being switching-equivalent to -S.

    For n = 3 (mod 4) the determinants of S and -S land in different
    residue classes mod 8 (they differ by 4), so no Seidel matrix of such
    an order is self-complementary.  Determinants are switching- and
    relabeling-invariant, which is what makes this a certificate.
    """
    d = det_exact(S)
    dneg = ((-1) ** S.n * d) % 8
    applies = S.n % 4 == 3
    return ObstructionReport(applies, applies and (d % 8) != dneg, d % 8, dneg)


# ---------------------------------------------------------------------------
# clique helpers shared by spectra/constructions


def verify_plus_clique(S: SeidelMatrix, rows: Sequence[int]) -> None:
    """Check the selected rows pairwise carry +1 entries (a J_c - I_c block)."""
    rows = list(rows)
    for v in rows:
        if not 0 <= v < S.n:
            raise IndexOutOfRangeError("clique row", v, S.n)
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if S.rows[rows[a]][rows[b]] != 1:
                raise NotACliqueError(rows[a], rows[b])


# ---------------------------------------------------------------------------
# text formats


def format_seidel(S: SeidelMatrix) -> str:
    """Order on the first line, then one row per line over {+,-,0}."""
    lines = [str(S.n)]
    for r in S.rows:
        lines.append("".join("0" if x == 0 else ("+" if x > 0 else "-") for x in r))
    return "\n".join(lines) + "\n"


def parse_seidel(text: str) -> SeidelMatrix:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the order, got {lines[0]!r}") from None
    if n < 0 or len(lines) != n + 1:
        raise FormatError(f"expected {n} rows after the header, got {len(lines) - 1}")
    rows = []
    charmap = {"+": 1, "-": -1, "0": 0}
    for i, ln in enumerate(lines[1:]):
        if len(ln) != n:
            raise FormatError(f"row {i} has length {len(ln)}, expected {n}")
        row = []
        for j, ch in enumerate(ln):
            if ch not in charmap:
                raise FormatError(f"row {i} column {j}: bad character {ch!r}")
            row.append(charmap[ch])
        rows.append(row)
    return SeidelMatrix(rows)


def graph6_encode(A: AmbientGraph) -> str:
    """Standard 6-bit packed one-line encoding of a graph, printable offset 63."""
    n = A.n
    if n > 62:
        raise OrderTooLargeError(n, 62, "one-byte graph header")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(A.rows[i][j])
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def graph6_decode(s: str) -> AmbientGraph:
    s = s.strip()
    if not s:
        raise FormatError("empty graph string")
    n = ord(s[0]) - 63
    if n < 0:
        raise FormatError("bad order byte")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise FormatError(f"expected {need} data characters, got {len(s) - 1}")
    bits = []
    for ch in s[1:]:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise FormatError(f"bad data character {ch!r}")
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    rows = [[0] * n for _ in range(n)]
    idx = 0
    for j in range(1, n):
        for i in range(j):
            rows[i][j] = rows[j][i] = bits[idx]
            idx += 1
    if any(bits[idx:]):
        raise FormatError("nonzero padding bits")
    return AmbientGraph(rows)
