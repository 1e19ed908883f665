"""Switching-class canonical forms, complete invariants, and the census.

Two Seidel matrices are switching equivalent when one arises from the
other by negating the rows and columns of a vertex subset and relabeling.
Each class is identified here by an explicit canonical representative:
among all members whose first row and column are all +1, take the one
whose remaining sign pattern, read as a lower-triangle bit string
(+1 before -1), is lexicographically smallest.  Everything below the
border row of such a member is the adjacency pattern of the graph whose
edges are the pairs forming an odd triple with the root vertex, so the
minimization reduces to graph canonization over all root choices.

The chi/phi invariant chain offers much cheaper equivalence tests:
chi is the truncated characteristic polynomial (complete through order
6), and the phi residues hash it through products over principal
submatrices (complete for orders 7 through 12).  Ground truth remains
the canonical form; the tests validate the chain against it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import intpoly, kernel
from .core import (
    AmbientGraph,
    SeidelMatrix,
    ambient_graph,
    charpoly_exact,
    charpoly_int,
    det_exact,
    switch_class_member,
)
from .errors import ArityMismatchError, OrderTooLargeError, ValidationError

CLASS_ORDER_LIMIT = 12
CENSUS_ORDER_LIMIT = 10

PHI_MODULI = {7: 409, 8: 7507, 9: 268921, 10: 45131767, 11: 97124414801}


@dataclass(frozen=True)
class TwoGraph:
    """The switching-invariant triple system of a Seidel matrix."""

    n: int
    odd_triples: frozenset


@dataclass(frozen=True)
class ClassFingerprint:
    """A switching class: its order, complete invariant, and representative."""

    n: int
    invariant: object
    canonical_matrix: SeidelMatrix


@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    gamma_nonzero: int
    self_complementary: int
    lambda_min_minus_five: int
    three_eigenvalues: int


def odd_triples(S: SeidelMatrix) -> TwoGraph:
    """Triples {i,j,k} whose three signs multiply to -1."""
    rows = S.rows
    out = []
    for i, j, k in itertools.combinations(range(S.n), 3):
        if rows[i][j] * rows[j][k] * rows[i][k] == -1:
            out.append((i, j, k))
    return TwoGraph(S.n, frozenset(out))


def _descendant_masks(neg, n: int, root: int) -> list[int]:
    # graph on the other vertices: u ~ w iff {root,u,w} is an odd triple
    nr = neg[root]
    full = (1 << n) - 1
    low = (1 << root) - 1
    out = []
    for u in range(n):
        if u == root:
            continue
        bits = neg[u] ^ nr
        if (nr >> u) & 1:
            bits = ~bits & full
        bits &= full & ~(1 << root) & ~(1 << u)
        out.append((bits & low) | ((bits >> 1) & ~low))
    return out


def _class_key_neg(neg, n: int):
    best = None
    for root in range(n):
        res = kernel.canonical_order(n - 1, _descendant_masks(neg, n, root), best)
        if res is not None:
            best = list(res[0])
    assert best is not None
    return tuple(best)


def _neg_from_class_key(n: int, key) -> list[int]:
    masks = kernel.masks_from_key(n - 1, key)
    return [0] + [m << 1 for m in masks]


def _check_order(S: SeidelMatrix, limit: int, what: str) -> None:
    if S.n > limit:
        raise OrderTooLargeError(S.n, limit, what)


def switching_class_key(S: SeidelMatrix, limit: int = CLASS_ORDER_LIMIT):
    """Hashable complete invariant: order plus minimal descendant code."""
    _check_order(S, limit, "switching-class canonization")
    return (S.n, _class_key_neg(S.neg_masks(), S.n))


def canonical_form(S: SeidelMatrix, limit: int = CLASS_ORDER_LIMIT) -> SeidelMatrix:
    """The canonical representative of the switching class of S."""
    n, key = switching_class_key(S, limit)
    return SeidelMatrix.from_neg_masks(_neg_from_class_key(n, key), n)


def switching_equivalent(
    S: SeidelMatrix, T: SeidelMatrix, limit: int = CLASS_ORDER_LIMIT
) -> bool:
    if S.n != T.n:
        return False
    return switching_class_key(S, limit) == switching_class_key(T, limit)


def self_complementary(S: SeidelMatrix, limit: int = CLASS_ORDER_LIMIT) -> bool:
    """Whether S and -S are switching equivalent."""
    return switching_class_key(S, limit) == switching_class_key(S.negate(), limit)


def chi(S: SeidelMatrix) -> tuple:
    """Characteristic polynomial coefficients a_0..a_{n-2}, ascending.

    The two discarded coefficients carry no information: the leading one
    is 1 and the next is the trace, 0.  Complete invariant through order 6.
    """
    coeffs = charpoly_exact(S).coefficients
    return tuple(coeffs[: max(S.n - 1, 0)])


def _phi_arity(S: SeidelMatrix, n: int, name: str) -> None:
    if S.n != n:
        raise ArityMismatchError(name, n, S.n)


def phi7(S: SeidelMatrix) -> int:
    """Product of the chi coefficients, mod 409."""
    _phi_arity(S, 7, "phi7")
    out = 1
    for a in chi(S):
        out = out * a % PHI_MODULI[7]
    return out


def _phi_chain(rows, n: int) -> int:
    # phi_n for 8 <= n <= 10: product of phi_{n-1} over the principal
    # submatrices of order n-1.  Recursion shares the 7x7 leaves, so the
    # cost is C(n,n-7) characteristic polynomials rather than n!/7!.
    mod7 = PHI_MODULI[7]

    def phi_sub(keep: tuple) -> int:
        k = len(keep)
        if k == 7:
            sub = [[rows[a][b] for b in keep] for a in keep]
            out = 1
            for a in charpoly_int(sub)[:6]:
                out = out * a % mod7
            return out
        mod = PHI_MODULI[k]
        out = 1
        for drop in range(k):
            smaller = keep[:drop] + keep[drop + 1 :]
            val = memo.get(smaller)
            if val is None:
                val = phi_sub(smaller)
                memo[smaller] = val
            out = out * val % mod
        return out

    memo: dict = {}
    return phi_sub(tuple(range(n)))


def phi8(S: SeidelMatrix) -> int:
    """Product of phi7 over the eight 7x7 principal submatrices, mod 7507."""
    _phi_arity(S, 8, "phi8")
    return _phi_chain(S.rows, 8)


def phi9(S: SeidelMatrix) -> int:
    """Product of phi8 over the nine 8x8 principal submatrices, mod 268921."""
    _phi_arity(S, 9, "phi9")
    return _phi_chain(S.rows, 9)


def phi10(S: SeidelMatrix) -> int:
    """Product of phi9 over the ten 9x9 principal submatrices, mod 45131767."""
    _phi_arity(S, 10, "phi10")
    return _phi_chain(S.rows, 10)


def psi(S: SeidelMatrix) -> tuple:
    """Multiset of the 55 principal 9x9 minors of an order-11 matrix."""
    _phi_arity(S, 11, "psi")
    counts: dict[int, int] = {}
    for keep in itertools.combinations(range(11), 9):
        sub = [[S.rows[a][b] for b in keep] for a in keep]
        d = det_exact(sub)
        counts[d] = counts.get(d, 0) + 1
    return tuple(sorted(counts.items()))


def phi11(S: SeidelMatrix) -> int:
    """det(S) times prod (minor+1)(multiplicity+1) over psi, mod 97124414801."""
    _phi_arity(S, 11, "phi11")
    mod = PHI_MODULI[11]
    out = det_exact(S.rows) % mod
    for value, mult in psi(S):
        out = out * ((value + 1) * (mult + 1)) % mod
    return out


def phi12(S: SeidelMatrix) -> tuple:
    """Sorted multiset of phi11 over the twelve 11x11 principal submatrices."""
    _phi_arity(S, 12, "phi12")
    values = []
    for drop in range(12):
        keep = [i for i in range(12) if i != drop]
        values.append(phi11(S.submatrix(keep)))
    return tuple(sorted(values))


def _table_invariant(S: SeidelMatrix):
    n = S.n
    if n <= 6:
        return chi(S)
    if n == 7:
        return phi7(S)
    if n == 8:
        return phi8(S)
    if n == 9:
        return phi9(S)
    if n == 10:
        return phi10(S)
    if n == 11:
        return phi11(S)
    return phi12(S)


def class_fingerprint(
    S: SeidelMatrix, limit: int = CLASS_ORDER_LIMIT
) -> ClassFingerprint:
    """Canonical representative plus the order-appropriate complete invariant."""
    return ClassFingerprint(S.n, _table_invariant(S), canonical_form(S, limit))


def enumerate_switching_classes(
    n: int, limit: int = CENSUS_ORDER_LIMIT
) -> list[ClassFingerprint]:
    """All switching classes of order n, one canonical representative each.

    Orderly one-vertex extension: every class of order k restricts to a
    class of order k-1 by deleting the last vertex, so extending each
    canonical representative by every border column (normalized to +1
    against the root) and deduplicating by canonical key reaches
    everything.
    """
    if n < 1:
        raise ValidationError("order must be positive")
    if n > limit:
        raise OrderTooLargeError(n, limit, "switching-class enumeration")
    reps = [(0,)]
    for k in range(2, n + 1):
        found = set()
        for pneg in reps:
            for bits in range(1 << (k - 2)):
                colmask = bits << 1
                neg = [
                    pneg[i] | (((colmask >> i) & 1) << (k - 1)) for i in range(k - 1)
                ]
                neg.append(colmask)
                found.add(_class_key_neg(neg, k))
        reps = [tuple(_neg_from_class_key(k, key)) for key in sorted(found)]
    out = []
    for neg in reps:
        S = SeidelMatrix.from_neg_masks(neg, n)
        out.append(ClassFingerprint(n, _table_invariant(S), S))
    return out


def _unlabeled_graph_keys(n: int) -> list:
    # canonical keys of all unlabeled simple graphs on n vertices
    reps = [()]
    for k in range(1, n + 1):
        found = set()
        for pkey in reps:
            pmasks = kernel.masks_from_key(k - 1, pkey)
            for bits in range(1 << (k - 1)):
                masks = [
                    pmasks[i] | (((bits >> i) & 1) << (k - 1)) for i in range(k - 1)
                ]
                masks.append(bits)
                found.add(kernel.canonical_key(k, masks))
        reps = sorted(found)
    return reps


def enumerate_euler_graphs(n: int, limit: int = 9) -> list[AmbientGraph]:
    """All unlabeled graphs on n vertices with every degree even.

    A graph with all degrees even, minus any fixed vertex, is an arbitrary
    graph on n-1 vertices whose odd-degree set was the deleted vertex's
    neighborhood; so attaching an apex to the odd-degree set of every
    unlabeled graph on n-1 vertices reaches every one of them.
    """
    if n < 1:
        raise ValidationError("order must be positive")
    if n > limit:
        raise OrderTooLargeError(n, limit, "Euler graph enumeration")
    found = {}
    for pkey in _unlabeled_graph_keys(n - 1):
        pmasks = kernel.masks_from_key(n - 1, pkey)
        apex = 0
        for v in range(n - 1):
            if bin(pmasks[v]).count("1") % 2 == 1:
                apex |= 1 << v
        masks = [pmasks[i] | (((apex >> i) & 1) << (n - 1)) for i in range(n - 1)]
        masks.append(apex)
        key = kernel.canonical_key(n, masks)
        if key not in found:
            found[key] = None
    graphs = []
    for key in sorted(found):
        masks = kernel.masks_from_key(n, key)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if (masks[u] >> v) & 1
        ]
        graphs.append(AmbientGraph.from_edges(n, edges))
    return graphs


def euler_representative(S: SeidelMatrix) -> AmbientGraph:
    """The unique all-even-degree ambient graph in an odd-order class.

    Switching by the set of odd-degree vertices flips each degree by
    |set| or n-1-|set| mod 2, both even when n is odd.
    """
    if S.n % 2 == 0:
        raise ValidationError("unique Euler representative needs odd order")
    A = ambient_graph(S)
    subset = [v for v, d in enumerate(A.degrees()) if d % 2 == 1]
    out = ambient_graph(switch_class_member(S, subset))
    assert all(d % 2 == 0 for d in out.degrees())
    return out


def aut_order(S: SeidelMatrix, limit: int = CENSUS_ORDER_LIMIT) -> int:
    """Order of the automorphism group of the switching class.

    An automorphism fixing a root vertex is exactly a graph automorphism
    of that root's odd-triple graph, and the root's orbit is the set of
    vertices whose odd-triple graphs canonize to the overall minimum;
    the product of the two counts is the group order.
    """
    _check_order(S, limit, "automorphism group")
    n = S.n
    if n == 1:
        return 1
    neg = S.neg_masks()
    results = [
        kernel.canonical_order(n - 1, _descendant_masks(neg, n, root))
        for root in range(n)
    ]
    minkey = min(res[0] for res in results)
    orbit = [root for root, res in enumerate(results) if res[0] == minkey]
    gens = results[orbit[0]][2]
    return len(orbit) * kernel.group_order(n - 1, gens)


def _switched_neg(neg, n: int, umask: int) -> list[int]:
    full = (1 << n) - 1
    out = []
    for i in range(n):
        if (umask >> i) & 1:
            out.append(neg[i] ^ (full & ~umask & ~(1 << i)))
        else:
            out.append(neg[i] ^ umask)
    return out


def gamma_nonzero(S: SeidelMatrix, limit: int = CENSUS_ORDER_LIMIT) -> bool:
    """Whether the class automorphism group beats every ambient graph's.

    Always false in odd orders, where some ambient graph realizes the
    full group; in even orders the 2^(n-1) switchings are scanned,
    grouped by graph isomorphism.
    """
    _check_order(S, limit, "gamma computation")
    n = S.n
    if n % 2 == 1:
        return False
    target = aut_order(S, limit)
    neg = S.neg_masks()
    seen = set()
    best = 0
    for bits in range(1 << (n - 1)):
        masks = _switched_neg(neg, n, bits << 1)
        res = kernel.canonical_order(n, masks)
        if res[0] in seen:
            continue
        seen.add(res[0])
        best = max(best, kernel.group_order(n, res[2]))
        if best >= target:
            return False
    return target > best


def smallest_eigenvalue_is(S: SeidelMatrix, value: int) -> bool:
    """Exact test that the minimum eigenvalue equals the given integer."""
    p = charpoly_exact(S).as_list()
    return intpoly.evaluate(p, value) == 0 and intpoly.all_roots_at_least(p, value)


def distinct_eigenvalue_count(S: SeidelMatrix) -> int:
    return intpoly.count_distinct_roots(charpoly_exact(S).as_list())


def census(n: int, limit: int = CENSUS_ORDER_LIMIT) -> CensusRow:
    """Class counts of order n: total, gamma, self-complementary, spectral."""
    classes = enumerate_switching_classes(n, limit)
    gamma = sc = lmin = three = 0
    for fp in classes:
        S = fp.canonical_matrix
        if gamma_nonzero(S, limit):
            gamma += 1
        if self_complementary(S):
            sc += 1
        p = charpoly_exact(S).as_list()
        if intpoly.evaluate(p, -5) == 0 and intpoly.all_roots_at_least(p, -5):
            lmin += 1
        if intpoly.count_distinct_roots(p) == 3:
            three += 1
    return CensusRow(n, len(classes), gamma, sc, lmin, three)
