"""Pure Python graph canonizer with automorphism capture.

Graphs are given as adjacency bitmasks: ``masks[i]`` has bit ``j`` set
iff vertices ``i`` and ``j`` are adjacent.  A placement of the vertices
assigns each position ``k`` a row code: the integer whose bit ``k-1-i``
records adjacency to the vertex at position ``i``.  The canonical key of
a graph is the lexicographically smallest sequence of row codes over all
placements; the empty graph is the global minimum.

The search is a depth-first branch and bound.  At each node only the
candidates of minimal row code can extend a minimal placement, the
partial code sequence is compared against the best complete one, and
candidates equivalent to an already explored sibling under the
automorphisms discovered so far are skipped.  Every complete placement
that ties with the best yields an automorphism, and the collected
generators generate the full automorphism group.
"""

from __future__ import annotations


def _row_code(mask: int, order: list[int]) -> int:
    code = 0
    for u in order:
        code = (code << 1) | ((mask >> u) & 1)
    return code


def canonical_order(n, masks, bound=None):
    """Canonize a graph on ``n`` vertices.

    Returns ``(key, perm, gens)`` where ``key`` is the canonical code
    sequence (length ``n``, first entry always 0), ``perm[k]`` is the
    original vertex placed at position ``k``, and ``gens`` is a list of
    automorphism generators as image tuples.

    With ``bound`` (a code sequence) the search only pursues placements
    no larger than it and returns None when every placement is strictly
    larger.  Useful when minimizing over several graphs; the generator
    list is then incomplete and should be ignored.
    """
    if n == 0:
        return (), (), []
    masks = list(masks)
    identity = tuple(range(n))
    best: list[int] | None = None if bound is None else list(bound)
    best_perm: list[int] | None = None
    gens: list[tuple[int, ...]] = []
    gen_seen: set[tuple[int, ...]] = set()
    order: list[int] = []
    codes: list[int] = []
    unplaced = set(range(n))

    def in_orbit(v: int, tried: list[int]) -> bool:
        # v is redundant if a prefix-fixing automorphism maps a tried
        # sibling onto it
        if not tried or not gens:
            return False
        stab = [g for g in gens if all(g[u] == u for u in order)]
        if not stab:
            return False
        seen = set(tried)
        frontier = list(tried)
        while frontier:
            u = frontier.pop()
            for g in stab:
                w = g[u]
                if w == v:
                    return True
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return False

    def dfs() -> None:
        nonlocal best, best_perm
        k = len(order)
        if k == n:
            if best_perm is None:
                best = list(codes)
                best_perm = list(order)
                return
            # survived every comparison, so this placement ties the best
            g = [0] * n
            for i in range(n):
                g[best_perm[i]] = order[i]
            tg = tuple(g)
            if tg != identity and tg not in gen_seen:
                gen_seen.add(tg)
                gens.append(tg)
            return
        coded = sorted((_row_code(masks[v], order), v) for v in unplaced)
        cmin = coded[0][0]
        if best is not None:
            if cmin > best[k]:
                return
            if cmin < best[k]:
                best = None
                best_perm = None
        tried: list[int] = []
        for code, v in coded:
            if code != cmin:
                break
            if not in_orbit(v, tried):
                order.append(v)
                codes.append(code)
                unplaced.discard(v)
                dfs()
                unplaced.add(v)
                codes.pop()
                order.pop()
            tried.append(v)

    dfs()
    if best_perm is None:
        return None
    assert best is not None
    return tuple(best), tuple(best_perm), gens


def canonical_key(n, masks):
    """Canonical code sequence of the graph, a switching-free invariant."""
    return canonical_order(n, masks)[0]


def masks_from_key(n, key):
    """Rebuild adjacency bitmasks of the canonically labeled graph."""
    masks = [0] * n
    for k in range(1, n):
        code = key[k]
        for i in range(k):
            if (code >> (k - 1 - i)) & 1:
                masks[k] |= 1 << i
                masks[i] |= 1 << k
    return masks


def relabel_masks(masks, perm):
    """Adjacency masks after renaming vertex ``perm[i]`` to ``i``."""
    n = len(perm)
    inv = [0] * n
    for i, v in enumerate(perm):
        inv[v] = i
    out = [0] * n
    for v in range(n):
        m = masks[v]
        acc = 0
        while m:
            low = m & -m
            acc |= 1 << inv[low.bit_length() - 1]
            m ^= low
        out[inv[v]] = acc
    return out


def group_order(n, gens):
    """Order of the permutation group generated by ``gens``.

    Schreier-Sims orbit-stabilizer recursion; adequate for the small
    degrees appearing here.
    """
    identity = tuple(range(n))
    work = {tuple(g) for g in gens}
    work.discard(identity)
    if not work:
        return 1
    base = next(i for i in range(n) if any(g[i] != i for g in work))
    transversal = {base: identity}
    frontier = [base]
    while frontier:
        p = frontier.pop()
        tp = transversal[p]
        for g in work:
            q = g[p]
            if q not in transversal:
                transversal[q] = tuple(g[tp[i]] for i in range(n))
                frontier.append(q)
    schreier = set()
    for p, tp in transversal.items():
        for g in work:
            tq = transversal[g[p]]
            inv = [0] * n
            for i in range(n):
                inv[tq[i]] = i
            s = tuple(inv[g[tp[i]]] for i in range(n))
            if s != identity:
                schreier.add(s)
    return len(transversal) * group_order(n, schreier)
