"""Graph isomorphism by backtracking, for small orders only."""

from __future__ import annotations

from .errors import TooLarge
from .graphs import Graph

ISO_MAX_ORDER = 12


def _profile(g: Graph, v: int) -> tuple:
    # Degree plus sorted neighbor degrees: cheap invariant for pruning.
    degs = g.degrees()
    return (degs[v], tuple(sorted(degs[u.bit_length() - 1] for u in _bits(g.adj[v]))))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if max(g.n, h.n) > ISO_MAX_ORDER:
        raise TooLarge(f"isomorphism test capped at order {ISO_MAX_ORDER}")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    n = g.n
    if n == 0:
        return True
    pg = [_profile(g, v) for v in range(n)]
    ph = [_profile(h, v) for v in range(n)]
    if sorted(pg) != sorted(ph):
        return False

    # Map vertices of g in order of scarcest profile first.
    order = sorted(range(n), key=lambda v: (sum(1 for p in pg if p == pg[v]), -pg[v][0], v))
    cands = [[w for w in range(n) if ph[w] == pg[v]] for v in order]
    mapping = [-1] * n

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        av = g.adj[v]
        for w in cands[i]:
            if used >> w & 1:
                continue
            hw = h.adj[w]
            ok = True
            for j in range(i):
                u = order[j]
                if (av >> u & 1) != (hw >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                if place(i + 1, used | 1 << w):
                    return True
                mapping[v] = -1
        return False

    return place(0, 0)
