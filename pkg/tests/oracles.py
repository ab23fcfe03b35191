"""Independent brute-force oracles the suite checks the library against.

Everything here favors obviousness over speed: plain depth-first search,
divisor scans, and direct membership checks, free of the library's own
algorithms so that agreement actually means something.
"""

from __future__ import annotations

from typing import Optional

from geodetic.graphs import Graph


def dfs_walks_of_length(g: Graph, u: int, v: int, n: int) -> list[tuple[int, ...]]:
    """All walks from u to v using exactly n edges, by plain DFS."""
    out: list[tuple[int, ...]] = []
    acc = [u]

    def go(x: int, left: int) -> None:
        if left == 0:
            if x == v:
                out.append(tuple(acc))
            return
        for y in g.neighbors(x):
            acc.append(y)
            go(y, left - 1)
            acc.pop()

    go(u, n)
    return out


def dfs_shortest_paths(g: Graph, u: int, v: int) -> tuple[Optional[int], list[tuple[int, ...]]]:
    """(distance, all geodesics) by iterative deepening.

    Walks of minimal length never repeat a vertex, so the first nonempty
    batch is exactly the set of geodesics.  (None, []) when unreachable.
    """
    for n in range(g.vertex_count):
        walks = dfs_walks_of_length(g, u, v, n)
        if walks:
            return n, walks
    return None, []


def brute_primitive_root(w: tuple) -> tuple[tuple, int]:
    """Smallest divisor-length prefix whose power rebuilds w."""
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    raise AssertionError("unreachable: w is always w^1")


def has_factor_naive(w: tuple, forbidden) -> bool:
    """Direct scan: does any member of forbidden occur inside w?"""
    return any(
        w[i : i + len(f)] == f
        for f in forbidden
        for i in range(len(w) - len(f) + 1)
    )
