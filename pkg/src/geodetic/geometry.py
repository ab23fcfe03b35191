"""Path-pair geometry: fellow travel, ladder-like structures, shortening.

Pair statistics follow the equal-length convention: two paths are compared
index by index, d_i = d(p1(i), p2(i)).  For width m, a_m counts indices
with d_i = m and c_m counts indices with 1 <= d_i <= m.  A pair is
asynchronously disjoint when p1(i) != p2(j) for every pair of DISTINCT
indices (same-index meetings are allowed), and a ladder-like structure of
width m and height r is an asynchronously disjoint pair with a_m = r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Union

from .graphs import (
    Graph,
    PathSeq,
    UNREACHED,
    enumerate_geodesics,
)
from .groups import CayleyBall


def validate_path(g: Graph, p: PathSeq) -> None:
    """Raise unless consecutive vertices are adjacent in g."""
    for v in p.vertices:
        g.check_vertex(v)
    for u, v in zip(p.vertices, p.vertices[1:]):
        if v not in g.adj[u]:
            raise ValueError(f"{u} and {v} are not adjacent")


def is_geodesic_path(g: Graph, p: PathSeq) -> bool:
    validate_path(g, p)
    return g.dist(p.start, p.end) == p.length


def pad(p: PathSeq, n: int) -> PathSeq:
    """Extend p to length n by repeating its endpoint."""
    if n < p.length:
        raise ValueError(f"cannot pad a length-{p.length} path down to {n}")
    return PathSeq(p.vertices + (p.end,) * (n - p.length))


def fellow_travel_bound(g: Graph, p1: PathSeq, p2: PathSeq) -> int:
    """Largest index-wise distance after padding the shorter path.

    This is the least m for which the two paths m-fellow-travel.
    """
    validate_path(g, p1)
    validate_path(g, p2)
    n = max(p1.length, p2.length)
    q1, q2 = pad(p1, n), pad(p2, n)
    best = 0
    for a, b in zip(q1.vertices, q2.vertices):
        best = max(best, g.dist(a, b))
    return best


@dataclass(frozen=True)
class PairStats:
    """Index-wise comparison of two equal-length paths at width m."""

    m: int
    distances: tuple[int, ...]
    a_m: int
    c_m: int
    asynchronously_disjoint: bool
    co_travelling: bool
    synchronously_co_travelling: bool


def pair_stats(g: Graph, p1: PathSeq, p2: PathSeq, m: int) -> PairStats:
    """Distances, a_m / c_m counters and the meeting flags for an equal-length pair."""
    if m < 1:
        raise ValueError("width m must be at least 1")
    validate_path(g, p1)
    validate_path(g, p2)
    if p1.length != p2.length:
        raise ValueError(
            f"paths have different lengths ({p1.length} vs {p2.length}); pad first if intended"
        )
    distances = [g.dist(a, b) for a, b in zip(p1.vertices, p2.vertices)]
    a_m = sum(1 for d in distances if d == m)
    c_m = sum(1 for d in distances if 1 <= d <= m)

    positions: dict[int, list[int]] = {}
    for j, v in enumerate(p2.vertices):
        positions.setdefault(v, []).append(j)
    disjoint = True
    for i, v in enumerate(p1.vertices):
        for j in positions.get(v, ()):
            if j != i:
                disjoint = False
                break
        if not disjoint:
            break

    edges2 = {}
    for j in range(p2.length):
        edges2.setdefault((p2[j], p2[j + 1]), []).append(j)
    co = False
    sync = False
    for i in range(p1.length):
        for j in edges2.get((p1[i], p1[i + 1]), ()):
            co = True
            if j == i:
                sync = True
    return PairStats(m, tuple(distances), a_m, c_m, disjoint, co, sync)


def ladder_bound_A(m: int, k: int) -> int:
    """Height bound for width-m ladder-like structures in a k-geodetic graph:
    A(m, k) = m * k * prod_{i=2..2m+1} (i*k + 1)."""
    if m < 1 or k < 1:
        raise ValueError("m and k must be at least 1")
    r = k * math.prod(i * k + 1 for i in range(2, 2 * m + 2))
    return m * r


def close_bound_C(m: int, k: int) -> int:
    """Bound on c_m over asynchronously disjoint pairs: C(m, k) = m * A(m, k)."""
    return m * ladder_bound_A(m, k)


@dataclass
class SearchScope:
    """Caps for the scoped searches; None disables a cap."""

    max_pairs: int = 2000
    max_geodesics: int = 50
    max_length: Optional[int] = None
    max_geodesic_pairs: int = 200_000


@dataclass(frozen=True)
class LadderReport:
    gamma1: PathSeq
    gamma2: PathSeq
    m: int
    height: int
    bound: int
    within_bound: bool


@dataclass
class LadderScan:
    """find_ladders result: the reports plus how much ground was covered."""

    reports: list[LadderReport] = field(default_factory=list)
    pairs_scanned: int = 0
    geodesic_pairs_scanned: int = 0
    skipped_untrusted: int = 0
    scope_exhausted: bool = False


GraphOrBall = Union[Graph, CayleyBall]


def _graph_and_filter(host: GraphOrBall):
    if isinstance(host, CayleyBall):
        return host.graph, host.is_trusted_pair
    return host, None


def _scoped_vertex_pairs(g: Graph, scope: SearchScope, pair_filter):
    """Distinct vertex pairs ordered by (distance, u, v), capped by the scope.

    Returns (pairs, skipped, exhausted): skipped counts pairs dropped by the
    filter (untrusted ball pairs), exhausted says the cap cut the list short.
    """
    rows = []
    skipped = 0
    for u in range(g.vertex_count):
        dag = g.dag(u)
        for v in range(u + 1, g.vertex_count):
            d = dag.dist[v]
            if d == UNREACHED:
                continue
            if scope.max_length is not None and d > scope.max_length:
                continue
            if pair_filter is not None and not pair_filter(u, v):
                skipped += 1
                continue
            rows.append((d, u, v))
    rows.sort()
    exhausted = scope.max_pairs is not None and len(rows) > scope.max_pairs
    if exhausted:
        rows = rows[: scope.max_pairs]
    return rows, skipped, exhausted


def iter_disjoint_pairs(
    host: GraphOrBall, m: int, scope: Optional[SearchScope] = None
) -> Iterator[tuple[PathSeq, PathSeq, PairStats]]:
    """Asynchronously disjoint equal-length geodesic pairs within scope.

    Geodesics are enumerated per vertex pair (pairs ordered by distance then
    lexicographically, each geodesic directed from the smaller endpoint),
    bucketed by length, and paired within each bucket, so the two geodesics
    of a pair may join different endpoint pairs.  Zero-length geodesics are
    skipped.  Consume via find_ladders for the bound bookkeeping.
    """
    scan = LadderScan()
    yield from _scan_disjoint_pairs(host, m, scope or SearchScope(), scan)


def _scan_disjoint_pairs(host, m, scope, scan):
    g, pair_filter = _graph_and_filter(host)
    pairs, skipped, exhausted = _scoped_vertex_pairs(g, scope, pair_filter)
    scan.skipped_untrusted = skipped
    scan.scope_exhausted = exhausted
    buckets: dict[int, list[PathSeq]] = {}
    for d, u, v in pairs:
        if d == 0:
            continue
        scan.pairs_scanned += 1
        geos, truncated = enumerate_geodesics(g, u, v, limit=scope.max_geodesics)
        if truncated:
            scan.scope_exhausted = True
        buckets.setdefault(d, []).append(geos)
    for d in sorted(buckets):
        flat = [p for group in buckets[d] for p in group]
        for i in range(len(flat)):
            for j in range(i + 1, len(flat)):
                if scan.geodesic_pairs_scanned >= scope.max_geodesic_pairs:
                    scan.scope_exhausted = True
                    return
                scan.geodesic_pairs_scanned += 1
                stats = pair_stats(g, flat[i], flat[j], m)
                if stats.asynchronously_disjoint:
                    yield flat[i], flat[j], stats


def find_ladders(
    host: GraphOrBall, m: int, k_verified: int, scope: Optional[SearchScope] = None
) -> LadderScan:
    """Scoped search for width-m ladder-like structures.

    k_verified is the caller-certified geodeticity constant of the host; it
    only feeds the reported bound A(m, k).  Every report's pair is verified
    asynchronously disjoint with height a_m >= 1.  For a CayleyBall only
    trusted pairs enter the scan and the skipped ones are counted.
    """
    if k_verified < 1:
        raise ValueError("k_verified must be at least 1")
    scope = scope or SearchScope()
    bound = ladder_bound_A(m, k_verified)
    scan = LadderScan()
    for p1, p2, stats in _scan_disjoint_pairs(host, m, scope, scan):
        if stats.a_m >= 1:
            scan.reports.append(
                LadderReport(p1, p2, m, stats.a_m, bound, stats.a_m <= bound)
            )
    return scan


def ladder_report_line(r: LadderReport) -> str:
    return (
        f"ladder: p1={r.gamma1.start}->{r.gamma1.end} p2={r.gamma2.start}->{r.gamma2.end} "
        f"len={r.gamma1.length} m={r.m} height={r.height} bound={r.bound} "
        f"within={'true' if r.within_bound else 'false'}"
    )


def shorten_paths(g: Graph, paths: Sequence[PathSeq], k: int) -> PathSeq:
    """Given k+1 distinct equal-length walks u -> v, build one of length n-1 or n-2.

    In a k-geodetic graph k+1 distinct equal-length walks cannot all be
    geodesics.  Take the first non-geodesic walk a, let i0 be the least i
    whose prefix a[0..i] is not geodesic, take the lexicographically first
    geodesic b0 from u to a(i0) (its length j is i0-1 or i0-2), and splice:
    the result follows b0 and then the tail a(i0+1), ..., a(n).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(paths) < k + 1:
        raise ValueError(f"need at least {k + 1} walks, got {len(paths)}")
    first = paths[0]
    u, v, n = first.start, first.end, first.length
    seen = set()
    for p in paths:
        validate_path(g, p)
        if p.start != u or p.end != v:
            raise ValueError("walks must share both endpoints")
        if p.length != n:
            raise ValueError("walks must share their length")
        if p.vertices in seen:
            raise ValueError("walks must be pairwise distinct")
        seen.add(p.vertices)
    dist_u = g.dag(u).dist
    alpha = None
    for p in paths:
        if any(dist_u[p[i]] != i for i in range(n + 1)):
            alpha = p
            break
    if alpha is None:
        raise ValueError("all inputs are geodesic; nothing to shorten")
    i0 = next(i for i in range(n + 1) if dist_u[alpha[i]] != i)
    beta0 = enumerate_geodesics(g, u, alpha[i0], limit=1)[0][0]
    j = beta0.length
    # A geodesic prefix one step earlier forces j to be i0-1 or i0-2.
    assert j in (i0 - 1, i0 - 2)
    result = PathSeq(beta0.vertices + alpha.vertices[i0 + 1 :])
    assert result.length in (n - 1, n - 2)
    return result


@dataclass(frozen=True)
class Bigon:
    """Two distinct geodesics sharing both endpoints.

    Non-degenerate when the sides avoid each other at every interior index.
    """

    alpha: PathSeq
    beta: PathSeq
    degenerate: bool


def classify_bigon(g: Graph, alpha: PathSeq, beta: PathSeq) -> Bigon:
    if alpha.start != beta.start or alpha.end != beta.end:
        raise ValueError("bigon sides must share both endpoints")
    if alpha.length != beta.length:
        raise ValueError("bigon sides must be geodesics of one length")
    if alpha.vertices == beta.vertices:
        raise ValueError("bigon sides must be distinct")
    degenerate = any(alpha[i] == beta[i] for i in range(1, alpha.length))
    return Bigon(alpha, beta, degenerate)


def enumerate_bigons(
    host: GraphOrBall, scope: Optional[SearchScope] = None
) -> tuple[list[Bigon], Optional[int]]:
    """All geodesic bigons between scoped vertex pairs, plus the largest
    non-degenerate side length (None when no non-degenerate bigon shows up)."""
    scope = scope or SearchScope()
    g, pair_filter = _graph_and_filter(host)
    pairs, _, _ = _scoped_vertex_pairs(g, scope, pair_filter)
    out: list[Bigon] = []
    best: Optional[int] = None
    for d, u, v in pairs:
        if d == 0:
            continue
        geos, _ = enumerate_geodesics(g, u, v, limit=scope.max_geodesics)
        for i in range(len(geos)):
            for j in range(i + 1, len(geos)):
                b = classify_bigon(g, geos[i], geos[j])
                out.append(b)
                if not b.degenerate:
                    best = max(best or 0, b.alpha.length)
    return out, best


def bigon_report_line(b: Bigon) -> str:
    return (
        f"bigon: u={b.alpha.start} v={b.alpha.end} len={b.alpha.length} "
        f"degenerate={'true' if b.degenerate else 'false'}"
    )


@dataclass(frozen=True)
class GeodesicTriangle:
    """Three chained geodesics x->y->z->x.

    Non-degenerate when the index-1.. tails of the three sides are pairwise
    disjoint vertex sets; a zero-length side collapses two corners and makes
    the triangle degenerate outright.
    """

    alpha: PathSeq
    beta: PathSeq
    gamma: PathSeq
    degenerate: bool


def classify_triangle(g: Graph, alpha: PathSeq, beta: PathSeq, gamma: PathSeq) -> GeodesicTriangle:
    if alpha.end != beta.start or beta.end != gamma.start or gamma.end != alpha.start:
        raise ValueError("triangle sides must chain x->y->z->x")
    if min(alpha.length, beta.length, gamma.length) == 0:
        return GeodesicTriangle(alpha, beta, gamma, True)
    tails = [set(p.vertices[1:]) for p in (alpha, beta, gamma)]
    degenerate = bool(tails[0] & tails[1] or tails[0] & tails[2] or tails[1] & tails[2])
    return GeodesicTriangle(alpha, beta, gamma, degenerate)


def enumerate_triangles(
    host: GraphOrBall, scope: Optional[SearchScope] = None
) -> list[GeodesicTriangle]:
    """Geodesic triangles over corner triples x <= y <= z within scope.

    The triple cap reuses scope.max_pairs; each side enumerates at most
    scope.max_geodesics geodesics, and scope.max_length bounds side lengths.
    """
    scope = scope or SearchScope()
    g, pair_filter = _graph_and_filter(host)
    out: list[GeodesicTriangle] = []
    triples = 0
    for x in range(g.vertex_count):
        dx = g.dag(x).dist
        for y in range(x, g.vertex_count):
            if dx[y] == UNREACHED:
                continue
            dy = g.dag(y).dist
            for z in range(y, g.vertex_count):
                if dy[z] == UNREACHED:
                    continue
                sides = (dx[y], dy[z], dx[z])
                if scope.max_length is not None and max(sides) > scope.max_length:
                    continue
                if pair_filter is not None and not (
                    pair_filter(x, y) and pair_filter(y, z) and pair_filter(x, z)
                ):
                    continue
                if triples >= scope.max_pairs:
                    return out
                triples += 1
                alphas, _ = enumerate_geodesics(g, x, y, limit=scope.max_geodesics)
                betas, _ = enumerate_geodesics(g, y, z, limit=scope.max_geodesics)
                gammas, _ = enumerate_geodesics(g, z, x, limit=scope.max_geodesics)
                for a in alphas:
                    for b in betas:
                        for c in gammas:
                            out.append(classify_triangle(g, a, b, c))
    return out


def triangle_report_line(t: GeodesicTriangle) -> str:
    return (
        f"triangle: corners={t.alpha.start},{t.beta.start},{t.gamma.start} "
        f"sides={t.alpha.length},{t.beta.length},{t.gamma.length} "
        f"degenerate={'true' if t.degenerate else 'false'}"
    )
