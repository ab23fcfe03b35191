"""Finite simple graphs: layered BFS DAGs, geodesic counting, k-geodeticity.

Vertices are dense integer ids 0..n-1.  Counting is exact (Python integers)
unless a saturation cap is requested, in which case per-pair counts stop
growing at the cap; a saturated value means "at least this many".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

UNREACHED = -1


class UnreachablePairError(ValueError):
    """No path exists between the requested vertices."""


class GraphFormatError(ValueError):
    """Malformed graph description, textual or structural."""


class SaturationError(RuntimeError):
    """A saturating count hit its cap, so the exact value is unknown."""


@dataclass(frozen=True)
class PathSeq:
    """A walk v_0..v_n; length counts edges, so a single vertex has length 0.

    Walks may repeat vertices.  ``geodesic_checked`` marks paths handed out
    by a geodesic enumerator and is ignored for equality and hashing.
    """

    vertices: tuple[int, ...]
    geodesic_checked: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a path needs at least one vertex")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __getitem__(self, i: int) -> int:
        return self.vertices[i]

    def reversed(self) -> "PathSeq":
        return PathSeq(tuple(reversed(self.vertices)), self.geodesic_checked)


@dataclass
class GeodesicDag:
    """Shortest-path data from a single BFS source.

    dist[v] is UNREACHED for vertices in other components.  preds[v] lists
    the neighbours u of v with dist[u] = dist[v] - 1, and counts[v] is the
    number of geodesics source -> v (saturating at count_cap when set).
    """

    source: int
    dist: list[int]
    preds: list[list[int]]
    counts: list[int]
    count_cap: Optional[int] = None


class Graph:
    """Immutable simple undirected graph.

    Adjacency lists are sorted, which fixes the order of every enumeration
    built on top of them.  vertex_labels and edge_labels (keyed by directed
    pair) are optional display tables.  BFS DAGs are memoised per source, so
    repeated distance or count queries are cheap; all queries are pure reads.
    """

    def __init__(
        self,
        vertex_count: int,
        adjacency: Sequence[Iterable[int]],
        vertex_labels: Optional[Sequence[str]] = None,
        edge_labels: Optional[dict[tuple[int, int], str]] = None,
    ):
        if vertex_count < 0:
            raise GraphFormatError("vertex_count must be nonnegative")
        if len(adjacency) != vertex_count:
            raise GraphFormatError("adjacency length disagrees with vertex_count")
        adj = []
        for u, nbrs in enumerate(adjacency):
            s = sorted(set(nbrs))
            for v in s:
                if not 0 <= v < vertex_count:
                    raise GraphFormatError(f"vertex {v} out of range in adjacency of {u}")
                if v == u:
                    raise GraphFormatError(f"self-loop at vertex {u}")
            adj.append(tuple(s))
        nbr_sets = [set(s) for s in adj]
        for u in range(vertex_count):
            for v in adj[u]:
                if u not in nbr_sets[v]:
                    raise GraphFormatError(f"edge {u}-{v} is not symmetric")
        self.vertex_count = vertex_count
        self.adj: tuple[tuple[int, ...], ...] = tuple(adj)
        self.vertex_labels = tuple(vertex_labels) if vertex_labels is not None else None
        if self.vertex_labels is not None and len(self.vertex_labels) != vertex_count:
            raise GraphFormatError("vertex_labels length disagrees with vertex_count")
        self.edge_labels = dict(edge_labels) if edge_labels else None
        self._dag_cache: dict[tuple[int, Optional[int]], GeodesicDag] = {}
        self._connected: Optional[bool] = None

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges as pairs (u, v) with u < v, in sorted order."""
        for u in range(self.vertex_count):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def is_connected(self) -> bool:
        if self._connected is None:
            if self.vertex_count == 0:
                self._connected = True
            else:
                d = self.dag(0)
                self._connected = all(x != UNREACHED for x in d.dist)
        return self._connected

    def dag(self, source: int, count_cap: Optional[int] = None) -> GeodesicDag:
        key = (source, count_cap)
        got = self._dag_cache.get(key)
        if got is None:
            got = bfs_dag(self, source, count_cap=count_cap)
            self._dag_cache[key] = got
        return got

    def dist(self, u: int, v: int) -> int:
        """BFS distance between u and v."""
        d = self.dag(u).dist[v]
        if d == UNREACHED:
            raise UnreachablePairError(f"no path between vertices {u} and {v}")
        return d

    def check_vertex(self, u: int) -> None:
        if not 0 <= u < self.vertex_count:
            raise ValueError(f"vertex {u} out of range (n={self.vertex_count})")


def build_graph(
    edge_list: Iterable[tuple[int, int]],
    vertex_count: int,
    vertex_labels: Optional[Sequence[str]] = None,
    edge_labels: Optional[dict[tuple[int, int], str]] = None,
) -> Graph:
    """Build a Graph from an undirected edge list (duplicates collapse)."""
    adjacency: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in edge_list:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphFormatError(f"edge ({u}, {v}) out of range")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(vertex_count, adjacency, vertex_labels, edge_labels)


def bfs_dag(g: Graph, source: int, count_cap: Optional[int] = None) -> GeodesicDag:
    """Layered BFS from source: distances, geodesic predecessors, counts.

    counts[v] is the sum of counts over predecessors, clipped at count_cap
    when a cap is given.
    """
    g.check_vertex(source)
    if count_cap is not None and count_cap < 1:
        raise ValueError("count_cap must be at least 1")
    n = g.vertex_count
    dist = [UNREACHED] * n
    preds: list[list[int]] = [[] for _ in range(n)]
    counts = [0] * n
    dist[source] = 0
    counts[source] = 1
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du1 = dist[u] + 1
        for v in g.adj[u]:
            if dist[v] == UNREACHED:
                dist[v] = du1
                queue.append(v)
            if dist[v] == du1:
                preds[v].append(u)
                c = counts[v] + counts[u]
                counts[v] = c if count_cap is None else min(c, count_cap)
    return GeodesicDag(source, dist, preds, counts, count_cap)


def count_geodesics(g: Graph, u: int, v: int, count_cap: Optional[int] = None) -> int:
    """Number of geodesics u -> v; 1 when u = v (the empty path)."""
    g.check_vertex(u)
    g.check_vertex(v)
    dag = g.dag(u, count_cap)
    if dag.dist[v] == UNREACHED:
        raise UnreachablePairError(f"vertices {u} and {v} are in different components")
    return dag.counts[v]


def enumerate_geodesics(
    g: Graph, u: int, v: int, limit: Optional[int] = None
) -> tuple[list[PathSeq], bool]:
    """All geodesics u -> v in lexicographic vertex order.

    Returns (paths, truncated); with a limit, at most limit paths come back
    and truncated says whether more exist.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if limit is not None and limit < 0:
        raise ValueError("limit must be nonnegative")
    du = g.dag(u).dist
    dv = g.dag(v).dist
    total = du[v]
    if total == UNREACHED:
        raise UnreachablePairError(f"vertices {u} and {v} are in different components")
    out: list[PathSeq] = []
    truncated = False
    path = [u]

    def extend(x: int) -> bool:
        # Returns False once the limit is exceeded, ending the search.
        if x == v:
            if limit is not None and len(out) == limit:
                return False
            out.append(PathSeq(tuple(path), geodesic_checked=True))
            return True
        nxt = du[x] + 1
        for w in g.adj[x]:
            if du[w] == nxt and dv[w] == total - nxt:
                path.append(w)
                ok = extend(w)
                path.pop()
                if not ok:
                    return False
        return True

    if not extend(u):
        truncated = True
    return out, truncated


def _pair_counts(
    g: Graph,
    pair_filter: Optional[Callable[[int, int], bool]],
    count_cap: Optional[int],
) -> list[tuple[int, int, int, int]]:
    """(dist, u, v, count) for admitted pairs u < v, sorted by (dist, u, v).

    For a single-vertex graph the lone pair (0, 0) is admitted so that the
    scan is never empty.
    """
    if g.vertex_count == 0:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise UnreachablePairError("graph is not connected")
    if g.vertex_count == 1:
        return [(0, 0, 0, 1)] if (pair_filter is None or pair_filter(0, 0)) else []
    rows: list[tuple[int, int, int, int]] = []
    for u in range(g.vertex_count):
        dag = g.dag(u, count_cap)
        for v in range(u + 1, g.vertex_count):
            if pair_filter is not None and not pair_filter(u, v):
                continue
            rows.append((dag.dist[v], u, v, dag.counts[v]))
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    return rows


def min_geodetic_k(
    g: Graph,
    pair_filter: Optional[Callable[[int, int], bool]] = None,
    count_cap: Optional[int] = None,
) -> tuple[int, tuple[int, int]]:
    """Smallest k for which g is k-geodetic, with a witness pair.

    The witness is the first maximising pair when pairs are ordered by
    (distance, u, v).  The diagonal is skipped except on a single-vertex
    graph, where the answer is 1 with witness (0, 0).
    """
    rows = _pair_counts(g, pair_filter, count_cap)
    if not rows:
        raise ValueError("no admitted vertex pairs")
    best = None
    for d, u, v, c in rows:
        if best is None or c > best[0]:
            best = (c, (u, v))
    k, witness = best
    if count_cap is not None and k >= count_cap:
        raise SaturationError(f"min geodetic k is at least {count_cap}")
    return k, witness


def is_k_geodetic(
    g: Graph, k: int, pair_filter: Optional[Callable[[int, int], bool]] = None
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether every vertex pair has at most k geodesics.

    Counting saturates at k + 1 per pair.  On failure the counterexample is
    the first violating pair in (distance, u, v) order.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    rows = _pair_counts(g, pair_filter, count_cap=k + 1)
    for d, u, v, c in rows:
        if c > k:
            return False, (u, v)
    return True, None


def is_complete_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Part sizes (small, large) when g is a complete bipartite graph K_{k,l}."""
    if g.vertex_count == 0:
        return None
    if not g.is_connected():
        raise UnreachablePairError("graph is not connected")
    color = [UNREACHED] * g.vertex_count
    color[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if color[v] == UNREACHED:
                color[v] = 1 - color[u]
                queue.append(v)
            elif color[v] == color[u]:
                return None
    part = [sum(1 for c in color if c == 0), sum(1 for c in color if c == 1)]
    for u in range(g.vertex_count):
        if g.degree(u) != part[1 - color[u]]:
            return None
    return (min(part), max(part))


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    Header ``graph <vertex_count>``, one ``e <u> <v>`` line per edge,
    ``#`` comments and blank lines allowed anywhere.
    """
    vertex_count = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            if vertex_count is not None:
                raise GraphFormatError(f"line {lineno}: duplicate graph header")
            if len(parts) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'graph <vertex_count>'")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}")
        elif parts[0] == "e":
            if vertex_count is None:
                raise GraphFormatError(f"line {lineno}: edge before graph header")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad edge endpoints")
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {lineno}: unknown directive {parts[0]!r}")
    if vertex_count is None:
        raise GraphFormatError("missing 'graph <vertex_count>' header")
    try:
        return build_graph(edges, vertex_count)
    except ValueError as exc:
        raise GraphFormatError(str(exc))


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.vertex_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: Graph, name: str = "G") -> str:
    """DOT serialization; vertex and edge labels included when present."""
    lines = [f"graph {name} {{"]
    for u in range(g.vertex_count):
        if g.vertex_labels is not None:
            lines.append(f"  {u} [label={_dot_quote(g.vertex_labels[u])}];")
        else:
            lines.append(f"  {u};")
    for u, v in g.edges():
        label = None
        if g.edge_labels is not None:
            label = g.edge_labels.get((u, v))
        if label is not None:
            lines.append(f"  {u} -- {v} [label={_dot_quote(label)}];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
