"""Graph-theoretic machinery for partial cubes.

Distances, bipartiteness, semicubes, the edge relation Theta, partial-cube
recognition by two independent methods, isometric hypercube embedding,
edge-pair classification into six metric cases, and the arc relation used
to recognize mediatic graphs.

All algorithms are plain BFS-based and target desk-scale inputs.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .errors import InputError

Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    """Canonical unordered-edge key (endpoints in sorted order)."""
    return (u, v) if u <= v else (v, u)


class LabeledGraph:
    """Undirected simple graph with optional token-pair edge labels."""

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[Edge],
        labels: Mapping[Edge, frozenset[str]] | None = None,
    ) -> None:
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex labels")
        known = set(self.vertices)
        canonical: list[Edge] = []
        seen: set[Edge] = set()
        for u, v in edges:
            if u not in known or v not in known:
                raise InputError(f"edge ({u!r}, {v!r}) references an unknown vertex")
            if u == v:
                raise InputError(f"loop at {u!r}")
            key = edge_key(u, v)
            if key in seen:
                raise InputError(f"duplicate edge {key!r}")
            seen.add(key)
            canonical.append(key)
        self.edges: tuple[Edge, ...] = tuple(sorted(canonical))
        self.labels: dict[Edge, frozenset[str]] = {}
        if labels:
            for (u, v), pair in labels.items():
                key = edge_key(u, v)
                if key not in seen:
                    raise InputError(f"label on non-edge {key!r}")
                self.labels[key] = frozenset(pair)
        adj: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._dist: dict[str, dict[str, int]] | None = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            set(self.vertices) == set(other.vertices)
            and set(self.edges) == set(other.edges)
            and self.labels == other.labels
        )

    def __repr__(self) -> str:
        return f"LabeledGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self.labels or edge_key(u, v) in set(self.edges)

    def distances(self) -> dict[str, dict[str, int]]:
        """All-pairs shortest-path lengths; unreachable pairs are absent."""
        if self._dist is None:
            self._dist = {v: self._bfs(v) for v in self.vertices}
        return self._dist

    def _bfs(self, source: str) -> dict[str, int]:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def distance(self, u: str, v: str) -> int:
        d = self.distances()[u].get(v)
        if d is None:
            raise InputError(f"no path between {u!r} and {v!r}")
        return d

    def connected_witness(self) -> tuple[str, str] | None:
        """None if connected, else a lexicographically small unreachable pair."""
        if not self.vertices:
            return None
        start = min(self.vertices)
        reach = self.distances()[start]
        for v in sorted(self.vertices):
            if v not in reach:
                return (start, v)
        return None


def all_pairs_distances(graph: LabeledGraph) -> dict[str, dict[str, int]]:
    """Exact shortest-path distance table; rejects disconnected graphs."""
    witness = graph.connected_witness()
    if witness is not None:
        raise InputError(f"graph is disconnected: no path between {witness[0]!r} and {witness[1]!r}")
    return graph.distances()


def is_bipartite(graph: LabeledGraph) -> tuple[bool, list[str] | None]:
    """BFS 2-coloring; returns an odd cycle (vertex list) on failure."""
    color: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    depth: dict[str, int] = {}
    for root in graph.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in graph.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, _odd_cycle(u, w, parent, depth)
    return True, None


def _odd_cycle(
    u: str, w: str, parent: dict[str, str | None], depth: dict[str, int]
) -> list[str]:
    # Walk both endpoints up the BFS tree to their lowest common ancestor.
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    # left ends at the ancestor; drop it from the right-hand branch.
    return left + right[-2::-1]


def semicube(graph: LabeledGraph, s: str, t: str) -> frozenset[str]:
    """Vertices strictly closer to ``s`` than to ``t`` across edge {s, t}."""
    if edge_key(s, t) not in graph.edges:
        raise InputError(f"({s!r}, {t!r}) is not an edge")
    dist = all_pairs_distances(graph)
    return frozenset(p for p in graph.vertices if dist[p][s] < dist[p][t])


def theta(graph: LabeledGraph, e1: Edge, e2: Edge) -> bool:
    """Winkler's relation on edges: d(S,P)+d(T,Q) != d(S,Q)+d(T,P)."""
    s, t = e1
    p, q = e2
    for u, v in (e1, e2):
        if edge_key(u, v) not in graph.edges:
            raise InputError(f"({u!r}, {v!r}) is not an edge")
    dist = all_pairs_distances(graph)
    return dist[s][p] + dist[t][q] != dist[s][q] + dist[t][p]


@dataclass(frozen=True)
class ThetaPartition:
    """Theta equivalence classes, canonically indexed.

    Classes are ordered by their lexicographically smallest edge; edges
    within a class are sorted.
    """

    classes: tuple[tuple[Edge, ...], ...]

    @property
    def class_of(self) -> dict[Edge, int]:
        return {e: i for i, cls in enumerate(self.classes) for e in cls}

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class ThetaTransitivityWitness:
    """Edges with e1 Theta e2 and e2 Theta e3 but not e1 Theta e3."""

    e1: Edge
    e2: Edge
    e3: Edge


def theta_classes(graph: LabeledGraph) -> ThetaPartition | ThetaTransitivityWitness:
    """Partition edges by Theta, or report a transitivity failure."""
    dist = all_pairs_distances(graph)
    bip, odd = is_bipartite(graph)
    if not bip:
        raise InputError(f"graph is not bipartite (odd cycle {odd})")
    edges = list(graph.edges)
    n = len(edges)
    related: list[set[int]] = []
    for i, (s, t) in enumerate(edges):
        row = set()
        for j, (p, q) in enumerate(edges):
            if dist[s][p] + dist[t][q] != dist[s][q] + dist[t][p]:
                row.add(j)
        related.append(row)
    for i in range(n):
        for j in related[i]:
            extra = related[j] - related[i]
            if extra:
                k = min(extra)
                return ThetaTransitivityWitness(edges[i], edges[j], edges[k])
    assigned: dict[int, int] = {}
    classes: list[tuple[Edge, ...]] = []
    for i in range(n):
        if i in assigned:
            continue
        members = sorted(related[i] | {i})
        for j in members:
            assigned[j] = len(classes)
        classes.append(tuple(edges[j] for j in members))
    classes.sort(key=lambda cls: cls[0])
    return ThetaPartition(tuple(classes))


@dataclass(frozen=True)
class PartialCubeResult:
    holds: bool
    witness: object | None
    theta_partition: ThetaPartition | None

    def __bool__(self) -> bool:
        return self.holds


def _semicube_convexity_witness(
    graph: LabeledGraph, dist: dict[str, dict[str, int]]
) -> tuple[Edge, str, str, str] | None:
    """First (edge, u, v, w) where w outside the semicube lies on a u-v geodesic."""
    for s, t in graph.edges:
        for side in ((s, t), (t, s)):
            cube = semicube(graph, *side)
            outside = [w for w in graph.vertices if w not in cube]
            for u in sorted(cube):
                for v in sorted(cube):
                    if u >= v:
                        continue
                    for w in sorted(outside):
                        if dist[u][w] + dist[w][v] == dist[u][v]:
                            return ((s, t), u, v, w)
    return None


def is_partial_cube(graph: LabeledGraph) -> PartialCubeResult:
    """Partial-cube recognition via Theta transitivity, cross-checked
    against semicube convexity.  The two methods must agree."""
    witness = graph.connected_witness()
    if witness is not None:
        return PartialCubeResult(False, ("disconnected", witness), None)
    bip, odd = is_bipartite(graph)
    if not bip:
        return PartialCubeResult(False, ("odd_cycle", odd), None)
    partition = theta_classes(graph)
    primary_holds = isinstance(partition, ThetaPartition)
    convexity = _semicube_convexity_witness(graph, graph.distances())
    if primary_holds != (convexity is None):
        raise RuntimeError(
            "partial-cube methods disagree: "
            f"theta transitive={primary_holds}, convexity witness={convexity}"
        )
    if primary_holds:
        return PartialCubeResult(True, None, partition)
    return PartialCubeResult(False, partition, None)


@dataclass(frozen=True)
class HypercubeEmbedding:
    """Per-vertex sets of Theta-class indices with a fixed base vertex."""

    base: str
    sets: Mapping[str, frozenset[int]]
    dimension: int


def embed_hypercube(
    graph: LabeledGraph, partition: ThetaPartition | None = None
) -> HypercubeEmbedding:
    """Isometric embedding into the hypercube over Theta-class indices.

    The base vertex is the lexicographically smallest one and maps to the
    empty set; every other vertex gets the class indices crossed along any
    shortest path from the base.  The isometry is verified before return.
    """
    if partition is None:
        result = is_partial_cube(graph)
        if not result.holds:
            raise InputError(f"not a partial cube: {result.witness}")
        partition = result.theta_partition
    class_of = partition.class_of
    base = min(graph.vertices)
    sets: dict[str, frozenset[int]] = {base: frozenset()}
    queue = deque([base])
    while queue:
        u = queue.popleft()
        for w in graph.neighbors(u):
            if w not in sets:
                sets[w] = sets[u] ^ {class_of[edge_key(u, w)]}
                queue.append(w)
    dist = graph.distances()
    for u in graph.vertices:
        for v in graph.vertices:
            if len(sets[u] ^ sets[v]) != dist[u][v]:
                raise RuntimeError(f"embedding is not isometric at ({u!r}, {v!r})")
    return HypercubeEmbedding(base, sets, len(partition))


def classify_edge_pair(graph: LabeledGraph, e1: Edge, e2: Edge) -> int:
    """Classify two oriented edges into one of the six metric cases.

    Cases 1-4 place both edges on a common shortest path; cases 5 and 6
    form a 'rectangle' and coincide with the Theta relation.
    """
    s, t = e1
    p, q = e2
    for u, v in (e1, e2):
        if edge_key(u, v) not in graph.edges:
            raise InputError(f"({u!r}, {v!r}) is not an edge")
    if edge_key(s, t) == edge_key(p, q):
        raise InputError("edges must be distinct")
    bip, odd = is_bipartite(graph)
    if not bip:
        raise InputError(f"graph is not bipartite (odd cycle {odd})")
    dist = all_pairs_distances(graph)
    a, b = dist[s][p], dist[t][q]
    c, d = dist[t][p], dist[s][q]
    if c == d == a + 1 == b - 1:
        return 1
    if c == d == a - 1 == b + 1:
        return 2
    if a == b == c + 1 == d - 1:
        return 3
    if a == b == c - 1 == d + 1:
        return 4
    if a == b == c + 1 == d + 1:
        return 5
    if a == b == c - 1 == d - 1:
        return 6
    raise RuntimeError(f"no case matched for {e1!r}, {e2!r}")  # unreachable on bipartite input


Arc = tuple[str, str]


def _arc_related(dist: dict[str, dict[str, int]], a1: Arc, a2: Arc) -> bool:
    s, t = a1
    p, q = a2
    return dist[s][p] == dist[t][q] == dist[t][p] - 1 == dist[s][q] - 1


def is_mediatic(graph: LabeledGraph) -> tuple[bool, object | None]:
    """True iff connected, bipartite, and the arc relation from the
    'Case 6' equations is transitive."""
    witness = graph.connected_witness()
    if witness is not None:
        return False, ("disconnected", witness)
    bip, odd = is_bipartite(graph)
    if not bip:
        return False, ("odd_cycle", odd)
    dist = graph.distances()
    arcs: list[Arc] = []
    for u, v in graph.edges:
        arcs.append((u, v))
        arcs.append((v, u))
    arcs.sort()
    related: list[set[int]] = []
    for a1 in arcs:
        related.append({j for j, a2 in enumerate(arcs) if _arc_related(dist, a1, a2)})
    for i in range(len(arcs)):
        for j in related[i]:
            extra = related[j] - related[i]
            if extra:
                k = min(extra)
                return False, ("intransitive", arcs[i], arcs[j], arcs[k])
    return True, None
