"""Graph substrate: representation, structural predicates, matchings, Koenig covers.

Everything downstream (reductions, decompositions, cover extraction) works on
desk-scale undirected simple graphs, so the algorithms here favour auditability
over asymptotics: maximum matching is an exhaustive branch and bound, class
recognition is direct structure checking, and every tie is broken
lexicographically so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .errors import EmptyGraph, InstanceTooLarge, NotBipartite, PreconditionViolated

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with 0-based vertex ids and an ordered edge list.

    Edges are stored as (u, v) with u < v, in construction order; edge indices
    into this sequence are the currency of matchings and clusterings.
    """

    num_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        seen: set[Edge] = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.num_vertices):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.num_vertices}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        """Sorted adjacency lists (rebuilt on demand; graphs here are tiny)."""
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def used_vertices(self) -> list[int]:
        """Vertices incident to at least one edge, ascending."""
        return sorted({v for e in self.edges for v in e})


def make_graph(num_vertices: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph, normalizing each edge to (min, max) order."""
    return Graph(num_vertices, tuple(_normalize_edge(u, v) for u, v in edges))


def graph_from_edges(edges: Iterable[tuple[int, int]]) -> Graph:
    """Convenience constructor: num_vertices = 1 + max id (0 for no edges)."""
    norm = [_normalize_edge(u, v) for u, v in edges]
    n = 1 + max((v for e in norm for v in e), default=-1)
    return Graph(n, tuple(norm))


def subgraph(g: Graph, edge_indices: Iterable[int]) -> Graph:
    """Edge-induced subgraph keeping the host's vertex ids."""
    return Graph(g.num_vertices, tuple(g.edges[i] for i in sorted(set(edge_indices))))


def remove_edges(g: Graph, drop: Iterable[Edge]) -> Graph:
    dropped = {_normalize_edge(*e) for e in drop}
    return Graph(g.num_vertices, tuple(e for e in g.edges if e not in dropped))


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the "u v" per-line format.

    Lines starting with ``#`` and blank lines are ignored; an optional header
    line ``p <num_vertices>`` fixes the vertex count (otherwise it is one more
    than the largest id seen).
    """
    num_vertices: Optional[int] = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: malformed header {raw!r}")
            num_vertices = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append(_normalize_edge(int(parts[0]), int(parts[1])))
    if num_vertices is None:
        num_vertices = 1 + max((v for e in edges for v in e), default=-1)
    return Graph(max(num_vertices, 0), tuple(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.num_vertices}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are pairwise adjacent."""
    adj = [set(nb) for nb in g.adjacency()]
    # A common neighbour of an edge's endpoints closes a triangle.
    return not any(adj[u] & adj[v] for u, v in g.edges)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def common_vertex(edges: Sequence[Edge]) -> Optional[int]:
    """The vertex shared by *all* given edges, or None.

    For a single edge both endpoints qualify; the smaller one is returned.
    """
    if not edges:
        return None
    shared = set(edges[0])
    for e in edges[1:]:
        shared &= set(e)
        if not shared:
            return None
    return min(shared)


def is_star(g: Graph) -> bool:
    """True iff the graph has >= 1 edge and all edges share a common vertex."""
    return bool(g.edges) and common_vertex(g.edges) is not None


def edge_components(g: Graph) -> list[list[int]]:
    """Connected components as lists of edge indices (isolated vertices ignored).

    Components are ordered by their smallest edge index; indices ascend within.
    """
    parent = list(range(g.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for i, (u, _v) in enumerate(g.edges):
        groups.setdefault(find(u), []).append(i)
    return sorted(groups.values(), key=lambda idxs: idxs[0])


def is_connected_by_edges(g: Graph) -> bool:
    return len(edge_components(g)) <= 1


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a host graph, by edge index."""

    indices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen:
                raise ValueError("matching edges share a vertex")
            seen.update((u, v))

    def __len__(self) -> int:
        return len(self.indices)

    def vertices(self) -> set[int]:
        return {v for e in self.edges for v in e}


def _matching_from_indices(g: Graph, indices: Iterable[int]) -> Matching:
    idx = tuple(sorted(indices))
    return Matching(idx, tuple(g.edges[i] for i in idx))


def maximal_matching_greedy(g: Graph, order: Optional[Sequence[int]] = None) -> Matching:
    """Greedy maximal matching scanning edges in the given index order."""
    if order is None:
        order = range(g.num_edges)
    used: set[int] = set()
    picked: list[int] = []
    for i in order:
        u, v = g.edges[i]
        if u not in used and v not in used:
            picked.append(i)
            used.update((u, v))
    return _matching_from_indices(g, picked)


def maximum_matching(g: Graph, ceiling: int = 24) -> Matching:
    """Exhaustive maximum matching with include/exclude branch and bound.

    Edges are branched in ascending index order with the include branch first,
    so the first matching of maximum cardinality encountered is the
    lexicographically smallest sorted index tuple — the documented tie-break.
    """
    m = g.num_edges
    if m > ceiling:
        raise InstanceTooLarge(f"{m} edges exceeds matching ceiling {ceiling}")
    best: list[int] = []

    def search(i: int, used: set[int], current: list[int]) -> None:
        nonlocal best
        if len(current) + (m - i) <= len(best):
            return
        if i == m:
            if len(current) > len(best):
                best = list(current)
            return
        u, v = g.edges[i]
        if u not in used and v not in used:
            used.update((u, v))
            current.append(i)
            search(i + 1, used, current)
            current.pop()
            used.difference_update((u, v))
        search(i + 1, used, current)

    search(0, set(), [])
    return _matching_from_indices(g, best)


def second_maximum_matching(g: Graph, m: Matching, ceiling: int = 24) -> Matching:
    """Maximum matching of g minus the edges of m (the host indices are kept)."""
    for i, e in zip(m.indices, m.edges):
        if g.edges[i] != e:
            raise PreconditionViolated("matching does not belong to this graph")
    remaining = [i for i in range(g.num_edges) if i not in set(m.indices)]
    sub = Graph(g.num_vertices, tuple(g.edges[i] for i in remaining))
    inner = maximum_matching(sub, ceiling=ceiling)
    return _matching_from_indices(g, (remaining[i] for i in inner.indices))


# ---------------------------------------------------------------------------
# Class recognition
# ---------------------------------------------------------------------------

class ClassTag(str, Enum):
    SINGLE_EDGE = "SingleEdge"
    STAR = "Star"
    THREE_P2 = "ThreeP2"
    A_N = "A_n"
    L_N = "L_n"
    BRIDGE = "Bridge"
    C5 = "C5"
    OTHER_NON_STAR = "OtherNonStar"


FUNDAMENTAL_TAGS = frozenset({ClassTag.THREE_P2, ClassTag.A_N, ClassTag.L_N})


@dataclass(frozen=True)
class GraphClass:
    """Recognized structural class with a witness that lets callers re-verify it.

    ``n`` is the class parameter for A_n / L_n; ``p``/``q`` are the star sizes
    of a bridge graph (p >= q >= 2 — a bridge with q = 1 *is* L_n and is tagged
    as such).
    """

    tag: ClassTag
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    witness: dict = field(default_factory=dict)

    @property
    def is_fundamental(self) -> bool:
        return self.tag in FUNDAMENTAL_TAGS

    def describe(self) -> str:
        if self.tag is ClassTag.A_N:
            return f"A_{self.n}"
        if self.tag is ClassTag.L_N:
            return f"L_{self.n}"
        if self.tag is ClassTag.BRIDGE:
            return f"Bridge({self.p},{self.q})"
        return self.tag.value


def bridge_structure(g: Graph) -> Optional[tuple[Edge, int, int]]:
    """Detect the two-stars-joined-by-an-edge shape.

    Returns (bridge_edge, p, q) where p / q count the star edges on the two
    sides (both >= 1), or None. Candidate bridge edges are tried in index
    order, so the witness is deterministic.
    """
    if g.num_edges < 3:
        return None
    for b in g.edges:
        s, t = b
        left: set[int] = set()
        right: set[int] = set()
        ok = True
        for e in g.edges:
            if e == b:
                continue
            u, v = e
            on_s = s in e
            on_t = t in e
            if on_s == on_t:  # touches both (triangle) or neither
                ok = False
                break
            leaf = v if (u == s or u == t) else u
            (left if on_s else right).add(leaf)
        if not ok or not left or not right:
            continue
        if left & right:
            continue  # a shared leaf would merge the stars into a path
        return b, len(left), len(right)
    return None


def _cycle_order(g: Graph) -> Optional[list[int]]:
    """Vertex order of a single cycle covering all edges, or None."""
    verts = g.used_vertices()
    deg = g.degrees()
    if any(deg[v] != 2 for v in verts) or len(verts) != g.num_edges:
        return None
    if not is_connected_by_edges(g):
        return None
    adj = g.adjacency()
    start = verts[0]
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        step = nxt[0]
        if step == start:
            break
        order.append(step)
        prev, cur = cur, step
    return order


def classify(g: Graph) -> GraphClass:
    """Recognize the cluster classes the cost lemmas name.

    The only disconnected graphs that earn a fundamental tag are 3-P2 and the
    A_n family (a star plus one vertex-disjoint edge; A_1 = 2-P2); every other
    disconnected graph is OtherNonStar. Behaviour on graphs with triangles is
    outside the theory; we still return OtherNonStar rather than raising.
    """
    if g.num_edges == 0:
        raise EmptyGraph("cannot classify a graph with no edges")
    if g.num_edges == 1:
        return GraphClass(ClassTag.SINGLE_EDGE, witness={"edge": g.edges[0]})
    center = common_vertex(g.edges)
    if center is not None:
        return GraphClass(ClassTag.STAR, witness={"center": center})

    comps = edge_components(g)
    if len(comps) >= 2:
        if len(comps) == 3 and g.num_edges == 3:
            return GraphClass(ClassTag.THREE_P2, witness={"edges": g.edges})
        if len(comps) == 2:
            small, large = sorted(comps, key=len)
            if len(small) == 1:
                star_part = [g.edges[i] for i in large]
                c = common_vertex(star_part)
                if c is not None:
                    return GraphClass(
                        ClassTag.A_N,
                        n=len(large),
                        witness={"star_center": c, "lone_edge": g.edges[small[0]]},
                    )
        return GraphClass(ClassTag.OTHER_NON_STAR)

    cycle = _cycle_order(g)
    if cycle is not None and len(cycle) == 5:
        return GraphClass(ClassTag.C5, witness={"cycle": cycle})

    bridge = bridge_structure(g)
    if bridge is not None:
        b, p, q = bridge
        if min(p, q) == 1:
            n = max(p, q)
            # Orient the witness so the n-star center comes first.
            s, t = b if p >= q else (b[1], b[0])
            return GraphClass(ClassTag.L_N, n=n, witness={"bridge": b, "centers": (s, t)})
        return GraphClass(
            ClassTag.BRIDGE, p=max(p, q), q=min(p, q), witness={"bridge": b}
        )
    return GraphClass(ClassTag.OTHER_NON_STAR)


# ---------------------------------------------------------------------------
# Covers
# ---------------------------------------------------------------------------

def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    cover = set(s)
    return all(u in cover or v in cover for u, v in g.edges)


def _two_color(g: Graph) -> list[int]:
    """BFS 2-coloring; raises NotBipartite on an odd cycle. Isolated -> color 0."""
    color = [-1] * g.num_vertices
    adj = g.adjacency()
    for start in range(g.num_vertices):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartite(f"odd cycle through vertices {u} and {w}")
    return color


def konig_cover(g: Graph) -> set[int]:
    """Minimum vertex cover of a bipartite graph via Koenig's construction.

    Augmenting-path matching from the left class, then the standard
    alternating-reachability set Z: the cover is (L \\ Z) u (R n Z), whose size
    equals the maximum matching size.
    """
    color = _two_color(g)
    adj = g.adjacency()
    left = [v for v in range(g.num_vertices) if color[v] == 0]
    match: dict[int, int] = {}  # vertex -> matched partner, both directions

    def try_augment(u: int, visited: set[int]) -> bool:
        for w in adj[u]:
            if w in visited:
                continue
            visited.add(w)
            if w not in match or try_augment(match[w], visited):
                match[w] = u
                match[u] = w
                return True
        return False

    for u in left:
        if u not in match:
            try_augment(u, set())

    # Alternating reachability from unmatched left vertices.
    z: set[int] = {u for u in left if u not in match}
    frontier = list(z)
    while frontier:
        u = frontier.pop()
        for w in adj[u]:  # u on the left: travel non-matching edges
            if w in z or match.get(u) == w:
                continue
            z.add(w)
            p = match.get(w)  # w on the right: travel its matching edge back
            if p is not None and p not in z:
                z.add(p)
                frontier.append(p)
    cover = {u for u in left if u not in z}
    cover |= {v for v in range(g.num_vertices) if color[v] == 1 and v in z}
    assert is_vertex_cover(g, cover)
    assert 2 * len(cover) == len(match), "Koenig size != matching size"
    return cover
