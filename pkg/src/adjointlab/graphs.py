"""Simple undirected graphs with 1-based vertices, plus the constructions
this toolkit revolves around: the line graph and the ordered "hat" graph
built on the edge set.

Graphs are immutable after construction.  Vertices are the integers 1..n;
internally each vertex also carries a 0-based adjacency bitmask, which is
what the counting routines consume.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import CapExceededError, EdgelessGraphError, GraphParseError

MAX_VERTICES = 62  # graph6 single-byte length regime
ENUMERATION_MAX_N = 7


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: tuple[tuple[int, int], ...]
    # 0-based adjacency bitmasks, derived; bit (v-1) of masks[u-1] <=> u~v
    masks: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        masks = [0] * self.n
        seen = set()
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge ({u},{v}) for n={self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        """Build a graph from unordered vertex pairs (any order, no dups)."""
        canon = sorted((u, v) if u < v else (v, u) for u, v in pairs)
        return cls(n, tuple(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        m = self.masks[v - 1]
        return frozenset(i + 1 for i in range(self.n) if m >> i & 1)

    def degree(self, v: int) -> int:
        return self.masks[v - 1].bit_count()

    def max_degree(self) -> int:
        return max(m.bit_count() for m in self.masks)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u - 1] >> (v - 1) & 1)

    def is_connected(self) -> bool:
        seen = 1  # vertex 1, as a bitmask
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= self.masks[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def complement(self) -> "Graph":
        pairs = [
            (u, v)
            for u in range(1, self.n + 1)
            for v in range(u + 1, self.n + 1)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, tuple(pairs))


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Delete v and relabel remaining vertices to 1..n-1 preserving order.

    Returns the new graph and the old->new vertex map.
    """
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} not in graph")
    if g.n == 1:
        raise ValueError("cannot delete the last vertex")
    remap = {}
    k = 1
    for u in range(1, g.n + 1):
        if u != v:
            remap[u] = k
            k += 1
    pairs = [(remap[a], remap[b]) for a, b in g.edges if v not in (a, b)]
    return Graph.from_edges(g.n - 1, pairs), remap


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    u, v = min(e), max(e)
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not in graph")
    return Graph(g.n, tuple(p for p in g.edges if p != (u, v)))


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on a nonempty vertex subset, relabelled to 1..|S|.

    Returns the new graph and the old->new vertex map.
    """
    S = sorted(set(vertices))
    if not S:
        raise ValueError("empty vertex set")
    if not all(1 <= v <= g.n for v in S):
        raise ValueError("vertex set not contained in graph")
    remap = {v: i + 1 for i, v in enumerate(S)}
    pairs = [(remap[a], remap[b]) for a, b in g.edges if a in remap and b in remap]
    return Graph.from_edges(len(S), pairs), remap


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g2's vertices are shifted up by g1.n."""
    shifted = [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return Graph(g1.n + g2.n, tuple(list(g1.edges) + shifted))


# ---------------------------------------------------------------------------
# vertex orderings


@dataclass(frozen=True)
class VertexOrdering:
    """A permutation of 1..n; perm[p-1] is the vertex at position p."""

    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.perm)

    def position_of(self) -> tuple[int, ...]:
        """Inverse map: position_of()[v-1] is the position of vertex v."""
        pos = [0] * self.n
        for p, v in enumerate(self.perm, start=1):
            pos[v - 1] = p
        return tuple(pos)

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reverse(cls, n: int) -> "VertexOrdering":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def shuffled(cls, n: int, seed) -> "VertexOrdering":
        """Deterministic pseudo-random ordering for a given seed."""
        perm = list(range(1, n + 1))
        random.Random(str(seed)).shuffle(perm)
        return cls(tuple(perm))


# ---------------------------------------------------------------------------
# edge-labelled graphs (line graph and hat graph)


@dataclass(frozen=True)
class HatGraph:
    """A graph whose vertices are labelled by edges (u,v), u<v, of a source
    graph.  Produced by line_graph and hat_of; hat vertex i+1 carries
    labels[i]."""

    graph: Graph
    labels: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError("one label per hat vertex required")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")
        if any(not u < v for u, v in self.labels):
            raise ValueError("labels must be ordered pairs (u,v) with u<v")

    def label_edges(self) -> frozenset[frozenset[tuple[int, int]]]:
        """Hat edges expressed as unordered pairs of labels."""
        return frozenset(
            frozenset((self.labels[a - 1], self.labels[b - 1]))
            for a, b in self.graph.edges
        )


def line_graph(g: Graph) -> HatGraph:
    """Graph on the edges of g; two edge-vertices adjacent iff the edges
    share an endpoint."""
    if g.edge_count == 0:
        raise EdgelessGraphError("line graph of an edgeless graph")
    labels = tuple(sorted(g.edges))
    pairs = []
    for a in range(len(labels)):
        ua, va = labels[a]
        for b in range(a + 1, len(labels)):
            ub, vb = labels[b]
            if ua in (ub, vb) or va in (ub, vb):
                pairs.append((a + 1, b + 1))
    return HatGraph(Graph(len(labels), tuple(pairs)), labels)


def _hat_adjacent(pa, pb, adj_rule_masks, sabotage=False) -> bool:
    """Adjacency rule for hat vertices given their position pairs (i,j), (k,l)
    with i<j and k<l.  Oriented so that j <= l; adjacent iff i==k, or j==k,
    or (j==l and the source vertices at positions i,k are NOT adjacent)."""
    i, j = pa
    k, l = pb
    if l < j:
        i, j, k, l = k, l, i, j
    if i == k or j == k:
        return True
    if j == l:
        nonadjacent = not (adj_rule_masks[i - 1] >> (k - 1) & 1)
        if sabotage:
            return not nonadjacent
        return nonadjacent
    return False


def hat_of(g: Graph, ordering: VertexOrdering, *, _sabotage: bool = False) -> HatGraph:
    """Build the hat graph of g under a vertex ordering.

    Vertices are the edges of g, labelled (u,v) with u<v; writing each edge
    by its ordering positions (i,j), i<j, two distinct vertices with j<=l are
    joined iff i==k, or j==k, or (j==l and positions i,k are non-adjacent in
    g).  The result is a spanning subgraph of line_graph(g) and its
    independence counts mirror g's clique-cover counts.
    """
    if g.edge_count == 0:
        raise EdgelessGraphError("hat graph of an edgeless graph")
    if ordering.n != g.n:
        raise ValueError("ordering length does not match graph")
    pos = ordering.position_of()
    # adjacency between *positions*: position p ~ position q iff perm[p-1] ~ perm[q-1]
    pos_masks = [0] * g.n
    for u, v in g.edges:
        pu, pv = pos[u - 1], pos[v - 1]
        pos_masks[pu - 1] |= 1 << (pv - 1)
        pos_masks[pv - 1] |= 1 << (pu - 1)

    labels = tuple(sorted(g.edges))
    ppairs = []
    for u, v in labels:
        pu, pv = pos[u - 1], pos[v - 1]
        ppairs.append((pu, pv) if pu < pv else (pv, pu))

    pairs = []
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            if _hat_adjacent(ppairs[a], ppairs[b], pos_masks, sabotage=_sabotage):
                pairs.append((a + 1, b + 1))
    return HatGraph(Graph(len(labels), tuple(pairs)), labels)


def is_labeled_subgraph(h1: HatGraph, h2: HatGraph) -> bool:
    """True iff h1's labels and label-edges are contained in h2's."""
    if not set(h1.labels) <= set(h2.labels):
        return False
    return h1.label_edges() <= h2.label_edges()


# ---------------------------------------------------------------------------
# parsing and serialization


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: a header line "n m", then m lines
    "u v".  Lines starting with '#' and blank lines are ignored."""
    header = None
    edges = []
    m_expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise GraphParseError("expected header 'n m'", lineno)
            try:
                n, m_expected = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphParseError("expected header 'n m'", lineno) from None
            if not 1 <= n <= MAX_VERTICES:
                raise GraphParseError(f"n={n} outside 1..{MAX_VERTICES}", lineno)
            if m_expected < 0:
                raise GraphParseError("negative edge count", lineno)
            header = (n, m_expected)
            continue
        if len(edges) >= m_expected:
            raise GraphParseError("more edges than declared in header", lineno)
        if len(parts) != 2:
            raise GraphParseError("expected edge 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError("expected edge 'u v'", lineno) from None
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"vertex outside 1..{n}", lineno)
        if u == v:
            raise GraphParseError("loop edge", lineno)
        e = (u, v) if u < v else (v, u)
        if e in edges:
            raise GraphParseError(f"duplicate edge ({e[0]},{e[1]})", lineno)
        edges.append(e)
    if header is None:
        raise GraphParseError("empty input")
    if len(edges) != m_expected:
        raise GraphParseError(
            f"header declared {m_expected} edges, found {len(edges)}"
        )
    return Graph.from_edges(header[0], edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def _g6_pair_stream(n: int):
    """graph6 bit order: upper triangle column by column."""
    for col in range(1, n):
        for row in range(col):
            yield row + 1, col + 1


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (n <= 62, single-byte length regime)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    if not s:
        raise GraphParseError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphParseError("character outside graph6 alphabet")
    n = ord(s[0]) - 63
    if not 1 <= n <= MAX_VERTICES:
        raise GraphParseError(f"graph6 n={n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    body = s[1:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise GraphParseError(
            f"graph6 body length {len(body)}, expected {expected} for n={n}"
        )
    bits = []
    for c in body:
        x = ord(c) - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphParseError("nonzero padding bits in graph6 string")
    pairs = [p for p, b in zip(_g6_pair_stream(n), bits) if b]
    return Graph.from_edges(n, pairs)


def emit_graph6(g: Graph) -> str:
    """Encode as a graph6 string, bit-exact per the standard format."""
    bits = [1 if g.has_edge(u, v) else 0 for u, v in _g6_pair_stream(g.n)]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = x << 1 | b
        chars.append(chr(x + 63))
    return "".join(chars)


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_labeled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labelled graphs on 1..n, in increasing order of the edge bitmask
    (bit 0 = pair (1,2), pairs in lexicographic order).  n <= 7."""
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise CapExceededError(
            f"labelled enumeration supports 1 <= n <= {ENUMERATION_MAX_N}, got {n}"
        )
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        if connected_only and not g.is_connected():
            continue
        yield g
