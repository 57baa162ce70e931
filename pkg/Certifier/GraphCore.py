"""
Heawood Certifier - Graph Core Module

Small simple undirected graphs stored as bitset adjacency rows, plus the
named constructors, distance computations, vertex deletion and isomorphism
testing the rest of the certifier builds on.

Representation:
- Vertices carry external labels (positive integers, 1-based by default)
  kept in ascending order; internal index i refers to ``labels[i]``.
- ``rows[i]`` is an int whose bit j is set iff indices i and j are adjacent.
- Graphs are immutable values; every operation returns a new graph.

Isomorphism testing runs iterated color refinement (degree first, then the
multiset of neighbor colors) and backtracks over color-respecting
assignments, checking adjacency consistency after every single assignment.
The same matcher enumerates automorphisms for AutGroup.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .config import MAX_VERTICES
from .Utilities import InputError
from .Logger import graph_logger as logger


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

# ============================================================================
# GRAPH VALUE TYPE
# ============================================================================

@dataclass(frozen=True)
class Graph:
    """An immutable simple undirected graph on at most 64 vertices."""

    labels: Tuple[int, ...]
    rows: Tuple[int, ...]
    _index: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.labels) != len(self.rows):
            raise InputError("labels and adjacency rows differ in length")
        if len(self.labels) > MAX_VERTICES:
            raise InputError(f"graphs are limited to {MAX_VERTICES} vertices, got {len(self.labels)}")
        if any(not isinstance(lab, int) or lab < 1 for lab in self.labels):
            raise InputError("vertex labels must be positive integers")
        if any(a >= b for a, b in zip(self.labels, self.labels[1:])):
            raise InputError("vertex labels must be distinct and sorted ascending")
        full = (1 << len(self.labels)) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise InputError(f"adjacency row {i} refers to a missing vertex")
            if row >> i & 1:
                raise InputError(f"self-loop at vertex {self.labels[i]}")
            for j in iter_bits(row):
                if not self.rows[j] >> i & 1:
                    raise InputError(f"adjacency is not symmetric between {self.labels[i]} and {self.labels[j]}")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        """Build a graph from label pairs; duplicate edges collapse."""
        edge_list = [(int(u), int(v)) for u, v in edges]
        for u, v in edge_list:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
        labels = sorted(set(vertices) | {x for e in edge_list for x in e})
        index = {lab: i for i, lab in enumerate(labels)}
        rows = [0] * len(labels)
        for u, v in edge_list:
            i, j = index[u], index[v]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(tuple(labels), tuple(rows))

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def index(self, label: int) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown vertex {label}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[self.index(u)] >> self.index(v) & 1)

    def neighbors(self, label: int) -> Tuple[int, ...]:
        return tuple(self.labels[j] for j in iter_bits(self.rows[self.index(label)]))

    def degree(self, label: int) -> int:
        return self.rows[self.index(label)].bit_count()

    def degrees(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as label pairs (u < v), sorted."""
        return [(self.labels[i], self.labels[j])
                for i, row in enumerate(self.rows)
                for j in iter_bits(row >> (i + 1) << (i + 1))]

    def mask_of(self, labels: Iterable[int]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        return mask

    def labels_of(self, mask: int) -> FrozenSet[int]:
        return frozenset(self.labels[i] for i in iter_bits(mask))

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] >= 0:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in iter_bits(self.rows[u]):
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return sum(layer.bit_count() for layer in _bfs_layers(self, 0)) == self.n

    def relabeled(self, mapping: Dict[int, int]) -> "Graph":
        """Apply a label bijection; the result is re-sorted by the new labels."""
        if sorted(mapping) != list(self.labels) or len(set(mapping.values())) != self.n:
            raise InputError("relabeling must be a bijection on the vertex labels")
        return Graph.from_edges(((mapping[u], mapping[v]) for u, v in self.edges()),
                                vertices=mapping.values())

    # ------------------------------------------------------------------
    # Export
    # ------------------------------------------------------------------
    def to_edge_list(self) -> str:
        lines = [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + ("\n" if lines else "")

    def to_dot(self, name: str = "G") -> str:
        body = "".join(f"  {u} -- {v};\n" for u, v in self.edges())
        isolated = "".join(f"  {lab};\n" for i, lab in enumerate(self.labels) if not self.rows[i])
        return f"graph {name} {{\n{isolated}{body}}}\n"

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.labels)
        g.add_edges_from(self.edges())
        return g

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"

# ============================================================================
# CONSTRUCTORS
# ============================================================================

def graph_from_edge_list(text: str) -> Graph:
    """
    Parse the line-oriented edge-list format.

    Each non-blank line holds two whitespace-separated positive integer
    labels; lines starting with '#' are comments. Duplicate edges collapse.
    """
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: expected two vertex labels, got {len(tokens)} tokens")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InputError(f"line {lineno}: vertex labels must be integers: {line!r}") from None
        if u < 1 or v < 1:
            raise InputError(f"line {lineno}: vertex labels must be positive")
        if u == v:
            raise InputError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    graph = Graph.from_edges(edges)
    logger.debug(f"Parsed edge list into {graph}")
    return graph


def heawood() -> Graph:
    """Hamiltonian circle 1..14 plus the chords {i, ((i+4) mod 14)+1} for odd i."""
    circle = [(i, i % 14 + 1) for i in range(1, 15)]
    chords = [(i, (i + 4) % 14 + 1) for i in range(1, 14, 2)]
    return Graph.from_edges(circle + chords)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs at least one vertex")
    return Graph.from_edges(((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)),
                            vertices=range(1, n + 1))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle graph needs at least three vertices")
    return Graph.from_edges((i, i % n + 1) for i in range(1, n + 1))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("path graph needs at least one vertex")
    return Graph.from_edges(((i, i + 1) for i in range(1, n)), vertices=range(1, n + 1))


def petersen() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 6, (i + 2) % 5 + 6) for i in range(5)]
    return Graph.from_edges(outer + spokes + inner)


def fano_incidence_graph() -> Graph:
    """Point-line incidence graph of the Fano plane: points 1..7, lines 8..14."""
    edges = []
    for j in range(7):
        for d in (0, 1, 3):
            edges.append(((j + d) % 7 + 1, 8 + j))
    return Graph.from_edges(edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place ``h`` beside ``g``, shifting its labels past the largest label of ``g``."""
    shift = max(g.labels, default=0)
    edges = g.edges() + [(u + shift, v + shift) for u, v in h.edges()]
    vertices = list(g.labels) + [lab + shift for lab in h.labels]
    return Graph.from_edges(edges, vertices=vertices)

# ============================================================================
# DISTANCES
# ============================================================================

@dataclass(frozen=True)
class DistanceClassification:
    """Breadth-first layers around a source: classes[i-1] holds distance i."""

    source: int
    classes: Tuple[FrozenSet[int], ...]

    @property
    def max_distance(self) -> int:
        return len(self.classes)

    def distance_of(self, label: int) -> Optional[int]:
        if label == self.source:
            return 0
        for i, layer in enumerate(self.classes, start=1):
            if label in layer:
                return i
        return None

    def as_lists(self) -> List[List[int]]:
        return [sorted(layer) for layer in self.classes]


def _bfs_layers(g: Graph, start: int) -> List[int]:
    """Layers as index bitmasks, starting with the source itself."""
    layers = [1 << start]
    seen = 1 << start
    while True:
        frontier = 0
        for i in iter_bits(layers[-1]):
            frontier |= g.rows[i]
        frontier &= ~seen
        if not frontier:
            return layers
        seen |= frontier
        layers.append(frontier)


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """Hop count of a shortest u-v path, or None when v is unreachable."""
    target = 1 << g.index(v)
    for hops, layer in enumerate(_bfs_layers(g, g.index(u))):
        if layer & target:
            return hops
    return None


def distance_classes(g: Graph, source: int) -> DistanceClassification:
    layers = _bfs_layers(g, g.index(source))
    return DistanceClassification(source, tuple(g.labels_of(layer) for layer in layers[1:]))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on the vertices outside ``s``; surviving labels are kept."""
    removed = g.mask_of(s)
    keep = [i for i in range(g.n) if not removed >> i & 1]
    position = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for j in iter_bits(g.rows[old] & ~removed):
            row |= 1 << position[j]
        rows.append(row)
    return Graph(tuple(g.labels[i] for i in keep), tuple(rows))

# ============================================================================
# COLOR REFINEMENT
# ============================================================================

def refine_colors(graphs: Sequence[Graph], refine: bool = True) -> List[Tuple[int, ...]]:
    """
    Jointly refine vertex colors of one or more graphs.

    Colors start as degrees and are repeatedly replaced by the rank of
    (color, sorted neighbor colors) among all signatures of all graphs, so
    color numbers are comparable across the graphs. Stops when the number
    of classes no longer grows. With ``refine=False`` every vertex gets color 0.
    """
    if not refine:
        return [tuple(0 for _ in g.labels) for g in graphs]
    colors = [g.degrees() for g in graphs]
    classes = len({c for cs in colors for c in cs})
    while True:
        signatures = [
            [(cs[i], tuple(sorted(cs[j] for j in iter_bits(g.rows[i])))) for i in range(g.n)]
            for g, cs in zip(graphs, colors)
        ]
        ranking = {sig: rank for rank, sig in enumerate(sorted({s for sigs in signatures for s in sigs}))}
        colors = [tuple(ranking[s] for s in sigs) for sigs in signatures]
        if len(ranking) == classes:
            return colors
        classes = len(ranking)


def invariant_key(g: Graph) -> Tuple:
    """An isomorphism invariant: equal for isomorphic graphs."""
    colors = refine_colors([g])[0]
    profile = sorted((colors[i], tuple(sorted(colors[j] for j in iter_bits(g.rows[i])))) for i in range(g.n))
    return (g.n, g.edge_count, tuple(sorted(g.degrees())), tuple(profile))

# ============================================================================
# BACKTRACKING MATCHER
# ============================================================================

def _search_order(g: Graph, colors: Tuple[int, ...]) -> Tuple[List[int], List[Optional[int]]]:
    """Breadth-first vertex order, each component started in its rarest color class."""
    class_size: Dict[int, int] = {}
    for c in colors:
        class_size[c] = class_size.get(c, 0) + 1
    order: List[int] = []
    placed = 0
    while len(order) < g.n:
        start = min((i for i in range(g.n) if not placed >> i & 1),
                    key=lambda i: (class_size[colors[i]], i))
        placed |= 1 << start
        queue = deque([start])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in iter_bits(g.rows[u] & ~placed):
                placed |= 1 << w
                queue.append(w)
    position = {v: t for t, v in enumerate(order)}
    anchors: List[Optional[int]] = []
    for v in order:
        earlier = [w for w in iter_bits(g.rows[v]) if position[w] < position[v]]
        anchors.append(min(earlier, key=position.get) if earlier else None)
    return order, anchors


def match_graphs(g1: Graph, g2: Graph, colors1: Tuple[int, ...], colors2: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """
    Yield every adjacency-preserving bijection from g1 onto g2 that respects
    the given colorings, as a tuple mapping g1 indices to g2 indices.

    Consistency with all previously placed vertices is checked after every
    assignment, so each completed map is an isomorphism.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return
    n = g1.n
    class_mask: Dict[int, int] = {}
    for j, c in enumerate(colors2):
        class_mask[c] = class_mask.get(c, 0) | (1 << j)
    order, anchors = _search_order(g1, colors1)
    full2 = (1 << n) - 1
    image = [-1] * n
    rows1, rows2 = g1.rows, g2.rows

    def extend(t: int, placed1: int, used2: int) -> Iterator[Tuple[int, ...]]:
        if t == n:
            yield tuple(image)
            return
        v = order[t]
        anchor = anchors[t]
        candidates = (rows2[image[anchor]] if anchor is not None else full2) & ~used2
        candidates &= class_mask.get(colors1[v], 0)
        wanted = 0
        for w in iter_bits(rows1[v] & placed1):
            wanted |= 1 << image[w]
        for c in iter_bits(candidates):
            if rows2[c] & used2 != wanted:
                continue
            image[v] = c
            yield from extend(t + 1, placed1 | (1 << v), used2 | (1 << c))
        image[v] = -1

    yield from extend(0, 0, 0)


def find_isomorphism(g1: Graph, g2: Graph, refine: bool = True) -> Optional[Dict[int, int]]:
    """Return a label bijection mapping edges of g1 onto edges of g2, or None."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    colors1, colors2 = refine_colors([g1, g2], refine)
    if sorted(colors1) != sorted(colors2):
        return None
    found = next(match_graphs(g1, g2, colors1, colors2), None)
    if found is None:
        logger.debug(f"No isomorphism between {g1} and {g2}")
        return None
    return {g1.labels[i]: g2.labels[j] for i, j in enumerate(found)}
