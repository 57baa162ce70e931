"""
Heawood Certifier - Cycle Enumeration Module

Exhaustive enumeration and counting of simple cycles by length, plus the
vertex-disjoint pairs of 6-cycles.

Every cycle is found exactly once by a rooted depth-first search: from each
root r the search only walks to vertices with a larger label than r, and a
closed path is kept only when its second vertex is smaller than its last,
which removes the reversed duplicate. Both rules together also make the
recorded vertex sequence the canonical one.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .GraphCore import Graph, iter_bits
from .Utilities import InputError, run_parallel
from .Logger import cycle_logger as logger

# ============================================================================
# VALUE TYPES
# ============================================================================

@dataclass(frozen=True, order=True)
class Cycle:
    """
    A simple cycle in canonical form.

    The vertex sequence starts at the smallest label and runs in the
    direction whose second vertex is the smaller of the two neighbors of
    that label. Two cycles are equal iff their edge sets are equal.
    """

    vertices: Tuple[int, ...]

    @classmethod
    def canonical(cls, sequence: Iterable[int]) -> "Cycle":
        seq = tuple(sequence)
        if len(seq) < 3:
            raise InputError("a cycle needs at least three vertices")
        if len(set(seq)) != len(seq):
            raise InputError(f"cycle repeats a vertex: {seq}")
        start = seq.index(min(seq))
        rotated = seq[start:] + seq[:start]
        if rotated[1] > rotated[-1]:
            rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
        return cls(rotated)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> List[Tuple[int, int]]:
        seq = self.vertices
        return sorted(tuple(sorted((seq[i], seq[(i + 1) % len(seq)]))) for i in range(len(seq)))

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def is_cycle_of(self, g: Graph) -> bool:
        """True when every consecutive pair (cyclically) is an edge of g."""
        try:
            return all(g.has_edge(u, v) for u, v in self.edges())
        except InputError:
            return False

    def __str__(self):
        return "(" + " ".join(map(str, self.vertices)) + ")"


@dataclass(frozen=True, order=True)
class DisjointPair:
    """An unordered pair of vertex-disjoint 6-cycles; the cycle holding the smaller label comes first."""

    first: Cycle
    second: Cycle

    @classmethod
    def canonical(cls, a: Cycle, b: Cycle) -> "DisjointPair":
        if a.length != 6 or b.length != 6:
            raise InputError("a disjoint pair consists of two 6-cycles")
        if a.vertex_set() & b.vertex_set():
            raise InputError("the two cycles of a pair must be vertex-disjoint")
        return cls(*sorted((a, b)))

    def vertex_set(self) -> frozenset:
        return self.first.vertex_set() | self.second.vertex_set()

    def __str__(self):
        return f"{self.first} | {self.second}"

# ============================================================================
# ROOTED DEPTH-FIRST SEARCH
# ============================================================================

def _cycles_from_root(g: Graph, root: int, max_length: int, lengths: Optional[frozenset]) -> List[Tuple[int, ...]]:
    """All cycles whose smallest index is ``root``, as canonical index tuples."""
    rows = g.rows
    higher = ~((1 << (root + 1)) - 1)
    root_bit = 1 << root
    found: List[Tuple[int, ...]] = []
    path = [root]

    def extend(v: int, visited: int) -> None:
        size = len(path)
        if size >= 3 and rows[v] & root_bit and path[1] < v:
            if lengths is None or size in lengths:
                found.append(tuple(path))
        if size == max_length:
            return
        for w in iter_bits(rows[v] & higher & ~visited):
            path.append(w)
            extend(w, visited | (1 << w))
            path.pop()

    extend(root, root_bit)
    return found


def _search(g: Graph, max_length: int, lengths: Optional[frozenset], threads: Optional[int]) -> List[Tuple[int, ...]]:
    per_root = run_parallel(lambda r: _cycles_from_root(g, r, max_length, lengths), range(g.n), threads)
    return [cyc for chunk in per_root for cyc in chunk]


def enumerate_cycles(g: Graph, k: int, threads: Optional[int] = None) -> List[Cycle]:
    """Every simple k-cycle of g exactly once, canonical and sorted."""
    if not 3 <= k <= g.n:
        raise InputError(f"cycle length must lie in 3..{g.n}, got {k}")
    raw = _search(g, k, frozenset({k}), threads)
    cycles = sorted(Cycle(tuple(g.labels[i] for i in cyc)) for cyc in raw)
    logger.debug(f"Enumerated {len(cycles)} cycles of length {k} in {g}")
    return cycles


def all_cycles(g: Graph, threads: Optional[int] = None) -> List[Cycle]:
    """Every simple cycle of g, sorted by length and then vertex sequence."""
    raw = _search(g, g.n, None, threads)
    return sorted((Cycle(tuple(g.labels[i] for i in cyc)) for cyc in raw),
                  key=lambda c: (c.length, c.vertices))


def cycle_census(g: Graph, threads: Optional[int] = None) -> Dict[int, int]:
    """Number of simple cycles of every length, in a single traversal; zero counts omitted."""
    counts = Counter(len(cyc) for cyc in _search(g, g.n, None, threads))
    census = {k: counts[k] for k in sorted(counts)}
    logger.info(f"DFS census of {g}: {census}")
    return census


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest."""
    best: Optional[int] = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in iter_bits(g.rows[u]):
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif parent[u] != w:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < best:
                            best = length
            if best is not None and 2 * dist[frontier[0]] + 1 >= best:
                break
            frontier = nxt
    return best


def disjoint_six_cycle_pairs(g: Graph, six_cycles: Optional[Sequence[Cycle]] = None) -> List[DisjointPair]:
    """All unordered pairs of vertex-disjoint 6-cycles, canonical and sorted."""
    if six_cycles is None:
        six_cycles = enumerate_cycles(g, 6) if g.n >= 6 else []
    masks = [(c, g.mask_of(c.vertices)) for c in six_cycles]
    pairs = sorted(DisjointPair.canonical(a, b)
                   for (a, ma), (b, mb) in combinations(masks, 2) if not ma & mb)
    logger.debug(f"Found {len(pairs)} disjoint 6-cycle pairs in {g}")
    return pairs

# ============================================================================
# BRUTE-FORCE ORACLE
# ============================================================================

def brute_force_census(g: Graph) -> Dict[int, int]:
    """
    Count cycles by testing every cyclic ordering of every vertex subset.

    Independent of the rooted search and exponential in n; meant as a test
    oracle for graphs with at most 8 vertices.
    """
    counts: Counter = Counter()
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            first, rest = subset[0], subset[1:]
            for order in permutations(rest):
                if order[0] > order[-1]:
                    continue
                seq = (first,) + order
                if all(g.rows[seq[i]] >> seq[(i + 1) % size] & 1 for i in range(size)):
                    counts[size] += 1
    return {k: counts[k] for k in sorted(counts)}
