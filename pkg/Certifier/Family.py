"""
Heawood Certifier - Family Module

Delta-Wye and Wye-Delta exchanges and the closure of K7 under them.

A Delta-Wye exchange deletes the edges of a triangle and adds a new vertex
joined to its three corners; a Wye-Delta exchange removes a degree-3 vertex
and joins its three neighbors pairwise. Both keep the edge count. A Wye-Delta
exchange that would double an existing edge is inapplicable, so every graph
stays simple.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .GraphCore import Graph, complete_graph, find_isomorphism, heawood, invariant_key
from .Utilities import InputError
from .Logger import family_logger as logger

DELTA_Y = "delta-y"
Y_DELTA = "y-delta"

# ============================================================================
# EXCHANGES
# ============================================================================

@dataclass(frozen=True, order=True)
class ExchangeMove:
    """A triangle for Delta-Wye, or a single degree-3 vertex for Wye-Delta."""

    kind: str
    site: Tuple[int, ...]

    def __str__(self):
        return f"{self.kind} at {self.site}"


def triangles(g: Graph) -> List[Tuple[int, int, int]]:
    """All triangles as sorted label triples, sorted."""
    found = []
    for u, v in g.edges():
        for w in g.neighbors(u):
            if w > v and g.has_edge(v, w):
                found.append((u, v, w))
    return sorted(found)


def delta_y(g: Graph, t: Tuple[int, int, int]) -> Graph:
    """Replace the triangle t by a new vertex labelled one past the largest label."""
    corners = tuple(sorted(t))
    if len(set(corners)) != 3 or not all(g.has_edge(a, b) for a, b in combinations(corners, 2)):
        raise InputError(f"{t} is not a triangle")
    removed = set(combinations(corners, 2))
    new = max(g.labels) + 1
    edges = [e for e in g.edges() if e not in removed] + [(c, new) for c in corners]
    return Graph.from_edges(edges, vertices=list(g.labels) + [new])


def y_delta(g: Graph, v: int) -> Optional[Graph]:
    """
    Remove the degree-3 vertex v and join its neighbors pairwise, or return
    None when two of those neighbors are already adjacent.
    """
    if g.degree(v) != 3:
        raise InputError(f"vertex {v} has degree {g.degree(v)}, not 3")
    nbrs = g.neighbors(v)
    if any(g.has_edge(a, b) for a, b in combinations(nbrs, 2)):
        return None
    edges = [e for e in g.edges() if v not in e] + list(combinations(nbrs, 2))
    return Graph.from_edges(edges, vertices=[label for label in g.labels if label != v])


def available_moves(g: Graph, include_y_delta: bool = True) -> List[ExchangeMove]:
    """Every Delta-Wye site, then every applicable Wye-Delta site, in label order."""
    moves = [ExchangeMove(DELTA_Y, t) for t in triangles(g)]
    if not include_y_delta:
        return moves
    for v in g.labels:
        if g.degree(v) == 3 and y_delta(g, v) is not None:
            moves.append(ExchangeMove(Y_DELTA, (v,)))
    return moves


def apply_move(g: Graph, move: ExchangeMove) -> Graph:
    if move.kind == DELTA_Y:
        return delta_y(g, move.site)
    if move.kind == Y_DELTA:
        result = y_delta(g, move.site[0])
        if result is None:
            raise InputError(f"{move} would create a parallel edge")
        return result
    raise InputError(f"unknown exchange kind {move.kind!r}")

# ============================================================================
# FAMILY CLOSURE
# ============================================================================

def _normalized(g: Graph) -> Graph:
    """Relabel to 1..n in the current label order."""
    return g.relabeled({label: i for i, label in enumerate(g.labels, start=1)})


def k7_family(include_y_delta: bool = False) -> List[Graph]:
    """
    Isomorphism-class representatives of everything reachable from K7, in
    breadth-first discovery order.

    By default only Delta-Wye exchanges are applied, which yields the 14
    classes of the K7 family. With ``include_y_delta`` every applicable
    Wye-Delta exchange is applied as well; that closure is strictly larger
    (20 classes). Moves are tried in the order of available_moves, so the
    representatives (relabelled 1..n) depend on nothing but the input.
    """
    start = complete_graph(7)
    members: List[Graph] = [start]
    buckets: Dict[Tuple, List[Graph]] = {invariant_key(start): [start]}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for move in available_moves(g, include_y_delta):
            h = _normalized(apply_move(g, move))
            key = invariant_key(h)
            bucket = buckets.setdefault(key, [])
            if any(find_isomorphism(h, known) is not None for known in bucket):
                continue
            bucket.append(h)
            members.append(h)
            queue.append(h)
            logger.debug(f"New family member {len(members)}: {h} via {move}")
    logger.info(f"K7 family closure (Wye-Delta {'on' if include_y_delta else 'off'}): "
                f"{len(members)} isomorphism classes")
    return members


def family_index(members: List[Graph]) -> Dict:
    """JSON index of a family listing, one entry per representative."""
    target = heawood()
    return {
        "members": [
            {
                "id": i,
                "n": g.n,
                "edges": g.edge_count,
                "is_heawood": g.n == target.n and find_isomorphism(g, target) is not None,
            }
            for i, g in enumerate(members, start=1)
        ]
    }
