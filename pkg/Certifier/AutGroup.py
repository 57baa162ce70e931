"""
Heawood Certifier - Automorphism Group Module

Permutation groups stored extensionally (every element is kept), the full
automorphism group of a small graph, PGL(2, q) acting on the projective line
and an abstract isomorphism test between two small groups.

Points are numbered 1..degree. For a graph the points are vertex positions
in sorted label order, so for graphs labelled 1..n a point is its vertex.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import isprime

from .config import AUTOMORPHISM_MAX_VERTICES, GROUP_ISOMORPHISM_MAX_ORDER
from .GraphCore import Graph, iter_bits, match_graphs, refine_colors
from .Utilities import InputError, InternalCheckError
from .Logger import group_logger as logger

# ============================================================================
# PERMUTATIONS
# ============================================================================

@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection on 1..degree; ``images[i - 1]`` is the image of point i."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InputError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, degree + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``self * other``: apply ``other`` first."""
        if other.degree != self.degree:
            raise InputError("cannot compose permutations of different degrees")
        mine = self.images
        return Permutation(tuple(mine[x - 1] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles of length at least 2, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def __str__(self):
        return "(" + " ".join(map(str, self.images)) + ")"

# ============================================================================
# PERMUTATION GROUPS
# ============================================================================

def closure(degree: int, generators: Iterable[Permutation]) -> List[Permutation]:
    """All products of the generators, sorted; breadth-first from the identity."""
    gens = list(generators)
    identity = Permutation.identity(degree)
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s * x
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def greedy_generators(degree: int, elements: Sequence[Permutation]) -> Tuple[Permutation, ...]:
    """
    A small generating set: scan elements by descending order and then by
    images, keeping each one not already generated by those kept before.

    Every group the certifier reasons about (Heawood, PGL(2, q) for q <= 7,
    the small test groups) comes out with at most 4 generators. Larger
    products of symmetric groups can need more; the set always generates.
    """
    target = len(elements)
    generated = {Permutation.identity(degree)}
    chosen: List[Permutation] = []
    for p in sorted(elements, key=lambda e: (-e.order(), e.images)):
        if len(generated) == target:
            break
        if p in generated:
            continue
        chosen.append(p)
        generated = set(closure(degree, chosen))
    return tuple(chosen)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group with its complete sorted element list and a small generating set."""

    degree: int
    elements: Tuple[Permutation, ...]
    generators: Tuple[Permutation, ...]

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation]) -> "PermGroup":
        elems = tuple(sorted(set(elements)))
        return cls(degree, elems, greedy_generators(degree, elems))

    @classmethod
    def from_generators(cls, degree: int, generators: Iterable[Permutation]) -> "PermGroup":
        gens = tuple(generators)
        return cls(degree, tuple(closure(degree, gens)), gens)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._element_set

    @cached_property
    def _element_set(self) -> frozenset:
        return frozenset(self.elements)

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_closed(self) -> bool:
        """Identity present, products and inverses of elements stay in the set."""
        members = self._element_set
        if self.identity() not in members:
            return False
        if any(p.inverse() not in members for p in self.elements):
            return False
        return all(p * q in members for p in self.elements for q in self.elements)

    def generated_by_generators(self) -> bool:
        return tuple(closure(self.degree, self.generators)) == self.elements

    def order_histogram(self) -> Dict[int, int]:
        counts = Counter(p.order() for p in self.elements)
        return {k: counts[k] for k in sorted(counts)}

    def orbit_of_point(self, point: int) -> List[int]:
        return sorted({p(point) for p in self.elements})

    def is_point_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit_of_point(1)) == self.degree

    def to_json(self) -> Dict:
        return {
            "degree": self.degree,
            "order": self.order,
            "generators": [str(g) for g in self.generators],
        }


def cyclic_group(n: int) -> PermGroup:
    """The cyclic group of order n acting regularly on n points."""
    if n < 1:
        raise InputError("cyclic group needs n >= 1")
    if n == 1:
        return PermGroup.from_generators(1, [])
    rotation = Permutation(tuple(range(2, n + 1)) + (1,))
    return PermGroup.from_generators(n, [rotation])


def symmetric_group(n: int) -> PermGroup:
    """S_n from a transposition and an n-cycle."""
    if n < 1:
        raise InputError("symmetric group needs n >= 1")
    if n == 1:
        return PermGroup.from_generators(1, [])
    gens = [Permutation.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return PermGroup.from_generators(n, gens)

# ============================================================================
# GRAPH AUTOMORPHISMS
# ============================================================================

def permutation_from_label_map(g: Graph, mapping: Mapping[int, int]) -> Permutation:
    """Translate a vertex-label bijection of g into a Permutation on positions."""
    return Permutation(tuple(g.index(mapping[label]) + 1 for label in g.labels))


def label_map(g: Graph, p: Permutation) -> Dict[int, int]:
    """The vertex-label bijection of g described by a Permutation on positions."""
    if p.degree != g.n:
        raise InputError(f"permutation degree {p.degree} does not match {g.n} vertices")
    return {g.labels[i]: g.labels[p.images[i] - 1] for i in range(g.n)}


def is_automorphism(g: Graph, p: Permutation) -> bool:
    """True when p maps edges to edges (and therefore non-edges to non-edges)."""
    if p.degree != g.n:
        return False
    for i in range(g.n):
        image_row = 0
        for j in iter_bits(g.rows[i]):
            image_row |= 1 << (p.images[j] - 1)
        if g.rows[p.images[i] - 1] != image_row:
            return False
    return True


def automorphisms(g: Graph, refine: bool = True) -> PermGroup:
    """
    Every adjacency-preserving vertex bijection of g.

    Color refinement restricts candidate images, then the backtracking matcher
    enumerates all color-respecting maps of g onto itself. ``refine=False``
    skips refinement and serves as a cross-check.
    """
    if g.n > AUTOMORPHISM_MAX_VERTICES:
        raise InputError(f"automorphism enumeration is limited to {AUTOMORPHISM_MAX_VERTICES} vertices, got {g.n}")
    colors = refine_colors([g], refine)[0]
    elements = [Permutation(tuple(j + 1 for j in images)) for images in match_graphs(g, g, colors, colors)]
    group = PermGroup.from_elements(g.n, elements)
    logger.info(f"Automorphism group of {g}: order {group.order}, {len(group.generators)} generators")
    return group

# ============================================================================
# PGL(2, q)
# ============================================================================

def pgl2(q: int) -> PermGroup:
    """
    PGL(2, q) for a prime q, acting on the projective line.

    The points 0..q-1 of the line are numbered 1..q and infinity is q+1.
    Every invertible matrix (a b; c d) gives x -> (ax + b)/(cx + d); scalar
    multiples give the same permutation and collapse in the element set.
    """
    if not isinstance(q, int) or not isprime(q):
        raise InputError(f"pgl2 needs a prime field size, got {q}")
    infinity = q
    inverses = {x: pow(x, -1, q) for x in range(1, q)}

    def moebius(a: int, b: int, c: int, d: int, x: int) -> int:
        if x == infinity:
            return a * inverses[c] % q if c else infinity
        denominator = (c * x + d) % q
        if denominator == 0:
            return infinity
        return (a * x + b) * inverses[denominator] % q

    elements = set()
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    if (a * d - b * c) % q == 0:
                        continue
                    elements.add(Permutation(tuple(moebius(a, b, c, d, x) + 1 for x in range(q + 1))))
    expected = q * (q - 1) * (q + 1)
    if len(elements) != expected:
        raise InternalCheckError(f"PGL(2, {q}) produced {len(elements)} permutations, expected {expected}")
    group = PermGroup.from_elements(q + 1, elements)
    logger.debug(f"Built PGL(2, {q}) of order {group.order}")
    return group

# ============================================================================
# ABSTRACT GROUP ISOMORPHISM
# ============================================================================

def _extend_homomorphism(a_gens: Sequence[Permutation], b_images: Sequence[Permutation],
                         a_identity: Permutation, b_identity: Permutation) -> Optional[Dict[Permutation, Permutation]]:
    """
    Define phi on the subgroup generated by ``a_gens`` through phi(s x) =
    phi(s) phi(x). Returns None as soon as two words for the same element
    get different images, which means no homomorphism sends a_gens to b_images.
    """
    phi = {a_identity: b_identity}
    queue = deque([a_identity])
    pairs = list(zip(a_gens, b_images))
    while queue:
        x = queue.popleft()
        fx = phi[x]
        for s, t in pairs:
            y = s * x
            ty = t * fx
            known = phi.get(y)
            if known is None:
                phi[y] = ty
                queue.append(y)
            elif known != ty:
                return None
    return phi


def group_isomorphism(a: PermGroup, b: PermGroup) -> Optional[Dict[Permutation, Permutation]]:
    """An abstract isomorphism from a onto b as an element map, or None."""
    if a.order != b.order:
        return None
    if a.order > GROUP_ISOMORPHISM_MAX_ORDER:
        raise InputError(f"group isomorphism is limited to order {GROUP_ISOMORPHISM_MAX_ORDER}, got {a.order}")
    if a.order_histogram() != b.order_histogram():
        return None
    gens = sorted(a.generators, key=lambda g: (-g.order(), g.images))
    by_order: Dict[int, List[Permutation]] = {}
    for p in b.elements:
        by_order.setdefault(p.order(), []).append(p)
    a_identity, b_identity = a.identity(), b.identity()
    images: List[Permutation] = []

    def assign(t: int) -> Optional[Dict[Permutation, Permutation]]:
        if t == len(gens):
            phi = _extend_homomorphism(gens, images, a_identity, b_identity)
            if phi is not None and len(phi) == a.order and len(set(phi.values())) == b.order:
                return phi
            return None
        for candidate in by_order.get(gens[t].order(), []):
            images.append(candidate)
            if _extend_homomorphism(gens[: t + 1], images, a_identity, b_identity) is not None:
                found = assign(t + 1)
                if found is not None:
                    return found
            images.pop()
        return None

    return assign(0)


def groups_isomorphic(a: PermGroup, b: PermGroup) -> bool:
    """True iff the two groups are abstractly isomorphic."""
    result = group_isomorphism(a, b) is not None
    logger.info(f"Groups of order {a.order} and {b.order} isomorphic: {result}")
    return result
