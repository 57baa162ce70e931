"""
Heawood Certifier - Orbits Module

Permutation groups acting on cycles and on disjoint 6-cycle pairs, orbit
partitions of such families and transitivity checks.

Permutations act on vertex labels directly, so the acting group has to be
an automorphism group of a graph labelled 1..n (the Heawood graph is).
Orbits are grown breadth-first with the group generators only.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple, Union

from .AutGroup import Permutation, PermGroup
from .CycleEnum import Cycle, DisjointPair
from .Utilities import InputError, InternalCheckError
from .Logger import group_logger as logger

FamilyMember = Union[Cycle, DisjointPair]

PAIRS_KIND = "disjoint 6-cycle pairs"

# ============================================================================
# ACTIONS
# ============================================================================

def act_on_cycle(p: Permutation, c: Cycle) -> Cycle:
    """Image of a cycle under p, re-canonicalized."""
    if max(c.vertices) > p.degree:
        raise InputError(f"permutation of degree {p.degree} cannot act on {c}")
    return Cycle.canonical(p(v) for v in c.vertices)


def act_on_pair(p: Permutation, pair: DisjointPair) -> DisjointPair:
    """Apply p to both cycles and re-canonicalize the unordered pair."""
    return DisjointPair.canonical(act_on_cycle(p, pair.first), act_on_cycle(p, pair.second))


def act(p: Permutation, obj: FamilyMember) -> FamilyMember:
    if isinstance(obj, DisjointPair):
        return act_on_pair(p, obj)
    return act_on_cycle(p, obj)


def family_kind(family: Iterable[FamilyMember]) -> str:
    """'k-cycles' for a family of k-cycles, or the pair kind; mixed families are rejected."""
    kinds = {PAIRS_KIND if isinstance(obj, DisjointPair) else f"{obj.length}-cycles" for obj in family}
    if len(kinds) > 1:
        raise InputError(f"family mixes {sorted(kinds)}")
    return kinds.pop() if kinds else "empty"

# ============================================================================
# ORBIT PARTITIONS
# ============================================================================

@dataclass(frozen=True)
class OrbitPartition:
    """Orbits of a family under a group, each sorted, ordered by smallest member."""

    family_kind: str
    orbits: Tuple[Tuple[FamilyMember, ...], ...]
    group_order: int

    def __post_init__(self):
        for orbit in self.orbits:
            if self.group_order % len(orbit):
                raise InternalCheckError(
                    f"orbit of size {len(orbit)} does not divide group order {self.group_order}")

    @property
    def orbit_sizes(self) -> List[int]:
        return [len(orbit) for orbit in self.orbits]

    @property
    def stabilizer_orders(self) -> List[int]:
        return [self.group_order // len(orbit) for orbit in self.orbits]

    @property
    def transitive(self) -> bool:
        return len(self.orbits) == 1

    def family_size(self) -> int:
        return sum(self.orbit_sizes)

    def to_json(self) -> Dict:
        return {
            "family_kind": self.family_kind,
            "group_order": self.group_order,
            "orbit_sizes": self.orbit_sizes,
            "stabilizer_orders": self.stabilizer_orders,
            "transitive": self.transitive,
        }


def orbit_partition(grp: PermGroup, family: Iterable[FamilyMember]) -> OrbitPartition:
    """
    Partition a family into orbits by breadth-first closure under the generators.

    Raises InternalCheckError when a generator maps a member outside the
    family: the family was not closed under the group.
    """
    members = set(family)
    kind = family_kind(members)
    remaining = sorted(members)
    assigned = set()
    orbits = []
    for start in remaining:
        if start in assigned:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            obj = queue.popleft()
            for s in grp.generators:
                image = act(s, obj)
                if image not in members:
                    raise InternalCheckError(f"{image} is the image of {obj} but not a member of the {kind} family")
                if image not in orbit:
                    orbit.add(image)
                    queue.append(image)
        assigned |= orbit
        orbits.append(tuple(sorted(orbit)))
    partition = OrbitPartition(kind, tuple(orbits), grp.order)
    logger.info(f"Orbits on {kind}: sizes {partition.orbit_sizes} under a group of order {grp.order}")
    return partition


def is_transitive(grp: PermGroup, family: Iterable[FamilyMember]) -> bool:
    return orbit_partition(grp, family).transitive


def family_closed_under(grp: PermGroup, family: Iterable[FamilyMember]) -> bool:
    """Exhaustive check that every group element maps the family into itself."""
    members = set(family)
    return all(act(p, obj) in members for p in grp.elements for obj in members)
