"""
Heawood Certifier - Zeon Algebra Module

Cycle counting with nilpotent adjacency matrices, independent of the
depth-first enumeration in CycleEnum.

The zeon algebra is generated by commuting symbols z_v with z_v^2 = 0, so
its monomials are squarefree and correspond to vertex subsets; a subset is
encoded as a bitmask. In the nilpotent adjacency matrix Psi of a graph the
entry (i, j) is z_j when {i, j} is an edge. The (i, i) entry of Psi^k sums
over closed k-walks at i that never revisit a vertex, so the coefficients of
trace(Psi^k) add up to 2k times the number of k-cycles (k base points, two
directions).

Coefficients are Python integers, so there is no overflow to detect.
"""

from __future__ import annotations

from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .GraphCore import Graph, iter_bits
from .Utilities import InputError, InternalCheckError, run_parallel
from .Logger import zeon_logger as logger

# ============================================================================
# ZEON ELEMENTS
# ============================================================================

class ZeonElement:
    """An integer combination of squarefree monomials; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] = MappingProxyType({})):
        cleaned = {}
        for mask, coeff in terms.items():
            if mask < 0:
                raise InputError("monomial masks must be non-negative")
            if coeff:
                cleaned[mask] = coeff
        self._terms = cleaned

    @classmethod
    def scalar(cls, value: int) -> "ZeonElement":
        return cls({0: value})

    @classmethod
    def generator(cls, index: int, coeff: int = 1) -> "ZeonElement":
        return cls({1 << index: coeff})

    @classmethod
    def monomial(cls, indices: Iterable[int], coeff: int = 1) -> "ZeonElement":
        mask = 0
        for i in indices:
            if mask >> i & 1:
                return cls()
            mask |= 1 << i
        return cls({mask: coeff})

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def grade(self) -> int:
        """Largest subset size among the monomials (0 for the zero element)."""
        return max((mask.bit_count() for mask in self._terms), default=0)

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def __add__(self, other: "ZeonElement") -> "ZeonElement":
        out = dict(self._terms)
        for mask, coeff in other._terms.items():
            out[mask] = out.get(mask, 0) + coeff
        return ZeonElement(out)

    def __neg__(self) -> "ZeonElement":
        return ZeonElement({mask: -coeff for mask, coeff in self._terms.items()})

    def __sub__(self, other: "ZeonElement") -> "ZeonElement":
        return self + (-other)

    def __mul__(self, other: "ZeonElement") -> "ZeonElement":
        return zeon_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, ZeonElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for mask in sorted(self._terms, key=lambda m: (m.bit_count(), [i for i in iter_bits(m)])):
            coeff = self._terms[mask]
            subset = ",".join(str(i) for i in iter_bits(mask))
            parts.append(f"{coeff}ζ{{{subset}}}" if mask else str(coeff))
        return " + ".join(parts)


def _accumulate(out: Dict[int, int], a: Mapping[int, int], b: Mapping[int, int], max_grade: Optional[int]) -> None:
    """out += a*b with the zeon rule; monomials above ``max_grade`` are dropped."""
    for sa, ca in a.items():
        for sb, cb in b.items():
            if sa & sb:
                continue
            s = sa | sb
            if max_grade is not None and s.bit_count() > max_grade:
                continue
            out[s] = out.get(s, 0) + ca * cb


def zeon_mul(a: ZeonElement, b: ZeonElement) -> ZeonElement:
    """Bilinear product with z_S * z_T = z_(S|T) when S and T are disjoint, else 0."""
    out: Dict[int, int] = {}
    _accumulate(out, a._terms, b._terms, None)
    return ZeonElement(out)

# ============================================================================
# ZEON MATRICES
# ============================================================================

class ZeonMatrix:
    """A square matrix of ZeonElements; immutable."""

    __slots__ = ("n", "_rows")

    def __init__(self, rows: Iterable[Iterable[ZeonElement]]):
        self._rows: Tuple[Tuple[ZeonElement, ...], ...] = tuple(tuple(row) for row in rows)
        self.n = len(self._rows)
        if any(len(row) != self.n for row in self._rows):
            raise InputError("zeon matrix must be square")

    @classmethod
    def zero(cls, n: int) -> "ZeonMatrix":
        return cls([[ZeonElement() for _ in range(n)] for _ in range(n)])

    def __getitem__(self, position: Tuple[int, int]) -> ZeonElement:
        i, j = position
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ZeonMatrix):
            return NotImplemented
        return self._rows == other._rows

    __hash__ = None

    def nonzero_count(self) -> int:
        return sum(1 for row in self._rows for entry in row if entry)

    def is_zero(self) -> bool:
        return self.nonzero_count() == 0

    def max_grade(self) -> int:
        return max((entry.grade() for row in self._rows for entry in row), default=0)

    def trace(self) -> ZeonElement:
        total: Dict[int, int] = {}
        for i in range(self.n):
            for mask, coeff in self._rows[i][i]._terms.items():
                total[mask] = total.get(mask, 0) + coeff
        return ZeonElement(total)

    def multiply(self, other: "ZeonMatrix", max_grade: Optional[int] = None,
                 threads: Optional[int] = None) -> "ZeonMatrix":
        """Matrix product; rows are independent and may be computed in parallel."""
        if other.n != self.n:
            raise InputError("zeon matrices differ in dimension")
        nonzero = [[(j, entry._terms) for j, entry in enumerate(row) if entry] for row in other._rows]

        def row_product(i: int) -> List[ZeonElement]:
            out: List[Dict[int, int]] = [{} for _ in range(self.n)]
            for m, a in enumerate(self._rows[i]):
                if not a:
                    continue
                for j, b in nonzero[m]:
                    _accumulate(out[j], a._terms, b, max_grade)
            return [ZeonElement(entry) for entry in out]

        return ZeonMatrix(run_parallel(row_product, range(self.n), threads))

    def __matmul__(self, other: "ZeonMatrix") -> "ZeonMatrix":
        return self.multiply(other)

    def power(self, k: int, threads: Optional[int] = None) -> "ZeonMatrix":
        """k-th power by repeated multiplication, pruning monomials of grade above k."""
        if k < 1:
            raise InputError("zeon matrix powers start at 1")
        result = self
        for _ in range(k - 1):
            result = result.multiply(self, max_grade=k, threads=threads)
        return result


def nilpotent_adjacency(g: Graph) -> ZeonMatrix:
    """Psi[i][j] = z_j when {i, j} is an edge (indices are internal vertex positions)."""
    rows = []
    for i in range(g.n):
        row = [ZeonElement() for _ in range(g.n)]
        for j in iter_bits(g.rows[i]):
            row[j] = ZeonElement.generator(j)
        rows.append(row)
    return ZeonMatrix(rows)

# ============================================================================
# CYCLE COUNTING
# ============================================================================

def _cycles_from_trace(trace_sum: int, k: int) -> int:
    if trace_sum % (2 * k):
        raise InternalCheckError(f"trace coefficient sum {trace_sum} of power {k} is not divisible by {2 * k}")
    return trace_sum // (2 * k)


def count_cycles_zeon(g: Graph, k: int, threads: Optional[int] = None) -> int:
    """Number of simple k-cycles from the trace of Psi^k."""
    if not 3 <= k <= g.n:
        raise InputError(f"cycle length must lie in 3..{g.n}, got {k}")
    trace_sum = nilpotent_adjacency(g).power(k, threads).trace().coefficient_sum()
    return _cycles_from_trace(trace_sum, k)


def zeon_census(g: Graph, threads: Optional[int] = None) -> Dict[int, int]:
    """Cycle counts for every length from one sequence of powers; zero counts omitted."""
    psi = nilpotent_adjacency(g)
    power = psi
    census: Dict[int, int] = {}
    for k in range(2, g.n + 1):
        power = power.multiply(psi, max_grade=k, threads=threads)
        if power.is_zero():
            break
        if k >= 3:
            count = _cycles_from_trace(power.trace().coefficient_sum(), k)
            if count:
                census[k] = count
        logger.debug(f"Zeon power {k} of {g} computed")
    logger.info(f"Zeon census of {g}: {census}")
    return census
