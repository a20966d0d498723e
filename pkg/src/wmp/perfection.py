"""Exact perfection test: search for odd holes in a graph and its complement."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import kernels
from .graph import Graph, complement


class HoleKind(Enum):
    HOLE = "hole"
    ANTIHOLE = "antihole"


@dataclass(frozen=True)
class HoleWitness:
    """Odd induced cycle; for an antihole the cycle lives in the complement."""

    kind: HoleKind
    cycle: tuple[int, ...]

    def is_valid_for(self, g: Graph) -> bool:
        host = g if self.kind is HoleKind.HOLE else complement(g)
        return is_odd_hole(host, self.cycle)


@dataclass(frozen=True)
class PerfectionVerdict:
    perfect: bool
    witness: HoleWitness | None = None


def is_odd_hole(g: Graph, cycle: tuple[int, ...] | list[int]) -> bool:
    """``cycle`` is an induced cycle of ``g`` of odd length at least 5."""
    k = len(cycle)
    if k < 5 or k % 2 == 0 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if g.has_edge(cycle[a], cycle[b]) != consecutive:
                return False
    return True


def find_odd_hole(g: Graph) -> HoleWitness | None:
    cycle = kernels.odd_hole(g.adj, g.n)
    return None if cycle is None else HoleWitness(HoleKind.HOLE, tuple(cycle))


def is_perfect_oracle(g: Graph) -> PerfectionVerdict:
    """Perfect iff neither ``g`` nor its complement has an odd hole."""
    hole = find_odd_hole(g)
    if hole is not None:
        return PerfectionVerdict(False, hole)
    anti = find_odd_hole(complement(g))
    if anti is not None:
        return PerfectionVerdict(False, HoleWitness(HoleKind.ANTIHOLE, anti.cycle))
    return PerfectionVerdict(True)
