"""Hexagon flips between rhombic tilings, and the flip graph on all of them.

Three rhombi meeting at an interior vertex of degree 3 fill a unit hexagon
with label triple a < b < c; the hexagon admits exactly two rhombic
tilings, distinguished by their interior vertex (base plus {b}, or base
plus {a, c}).  A flip exchanges one for the other.  Coarsening instead
replaces the three rhombi by the hexagon itself, producing a zonotopal
tiling that both flip partners refine.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .permutations import Permutation
from .tilings import (
    LabelSet,
    RhombicTiling,
    Rhombus,
    enumerate_rhombic,
    tiling_digest,
)
from .zonotopal import ZonoTile, ZonoTiling

__all__ = [
    "INTERIOR_B",
    "INTERIOR_AC",
    "FlipSite",
    "FlipGraph",
    "flip_sites",
    "apply_flip",
    "coarsen_flip",
    "flip_graph",
    "is_connected",
    "to_dot",
]

INTERIOR_B = "interior-b"
INTERIOR_AC = "interior-ac"


def _triple(labels: tuple[int, int, int], base: LabelSet, orientation: str):
    a, b, c = labels
    if orientation == INTERIOR_B:
        return frozenset(
            {
                Rhombus((a, b), base),
                Rhombus((b, c), base),
                Rhombus((a, c), base | {b}),
            }
        )
    return frozenset(
        {
            Rhombus((a, c), base),
            Rhombus((b, c), base | {a}),
            Rhombus((a, b), base | {c}),
        }
    )


@dataclass(frozen=True)
class FlipSite:
    """A flippable hexagon: its label triple, base subset, and which of the
    two rhombus triples currently fills it."""

    labels: tuple[int, int, int]
    base: LabelSet
    orientation: str

    def __post_init__(self):
        a, b, c = self.labels
        if not a < b < c:
            raise ValueError(f"site labels must increase, got {self.labels}")
        object.__setattr__(self, "base", frozenset(self.base))
        if self.base & {a, b, c}:
            raise ValueError(
                f"site base {sorted(self.base)} not disjoint from labels {self.labels}"
            )
        if self.orientation not in (INTERIOR_B, INTERIOR_AC):
            raise ValueError(f"unknown orientation {self.orientation!r}")

    def tiles(self) -> frozenset[Rhombus]:
        """The three rhombi of the present orientation."""
        return _triple(self.labels, self.base, self.orientation)

    def flipped_tiles(self) -> frozenset[Rhombus]:
        return self.flipped().tiles()

    def flipped(self) -> "FlipSite":
        other = INTERIOR_AC if self.orientation == INTERIOR_B else INTERIOR_B
        return FlipSite(self.labels, self.base, other)

    def interior_vertex(self) -> LabelSet:
        a, b, c = self.labels
        if self.orientation == INTERIOR_B:
            return self.base | {b}
        return self.base | {a, c}


def flip_sites(T: RhombicTiling) -> frozenset[FlipSite]:
    """All flippable hexagons of T (equivalently, all degree-3 interior
    vertices), each reported with its present orientation."""
    tiles = T.tiles
    found = []
    for t in tiles:
        x, y = t.pair
        S = t.base
        # t as the {a,b} tile of an interior-b hexagon
        for c in range(y + 1, T.n + 1):
            if Rhombus((y, c), S) in tiles and Rhombus((x, c), S | {y}) in tiles:
                found.append(FlipSite((x, y, c), S, INTERIOR_B))
        # t as the {a,c} tile of an interior-ac hexagon
        for b in range(x + 1, y):
            if Rhombus((b, y), S | {x}) in tiles and Rhombus((x, b), S | {y}) in tiles:
                found.append(FlipSite((x, b, y), S, INTERIOR_AC))
    return frozenset(found)


def _present_orientation(T: RhombicTiling, f: FlipSite) -> FlipSite:
    """The site oriented as it actually sits in T; the same hexagon location
    is accepted in either orientation so a flip can be undone with the same
    site object."""
    if f.tiles() <= T.tiles:
        return f
    g = f.flipped()
    if g.tiles() <= T.tiles:
        return g
    raise ValueError(
        f"no flippable hexagon with labels {f.labels} at base {sorted(f.base)}"
    )


def apply_flip(T: RhombicTiling, f: FlipSite) -> RhombicTiling:
    """Exchange the three rhombi of f's hexagon for the other three."""
    f = _present_orientation(T, f)
    return RhombicTiling(T.w, (T.tiles - f.tiles()) | f.flipped_tiles())


def coarsen_flip(T: RhombicTiling, f: FlipSite) -> ZonoTiling:
    """Merge the three rhombi of f's hexagon into one hexagonal tile.

    Both flip partners coarsen to the same tiling and are exactly its
    rhombic refinements differing over that hexagon.
    """
    f = _present_orientation(T, f)
    kept = frozenset(ZonoTile(t.pair, t.base) for t in T.tiles - f.tiles())
    return ZonoTiling(T.w, kept | {ZonoTile(f.labels, f.base)})


@dataclass(frozen=True)
class FlipGraph:
    """All rhombic tilings of one E(w), joined when one flip apart.

    Nodes are digest-sorted; arcs are digest pairs (low, high), each stored
    once."""

    w: Permutation
    nodes: tuple[RhombicTiling, ...]
    arcs: frozenset[tuple[str, str]]

    @cached_property
    def by_digest(self) -> dict[str, RhombicTiling]:
        return {tiling_digest(T): T for T in self.nodes}

    @cached_property
    def adjacency(self) -> dict[str, tuple[str, ...]]:
        nbrs: dict[str, set[str]] = {d: set() for d in self.by_digest}
        for a, b in self.arcs:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return {d: tuple(sorted(nbrs[d])) for d in sorted(nbrs)}

    def __repr__(self) -> str:
        return (
            f"FlipGraph(w={self.w.to_string()}, {len(self.nodes)} nodes,"
            f" {len(self.arcs)} arcs)"
        )


def flip_graph(w: Permutation) -> FlipGraph:
    nodes = sorted(enumerate_rhombic(w), key=tiling_digest)
    arcs = set()
    for T in nodes:
        d = tiling_digest(T)
        for f in flip_sites(T):
            d2 = tiling_digest(apply_flip(T, f))
            arcs.add((d, d2) if d < d2 else (d2, d))
    return FlipGraph(w, tuple(nodes), frozenset(arcs))


def is_connected(g: FlipGraph) -> bool:
    if not g.nodes:
        return True
    adjacency = g.adjacency
    start = next(iter(adjacency))
    seen = {start}
    stack = [start]
    while stack:
        for nbr in adjacency[stack.pop()]:
            if nbr not in seen:
                seen.add(nbr)
                stack.append(nbr)
    return len(seen) == len(g.nodes)


def to_dot(g: FlipGraph) -> str:
    lines = [f'graph "{g.w.to_string()}" {{']
    for d in sorted(g.by_digest):
        lines.append(f'  "{d}";')
    for a, b in sorted(g.arcs):
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
