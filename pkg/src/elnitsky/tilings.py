"""Rhombic tilings of the polygon E(w), encoded without coordinates.

The 2n-gon E(w) has unit sides labeled 1..n up the left half and, reading the
right half from bottom to top, w(1)..w(n); same-labeled sides are parallel.
Every vertex of a tiling is identified with a subset of {1..n}: the labels of
any shortest edge path reaching it from the bottom vertex.  A rhombus is then
a label pair {a, b} together with the base subset at its lowest vertex, and a
tiling is a set of such rhombi.  This encoding makes the bijection with
commutation classes of reduced words mechanical:

* growing a tiling from a word sweeps a boundary (a permutation u, read off
  the edge labels from the bottom vertex) from the identity to w, emitting
  one rhombus per letter;
* peeling a tiling reads letters back off, one per rhombus that sits on the
  current boundary.

Tile-set equality is the canonical form of a commutation class: two reduced
words grow the same tile set iff they differ by commutation moves.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotReducedError, check_length_guard
from .permutations import Permutation, Word, apply_simple, evaluate, inversions

__all__ = [
    "LabelSet",
    "Rhombus",
    "RhombicTiling",
    "Edge",
    "word_to_tiling",
    "tiling_to_word",
    "all_words",
    "enumerate_rhombic",
    "validate",
    "validation_error",
    "edges_of",
    "vertices_of",
    "tiling_digest",
]

LabelSet = frozenset[int]


@dataclass(frozen=True)
class Rhombus:
    """A tile: the unordered label pair {a, b} plus the base subset below it.

    Its four vertices are base, base|{a}, base|{b} and base|{a,b}.  The base
    is not required to be disjoint from the pair at construction time, so
    that malformed input can be represented and rejected by `validate`.
    """

    pair: tuple[int, int]
    base: LabelSet

    def __post_init__(self):
        a, b = self.pair
        if a == b:
            raise ValueError(f"degenerate tile pair ({a}, {b})")
        if a > b:
            object.__setattr__(self, "pair", (b, a))
        object.__setattr__(self, "base", frozenset(self.base))

    def key(self) -> tuple:
        return (self.pair, tuple(sorted(self.base)))

    def vertices(self) -> tuple[LabelSet, ...]:
        a, b = self.pair
        return (
            self.base,
            self.base | {a},
            self.base | {b},
            self.base | {a, b},
        )

    def edges(self) -> tuple["Edge", ...]:
        a, b = self.pair
        return (
            Edge(self.base, a),
            Edge(self.base, b),
            Edge(self.base | {a}, b),
            Edge(self.base | {b}, a),
        )

    def __repr__(self) -> str:
        return f"Rhombus({self.pair}, {{{', '.join(map(str, sorted(self.base)))}}})"


@dataclass(frozen=True)
class Edge:
    """A unit edge from `tail` to `tail | {label}`; parallel edges share labels."""

    tail: LabelSet
    label: int

    def __post_init__(self):
        object.__setattr__(self, "tail", frozenset(self.tail))
        if self.label in self.tail:
            raise ValueError(f"edge label {self.label} already in tail")

    @property
    def head(self) -> LabelSet:
        return self.tail | {self.label}


@dataclass(frozen=True)
class RhombicTiling:
    """A set of rhombi tiling E(w); equality is tile-set equality."""

    w: Permutation
    tiles: frozenset[Rhombus]

    def __post_init__(self):
        object.__setattr__(self, "tiles", frozenset(self.tiles))

    @property
    def n(self) -> int:
        return self.w.n

    def canonical_tiles(self) -> tuple[Rhombus, ...]:
        return tuple(sorted(self.tiles, key=Rhombus.key))

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "w": list(self.w.values),
                "tiles": [
                    {"pair": list(t.pair), "base": sorted(t.base)}
                    for t in self.canonical_tiles()
                ],
            }
        )

    def __repr__(self) -> str:
        return f"RhombicTiling(w={self.w.to_string()}, {len(self.tiles)} tiles)"


def tiling_digest(tiling) -> str:
    """Short stable digest of the canonical JSON form (rhombic or zonotopal)."""
    return hashlib.sha256(tiling.to_json().encode()).hexdigest()[:12]


# ---------------------------------------------------------------------------
# boundaries
#
# A boundary is a permutation u: the path from the bottom vertex to the top
# whose j-th vertex is the prefix set {u(1), ..., u(j)}.  The base boundary
# is the identity; growth ends at u = w.

def prefix_sets(u: Permutation) -> tuple[LabelSet, ...]:
    """The n+1 vertices of the boundary u, from empty to full."""
    out = [frozenset()]
    for v in u.values:
        out.append(out[-1] | {v})
    return tuple(out)


def boundary_edges(u: Permutation) -> frozenset[Edge]:
    prefixes = prefix_sets(u)
    return frozenset(Edge(prefixes[j], u(j + 1)) for j in range(u.n))


def polygon_vertices(w: Permutation) -> frozenset[LabelSet]:
    """Both boundary paths of E(w): the identity side and the w side."""
    return frozenset(prefix_sets(Permutation.identity(w.n))) | frozenset(
        prefix_sets(w)
    )


def polygon_edges(w: Permutation) -> frozenset[Edge]:
    return boundary_edges(Permutation.identity(w.n)) | boundary_edges(w)


# ---------------------------------------------------------------------------
# growth: word -> tiling

def word_to_tiling(word: Word) -> RhombicTiling:
    """Grow the tiling of a reduced word, one rhombus per letter.

    At boundary u, the letter i contributes the rhombus with pair
    {u(i), u(i+1)} based at the prefix {u(1), ..., u(i-1)}, after which the
    boundary advances by swapping positions i and i+1.  Raises
    NotReducedError at the first letter that would swap a descent.
    """
    u = Permutation.identity(word.n)
    tiles = []
    for k, letter in enumerate(word, 1):
        a, b = u(letter), u(letter + 1)
        if a > b:
            raise NotReducedError(position=k, letter=letter)
        tiles.append(Rhombus((a, b), frozenset(u.values[: letter - 1])))
        u = apply_simple(u, letter)
    return RhombicTiling(w=u, tiles=frozenset(tiles))


# ---------------------------------------------------------------------------
# peeling: tiling -> word
#
# A tile (labels, base) sits on the boundary u when the base is a prefix of u
# and the labels continue it in increasing order; peeling it reverses that
# segment of u.  These helpers take the label set as a sorted tuple so the
# same code serves 2k-gon tiles.

def peel_position(u: Permutation, labels: tuple[int, ...], base: LabelSet) -> int | None:
    """0-based prefix length at which the tile sits on u, or None."""
    p = len(base)
    k = len(labels)
    if p + k > u.n:
        return None
    if u.values[p : p + k] != labels:
        return None
    if frozenset(u.values[:p]) != base:
        return None
    return p


def peel_apply(u: Permutation, position: int, size: int) -> Permutation:
    """Advance the boundary across a tile: reverse the segment after `position`."""
    vals = list(u.values)
    vals[position : position + size] = reversed(vals[position : position + size])
    return Permutation(tuple(vals))


def _peelable_rhombi(u: Permutation, tiles) -> list[tuple[int, Rhombus]]:
    """(letter, tile) pairs currently sitting on the boundary u, letter-sorted."""
    found = []
    for tile in tiles:
        p = peel_position(u, tile.pair, tile.base)
        if p is not None:
            found.append((p + 1, tile))
    found.sort(key=lambda x: x[0])
    return found


def tiling_to_word(T: RhombicTiling) -> Word:
    """Peel tiles off the base boundary, smallest letter first.

    The result is the lexicographically least reduced word of T's commutation
    class, and word_to_tiling(result) == T.
    """
    u = Permutation.identity(T.n)
    remaining = set(T.tiles)
    letters = []
    while remaining:
        moves = _peelable_rhombi(u, remaining)
        if not moves:
            raise ValueError(
                f"malformed tiling: no tile sits on the boundary {u.to_string()}"
            )
        letter, tile = moves[0]
        letters.append(letter)
        remaining.remove(tile)
        u = apply_simple(u, letter)
    return Word(tuple(letters), T.n)


def all_words(T: RhombicTiling) -> frozenset[Word]:
    """All peeling orders of T: the full commutation class of its words."""
    check_length_guard(len(T.tiles), "peeling-order enumeration")
    results: set[tuple[int, ...]] = set()

    def peel(u: Permutation, remaining: frozenset[Rhombus], acc: tuple[int, ...]):
        if not remaining:
            results.add(acc)
            return
        for letter, tile in _peelable_rhombi(u, remaining):
            peel(apply_simple(u, letter), remaining - {tile}, acc + (letter,))

    peel(Permutation.identity(T.n), T.tiles, ())
    if not results:
        raise ValueError("malformed tiling: no complete peeling order exists")
    return frozenset(Word(x, T.n) for x in results)


# ---------------------------------------------------------------------------
# enumeration and validation

@lru_cache(maxsize=256)
def enumerate_rhombic(w: Permutation) -> frozenset[RhombicTiling]:
    """All rhombic tilings of E(w), by depth-first boundary growth.

    Branches over every ascent of the boundary whose pair is an inversion of
    w; partial tile sets determine their boundary, so visited partials prune
    the (heavily reconvergent) search tree.
    """
    check_length_guard(w.length(), "rhombic tiling enumeration")
    inv_w = inversions(w)
    complete: set[frozenset[Rhombus]] = set()
    seen: set[frozenset[Rhombus]] = set()

    def grow(u: Permutation, tiles: frozenset[Rhombus]):
        if tiles in seen:
            return
        seen.add(tiles)
        if u == w:
            complete.add(tiles)
            return
        for i in u.ascents():
            a, b = u(i), u(i + 1)
            if (a, b) in inv_w:
                tile = Rhombus((a, b), frozenset(u.values[: i - 1]))
                grow(apply_simple(u, i), tiles | {tile})

    grow(Permutation.identity(w.n), frozenset())
    return frozenset(RhombicTiling(w, tiles) for tiles in complete)


def validation_error(T: RhombicTiling) -> str | None:
    """Reason T is not a rhombic tiling of E(w), or None if it is."""
    n = T.n
    for tile in T.tiles:
        a, b = tile.pair
        if not (1 <= a <= n and 1 <= b <= n):
            return f"tile pair ({a}, {b}) outside 1..{n}"
        if not all(1 <= x <= n for x in tile.base):
            return f"tile base {sorted(tile.base)} outside 1..{n}"
        if tile.base & {a, b}:
            return f"tile base {sorted(tile.base)} not disjoint from pair ({a}, {b})"
    inv_w = inversions(T.w)
    pairs = [t.pair for t in T.tiles]
    if len(set(pairs)) < len(pairs):
        dup = next(p for p in pairs if pairs.count(p) > 1)
        return f"pair {dup} covered by more than one tile"
    extra = set(pairs) - inv_w
    if extra:
        return f"pair {min(extra)} is not an inversion of {T.w.to_string()}"
    missing = inv_w - set(pairs)
    if missing:
        return f"inversion {min(missing)} not covered by any tile"
    if not peel_order_exists(
        Permutation.identity(n), frozenset((t.pair, t.base) for t in T.tiles)
    ):
        return "tiles do not admit any peeling order from the base boundary"
    return None


def validate(T: RhombicTiling) -> bool:
    """True iff T's pairs are exactly inversions(w) and a peeling order exists."""
    return validation_error(T) is None


def peel_order_exists(
    start: Permutation, tiles: frozenset[tuple[tuple[int, ...], LabelSet]]
) -> bool:
    """Search for a complete peeling order; memoizes dead remainder sets."""
    dead: set[frozenset] = set()

    def peel(u: Permutation, remaining: frozenset) -> bool:
        if not remaining:
            return True
        if remaining in dead:
            return False
        for labels, base in remaining:
            p = peel_position(u, labels, base)
            if p is not None:
                if peel(peel_apply(u, p, len(labels)), remaining - {(labels, base)}):
                    return True
        dead.add(remaining)
        return False

    return peel(start, tiles)


# ---------------------------------------------------------------------------
# incidence data

def edges_of(T: RhombicTiling) -> frozenset[Edge]:
    """All unit edges of T: tile edges plus the polygon boundary of E(w)."""
    edges = set(polygon_edges(T.w))
    for tile in T.tiles:
        edges.update(tile.edges())
    return frozenset(edges)


def vertices_of(T: RhombicTiling) -> frozenset[LabelSet]:
    """All vertices of T, including every boundary vertex of E(w)."""
    vertices = set(polygon_vertices(T.w))
    for tile in T.tiles:
        vertices.update(tile.vertices())
    return frozenset(vertices)
