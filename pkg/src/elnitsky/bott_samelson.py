"""Numerical and fixed-point data carried by a tiling.

A tiling with t_k tiles of 2k sides has Poincare polynomial
prod_k [k]_q!^{t_k}, where [i]_q = 1 + q + ... + q^{i-1}.  For a rhombic
tiling this is (1+q)^{l(w)}, and the 2^{l(w)} light/dark colorings of its
rhombi index torus-fixed points: propagating coordinate subspaces across
the tiling realizes each coloring as an assignment of an index set to
every vertex, whose right-boundary chain reads off a permutation below w.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import check_length_guard
from .permutations import Permutation, Word, apply_simple
from .tilings import (
    LabelSet,
    RhombicTiling,
    Rhombus,
    prefix_sets,
    tiling_to_word,
    word_to_tiling,
)

__all__ = [
    "QPolynomial",
    "q_factorial",
    "poincare",
    "LIGHT",
    "DARK",
    "Coloring",
    "FixedPoint",
    "realize_fixed_point",
    "image_permutation",
    "fixed_point_images",
    "stratum_dimension",
    "all_colorings",
]


@dataclass(frozen=True)
class QPolynomial:
    """Polynomial in q with integer coefficients, ascending by degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if not self.coeffs or not other.coeffs:
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPolynomial(tuple(out))

    def __pow__(self, k: int) -> "QPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = QPolynomial.one()
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x):
        """Evaluate at x by Horner's rule."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self) -> str:
        return f"QPolynomial({self.coeffs})"


def q_factorial(i: int) -> QPolynomial:
    """[i]_q! = [i]_q [i-1]_q ... [1]_q; degree i(i-1)/2, value i! at q=1."""
    if i < 1:
        raise ValueError(f"q-factorial needs a positive integer, got {i}")
    result = QPolynomial.one()
    for j in range(2, i + 1):
        result = result * QPolynomial((1,) * j)
    return result


def _tile_size(tile) -> int:
    labels = getattr(tile, "labels", None)
    return 2 if labels is None else len(labels)


def poincare(Z) -> QPolynomial:
    """prod over tiles of [k]_q! for a rhombic or zonotopal tiling Z.

    Degree l(w); palindromic; (1+q)^{l(w)} when every tile is a rhombus.
    """
    result = QPolynomial.one()
    for tile in Z.tiles:
        result = result * q_factorial(_tile_size(tile))
    return result


# ---------------------------------------------------------------------------
# colorings and torus-fixed points

LIGHT = "light"
DARK = "dark"


@dataclass(frozen=True)
class Coloring:
    """A light/dark shade for every rhombus of one tiling.

    Dark tiles are the ones whose two same-dimension subspaces differ (the
    strand-crossing case); the two colors are not interchangeable.  The bit
    string form writes '1' for dark in canonical tile order.
    """

    tiling: RhombicTiling
    dark: frozenset[Rhombus]

    def __post_init__(self):
        dark = frozenset(self.dark)
        object.__setattr__(self, "dark", dark)
        if not dark <= self.tiling.tiles:
            stray = next(iter(dark - self.tiling.tiles))
            raise ValueError(f"colored tile {stray!r} is not in the tiling")

    @classmethod
    def all_light(cls, T: RhombicTiling) -> "Coloring":
        return cls(T, frozenset())

    @classmethod
    def all_dark(cls, T: RhombicTiling) -> "Coloring":
        return cls(T, T.tiles)

    @classmethod
    def from_bits(cls, T: RhombicTiling, bits: str) -> "Coloring":
        tiles = T.canonical_tiles()
        if len(bits) != len(tiles) or set(bits) - {"0", "1"}:
            raise ValueError(
                f"need {len(tiles)} bits of 0/1 for this tiling, got {bits!r}"
            )
        return cls(T, frozenset(t for t, bit in zip(tiles, bits) if bit == "1"))

    def is_dark(self, tile: Rhombus) -> bool:
        return tile in self.dark

    def shade(self, tile: Rhombus) -> str:
        if tile not in self.tiling.tiles:
            raise ValueError(f"tile {tile!r} is not in the tiling")
        return DARK if tile in self.dark else LIGHT

    def bits(self) -> str:
        return "".join(
            "1" if t in self.dark else "0" for t in self.tiling.canonical_tiles()
        )


def stratum_dimension(c: Coloring) -> int:
    """Dimension of the coloring's stratum: its number of dark tiles."""
    return len(c.dark)


def all_colorings(T: RhombicTiling):
    """Yield all 2^{l(w)} colorings of T, in bit-string order."""
    check_length_guard(len(T.tiles), "coloring sweep")
    tiles = T.canonical_tiles()
    for picks in product((False, True), repeat=len(tiles)):
        yield Coloring(T, frozenset(t for t, d in zip(tiles, picks) if d))


@dataclass
class FixedPoint:
    """Index sets spanning the subspace at every vertex of a tiling.

    assignment maps each vertex label set x to a subset of {1..n} of size
    |x|, nested along every edge; the left boundary always carries the base
    flag {1..j}.
    """

    assignment: dict[LabelSet, LabelSet]


def _growth_steps(T: RhombicTiling, word: Word):
    """Per-letter vertex data (tile, bottom, old middle, top, new middle)."""
    steps = []
    u = Permutation.identity(T.n)
    for letter in word:
        vals = u.values
        a, b = vals[letter - 1], vals[letter]
        bottom = frozenset(vals[: letter - 1])
        steps.append(
            (
                Rhombus((a, b), bottom),
                bottom,
                bottom | {a},
                bottom | {a, b},
                bottom | {b},
            )
        )
        u = apply_simple(u, letter)
    return steps


def _propagate(steps, base_vertices, dark) -> dict[LabelSet, LabelSet]:
    assignment = {v: v for v in base_vertices}
    for tile, bottom, middle_old, top, middle_new in steps:
        P = assignment[bottom]
        M = assignment[middle_old]
        Q = assignment[top]
        if tile in dark:
            assignment[middle_new] = P | (Q - M)
        else:
            assignment[middle_new] = M
    return assignment


def realize_fixed_point(
    T: RhombicTiling, c: Coloring, peel_order: Word | None = None
) -> FixedPoint:
    """Propagate index sets across T for the coloring c.

    Sweeping tile by tile from the identity boundary: a light tile copies
    the old middle subspace to the new middle vertex, a dark tile picks the
    complementary index instead.  The result does not depend on which
    growth order `peel_order` picks.
    """
    if c.tiling != T:
        raise ValueError("coloring belongs to a different tiling")
    if peel_order is None:
        word = tiling_to_word(T)
    else:
        word = peel_order
        if word_to_tiling(word) != T:
            raise ValueError("peel order does not grow this tiling")
    steps = _growth_steps(T, word)
    base = prefix_sets(Permutation.identity(T.n))
    return FixedPoint(_propagate(steps, base, c.dark))


def image_permutation(T: RhombicTiling, c: Coloring) -> Permutation:
    """The permutation read off the right-boundary chain of the fixed point."""
    fp = realize_fixed_point(T, c)
    return _image_from(fp.assignment, T.w)


def _image_from(assignment, w: Permutation) -> Permutation:
    values = []
    prev: LabelSet = frozenset()
    for vertex in prefix_sets(w)[1:]:
        cur = assignment[vertex]
        (x,) = cur - prev
        values.append(x)
        prev = cur
    return Permutation(tuple(values))


def fixed_point_images(T: RhombicTiling) -> frozenset[Permutation]:
    """Images of all 2^{l(w)} colorings: the Bruhat interval below w."""
    check_length_guard(len(T.tiles), "fixed-point sweep")
    steps = _growth_steps(T, tiling_to_word(T))
    base = prefix_sets(Permutation.identity(T.n))
    tiles = T.canonical_tiles()
    images = set()
    for picks in product((False, True), repeat=len(tiles)):
        dark = frozenset(t for t, d in zip(tiles, picks) if d)
        images.add(_image_from(_propagate(steps, base, dark), T.w))
    return frozenset(images)
