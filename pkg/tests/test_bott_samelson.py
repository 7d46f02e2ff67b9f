from collections import Counter
from math import comb, factorial

import pytest

from elnitsky import (
    Coloring,
    GuardExceeded,
    Permutation,
    QPolynomial,
    Word,
    ZonoTile,
    ZonoTiling,
    all_colorings,
    all_words,
    bruhat_leq,
    coarsen_flip,
    edges_of,
    enumerate_rhombic,
    fixed_point_images,
    flip_sites,
    image_permutation,
    poincare,
    q_factorial,
    realize_fixed_point,
    stratum_dimension,
    vertices_of,
    word_to_tiling,
)
from elnitsky.tilings import Rhombus, prefix_sets

from helpers import (
    bruhat_interval,
    some_reduced_word,
    symmetric_group,
    wiring_image,
)

T21 = word_to_tiling(Word((1,), 2))
T121 = word_to_tiling(Word((1, 2, 1), 3))


def test_qpolynomial_normalization_and_arithmetic():
    assert QPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPolynomial((0,)).coeffs == ()
    assert QPolynomial.one().coeffs == (1,)
    assert QPolynomial.one().degree == 0

    p = QPolynomial((1, 1))
    assert (p * p).coeffs == (1, 2, 1)
    assert (p**3).coeffs == (1, 3, 3, 1)
    assert (p**0) == QPolynomial.one()
    with pytest.raises(ValueError):
        p ** (-1)

    assert p(1) == 2
    assert (p**3)(2) == 27
    assert QPolynomial((1, 2, 1)).is_palindromic()
    assert not QPolynomial((1, 2)).is_palindromic()


def test_q_factorial_small_values():
    assert q_factorial(1).coeffs == (1,)
    assert q_factorial(2).coeffs == (1, 1)
    assert q_factorial(3).coeffs == (1, 2, 2, 1)
    assert q_factorial(4).coeffs == (1, 3, 5, 6, 5, 3, 1)
    with pytest.raises(ValueError):
        q_factorial(0)
    for i in range(1, 7):
        assert q_factorial(i).degree == comb(i, 2)
        assert q_factorial(i)(1) == factorial(i)
        assert q_factorial(i).is_palindromic()


def test_q_factorial_is_the_length_generating_function():
    for n in range(2, 6):
        histogram = Counter(w.length() for w in symmetric_group(n))
        coeffs = tuple(histogram[d] for d in range(max(histogram) + 1))
        assert q_factorial(n).coeffs == coeffs


def test_poincare_of_rhombic_tilings():
    assert poincare(word_to_tiling(Word((), 3))) == QPolynomial.one()
    assert poincare(T121).coeffs == (1, 3, 3, 1)
    for w in symmetric_group(4):
        for T in enumerate_rhombic(w):
            p = poincare(T)
            assert p.coeffs == (QPolynomial((1, 1)) ** w.length()).coeffs


def test_poincare_of_single_large_tiles():
    for n in range(2, 5):
        w = Permutation.longest(n)
        Z = ZonoTiling(w, frozenset({ZonoTile(tuple(range(1, n + 1)), frozenset())}))
        assert poincare(Z) == q_factorial(n)


def test_poincare_of_a_mixed_tiling():
    T = next(iter(enumerate_rhombic(Permutation.longest(4))))
    f = next(iter(flip_sites(T)))
    Z = coarsen_flip(T, f)
    p = poincare(Z)
    assert p == q_factorial(3) * QPolynomial((1, 1)) ** 3
    assert p.degree == 6
    assert p.is_palindromic()
    assert p(1) == 48


def test_poincare_degree_and_symmetry_for_all_s4_tilings():
    from elnitsky import enumerate_zonotopal

    for w in symmetric_group(4):
        for Z in enumerate_zonotopal(w):
            p = poincare(Z)
            assert p.degree == w.length()
            assert p.is_palindromic()


def test_coloring_construction_and_bits():
    c = Coloring.all_light(T121)
    assert c.bits() == "000"
    assert stratum_dimension(c) == 0
    d = Coloring.all_dark(T121)
    assert d.bits() == "111"
    assert stratum_dimension(d) == 3

    mixed = Coloring.from_bits(T121, "010")
    assert mixed.bits() == "010"
    tiles = T121.canonical_tiles()
    assert not mixed.is_dark(tiles[0])
    assert mixed.is_dark(tiles[1])
    assert mixed.shade(tiles[1]) == "dark"
    assert mixed.shade(tiles[0]) == "light"

    with pytest.raises(ValueError):
        Coloring.from_bits(T121, "01")
    with pytest.raises(ValueError):
        Coloring.from_bits(T121, "01x")
    foreign = Rhombus((1, 3), frozenset())
    with pytest.raises(ValueError):
        Coloring(T121, frozenset({foreign}))
    with pytest.raises(ValueError):
        Coloring.all_light(T121).shade(foreign)


def test_all_colorings_order_and_count():
    cs = list(all_colorings(T121))
    assert len(cs) == 8
    assert [c.bits() for c in cs] == [format(k, "03b") for k in range(8)]


def test_guards_on_large_tilings():
    big = word_to_tiling(some_reduced_word(Permutation.longest(7)))
    with pytest.raises(GuardExceeded):
        next(all_colorings(big))
    with pytest.raises(GuardExceeded):
        fixed_point_images(big)


def test_fixed_point_on_the_single_tile():
    dark = realize_fixed_point(T21, Coloring.all_dark(T21))
    assert dark.assignment[frozenset({2})] == frozenset({2})
    light = realize_fixed_point(T21, Coloring.all_light(T21))
    assert light.assignment[frozenset({2})] == frozenset({1})
    assert image_permutation(T21, Coloring.all_dark(T21)) == Permutation((2, 1))
    assert image_permutation(T21, Coloring.all_light(T21)) == Permutation((1, 2))


def test_fixed_point_assignment_invariants():
    for w in symmetric_group(4):
        for T in enumerate_rhombic(w):
            verts = vertices_of(T)
            edges = edges_of(T)
            identity_path = prefix_sets(Permutation.identity(T.n))
            for c in all_colorings(T):
                fp = realize_fixed_point(T, c)
                assert set(fp.assignment) == verts
                for v, s in fp.assignment.items():
                    assert len(s) == len(v)
                    assert s <= frozenset(range(1, T.n + 1))
                for e in edges:
                    assert fp.assignment[e.tail] < fp.assignment[e.head]
                for flag in identity_path:
                    assert fp.assignment[flag] == flag


def test_realization_is_independent_of_the_growth_order():
    for T in (T121, next(iter(enumerate_rhombic(Permutation.longest(4))))):
        striped = Coloring.from_bits(T, ("10" * len(T.tiles))[: len(T.tiles)])
        for c in (Coloring.all_dark(T), striped):
            reference = realize_fixed_point(T, c).assignment
            for word in all_words(T):
                fp = realize_fixed_point(T, c, peel_order=word)
                assert fp.assignment == reference


def test_realization_rejects_mismatched_input():
    c = Coloring.all_dark(T121)
    with pytest.raises(ValueError):
        realize_fixed_point(T21, c)
    with pytest.raises(ValueError):
        realize_fixed_point(T121, c, peel_order=Word((2, 1, 2), 3))


def test_images_cover_the_bruhat_interval():
    assert fixed_point_images(T21) == {Permutation((1, 2)), Permutation((2, 1))}
    assert len(fixed_point_images(T121)) == 6
    for w in symmetric_group(4):
        interval = bruhat_interval(w)
        for T in enumerate_rhombic(w):
            assert fixed_point_images(T) == interval
            assert image_permutation(T, Coloring.all_light(T)).is_identity()
            assert image_permutation(T, Coloring.all_dark(T)) == w


def test_images_agree_with_the_wiring_model():
    for w in symmetric_group(4):
        for T in enumerate_rhombic(w):
            for c in all_colorings(T):
                image = image_permutation(T, c)
                assert image == wiring_image(T, c)
                assert bruhat_leq(image, w)


def test_dark_count_histogram_matches_poincare():
    for T in (T121, next(iter(enumerate_rhombic(Permutation.longest(4))))):
        histogram = Counter(stratum_dimension(c) for c in all_colorings(T))
        coeffs = tuple(histogram[d] for d in range(max(histogram) + 1))
        assert poincare(T).coeffs == coeffs
