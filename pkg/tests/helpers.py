"""Independent oracles and search utilities shared across the test files.

Everything here recomputes results by a different route than the library
code under test: pattern containment by brute subsequence scan, Bruhat
order by the subword property, fixed-point images by the wiring model,
and census-constrained tilings by a fresh bounded search.
"""
from itertools import combinations, permutations as value_tuples

from elnitsky import (
    Permutation,
    Rhombus,
    Word,
    ZonoTile,
    ZonoTiling,
    apply_simple,
    evaluate,
    inversions,
    reduced_words,
    tiling_to_word,
)
from elnitsky.tilings import peel_apply


def symmetric_group(n):
    return [Permutation(vals) for vals in value_tuples(range(1, n + 1))]


def naive_contains(w, p):
    """Pattern containment by scanning every subsequence."""
    k = p.n
    for positions in combinations(range(1, w.n + 1), k):
        vals = [w(i) for i in positions]
        order = sorted(range(k), key=lambda t: vals[t])
        ranks = [0] * k
        for rank, t in enumerate(order, 1):
            ranks[t] = rank
        if tuple(ranks) == p.values:
            return True
    return False


def bruhat_leq_by_subwords(v, w):
    """v <= w iff one (hence any) reduced word of w has a reduced subword for v."""
    letters = min(reduced_words(w), key=lambda word: word.letters).letters
    target_length = v.length()
    if target_length > len(letters):
        return False
    for positions in combinations(range(len(letters)), target_length):
        candidate = Word(tuple(letters[i] for i in positions), w.n)
        perm, reduced = evaluate(candidate)
        if reduced and perm == v:
            return True
    return False


def bruhat_interval(w):
    from elnitsky import bruhat_leq

    return frozenset(v for v in symmetric_group(w.n) if bruhat_leq(v, w))


def some_reduced_word(w):
    """One reduced word for w, by repeatedly undoing the leftmost descent."""
    letters = []
    u = w
    while not u.is_identity():
        i = min(u.right_descents())
        u = apply_simple(u, i)
        letters.append(i)
    return Word(tuple(reversed(letters)), w.n)


def wiring_image(T, coloring):
    """Fixed-point image by the wiring model: strands cross at dark tiles
    and bounce at light ones, so the image is the product of the dark
    letters in growth order."""
    u = Permutation.identity(T.n)
    v = Permutation.identity(T.n)
    for letter in tiling_to_word(T):
        a, b = u(letter), u(letter + 1)
        tile = Rhombus((a, b), frozenset(u.values[: letter - 1]))
        if coloring.is_dark(tile):
            v = apply_simple(v, letter)
        u = apply_simple(u, letter)
    return v


def census_tiling(w, budget):
    """Some zonotopal tiling of E(w) with exactly budget[k] tiles of each
    size k, or None.  Unguarded bounded search, biggest tiles first."""
    inv_w = inversions(w)
    failed = set()

    def grow(u, remaining, tiles):
        if u == w:
            return tiles if not any(remaining.values()) else None
        key = (u, tuple(sorted(remaining.items())))
        if key in failed:
            return None
        vals = u.values
        options = []
        for p in range(u.n - 1):
            run = [vals[p]]
            base = frozenset(vals[:p])
            for q in range(p + 1, u.n):
                x = vals[q]
                if x < run[-1] or any((y, x) not in inv_w for y in run):
                    break
                run.append(x)
                if remaining.get(len(run), 0) > 0:
                    options.append((len(run), p, tuple(run), base))
        options.sort(key=lambda option: -option[0])
        for k, p, run, base in options:
            remaining[k] -= 1
            found = grow(peel_apply(u, p, k), remaining, tiles + [ZonoTile(run, base)])
            remaining[k] += 1
            if found is not None:
                return found
        failed.add(key)
        return None

    tiles = grow(Permutation.identity(w.n), dict(budget), [])
    return None if tiles is None else ZonoTiling(w, frozenset(tiles))


def sample_permutations(n, count, seed):
    """Deterministic sample of distinct permutations in S_n."""
    import random

    rng = random.Random(seed)
    picked = set()
    while len(picked) < count:
        vals = list(range(1, n + 1))
        rng.shuffle(vals)
        picked.add(tuple(vals))
    return [Permutation(vals) for vals in sorted(picked)]
