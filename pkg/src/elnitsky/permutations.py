"""Permutations in one-line notation and words in the simple transpositions.

Everything is 1-indexed: a permutation w of rank n has values w(1), ..., w(n),
and the letter i (with 1 <= i <= n-1) acts on the right by swapping the values
at positions i and i+1.  This makes a word (i_1, ..., i_k) act left to right:
the product s_{i_1} s_{i_2} ... s_{i_k} is evaluated by applying the letters in
order to the identity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "Permutation",
    "Word",
    "InversionSet",
    "inversions",
    "apply_simple",
    "evaluate",
    "contains_pattern",
    "weak_leq",
    "bruhat_leq",
]

# Inversions of w: pairs (a, b) with a < b whose order w reverses.
InversionSet = frozenset[tuple[int, int]]


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> w = Permutation.from_string("7456312")
    >>> w(1), w.n, w.length()
    (7, 7, 17)
    """

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if n == 0 or sorted(self.values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.values!r}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """Value at position i, 1-indexed."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} outside 1..{self.n}")
        return self.values[i - 1]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """Parse "7456312" (single digits) or "10,2,3,..." (comma-separated)."""
        text = text.strip()
        if not text:
            raise ValueError("empty permutation string")
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            parts = list(text)
        try:
            values = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot parse permutation from {text!r}") from None
        return cls(values)

    def to_string(self) -> str:
        """Digit string for n <= 9, comma-separated otherwise."""
        if self.n <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.values, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.values, 1))

    def length(self) -> int:
        """Coxeter length = number of inversions."""
        return len(inversions(self))

    def right_descents(self) -> tuple[int, ...]:
        """Positions i with w(i) > w(i+1)."""
        return tuple(
            i for i in range(1, self.n) if self.values[i - 1] > self.values[i]
        )

    def ascents(self) -> tuple[int, ...]:
        """Positions i with w(i) < w(i+1)."""
        return tuple(
            i for i in range(1, self.n) if self.values[i - 1] < self.values[i]
        )

    def __repr__(self) -> str:
        return f"Permutation({self.to_string()!r})"


@dataclass(frozen=True)
class Word:
    """A word in the letters 1..n-1, each letter naming a simple transposition."""

    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be positive, got {self.n}")
        for k, letter in enumerate(self.letters, 1):
            if not 1 <= letter <= self.n - 1:
                raise ValueError(
                    f"letter {letter} at position {k} outside 1..{self.n - 1}"
                )

    @classmethod
    def from_string(cls, text: str, n: int) -> "Word":
        text = text.strip()
        if not text:
            return cls((), n)
        try:
            letters = tuple(int(p.strip()) for p in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse word from {text!r}") from None
        return cls(letters, n)

    def to_string(self) -> str:
        return ",".join(str(x) for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.to_string()!r}, n={self.n})"


def inversions(w: Permutation) -> InversionSet:
    """All pairs (a, b), a < b, appearing out of order in w.

    >>> sorted(inversions(Permutation.from_string("321")))
    [(1, 2), (1, 3), (2, 3)]
    """
    pos = w.inverse().values
    return frozenset(
        (a, b)
        for a, b in itertools.combinations(range(1, w.n + 1), 2)
        if pos[a - 1] > pos[b - 1]
    )


def apply_simple(u: Permutation, i: int) -> Permutation:
    """Right-multiply by the simple transposition at position i (swap i, i+1)."""
    if not 1 <= i <= u.n - 1:
        raise ValueError(f"letter {i} outside 1..{u.n - 1}")
    vals = list(u.values)
    vals[i - 1], vals[i] = vals[i], vals[i - 1]
    return Permutation(tuple(vals))


def evaluate(word: Word) -> tuple[Permutation, bool]:
    """Product of the word's letters applied to the identity.

    The second component is True iff the word is reduced, i.e. every letter
    increases the length by one (swaps an ascent).
    """
    u = Permutation.identity(word.n)
    reduced = True
    for letter in word:
        if u(letter) > u(letter + 1):
            reduced = False
        u = apply_simple(u, letter)
    return u, reduced


def contains_pattern(w: Permutation, p: Permutation) -> bool:
    """True iff some subsequence of w is order-isomorphic to p.

    Backtracking search: pattern positions are matched left to right, keeping
    only partial matches whose values realize the pattern's relative order.
    """
    if p.n > w.n:
        raise ValueError(f"pattern of rank {p.n} longer than word of rank {w.n}")

    pvals = p.values
    wvals = w.values

    def extend(start: int, chosen: tuple[int, ...]) -> bool:
        t = len(chosen)
        if t == len(pvals):
            return True
        for j in range(start, len(wvals) - (len(pvals) - t) + 1):
            v = wvals[j]
            # v must compare to each chosen value the way pvals[t] compares
            # to the corresponding pattern entry
            if all(
                (v > c) == (pvals[t] > pvals[s]) for s, c in enumerate(chosen)
            ):
                if extend(j + 1, chosen + (v,)):
                    return True
        return False

    return extend(0, ())


def _check_same_rank(u: Permutation, w: Permutation) -> None:
    if u.n != w.n:
        raise ValueError(f"rank mismatch: {u.n} vs {w.n}")


def weak_leq(u: Permutation, w: Permutation) -> bool:
    """Right weak order: u <= w iff inversions(u) is a subset of inversions(w)."""
    _check_same_rank(u, w)
    return inversions(u) <= inversions(w)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order via the dominance criterion.

    u <= w iff for all i, j:  #{k <= i : u(k) >= j}  <=  #{k <= i : w(k) >= j}.
    """
    _check_same_rank(u, w)
    n = u.n
    ucount = _upper_left_counts(u)
    wcount = _upper_left_counts(w)
    return all(
        ucount[i][j] <= wcount[i][j]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )


def _upper_left_counts(w: Permutation) -> list[list[int]]:
    """Table c[i][j] = #{k <= i : w(k) >= j}, row 0 all zeros."""
    n = w.n
    c = [[0] * (n + 1)]
    for i in range(1, n + 1):
        row = list(c[-1])
        for j in range(1, w(i) + 1):
            row[j] += 1
        c.append(row)
    return c
