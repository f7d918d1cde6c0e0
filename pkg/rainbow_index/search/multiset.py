"""Code multisets and their canonical forms under relabeling of the colors.

The verdict of a coloring of K_{2,t} depends only on the multiset of its color
codes, and is unchanged when the colors 1..k are permuted. Exhaustive searches
therefore enumerate one representative per orbit: the sorted code list that is
lexicographically least over all k! relabelings.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from rainbow_index.core import BipartiteColoring, ColorCode, make_coloring

MAX_CANONICAL_K = 8


@dataclass(frozen=True)
class CodeMultiset:
    """A multiset of color codes over the palette 1..k, stored as a sorted tuple."""

    k: int
    codes: tuple[ColorCode, ...]

    def __post_init__(self):
        codes = tuple(sorted(ColorCode(int(a1), int(a2)) for a1, a2 in self.codes))
        if not codes:
            raise ValueError("A code multiset needs at least one code")
        for code in codes:
            if not (1 <= code.a1 <= self.k and 1 <= code.a2 <= self.k):
                raise ValueError(f"Code {tuple(code)} uses a color outside 1..{self.k}")
        object.__setattr__(self, "codes", codes)

    @property
    def counts(self) -> Counter:
        return Counter(self.codes)

    @property
    def total(self) -> int:
        return len(self.codes)

    def __len__(self):
        return len(self.codes)

    def to_coloring(self) -> BipartiteColoring:
        return make_coloring(self.total, self.k, self.codes)


def all_codes(k: int, colors=None) -> list[tuple[int, int]]:
    """Every code over `colors` (default 1..k) in lexicographic order."""
    colors = sorted(range(1, k + 1) if colors is None else colors)
    return [(a, b) for a in colors for b in colors]


@lru_cache(maxsize=None)
def relabelings(k: int) -> np.ndarray:
    """Array of shape (k!, k+1); row p maps color c to relabelings(k)[p, c]. Column 0 is padding."""
    if k > MAX_CANONICAL_K:
        raise ValueError(f"Refusing to enumerate {k}! color relabelings (k > {MAX_CANONICAL_K})")
    perms = np.array(list(permutations(range(1, k + 1))), dtype=np.int64).reshape(-1, k)
    return np.hstack([np.zeros((len(perms), 1), dtype=np.int64), perms])


def _relabeled_keys(codes, k: int) -> np.ndarray:
    """Sorted code keys a*(k+1)+b of every relabeling, one row per permutation."""
    codes = np.asarray(codes, dtype=np.int64).reshape(-1, 2)
    perms = relabelings(k)
    keys = perms[:, codes[:, 0]] * (k + 1) + perms[:, codes[:, 1]]
    return np.sort(keys, axis=1)


def canonical_form(multiset: CodeMultiset) -> CodeMultiset:
    """Least sorted code list in the orbit of `multiset` under color relabeling."""
    k = multiset.k
    keys = _relabeled_keys(multiset.codes, k)
    best = keys[np.lexsort(keys.T[::-1])[0]]
    return CodeMultiset(k, tuple(zip((best // (k + 1)).tolist(), (best % (k + 1)).tolist())))


def is_canonical(codes, k: int) -> bool:
    """Whether the sorted form of `codes` is the least in its orbit.

    Every prefix of a canonical sorted list is itself canonical, so enumerations
    may reject a prefix as soon as this returns False.
    """
    # row 0 is the identity relabeling
    return first_row_is_least(_relabeled_keys(codes, k))


def first_row_is_least(keys: np.ndarray) -> bool:
    """Whether no row of `keys` is lexicographically smaller than row 0."""
    diff = keys - keys[0]
    differs = diff != 0
    first = np.argmax(differs, axis=1)
    smaller = differs.any(axis=1) & (diff[np.arange(len(diff)), first] < 0)
    return not smaller.any()


def permute(multiset: CodeMultiset, sigma) -> CodeMultiset:
    """Apply the color bijection sigma (sigma[c - 1] is the image of c) to every code."""
    sigma = [int(c) for c in sigma]
    if sorted(sigma) != list(range(1, multiset.k + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{multiset.k}")
    return CodeMultiset(multiset.k, tuple((sigma[a1 - 1], sigma[a2 - 1]) for a1, a2 in multiset.codes))
