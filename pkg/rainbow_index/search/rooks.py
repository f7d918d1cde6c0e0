"""Isolated rook placements on an n x n board.

Rooks are isolated when any three of them lie in pairwise different rows or
in pairwise different columns. A set of distinct off-diagonal codes over three
colors is acceptable exactly when the rooks on the squares (a1, a2) are
isolated.
"""

import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .acceptable import SearchRefusedError, SearchResult
from .multiset import first_row_is_least

logger = logging.getLogger(__name__)

MAX_BOARD = 5


@dataclass(frozen=True)
class RookPlacement:
    """Distinct squares (row, column) of an n x n board, 1-indexed and sorted."""

    n: int
    rooks: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rooks = tuple(sorted((int(r), int(c)) for r, c in self.rooks))
        if len(set(rooks)) != len(rooks):
            raise ValueError(f"Two rooks share a square in {rooks}")
        if not all(1 <= r <= self.n and 1 <= c <= self.n for r, c in rooks):
            raise ValueError(f"{rooks} leaves the {self.n}x{self.n} board")
        object.__setattr__(self, "rooks", rooks)

    def __len__(self):
        return len(self.rooks)


def _isolated(a, b, c) -> bool:
    return len({a[0], b[0], c[0]}) == 3 or len({a[1], b[1], c[1]}) == 3


def is_isolated(placement: RookPlacement) -> bool:
    return all(_isolated(*triple) for triple in combinations(placement.rooks, 3))


@lru_cache(maxsize=None)
def _line_permutations(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int64)


def _is_canonical(squares, n: int) -> bool:
    """Whether the sorted square indices r*n+c are least under all row and column permutations."""
    squares = np.asarray(squares, dtype=np.int64)
    perms = _line_permutations(n)
    rows, cols = perms[:, squares // n], perms[:, squares % n]
    keys = (rows[:, None, :] * n + cols[None, :, :]).reshape(-1, len(squares))
    return first_row_is_least(np.sort(keys, axis=1))


def max_isolated_rooks_search(n: int) -> SearchResult:
    """Largest isolated placement on the n x n board by exhaustive search.

    Isolation is hereditary, so placements grow square by square and a square
    is only added when every triple through it is isolated. Placements that
    are not least under row and column permutations are skipped.
    """
    if n < 1:
        raise ValueError(f"Board size must be at least 1, got {n}")
    if n > MAX_BOARD:
        raise SearchRefusedError(f"Exhaustive rook search is limited to boards of size {MAX_BOARD}, got {n}")

    start_time = time.perf_counter()
    best: list[int] = []
    examined = 0

    def extend(squares: list[int]):
        nonlocal best, examined
        if len(squares) > len(best):
            best = list(squares)
        for s in range(squares[-1] + 1 if squares else 0, n * n):
            new = divmod(s, n)
            placed = [divmod(q, n) for q in squares]
            if not all(_isolated(a, b, new) for a, b in combinations(placed, 2)):
                continue
            examined += 1
            if not _is_canonical(squares + [s], n):
                continue
            extend(squares + [s])

    extend([])
    elapsed_ms = (time.perf_counter() - start_time) * 1000
    logger.info("max_isolated_rooks(%d) = %d after %d placements in %.1f ms", n, len(best), examined, elapsed_ms)
    witness = RookPlacement(n, tuple((q // n + 1, q % n + 1) for q in best))
    return SearchResult("max_isolated_rooks", {"n": n}, len(best), examined, elapsed_ms, witness)


def max_isolated_rooks(n: int) -> int:
    return max_isolated_rooks_search(n).result
