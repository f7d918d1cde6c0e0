"""Exhaustive searches for acceptable code multisets.

A multiset of color codes is acceptable when the coloring of K_{2,t} it
induces is 3-rainbow. Acceptability is not hereditary: a vertex outside a
triple S can carry the tree of S as the degree-2 extra vertex, so removing it
may break S. Enumerations therefore prune a prefix only when some triple among
its vertices has no rainbow tree in ANY extension of the prefix, and verify
complete candidates exactly.
"""

import logging
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any

import numpy as np
from scipy.special import comb

from rainbow_index.verifier import triples_with_vertex, verify_3rainbow
from rainbow_index.verifier.rainbow_tree import fast_check, find_tree, pair_index
from rainbow_index.verifier.verify import first_failure, iter_triples

from .multiset import CodeMultiset, all_codes, is_canonical

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
PROGRESS_EVERY = 10**6

# beta counts only triples with at least two of the code vertices
BETA_W_MIN = 2


class SearchRefusedError(RuntimeError):
    """Raised instead of starting an exhaustive search that is too large to finish."""


class BudgetExceededError(SearchRefusedError):
    """Raised before an enumeration whose estimated size exceeds the budget."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(f"Enumerating about {estimate} candidates exceeds the budget of {budget}")
        self.estimate = estimate
        self.budget = budget


@dataclass(frozen=True)
class SearchResult:
    op: str
    params: dict
    result: int | None
    candidates_examined: int
    elapsed_ms: float = field(default=0.0, compare=False)
    witness: Any = field(default=None, compare=False)

    def to_document(self) -> dict:
        return {
            "op": self.op,
            "params": dict(self.params),
            "result": self.result,
            "candidates_examined": self.candidates_examined,
        }


def enumeration_estimate(n_codes: int, t: int, distinct_only: bool = False) -> int:
    """Raw number of size-t candidates drawn from `n_codes` codes, before symmetry reduction."""
    if distinct_only:
        return int(comb(n_codes, t, exact=True))
    return int(comb(n_codes + t - 1, t, exact=True))


def check_budget(estimate: int, budget: int):
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)


def is_acceptable(multiset: CodeMultiset, w_min: int = 1) -> bool:
    """Whether the coloring of K_{2,t} given by the multiset (t = its total) is 3-rainbow.

    Args:
        multiset (CodeMultiset): Codes to test.
        w_min (int): Only require trees for triples with at least this many W-vertices.
    """
    return verify_3rainbow(multiset.to_coloring(), w_min=w_min).passed


def _may_have_tree(codes, t: int, k: int, n_colors: int, members, pairs) -> bool:
    """False only if no extension of `codes` gives the triple a rainbow tree.

    Extensions add W-vertices, and a new W-vertex can only serve as the extra
    vertex joining u1 and u2 with two colors unused by the hanging edges.
    """
    if fast_check(codes, t, k, members) or find_tree(codes, t, members, pairs) is not None:
        return True
    w_members = [v for v in members if v < t]
    for sides in product((0, 1), repeat=len(w_members)):
        used = {codes[w][s] for w, s in zip(w_members, sides)}
        if len(used) == len(w_members) and n_colors - len(used) >= 2:
            return True
    return False


class _Enumeration:
    """Depth-first enumeration of sorted code lists of length t drawn from `candidates`.

    Lists are nondecreasing (strictly increasing when `distinct_only`) in the
    order of `candidates`. With `canonical` set, lists that are not least in
    their color-relabeling orbit are rejected as prefixes.
    """

    def __init__(self, k, t, candidates, distinct_only=False, w_min=1, canonical=True):
        self.k = k
        self.t = t
        self.candidates = list(candidates)
        self.distinct_only = distinct_only
        self.w_min = w_min
        self.canonical = canonical
        self.n_colors = len({c for code in self.candidates for c in code})
        self.examined = 0
        self.visited = 0

    def _admissible(self, codes) -> bool:
        if self.canonical and not is_canonical(codes, self.k):
            return False
        t = len(codes)
        pairs = pair_index(codes)
        return all(
            _may_have_tree(codes, t, self.k, self.n_colors, members, pairs)
            for members in triples_with_vertex(t, t - 1, self.w_min)
        )

    def _extensions(self, prefix, start):
        needed = self.t - len(prefix)
        for i in range(start, len(self.candidates)):
            if self.distinct_only and len(self.candidates) - i < needed:
                break
            extended = prefix + (self.candidates[i],)
            if self._admissible(extended):
                yield extended, (i + 1 if self.distinct_only else i)

    def prefixes(self, depth: int, prefix=(), start=0):
        """Admissible prefixes of length `depth` with the candidate index their extensions start from."""
        if len(prefix) == depth:
            yield prefix, start
            return
        for extended, next_start in self._extensions(prefix, start):
            yield from self.prefixes(depth, extended, next_start)

    def search(self, prefix, start):
        """First complete acceptable list below `prefix`, or None."""
        self.visited += 1
        if self.visited % PROGRESS_EVERY == 0:
            logger.info("size %d: %d prefixes visited, %d candidates examined", self.t, self.visited, self.examined)
        if len(prefix) == self.t:
            self.examined += 1
            if first_failure(prefix, self.t, self.k, iter_triples(self.t, self.w_min)) is None:
                return prefix
            return None
        for extended, next_start in self._extensions(prefix, start):
            found = self.search(extended, next_start)
            if found is not None:
                return found
        return None


def _search_partitions(enumeration: _Enumeration, partitions):
    for prefix, start in partitions:
        found = enumeration.search(prefix, start)
        if found is not None:
            return found, enumeration.examined
    return None, enumeration.examined


def find_acceptable(
    k: int, t: int, candidates=None, distinct_only: bool = False, w_min: int = 1, canonical: bool = True, jobs: int = 1
) -> tuple[CodeMultiset | None, int]:
    """First acceptable list of t codes in enumeration order, and the number of candidates verified.

    The search space is split into partitions by the admissible prefixes of
    length two. With `jobs > 1` contiguous groups of partitions run in worker
    processes; groups after the first successful one are discarded, so the
    answer and the count equal those of a sequential run.
    """
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    candidates = all_codes(k) if candidates is None else candidates
    enumeration = _Enumeration(k, t, candidates, distinct_only, w_min, canonical)
    partitions = list(enumeration.prefixes(min(2, t)))

    if jobs > 1 and len(partitions) > 1:
        groups = [g for g in np.array_split(np.arange(len(partitions)), jobs) if len(g)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_search_partitions, enumeration, [partitions[i] for i in group]) for group in groups
            ]
            outcomes = [f.result() for f in futures]
    else:
        outcomes = [_search_partitions(enumeration, partitions)]

    examined = 0
    for found, count in outcomes:
        examined += count
        if found is not None:
            return CodeMultiset(k, found), examined
    return None, examined


def beta_search(
    b: int, k_ambient: int | None = None, colors=None, jobs: int = 1, budget: int = DEFAULT_BUDGET
) -> SearchResult:
    """Largest acceptable multiset of codes drawing both colors from a b-element color set B.

    Sizes are tried upwards and the search stops at the first size with no
    acceptable multiset. Triples meeting fewer than two of the code vertices
    are not required to have trees, since inside a larger K_{2,t} they can use
    vertices with codes outside B.

    Args:
        b (int): Size of B, 1 to 3.
        k_ambient (int): Palette size the codes are declared over, at least b. Defaults to b.
        colors: The set B itself. Defaults to 1..b, which allows canonical rejection.
        jobs (int): Number of worker processes.
        budget (int): Refuse levels whose raw candidate count exceeds this.
    """
    if b not in (1, 2, 3):
        raise ValueError(f"beta is only computed exhaustively for |B| in 1..3, got {b}")
    k_ambient = b if k_ambient is None else k_ambient
    if k_ambient < b:
        raise ValueError(f"Palette 1..{k_ambient} cannot hold {b} colors")
    if colors is None:
        colors, k, canonical = range(1, b + 1), b, True
    else:
        colors, k, canonical = sorted(set(colors)), k_ambient, False
        if len(colors) != b or not all(1 <= c <= k_ambient for c in colors):
            raise ValueError(f"{colors} is not a {b}-subset of 1..{k_ambient}")
    candidates = all_codes(k, colors)

    start_time = time.perf_counter()
    examined, t, witness = 0, 0, None
    while True:
        check_budget(enumeration_estimate(len(candidates), t + 1), budget)
        found, count = find_acceptable(k, t + 1, candidates, w_min=BETA_W_MIN, canonical=canonical, jobs=jobs)
        examined += count
        if found is None:
            break
        t, witness = t + 1, found
    elapsed_ms = (time.perf_counter() - start_time) * 1000
    logger.info("beta(%d) = %d after %d candidates in %.1f ms", b, t, examined, elapsed_ms)
    params = {"b": b, "k_ambient": k_ambient}
    return SearchResult("beta", params, t, examined, elapsed_ms, witness)


def beta(b: int, k_ambient: int | None = None, **kwargs) -> int:
    return beta_search(b, k_ambient, **kwargs).result


def max_acceptable_search(
    k: int,
    distinct_only: bool = False,
    t_cap: int | None = None,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> SearchResult:
    """Largest t <= t_cap with an acceptable multiset (or set) of t codes over k colors.

    Sizes are tried from t_cap downwards. t_cap defaults to k(k-1)+1.

    Raises:
        BudgetExceededError: If the raw candidate count at t_cap exceeds `budget`.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    t_cap = k * (k - 1) + 1 if t_cap is None else t_cap
    if t_cap < 1:
        raise ValueError(f"t_cap must be at least 1, got {t_cap}")
    if distinct_only:
        t_cap = min(t_cap, k * k)
    check_budget(enumeration_estimate(k * k, t_cap, distinct_only), budget)
    if distinct_only:
        warnings.warn("Only sets of distinct codes are enumerated; multisets with repeated codes are not ruled out")

    start_time = time.perf_counter()
    examined, result, witness = 0, 0, None
    for t in range(t_cap, 0, -1):
        found, count = find_acceptable(k, t, distinct_only=distinct_only, jobs=jobs)
        examined += count
        logger.debug("k=%d, size %d: %s after %d candidates", k, t, "found" if found else "none", count)
        if found is not None:
            result, witness = t, found
            break
    elapsed_ms = (time.perf_counter() - start_time) * 1000
    logger.info("max_acceptable(%d) = %d after %d candidates in %.1f ms", k, result, examined, elapsed_ms)
    params = {"k": k, "distinct_only": distinct_only, "t_cap": t_cap}
    return SearchResult("max_acceptable", params, result, examined, elapsed_ms, witness)


def max_acceptable(k: int, distinct_only: bool = False, t_cap: int | None = None, **kwargs) -> int:
    return max_acceptable_search(k, distinct_only, t_cap, **kwargs).result


def brute_force_rx3_search(t: int, k_max: int = 5, jobs: int = 1, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Smallest k <= k_max admitting an acceptable multiset of t codes; result None if there is none.

    Raises:
        BudgetExceededError: If the raw multiset count for k_max exceeds `budget`.
    """
    if t < 1:
        raise ValueError(f"t must be at least 1, got {t}")
    if k_max < 1:
        raise ValueError(f"k_max must be at least 1, got {k_max}")
    check_budget(enumeration_estimate(k_max * k_max, t), budget)

    start_time = time.perf_counter()
    examined, result, witness = 0, None, None
    for k in range(1, k_max + 1):
        found, count = find_acceptable(k, t, jobs=jobs)
        examined += count
        if found is not None:
            result, witness = k, found
            break
    elapsed_ms = (time.perf_counter() - start_time) * 1000
    logger.info("brute_force_rx3(%d) = %s after %d candidates in %.1f ms", t, result, examined, elapsed_ms)
    return SearchResult("brute_force_rx3", {"t": t, "k_max": k_max}, result, examined, elapsed_ms, witness)


def brute_force_rx3(t: int, k_max: int = 5, **kwargs) -> int | None:
    return brute_force_rx3_search(t, k_max, **kwargs).result
