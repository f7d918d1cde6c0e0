from .acceptable import (
    DEFAULT_BUDGET,
    PROGRESS_EVERY,
    BudgetExceededError,
    SearchRefusedError,
    SearchResult,
    beta,
    beta_search,
    brute_force_rx3,
    brute_force_rx3_search,
    enumeration_estimate,
    find_acceptable,
    is_acceptable,
    max_acceptable,
    max_acceptable_search,
)
from .multiset import CodeMultiset, all_codes, canonical_form, is_canonical, permute
from .rooks import RookPlacement, is_isolated, max_isolated_rooks, max_isolated_rooks_search
