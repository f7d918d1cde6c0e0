"""Explicit colorings of K_{2,t} with exactly rx3(K_{2,t}) colors."""

from itertools import permutations

from rainbow_index.core import BipartiteColoring, make_coloring

from .theorem import rx3_value

TWO_COLOR_CODES = ((1, 2), (2, 1))

# four isolated rooks on the 3x3 board
ISOLATED_ROOK_CODES = ((1, 2), (2, 1), (1, 3), (3, 1))

# both orientations of the 4-cycle 1-2-4-3-1; every subset is acceptable
ACCEPT8 = ((1, 2), (1, 3), (2, 1), (2, 4), (3, 1), (3, 4), (4, 2), (4, 3))

FIVE_COLOR_CODES = ((1, 2), (2, 3), (3, 4), (4, 5), (3, 1), (4, 2), (5, 3), (1, 4), (2, 5), (5, 1))


def upper_triangle_codes(k: int) -> tuple[tuple[int, int], ...]:
    """Codes (a, b) with a < b over 1..k, lexicographic: one per unordered pair of colors."""
    return tuple((a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1))


def lower_triangle_codes(k: int) -> tuple[tuple[int, int], ...]:
    return tuple((a, b) for a in range(2, k + 1) for b in range(1, a))


REMAINING_FIVE_COLOR_CODES = tuple(
    code for code in sorted(permutations(range(1, 6), 2)) if code not in FIVE_COLOR_CODES
)


def construct_coloring(t: int) -> BipartiteColoring:
    """A 3-rainbow coloring of K_{2,t} using exactly rx3(K_{2,t}) colors.

    The codes are prefixes of a fixed list per regime:

        t = 1, 2       (1,2), (2,1)
        t = 3, 4       four isolated rooks on the 3x3 board
        t = 5..8       ACCEPT8
        t = 9..20      the ten codes of FIVE_COLOR_CODES, then the remaining
                       off-diagonal codes over 5 colors in lexicographic order
        t >= 21        every upper-triangle code over k colors, then the
                       lower triangle in lexicographic order

    Args:
        t (int): Number of W-vertices, at least 1.

    Returns:
        BipartiteColoring: Deterministic coloring with palette 1..rx3_value(t).
    """
    k = rx3_value(t)
    if k == 2:
        codes = TWO_COLOR_CODES
    elif k == 3:
        codes = ISOLATED_ROOK_CODES
    elif k == 4:
        codes = ACCEPT8
    elif k == 5:
        codes = FIVE_COLOR_CODES + REMAINING_FIVE_COLOR_CODES
    else:
        codes = upper_triangle_codes(k) + lower_triangle_codes(k)
    return make_coloring(t, k, codes[:t])
