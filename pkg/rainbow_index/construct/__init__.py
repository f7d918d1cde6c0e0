from .construction import (
    ACCEPT8,
    FIVE_COLOR_CODES,
    ISOLATED_ROOK_CODES,
    REMAINING_FIVE_COLOR_CODES,
    construct_coloring,
    lower_triangle_codes,
    upper_triangle_codes,
)
from .export import DOT_PALETTE, coloring_to_dot
from .theorem import ValueInterval, rx3_interval, rx3_value
