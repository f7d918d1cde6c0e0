from .generic import GENERIC_EDGE_LIMIT, GraphSizeError, generic_has_rainbow_tree
from .rainbow_tree import WitnessError, fast_tree_check, has_rainbow_tree, validate_witness
from .verify import VerificationReport, iter_triples, triples_with_vertex, verify_3rainbow
