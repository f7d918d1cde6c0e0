from itertools import product

import numpy as np
import pytest
from pytest import mark

from rainbow_index.core import ColoringError, GenericColoredGraph, RainbowTreeWitness, VertexTriple, make_coloring
from rainbow_index.verifier import (
    WitnessError,
    fast_tree_check,
    generic_has_rainbow_tree,
    has_rainbow_tree,
    iter_triples,
    validate_witness,
)


def tree_labels(codes, k, labels):
    coloring = make_coloring(len(codes), k, codes)
    witness = has_rainbow_tree(coloring, VertexTriple.from_labels(labels, coloring.t))
    return None if witness is None else witness.to_labels(coloring.t)


def test_star_at_u1():
    labels = tree_labels([(1, 2), (2, 3), (3, 1)], 3, ["w1", "w2", "w3"])
    assert labels == [("w1", "u1", 1), ("w2", "u1", 2), ("w3", "u1", 3)]


def test_identical_codes_have_no_tree():
    assert tree_labels([(1, 2), (1, 2), (1, 2)], 3, ["w1", "w2", "w3"]) is None


def test_length_five_tree():
    codes = [(1, 2), (1, 3), (2, 3), (4, 5)]
    labels = tree_labels(codes, 5, ["w1", "w2", "w3"])
    assert labels == [
        ("w1", "u1", 1),
        ("w2", "u2", 3),
        ("w3", "u1", 2),
        ("w4", "u1", 4),
        ("w4", "u2", 5),
    ]


def test_path_through_w():
    assert tree_labels([(1, 2)], 2, ["u1", "u2", "w1"]) == [("w1", "u1", 1), ("w1", "u2", 2)]


@mark.parametrize(
    "codes,k,labels,size",
    [
        ([(1, 2), (3, 2)], 3, ["u2", "w1", "w2"], 3),  # u2-w1-u1-w2
        ([(1, 2), (1, 2), (3, 4)], 4, ["u1", "w1", "w2"], 4),  # w3 bridges u1 and u2
        ([(1, 1), (2, 3)], 3, ["u1", "u2", "w1"], 3),  # w1 hangs off, w2 bridges
        ([(1, 1), (1, 1)], 3, ["u1", "u2", "w1"], None),
    ],
)
def test_tree_sizes(codes, k, labels, size):
    labels = tree_labels(codes, k, labels)
    assert (None if labels is None else len(labels)) == size


def test_triple_from_other_graph():
    coloring = make_coloring(3, 3, [(1, 2), (2, 1), (1, 3)])
    with pytest.raises(ColoringError):
        has_rainbow_tree(coloring, VertexTriple(4, (0, 1, 2)))


def test_validator_rejects_bad_witnesses():
    coloring = make_coloring(3, 3, [(1, 2), (2, 1), (1, 3)])
    triple = VertexTriple(3, (0, 1, 2))
    for edges in [
        ((0, 3, 1), (1, 3, 2), (2, 3, 1)),  # repeated color
        ((0, 3, 2), (1, 3, 2), (2, 4, 3)),  # wrong color
        ((0, 3, 1), (1, 3, 2)),  # misses w3
        ((0, 3, 1), (0, 4, 2), (1, 3, 2), (1, 4, 1)),  # cycle
    ]:
        with pytest.raises(WitnessError):
            validate_witness(coloring, triple, RainbowTreeWitness(edges))


def assert_agrees_with_oracle(coloring):
    graph = GenericColoredGraph.from_coloring(coloring)
    for members in iter_triples(coloring.t):
        witness = has_rainbow_tree(coloring, VertexTriple(coloring.t, members))
        oracle = generic_has_rainbow_tree(graph, members)
        assert (witness is None) == (oracle is None), (coloring.codes, members)
        if witness is not None:
            assert len(witness) == len(oracle)


def test_agrees_with_oracle_on_all_small_colorings():
    codes = list(product(range(1, 4), repeat=2))
    for triple in product(codes, repeat=3):
        assert_agrees_with_oracle(make_coloring(3, 3, triple))


def test_agrees_with_oracle_on_random_colorings():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        t = int(rng.integers(3, 7))
        k = int(rng.integers(2, 6))
        codes = rng.integers(1, k + 1, size=(t, 2)).tolist()
        assert_agrees_with_oracle(make_coloring(t, k, codes))


@mark.parametrize(
    "codes,k,labels,expected",
    [
        ([(1, 2), (3, 4), (1, 2)], 4, ["w1", "w2", "w3"], True),  # four colors
        ([(1, 2), (2, 3), (3, 1)], 3, ["w1", "w2", "w3"], True),  # distinct first coordinates
        ([(1, 2), (1, 3), (2, 3)], 5, ["w1", "w2", "w3"], None),
        ([(1, 2), (1, 2)], 3, ["u1", "w1", "w2"], None),
        ([(1, 2), (2, 1)], 3, ["u1", "w1", "w2"], True),
        ([(1, 2), (1, 3)], 3, ["u2", "w1", "w2"], True),  # three colors
        ([(1, 1)], 3, ["u1", "u2", "w1"], None),
        ([(1, 2)], 3, ["u1", "u2", "w1"], True),
    ],
)
def test_fast_check(codes, k, labels, expected):
    coloring = make_coloring(len(codes), k, codes)
    assert fast_tree_check(coloring, VertexTriple.from_labels(labels, coloring.t)) is expected


@mark.parametrize("k", (3, 4, 5))
def test_fast_check_is_sound(k):
    codes = list(product(range(1, k + 1), repeat=2))
    fired = 0
    for triple in product(codes, repeat=3):
        coloring = make_coloring(3, k, triple)
        for members in iter_triples(3):
            s = VertexTriple(3, members)
            if fast_tree_check(coloring, s):
                fired += 1
                assert has_rainbow_tree(coloring, s) is not None, (triple, members)
    assert fired > 0
