from __future__ import annotations

import math

import pytest

from hitlab.errors import EnumerationCapError, PreconditionError
from hitlab.graph import Graph, VertexSet, gen_cluster, gen_cycle, gen_gnp, gen_path
from hitlab.mis import (
    MisFamily,
    alpha_with_witness,
    enumerate_mis,
    independence_check,
    kernel,
)
from helpers import brute_mis_family, members, petersen, random_gnp_corpus


def assert_matches_brute(g: Graph):
    alpha, masks = brute_mis_family(g)
    got_alpha, witness = alpha_with_witness(g)
    assert got_alpha == alpha
    assert witness.size == alpha
    assert independence_check(g, witness)
    fam = enumerate_mis(g)
    assert fam.alpha == alpha
    assert sorted(vs.bits for vs in fam.sets) == sorted(masks)


@pytest.mark.parametrize(
    "builder,expected_alpha",
    [
        (lambda: gen_path(1), 1),
        (lambda: gen_path(2), 1),
        (lambda: gen_path(7), 4),
        (lambda: gen_path(10), 5),
        (lambda: gen_cycle(5), 2),
        (lambda: gen_cycle(8), 4),
        (lambda: gen_cluster([4]), 1),
        (lambda: gen_cluster([3, 3, 3]), 3),
        (lambda: gen_gnp(9, 0.0, 0), 9),
        (lambda: gen_gnp(6, 1.0, 0), 1),
        (petersen, 4),
    ],
)
def test_alpha_closed_forms(builder, expected_alpha):
    g = builder()
    alpha, witness = alpha_with_witness(g)
    assert alpha == expected_alpha
    assert independence_check(g, witness) and witness.size == alpha


def test_alpha_rejects_empty_graph():
    with pytest.raises(PreconditionError):
        alpha_with_witness(Graph(0, ()))


def test_enumerate_c5_canonical_order(c5):
    fam = enumerate_mis(c5)
    assert fam.alpha == 2 and fam.count == 5
    got = [vs.members() for vs in fam.sets]
    assert got == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    # canonical order is lexicographic on the member tuples
    assert got == sorted(got)


def test_enumerate_cluster_counts():
    for sizes in ([2, 3], [3, 3, 3], [2, 2, 2, 2], [5, 4]):
        fam = enumerate_mis(gen_cluster(sizes))
        assert fam.alpha == len(sizes)
        assert fam.count == math.prod(sizes)


def test_enumerate_respects_cap():
    with pytest.raises(EnumerationCapError):
        enumerate_mis(gen_path(10), cap=9)
    assert enumerate_mis(gen_path(10), cap=10).count == 6


def test_mis_family_hit_queries(c5):
    fam = enumerate_mis(c5)
    assert fam.all_hit(VertexSet.of(5, [0, 1, 2]))
    assert not fam.all_hit(VertexSet.of(5, [0]))
    assert fam.first_missed(VertexSet.of(5, [0])) == VertexSet.of(5, [1, 3])
    assert fam.first_missed(VertexSet.of(5, [0, 1, 2])) is None


def test_kernel_examples():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert kernel(star).members() == (1, 2, 3)  # unique MIS
    assert kernel(gen_path(4)).size == 0  # {0,2},{0,3},{1,3} intersect empty
    assert kernel(gen_path(3)).members() == (0, 2)


def test_independence_check(c5):
    assert independence_check(c5, VertexSet.of(5, [0, 2]))
    assert not independence_check(c5, VertexSet.of(5, [0, 1]))
    assert independence_check(c5, VertexSet.empty(5))


def test_oracle_equivalence_random_sample():
    # a slice of the acceptance corpus for quick runs
    for g in random_gnp_corpus(25, 4, 11, seed=77):
        assert_matches_brute(g)


def test_enumerate_order_is_sorted_by_members():
    for g in random_gnp_corpus(10, 5, 10, seed=13):
        fam = enumerate_mis(g)
        got = [vs.members() for vs in fam.sets]
        assert got == sorted(got)


def test_misfamily_value_object(c5):
    fam = enumerate_mis(c5)
    again = enumerate_mis(c5)
    assert fam == again
    assert isinstance(fam, MisFamily)
    assert fam.host_n == 5
