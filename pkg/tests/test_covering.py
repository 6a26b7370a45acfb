from __future__ import annotations

import pytest

from coxcover import (
    NotAClassEdge,
    build_fibered_graph,
    class_cycle_rank,
    covering_dot,
    cycle_rank,
    multiplicity_partition,
    recoil_class,
    unique_lift_edge,
    verify_covering,
)
from coxcover.gensets import iter_subsets
from coxcover.recoil import conjugated_generator, same_class_edge_index

from .support import compose, oracle_class, oracle_class_edges, perm, subset


def test_s4_instance_1_3_13(s4):
    inst = build_fibered_graph(s4, subset(1), subset(3), subset(1, 3))
    assert len(inst.vertices) == 5
    assert inst.fiber_size == 1
    assert inst.component_count == 1
    assert inst.degrees == [1]
    assert len(inst.edges) == 5
    assert multiplicity_partition(inst) == (1,)
    assert verify_covering(inst).ok


def test_s5_instance_23_34_13(s5):
    inst = build_fibered_graph(s5, subset(2, 3), subset(3, 4), subset(1, 3))
    assert len(inst.vertices) == 32
    assert inst.fiber_size == 2
    assert inst.component_count == 1
    assert multiplicity_partition(inst) == (2,)
    assert verify_covering(inst).ok


def test_empty_left_subset_gives_copy_of_right_class(s4, i6):
    for sys_ in (s4, i6):
        for mask in iter_subsets(sys_.rank):
            cls = recoil_class(sys_, mask)
            inst = build_fibered_graph(sys_, 0, mask, mask)
            assert len(inst.vertices) == len(cls.members)
            assert inst.fiber_size == 1
            assert len(inst.edges) == len(cls.edges)
            assert all(side == "right" for _, _, side, _ in inst.edges)


def test_empty_instance(s4):
    inst = build_fibered_graph(s4, subset(1), subset(3), subset(2))
    assert inst.is_empty
    assert inst.fiber_size == 0
    assert multiplicity_partition(inst) == ()
    report = verify_covering(inst)
    assert report.status == "empty"
    assert not report.ok
    assert "vacuously" in report.note


def test_empty_instance_matches_brute_force(s4):
    left = oracle_class(4, (1,))
    right = oracle_class(4, (3,))
    products = {compose(u, v) for u in left for v in right}
    from .support import oracle_recoils

    assert all(oracle_recoils(p) != (2,) for p in products)


def test_singleton_fiber_instance(s4):
    inst = build_fibered_graph(s4, 0, subset(2), subset(2))
    report = verify_covering(inst)
    assert report.ok
    assert all(len(f) == 1 for f in inst.fibers.values())


def test_covering_axioms_all_s4(s4):
    checked = 0
    for left in iter_subsets(s4.rank):
        for right in iter_subsets(s4.rank):
            for target in iter_subsets(s4.rank):
                inst = build_fibered_graph(s4, left, right, target)
                if inst.is_empty:
                    continue
                checked += 1
                assert verify_covering(inst).ok
                assert sum(multiplicity_partition(inst)) == inst.fiber_size
    assert checked == 188


def test_edges_move_one_coordinate_and_project_to_edges(s5):
    inst = build_fibered_graph(s5, subset(2, 3), subset(3, 4), subset(1, 3))
    members = set(recoil_class(s5, subset(1, 3)).members)
    for u, v, side, s in inst.edges:
        pu, ru = inst.vertices[u]
        pv, rv = inst.vertices[v]
        if side == "right":
            assert pu == pv and s5.right_cayley[ru][s] == rv
        else:
            assert ru == rv and s5.right_cayley[pu][s] == pv
        assert inst.projection[u] in members
        assert inst.projection[v] in s5.right_cayley[inst.projection[u]]


def test_left_moves_with_nonsimple_conjugate_are_not_edges(s5):
    # the product pair 42153 / 42351 differs by a length-3 conjugate; the
    # corresponding left move must be absent even though both are vertices
    inst = build_fibered_graph(s5, subset(2, 3), subset(3, 4), subset(1, 3))
    pi = s5.from_oneline(perm("41352")).index
    pi2 = s5.from_oneline(perm("43152")).index
    rho = s5.from_oneline(perm("15243")).index
    u = inst.vertex_id[(pi, rho)]
    v = inst.vertex_id[(pi2, rho)]
    assert all(nbr != v for nbr, _, _ in inst.adjacency[u])


def test_unique_lift_left_case(s4):
    vertex = (s4.from_oneline(perm("2314")).index, s4.from_oneline(perm("1243")).index)
    lifted, side, gen = unique_lift_edge(s4, vertex, 2)
    assert side == "left" and gen == 2
    assert tuple(s4.elements[i] for i in lifted) == (perm("2341"), perm("1243"))


def test_unique_lift_right_case(s4):
    vertex = (s4.from_oneline(perm("2341")).index, s4.from_oneline(perm("1243")).index)
    lifted, side, gen = unique_lift_edge(s4, vertex, 1)
    assert side == "right" and gen == 1
    assert tuple(s4.elements[i] for i in lifted) == (perm("2341"), perm("1423"))


def test_unique_lift_dihedral(i6):
    s, t = i6.from_word((0,)), i6.from_word((1,))
    lifted, side, gen = unique_lift_edge(i6, (s.index, t.index), 0)
    assert side == "right"
    assert tuple(i6.format_index(i) for i in lifted) == ("s", "ts")
    lifted, side, gen = unique_lift_edge(i6, (s.index, t.index), 1)
    assert side == "left" and gen == 1
    assert tuple(i6.format_index(i) for i in lifted) == ("st", "t")


def test_unique_lift_requires_class_edge(s4):
    # both these steps leave the product's recoil class
    v1 = (s4.from_oneline(perm("2314")).index, s4.from_oneline(perm("1243")).index)
    with pytest.raises(NotAClassEdge):
        unique_lift_edge(s4, v1, 1)
    v2 = (s4.from_oneline(perm("2134")).index, s4.from_oneline(perm("1243")).index)
    with pytest.raises(NotAClassEdge):
        unique_lift_edge(s4, v2, 2)


def test_lift_dichotomy_brute_force(s4):
    # exactly one of the two candidate factorizations is ever valid
    for left in iter_subsets(s4.rank):
        for right in iter_subsets(s4.rank):
            for target in iter_subsets(s4.rank):
                inst = build_fibered_graph(s4, left, right, target)
                for vid, (p, r) in enumerate(inst.vertices):
                    sigma = inst.projection[vid]
                    for s in range(s4.rank):
                        if not same_class_edge_index(s4, sigma, s):
                            continue
                        right_ok = same_class_edge_index(s4, r, s)
                        conj = conjugated_generator(s4, r, s)
                        left_ok = conj is not None and same_class_edge_index(s4, p, conj)
                        assert right_ok != left_ok
                        vertex, side, _ = unique_lift_edge(s4, (p, r), s)
                        assert side == ("right" if right_ok else "left")
                        assert vertex in inst.vertex_id


def test_fiber_constancy_and_counting(s5):
    sizes = {m: len(recoil_class(s5, m).members) for m in iter_subsets(s5.rank)}
    for left in iter_subsets(s5.rank):
        for right in iter_subsets(s5.rank):
            total = 0
            for target in iter_subsets(s5.rank):
                inst = build_fibered_graph(s5, left, right, target)
                assert all(len(f) == inst.fiber_size for f in inst.fibers.values())
                total += inst.fiber_size * sizes[target]
            assert total == sizes[left] * sizes[right]


def test_cycle_rank():
    assert cycle_rank([1, 2, 3], [(1, 2), (2, 3)]) == 0
    assert cycle_rank([1, 2, 3], [(1, 2), (2, 3), (1, 3)]) == 1
    assert cycle_rank([1, 2, 3, 4], [(1, 2), (3, 4)]) == 0


def test_cycle_rank_of_classes(s4, s5):
    assert class_cycle_rank(recoil_class(s4, subset(3))) == 0
    y2 = recoil_class(s4, subset(2))
    assert len(y2.members) == 5 and len(y2.edges) == 5
    assert class_cycle_rank(y2) == 1
    # independent recount for the 16-element class of S5
    members = oracle_class(5, (1, 3))
    edges = oracle_class_edges(5, (1, 3))
    assert (len(members), len(edges)) == (16, 24)
    y13 = recoil_class(s5, subset(1, 3))
    assert class_cycle_rank(y13) == len(edges) - len(members) + 1 == 9


def test_instance_json_schema(s5):
    inst = build_fibered_graph(s5, subset(2, 3), subset(3, 4), subset(1, 3))
    data = inst.to_json()
    assert data == {"I": [2, 3], "J": [3, 4], "K": [1, 3],
                    "a": 2, "lambda": [2], "components": 1, "vertices": 32}


def test_covering_dot_export(s4):
    inst = build_fibered_graph(s4, subset(1), subset(3), subset(1, 3))
    dot = covering_dot(inst)
    assert dot == covering_dot(inst)
    assert dot.count('"(') >= 5
    assert dot.count("color=blue") == 3
    assert dot.count("color=red") == 2
