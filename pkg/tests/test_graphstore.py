"""Graph store: mutation primitives, degree buckets, serialization."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tcreal.graphstore import (
    FLAG_BOTH,
    FLAG_NONE,
    FLAG_T1,
    FLAG_T2,
    Certificate,
    GraphError,
    LabeledMultigraph,
    build_fixed,
)


def triangle(mode="simple"):
    g = LabeledMultigraph(mode)
    for _ in range(3):
        g.add_vertex()
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(2, 0)
    return g


# -- basic mutation -----------------------------------------------------------


def test_add_edge_degrees():
    g = LabeledMultigraph("simple")
    g.add_vertex()
    g.add_vertex()
    e = g.add_edge(0, 1)
    assert g.degrees() == [1, 1]
    assert g.endpoints(e) == (0, 1)
    assert g.num_edges == 1
    assert g.validate()


def test_self_loop_rejected():
    g = LabeledMultigraph("multi")
    g.add_vertex()
    with pytest.raises(GraphError):
        g.add_edge(0, 0)


def test_unknown_endpoint_rejected():
    g = LabeledMultigraph("simple")
    g.add_vertex()
    with pytest.raises(GraphError):
        g.add_edge(0, 3)


def test_parallel_edges_by_mode():
    g = LabeledMultigraph("simple")
    g.add_vertex()
    g.add_vertex()
    g.add_edge(0, 1)
    with pytest.raises(GraphError):
        g.add_edge(1, 0)
    m = LabeledMultigraph("multi")
    m.add_vertex()
    m.add_vertex()
    m.add_edge(0, 1)
    m.add_edge(0, 1)
    assert m.degrees() == [2, 2]
    assert m.validate()


def test_remove_edge_then_re_add():
    g = triangle()
    e = g.incident(0)[0]
    g.remove_edge(e)
    assert sorted(g.degrees()) == [1, 1, 2]
    with pytest.raises(GraphError):
        g.endpoints(e)
    g.add_edge(0, 1)  # the slot is free again in the pair index
    assert g.validate()


def test_unknown_mode_rejected():
    with pytest.raises(GraphError):
        LabeledMultigraph("directed")


# -- bucket queries -----------------------------------------------------------


def test_find_vertex_with_degree():
    g = triangle()
    assert g.degree(g.find_vertex_with_degree(2)) == 2
    with pytest.raises(GraphError):
        g.find_vertex_with_degree(5)


def test_attach_vertex_on_triangle():
    g = triangle()
    w, edges = g.attach_vertex([2, 2])
    assert g.degree(w) == 2
    assert len(edges) == 2
    targets = {v for e in edges for v in g.endpoints(e)} - {w}
    assert len(targets) == 2  # two distinct previously-degree-2 vertices
    assert g.validate()


def test_attach_vertex_on_k2():
    g = LabeledMultigraph("simple")
    g.add_vertex()
    g.add_vertex()
    g.add_edge(0, 1)
    w, _ = g.attach_vertex([1])
    assert sorted(g.degrees()) == [1, 1, 2]
    assert g.degree(w) == 1


def test_attach_vertex_repeat_target_multi():
    g = LabeledMultigraph("multi")
    g.add_vertex()
    g.add_vertex()
    g.add_edge(0, 1)
    w, edges = g.attach_vertex([1, 1], allow_repeat_target=True)
    assert g.degree(w) == 2
    assert sorted(g.degrees()) == [2, 2, 2]
    for e in edges:
        assert w in g.endpoints(e)
    assert g.validate()


def test_attach_vertex_never_targets_itself():
    g = triangle("multi")
    # The new vertex reaches the requested degree 2 while edges are
    # added; it must still never be chosen as its own target.
    w, edges = g.attach_vertex([2, 2, 2], allow_repeat_target=True)
    for e in edges:
        u, v = g.endpoints(e)
        assert u != v
        assert w in (u, v)
    assert g.degree(w) == 3


def test_attach_vertex_missing_degree():
    g = triangle()
    with pytest.raises(GraphError):
        g.attach_vertex([7])


def test_subdivide_edge_k2():
    g = LabeledMultigraph("simple")
    g.add_vertex()
    g.add_vertex()
    e = g.add_edge(0, 1)
    w, (e1, e2) = g.subdivide_edge(e)
    assert g.degree(w) == 2
    assert sorted(g.degrees()) == [1, 1, 2]
    assert g.num_edges == 2


def test_subdivide_triangle_gives_4_cycle():
    g = triangle()
    g.subdivide_edge(0)
    assert g.degrees() == [2, 2, 2, 2]
    assert g.num_edges == 4


def test_subdivide_one_of_triple_edge():
    g = LabeledMultigraph("multi")
    g.add_vertex()
    g.add_vertex()
    e1 = g.add_edge(0, 1)
    g.add_edge(0, 1)
    g.add_edge(0, 1)
    g.subdivide_edge(e1)
    assert sorted(g.degrees(), reverse=True) == [3, 3, 2]
    assert g.validate()


def test_replace_edge_with_degree3_vertex_matches_primitives():
    g = build_fixed("simple", 4,
                    [(0, 1, FLAG_T1), (1, 2, FLAG_T1), (2, 3, FLAG_T1),
                     (0, 2, FLAG_T2), (0, 3, FLAG_T2), (1, 3, FLAG_T2)])
    ref = build_fixed("simple", 4,
                      [(0, 1, FLAG_T1), (1, 2, FLAG_T1), (2, 3, FLAG_T1),
                       (0, 2, FLAG_T2), (0, 3, FLAG_T2), (1, 3, FLAG_T2)])
    w, e_aw = g.replace_edge_with_degree3_vertex(1, 3)  # edge (0, 2)
    ref.remove_edge(3)
    rw = ref.add_vertex()
    ref.add_edge(1, rw, FLAG_T1)
    ref.add_edge(0, rw, FLAG_T2)
    ref.add_edge(2, rw, FLAG_T2)
    assert w == rw == 4
    assert g.degrees() == ref.degrees()
    assert g.endpoints(e_aw) == (0, 4)
    assert g.validate() and ref.validate()
    live = lambda h: sorted(
        (min(h.endpoints(e)), max(h.endpoints(e)), h.eflag[e])
        for e in h.edge_ids()
    )
    assert live(g) == live(ref)


def test_replace_edge_rejects_incident_anchor():
    g = build_fixed("simple", 3,
                    [(0, 1, FLAG_T2), (1, 2, FLAG_NONE), (2, 0, FLAG_NONE)])
    with pytest.raises(GraphError):
        g.replace_edge_with_degree3_vertex(0, 0)


def test_replay_degree3_insertions_matches_single_steps():
    def fresh():
        return build_fixed("simple", 4,
                           [(0, 1, FLAG_T1), (1, 2, FLAG_T1), (2, 3, FLAG_T1),
                            (0, 2, FLAG_T2), (0, 3, FLAG_T2), (1, 3, FLAG_T2)])

    batched = fresh()
    stepped = fresh()
    pair = batched.replay_degree3_insertions([4, 4, 4], (3, 5))
    t2_pair = (3, 5)
    for _ in range(3):
        u = stepped.find_vertex_with_degree(3)
        pick, other = t2_pair
        if u in stepped.endpoints(pick):
            pick, other = other, pick
        _, new_edge = stepped.replace_edge_with_degree3_vertex(u, pick)
        t2_pair = (other, new_edge)
    assert pair == t2_pair
    assert batched.degrees() == stepped.degrees()
    assert batched.to_json_dict() == stepped.to_json_dict()


# -- certificates -------------------------------------------------------------


def test_certificate_from_flags():
    g = build_fixed("simple", 3,
                    [(0, 1, FLAG_BOTH), (1, 2, FLAG_T1), (2, 0, FLAG_T2)])
    cert = g.certificate_from_flags()
    assert cert.tree1 == {0, 1}
    assert cert.tree2 == {0, 2}
    assert cert.shared == {0}
    assert cert.central_cycle is None


def test_certificate_ignores_removed_edges():
    g = build_fixed("multi", 2, [(0, 1, FLAG_T1), (0, 1, FLAG_T2),
                                 (0, 1, FLAG_T1)])
    g.remove_edge(2)
    cert = g.certificate_from_flags()
    assert cert.tree1 == {0} and cert.tree2 == {1}


# -- serialization ------------------------------------------------------------


def test_json_roundtrip():
    g = build_fixed("simple", 4,
                    [(0, 1, FLAG_BOTH), (1, 2, FLAG_T1), (2, 3, FLAG_T2),
                     (3, 0, FLAG_NONE)],
                    central_cycle=(0, 1, 2, 3))
    g.elabel[0] = 2
    g.elabel[1] = 1
    back = LabeledMultigraph.from_json(g.to_json())
    assert back.to_json_dict() == g.to_json_dict()


def test_from_json_rejects_bad_documents():
    with pytest.raises(GraphError):
        LabeledMultigraph.from_json("{not json")
    with pytest.raises(GraphError):
        LabeledMultigraph.from_json(json.dumps({"mode": "simple"}))
    with pytest.raises(GraphError):
        LabeledMultigraph.from_json(json.dumps({
            "mode": "simple", "n": 2,
            "edges": [{"id": 0, "u": 0, "v": 9, "tree": "none", "label": None}],
            "central_cycle": None,
        }))
    with pytest.raises(GraphError):
        LabeledMultigraph.from_json(json.dumps({
            "mode": "simple", "n": 2,
            "edges": [{"id": 0, "u": 0, "v": 1, "tree": "none", "label": 0}],
            "central_cycle": None,
        }))


def test_to_dot_mentions_edges_and_labels():
    g = build_fixed("simple", 2, [(0, 1, FLAG_T1)])
    g.elabel[0] = 7
    dot = g.to_dot()
    assert "0 -- 1" in dot
    assert 'label="7"' in dot


# -- randomized consistency ----------------------------------------------------


@settings(max_examples=100)
@given(st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=20))
def test_random_multi_graphs_stay_consistent(pairs):
    g = LabeledMultigraph("multi")
    for _ in range(8):
        g.add_vertex()
    added = []
    for u, v in pairs:
        if u == v:
            continue
        added.append(g.add_edge(u, v))
    assert g.validate()
    for e in added[::2]:
        g.remove_edge(e)
    assert g.validate()
    degs = [0] * 8
    for e in g.edge_ids():
        u, v = g.endpoints(e)
        degs[u] += 1
        degs[v] += 1
    assert degs == g.degrees()
