import random

import pytest

import fixture_catalog as cat
from ggraphs import (
    TooLargeError,
    are_isomorphic,
    canonical_form,
    recognize_family,
)
from ggraphs.iso import (
    COMPLETE,
    COMPLETE_BIPARTITE,
    CYCLE,
    DOUBLE_EDGED_COMPLETE_BIPARTITE,
    HYPERCUBE,
    OCTAHEDRON,
    TURAN,
    UNKNOWN,
)
from ggraphs.multigraph import (
    Multigraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    dodecahedron_graph,
    hypercube_graph,
    icosahedron_graph,
    octahedron_graph,
    path_graph,
    star_graph,
    turan_graph,
)

INVARIANCE_FIXTURES = [
    ("c6", lambda: cycle_graph(6)),
    ("c16", lambda: cycle_graph(16)),
    ("k4", lambda: complete_graph(4)),
    ("k5", lambda: complete_graph(5)),
    ("k23", lambda: complete_bipartite(2, 3)),
    ("k25", lambda: complete_bipartite(2, 5)),
    ("k28", lambda: complete_bipartite(2, 8)),
    ("k33", lambda: complete_bipartite(3, 3)),
    ("k2_2_double", lambda: complete_bipartite(2, 2, mult=2)),
    ("k2_3_double", lambda: complete_bipartite(2, 3, mult=2)),
    ("octahedron", octahedron_graph),
    ("cube", lambda: hypercube_graph(3)),
    ("q4", lambda: hypercube_graph(4)),
    ("icosahedron", icosahedron_graph),
    ("dodecahedron", dodecahedron_graph),
    ("turan_13_4", lambda: turan_graph(13, 4)),
    ("star4", lambda: star_graph(4)),
    ("path4", lambda: path_graph(4)),
    ("s3_transpositions", lambda: cat.ggraph_of("sym3_all_transpositions").to_multigraph()),
    ("s4_12_234", lambda: cat.ggraph_of("sym4_12_tailcycle").to_multigraph()),
]


@pytest.mark.parametrize("name,build", INVARIANCE_FIXTURES)
def test_canonical_form_relabeling_invariance(name, build):
    graph = build()
    base = canonical_form(graph)
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(100):
        perm = list(range(graph.n))
        rng.shuffle(perm)
        assert canonical_form(graph.relabel(perm)).edges == base.edges


def test_canonical_form_distinguishes():
    assert canonical_form(complete_bipartite(2, 3)).edges != canonical_form(
        cycle_graph(5)
    ).edges
    assert canonical_form(complete_bipartite(2, 2)).edges == canonical_form(
        cycle_graph(4)
    ).edges  # C4 is K_{2,2}
    # multiplicity is part of the invariant
    assert canonical_form(complete_bipartite(2, 2)).edges != canonical_form(
        complete_bipartite(2, 2, mult=2)
    ).edges


def test_size_bound():
    with pytest.raises(TooLargeError):
        canonical_form(Multigraph(65))
    with pytest.raises(TooLargeError):
        are_isomorphic(Multigraph(65), Multigraph(65))


def test_generating_set_order_multiset_determines_graph():
    # equal-length sequences with matching order multisets give isomorphic graphs
    triples = [
        ("z3z3_s1", "z3z3_s2", "z3z3_s3"),
        ("alt4_12i", "alt4_consecutive3", None),
        ("z6_23", "z6_34", None),
    ]
    for group_cases in triples:
        graphs = [cat.ggraph_of(n) for n in group_cases if n]
        for a in graphs:
            for b in graphs:
                assert are_isomorphic(a, b)


def test_different_class_counts_never_isomorphic():
    two = cat.ggraph_of("klein_ab")        # |S| = 2
    three = cat.ggraph_of("klein_ab_ab")   # |S| = 3
    assert not are_isomorphic(two, three)


def test_isomorphism_is_equivalence_on_fixture_set():
    graphs = [build() for _, build in INVARIANCE_FIXTURES[:10]]
    forms = [canonical_form(g).edges for g in graphs]
    for i, a in enumerate(graphs):
        assert are_isomorphic(a, a)
        for j in range(i + 1, len(graphs)):
            ab = are_isomorphic(a, graphs[j])
            assert ab == are_isomorphic(graphs[j], a)
            assert ab == (forms[i] == forms[j])


def test_named_identifications():
    assert are_isomorphic(cat.ggraph_of("dihedral10_rs"), complete_bipartite(2, 5))
    assert are_isomorphic(cat.ggraph_of("dihedral16_st"), cycle_graph(16))
    assert are_isomorphic(
        cat.ggraph_of("quaternion_ab"), complete_bipartite(2, 2, mult=2)
    )
    assert are_isomorphic(cat.ggraph_of("sd16_ab"), complete_bipartite(2, 8))
    assert are_isomorphic(cat.ggraph_of("klein_ab_ab"), octahedron_graph())
    assert are_isomorphic(cat.ggraph_of("klein_ab"), cycle_graph(4))
    assert are_isomorphic(cat.ggraph_of("genq3_ab"), complete_bipartite(2, 3, mult=2))
    assert are_isomorphic(cat.ggraph_of("alt4_12i"), hypercube_graph(3))


def test_recognize_families():
    tag = recognize_family(cat.ggraph_of("dihedral10_rs"))
    assert (tag.kind, tag.params) == (COMPLETE_BIPARTITE, (2, 5))
    tag = recognize_family(cat.ggraph_of("genq3_ab"))
    assert (tag.kind, tag.params) == (DOUBLE_EDGED_COMPLETE_BIPARTITE, (2, 3))
    tag = recognize_family(cat.ggraph_of("klein_ab_ab"))
    assert tag.kind == OCTAHEDRON
    tag = recognize_family(complete_graph(5))
    assert (tag.kind, tag.params) == (COMPLETE, (5,))
    tag = recognize_family(cycle_graph(8))
    assert (tag.kind, tag.params) == (CYCLE, (8,))
    tag = recognize_family(turan_graph(13, 4))
    assert (tag.kind, tag.params) == (TURAN, (13, 4))
    tag = recognize_family(hypercube_graph(4))
    assert (tag.kind, tag.params) == (HYPERCUBE, (4,))
    tag = recognize_family(icosahedron_graph())
    assert tag.kind == UNKNOWN


def test_recognize_family_params_consistent():
    tag = recognize_family(complete_bipartite(3, 7))
    assert (tag.kind, tag.params) == (COMPLETE_BIPARTITE, (3, 7))
    assert str(tag) == "complete_bipartite(3, 7)"


def test_isomorphism_agrees_with_vf2_oracle():
    nx = pytest.importorskip("networkx")
    from networkx.algorithms.isomorphism import GraphMatcher, numerical_edge_match

    def to_nx(mg):
        g = nx.Graph()
        g.add_nodes_from(range(mg.n))
        for (u, v), m in mg.edges.items():
            g.add_edge(u, v, mult=m)
        return g

    def oracle(a, b):
        return GraphMatcher(
            to_nx(a), to_nx(b), edge_match=numerical_edge_match("mult", 1)
        ).is_isomorphic()

    rng = random.Random(7)

    def random_multigraph(n, p, max_mult):
        g = Multigraph(n)
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    g.add_edge(u, v, rng.randint(1, max_mult))
        return g

    for _ in range(60):
        n = rng.randint(2, 12)
        g = random_multigraph(n, rng.choice([0.2, 0.4, 0.7]), rng.choice([1, 2, 3]))
        perm = list(range(n))
        rng.shuffle(perm)
        assert are_isomorphic(g, g.relabel(perm))
        # perturb one multiplicity, then compare both deciders
        h = g.copy()
        u, v = rng.sample(range(n), 2)
        h.edges[(min(u, v), max(u, v))] = h.multiplicity(u, v) + 1
        assert are_isomorphic(g, h) == oracle(g, h)
        other = random_multigraph(n, rng.choice([0.2, 0.5]), rng.choice([1, 2]))
        assert are_isomorphic(g, other) == oracle(g, other)
