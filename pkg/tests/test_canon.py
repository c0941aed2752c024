"""Canonical forms: worked examples, witnesses, and brute-force agreement."""

import itertools
import random

import pytest

from splitkit.canon import (
    canon_cover,
    canon_graph,
    canon_key,
    canon_matrix,
    canon_poset,
    canon_xy,
    canonical_object,
    is_isomorphic,
    relabel_graph,
)
from splitkit.core import BipartitePoset, Graph, SetCover, UsageError, XYGraph


def brute_min_matrix(matrix):
    r = len(matrix)
    c = len(matrix[0]) if r else 0
    best = None
    for rp in itertools.permutations(range(r)):
        for cp in itertools.permutations(range(c)):
            bits = tuple(matrix[rp[i]][cp[j]] for i in range(r) for j in range(c))
            if best is None or bits < best:
                best = bits
    return best if best is not None else ()


def all_matrices(r, c):
    for code in range(1 << (r * c)):
        yield [[(code >> (i * c + j)) & 1 for j in range(c)] for i in range(r)]


# ---------------------------------------------------------------------------
# matrices


def test_matrix_examples():
    mcf = canon_matrix([[0, 1], [1, 0]])
    assert mcf.bits == (0, 1, 1, 0)

    zero = canon_matrix([[0, 0, 0], [0, 0, 0]])
    assert zero.bits == (0,) * 6
    assert zero.row_perm == (0, 1) and zero.col_perm == (0, 1, 2)

    a = canon_matrix([[1, 1], [1, 0]])
    b = canon_matrix([[0, 1], [1, 1]])
    assert a.bits == b.bits == brute_min_matrix([[1, 1], [1, 0]])


def test_matrix_brute_force_up_to_3x3():
    for r in range(4):
        for c in range(4):
            for m in all_matrices(r, c):
                assert canon_matrix(m).bits == brute_min_matrix(m), m


def test_matrix_witness_replay_random():
    rng = random.Random(11)
    for _ in range(200):
        r = rng.randrange(1, 6)
        c = rng.randrange(1, 6)
        m = [[rng.randrange(2) for _ in range(c)] for _ in range(r)]
        mcf = canon_matrix(m)
        replay = tuple(
            m[mcf.row_perm[i]][mcf.col_perm[j]] for i in range(r) for j in range(c)
        )
        assert replay == mcf.bits


def test_matrix_idempotent_identity_witness():
    rng = random.Random(5)
    for _ in range(100):
        r = rng.randrange(1, 5)
        c = rng.randrange(1, 5)
        m = [[rng.randrange(2) for _ in range(c)] for _ in range(r)]
        mcf = canon_matrix(m)
        again = canon_matrix(mcf.rows())
        assert again.bits == mcf.bits
        assert again.row_perm == tuple(range(r))
        assert again.col_perm == tuple(range(c))


# ---------------------------------------------------------------------------
# graphs


def graph(n, edges):
    return Graph.from_edges(n, edges)


def all_graphs(n):
    pairs = [(i, j) for j in range(n) for i in range(j)]
    for code in range(1 << len(pairs)):
        yield graph(n, [pairs[k] for k in range(len(pairs)) if code >> k & 1])


def relabel(g, perm):
    return graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_graph_examples():
    p4 = graph(4, [(0, 1), (1, 2), (2, 3)])
    p4_scrambled = graph(4, [(2, 0), (0, 3), (3, 1)])  # path 2-0-3-1
    assert canon_graph(p4).key == canon_graph(p4_scrambled).key

    k3_k1 = graph(4, [(0, 1), (0, 2), (1, 2)])
    assert canon_graph(p4).key != canon_graph(k3_k1).key

    paw = graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    keys = {canon_graph(relabel(paw, perm)).key for perm in itertools.permutations(range(4))}
    assert len(keys) == 1

    star = graph(4, [(0, 1), (0, 2), (0, 3)])
    assert canon_graph(star).key != canon_graph(paw).key


def test_graph_witness_and_idempotence():
    rng = random.Random(3)
    for _ in range(80):
        n = rng.randrange(0, 8)
        edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.5]
        g = graph(n, edges)
        gc = canon_graph(g)
        canonical = relabel_graph(g, gc.order)
        assert canon_graph(canonical).key == gc.key
        assert canon_graph(canonical).order == tuple(range(n))


def test_equal_keys_have_witnessing_isomorphism():
    # soundness by replay: two relabelings of one graph get equal keys, and
    # applying each witness order lands both on the identical labeled graph
    rng = random.Random(21)
    for _ in range(40):
        n = rng.randrange(1, 8)
        edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.4]
        g1 = graph(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        g2 = relabel(g1, perm)
        c1, c2 = canon_graph(g1), canon_graph(g2)
        assert c1.key == c2.key
        assert relabel_graph(g1, c1.order) == relabel_graph(g2, c2.order)


def test_graph_completeness_small():
    # key partition == orbit partition, exhaustively (n <= 6 runs in acceptance)
    for n in range(6):
        orbits = {}
        for g in all_graphs(n):
            fro = frozenset(g.edges())
            if fro in orbits:
                continue
            orbit_id = len(orbits)
            stack = [g]
            while stack:
                h = stack.pop()
                fh = frozenset(h.edges())
                if orbits.get(fh) == orbit_id:
                    continue
                orbits[fh] = orbit_id
                for i in range(n - 1):
                    perm = list(range(n))
                    perm[i], perm[i + 1] = perm[i + 1], perm[i]
                    stack.append(relabel(h, perm))
        keys = {}
        for g in all_graphs(n):
            keys.setdefault(canon_graph(g).key, set()).add(orbits[frozenset(g.edges())])
        # each key covers exactly one orbit and orbit count matches key count
        assert all(len(v) == 1 for v in keys.values())
        assert len(keys) == len(set(orbits.values()))


# ---------------------------------------------------------------------------
# XY-graphs, covers, posets


def test_xy_keys():
    center_x = XYGraph(1, 2, frozenset({(0, 0), (0, 1)}))  # P3, center distinguished
    ends_x = XYGraph(2, 1, frozenset({(0, 0), (1, 0)}))  # P3, endpoints distinguished
    assert canon_xy(center_x) != canon_xy(ends_x)

    swapped = XYGraph(2, 1, frozenset({(1, 0), (0, 0)}))
    assert canon_xy(ends_x) == canon_xy(swapped)


def test_xy_census_on_three_vertices_has_eight_keys():
    keys = set()
    for nx in range(4):
        ny = 3 - nx
        cells = [(x, y) for x in range(nx) for y in range(ny)]
        for code in range(1 << len(cells)):
            edges = frozenset(cells[k] for k in range(len(cells)) if code >> k & 1)
            keys.add(canon_xy(XYGraph(nx, ny, edges)))
    assert len(keys) == 8


def test_cover_keys():
    a = SetCover(3, ((0, 1), (1, 2)))
    b = SetCover(3, ((1, 2), (0, 1)))
    assert canon_cover(a) == canon_cover(b)
    # element permutation 0<->2
    c = SetCover(3, ((2, 1), (1, 0)))
    assert canon_cover(a) == canon_cover(c)


def test_nine_minimal_covers_of_a_four_set():
    from splitkit.census import naive_oracle

    census = naive_oracle("cover", 4)
    assert census.count == 9
    assert len(set(census.keys)) == 9


def test_poset_keys():
    v1 = BipartitePoset(2, 1, frozenset({(0, 0), (1, 0)}))
    v2 = BipartitePoset(2, 1, frozenset({(1, 0), (0, 0)}))
    assert canon_poset(v1) == canon_poset(v2)

    chain = BipartitePoset(1, 1, frozenset({(0, 0)}))
    antichain = BipartitePoset(2, 0, frozenset())
    assert canon_poset(chain) != canon_poset(antichain)


def test_nine_posets_on_four_points():
    from splitkit.census import naive_oracle

    census = naive_oracle("poset", 4)
    assert census.count == 9


def test_poset_and_xy_share_one_kernel():
    rng = random.Random(9)
    for _ in range(60):
        n0 = rng.randrange(0, 4)
        n1 = rng.randrange(0, 4)
        below = frozenset(
            (a, b) for a in range(n0) for b in range(n1) if rng.random() < 0.5
        )
        below |= frozenset((rng.randrange(n0), b) for b in range(n1) if n0)
        if n1 and not n0:
            continue
        p = BipartitePoset(n0, n1, below)
        h = XYGraph(n0, n1, below)
        # identical dimensions and bits, only the class tag differs
        assert canon_poset(p).data[1:] == canon_xy(h).data[1:]


def test_graph_keys_against_networkx_beyond_exhaustive_range():
    nx = pytest.importorskip("networkx")
    rng = random.Random(2718)
    for trial in range(40):
        n = rng.randrange(8, 13)
        e1 = [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.4]
        g1 = graph(n, e1)
        if trial % 2 == 0:
            perm = list(range(n))
            rng.shuffle(perm)
            g2 = relabel(g1, perm)
        else:
            e2 = [(i, j) for j in range(n) for i in range(j) if rng.random() < 0.4]
            g2 = graph(n, e2)
        h1 = nx.Graph(g1.edges())
        h1.add_nodes_from(range(n))
        h2 = nx.Graph(g2.edges())
        h2.add_nodes_from(range(n))
        same = canon_graph(g1).key == canon_graph(g2).key
        assert same == nx.is_isomorphic(h1, h2)


def test_is_isomorphic():
    p4 = graph(4, [(0, 1), (1, 2), (2, 3)])
    p4r = graph(4, [(3, 2), (2, 1), (1, 0)])
    assert is_isomorphic(p4, p4r)

    c4 = graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    two_k2 = graph(4, [(0, 1), (2, 3)])
    assert not is_isomorphic(c4, two_k2)

    with pytest.raises(UsageError):
        is_isomorphic(p4, SetCover(2, ((0, 1),)))


def test_canonical_object_round_trips_key():
    objs = [
        graph(4, [(0, 1), (1, 2), (2, 3)]),
        SetCover(3, ((0, 1), (1, 2))),
        XYGraph(2, 2, frozenset({(0, 1), (1, 0)})),
        BipartitePoset(2, 2, frozenset({(0, 0), (1, 1)})),
    ]
    for obj in objs:
        canonical, key = canonical_object(obj)
        assert canon_key(canonical) == key == canon_key(obj)
        again, key2 = canonical_object(canonical)
        assert again == canonical and key2 == key
