"""Complex construction, corpus sanity, links, joins, subdivision, maps."""

import itertools

import pytest

from eulerlink import corpus
from eulerlink.complexes import (Simplex, SimplicialMap, build_complex,
                                 barycentric_subdivision, cone,
                                 disjoint_union, euler_characteristic,
                                 geometric_link, join, point_complex,
                                 simplicial_link, suspension, validate_map,
                                 vertex_link)

ALL_CORPUS = [corpus.corpus_complex(n) for n in corpus.corpus_names()]

EXPECTED_CHI = {
    "theta": -1, "segment": 1, "circle": 0, "sphere2": 2, "sphere3": 0,
    "torus": 0, "klein": 0, "rp2": 1, "window": 1,
}


# -- constructors and closure --------------------------------------------------


def test_simplex_rejects_duplicate_vertices():
    with pytest.raises(ValueError):
        Simplex((0, 1, 0))


def test_build_complex_rejects_empty():
    with pytest.raises(ValueError):
        build_complex([])


def test_downward_closure_exhaustive_on_small_complexes():
    for k in [build_complex([Simplex((0, 1, 2, 3))]),
              corpus.theta(), corpus.sphere2()]:
        assert k.is_downward_closed()
        present = set(k.simplices)
        for s in k.simplices:
            for r in range(1, len(s)):
                for sub in itertools.combinations(s, r):
                    assert Simplex(sub) in present


# -- corpus sanity -------------------------------------------------------------


def test_corpus_euler_characteristics():
    for name, chi in EXPECTED_CHI.items():
        assert euler_characteristic(corpus.corpus_complex(name)) == chi
    for name in EXPECTED_CHI:
        assert euler_characteristic(corpus.corpus_complex(f"cone_{name}")) == 1
        assert euler_characteristic(corpus.corpus_complex(f"susp_{name}")) \
            == 2 - EXPECTED_CHI[name]


def test_corpus_face_counts():
    assert corpus.theta().counts_by_dim() == (5, 6)
    assert corpus.window().counts_by_dim() == (25, 56, 32)
    assert corpus.rp2().counts_by_dim() == (6, 15, 10)
    assert corpus.torus().counts_by_dim() == (7, 21, 14)
    assert corpus.klein().counts_by_dim() == (16, 48, 32)
    assert corpus.sphere3().counts_by_dim() == (5, 10, 10, 5)


def edge_triangle_degrees(k):
    return [len([c for c in k.cofaces(k.index(e)) if len(k.simplices[c]) == 3])
            for e in k.simplices if len(e) == 2]


def link_is_single_cycle(k, v):
    lk = vertex_link(k, v)
    counts = lk.counts_by_dim()
    if len(counts) != 2 or counts[0] != counts[1]:
        return False
    deg = {u: 0 for u in lk.vertex_ids}
    for e in lk.simplices:
        if len(e) == 2:
            for u in e:
                deg[u] += 1
    if any(d != 2 for d in deg.values()):
        return False
    # connected?
    adj = {u: [] for u in lk.vertex_ids}
    for e in lk.simplices:
        if len(e) == 2:
            adj[e[0]].append(e[1])
            adj[e[1]].append(e[0])
    seen, todo = set(), [lk.vertex_ids[0]]
    while todo:
        u = todo.pop()
        if u not in seen:
            seen.add(u)
            todo.extend(adj[u])
    return len(seen) == len(lk.vertex_ids)


def is_orientable_surface(k):
    tris = [s for s in k.simplices if len(s) == 3]
    by_edge = {}
    for t in tris:
        for e in itertools.combinations(t, 2):
            by_edge.setdefault(e, []).append(t)
    orient = {tris[0]: 1}
    todo = [tris[0]]
    while todo:
        t = todo.pop()
        for e in itertools.combinations(t, 2):
            for t2 in by_edge[e]:
                if t2 == t:
                    continue
                # induced directions on the shared edge must disagree
                flip = _edge_sign(t, e) == _edge_sign(t2, e)
                want = -orient[t] if flip else orient[t]
                if t2 in orient:
                    if orient[t2] != want:
                        return False
                else:
                    orient[t2] = want
                    todo.append(t2)
    return True


def _edge_sign(tri, edge):
    # sign of the permutation putting the two edge vertices first
    rest = next(v for v in tri if v not in edge)
    order = (edge[0], edge[1], rest)
    perm = [order.index(v) for v in tri]
    sign = 1
    for i in range(3):
        for j in range(i + 1, 3):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def test_closed_surfaces_are_closed_surfaces():
    for name in ["sphere2", "torus", "klein", "rp2"]:
        k = corpus.corpus_complex(name)
        assert all(d == 2 for d in edge_triangle_degrees(k)), name
        assert all(link_is_single_cycle(k, v) for v in k.vertex_ids), name


def test_surface_orientability():
    assert is_orientable_surface(corpus.sphere2())
    assert is_orientable_surface(corpus.torus())
    assert not is_orientable_surface(corpus.klein())
    assert not is_orientable_surface(corpus.rp2())


def test_window_model():
    w = corpus.window()
    o = corpus.origin_vertex(w)
    assert w.simplex_name(o) == "(0,0)"
    assert link_is_single_cycle(w, o[0])      # interior vertex
    q = corpus.quadrant_subcomplex(w)
    assert euler_characteristic(q) == 1
    assert q.counts_by_dim() == (9, 16, 8)
    assert euler_characteristic(corpus.xaxis_subcomplex(w)) == 1


# -- links ---------------------------------------------------------------------


def test_vertex_link_examples():
    tri = build_complex([Simplex((0, 1, 2))])
    lk = vertex_link(tri, 0)
    assert lk.simplices == (Simplex((1,)), Simplex((2,)), Simplex((1, 2)))

    th = corpus.theta()
    junction = next(v for v in th.vertex_ids if th.label(v) == "a")
    lk = vertex_link(th, junction)
    assert lk.counts_by_dim() == (3,)
    assert euler_characteristic(lk) == 3

    s2 = corpus.sphere2()
    lk = vertex_link(s2, s2.vertex_ids[0])
    assert lk.counts_by_dim() == (3, 3)
    assert euler_characteristic(lk) == 0


def test_vertex_link_requires_membership():
    with pytest.raises(ValueError):
        vertex_link(corpus.theta(), 99)


def test_geometric_link_examples():
    s2 = corpus.sphere2()
    v = s2.vertex_ids[0]
    assert geometric_link(s2, Simplex((v,))).simplices == \
        vertex_link(s2, v).simplices

    edge = next(s for s in s2.simplices if len(s) == 2)
    gl = geometric_link(s2, edge)
    assert gl.counts_by_dim() == (4, 4)
    assert euler_characteristic(gl) == 0

    tri = build_complex([Simplex((0, 1, 2))])
    gl = geometric_link(tri, Simplex((0, 1, 2)))
    assert gl.counts_by_dim() == (3, 3)
    assert euler_characteristic(gl) == 0

    with pytest.raises(ValueError):
        geometric_link(tri, Simplex((0, 3)))


# -- join, cone, suspension, union ----------------------------------------------


def test_join_small_examples():
    e = join(point_complex("p"), point_complex("q"))
    assert e.counts_by_dim() == (2, 1)
    s0 = build_complex([Simplex((0,)), Simplex((1,))])
    c4 = join(s0, s0)
    assert c4.counts_by_dim() == (4, 4)
    assert euler_characteristic(c4) == 0


def test_join_chi_identity_over_corpus_pairs():
    chis = [euler_characteristic(k) for k in ALL_CORPUS]
    for i in range(len(ALL_CORPUS)):
        for j in range(i, len(ALL_CORPUS)):
            got = euler_characteristic(join(ALL_CORPUS[i], ALL_CORPUS[j]))
            a, b = chis[i], chis[j]
            assert got == a + b - a * b, (ALL_CORPUS[i].name,
                                          ALL_CORPUS[j].name)


def test_disjoint_union_and_cone():
    for k in ALL_CORPUS[:9]:
        chi = euler_characteristic(k)
        assert euler_characteristic(disjoint_union(k, k)) == 2 * chi
        assert euler_characteristic(cone(k)) == 1
        assert euler_characteristic(suspension(k)) == 2 - chi
        assert cone(k).dim == k.dim + 1


# -- subdivision ----------------------------------------------------------------


def test_subdivision_counts():
    edge = build_complex([Simplex((0, 1))])
    sd = barycentric_subdivision(edge)
    assert sd.complex.counts_by_dim() == (3, 2)
    tri = build_complex([Simplex((0, 1, 2))])
    sd = barycentric_subdivision(tri)
    assert sd.complex.counts_by_dim() == (7, 12, 6)


def test_subdivision_preserves_chi_and_dim():
    for k in ALL_CORPUS:
        sd = barycentric_subdivision(k)
        assert euler_characteristic(sd.complex) == euler_characteristic(k)
        assert sd.complex.dim == k.dim
        carried = {sd.carrier(s) for s in sd.complex.simplices}
        assert carried == set(k.simplices)   # carrier is onto


# -- simplicial maps --------------------------------------------------------------


def cycle(n, offset=0):
    return build_complex([Simplex(((i + offset), ((i + 1) % n + offset)))
                          for i in range(n)])


def test_validate_map_examples():
    th = corpus.theta()
    ident = SimplicialMap(th, th, {v: v for v in th.vertex_ids})
    assert validate_map(ident) == []

    c6, c3 = cycle(6), cycle(3)
    cover = SimplicialMap(c6, c3, {i: i % 3 for i in range(6)})
    assert validate_map(cover) == []

    # 0 and 3 are not adjacent in a hexagon
    bad = SimplicialMap(c6, c6, {i: (0 if i < 3 else 3) for i in range(6)})
    violations = validate_map(bad)
    assert violations and violations[0].kind == "non-simplex-image"
    assert violations[0].simplex in {Simplex((2, 3)), Simplex((5, 0))}
    with pytest.raises(ValueError):
        bad.check()


def test_validate_map_unmapped_and_missing_target():
    seg = build_complex([Simplex((0, 1))])
    pt = point_complex("p")
    partial = SimplicialMap(seg, pt, {0: pt.vertex_ids[0]})
    kinds = {v.kind for v in validate_map(partial)}
    assert kinds == {"unmapped-vertex"}
    stray = SimplicialMap(seg, pt, {0: pt.vertex_ids[0], 1: 999})
    kinds = {v.kind for v in validate_map(stray)}
    assert kinds == {"missing-target"}
