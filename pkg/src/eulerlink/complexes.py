"""Finite simplicial complexes with exact combinatorial operations.

A complex is stored as the full set of its simplices (not just facets) in a
canonical order: sorted by dimension, then lexicographically by vertex ids.
Vertex ids are non-negative integers and may be sparse; optional string
labels are carried alongside for I/O and reporting.

Constructions keep the first operand's vertex ids stable and move the second
operand (or any freshly invented vertices, e.g. cone apexes and boundary
spheres of geometric links) to ids above the current maximum.  That makes
decompositions such as "boundary part / link part of a join" recoverable
from the ids alone, which the function calculus relies on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class Simplex(tuple):
    """A simplex as a strictly increasing tuple of vertex ids."""

    __slots__ = ()

    def __new__(cls, vertices) -> "Simplex":
        vs = tuple(vertices)
        if not vs:
            raise ValueError("a simplex needs at least one vertex")
        for v in vs:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"vertex ids must be non-negative ints, got {v!r}")
        if len(set(vs)) != len(vs):
            raise ValueError(f"repeated vertex in simplex {vs}")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            vs = tuple(sorted(vs))
        return super().__new__(cls, vs)

    @property
    def dim(self) -> int:
        return len(self) - 1

    def boundary(self) -> tuple["Simplex", ...]:
        """Codimension-one faces (empty for a vertex)."""
        if len(self) == 1:
            return ()
        return tuple(Simplex(self[:i] + self[i + 1:]) for i in range(len(self)))

    def subfaces(self) -> tuple["Simplex", ...]:
        """All nonempty faces, this simplex included."""
        out = []
        for k in range(1, len(self) + 1):
            out.extend(Simplex(c) for c in itertools.combinations(self, k))
        return tuple(out)

    def union(self, other: "Simplex") -> "Simplex":
        return Simplex(sorted(set(self) | set(other)))

    def contains(self, other: "Simplex") -> bool:
        return set(other) <= set(self)


def _canonical_order(simplices) -> tuple[Simplex, ...]:
    return tuple(sorted(set(simplices), key=lambda s: (len(s), s)))


class SimplicialComplex:
    """A finite simplicial complex, downward closed by construction."""

    def __init__(self, simplices, labels: dict[int, str] | None = None,
                 name: str | None = None):
        self.simplices: tuple[Simplex, ...] = _canonical_order(
            Simplex(s) if not isinstance(s, Simplex) else s for s in simplices)
        self.name = name
        self._index = {s: i for i, s in enumerate(self.simplices)}
        self._labels = dict(labels) if labels else {}
        self._cofaces: tuple[tuple[int, ...], ...] | None = None

    # -- basic queries ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self):
        return iter(self.simplices)

    def __contains__(self, s) -> bool:
        return (s if isinstance(s, Simplex) else Simplex(s)) in self._index

    def index(self, s: Simplex) -> int:
        return self._index[s]

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 for the empty complex."""
        return self.simplices[-1].dim if self.simplices else -1

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices if len(s) == 1)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_ids)

    def label(self, v: int) -> str:
        return self._labels.get(v, str(v))

    @property
    def labels(self) -> dict[int, str]:
        return {v: self.label(v) for v in self.vertex_ids}

    def simplex_name(self, s: Simplex) -> str:
        return "(" + " ".join(self.label(v) for v in s) + ")"

    def max_vertex_id(self) -> int:
        return max(self.vertex_ids, default=-1)

    def facets(self) -> tuple[Simplex, ...]:
        """Maximal simplices, in canonical order."""
        sets = [frozenset(s) for s in self.simplices]
        out = []
        for i, s in enumerate(self.simplices):
            if not any(sets[i] < sets[j] for j in range(len(sets)) if j != i):
                out.append(s)
        return tuple(out)

    def is_downward_closed(self) -> bool:
        return all(f in self._index for s in self.simplices for f in s.subfaces())

    def counts_by_dim(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for s in self.simplices:
            counts[s.dim] += 1
        return tuple(counts)

    def cofaces(self, i: int) -> tuple[int, ...]:
        """Indices of all simplices strictly containing simplex ``i``."""
        if self._cofaces is None:
            sets = [frozenset(s) for s in self.simplices]
            table = [[] for _ in self.simplices]
            for j, big in enumerate(sets):
                if len(big) == 1:
                    continue
                for k, small in enumerate(sets):
                    if len(small) < len(big) and small < big:
                        table[k].append(j)
            self._cofaces = tuple(tuple(row) for row in table)
        return self._cofaces[i]

    def with_name(self, name: str) -> "SimplicialComplex":
        out = SimplicialComplex((), name=name)
        out.simplices = self.simplices
        out._index = self._index
        out._labels = self._labels
        out._cofaces = self._cofaces
        return out

    def __repr__(self) -> str:
        tag = self.name or "complex"
        return f"<{tag}: {self.n_vertices} vertices, dim {self.dim}>"


def build_complex(facets, labels: dict[int, str] | None = None,
                  name: str | None = None) -> SimplicialComplex:
    """Build the downward closure of the given generating simplices."""
    closure: set[Simplex] = set()
    for f in facets:
        closure.update(Simplex(f).subfaces())
    if not closure:
        raise ValueError("empty complex")
    return SimplicialComplex(closure, labels=labels, name=name)


def euler_characteristic(k: SimplicialComplex) -> int:
    """Alternating sum of face counts (0 for the empty complex)."""
    return sum(-1 if s.dim % 2 else 1 for s in k.simplices)


# -- links -----------------------------------------------------------------


def simplicial_link(k: SimplicialComplex, tau) -> SimplicialComplex:
    """The classical link: simplices disjoint from ``tau`` whose join with
    it lies in the complex.  Vertex ids are inherited from ``k``."""
    tau = tau if isinstance(tau, Simplex) else Simplex(tau)
    if tau not in k:
        raise ValueError(f"simplex {tuple(tau)} is not in the complex")
    tset = set(tau)
    out = []
    for s in k.simplices:
        if tset.isdisjoint(s) and s.union(tau) in k:
            out.append(s)
    return SimplicialComplex(out, labels=k._labels)


def vertex_link(k: SimplicialComplex, v: int) -> SimplicialComplex:
    return simplicial_link(k, Simplex((v,)))


def _fresh_labels(k: SimplicialComplex, wanted: list[str]) -> list[str]:
    used = set(k.labels.values())
    out = []
    for w in wanted:
        while w in used:
            w += "'"
        used.add(w)
        out.append(w)
    return out


def geometric_link(k: SimplicialComplex, tau) -> SimplicialComplex:
    """Boundary of a small neighborhood sphere around an interior point of
    ``tau``: the join of the boundary of a ``dim tau``-simplex (on fresh
    vertex ids above ``k``'s maximum) with the simplicial link of ``tau``.

    For a vertex this is the ordinary vertex link; for a maximal simplex of
    top dimension d it is the boundary sphere of a d-simplex.
    """
    tau = tau if isinstance(tau, Simplex) else Simplex(tau)
    lk = simplicial_link(k, tau)
    d = tau.dim
    if d == 0:
        return lk
    base = k.max_vertex_id() + 1
    bverts = tuple(range(base, base + d + 1))
    blabels = _fresh_labels(k, [f"b{i}" for i in range(d + 1)])
    bfaces = [Simplex(c) for r in range(1, d + 1)
              for c in itertools.combinations(bverts, r)]
    simplices = list(bfaces) + list(lk.simplices)
    simplices += [Simplex(tuple(b) + tuple(l)) for b in bfaces for l in lk.simplices]
    labels = {v: lk.label(v) for v in lk.vertex_ids}
    labels.update(dict(zip(bverts, blabels)))
    return SimplicialComplex(simplices, labels=labels)


# -- joins and friends ------------------------------------------------------


def relabeled(k: SimplicialComplex, offset: int) -> SimplicialComplex:
    """Shift a complex onto dense fresh ids ``offset, offset+1, ...``."""
    old = sorted(k.vertex_ids)
    ren = {v: offset + i for i, v in enumerate(old)}
    simplices = [Simplex(tuple(ren[v] for v in s)) for s in k.simplices]
    labels = {ren[v]: k.label(v) for v in old}
    return SimplicialComplex(simplices, labels=labels, name=k.name)


def join(k: SimplicialComplex, l: SimplicialComplex,
         name: str | None = None) -> SimplicialComplex:
    """Simplicial join.  Keeps ``k``'s ids; ``l`` moves to fresh ids."""
    l2 = relabeled(l, k.max_vertex_id() + 1)
    fixed = _fresh_labels(k, [l2.label(v) for v in l2.vertex_ids])
    labels = dict(k._labels)
    labels.update(dict(zip(l2.vertex_ids, fixed)))
    simplices = list(k.simplices) + list(l2.simplices)
    simplices += [Simplex(tuple(a) + tuple(b))
                  for a in k.simplices for b in l2.simplices]
    return SimplicialComplex(simplices, labels=labels, name=name)


def disjoint_union(k: SimplicialComplex, l: SimplicialComplex,
                   name: str | None = None) -> SimplicialComplex:
    l2 = relabeled(l, k.max_vertex_id() + 1)
    fixed = _fresh_labels(k, [l2.label(v) for v in l2.vertex_ids])
    labels = dict(k._labels)
    labels.update(dict(zip(l2.vertex_ids, fixed)))
    return SimplicialComplex(list(k.simplices) + list(l2.simplices),
                             labels=labels, name=name)


def point_complex(label: str = "pt", name: str | None = None) -> SimplicialComplex:
    return SimplicialComplex([Simplex((0,))], labels={0: label}, name=name)


def cone(k: SimplicialComplex, apex_label: str = "apex",
         name: str | None = None) -> SimplicialComplex:
    return join(k, point_complex(apex_label), name=name)


def suspension(k: SimplicialComplex, name: str | None = None) -> SimplicialComplex:
    poles = SimplicialComplex([Simplex((0,)), Simplex((1,))],
                              labels={0: "north", 1: "south"})
    return join(k, poles, name=name)


def full_subcomplex(k: SimplicialComplex, vertices,
                    name: str | None = None) -> SimplicialComplex:
    """All simplices of ``k`` spanned by the given vertex set (ids kept)."""
    vs = set(vertices)
    simplices = [s for s in k.simplices if set(s) <= vs]
    labels = {v: k.label(v) for v in vs if Simplex((v,)) in k}
    return SimplicialComplex(simplices, labels=labels, name=name)


# -- barycentric subdivision -------------------------------------------------


@dataclass(frozen=True)
class Subdivision:
    """First barycentric subdivision together with its carrier data.

    Vertex ``i`` of the subdivided complex is the barycenter of
    ``base.simplices[i]``; a simplex of the subdivision is a chain of
    base simplices ordered by strict inclusion, and its carrier is the
    largest element of that chain.
    """

    base: SimplicialComplex
    complex: SimplicialComplex
    vertex_simplex: dict[int, Simplex] = field(repr=False)

    def carrier(self, chain: Simplex) -> Simplex:
        return max((self.vertex_simplex[v] for v in chain), key=len)


def barycentric_subdivision(k: SimplicialComplex) -> Subdivision:
    """Order complex of the face poset of ``k``."""
    n = len(k.simplices)
    vertex_simplex = dict(enumerate(k.simplices))
    by_len: dict[int, list[int]] = {}
    for i, s in enumerate(k.simplices):
        by_len.setdefault(len(s), []).append(i)
    # Edges of the order complex: strict face relations.
    above: dict[int, list[int]] = {i: [] for i in range(n)}
    sets = [frozenset(s) for s in k.simplices]
    for i in range(n):
        for j in range(n):
            if len(sets[i]) < len(sets[j]) and sets[i] < sets[j]:
                above[i].append(j)
    chains: list[tuple[int, ...]] = []

    def grow(chain: tuple[int, ...]) -> None:
        chains.append(chain)
        for j in above[chain[-1]]:
            grow(chain + (j,))

    for i in range(n):
        grow((i,))
    labels = {}
    for i, s in enumerate(k.simplices):
        if len(s) == 1:
            labels[i] = k.label(s[0])
        else:
            labels[i] = "(" + " ".join(k.label(v) for v in s) + ")"
    sd = SimplicialComplex([Simplex(c) for c in chains], labels=labels,
                           name=f"sd({k.name})" if k.name else None)
    return Subdivision(base=k, complex=sd, vertex_simplex=vertex_simplex)


# -- simplicial maps ---------------------------------------------------------


@dataclass(frozen=True)
class MapViolation:
    """A reason a vertex assignment fails to be simplicial."""

    kind: str  # "unmapped-vertex" | "missing-target" | "non-simplex-image"
    simplex: Simplex
    detail: str


@dataclass(frozen=True)
class SimplicialMap:
    """A map of complexes given by its action on vertex ids."""

    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: dict[int, int]

    def image(self, s: Simplex) -> Simplex:
        return Simplex(sorted({self.vertex_map[v] for v in s}))

    def check(self) -> None:
        bad = validate_map(self)
        if bad:
            raise ValueError(f"not a simplicial map: {bad[0].detail}")


def validate_map(f: SimplicialMap) -> list[MapViolation]:
    """All the ways ``f`` fails to be simplicial (empty list if valid)."""
    out = []
    tverts = set(f.target.vertex_ids)
    for v in f.source.vertex_ids:
        if v not in f.vertex_map:
            out.append(MapViolation("unmapped-vertex", Simplex((v,)),
                                    f"vertex {f.source.label(v)} has no image"))
        elif f.vertex_map[v] not in tverts:
            out.append(MapViolation("missing-target", Simplex((v,)),
                                    f"vertex {f.source.label(v)} maps outside the target"))
    if out:
        return out
    for s in f.source.simplices:
        img = f.image(s)
        if img not in f.target:
            out.append(MapViolation(
                "non-simplex-image", s,
                f"image {f.target.simplex_name(img)} of {f.source.simplex_name(s)}"
                " is not a simplex of the target"))
    return out
