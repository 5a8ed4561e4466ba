"""Radius-bounded coset balls of two finitely generated infinite groups.

Both graphs are grown lazily by breadth-first search from the two cosets of
the identity.  Vertices at distance exactly the radius are kept but marked
as boundary (interior=False): a truncated ball cannot certify their degrees,
while interior vertices carry their full neighborhood.

The integer matrix groups and their generators:

* SL2(Z) generated by s1 = [[0,-1],[1,0]] (order 4) and x = s1*s2 =
  [[0,-1],[1,1]] (order 6).  Cross-class coset intersections always have
  size 0 or 2 because -I lies in both cyclic subgroups.
* The affine group {[[a,b],[0,1]] : a = +-1, b integer} generated by
  s0 = (-1, 0) and s2 = (-1, -1), both of order 2; intersections have size
  0 or 1 and the graph is a two-way infinite path.

Matrix entries are plain Python integers, so there is no overflow bound.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import InvalidParameterError, SizeLimitError
from .multigraph import Multigraph

INFINITE = math.inf

SL2Z_RADIUS_LIMIT = 12
AFFINE_RADIUS_LIMIT = 1000


@dataclass(frozen=True)
class Mat2Z:
    """2x2 integer matrix; SL2(Z) elements have determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __mul__(self, other: "Mat2Z") -> "Mat2Z":
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def key(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class AffElem:
    """Element (a, b) of the affine group, i.e. the matrix [[a,b],[0,1]]."""

    a: int
    b: int

    def __post_init__(self):
        if self.a not in (1, -1):
            raise InvalidParameterError("a must be +1 or -1")

    def __mul__(self, other: "AffElem") -> "AffElem":
        return AffElem(self.a * other.a, self.a * other.b + self.b)

    def key(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class BallVertex:
    class_id: int
    elements: tuple  # member keys, sorted; the first is the canonical key
    interior: bool
    distance: int

    @property
    def key(self):
        return self.elements[0]


class BallGraph:
    """A radius-r ball of an infinite coset graph."""

    def __init__(
        self,
        radius: int,
        vertices: list[BallVertex],
        edges: list[tuple[int, int, int]],
        centers: tuple[int, int],
        kind: str,
    ):
        self.radius = radius
        self.vertices = vertices
        self.edges = edges
        self.centers = centers
        self.kind = kind

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def weighted_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for u, v, m in self.edges:
            deg[u] += m
            deg[v] += m
        return deg

    def to_multigraph(self) -> Multigraph:
        mg = Multigraph(len(self.vertices))
        for u, v, m in self.edges:
            mg.add_edge(u, v, m)
        by_class: dict[int, list[int]] = {}
        for i, vert in enumerate(self.vertices):
            by_class.setdefault(vert.class_id, []).append(i)
        mg.classes = [by_class.get(c, []) for c in sorted(by_class)]
        return mg

    def __repr__(self) -> str:
        return (
            f"BallGraph({self.kind}, radius={self.radius}, "
            f"vertices={len(self.vertices)}, edges={len(self.edges)})"
        )


def _cyclic_subgroup(gen, identity):
    powers = [identity]
    acc = gen
    while acc != identity:
        powers.append(acc)
        acc = acc * gen
    return powers


def _grow_ball(radius: int, identity, generators, kind: str) -> BallGraph:
    """Generic coset-ball BFS for a two-generator group.

    A class-c coset through element g is {h * g : h in <s_c>}; neighbors of a
    coset are the opposite-class cosets through each of its members, with
    multiplicity the size of the member overlap.
    """
    subgroups = [_cyclic_subgroup(gen, identity) for gen in generators]

    def coset(class_id: int, through):
        members = sorted((h * through).key() for h in subgroups[class_id])
        return tuple(members)

    id_by_key: dict[tuple[int, tuple], int] = {}
    vertices: list[tuple[int, tuple, int]] = []  # (class, members, dist)
    queue = deque()
    for class_id in (0, 1):
        members = coset(class_id, identity)
        id_by_key[(class_id, members[0])] = len(vertices)
        vertices.append((class_id, members, 0))
        queue.append(len(vertices) - 1)

    elem_from_key = {}

    def remember(members_keys, raw_elements):
        for k, e in zip(members_keys, raw_elements):
            elem_from_key[k] = e

    # Seed the key->element map from the two identity cosets.
    for class_id in (0, 1):
        raws = sorted(
            (h * identity for h in subgroups[class_id]), key=lambda e: e.key()
        )
        remember([e.key() for e in raws], raws)

    edges: dict[tuple[int, int], int] = {}
    while queue:
        vid = queue.popleft()
        class_id, members, dist = vertices[vid]
        other = 1 - class_id
        neighbor_mult: dict[tuple, int] = {}
        for key in members:
            elem = elem_from_key[key]
            n_members_raw = sorted(
                (h * elem for h in subgroups[other]), key=lambda e: e.key()
            )
            n_keys = tuple(e.key() for e in n_members_raw)
            remember(n_keys, n_members_raw)
            neighbor_mult[n_keys] = neighbor_mult.get(n_keys, 0) + 1
        for n_keys in sorted(neighbor_mult):
            lookup = (other, n_keys[0])
            if lookup in id_by_key:
                nid = id_by_key[lookup]
            elif dist + 1 <= radius:
                nid = len(vertices)
                id_by_key[lookup] = nid
                vertices.append((other, n_keys, dist + 1))
                queue.append(nid)
            else:
                continue
            a, b = (vid, nid) if vid < nid else (nid, vid)
            edges[(a, b)] = neighbor_mult[n_keys]

    out_vertices = [
        BallVertex(
            class_id=class_id,
            elements=members,
            interior=dist < radius,
            distance=dist,
        )
        for class_id, members, dist in vertices
    ]
    edge_list = sorted((u, v, m) for (u, v), m in edges.items())
    return BallGraph(radius, out_vertices, edge_list, centers=(0, 1), kind=kind)


def sl2z_ball(radius: int) -> BallGraph:
    """Ball of the SL2(Z) coset graph for generators of order 4 and 6."""
    if not 0 <= radius <= SL2Z_RADIUS_LIMIT:
        raise SizeLimitError(f"radius must be in [0, {SL2Z_RADIUS_LIMIT}]")
    identity = Mat2Z(1, 0, 0, 1)
    s1 = Mat2Z(0, -1, 1, 0)
    x = Mat2Z(0, -1, 1, 1)
    return _grow_ball(radius, identity, (s1, x), kind="sl2z")


def affine_ball(radius: int) -> BallGraph:
    """Ball of the affine-group coset graph for the two order-2 generators."""
    if not 0 <= radius <= AFFINE_RADIUS_LIMIT:
        raise SizeLimitError(f"radius must be in [0, {AFFINE_RADIUS_LIMIT}]")
    identity = AffElem(1, 0)
    s0 = AffElem(-1, 0)
    s2 = AffElem(-1, -1)
    return _grow_ball(radius, identity, (s0, s2), kind="affine")


def is_locally_finite(gen_orders: Iterable[Union[int, float]]) -> bool:
    """True iff every generator order is finite.

    Orders are positive integers or INFINITE (math.inf); an empty sequence is
    vacuously locally finite.
    """
    for o in gen_orders:
        if o == INFINITE:
            return False
        if not (isinstance(o, int) and o >= 1):
            raise InvalidParameterError(f"not an order: {o!r}")
    return True
