"""Builds the loopless coset graph of a group and a generating sequence.

Vertices are the right cosets of the cyclic subgroups <s_i>, one partition
class per sequence position; two cosets in distinct classes are joined by an
edge of multiplicity equal to the size of their intersection.  Degrees and
edge counts always count multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAGeneratingSetError
from .groups import Coset, GenSequence, GroupTable, make_gen_sequence, right_cosets
from .multigraph import Multigraph


@dataclass(frozen=True)
class PredictedStats:
    """Closed-form statistics implied by |G| and the generator orders."""

    class_vertex_counts: tuple[int, ...]
    class_degrees: tuple[int, ...]
    vertex_count: int
    edge_multiplicity_total: int


class GGraph:
    """A partitioned loopless multigraph built from right cosets.

    Vertex ids are dense, class-major, and within a class follow ascending
    canonical representative, so rebuilding from equal inputs reproduces the
    object exactly.  Instances are immutable.
    """

    __slots__ = (
        "k",
        "group_order",
        "gen_orders",
        "gen_labels",
        "partitions",
        "edges",
        "class_offsets",
        "vertex_count",
        "_class_of",
    )

    def __init__(
        self,
        k: int,
        group_order: int,
        gen_orders: tuple[int, ...],
        gen_labels: tuple[str, ...],
        partitions: tuple[tuple[Coset, ...], ...],
        edges: tuple[tuple[int, int, int], ...],
    ):
        self.k = k
        self.group_order = group_order
        self.gen_orders = gen_orders
        self.gen_labels = gen_labels
        self.partitions = partitions
        self.edges = edges
        offsets = [0]
        for part in partitions:
            offsets.append(offsets[-1] + len(part))
        self.class_offsets = tuple(offsets)
        self.vertex_count = offsets[-1]
        class_of = []
        for c, part in enumerate(partitions):
            class_of.extend([c] * len(part))
        self._class_of = tuple(class_of)

    def class_of(self, v: int) -> int:
        return self._class_of[v]

    def coset_of(self, v: int) -> Coset:
        c = self._class_of[v]
        return self.partitions[c][v - self.class_offsets[c]]

    def weighted_degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v, m in self.edges:
            deg[u] += m
            deg[v] += m
        return deg

    def natural_partition(self) -> list[list[int]]:
        return [
            list(range(self.class_offsets[c], self.class_offsets[c + 1]))
            for c in range(self.k)
        ]

    def to_multigraph(self) -> Multigraph:
        mg = Multigraph(self.vertex_count)
        for u, v, m in self.edges:
            mg.add_edge(u, v, m)
        mg.classes = self.natural_partition()
        return mg

    def __repr__(self) -> str:
        total = sum(m for _, _, m in self.edges)
        return (
            f"GGraph(k={self.k}, vertices={self.vertex_count}, "
            f"edge_multiplicity={total})"
        )


def predicted_stats(g: GroupTable, s: GenSequence) -> PredictedStats:
    """Per-class vertex counts |G|/o(s_i), degrees o(s_i)(k-1), and totals.

    Used as an independent oracle against the explicit construction.
    """
    k = len(s)
    counts = tuple(g.order // o for o in s.orders)
    degrees = tuple(o * (k - 1) for o in s.orders)
    return PredictedStats(
        class_vertex_counts=counts,
        class_degrees=degrees,
        vertex_count=sum(counts),
        edge_multiplicity_total=k * (k - 1) // 2 * g.order,
    )


def build_ggraph(g: GroupTable, s: GenSequence | list[int]) -> GGraph:
    """Construct the coset graph of (g, s).

    Accepts a validated GenSequence or raw element indices (validated here).
    Edge multiplicities are found by mapping every group element to its coset
    in each class: element x contributes one unit between coset_i(x) and
    coset_j(x) for every class pair i < j.
    """
    if not isinstance(s, GenSequence):
        s = make_gen_sequence(g, s)
    else:
        # fail fast if a stale sequence is replayed against another group
        if any(not 0 <= x < g.order for x in s.positions):
            raise NotAGeneratingSetError("sequence does not index this group")
    k = len(s)
    partitions = []
    coset_index_per_class = []
    for i, x in enumerate(s.positions):
        cosets = right_cosets(g, x, gen_position=i)
        partitions.append(tuple(cosets))
        where = [0] * g.order
        for local, coset in enumerate(cosets):
            for elem in coset.elements:
                where[elem] = local
        coset_index_per_class.append(where)

    offsets = [0]
    for part in partitions:
        offsets.append(offsets[-1] + len(part))

    mult: dict[tuple[int, int], int] = {}
    for i in range(k):
        where_i = coset_index_per_class[i]
        off_i = offsets[i]
        for j in range(i + 1, k):
            where_j = coset_index_per_class[j]
            off_j = offsets[j]
            for x in range(g.order):
                key = (off_i + where_i[x], off_j + where_j[x])
                mult[key] = mult.get(key, 0) + 1

    edges = tuple(sorted((u, v, m) for (u, v), m in mult.items()))
    return GGraph(
        k=k,
        group_order=g.order,
        gen_orders=s.orders,
        gen_labels=tuple(g.labels[x] for x in s.positions),
        partitions=tuple(partitions),
        edges=edges,
    )
