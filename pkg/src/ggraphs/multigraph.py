"""Plain undirected multigraphs and generators for reference families."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional

from .errors import InvalidParameterError


class Multigraph:
    """Undirected multigraph on vertices ``0..n-1`` with integer multiplicities.

    ``classes`` optionally records a vertex partition (used when the graph
    came from a coset construction or an annotated edge list).
    """

    def __init__(self, n: int, classes: Optional[list[list[int]]] = None):
        if n < 0:
            raise InvalidParameterError("vertex count must be >= 0")
        self.n = n
        self.edges: dict[tuple[int, int], int] = {}
        self.classes = classes

    def add_edge(self, u: int, v: int, mult: int = 1) -> None:
        if u == v:
            raise InvalidParameterError("loops are not supported")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InvalidParameterError(f"edge ({u},{v}) out of range")
        if mult < 1:
            raise InvalidParameterError("multiplicity must be >= 1")
        key = (u, v) if u < v else (v, u)
        self.edges[key] = self.edges.get(key, 0) + mult

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self.edges.get(key, 0)

    def edge_multiplicity_total(self) -> int:
        return sum(self.edges.values())

    def distinct_edge_count(self) -> int:
        return len(self.edges)

    def weighted_degrees(self) -> list[int]:
        deg = [0] * self.n
        for (u, v), m in self.edges.items():
            deg[u] += m
            deg[v] += m
        return deg

    def neighbor_lists(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for (u, v), m in self.edges.items():
            out[u].append((v, m))
            out[v].append((u, m))
        for lst in out:
            lst.sort()
        return out

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.neighbor_lists()
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n

    def bipartition(self) -> Optional[tuple[list[int], list[int]]]:
        """Two-coloring by BFS, or None if an odd cycle exists.

        For a connected graph the split is unique up to swapping sides; the
        side containing vertex 0 comes first.
        """
        color = [-1] * self.n
        adj = self.neighbor_lists()
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v, _ in adj[u]:
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        return None
        side0 = [v for v in range(self.n) if color[v] == 0]
        side1 = [v for v in range(self.n) if color[v] == 1]
        return side0, side1

    def relabel(self, perm: list[int]) -> "Multigraph":
        """New graph with vertex v renamed perm[v]; classes are dropped."""
        out = Multigraph(self.n)
        for (u, v), m in self.edges.items():
            out.add_edge(perm[u], perm[v], m)
        return out

    def copy(self) -> "Multigraph":
        out = Multigraph(self.n, classes=[list(c) for c in self.classes] if self.classes else None)
        out.edges = dict(self.edges)
        return out

    def to_multigraph(self) -> "Multigraph":
        return self

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={self.edge_multiplicity_total()})"


def as_multigraph(obj) -> Multigraph:
    """Coerce a Multigraph or anything exposing to_multigraph()."""
    if isinstance(obj, Multigraph):
        return obj
    convert = getattr(obj, "to_multigraph", None)
    if convert is None:
        raise InvalidParameterError(f"cannot interpret {type(obj).__name__} as a graph")
    return convert()


# ---------------------------------------------------------------------------
# reference families
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Multigraph:
    g = Multigraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            g.add_edge(u, v)
    return g


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise InvalidParameterError("cycle needs >= 3 vertices")
    g = Multigraph(n)
    for u in range(n):
        g.add_edge(u, (u + 1) % n)
    return g


def path_graph(n: int) -> Multigraph:
    g = Multigraph(n)
    for u in range(n - 1):
        g.add_edge(u, u + 1)
    return g


def star_graph(leaves: int) -> Multigraph:
    g = Multigraph(leaves + 1)
    for v in range(1, leaves + 1):
        g.add_edge(0, v)
    return g


def complete_multipartite(sizes: Iterable[int], mult: int = 1) -> Multigraph:
    sizes = list(sizes)
    g = Multigraph(sum(sizes), classes=[])
    start = 0
    for size in sizes:
        g.classes.append(list(range(start, start + size)))
        start += size
    for i, ci in enumerate(g.classes):
        for cj in g.classes[i + 1:]:
            for u in ci:
                for v in cj:
                    g.add_edge(u, v, mult)
    return g


def complete_bipartite(m: int, n: int, mult: int = 1) -> Multigraph:
    return complete_multipartite([m, n], mult)


def turan_graph(n: int, r: int) -> Multigraph:
    """Complete r-partite graph on n vertices with near-equal class sizes.

    The (n mod r) larger classes of size ceil(n/r) come first.
    """
    if not 1 <= r <= n:
        raise InvalidParameterError("need 1 <= r <= n")
    big, small = -(-n // r), n // r
    sizes = [big] * (n % r) + [small] * (r - n % r)
    return complete_multipartite(sizes)


def octahedron_graph() -> Multigraph:
    return complete_multipartite([2, 2, 2])


def hypercube_graph(d: int) -> Multigraph:
    if d < 1:
        raise InvalidParameterError("dimension must be >= 1")
    g = Multigraph(1 << d)
    for u in range(1 << d):
        for bit in range(d):
            v = u ^ (1 << bit)
            if u < v:
                g.add_edge(u, v)
    return g


def cube_graph() -> Multigraph:
    return hypercube_graph(3)


def icosahedron_graph() -> Multigraph:
    """Icosahedron skeleton from exact coordinates over Z[phi].

    Vertices are the cyclic shifts of (0, +-1, +-phi); an edge joins points
    at the minimal squared distance 4 (computing in a+b*phi form keeps the
    comparison exact).
    """
    coords = []
    for shift in range(3):
        for s1 in (1, -1):
            for s2 in (1, -1):
                base = [(0, 0), (s1, 0), (0, s2)]  # (a, b) meaning a + b*phi
                coords.append(tuple(base[(i - shift) % 3] for i in range(3)))

    def dist2(p, q):
        # phi^2 = phi + 1, so (a + b*phi)^2 = a^2 + b^2 + (2ab + b^2) phi
        a_tot, b_tot = 0, 0
        for (pa, pb), (qa, qb) in zip(p, q):
            da, db = pa - qa, pb - qb
            a_tot += da * da + db * db
            b_tot += 2 * da * db + db * db
        return a_tot, b_tot

    g = Multigraph(12)
    for u in range(12):
        for v in range(u + 1, 12):
            if dist2(coords[u], coords[v]) == (4, 0):
                g.add_edge(u, v)
    return g


def dodecahedron_graph() -> Multigraph:
    """Dodecahedron skeleton as the generalized Petersen graph GP(10, 2)."""
    g = Multigraph(20)
    for i in range(10):
        g.add_edge(i, (i + 1) % 10)          # outer cycle
        g.add_edge(i, 10 + i)                # spokes
        g.add_edge(10 + i, 10 + (i + 2) % 10)  # inner pentagram pair
    return g


def rhombic_dodecahedron_graph() -> Multigraph:
    """Rhombic dodecahedron skeleton: cube corners joined to face centers.

    Vertices 0..7 are cube corners (degree 3), 8..13 the six face centers
    (degree 4); a corner meets the centers of the three faces it lies on.
    """
    g = Multigraph(14)
    faces = [(axis, val) for axis in range(3) for val in (0, 1)]
    for corner in range(8):
        bits = [(corner >> axis) & 1 for axis in range(3)]
        for f, (axis, val) in enumerate(faces):
            if bits[axis] == val:
                g.add_edge(corner, 8 + f)
    return g
