"""Graph serialization: JSON documents, edge-list text, and DOT export.

The JSON schema (version "1") covers three kinds of graph:

* ``ggraph``: partitions with generator labels/orders and coset labels,
* ``plain``: an arbitrary multigraph, optionally partitioned,
* ``ball``: a radius-bounded ball; vertices carry an ``interior`` flag.

Vertex ids are dense from 0 and every edge record has u < v.  Serialization
is canonical (sorted keys, fixed indentation), so equal documents produce
identical bytes.

Edge-list text format: one ``u v [multiplicity]`` line per edge, 0-based
vertex ids, ``#`` starts a comment.  Optional ``partition: id id ...`` header
lines declare one partition class each (all vertices or none must be
covered).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidInputError
from .ggraph import GGraph
from .infinite import BallGraph
from .multigraph import Multigraph

SCHEMA_VERSION = "1"

_DOT_PALETTE = (
    "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3", "#a6d854",
    "#ffd92f", "#e5c494", "#b3b3b3", "#7fc97f", "#beaed4",
)


@dataclass
class GraphDocument:
    kind: str  # "ggraph" | "plain" | "ball"
    partitions: list[dict]
    edges: list[dict]
    metadata: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "partitions": self.partitions,
            "edges": self.edges,
            "metadata": self.metadata,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GraphDocument":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise InvalidInputError(
                f"unsupported schema version {data.get('schema_version')!r}"
            )
        if data.get("kind") not in ("ggraph", "plain", "ball"):
            raise InvalidInputError(f"unknown document kind {data.get('kind')!r}")
        doc = cls(
            kind=data["kind"],
            partitions=data["partitions"],
            edges=data["edges"],
            metadata=data.get("metadata", {}),
        )
        doc._validate()
        return doc

    def _validate(self) -> None:
        ids = [v["id"] for part in self.partitions for v in part["vertices"]]
        if sorted(ids) != list(range(len(ids))):
            raise InvalidInputError("vertex ids must be dense from 0")
        for e in self.edges:
            if not (0 <= e["u"] < e["v"] < len(ids)):
                raise InvalidInputError(f"bad edge record {e}")
            if e["multiplicity"] < 1:
                raise InvalidInputError(f"bad multiplicity in {e}")

    def vertex_count(self) -> int:
        return sum(len(part["vertices"]) for part in self.partitions)

    def to_multigraph(self) -> Multigraph:
        mg = Multigraph(self.vertex_count())
        for e in self.edges:
            mg.add_edge(e["u"], e["v"], e["multiplicity"])
        if self.kind in ("ggraph", "ball") or len(self.partitions) > 1:
            mg.classes = [
                [v["id"] for v in part["vertices"]] for part in self.partitions
            ]
        return mg

    def total_multiplicity(self) -> int:
        return sum(e["multiplicity"] for e in self.edges)


def document_from_ggraph(
    gg: GGraph,
    element_labels: Optional[list[str]] = None,
    group_spec: Optional[str] = None,
) -> GraphDocument:
    """Serialize a coset graph; coset members are rendered through
    ``element_labels`` (typically the group's labels) when given."""

    def render(elem: int) -> str:
        return element_labels[elem] if element_labels else str(elem)

    partitions = []
    for c, cosets in enumerate(gg.partitions):
        vertices = []
        for local, coset in enumerate(cosets):
            vertices.append(
                {
                    "id": gg.class_offsets[c] + local,
                    "coset_labels": [render(e) for e in coset.elements],
                }
            )
        partitions.append(
            {
                "label": gg.gen_labels[c],
                "gen_order": gg.gen_orders[c],
                "vertices": vertices,
            }
        )
    edges = [{"u": u, "v": v, "multiplicity": m} for u, v, m in gg.edges]
    return GraphDocument(
        kind="ggraph",
        partitions=partitions,
        edges=edges,
        metadata={
            "group_spec": group_spec,
            "generators": list(gg.gen_labels),
            "group_order": gg.group_order,
        },
    )


def document_from_multigraph(mg: Multigraph) -> GraphDocument:
    if mg.classes:
        partitions = [
            {
                "label": None,
                "gen_order": None,
                "vertices": [{"id": v, "coset_labels": None} for v in cls],
            }
            for cls in mg.classes
        ]
    else:
        partitions = [
            {
                "label": None,
                "gen_order": None,
                "vertices": [
                    {"id": v, "coset_labels": None} for v in range(mg.n)
                ],
            }
        ]
    edges = [
        {"u": u, "v": v, "multiplicity": m}
        for (u, v), m in sorted(mg.edges.items())
    ]
    return GraphDocument(kind="plain", partitions=partitions, edges=edges)


def document_from_ball(ball: BallGraph) -> GraphDocument:
    by_class: dict[int, list[int]] = {0: [], 1: []}
    for i, vert in enumerate(ball.vertices):
        by_class[vert.class_id].append(i)
    partitions = []
    for class_id in (0, 1):
        vertices = []
        for i in by_class[class_id]:
            vert = ball.vertices[i]
            vertices.append(
                {
                    "id": i,
                    "coset_labels": [str(k) for k in vert.elements],
                    "interior": vert.interior,
                }
            )
        partitions.append(
            {"label": f"class{class_id}", "gen_order": None, "vertices": vertices}
        )
    edges = [{"u": u, "v": v, "multiplicity": m} for u, v, m in ball.edges]
    return GraphDocument(
        kind="ball",
        partitions=partitions,
        edges=edges,
        metadata={"group_spec": ball.kind, "radius": ball.radius},
    )


def dumps(doc: GraphDocument) -> str:
    return json.dumps(doc.to_dict(), sort_keys=True, indent=2) + "\n"


def loads(text: str) -> GraphDocument:
    return GraphDocument.from_dict(json.loads(text))


def write_document(doc: GraphDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def read_document(path) -> GraphDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


# ---------------------------------------------------------------------------
# edge-list text format
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Multigraph:
    edges: list[tuple[int, int, int]] = []
    classes: list[list[int]] = []
    max_vertex = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("partition:"):
            ids = [int(tok) for tok in line[len("partition:"):].split()]
            if not ids:
                raise InvalidInputError(f"line {lineno}: empty partition class")
            classes.append(ids)
            max_vertex = max(max_vertex, max(ids))
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise InvalidInputError(f"line {lineno}: expected 'u v [multiplicity]'")
        u, v = int(parts[0]), int(parts[1])
        m = int(parts[2]) if len(parts) == 3 else 1
        if u == v:
            raise InvalidInputError(f"line {lineno}: loops are not allowed")
        edges.append((u, v, m))
        max_vertex = max(max_vertex, u, v)
    mg = Multigraph(max_vertex + 1)
    for u, v, m in edges:
        mg.add_edge(u, v, m)
    if classes:
        covered = sorted(v for cls in classes for v in cls)
        if covered != list(range(mg.n)):
            raise InvalidInputError(
                "partition headers must cover every vertex exactly once"
            )
        mg.classes = classes
    return mg


def format_edge_list(mg: Multigraph) -> str:
    lines = []
    if mg.classes:
        for cls in mg.classes:
            lines.append("partition: " + " ".join(str(v) for v in cls))
    for (u, v), m in sorted(mg.edges.items()):
        lines.append(f"{u} {v}" if m == 1 else f"{u} {v} {m}")
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def to_dot(doc: GraphDocument) -> str:
    """Undirected DOT with one edge line per unit of multiplicity.

    Vertices are colored by partition class and labelled by their coset
    members when available.
    """
    lines = ["graph coset_graph {", "  node [style=filled];"]
    for c, part in enumerate(doc.partitions):
        color = _DOT_PALETTE[c % len(_DOT_PALETTE)]
        for vertex in part["vertices"]:
            labels = vertex.get("coset_labels")
            text = "{" + ",".join(labels) + "}" if labels else str(vertex["id"])
            text = text.replace('"', r"\"")
            lines.append(
                f'  v{vertex["id"]} [label="{text}", fillcolor="{color}"];'
            )
    for e in doc.edges:
        for _ in range(e["multiplicity"]):
            lines.append(f'  v{e["u"]} -- v{e["v"]};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(doc: GraphDocument, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_dot(doc))
