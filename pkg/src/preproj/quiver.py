"""Dynkin quivers, their double quivers and adjacency data.

Vertices are labelled 1..n.  A quiver can be given by a type code such as
``"A3"`` or ``"E6"`` (with a fixed default orientation) or by an edge-list
document ``{"vertices": n, "arrows": [[s, t], ...]}``.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from typing import Any, Mapping

import networkx as nx

from .errors import MalformedSpecError, NonDynkinError


@dataclass(frozen=True)
class Arrow:
    id: str
    source: int
    target: int

    def reversed(self, new_id: str | None = None) -> "Arrow":
        return Arrow(new_id or self.id, self.target, self.source)


@dataclass(frozen=True)
class DynkinQuiver:
    n: int
    arrows: tuple[Arrow, ...]
    type_tag: str

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def underlying_graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from((a.source, a.target) for a in self.arrows)
        return G

    def to_edge_list(self) -> dict:
        return {"vertices": self.n, "arrows": [[a.source, a.target] for a in self.arrows]}

    def opposite(self) -> "DynkinQuiver":
        return DynkinQuiver(self.n, tuple(a.reversed() for a in self.arrows), self.type_tag)

    def __str__(self) -> str:
        arrows = ", ".join(f"{a.source}->{a.target}" for a in self.arrows)
        return f"{self.type_tag}: {arrows}"


@dataclass(frozen=True)
class DoubleQuiver:
    base: DynkinQuiver
    arrows: tuple[Arrow, ...]
    star: Mapping[str, str] = field(hash=False)

    def arrow(self, aid: str) -> Arrow:
        for a in self.arrows:
            if a.id == aid:
                return a
        raise KeyError(aid)


def star_id(aid: str) -> str:
    return aid[:-1] if aid.endswith("*") else aid + "*"


def _arrow_ids(count: int) -> list[str]:
    if count <= 26:
        return [chr(ord("a") + k) for k in range(count)]
    return [f"a{k + 1}" for k in range(count)]


def classify(n: int, edges: list[tuple[int, int]]) -> str:
    """Type tag of a simply laced Dynkin tree on vertices 1..n."""
    G = nx.Graph()
    G.add_nodes_from(range(1, n + 1))
    for s, t in edges:
        if s == t:
            raise NonDynkinError(f"loop at vertex {s}")
        if G.has_edge(s, t):
            raise NonDynkinError(f"multiple edges between {s} and {t}")
        G.add_edge(s, t)
    if n < 1 or not nx.is_tree(G):
        raise NonDynkinError("underlying graph is not a tree")
    branch = [v for v in G if G.degree(v) >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or G.degree(branch[0]) > 3:
        raise NonDynkinError("underlying graph is not a Dynkin diagram")
    c = branch[0]
    arms = []
    for nb in G.neighbors(c):
        H = G.copy()
        H.remove_node(c)
        arms.append(len(nx.node_connected_component(H, nb)))
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{n}"
    raise NonDynkinError(f"tree with arms {tuple(arms)} is not Dynkin")


def _default_edges(kind: str, n: int) -> list[tuple[int, int]]:
    if kind == "A":
        if n < 1:
            raise NonDynkinError("A_n needs n >= 1")
        return [(i, i + 1) for i in range(1, n)]
    if kind == "D":
        if n < 4:
            raise NonDynkinError("D_n needs n >= 4")
        edges = [(n - 1, n - 2), (n, n - 2)]
        edges += [(k + 1, k) for k in range(n - 3, 0, -1)]
        return edges
    if kind == "E":
        if n not in (6, 7, 8):
            raise NonDynkinError("E_n needs n in {6, 7, 8}")
        # Bourbaki labels, branch vertex 4, arrows pointing towards it
        edges = [(1, 3), (3, 4), (2, 4), (5, 4)]
        edges += [(k + 1, k) for k in range(5, n)]
        return edges
    raise NonDynkinError(f"unknown type {kind}{n}")


def from_edges(n: int, edges: list[tuple[int, int]]) -> DynkinQuiver:
    for s, t in edges:
        if not (1 <= s <= n and 1 <= t <= n):
            raise MalformedSpecError(f"arrow {s}->{t} uses a vertex outside 1..{n}")
    tag = classify(n, edges)
    ids = _arrow_ids(len(edges))
    return DynkinQuiver(n, tuple(Arrow(i, s, t) for i, (s, t) in zip(ids, edges)), tag)


_TYPE_CODE = re.compile(r"^\s*([ADEade])_?(\d+)\s*$")


def _from_document(doc: Any) -> DynkinQuiver:
    if not isinstance(doc, Mapping) or "vertices" not in doc or "arrows" not in doc:
        raise MalformedSpecError("edge list needs 'vertices' and 'arrows' keys")
    n = doc["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MalformedSpecError("'vertices' must be a positive integer")
    edges = []
    for a in doc["arrows"]:
        if (not isinstance(a, (list, tuple)) or len(a) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in a)):
            raise MalformedSpecError(f"bad arrow {a!r}")
        edges.append((a[0], a[1]))
    return from_edges(n, edges)


def parse_quiver(spec: str | Mapping) -> DynkinQuiver:
    """Build a validated Dynkin quiver from a type code, an edge-list
    document (dict or JSON text), or the path of a JSON file."""
    if isinstance(spec, Mapping):
        return _from_document(spec)
    if not isinstance(spec, str):
        raise MalformedSpecError(f"cannot read quiver from {type(spec).__name__}")
    m = _TYPE_CODE.match(spec)
    if m:
        kind, n = m.group(1).upper(), int(m.group(2))
        return from_edges(n, _default_edges(kind, n))
    text = spec
    if not spec.lstrip().startswith("{") and os.path.isfile(spec):
        with open(spec) as fh:
            text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSpecError(f"unreadable quiver spec {spec!r}") from exc
    return _from_document(doc)


def double_quiver(Q: DynkinQuiver) -> DoubleQuiver:
    arrows = list(Q.arrows) + [a.reversed(star_id(a.id)) for a in Q.arrows]
    star = {}
    for a in Q.arrows:
        star[a.id] = star_id(a.id)
        star[star_id(a.id)] = a.id
    return DoubleQuiver(Q, tuple(arrows), star)


def m_matrix(Q: DynkinQuiver) -> list[list[int]]:
    """Symmetric adjacency counts m_ij of the underlying graph."""
    M = [[0] * Q.n for _ in range(Q.n)]
    for a in Q.arrows:
        M[a.source - 1][a.target - 1] += 1
        M[a.target - 1][a.source - 1] += 1
    return M

