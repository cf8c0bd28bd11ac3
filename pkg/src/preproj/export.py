"""Serializers: DOT for exchange quivers and Hasse graphs, JSON for the
torsion poset and the fan, CSV for per-element summaries."""

from __future__ import annotations

import csv
import io
import json

import networkx as nx

from .context import Context
from .gfan import Fan, coordinates_2d
from .weyl import WeylElement, det


def _word(w: WeylElement) -> str:
    return " ".join(map(str, w.word)) or "e"


def _vec(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def _ordered(G: nx.DiGraph) -> list[WeylElement]:
    return sorted(G.nodes, key=lambda w: (w.length, w.word))


def _dot(G: nx.DiGraph, name: str, label) -> str:
    nodes = _ordered(G)
    pos = {w: k for k, w in enumerate(nodes)}
    ids = {w: f"n{k}" for w, k in pos.items()}
    lines = [f"digraph {name} {{"]
    for w in nodes:
        lines.append(f"  {ids[w]} [label={_quote(label(w, G.nodes[w]))}];")
    edges = sorted(G.edges, key=lambda e: (pos[e[0]], pos[e[1]]))
    for u, v in edges:
        lines.append(f"  {ids[u]} -> {ids[v]} [label=\"{G.edges[u, v]['vertex']}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def exchange_quiver_dot(G: nx.DiGraph, name: str = "exchange") -> str:
    """Nodes carry the reduced word, the dimension vector of I_w and the
    projector set; edges carry the mutated vertex."""
    def label(w, d):
        proj = "{" + ",".join(map(str, d["projectors"])) + "}"
        return f"{_word(w)}\\n{_vec(d['dims'])}\\nP={proj}"
    return _dot(G, name, label)


def hasse_dot(G: nx.DiGraph, name: str = "weak") -> str:
    """DOT for a weak-order Hasse graph from WeylGroup.hasse_weak."""
    return _dot(G, name, lambda w, d: _word(w))


def torsion_poset_json(ctx: Context, G: nx.DiGraph) -> dict:
    """Fac I_w for every w, ordered by inclusion; covers are the arrows of
    the exchange quiver (Fac I_u covers Fac I_v when u -> v)."""
    nodes = _ordered(G)
    idx = {w: k for k, w in enumerate(nodes)}
    return {
        "quiver": ctx.quiver.type_tag,
        "elements": [{"id": idx[w], "word": list(w.word), "dims": list(G.nodes[w]["dims"]),
                      "projectors": list(G.nodes[w]["projectors"])} for w in nodes],
        "covers": sorted([idx[u], idx[v], G.edges[u, v]["vertex"]] for u, v in G.edges),
        "top": idx[ctx.W.identity],
        "bottom": idx[ctx.W.longest_element()],
    }


def fan_json(fan: Fan) -> dict:
    cones = []
    for w, C in sorted(fan, key=lambda p: (p[0].length, p[0].word)):
        cones.append({"word": list(w.word),
                      "g_matrix": [list(r) for r in C.matrix],
                      "generators": [list(g) for g in C.generators],
                      "witness": list(C.witness)})
    return {"quiver": fan.ctx.quiver.type_tag, "rank": fan.ctx.n, "cones": cones}


def fan_csv(fan: Fan) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["word", "det", "length"])
    for w, C in sorted(fan, key=lambda p: (p[0].length, p[0].word)):
        out.writerow([_word(w), det(C.matrix), w.length])
    return buf.getvalue()


def fan_coordinates_csv(fan: Fan) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["word", "ray1_x", "ray1_y", "ray2_x", "ray2_y", "witness_x", "witness_y"])
    for row in coordinates_2d(fan):
        out.writerow([" ".join(map(str, row["word"])) or "e", *row["ray1"], *row["ray2"],
                      *row["witness"]])
    return buf.getvalue()


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
