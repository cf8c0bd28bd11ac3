import csv
import io
import json

import networkx as nx

from preproj import export
from preproj.gfan import chamber_fan
from preproj.tilting import exchange_quiver

from .conftest import context


def test_exchange_dot_a1():
    text = export.exchange_quiver_dot(exchange_quiver(context("A1")))
    assert text.startswith("digraph exchange {")
    assert 'n0 [label="e\\n(1)\\nP={}"];' in text
    assert 'n0 -> n1 [label="1"];' in text


def test_hasse_dot_a2():
    text = export.hasse_dot(context("A2").W.hasse_weak())
    nodes = [ln for ln in text.splitlines() if "[label=" in ln and "->" not in ln]
    edges = [ln for ln in text.splitlines() if "->" in ln]
    assert len(nodes) == 6 and len(edges) == 6


def test_dot_is_deterministic():
    G = exchange_quiver(context("A3"))
    H = nx.DiGraph()
    H.add_nodes_from(reversed(list(G.nodes(data=True))))
    H.add_edges_from(reversed(list(G.edges(data=True))))
    assert export.exchange_quiver_dot(G) == export.exchange_quiver_dot(H)


def test_torsion_poset_json():
    ctx = context("A2")
    d = export.torsion_poset_json(ctx, exchange_quiver(ctx))
    assert len(d["elements"]) == 6 and len(d["covers"]) == 6
    assert d["elements"][d["top"]]["word"] == []
    assert d["elements"][d["bottom"]]["dims"] == [0, 0]
    json.loads(export.dumps(d))


def test_fan_json_and_csv():
    fan = chamber_fan(context("A2"))
    d = export.fan_json(fan)
    assert d["rank"] == 2 and len(d["cones"]) == 6
    assert d["cones"][0]["g_matrix"] == [[1, 0], [0, 1]]
    rows = list(csv.DictReader(io.StringIO(export.fan_csv(fan))))
    assert [int(r["det"]) for r in rows] == [(-1) ** int(r["length"]) for r in rows]
    coords = list(csv.reader(io.StringIO(export.fan_coordinates_csv(fan))))
    assert coords[1] == ["e", "1", "0", "0", "1", "1", "1"]
