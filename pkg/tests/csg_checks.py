"""Structural checks for clique-separator graphs, shared by several test modules."""
from __future__ import annotations

from sga.chordal import CliqueSeparatorGraph


def _tree_path(adj, a, b):
    prev = {a: None}
    todo = [a]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                todo.append(y)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def violations(csg: CliqueSeparatorGraph) -> list[str]:
    out = []
    cl, sp = csg.clique_nodes, csg.separator_nodes
    for c, s in csg.cs_edges:
        if not sp[s] < cl[c] or any(sp[s] < t < cl[c] for t in sp):
            out.append(f"bad cs edge {c}-{s}")
    for a, b in csg.arcs:
        if not sp[a] < sp[b] or any(sp[a] < t < sp[b] for t in sp):
            out.append(f"bad arc {a}->{b}")
    covered = sorted(n for box in csg.boxes for n in box)
    if covered != sorted([("C", i) for i in range(len(cl))] + [("S", j) for j in range(len(sp))]):
        out.append("boxes do not partition the nodes")
    for i, box in enumerate(csg.boxes):
        adj = csg.box_adjacency(i)
        n_edges = sum(len(v) for v in adj.values()) // 2
        reach = {next(iter(box))}
        todo = list(reach)
        while todo:
            for y in adj[todo.pop()]:
                if y not in reach:
                    reach.add(y)
                    todo.append(y)
        if reach != set(box) or n_edges != len(box) - 1:
            out.append(f"box {i} is not a tree")
            continue
        nodes = sorted(box)
        for x in nodes:
            for y in nodes:
                if x < y:
                    meet = csg.node_set(x) & csg.node_set(y)
                    if any(not meet <= csg.node_set(z) for z in _tree_path(adj, x, y)[1:-1]):
                        out.append(f"box {i} lacks the clique intersection property")
        seps = [csg.node_set(n) for n in nodes if n[0] == "S"]
        if any(s < t for s in seps for t in seps):
            out.append(f"box {i} separators are not an antichain")
    # acyclic box graph
    arcs = csg.box_arcs()
    indeg = {i: 0 for i in range(len(csg.boxes))}
    for _, b in arcs:
        indeg[b] += 1
    ready = [i for i, d in indeg.items() if d == 0]
    seen = 0
    while ready:
        x = ready.pop()
        seen += 1
        for a, b in arcs:
            if a == x:
                indeg[b] -= 1
                if indeg[b] == 0:
                    ready.append(b)
    if seen != len(csg.boxes):
        out.append("box graph has a cycle")
    if not csg.sink_boxes:
        out.append("no sink box")
    for i in csg.sink_boxes:
        if any(a == i for a, _ in arcs):
            out.append(f"box {i} is not a sink")
        adj = csg.box_adjacency(i)
        if len(adj) > 1 and any(len(v) == 1 and n[0] == "S" for n, v in adj.items()):
            out.append(f"sink box {i} has a separator leaf")
    return out


def figure_sets(csg: CliqueSeparatorGraph):
    def lab(s):
        return "".join(str(v) for v in sorted(s))

    cliques = {lab(c) for c in csg.clique_nodes}
    seps = {lab(s) for s in csg.separator_nodes}
    edges = {(lab(csg.clique_nodes[c]), lab(csg.separator_nodes[s])) for c, s in csg.cs_edges}
    arcs = {(lab(csg.separator_nodes[a]), lab(csg.separator_nodes[b])) for a, b in csg.arcs}
    return cliques, seps, edges, arcs


FIGURE_CLIQUES = {"1258", "2358", "368", "478", "458", "89"}
FIGURE_SEPARATORS = {"258", "38", "48", "58", "8"}
FIGURE_ARCS = {("8", "48"), ("8", "58"), ("8", "38"), ("58", "258")}
FIGURE_EDGES = {
    ("1258", "258"), ("2358", "258"), ("2358", "38"), ("368", "38"),
    ("478", "48"), ("458", "48"), ("458", "58"), ("89", "8"),
}
