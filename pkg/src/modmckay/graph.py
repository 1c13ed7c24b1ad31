"""The certified subgraph over all p-restricted weights: enumeration,
BFS distances, diameter, and DOT/JSON/CSV export.

Vertices are listed in lexicographic order, so indices are deterministic.
Out-degrees are 1 (zero weight) or 2, and every edge obeys the potential
law f(head) <= f(tail) + 1.  The graph is immutable after construction;
per-source BFS runs may share it freely.
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .moves import Move, certified_moves
from .planner import PathPlan
from .weights import Weight, format_weight

DEFAULT_VERTEX_BUDGET = 10**6


class BudgetExceededError(RuntimeError):
    """The requested (n, p) state space exceeds the configured budget."""


def enumerate_p_restricted(
    n: int, p: int, budget: int = DEFAULT_VERTEX_BUDGET
) -> list[Weight]:
    """All p^(n-1) p-restricted weights in lexicographic order."""
    if n < 2 or p < 2:
        raise ValueError("need n >= 2 and p >= 2")
    count = p ** (n - 1)
    if count > budget:
        raise BudgetExceededError(
            f"{count} = {p}^{n - 1} vertices exceed the budget of {budget}"
        )
    return [w for w in product(range(p), repeat=n - 1)]


@dataclass
class CertifiedGraph:
    """Adjacency over all p-restricted weights; edges are certified moves."""

    n: int
    p: int
    vertices: tuple[Weight, ...]
    adjacency: tuple[tuple[tuple[Move, int], ...], ...]
    _index: dict[Weight, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if not self._index:
            self._index.update({w: i for i, w in enumerate(self.vertices)})

    def index_of(self, w: Weight) -> int:
        try:
            return self._index[w]
        except KeyError:
            raise ValueError(f"{w} is not a vertex of this graph") from None

    @property
    def edge_count(self) -> int:
        return sum(len(adj) for adj in self.adjacency)


def build_certified_graph(
    n: int, p: int, budget: int = DEFAULT_VERTEX_BUDGET
) -> CertifiedGraph:
    """Construct the certified subgraph for (n, p)."""
    vertices = tuple(enumerate_p_restricted(n, p, budget))
    index = {w: i for i, w in enumerate(vertices)}
    adjacency = tuple(
        tuple((move, index[target]) for move, target in certified_moves(w, p))
        for w in vertices
    )
    return CertifiedGraph(n=n, p=p, vertices=vertices, adjacency=adjacency)


def bfs_distances(g: CertifiedGraph, source: Weight) -> list[int | None]:
    """Exact directed distances from ``source`` to every vertex, aligned
    with g.vertices; None marks unreachable vertices (which does not occur
    for these graphs, but the caller should not have to trust that)."""
    dist: list[int | None] = [None] * len(g.vertices)
    start = g.index_of(source)
    dist[start] = 0
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for _, u in g.adjacency[v]:
            if dist[u] is None:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def all_pairs_distances(
    g: CertifiedGraph, parallel: bool = False
) -> list[list[int | None]]:
    """Per-source BFS over all vertices; row i is bfs_distances from
    vertex i.  The parallel path uses threads over sources and assembles
    rows by index, so output is identical either way."""
    if not parallel:
        return [bfs_distances(g, w) for w in g.vertices]
    with ThreadPoolExecutor() as pool:
        return list(pool.map(lambda w: bfs_distances(g, w), g.vertices))


def subgraph_diameter(
    g: CertifiedGraph, parallel: bool = False
) -> tuple[int, tuple[Weight, Weight]]:
    """Maximum finite distance over all ordered pairs, with the first
    attaining pair in (source index, target index) order.  Unreachable
    pairs would make the diameter infinite; that is reported as an error
    rather than skipped."""
    best = -1
    witness: tuple[Weight, Weight] | None = None
    for i, row in enumerate(all_pairs_distances(g, parallel=parallel)):
        for j, d in enumerate(row):
            if d is None:
                raise BudgetExceededError(
                    f"vertex {g.vertices[j]} unreachable from {g.vertices[i]}; "
                    "the certified subgraph should be strongly connected"
                )
            if d > best:
                best = d
                witness = (g.vertices[i], g.vertices[j])
    assert witness is not None
    return best, witness


def _dot(name: str, nodes: list[str], edges: list[tuple[str, str, str]]) -> str:
    lines = [f"digraph {name} {{"]
    lines += [f'  "{node}";' for node in nodes]
    lines += [f'  "{a}" -> "{b}" [label="{label}"];' for a, b, label in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: CertifiedGraph) -> str:
    """Deterministic DOT rendering with move-kind edge labels."""
    nodes = [format_weight(w) for w in g.vertices]
    edges = [
        (format_weight(w), format_weight(g.vertices[j]), str(move))
        for w, adj in zip(g.vertices, g.adjacency)
        for move, j in adj
    ]
    return _dot(f"certified_n{g.n}_p{g.p}", nodes, edges)


def plan_to_dot(plan: PathPlan) -> str:
    """A plan as a DOT path; an empty plan renders its single vertex."""
    nodes = []
    for w in plan.waypoints:  # repeated visits keep one node
        label = format_weight(w)
        if label not in nodes:
            nodes.append(label)
    edges = [
        (format_weight(a), format_weight(b), str(move))
        for a, move, b in zip(plan.waypoints, plan.moves, plan.waypoints[1:])
    ]
    return _dot(f"plan_n{plan.n}_p{plan.p}", nodes, edges)


def neighbors_to_dot(w: Weight, neighbors: set[tuple[str, Weight]]) -> str:
    """The out-star of a vertex, e.g. characteristic-0 neighbours with
    their a / b(i) / c labels."""
    center = format_weight(w)
    nodes = [center]
    edges = []
    for kind, nb in sorted(neighbors):
        label = format_weight(nb)
        if label not in nodes:
            nodes.append(label)
        edges.append((center, label, kind))
    return _dot("neighbors", nodes, edges)


def graph_to_json(g: CertifiedGraph) -> str:
    """Deterministic JSON rendering; graph_from_json inverts it."""
    payload = {
        "n": g.n,
        "p": g.p,
        "vertices": [list(w) for w in g.vertices],
        "edges": [
            {"from": i, "to": j, "move": move.to_json_dict()}
            for i, adj in enumerate(g.adjacency)
            for move, j in adj
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def graph_from_json(text: str) -> CertifiedGraph:
    """Rebuild a CertifiedGraph from its JSON rendering."""
    payload = json.loads(text)
    vertices = tuple(tuple(w) for w in payload["vertices"])
    adj: list[list[tuple[Move, int]]] = [[] for _ in vertices]
    for edge in payload["edges"]:
        adj[edge["from"]].append((Move.from_json_dict(edge["move"]), edge["to"]))
    return CertifiedGraph(
        n=payload["n"],
        p=payload["p"],
        vertices=vertices,
        adjacency=tuple(tuple(row) for row in adj),
    )


def distance_matrix_csv(g: CertifiedGraph, parallel: bool = False) -> str:
    """All-pairs distance matrix as CSV; header row holds weight labels,
    each following row is one source."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    labels = [format_weight(w) for w in g.vertices]
    writer.writerow(["source"] + labels)
    for w, row in zip(g.vertices, all_pairs_distances(g, parallel=parallel)):
        writer.writerow([format_weight(w)] + ["" if d is None else d for d in row])
    return buf.getvalue()
