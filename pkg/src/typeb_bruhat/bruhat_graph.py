"""The Bruhat graph of ``W_n^(k)`` with DOT and JSON export.

Arrows run ``w' -> w`` whenever ``w`` covers ``w'``, i.e. upward in
length.  Many Hasse diagram tools draw the other way; DOT output sets
``rankdir=BT`` so the identity sits at the bottom.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .covering import CoverType, CoveringEdge, covered_by
from .errors import ContractError, ResourceGuardError
from .grassmannian import (
    dual,
    enumerate_grassmannian,
    is_palindromic,
    length_grass,
    longest_length,
)
from .maya import MayaDiagram, from_maya, to_maya

__all__ = [
    "DEFAULT_GRAPH_MAX_N",
    "EDGE_STYLES",
    "BruhatGraph",
    "build_graph",
    "rank_sizes",
    "export_dot",
    "export_json",
    "parse_json",
    "is_graded",
    "has_palindromic_ranks",
]

DEFAULT_GRAPH_MAX_N = 12

# dotted B1, dashed B2, thin B3, thick B4
EDGE_STYLES = {
    CoverType.B1: {"style": "dotted"},
    CoverType.B2: {"style": "dashed"},
    CoverType.B3: {"style": "solid", "penwidth": "1"},
    CoverType.B4: {"style": "solid", "penwidth": "2"},
}


@dataclass(frozen=True)
class BruhatGraph:
    n: int
    k: int
    nodes: tuple
    lengths: tuple
    edges: tuple

    def index(self) -> dict:
        return {g: i for i, g in enumerate(self.nodes)}

    def sources(self) -> list:
        has_in = {e.upper for e in self.edges}
        return [g for g in self.nodes if g not in has_in]

    def sinks(self) -> list:
        has_out = {e.lower for e in self.edges}
        return [g for g in self.nodes if g not in has_out]

    def edge_set(self) -> set:
        return {(e.lower, e.upper) for e in self.edges}


def _edge_key(idx):
    return lambda e: (e.ctype.value, idx[e.lower], idx[e.upper])


def build_graph(n: int, k: int, max_n: int = DEFAULT_GRAPH_MAX_N) -> BruhatGraph:
    if n > max_n:
        raise ResourceGuardError(f"n={n} exceeds the graph bound {max_n}")
    nodes = tuple(enumerate_grassmannian(n, k))
    lengths = tuple(length_grass(g) for g in nodes)
    idx = {g: i for i, g in enumerate(nodes)}
    edges = [e for g in nodes for e in covered_by(g)]
    edges.sort(key=_edge_key(idx))
    return BruhatGraph(n, k, nodes, lengths, tuple(edges))


def rank_sizes(gr: BruhatGraph) -> list:
    sizes = [0] * (longest_length(gr.n, gr.k) + 1)
    for ell in gr.lengths:
        sizes[ell] += 1
    return sizes


def _dot_attrs(attrs):
    return ", ".join(f'{key}="{val}"' for key, val in attrs.items())


def export_dot(gr: BruhatGraph, styles=None, duality=False) -> str:
    """DOT digraph with one same-rank subgraph per length.

    ``styles`` maps a :class:`CoverType` to extra edge attributes that
    override :data:`EDGE_STYLES`.  With ``duality`` each node is also
    joined to its dual by an undirected, non-constraining grey edge.
    """
    merged = {t: dict(a) for t, a in EDGE_STYLES.items()}
    for t, attrs in (styles or {}).items():
        merged[CoverType(t)].update(attrs)

    lines = [
        f'digraph "W_{gr.n}^({gr.k})" {{',
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for i, (g, ell) in enumerate(zip(gr.nodes, gr.lengths)):
        lines.append(
            f'  n{i} [label="{g.oneline}", length={ell}, maya="{to_maya(g).boxes}"];'
        )
    by_rank = {}
    for i, ell in enumerate(gr.lengths):
        by_rank.setdefault(ell, []).append(f"n{i}")
    for ell in sorted(by_rank):
        lines.append(f"  subgraph rank_{ell} {{ rank=same; {'; '.join(by_rank[ell])}; }}")
    idx = gr.index()
    for e in gr.edges:
        attrs = {"type": e.ctype.value, **merged[e.ctype]}
        lines.append(f"  n{idx[e.lower]} -> n{idx[e.upper]} [{_dot_attrs(attrs)}];")
    if duality:
        for i, g in enumerate(gr.nodes):
            j = idx[dual(g)]
            if i < j:
                lines.append(
                    f'  n{i} -> n{j} [dir="none", style="dashed", color="gray", '
                    f'constraint="false", duality="true"];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(gr: BruhatGraph) -> str:
    idx = gr.index()
    doc = {
        "n": gr.n,
        "k": gr.k,
        "nodes": [
            {"id": i, "oneline": g.oneline, "maya": to_maya(g).boxes, "length": ell}
            for i, (g, ell) in enumerate(zip(gr.nodes, gr.lengths))
        ],
        "edges": [
            {"lower_id": idx[e.lower], "upper_id": idx[e.upper], "type": e.ctype.value}
            for e in gr.edges
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> BruhatGraph:
    """Inverse of :func:`export_json`; nodes are rebuilt from their Maya strings."""
    doc = json.loads(text)
    nodes = tuple(from_maya(MayaDiagram(node["maya"])) for node in doc["nodes"])
    for node, g in zip(doc["nodes"], nodes):
        if g.oneline != node["oneline"] or (g.n, g.k) != (doc["n"], doc["k"]):
            raise ContractError(f"node {node['id']}: maya and oneline disagree")
    lengths = tuple(int(node["length"]) for node in doc["nodes"])
    edges = tuple(
        CoveringEdge(nodes[e["upper_id"]], nodes[e["lower_id"]], CoverType(e["type"]))
        for e in doc["edges"]
    )
    return BruhatGraph(doc["n"], doc["k"], nodes, lengths, edges)


def is_graded(gr: BruhatGraph) -> bool:
    idx = gr.index()
    return all(gr.lengths[idx[e.upper]] == gr.lengths[idx[e.lower]] + 1 for e in gr.edges)


def has_palindromic_ranks(gr: BruhatGraph) -> bool:
    return is_palindromic(rank_sizes(gr))

