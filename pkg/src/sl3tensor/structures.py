"""Facet-indexed structure data: composition factors of Weyl modules,
standard-filtration factors of tilting modules, and layered module diagrams.

The tables are shipped as literal JSON records (one per facet and kind) in
``data/structures.json`` and are never regenerated at runtime.  Layer lists
run top to bottom; edges join entries of adjacent layers and are stored as
``[layer_i, index_i, layer_i+1, index_j]``.

For the non-uniserial tilting modules in the two largest alcove families the
source diagrams show Loewy layers with only the standard-filtration edges
drawn; those edge lists are partial by nature and are used for rendering
only.  Layer multisets are the load-bearing data: the test suite re-derives
every tilting table from its diagram by expanding the filtration factors
through the Weyl-module tables.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Tuple

from .alcoves import ALL_FACETS, OUT

KINDS = ("delta", "tilting", "m")


@dataclass(frozen=True)
class AlperinDiagram:
    facet: str
    kind: str
    layers: Tuple[Tuple[str, ...], ...]
    edges: Tuple[Tuple[int, int, int, int], ...]

    def layer_multiset(self) -> Counter:
        return Counter(x for layer in self.layers for x in layer)


def _load() -> Tuple[Dict[str, List[str]], Dict[str, List[str]],
                     Dict[Tuple[str, str], AlperinDiagram]]:
    text = resources.files("sl3tensor").joinpath("data/structures.json").read_text()
    delta: Dict[str, List[str]] = {}
    tilting: Dict[str, List[str]] = {}
    diagrams: Dict[Tuple[str, str], AlperinDiagram] = {}
    for rec in json.loads(text):
        facet, kind = rec["facet"], rec["kind"]
        diagram = AlperinDiagram(
            facet=facet,
            kind=kind,
            layers=tuple(tuple(layer) for layer in rec["layers"]),
            edges=tuple(tuple(e) for e in rec["edges"]),
        )
        diagrams[(facet, kind)] = diagram
        if kind == "delta":
            delta[facet] = list(rec["factors"])
        elif kind == "tilting":
            tilting[facet] = list(rec["delta_factors"])
    for facet in ALL_FACETS:
        if facet not in delta or facet not in tilting:
            raise AssertionError(f"structure data missing facet {facet}")
    return delta, tilting, diagrams


_DELTA, _TILTING, _DIAGRAMS = _load()


def delta_factors(facet: str) -> List[str]:
    """Composition factors of the Weyl module at a facet, as facet labels."""
    if facet == OUT or facet not in _DELTA:
        raise ValueError(f"no composition data for facet {facet!r}")
    return list(_DELTA[facet])


def tilting_delta_factors(facet: str) -> List[str]:
    """Weyl-filtration factors of the tilting module at a facet."""
    if facet == OUT or facet not in _TILTING:
        raise ValueError(f"no tilting data for facet {facet!r}")
    return list(_TILTING[facet])


def diagram(facet: str, kind: str) -> AlperinDiagram:
    """Stored layered diagram; kind is 'delta', 'tilting' or 'm'."""
    if kind not in KINDS:
        raise ValueError(f"unknown diagram kind {kind!r}")
    key = (facet, kind)
    if key not in _DIAGRAMS:
        raise ValueError(f"no stored {kind} diagram for facet {facet!r}")
    return _DIAGRAMS[key]


def diagram_dot(d: AlperinDiagram, labeler=None, title: str | None = None) -> str:
    """Graphviz rendering of a layered diagram.

    ``labeler(facet_label) -> str or None`` relabels nodes; entries mapped to
    None are dropped together with their edges.
    """
    labeler = labeler or (lambda x: x)
    lines = [f'digraph "{title or d.kind + " " + d.facet}" {{']
    lines.append("  rankdir=TB;")
    lines.append("  node [shape=box];")
    lines.append("  edge [arrowhead=none];")
    kept = {}
    for i, layer in enumerate(d.layers):
        names = []
        for j, entry in enumerate(layer):
            text = labeler(entry)
            if text is None:
                continue
            name = f"n{i}_{j}"
            kept[(i, j)] = name
            lines.append(f'  {name} [label="{text}"];')
            names.append(name)
        if names:
            lines.append("  { rank=same; " + "; ".join(names) + "; }")
    for li, ii, lj, jj in d.edges:
        if (li, ii) in kept and (lj, jj) in kept:
            lines.append(f"  {kept[(li, ii)]} -> {kept[(lj, jj)]};")
    lines.append("}")
    return "\n".join(lines)
